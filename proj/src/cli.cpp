#include "tribell/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "tribell/errors.hpp"
#include "tribell/hybrid.hpp"
#include "tribell/optimize.hpp"
#include "tribell/sampler.hpp"
#include "tribell/scenarios.hpp"

namespace tribell::cli {

namespace {

constexpr double kPi = std::numbers::pi;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Human, Csv, Json };

const char* kOctetLabel[8] = {"E(ABC)",  "E(ABC')",  "E(AB'C)",  "E(AB'C')",
                              "E(A'BC)", "E(A'BC')", "E(A'B'C)", "E(A'B'C')"};

Format parse_format(const std::string& name) {
    if (name == "human") return Format::Human;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    throw UsageError("unknown output format '" + name + "' (expected human, csv or json)");
}

std::string default_format_name() {
    if (const char* env = std::getenv("TRIBELL_FORMAT")) return env;
    return "human";
}

nlohmann::json jnum(double v) { return nlohmann::json::parse(fmt9(v)); }

double parse_double(const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw UsageError("expected a number, got '" + text + "'");
    }
    if (used != text.size() || !std::isfinite(v))
        throw UsageError("expected a finite number, got '" + text + "'");
    return v;
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        while (!token.empty() && token.front() == ' ') token.erase(token.begin());
        while (!token.empty() && token.back() == ' ') token.pop_back();
        out.push_back(token);
    }
    return out;
}

// Angle token: either a pi-fraction literal ("pi", "-pi/2", "3pi/4",
// "0.75pi") which is always in radians, or a plain number interpreted in
// degrees unless the --radians flag is set.
double parse_angle_token(const std::string& token, bool radians) {
    const std::size_t pos = token.find("pi");
    if (pos == std::string::npos) {
        const double v = parse_double(token);
        return radians ? v : v * kPi / 180.0;
    }
    const std::string pre = token.substr(0, pos);
    const std::string post = token.substr(pos + 2);
    double coefficient = 1.0;
    if (pre == "-") coefficient = -1.0;
    else if (!pre.empty() && pre != "+") coefficient = parse_double(pre);
    double denominator = 1.0;
    if (!post.empty()) {
        if (post.front() != '/') throw UsageError("bad angle literal '" + token + "'");
        denominator = parse_double(post.substr(1));
        if (denominator == 0.0) throw UsageError("bad angle literal '" + token + "'");
    }
    return coefficient * kPi / denominator;
}

std::vector<double> parse_angle_list(const std::string& csv, bool radians) {
    std::vector<double> out;
    for (const std::string& token : split_commas(csv)) out.push_back(parse_angle_token(token, radians));
    return out;
}

TripartiteState parse_state(const std::string& spec) {
    if (spec == "ghz") return ghz();
    if (spec == "w") return w();
    const std::vector<std::string> tokens = split_commas(spec);
    if (tokens.size() != 16)
        throw UsageError("state must be 'ghz', 'w', or 16 comma-separated reals "
                         "(re,im per amplitude), got " + std::to_string(tokens.size()) +
                         " values");
    std::array<cdouble, 8> amplitudes{};
    for (int i = 0; i < 8; ++i)
        amplitudes[i] = cdouble(parse_double(tokens[2 * i]), parse_double(tokens[2 * i + 1]));
    try {
        return make_state(amplitudes);
    } catch (const ZeroVectorError& e) {
        throw UsageError(e.what());
    }
}

SettingsHextet settings_from_flags(const std::string& plane, const std::string& angles_csv,
                                   const std::string& prime_offset, bool radians) {
    const std::vector<double> angles = parse_angle_list(angles_csv, radians);
    if (plane == "full") {
        if (!prime_offset.empty()) throw UsageError("--prime-offset is only valid with a planar --plane");
        if (angles.size() != 12)
            throw UsageError("--plane full needs 12 angles (polar,azimuth per direction, "
                             "order A,B,C,A',B',C')");
        Parameterization param{ParamKind::Full};
        return param.settings(angles);
    }
    if (plane != "xy" && plane != "xz")
        throw UsageError("unknown plane '" + plane + "' (expected xy, xz or full)");
    auto dir = [&](double a) { return plane == "xy" ? xy(a) : xz(a); };
    if (!prime_offset.empty()) {
        if (angles.size() != 3)
            throw UsageError("--prime-offset needs exactly 3 angles (one per party)");
        const double offset = parse_angle_token(prime_offset, radians);
        return {dir(angles[0]), dir(angles[0] + offset), dir(angles[1]),
                dir(angles[1] + offset), dir(angles[2]), dir(angles[2] + offset)};
    }
    if (angles.size() != 6)
        throw UsageError("expected 6 angles (A,B,C,A',B',C') or 3 angles with --prime-offset");
    return {dir(angles[0]), dir(angles[3]), dir(angles[1]),
            dir(angles[4]), dir(angles[2]), dir(angles[5])};
}

std::vector<Bipartition> parse_bipartitions(const std::string& csv) {
    std::vector<Bipartition> out;
    for (const std::string& token : split_commas(csv)) {
        Bipartition bp;
        if (token == "12" || token == "12|3") bp = Bipartition::Pair12;
        else if (token == "13" || token == "13|2") bp = Bipartition::Pair13;
        else if (token == "23" || token == "23|1") bp = Bipartition::Pair23;
        else throw UsageError("unknown bipartition '" + token + "' (expected 12, 13 or 23)");
        bool duplicate = false;
        for (Bipartition seen : out) duplicate = duplicate || seen == bp;
        if (!duplicate) out.push_back(bp);
    }
    if (out.empty()) throw UsageError("at least one bipartition is required");
    return out;
}

const char* bipartition_label(Bipartition bp) {
    switch (bp) {
        case Bipartition::Pair12: return "12|3";
        case Bipartition::Pair13: return "13|2";
        default: return "23|1";
    }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* true_false(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------- eval ----

struct EvalFlags {
    std::string state;
    std::string plane = "xy";
    std::string angles;
    std::string prime_offset;
    bool radians = false;
    double tolerance = 1e-9;
    std::string format = default_format_name();
};

int do_eval(const EvalFlags& flags, std::ostream& out) {
    const Format format = parse_format(flags.format);
    const TripartiteState state = parse_state(flags.state);
    const SettingsHextet settings =
        settings_from_flags(flags.plane, flags.angles, flags.prime_offset, flags.radians);
    const CorrelationOctet octet = octet_from_settings(state, settings);
    const InequalityReport report = classify(octet);
    const HybridCertificate cert = membership(octet, all_bipartitions(), flags.tolerance);
    const char* verdict = cert.verdict == Verdict::Inside ? "Inside" : "Outside";

    switch (format) {
        case Format::Csv:
            out << "key,value\n";
            for (int i = 0; i < 8; ++i) out << kOctetLabel[i] << ',' << fmt9(octet[i]) << '\n';
            out << "M," << fmt9(report.m) << '\n';
            out << "M_PRIME," << fmt9(report.m_prime) << '\n';
            out << "S_V," << fmt9(report.s_v) << '\n';
            out << "violates_lhv," << true_false(report.violates_lhv) << '\n';
            out << "proves_tripartite_entanglement,"
                << true_false(report.proves_tripartite_entanglement) << '\n';
            out << "proves_tripartite_nonlocality,"
                << true_false(report.proves_tripartite_nonlocality) << '\n';
            out << "membership," << verdict << '\n';
            break;
        case Format::Json: {
            nlohmann::json j;
            for (int i = 0; i < 8; ++i) j["octet"].push_back(jnum(octet[i]));
            j["m"] = jnum(report.m);
            j["m_prime"] = jnum(report.m_prime);
            j["s_v"] = jnum(report.s_v);
            j["violates_lhv"] = report.violates_lhv;
            j["proves_tripartite_entanglement"] = report.proves_tripartite_entanglement;
            j["proves_tripartite_nonlocality"] = report.proves_tripartite_nonlocality;
            j["membership"] = verdict;
            out << j.dump(2) << '\n';
            break;
        }
        case Format::Human:
            for (int i = 0; i < 8; ++i)
                out << std::left << std::setw(10) << kOctetLabel[i] << ' ' << fmt9(octet[i])
                    << '\n';
            out << "M       = " << fmt9(report.m) << '\n';
            out << "M'      = " << fmt9(report.m_prime) << '\n';
            out << "S_V     = " << fmt9(report.s_v) << '\n';
            out << "violates LHV bound:              " << yes_no(report.violates_lhv) << '\n';
            out << "proves tripartite entanglement:  "
                << yes_no(report.proves_tripartite_entanglement) << '\n';
            out << "proves tripartite nonlocality:   "
                << yes_no(report.proves_tripartite_nonlocality) << '\n';
            out << "hybrid-model membership: " << verdict << '\n';
            break;
    }
    return 0;
}

// ---------------------------------------------------------- membership ----

struct MembershipFlags {
    std::string octet;
    std::string bipartitions = "12,13,23";
    double tolerance = 1e-9;
    std::string format = default_format_name();
};

int do_membership(const MembershipFlags& flags, std::ostream& out) {
    const Format format = parse_format(flags.format);
    const std::vector<std::string> tokens = split_commas(flags.octet);
    if (tokens.size() != 8) throw UsageError("--octet needs 8 comma-separated correlators");
    CorrelationOctet octet;
    for (int i = 0; i < 8; ++i) {
        octet[i] = parse_double(tokens[i]);
        if (std::abs(octet[i]) > 1.0 + 1e-12)
            throw UsageError("correlator out of range [-1, 1]: " + tokens[i]);
    }
    const std::vector<Bipartition> bipartitions = parse_bipartitions(flags.bipartitions);
    const std::vector<HybridVertex> vertices = enumerate_vertices(bipartitions);
    const HybridCertificate cert = membership(octet, bipartitions, flags.tolerance);
    const bool verified = verify_certificate(octet, cert, vertices, flags.tolerance);
    const bool inside = cert.verdict == Verdict::Inside;
    const char* verdict = inside ? "Inside" : "Outside";

    switch (format) {
        case Format::Csv:
            out << "key,value\n";
            out << "verdict," << verdict << '\n';
            out << "verified," << true_false(verified) << '\n';
            if (inside) {
                for (std::size_t i = 0; i < cert.weights.size(); ++i)
                    if (cert.weights[i] > 1e-12)
                        out << "weight[" << i << "]," << fmt9(cert.weights[i]) << '\n';
            } else {
                for (int i = 0; i < 8; ++i)
                    out << "separator[" << i << "]," << fmt9(cert.separator[i]) << '\n';
                out << "offset," << fmt9(cert.offset) << '\n';
            }
            break;
        case Format::Json: {
            nlohmann::json j;
            j["verdict"] = verdict;
            j["verified"] = verified;
            if (inside) {
                for (std::size_t i = 0; i < cert.weights.size(); ++i) {
                    if (cert.weights[i] > 1e-12) {
                        j["weights"].push_back({{"vertex", i},
                                                {"bipartition",
                                                 bipartition_label(vertices[i].bipartition)},
                                                {"weight", jnum(cert.weights[i])}});
                    }
                }
            } else {
                for (int i = 0; i < 8; ++i) j["separator"].push_back(jnum(cert.separator[i]));
                j["offset"] = jnum(cert.offset);
            }
            out << j.dump(2) << '\n';
            break;
        }
        case Format::Human:
            out << "verdict: " << verdict << (verified ? " (certificate verified)" : "") << '\n';
            if (inside) {
                out << "mixture of deterministic hybrid strategies:\n";
                for (std::size_t i = 0; i < cert.weights.size(); ++i) {
                    if (cert.weights[i] > 1e-12) {
                        out << "  vertex " << std::setw(3) << i << " ("
                            << bipartition_label(vertices[i].bipartition)
                            << ")  weight = " << fmt9(cert.weights[i]) << '\n';
                    }
                }
            } else {
                out << "separating functional h (h.octet > offset >= h.vertex):\n  h = [";
                for (int i = 0; i < 8; ++i) out << (i ? ", " : "") << fmt9(cert.separator[i]);
                out << "]\n  offset = " << fmt9(cert.offset) << '\n';
            }
            break;
    }
    return 0;
}

// ------------------------------------------------------------ vertices ----

int do_vertices(const std::string& bipartitions_csv, const std::string& format_name,
                std::ostream& out) {
    const Format format = parse_format(format_name);
    const std::vector<HybridVertex> vertices =
        enumerate_vertices(parse_bipartitions(bipartitions_csv));

    switch (format) {
        case Format::Csv:
            out << "index,bipartition";
            for (const char* label : kOctetLabel) out << ',' << label;
            out << '\n';
            for (std::size_t i = 0; i < vertices.size(); ++i) {
                out << i << ',' << bipartition_label(vertices[i].bipartition);
                for (int k = 0; k < 8; ++k) out << ',' << static_cast<int>(vertices[i].octet[k]);
                out << '\n';
            }
            break;
        case Format::Json: {
            nlohmann::json j = nlohmann::json::array();
            for (std::size_t i = 0; i < vertices.size(); ++i) {
                nlohmann::json entry;
                entry["index"] = i;
                entry["bipartition"] = bipartition_label(vertices[i].bipartition);
                for (int k = 0; k < 8; ++k)
                    entry["octet"].push_back(static_cast<int>(vertices[i].octet[k]));
                j.push_back(entry);
            }
            out << j.dump(2) << '\n';
            break;
        }
        case Format::Human:
            out << vertices.size() << " distinct hybrid strategy octets\n";
            for (std::size_t i = 0; i < vertices.size(); ++i) {
                out << std::setw(3) << i << "  " << bipartition_label(vertices[i].bipartition)
                    << "  [";
                for (int k = 0; k < 8; ++k)
                    out << (k ? " " : "") << (vertices[i].octet[k] > 0 ? "+1" : "-1");
                out << "]\n";
            }
            break;
    }
    return 0;
}

// ------------------------------------------------------------ optimize ----

struct OptimizeFlags {
    std::string state;
    std::string objective = "sv";
    std::string param = "xy";
    int restarts = 64;
    std::uint64_t seed = 0;
    std::string format = default_format_name();
};

int do_optimize(const OptimizeFlags& flags, std::ostream& out) {
    const Format format = parse_format(flags.format);
    const TripartiteState state = parse_state(flags.state);

    Objective objective;
    std::string objective_label;
    if (flags.objective == "m") { objective = Objective::AbsM; objective_label = "|M|"; }
    else if (flags.objective == "mprime") { objective = Objective::AbsMPrime; objective_label = "|M'|"; }
    else if (flags.objective == "sv") { objective = Objective::AbsSv; objective_label = "|S_V|"; }
    else throw UsageError("unknown objective '" + flags.objective + "' (expected m, mprime or sv)");

    Parameterization param;
    if (flags.param == "xy") param.kind = ParamKind::XyPlanar;
    else if (flags.param == "xz") param.kind = ParamKind::XzPlanar;
    else if (flags.param == "xz-symmetric") param.kind = ParamKind::XzSymmetric;
    else if (flags.param == "full") param.kind = ParamKind::Full;
    else throw UsageError("unknown parameterization '" + flags.param +
                          "' (expected xy, xz, xz-symmetric or full)");
    if (flags.restarts < 1) throw UsageError("--restarts must be >= 1");

    const OptimizationResult result = optimize(state, objective, param, flags.restarts, flags.seed);
    std::vector<double> degrees;
    for (double a : result.best_angles) degrees.push_back(a * 180.0 / kPi);

    switch (format) {
        case Format::Csv: {
            out << "key,value\n";
            out << "objective," << objective_label << '\n';
            out << "best_value," << fmt9(result.best_value) << '\n';
            for (std::size_t i = 0; i < degrees.size(); ++i)
                out << "angle_deg[" << i << "]," << fmt9(degrees[i]) << '\n';
            out << "m," << fmt9(result.report.m) << '\n';
            out << "m_prime," << fmt9(result.report.m_prime) << '\n';
            out << "s_v," << fmt9(result.report.s_v) << '\n';
            out << "restarts," << result.restarts_used << '\n';
            out << "converged," << true_false(result.converged) << '\n';
            break;
        }
        case Format::Json: {
            nlohmann::json j;
            j["objective"] = objective_label;
            j["best_value"] = jnum(result.best_value);
            for (double a : degrees) j["angles_deg"].push_back(jnum(a));
            j["m"] = jnum(result.report.m);
            j["m_prime"] = jnum(result.report.m_prime);
            j["s_v"] = jnum(result.report.s_v);
            j["restarts"] = result.restarts_used;
            j["converged"] = result.converged;
            out << j.dump(2) << '\n';
            break;
        }
        case Format::Human:
            out << "max " << objective_label << " = " << fmt9(result.best_value) << "  ("
                << result.restarts_used << " restarts, "
                << (result.converged ? "converged" : "not converged") << ")\n";
            out << "angles (deg):";
            for (double a : degrees) out << ' ' << fmt9(a);
            out << '\n';
            out << "M = " << fmt9(result.report.m) << "   M' = " << fmt9(result.report.m_prime)
                << "   S_V = " << fmt9(result.report.s_v) << '\n';
            break;
    }
    return 0;
}

// -------------------------------------------------------------- sample ----

struct SampleFlags {
    std::string state;
    std::string plane = "xy";
    std::string angles;
    std::string prime_offset;
    bool radians = false;
    long long shots = 1000;
    std::uint64_t seed = 0;
    std::string format = default_format_name();
};

int do_sample(const SampleFlags& flags, std::ostream& out) {
    const Format format = parse_format(flags.format);
    const TripartiteState state = parse_state(flags.state);
    const SettingsHextet settings =
        settings_from_flags(flags.plane, flags.angles, flags.prime_offset, flags.radians);
    if (flags.shots < 1) throw UsageError("--shots must be >= 1");

    const std::array<ShotEstimate, 8> estimates = sample_octet(state, settings, flags.shots, flags.seed);
    const CorrelationOctet means = estimated_octet(estimates);
    const double m = mermin_m(means);
    const double m_prime = mermin_m_prime(means);
    const double s_v = svetlichny(means);

    switch (format) {
        case Format::Csv:
            out << "setting,mean,std_error,shots,seed\n";
            for (int i = 0; i < 8; ++i)
                out << kOctetLabel[i] << ',' << fmt9(estimates[i].mean) << ','
                    << fmt9(estimates[i].std_error) << ',' << estimates[i].shots << ','
                    << estimates[i].seed << '\n';
            out << "M," << fmt9(m) << ",,,\n";
            out << "M_PRIME," << fmt9(m_prime) << ",,,\n";
            out << "S_V," << fmt9(s_v) << ",,,\n";
            break;
        case Format::Json: {
            nlohmann::json j;
            for (int i = 0; i < 8; ++i) {
                j["estimates"].push_back({{"setting", kOctetLabel[i]},
                                          {"mean", jnum(estimates[i].mean)},
                                          {"std_error", jnum(estimates[i].std_error)},
                                          {"shots", estimates[i].shots},
                                          {"seed", estimates[i].seed}});
            }
            j["m"] = jnum(m);
            j["m_prime"] = jnum(m_prime);
            j["s_v"] = jnum(s_v);
            out << j.dump(2) << '\n';
            break;
        }
        case Format::Human:
            out << "setting    mean          std_error     shots\n";
            for (int i = 0; i < 8; ++i)
                out << std::left << std::setw(10) << kOctetLabel[i] << ' ' << std::setw(13)
                    << fmt9(estimates[i].mean) << ' ' << std::setw(13)
                    << fmt9(estimates[i].std_error) << ' ' << estimates[i].shots << '\n';
            out << "estimated M = " << fmt9(m) << "   M' = " << fmt9(m_prime)
                << "   S_V = " << fmt9(s_v) << '\n';
            break;
    }
    return 0;
}

// ----------------------------------------------------------- reproduce ----

struct ReproRow {
    std::string id;
    std::string quantity;
    double computed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

std::vector<ReproRow> reproduce_rows(std::optional<double> tolerance_override) {
    std::vector<ReproRow> rows;
    for (const Scenario& scenario : all_scenarios()) {
        for (const ScenarioCell& cell : scenario.cells) {
            ReproRow row;
            row.id = scenario.id;
            row.quantity = cell.quantity;
            row.computed = scenario_value(scenario, cell.quantity);
            row.expected = cell.expected;
            row.tolerance = tolerance_override.value_or(cell.tolerance);
            row.pass = std::abs(row.computed - row.expected) <= row.tolerance;
            rows.push_back(row);
        }
        if (scenario.run_optimizer) {
            const TripartiteState state = scenario.w_state ? w() : ghz();
            const OptimizationResult result =
                optimize(state, scenario.opt_objective, {scenario.opt_param});
            ReproRow row;
            row.id = scenario.id;
            row.quantity = scenario.opt_objective == Objective::AbsMPrime ? "MAX_M_PRIME"
                                                                          : "MAX_S_V";
            row.computed = result.best_value;
            row.expected = scenario.opt_expected;
            row.tolerance = tolerance_override.value_or(scenario.opt_tolerance);
            row.pass = std::abs(row.computed - row.expected) <= row.tolerance;
            rows.push_back(row);
        }
    }
    return rows;
}

int do_reproduce(const std::string& format_name, std::optional<double> tolerance_override,
                 std::ostream& out) {
    const Format format = parse_format(format_name);
    const std::vector<ReproRow> rows = reproduce_rows(tolerance_override);
    int failures = 0;
    for (const ReproRow& row : rows) failures += row.pass ? 0 : 1;

    switch (format) {
        case Format::Csv:
            out << "id,quantity,computed,expected,pass\n";
            for (const ReproRow& row : rows)
                out << row.id << ',' << row.quantity << ',' << fmt9(row.computed) << ','
                    << fmt9(row.expected) << ',' << true_false(row.pass) << '\n';
            break;
        case Format::Json: {
            nlohmann::json j;
            j["cells"] = nlohmann::json::array();
            for (const ReproRow& row : rows) {
                j["cells"].push_back({{"id", row.id},
                                      {"quantity", row.quantity},
                                      {"computed", jnum(row.computed)},
                                      {"expected", jnum(row.expected)},
                                      {"tolerance", jnum(row.tolerance)},
                                      {"pass", row.pass}});
            }
            j["all_pass"] = failures == 0;
            out << j.dump(2) << '\n';
            break;
        }
        case Format::Human: {
            out << std::left << std::setw(4) << "id" << std::setw(13) << "quantity"
                << std::setw(16) << "computed" << std::setw(16) << "expected" << std::setw(10)
                << "tolerance" << "pass\n";
            for (const ReproRow& row : rows) {
                std::ostringstream tol;
                tol << row.tolerance;
                out << std::left << std::setw(4) << row.id << std::setw(13) << row.quantity
                    << std::setw(16) << fmt9(row.computed) << std::setw(16) << fmt9(row.expected)
                    << std::setw(10) << tol.str() << (row.pass ? "yes" : "NO") << '\n';
            }
            if (failures == 0) {
                out << "reproduce: PASS (" << rows.size() << "/" << rows.size() << " cells)\n";
            } else {
                out << "reproduce: FAIL (" << failures << " failing cell"
                    << (failures == 1 ? "" : "s") << " of " << rows.size() << "):";
                for (const ReproRow& row : rows)
                    if (!row.pass) out << ' ' << row.id << '/' << row.quantity;
                out << '\n';
            }
            break;
        }
    }
    return failures == 0 ? 0 : 1;
}

} // namespace

std::string fmt9(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.9g", value);
    return buffer;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"three-qubit correlations, Mermin/Svetlichny inequalities and "
                 "hybrid-model membership"};
    app.name("tribell");
    app.require_subcommand(1);

    EvalFlags eval_flags;
    CLI::App* eval_cmd = app.add_subcommand(
        "eval", "evaluate the correlation octet, M, M', S_V and hybrid membership");
    eval_cmd->add_option("--state", eval_flags.state, "ghz, w, or 16 reals (re,im per amplitude)")
        ->required();
    eval_cmd->add_option("--plane", eval_flags.plane, "xy, xz or full (default xy)");
    eval_cmd->add_option("--angles", eval_flags.angles,
                         "3 angles (with --prime-offset), 6 planar angles, or 12 full angles")
        ->required();
    eval_cmd->add_option("--prime-offset", eval_flags.prime_offset,
                         "offset added to each angle for the primed settings");
    eval_cmd->add_flag("--radians", eval_flags.radians, "angles are radians (default degrees)");
    eval_cmd->add_option("--tolerance", eval_flags.tolerance, "membership tolerance");
    eval_cmd->add_option("--format", eval_flags.format, "human, csv or json");

    MembershipFlags membership_flags;
    CLI::App* membership_cmd = app.add_subcommand(
        "membership", "decide hybrid-model membership of a correlation octet");
    membership_cmd->add_option("--octet", membership_flags.octet, "8 correlators, canonical order")
        ->required();
    membership_cmd->add_option("--bipartitions", membership_flags.bipartitions,
                               "subset of 12,13,23 (default all)");
    membership_cmd->add_option("--tolerance", membership_flags.tolerance, "decision tolerance");
    membership_cmd->add_option("--format", membership_flags.format, "human, csv or json");

    std::string vertices_bipartitions = "12,13,23";
    std::string vertices_format = default_format_name();
    CLI::App* vertices_cmd =
        app.add_subcommand("vertices", "dump the deterministic hybrid strategy octets");
    vertices_cmd->add_option("--bipartitions", vertices_bipartitions,
                             "subset of 12,13,23 (default all)");
    vertices_cmd->add_option("--format", vertices_format, "human, csv or json");

    OptimizeFlags optimize_flags;
    CLI::App* optimize_cmd =
        app.add_subcommand("optimize", "maximize |M|, |M'| or |S_V| over measurement angles");
    optimize_cmd->add_option("--state", optimize_flags.state, "ghz, w, or 16 reals")->required();
    optimize_cmd->add_option("--objective", optimize_flags.objective, "m, mprime or sv");
    optimize_cmd->add_option("--param", optimize_flags.param,
                             "xy, xz, xz-symmetric or full (default xy)");
    optimize_cmd->add_option("--restarts", optimize_flags.restarts, "random restarts (default 64)");
    optimize_cmd->add_option("--seed", optimize_flags.seed, "random seed (default 0)");
    optimize_cmd->add_option("--format", optimize_flags.format, "human, csv or json");

    SampleFlags sample_flags;
    CLI::App* sample_cmd =
        app.add_subcommand("sample", "finite-shot Monte Carlo estimate of the octet");
    sample_cmd->add_option("--state", sample_flags.state, "ghz, w, or 16 reals")->required();
    sample_cmd->add_option("--plane", sample_flags.plane, "xy, xz or full (default xy)");
    sample_cmd->add_option("--angles", sample_flags.angles, "angles, as in eval")->required();
    sample_cmd->add_option("--prime-offset", sample_flags.prime_offset,
                           "offset added for primed settings");
    sample_cmd->add_flag("--radians", sample_flags.radians, "angles are radians");
    sample_cmd->add_option("--shots", sample_flags.shots, "shots per setting (default 1000)");
    sample_cmd->add_option("--seed", sample_flags.seed, "random seed (default 0)");
    sample_cmd->add_option("--format", sample_flags.format, "human, csv or json");

    std::string reproduce_format = default_format_name();
    double reproduce_tolerance = -1.0;
    CLI::App* reproduce_cmd = app.add_subcommand(
        "reproduce", "recompute the published scenario table S1..S8 and check every cell");
    reproduce_cmd->add_option("--tolerance", reproduce_tolerance,
                              "override every per-cell tolerance");
    reproduce_cmd->add_option("--format", reproduce_format, "human, csv or json");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (eval_cmd->parsed()) return do_eval(eval_flags, out);
        if (membership_cmd->parsed()) return do_membership(membership_flags, out);
        if (vertices_cmd->parsed()) return do_vertices(vertices_bipartitions, vertices_format, out);
        if (optimize_cmd->parsed()) return do_optimize(optimize_flags, out);
        if (sample_cmd->parsed()) return do_sample(sample_flags, out);
        if (reproduce_cmd->parsed()) {
            std::optional<double> override;
            if (reproduce_tolerance >= 0.0) override = reproduce_tolerance;
            return do_reproduce(reproduce_format, override, out);
        }
        err << "error: no subcommand given\n";
        return 2;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const NumericalFailureError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

} // namespace tribell::cli
