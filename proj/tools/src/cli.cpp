#include "cli.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "kirchcert/graph.hpp"
#include "kirchcert/hessian.hpp"
#include "kirchcert/lefschetz.hpp"
#include "kirchcert/matroid.hpp"
#include "kirchcert/polynomial.hpp"
#include "kirchcert/polynomial_matrix.hpp"
#include "kirchcert/rational.hpp"
#include "kirchcert/report.hpp"
#include "kirchcert/sweeps.hpp"

namespace kirchcert::cli {

namespace {

using nlohmann::json;

bool valid_rational_token(const std::string& token) {
    std::size_t i = 0;
    if (i < token.size() && token[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) {
        ++i;
        ++digits;
    }
    if (digits == 0) return false;
    if (i == token.size()) return true;
    if (token[i] != '/') return false;
    ++i;
    digits = 0;
    while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) {
        ++i;
        ++digits;
    }
    return digits > 0 && i == token.size();
}

// Collects per-command results and renders them once at the end, so the JSON
// document is always assembled the same way (hence byte-identical for
// identical configurations).
class Reporter {
  public:
    Reporter(const RunConfig& config) : config_(config) {
        params_ = json::object();
        if (config.graph_name) params_["graph"] = *config.graph_name;
        if (config.file_path) params_["file"] = *config.file_path;
        if (config.poly_text) params_["poly"] = *config.poly_text;
        if (config.point_text) params_["point"] = *config.point_text;
        if (config.s_text) params_["s"] = *config.s_text;
        if (config.r) params_["r"] = *config.r;
        if (config.mode) params_["mode"] = *config.mode;
        if (config.command == "sweep") {
            params_["sweep"] = config.sweep_name;
            params_["max_vertices"] = config.max_vertices;
            params_["points_per_graph"] = config.points_per_graph;
        }
    }

    void add_result(json result, const std::string& text_block, bool positive) {
        results_.push_back(std::move(result));
        text_blocks_.push_back(text_block);
        all_positive_ = all_positive_ && positive;
    }

    int emit(std::ostream& out) const {
        if (config_.format == OutputFormat::Json) {
            json document;
            document["schema"] = 1;
            document["command"] = config_.command;
            document["params"] = params_;
            document["seed"] = config_.seed;
            document["trials"] = config_.trials;
            document["results"] = results_;
            document["verdict"] = all_positive_;
            out << document.dump(2) << "\n";
        } else {
            out << "command: " << config_.command << "\n";
            out << "seed: " << config_.seed << "  trials: " << config_.trials << "\n";
            for (const std::string& block : text_blocks_) {
                out << block;
            }
            out << "verdict: " << (all_positive_ ? "pass" : "FAIL") << "\n";
        }
        return all_positive_ ? 0 : 1;
    }

  private:
    const RunConfig& config_;
    json params_;
    std::vector<json> results_;
    std::vector<std::string> text_blocks_;
    bool all_positive_ = true;
};

json inertia_json(const Inertia& inertia) {
    return json::array({inertia.n_plus, inertia.n_minus, inertia.n_zero});
}

json rational_vector_json(const std::vector<Rational>& values) {
    json arr = json::array();
    for (const Rational& v : values) arr.push_back(v.str());
    return arr;
}

json slp_json(const SLPReport& report) {
    json j;
    j["f_value"] = report.f_value.str();
    j["det_sign"] = report.hessian_det_sign;
    j["slp"] = report.slp_holds;
    j["inertia"] = inertia_json(report.hr_inertia);
    j["hr"] = report.hr_relation_holds;
    j["kernel_dim"] = report.kernel_dim;
    return j;
}

std::string slp_text(const SLPReport& report) {
    std::ostringstream out;
    out << "  value          " << report.f_value.str() << "\n";
    out << "  det sign       " << report.hessian_det_sign << "\n";
    out << "  lefschetz      " << (report.slp_holds ? "holds" : "fails") << "\n";
    out << "  inertia        " << report.hr_inertia.str() << "\n";
    out << "  hodge-riemann  " << (report.hr_relation_holds ? "holds" : "fails") << "\n";
    out << "  kernel dim     " << report.kernel_dim << "\n";
    return out.str();
}

json report_json(const VerificationReport& report) {
    json j;
    j["claim"] = report.claim;
    json params = json::object();
    for (const auto& [key, value] : report.params) params[key] = value;
    j["params"] = params;
    j["mode"] = report.mode;
    j["seed"] = report.seed;
    j["trials"] = report.trials;
    j["verdict"] = report.verdict;
    j["notes"] = report.notes;
    if (report.failure_bound) j["failure_bound"] = *report.failure_bound;
    if (report.witness) j["witness"] = *report.witness;
    return j;
}

std::string report_text(const VerificationReport& report) {
    std::ostringstream out;
    out << (report.verdict ? "[pass] " : "[FAIL] ") << report.claim << " (" << report.mode << ")\n";
    for (const auto& [key, value] : report.params) {
        out << "  " << key << " = " << value << "\n";
    }
    if (report.failure_bound) out << "  failure bound <= " << *report.failure_bound << "\n";
    for (const std::string& note : report.notes) out << "  note: " << note << "\n";
    if (report.witness) out << "  witness: " << *report.witness << "\n";
    return out.str();
}

Graph resolve_graph(const RunConfig& config) {
    if (config.graph_name && config.file_path)
        throw std::invalid_argument("give either --graph or --file, not both");
    if (config.graph_name) return build_graph(*config.graph_name);
    if (config.file_path) return load_graph_file(*config.file_path);
    throw std::invalid_argument("this command needs a graph: pass --graph NAME or --file PATH");
}

// Graph commands accept a polynomial directly as well; the analysis layers
// only see the polynomial.
Polynomial resolve_polynomial(const RunConfig& config) {
    const int sources = (config.graph_name ? 1 : 0) + (config.file_path ? 1 : 0) +
                        (config.poly_text ? 1 : 0);
    if (sources != 1)
        throw std::invalid_argument(
            "this command needs exactly one input: --graph NAME, --file PATH or --poly EXPR");
    if (config.poly_text) return parse_polynomial(*config.poly_text);
    return kirchhoff_polynomial(resolve_graph(config), KirchhoffRoute::Enumeration);
}

RationalPoint resolve_point(const RunConfig& config, int num_vars) {
    if (config.point_text) {
        RationalPoint p = parse_point(*config.point_text);
        if (p.dim() != num_vars)
            throw std::invalid_argument("point has " + std::to_string(p.dim()) +
                                        " coordinates but the polynomial has " +
                                        std::to_string(num_vars) + " variables");
        return p;
    }
    return RationalPoint::ones(num_vars);
}

Rational parse_rational_arg(const std::string& text, const char* what) {
    if (!valid_rational_token(text))
        throw std::invalid_argument(std::string(what) + ": malformed rational '" + text + "'");
    return Rational::from_string(text);
}

void run_kirchhoff(const RunConfig& config, Reporter& reporter) {
    const Graph g = resolve_graph(config);
    const Polynomial by_enumeration = kirchhoff_polynomial(g, KirchhoffRoute::Enumeration);
    const Polynomial by_matrix_tree = kirchhoff_polynomial(g, KirchhoffRoute::MatrixTree);
    const bool match = by_enumeration == by_matrix_tree;
    const std::size_t tree_count = spanning_trees(g).count();

    json result;
    result["route_enumeration"] = by_enumeration.str();
    result["route_matrix_tree"] = by_matrix_tree.str();
    result["match"] = match;
    result["tree_count"] = tree_count;
    result["terms"] = by_enumeration.term_count();

    std::ostringstream text;
    text << "spanning tree polynomial (" << tree_count << " trees)\n";
    text << "  enumeration: " << by_enumeration.str() << "\n";
    text << "  matrix-tree: " << by_matrix_tree.str() << "\n";
    text << "  routes match: " << (match ? "yes" : "NO") << "\n";
    reporter.add_result(std::move(result), text.str(), match);
}

void run_trees(const RunConfig& config, Reporter& reporter) {
    const Graph g = resolve_graph(config);
    const SpanningTreeSet trees = spanning_trees(g);
    const bool list = config.mode && *config.mode == "list";

    json result;
    result["tree_count"] = trees.count();
    std::ostringstream text;
    text << "spanning trees: " << trees.count() << "\n";
    if (list) {
        json listing = json::array();
        for (const std::vector<int>& tree : trees.as_index_sets()) {
            listing.push_back(tree);
            text << "  {";
            for (std::size_t i = 0; i < tree.size(); ++i)
                text << (i ? ", " : " ") << tree[i];
            text << " }\n";
        }
        result["trees"] = listing;
    }
    reporter.add_result(std::move(result), text.str(), true);
}

void run_logconcavity(const RunConfig& config, Reporter& reporter) {
    const Polynomial f = resolve_polynomial(config);
    const RationalPoint a = resolve_point(config, f.num_vars());

    LogConcavityMode mode = LogConcavityMode::StrictHomogeneous;
    std::string mode_name = config.mode.value_or("strict-homogeneous");
    if (mode_name == "plain") mode = LogConcavityMode::Plain;
    else if (mode_name == "strict") mode = LogConcavityMode::Strict;
    else if (mode_name == "homogeneous") mode = LogConcavityMode::Homogeneous;
    else if (mode_name == "strict-homogeneous") mode = LogConcavityMode::StrictHomogeneous;
    else throw std::invalid_argument("unknown log-concavity mode: " + mode_name);

    std::optional<Rational> s;
    if (config.s_text) s = parse_rational_arg(*config.s_text, "--s");

    const LogConcavityVerdict verdict = check_log_concavity(f, a, mode, s);

    json result;
    result["mode"] = mode_name;
    result["s"] = verdict.s.str();
    result["s_is_threshold"] = verdict.s_is_threshold;
    result["inertia"] = inertia_json(verdict.inertia);
    result["verdict"] = verdict.verdict;
    if (!verdict.reason.empty()) result["reason"] = verdict.reason;
    if (verdict.witness) result["witness"] = rational_vector_json(*verdict.witness);

    std::ostringstream text;
    text << "log-concavity (" << mode_name << ") at (" << a.str() << ")\n";
    text << "  s = " << verdict.s.str() << (verdict.s_is_threshold ? " (threshold)" : "") << "\n";
    text << "  inertia " << verdict.inertia.str() << "\n";
    text << "  verdict: " << (verdict.verdict ? "holds" : "fails") << "\n";
    if (!verdict.reason.empty()) text << "  reason: " << verdict.reason << "\n";
    if (verdict.witness) {
        text << "  witness direction: (";
        const auto& w = *verdict.witness;
        for (std::size_t i = 0; i < w.size(); ++i) text << (i ? ", " : "") << w[i].str();
        text << ")\n";
    }
    reporter.add_result(std::move(result), text.str(), verdict.verdict);
}

void run_hessian_identity(const RunConfig& config, Reporter& reporter) {
    const int r = config.r.value_or(3);
    IdentityMode mode = r == 3 ? IdentityMode::Symbolic : IdentityMode::Evaluation;
    if (config.mode) {
        if (*config.mode == "symbolic") mode = IdentityMode::Symbolic;
        else if (*config.mode == "evaluation") mode = IdentityMode::Evaluation;
        else throw std::invalid_argument("unknown mode: " + *config.mode +
                                         " (expected symbolic or evaluation)");
    }
    const VerificationReport report =
        complete_graph_hessian_identity(r, mode, config.trials, config.seed);
    reporter.add_result(report_json(report), report_text(report), report.verdict);
}

void run_slp(const RunConfig& config, Reporter& reporter) {
    const Polynomial f = resolve_polynomial(config);
    const RationalPoint a = resolve_point(config, f.num_vars());
    const SLPReport report = slp_degree_one(f, a);
    std::ostringstream text;
    text << "degree-one Lefschetz at (" << a.str() << ")\n" << slp_text(report);
    reporter.add_result(slp_json(report), text.str(), report.slp_holds);
}

void run_hodge_riemann(const RunConfig& config, Reporter& reporter) {
    const Polynomial f = resolve_polynomial(config);
    const RationalPoint a = resolve_point(config, f.num_vars());
    const HodgeRiemannResult result = hodge_riemann_relation(f, a);

    json j;
    j["holds"] = result.holds;
    j["inertia"] = inertia_json(result.inertia);
    std::ostringstream text;
    text << "hodge-riemann at (" << a.str() << ")\n";
    text << "  inertia " << result.inertia.str() << "\n";
    text << "  verdict: " << (result.holds ? "holds" : "fails") << "\n";
    reporter.add_result(std::move(j), text.str(), result.holds);
}

void run_euler(const RunConfig& config, Reporter& reporter) {
    const Polynomial f = resolve_polynomial(config);
    const EulerCheck check = euler_check(f);
    json j;
    j["holds"] = check.holds;
    if (!check.detail.empty()) j["detail"] = check.detail;
    std::ostringstream text;
    text << "euler identities: " << (check.holds ? "hold" : "FAIL") << "\n";
    if (!check.detail.empty()) text << "  " << check.detail << "\n";
    reporter.add_result(std::move(j), text.str(), check.holds);
}

void run_identity1(const RunConfig& config, Reporter& reporter) {
    const Polynomial f = resolve_polynomial(config);
    const bool holds = determinant_connection_check(f, config.trials, config.seed);
    const bool symbolic = f.num_vars() <= 4;
    json j;
    j["holds"] = holds;
    j["mode"] = symbolic ? "symbolic" : "evaluation";
    std::ostringstream text;
    text << "determinant connection (" << (symbolic ? "symbolic" : "evaluation")
         << "): " << (holds ? "holds" : "FAIL") << "\n";
    reporter.add_result(std::move(j), text.str(), holds);
}

void run_cayley(const RunConfig& config, Reporter& reporter) {
    const int r = config.r.value_or(3);
    const CayleyCheck check = cayley_check(r);
    json j;
    j["r"] = r;
    j["tree_count"] = check.tree_count;
    j["expected"] = check.expected;
    j["ok"] = check.ok;
    std::ostringstream text;
    text << "complete graph on " << (r + 1) << " vertices: " << check.tree_count
         << " spanning trees, closed form " << check.expected << " -> "
         << (check.ok ? "match" : "MISMATCH") << "\n";
    reporter.add_result(std::move(j), text.str(), check.ok);
}

void run_sweep(const RunConfig& config, Reporter& reporter) {
    sweeps::SweepOptions options;
    options.max_vertices = config.max_vertices;
    options.seed = config.seed;
    options.trials = config.trials;
    options.points_per_graph = config.points_per_graph;
    const std::vector<VerificationReport> reports = sweeps::run_sweeps(config.sweep_name, options);
    for (const VerificationReport& report : reports) {
        reporter.add_result(report_json(report), report_text(report), report.verdict);
    }
}

}  // namespace

RationalPoint parse_point(const std::string& text) {
    std::vector<Rational> coords;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (!valid_rational_token(token))
            throw std::invalid_argument("point: malformed rational '" + token + "'");
        coords.push_back(Rational::from_string(token));
    }
    if (coords.empty()) throw std::invalid_argument("point: no coordinates given");

    bool nonnegative = true;
    std::vector<int> positive_indices;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].sign() < 0) nonnegative = false;
        if (coords[i].sign() > 0) positive_indices.push_back(static_cast<int>(i) + 1);
    }
    if (nonnegative) return RationalPoint(std::move(coords), positive_indices);
    return RationalPoint(std::move(coords));
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        Reporter reporter(config);
        if (config.trials < 1) throw std::invalid_argument("--trials must be positive");
        if (config.command == "kirchhoff") run_kirchhoff(config, reporter);
        else if (config.command == "trees") run_trees(config, reporter);
        else if (config.command == "logconcavity") run_logconcavity(config, reporter);
        else if (config.command == "hessian-identity") run_hessian_identity(config, reporter);
        else if (config.command == "slp") run_slp(config, reporter);
        else if (config.command == "hodge-riemann") run_hodge_riemann(config, reporter);
        else if (config.command == "euler") run_euler(config, reporter);
        else if (config.command == "identity1") run_identity1(config, reporter);
        else if (config.command == "cayley") run_cayley(config, reporter);
        else if (config.command == "sweep") run_sweep(config, reporter);
        else throw std::invalid_argument("unknown command: " + config.command);
        return reporter.emit(out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace kirchcert::cli
