// leantree: counts, bijections, growth constants and eigenvalue bounds for
// plane trees with decreasing labels.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "leantree/asymptotics.hpp"
#include "leantree/bijection.hpp"
#include "leantree/errors.hpp"
#include "leantree/series.hpp"
#include "leantree/spectral.hpp"
#include "leantree/tree.hpp"
#include "leantree/ulam_harris.hpp"
#include "leantree/verify.hpp"
#include "output.hpp"

namespace leantree::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

// Caps on n and k for exact counting; raised only with --unsafe-limits.
constexpr unsigned kCountMaxN = 2000;
constexpr unsigned kCountMaxK = 200;

struct RunConfig {
    std::string format = "text";
    std::optional<double> tol;
    std::optional<unsigned> max_n;
    std::optional<unsigned> max_k;
    bool unsafe_limits = false;

    Format output_format() const {
        if (format == "json") return Format::json;
        if (format == "csv") return Format::csv;
        return Format::text;
    }
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

unsigned guarded(std::optional<unsigned> requested, unsigned fallback, unsigned cap, const RunConfig& cfg,
                 const char* flag) {
    const unsigned value = requested.value_or(fallback);
    if (value > cap && !cfg.unsafe_limits) {
        throw GuardError(std::string(flag) + " " + std::to_string(value) + " exceeds " + std::to_string(cap) +
                         "; pass --unsafe-limits to allow");
    }
    return value;
}

void check_count_args(unsigned n, unsigned k, const RunConfig& cfg) {
    guarded(n, n, kCountMaxN, cfg, "n");
    guarded(k, k, kCountMaxK, cfg, "k");
}

EnumerationLimits enumeration_limits(const RunConfig& cfg) {
    if (cfg.unsafe_limits) {
        return {64, 64};
    }
    return {};
}

unsigned leaning_guard(const RunConfig& cfg) { return cfg.unsafe_limits ? 30 : kLeaningTreeMaxOrder; }

std::uint64_t walk_budget(const RunConfig& cfg) { return cfg.unsafe_limits ? UINT64_MAX : kWalkCountBudget; }

PowerIterationOptions power_options(const RunConfig& cfg) {
    PowerIterationOptions opts;
    if (cfg.tol) {
        opts.tol = *cfg.tol;
    }
    return opts;
}

double root_tol(const RunConfig& cfg) { return cfg.tol.value_or(kDefaultRootTol); }

// --- count / table / series ----------------------------------------------

BigInt count_by(const std::string& method, unsigned n, unsigned k, const RunConfig& cfg) {
    if (method == "series") {
        return count_trees(n, k);
    }
    if (method == "compositions") {
        return count_trees_by_compositions(n, k);
    }
    if (method == "literal") {
        return count_trees_by_compositions(n, k, CompositionMethod::literal);
    }
    if (method == "enumerate") {
        BigInt total;
        for_each_decreasing_tree(n, k, [&](const LabelledPlaneTree&) { ++total; }, enumeration_limits(cfg));
        return total;
    }
    throw UsageError("unknown method " + method);
}

int cmd_count(unsigned n, unsigned k, const std::string& method, bool all_methods, const RunConfig& cfg) {
    check_count_args(n, k, cfg);
    Table table{{"n", "k", "method", "count"}, {}};
    if (!all_methods) {
        const BigInt c = count_by(method, n, k, cfg);
        if (cfg.output_format() == Format::text) {
            std::cout << c.get_str() << '\n';
            return kExitOk;
        }
        table.rows.push_back({integer(n), integer(k), method, integer(c)});
        write_table(std::cout, table, cfg.output_format());
        return kExitOk;
    }
    std::vector<std::string> methods{"series", "compositions"};
    if (n <= kLiteralCompositionMaxN) {
        methods.push_back("literal");
    }
    if (cfg.unsafe_limits || (n <= kEnumerateMaxNodes && k <= kEnumerateMaxLabel)) {
        methods.push_back("enumerate");
    }
    std::optional<BigInt> first;
    bool agree = true;
    for (const auto& m : methods) {
        const BigInt c = count_by(m, n, k, cfg);
        if (first && *first != c) {
            agree = false;
        }
        if (!first) {
            first = c;
        }
        table.rows.push_back({integer(n), integer(k), m, integer(c)});
    }
    write_table(std::cout, table, cfg.output_format());
    if (!agree) {
        std::cerr << "error: counting methods disagree for n=" << n << ", k=" << k << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

int cmd_table(const RunConfig& cfg) {
    const unsigned max_n = guarded(cfg.max_n, 10, kCountMaxN, cfg, "--max-n");
    const unsigned max_k = guarded(cfg.max_k, 6, kCountMaxK, cfg, "--max-k");
    if (max_n == 0 || max_k == 0) {
        throw UsageError("--max-n and --max-k must be positive");
    }
    Table table{{"n", "k", "count"}, {}};
    for (unsigned k = 1; k <= max_k; ++k) {
        const auto g = gk_series(k, std::size_t{max_n} + 1);
        for (unsigned n = 1; n <= max_n; ++n) {
            table.rows.push_back({integer(n), integer(k), integer(g[n])});
        }
    }
    write_table(std::cout, table, cfg.output_format());
    return kExitOk;
}

int cmd_series(unsigned k, unsigned order, const std::string& kind, const RunConfig& cfg) {
    guarded(order, order, kCountMaxN, cfg, "--order");
    guarded(k, k, kCountMaxK, cfg, "k");
    const auto s = kind == "s" ? sk_series(k, order) : gk_series(k, order);
    if (cfg.output_format() == Format::csv) {
        Table table{{"power", "coefficient"}, {}};
        for (std::size_t i = 0; i < s.order(); ++i) {
            table.rows.push_back({integer(static_cast<long long>(i)), integer(s[i])});
        }
        write_table(std::cout, table, Format::csv);
    } else {
        std::cout << series_to_json(s) << '\n';
    }
    return kExitOk;
}

// --- roots / alpha ---------------------------------------------------------

std::pair<unsigned, unsigned> k_range(std::optional<unsigned> k, unsigned first, const RunConfig& cfg) {
    if (k) {
        return {*k, *k};
    }
    return {first, guarded(cfg.max_k, 10, kCountMaxK, cfg, "--max-k")};
}

int cmd_root(std::optional<unsigned> k, const RunConfig& cfg) {
    const auto [from, to] = k_range(k, 1, cfg);
    if (from == 0) {
        throw UsageError("k must be at least 1");
    }
    Table table{{"k", "lo", "hi", "width", "lower_bound", "upper_bound"}, {}};
    for (unsigned j = from; j <= to; ++j) {
        const auto b = zstar(j, root_tol(cfg));
        table.rows.push_back({integer(j), b.lo, b.hi, b.width(), zstar_lower_bound(j), zstar_upper_bound(j)});
    }
    write_table(std::cout, table, cfg.output_format());
    return kExitOk;
}

int cmd_alpha(std::optional<unsigned> k, const RunConfig& cfg) {
    const auto [from, to] = k_range(k, 2, cfg);
    if (from < 2) {
        throw UsageError("k must be at least 2");
    }
    Table table{{"k", "alpha", "alpha_lower_bound", "alpha_upper_bound", "c"}, {}};
    for (unsigned j = from; j <= to; ++j) {
        const auto a = alpha(j, root_tol(cfg));
        const auto bounds = alpha_bounds(j);
        table.rows.push_back({integer(j), a.value, bounds.lo, bounds.hi, ck(j, root_tol(cfg)).value});
    }
    write_table(std::cout, table, cfg.output_format());
    return kExitOk;
}

// --- walks / eigen / uh ------------------------------------------------------

LabelledPlaneTree tree_argument(std::optional<unsigned> order, const std::string& tree_text, const RunConfig& cfg) {
    if (order && !tree_text.empty()) {
        throw UsageError("give either --order or --tree, not both");
    }
    if (order) {
        return leaning_tree(*order, leaning_guard(cfg));
    }
    if (tree_text.empty()) {
        throw UsageError("one of --order or --tree is required");
    }
    return parse_tree(tree_text);
}

int cmd_walks(std::optional<unsigned> order, const std::string& tree_text, std::optional<unsigned> list_length,
              const RunConfig& cfg) {
    if (list_length) {
        if (!order) {
            throw UsageError("--list needs --order");
        }
        const auto walks = cfg.unsafe_limits ? enumerate_closed_walks(*order, *list_length, 64, 64)
                                             : enumerate_closed_walks(*order, *list_length);
        Table table{{"index", "walk", "tree"}, {}};
        long long i = 0;
        for (const auto& w : walks) {
            table.rows.push_back({integer(i++), format_walk(w), format_tree(build_tree_from_walk(w))});
        }
        write_table(std::cout, table, cfg.output_format());
        return kExitOk;
    }
    const auto t = tree_argument(order, tree_text, cfg);
    const unsigned max_half = guarded(cfg.max_n, 10, 500, cfg, "--max-n");
    const auto table_counts = walk_count_table(t, max_half, walk_budget(cfg));
    Table table{{"length", "walks"}, {}};
    for (unsigned n = 0; n <= max_half; ++n) {
        table.rows.push_back({integer(2 * n), integer(table_counts.counts[n])});
    }
    write_table(std::cout, table, cfg.output_format());
    return kExitOk;
}

int cmd_eigen(std::optional<unsigned> order, const std::string& tree_text, unsigned trace_half,
              const RunConfig& cfg) {
    const auto t = tree_argument(order, tree_text, cfg);
    const auto adj = adjacency_of(t);
    const auto lam = lambda1_power_iteration(adj, power_options(cfg));
    const unsigned delta = max_degree(t);
    const unsigned uh = uh_min(t).uh;
    const double bound = leaning_eigen_bound(uh, power_options(cfg), leaning_guard(cfg));

    Table table{{"quantity", "value"}, {}};
    table.rows.push_back({std::string("vertices"), integer(static_cast<long long>(adj.vertex_count()))});
    table.rows.push_back({std::string("max_degree"), integer(delta)});
    table.rows.push_back({std::string("lambda1"), lam.value});
    table.rows.push_back({std::string("lambda1_upper"), lam.upper_bound});
    table.rows.push_back({std::string("iterations"), integer(static_cast<long long>(lam.iterations))});
    if (trace_half > 0) {
        const auto est = lambda1_trace_estimate(t, trace_half, walk_budget(cfg));
        table.rows.push_back({std::string("trace_n"), integer(trace_half)});
        table.rows.push_back({std::string("trace_min_estimate"), est.min_based});
        table.rows.push_back({std::string("trace_max_estimate"), est.max_based});
    }
    if (delta >= 1) {
        const auto sw = stevanovic_bounds(delta);
        table.rows.push_back({std::string("degree_lower"), sw.lower});
        table.rows.push_back({std::string("degree_upper"), sw.upper});
        table.rows.push_back({std::string("degree_upper_degenerate"), sw.degenerate});
        table.rows.push_back({std::string("uh_beats_degree_upper"), bound < sw.upper});
    }
    table.rows.push_back({std::string("ulam_harris"), integer(uh)});
    table.rows.push_back({std::string("leaning_bound"), bound});
    write_table(std::cout, table, cfg.output_format());
    return kExitOk;
}

int cmd_uh(const std::string& tree_text, bool ordered_only, const RunConfig& cfg) {
    const auto t = parse_tree(tree_text);
    const auto report = ordered_only ? uh_ordered(t) : uh_min(t);
    std::string labels;
    for (std::size_t i = 0; i < report.per_node.size(); ++i) {
        labels += (i ? " " : "") + std::to_string(report.per_node[i]);
    }
    Table table{{"uh", "witness", "labelled", "per_node"}, {}};
    table.rows.push_back(
        {integer(report.uh), format_tree(report.witness_order), format_tree(with_uh_labels(report)), labels});
    write_table(std::cout, table, cfg.output_format());
    return kExitOk;
}

// --- bijection / verify -----------------------------------------------------

int cmd_bijection(const std::string& direction, const std::string& input, std::optional<unsigned> order,
                  const RunConfig& cfg) {
    std::string result;
    std::string key;
    if (direction == "p") {
        if (!order) {
            throw UsageError("bijection p needs --order k");
        }
        result = format_tree(build_tree_from_walk(parse_walk(input, *order)));
        key = "tree";
    } else {
        const auto t = parse_tree(input);
        if (!is_decreasing(t, t.label)) {
            throw UsageError("tree labels must strictly decrease from parent to child");
        }
        result = format_walk(build_walk_from_tree(t));
        key = "walk";
    }
    switch (cfg.output_format()) {
        case Format::json: std::cout << "{" << json_quote(key) << ":" << json_quote(result) << "}\n"; break;
        case Format::csv: std::cout << key << '\n' << result << '\n'; break;
        case Format::text: std::cout << result << '\n'; break;
    }
    return kExitOk;
}

int cmd_verify(const std::string& scope_text, const RunConfig& cfg) {
    const auto scope = parse_scope(scope_text);
    if (!scope) {
        throw UsageError("unknown verify scope " + scope_text);
    }
    const auto results = run_verification(*scope);
    std::optional<std::string> first_failure;
    std::size_t passed = 0;
    for (const auto& r : results) {
        passed += r.passed;
        if (!r.passed && !first_failure) {
            first_failure = r.id;
        }
    }
    switch (cfg.output_format()) {
        case Format::text:
            for (const auto& r : results) {
                std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << "  " << r.title << "  ("
                          << format_double(r.seconds, 3) << " s";
                if (r.time_limit > 0) {
                    std::cout << ", limit " << format_double(r.time_limit, 3) << " s";
                }
                std::cout << ")\n";
                for (const auto& d : r.details) {
                    std::cout << "       " << d << '\n';
                }
            }
            std::cout << passed << "/" << results.size() << " checks passed\n";
            if (first_failure) {
                std::cout << "first failure: " << *first_failure << '\n';
            }
            break;
        case Format::csv: {
            Table table{{"check", "passed"}, {}};
            for (const auto& r : results) {
                table.rows.push_back({r.id, r.passed});
            }
            write_table(std::cout, table, Format::csv);
            break;
        }
        case Format::json: {
            std::cout << "{\"scope\":" << json_quote(std::string(scope_name(*scope)))
                      << ",\"passed\":" << (first_failure ? "false" : "true") << ",\"first_failure\":"
                      << (first_failure ? json_quote(*first_failure) : "null") << ",\"checks\":[";
            for (std::size_t i = 0; i < results.size(); ++i) {
                const auto& r = results[i];
                std::cout << (i ? "," : "") << "{\"id\":" << json_quote(r.id) << ",\"title\":" << json_quote(r.title)
                          << ",\"passed\":" << (r.passed ? "true" : "false") << ",\"details\":[";
                for (std::size_t j = 0; j < r.details.size(); ++j) {
                    std::cout << (j ? "," : "") << json_quote(r.details[j]);
                }
                std::cout << "]}";
            }
            std::cout << "]}\n";
            break;
        }
    }
    return first_failure ? kExitFailure : kExitOk;
}

int run(int argc, char** argv) {
    CLI::App app{"Counting, bijections and spectral bounds for plane trees with decreasing labels", "leantree"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->envname("LEANTREE_FORMAT");
    app.add_option("--tol", cfg.tol, "Tolerance for root brackets and power iteration")
        ->check(CLI::PositiveNumber)
        ->envname("LEANTREE_TOL");
    app.add_option("--max-n", cfg.max_n, "Largest n (table rows, walk half-lengths)")->envname("LEANTREE_MAX_N");
    app.add_option("--max-k", cfg.max_k, "Largest k (table columns, root/alpha sweeps)")->envname("LEANTREE_MAX_K");
    app.add_flag("--unsafe-limits", cfg.unsafe_limits, "Lift the size guards")->envname("LEANTREE_UNSAFE_LIMITS");

    unsigned n = 0;
    unsigned k = 0;
    std::string method = "series";
    bool all_methods = false;
    auto* count = app.add_subcommand("count", "G(n,k): trees on n nodes with decreasing labels from {1..k}");
    count->add_option("n", n)->required();
    count->add_option("k", k)->required();
    count->add_option("--method", method)->check(CLI::IsMember({"series", "compositions", "literal", "enumerate"}));
    count->add_flag("--all-methods", all_methods, "Run every applicable method and compare");

    auto* table = app.add_subcommand("table", "G(n,k) for 1 <= n <= --max-n, 1 <= k <= --max-k");

    unsigned series_k = 0;
    unsigned series_order = 10;
    std::string kind = "g";
    auto* series = app.add_subcommand("series", "Coefficients of G_k (or S_k) as a JSON array of decimal strings");
    series->add_option("k", series_k)->required()->check(CLI::PositiveNumber);
    series->add_option("--order", series_order, "Number of coefficients")->check(CLI::PositiveNumber);
    series->add_option("--kind", kind)->check(CLI::IsMember({"g", "s"}));

    std::optional<unsigned> root_k;
    auto* root = app.add_subcommand("root", "Certified bracket for z*_k, the smallest positive root of S_k");
    root->add_option("k", root_k);

    std::optional<unsigned> alpha_k;
    auto* alpha_cmd = app.add_subcommand("alpha", "Growth constants alpha_k and c_k");
    alpha_cmd->add_option("k", alpha_k);

    std::optional<unsigned> order;
    std::string tree_text;
    std::optional<unsigned> list_length;
    auto* walks = app.add_subcommand("walks", "Closed root walks W_2n in T_k or a given tree");
    walks->add_option("--order", order, "Use the leaning tree T_k");
    walks->add_option("--tree", tree_text, "Tree in bracket notation");
    walks->add_option("--list", list_length, "List the closed walks of this length in T_k");

    unsigned trace_half = 20;
    auto* eigen = app.add_subcommand("eigen", "Top adjacency eigenvalue and its bounds");
    eigen->add_option("--order", order, "Use the leaning tree T_k");
    eigen->add_option("--tree", tree_text, "Tree in bracket notation");
    eigen->add_option("--trace-n", trace_half, "Half-length for the trace estimate (0 disables)");

    bool ordered_only = false;
    std::string uh_tree;
    auto* uh = app.add_subcommand("uh", "Ulam-Harris number (minimised over child orders)");
    uh->add_option("tree", uh_tree, "Tree in bracket notation")->required();
    uh->add_flag("--ordered", ordered_only, "Keep the given child order");

    std::string direction;
    std::string bij_input;
    auto* bijection = app.add_subcommand("bijection", "Walk (p) to tree, or tree (w) to walk");
    bijection->add_option("direction", direction)->required()->check(CLI::IsMember({"p", "w"}));
    bijection->add_option("input", bij_input, "Walk tokens (+i, -) or bracket tree")->required();
    bijection->add_option("--order", order, "Order k of T_k for direction p");

    std::string scope = "all";
    auto* verify = app.add_subcommand("verify", "Run the self-checks");
    verify->add_option("scope", scope)->check(CLI::IsMember({"all", "series", "bijection", "spectral", "roots", "uh"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*count) return cmd_count(n, k, method, all_methods, cfg);
        if (*table) return cmd_table(cfg);
        if (*series) return cmd_series(series_k, series_order, kind, cfg);
        if (*root) return cmd_root(root_k, cfg);
        if (*alpha_cmd) return cmd_alpha(alpha_k, cfg);
        if (*walks) return cmd_walks(order, tree_text, list_length, cfg);
        if (*eigen) return cmd_eigen(order, tree_text, trace_half, cfg);
        if (*uh) return cmd_uh(uh_tree, ordered_only, cfg);
        if (*bijection) return cmd_bijection(direction, bij_input, order, cfg);
        if (*verify) return cmd_verify(scope, cfg);
    } catch (const GuardError& e) {
        std::cerr << "guard exceeded: " << e.what() << '\n';
        return kExitGuard;
    } catch (const NotConverged& e) {
        std::cerr << "error: " << e.what() << " (last estimate " << format_double(e.last_estimate()) << ")\n";
        return kExitFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace
}  // namespace leantree::cli

int main(int argc, char** argv) { return leantree::cli::run(argc, argv); }
