#include "leantree/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "leantree/asymptotics.hpp"
#include "leantree/bijection.hpp"
#include "leantree/series.hpp"
#include "leantree/spectral.hpp"
#include "leantree/tree.hpp"
#include "leantree/ulam_harris.hpp"

namespace leantree {

namespace {

constexpr std::size_t kMaxFailureLines = 8;
constexpr std::uint64_t kRandomTreeSeed = 20240611;

std::string num(double x, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

std::string str(const BigInt& x) { return x.get_str(); }

// Random recursive tree: node i attaches to a uniform earlier node.
LabelledPlaneTree random_recursive_tree(unsigned n, std::mt19937_64& rng) {
    std::vector<std::vector<unsigned>> kids(n);
    for (unsigned i = 1; i < n; ++i) {
        std::uniform_int_distribution<unsigned> pick(0, i - 1);
        kids[pick(rng)].push_back(i);
    }
    auto build = [&](auto&& self, unsigned v) -> LabelledPlaneTree {
        LabelledPlaneTree t;
        for (unsigned c : kids[v]) {
            t.children.push_back(self(self, c));
        }
        return t;
    };
    return build(build, 0);
}

std::vector<LabelledPlaneTree> random_trees(std::size_t count, unsigned max_nodes, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> size(1, max_nodes);
    std::vector<LabelledPlaneTree> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(random_recursive_tree(size(rng), rng));
    }
    return out;
}

// --- series ---------------------------------------------------------------

void check_count_agreement(CheckResult& r) {
    r.require(count_trees(1, 1) == 1, "G(1,1) = 1");
    for (unsigned n = 2; n <= 8; ++n) {
        r.require(count_trees(n, 1) == 0, "G(" + std::to_string(n) + ",1) = 0");
    }
    r.require(count_trees(3, 3) == 6, "G(3,3) = 6");
    std::size_t cells = 0;
    for (unsigned n = 1; n <= 8; ++n) {
        for (unsigned k = 1; k <= 6; ++k) {
            const BigInt series = count_trees(n, k);
            const BigInt conv = count_trees_by_compositions(n, k);
            const BigInt literal = count_trees_by_compositions(n, k, CompositionMethod::literal);
            const BigInt listed = enumerate_decreasing_trees(n, k).size();
            r.require(series == conv && conv == literal && literal == listed,
                      "G(" + std::to_string(n) + "," + std::to_string(k) + "): series " + str(series) +
                          ", compositions " + str(conv) + ", literal " + str(literal) +
                          ", enumeration " + str(listed));
            ++cells;
        }
    }
    r.note(std::to_string(cells) + " cells (n<=8, k<=6) compared; G(8,6) = " + str(count_trees(8, 6)));
}

void check_s_plus_g(CheckResult& r) {
    constexpr std::size_t order = 30;
    for (unsigned k = 1; k <= 8; ++k) {
        const auto sum = sk_series(k, order) + gk_series(k, order);
        r.require(sum == TruncatedSeries::one(order),
                  "S_" + std::to_string(k) + " + G_" + std::to_string(k) + " != 1 to order 30");
    }
    r.note("S_k + G_k = 1 coefficientwise for k <= 8, order 30");
}

void check_monotone_in_k(CheckResult& r) {
    constexpr std::size_t order = 25;
    auto prev = gk_series(1, order);
    for (unsigned k = 2; k <= 8; ++k) {
        const auto cur = gk_series(k, order);
        for (std::size_t i = 0; i < order; ++i) {
            r.require(cur[i] >= prev[i] && cur[i] >= 0,
                      "[z^" + std::to_string(i) + "] G_" + std::to_string(k) + " < G_" + std::to_string(k - 1));
        }
        prev = cur;
    }
}

// --- bijection ------------------------------------------------------------

void check_walk_theorem(CheckResult& r) {
    for (unsigned k = 0; k <= 5; ++k) {
        const auto t = leaning_tree(k);
        const auto table = walk_count_table(t, 6);
        for (unsigned n = 0; n <= 6; ++n) {
            const BigInt expected = count_with_root_label(n + 1, k + 1);
            const BigInt direct = closed_walk_count(t, 2 * n);
            r.require(table.counts[n] == expected && direct == expected,
                      "W_" + std::to_string(2 * n) + "(T_" + std::to_string(k) + ") = " + str(direct) +
                          " but G(n+1,k+1) - G(n+1,k) = " + str(expected));
        }
    }
    r.note("exact equality for 0 <= n <= 6, 0 <= k <= 5; W_12(T_5) = " +
           str(closed_walk_count(leaning_tree(5), 12)));
}

void check_round_trips(CheckResult& r) {
    std::size_t walks = 0;
    for (unsigned len = 0; len <= 10; len += 2) {
        for (const auto& w : enumerate_closed_walks(4, len)) {
            r.require(build_walk_from_tree(build_tree_from_walk(w)) == w, "W(P(w)) != w for " + format_walk(w));
            ++walks;
        }
    }
    std::size_t trees = 0;
    for (unsigned k = 0; k <= 5; ++k) {
        for (unsigned n = 1; n <= 7; ++n) {
            for (const auto& t : enumerate_decreasing_trees(n, k + 1)) {
                if (t.label != k + 1) {
                    continue;
                }
                const auto w = build_walk_from_tree(t);
                r.require(w.order == k && build_tree_from_walk(w) == t, "P(W(t)) != t for " + format_tree(t));
                ++trees;
            }
        }
    }
    std::size_t images = 0;
    for (unsigned k = 0; k <= 5; ++k) {
        for (unsigned len = 0; len <= 10; len += 2) {
            std::vector<std::string> image;
            for (const auto& w : enumerate_closed_walks(k, len)) {
                image.push_back(format_tree(build_tree_from_walk(w)));
            }
            std::sort(image.begin(), image.end());
            const bool unique = std::adjacent_find(image.begin(), image.end()) == image.end();
            std::vector<std::string> expected;
            for (const auto& t : enumerate_decreasing_trees(len / 2 + 1, k + 1)) {
                if (t.label == k + 1) {
                    expected.push_back(format_tree(t));
                }
            }
            r.require(unique && image == expected,
                      "image of walks of length " + std::to_string(len) + " in T_" + std::to_string(k) +
                          " differs from the decreasing trees with root label " + std::to_string(k + 1));
            ++images;
        }
    }
    r.note(std::to_string(walks) + " walks in T_4 (length <= 10), " + std::to_string(trees) +
           " trees (<= 7 nodes, k <= 5), " + std::to_string(images) + " image sets compared");
}

// --- roots ----------------------------------------------------------------

void check_roots(CheckResult& r) {
    const double golden_root = (3.0 - std::sqrt(5.0)) / 2.0;
    const auto b2 = zstar(2);
    r.require(std::abs(b2.midpoint() - golden_root) < 1e-10,
              "z*_2 midpoint " + num(b2.midpoint(), 17) + " vs (3-sqrt5)/2 = " + num(golden_root, 17));
    double prev_mid = 2.0;
    for (unsigned k = 1; k <= 50; ++k) {
        const auto b = zstar(k);
        const double lower = zstar_lower_bound(k);
        const double upper = zstar_upper_bound(k);
        // At k = 1 the lower bound is the root itself, so the certified lo sits
        // one bracket width below it.
        const bool lower_ok = b.lo >= lower || (b.hi >= lower && lower - b.lo <= b.width());
        r.require(lower_ok && b.hi <= upper, "k=" + std::to_string(k) + ": bracket [" + num(b.lo, 17) + ", " +
                                                 num(b.hi, 17) + "] outside [" + num(lower, 17) + ", " +
                                                 num(upper, 17) + "]");
        r.require(below_root(b.lo, k) && !below_root(b.hi, k),
                  "k=" + std::to_string(k) + ": bracket endpoints not certified");
        const auto s = eval_sk(1.0 / (2.0 * k), k);
        const double cap = std::pow(4.0 * k, -0.25);
        r.require(std::holds_alternative<double>(s) && std::get<double>(s) > 0.0 && std::get<double>(s) <= cap,
                  "k=" + std::to_string(k) + ": S_k(1/2k) not in (0, (4k)^(-1/4)]");
        r.require(b.midpoint() <= prev_mid, "z*_" + std::to_string(k) + " midpoint increased");
        prev_mid = b.midpoint();
    }
    r.note("z*_2 = " + num(b2.midpoint(), 15) + ", z*_50 = " + num(zstar(50).midpoint(), 15));
}

void check_growth_constants(CheckResult& r) {
    const auto a2 = alpha(2);
    const auto c2 = ck(2);
    r.require(std::abs(a2.value - 1.0) < 1e-9, "alpha_2 = " + num(a2.value, 17));
    r.require(std::abs(c2.value - 1.0) < 1e-9, "c_2 = " + num(c2.value, 17));
    const auto a3 = alpha(3);
    const double golden_sq = (3.0 + std::sqrt(5.0)) / 2.0;
    r.require(std::abs(a3.value - golden_sq) < 1e-9, "alpha_3 = " + num(a3.value, 17));
    const auto c3 = ck(3);
    const mpq_class ratio(count_trees(60, 3), 1);
    const double empirical = ratio.get_d() / std::pow(a3.value, 60);
    r.require(std::abs(c3.value - empirical) < 1e-6,
              "c_3 = " + num(c3.value, 15) + " vs G(60,3)/alpha_3^60 = " + num(empirical, 15));
    r.note("alpha_3 = " + num(a3.value, 15) + ", c_3 = " + num(c3.value, 15) + ", empirical " + num(empirical, 15));
    for (unsigned k = 2; k <= 50; ++k) {
        const auto a = alpha(k);
        const auto bounds = alpha_bounds(k);
        // The estimate interval must meet the analytic bracket.
        r.require(a.hi >= bounds.lo && a.lo <= bounds.hi,
                  "alpha_" + std::to_string(k) + " = " + num(a.value) + " outside [" + num(bounds.lo) + ", " +
                      num(bounds.hi) + "]");
    }
    for (unsigned k = 1; k <= 6; ++k) {
        const auto g = gk_series(k, 41);
        // alpha_{k+1} = 1 / z*_k; hi uses the certified lower end of the bracket.
        const double base = alpha(k + 1).hi;
        for (unsigned n = 1; n <= 40; ++n) {
            r.require(cmp(g[n], std::pow(base, n)) <= 0,
                      "G(" + std::to_string(n) + "," + std::to_string(k) + ") = " + str(g[n]) +
                          " exceeds alpha_" + std::to_string(k + 1) + "^n");
        }
    }
}

void check_ratio_convergence(CheckResult& r) {
    for (unsigned k : {2u, 3u, 4u}) {
        const auto g = gk_series(k, 82);
        const double ratio = mpq_class(g[81], g[80]).get_d();
        const double a = alpha(k).value;
        r.require(std::abs(ratio - a) < 1e-6,
                  "k=" + std::to_string(k) + ": G(81,k)/G(80,k) = " + num(ratio, 15) + " vs alpha_k = " + num(a, 15));
        r.note("k=" + std::to_string(k) + ": |ratio - alpha| = " + num(std::abs(ratio - a), 3));
    }
}

// --- spectral -------------------------------------------------------------

void check_leaning_spectra(CheckResult& r) {
    const PowerIterationOptions tight{1e-12, 1'000'000};
    const double l1 = lambda1_power_iteration(leaning_tree(1), tight).value;
    const double l2 = lambda1_power_iteration(leaning_tree(2), tight).value;
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    r.require(std::abs(l1 - 1.0) < 1e-9, "lambda_1(T_1) = " + num(l1, 17));
    r.require(std::abs(l2 - golden) < 1e-9, "lambda_1(T_2) = " + num(l2, 17));

    std::vector<double> lambda(15, 0.0);
    for (unsigned k = 1; k <= 14; ++k) {
        lambda[k] = lambda1_power_iteration(leaning_tree(k)).value;
    }
    constexpr double tol = 1e-8;
    for (unsigned k = 2; k <= 12; ++k) {
        const unsigned stated_delta = k + 1;
        const auto sw = stevanovic_bounds(stated_delta);
        r.require(sw.lower - tol <= lambda[k] && lambda[k] <= sw.upper + tol,
                  "k=" + std::to_string(k) + ": lambda_1 = " + num(lambda[k]) + " outside [sqrt(k+1), 2 sqrt(k)] = [" +
                      num(sw.lower) + ", " + num(sw.upper) + "]");
        const unsigned measured = max_degree(leaning_tree(k));
        const auto actual = stevanovic_bounds(measured);
        const bool inside = actual.lower - tol <= lambda[k] && lambda[k] <= actual.upper + tol;
        if (!inside || measured != stated_delta) {
            r.note("k=" + std::to_string(k) + ": measured max degree " + std::to_string(measured) +
                   (inside ? ", sandwich holds with it" : ", sandwich FAILS with it"));
        }
    }
    for (unsigned k = 6; k <= 14; ++k) {
        const double q = lambda[k] * lambda[k] / (2.0 * k);
        r.require(q >= 0.5 && q <= 1.1, "k=" + std::to_string(k) + ": lambda_1^2/(2k) = " + num(q));
    }
    r.note("lambda_1^2/(2k): k=6 " + num(lambda[6] * lambda[6] / 12.0, 6) + ", k=14 " +
           num(lambda[14] * lambda[14] / 28.0, 6));
    double worst = 0.0;
    for (unsigned k = 1; k <= 10; ++k) {
        const auto est = lambda1_trace_estimate(leaning_tree(k), 20);
        const double rel = std::abs(est.max_based - lambda[k]) / lambda[k];
        worst = std::max(worst, rel);
        r.require(rel <= 0.05, "k=" + std::to_string(k) + ": trace estimate " + num(est.max_based) +
                                   " vs power iteration " + num(lambda[k]));
    }
    r.note("max-rooted trace estimate at 2n=40: worst relative gap " + num(worst, 4) + " (k <= 10)");
}

void check_embedding_bound(CheckResult& r) {
    std::map<unsigned, double> leaning_cache;
    std::size_t beats = 0;
    std::size_t predicted = 0;
    std::size_t agree = 0;
    const auto trees = random_trees(200, 30, kRandomTreeSeed);
    for (const auto& t : trees) {
        const unsigned uh = uh_min(t).uh;
        auto it = leaning_cache.find(uh);
        if (it == leaning_cache.end()) {
            it = leaning_cache.emplace(uh, leaning_eigen_bound(uh)).first;
        }
        const double lam = lambda1_power_iteration(t).value;
        r.require(lam <= it->second + 1e-8, format_tree(t) + ": lambda_1 = " + num(lam) +
                                                " > lambda_1(T_" + std::to_string(uh - 1) + ") = " + num(it->second));
        const unsigned delta = max_degree(t);
        if (delta >= 1) {
            const bool better = it->second < stevanovic_bounds(delta).upper;
            const bool expected = uh + 1 < 2 * delta;
            beats += better;
            predicted += expected;
            agree += (better == expected);
        }
    }
    r.note("UH bound below 2 sqrt(delta-1) on " + std::to_string(beats) + "/200 trees; UH+1 < 2 delta on " +
           std::to_string(predicted) + "; criteria agree on " + std::to_string(agree));
    r.note("largest UH seen: " + std::to_string(leaning_cache.rbegin()->first));
}

// --- Ulam-Harris ----------------------------------------------------------

void check_uh(CheckResult& r) {
    std::set<std::string> seen;
    std::vector<std::size_t> per_size(9, 0);
    for (unsigned n = 1; n <= 8; ++n) {
        for (const auto& shape : enumerate_plane_shapes(n)) {
            const auto canon = canonical_unordered(shape);
            if (!seen.insert(format_tree(canon)).second) {
                continue;
            }
            ++per_size[n];
            const unsigned greedy = uh_min(canon).uh;
            const unsigned brute = uh_min_bruteforce(canon);
            r.require(greedy == brute, format_tree(canon) + ": greedy " + std::to_string(greedy) + ", exhaustive " +
                                           std::to_string(brute));
        }
    }
    // Rooted unordered trees: 1, 1, 2, 4, 9, 20, 48, 115.
    const std::vector<std::size_t> expected_shapes{0, 1, 1, 2, 4, 9, 20, 48, 115};
    r.require(per_size == expected_shapes, "unordered shape counts differ from 1,1,2,4,9,20,48,115");
    r.note(std::to_string(seen.size()) + " unordered shapes with <= 8 nodes checked exhaustively");
    for (unsigned k = 0; k <= 10; ++k) {
        const auto t = leaning_tree(k);
        const unsigned ordered = uh_ordered(t).uh;
        const unsigned best = uh_min(t).uh;
        r.require(ordered == k + 1 && best == k + 1, "T_" + std::to_string(k) + ": UH ordered " +
                                                          std::to_string(ordered) + ", min " + std::to_string(best));
    }
    for (const auto& t : random_trees(500, 30, kRandomTreeSeed + 1)) {
        const unsigned best = uh_min(t).uh;
        r.require(best >= max_degree(t), format_tree(t) + ": UH " + std::to_string(best) + " < max degree");
    }
}

const std::vector<Check> kChecks = {
    {"AC1", "exact-count triple agreement", VerifyScope::series, 10.0, check_count_agreement},
    {"series.s_plus_g_identity", "S_k + G_k = 1 from independent recurrences", VerifyScope::series, 0.0,
     check_s_plus_g},
    {"series.monotone_in_k", "G_k coefficientwise nondecreasing in k", VerifyScope::series, 0.0,
     check_monotone_in_k},
    {"AC2", "closed walks in T_k count trees with root label k+1", VerifyScope::bijection, 10.0,
     check_walk_theorem},
    {"AC3", "walk/tree bijection round trips and image sets", VerifyScope::bijection, 0.0, check_round_trips},
    {"AC4", "z*_k brackets, analytic bounds, monotonicity", VerifyScope::roots, 5.0, check_roots},
    {"AC5", "growth constants alpha_k, c_k and the explicit bound", VerifyScope::roots, 0.0,
     check_growth_constants},
    {"AC9", "coefficient ratio converges to alpha_k", VerifyScope::roots, 0.0, check_ratio_convergence},
    {"AC6", "leaning-tree spectra", VerifyScope::spectral, 0.0, check_leaning_spectra},
    {"AC8", "Ulam-Harris embedding bound on random trees", VerifyScope::spectral, 0.0, check_embedding_bound},
    {"AC7", "Ulam-Harris minimisation", VerifyScope::uh, 0.0, check_uh},
};

}  // namespace

void CheckResult::require(bool ok, const std::string& what) {
    if (ok) {
        return;
    }
    const std::size_t failures_so_far = static_cast<std::size_t>(
        std::count_if(details.begin(), details.end(), [](const std::string& d) { return d.rfind("FAIL ", 0) == 0; }));
    passed = false;
    if (failures_so_far < kMaxFailureLines) {
        details.push_back("FAIL " + what);
    }
}

std::optional<VerifyScope> parse_scope(std::string_view name) {
    for (auto s : {VerifyScope::all, VerifyScope::series, VerifyScope::bijection, VerifyScope::roots,
                   VerifyScope::spectral, VerifyScope::uh}) {
        if (scope_name(s) == name) {
            return s;
        }
    }
    return std::nullopt;
}

std::string_view scope_name(VerifyScope scope) {
    switch (scope) {
        case VerifyScope::all: return "all";
        case VerifyScope::series: return "series";
        case VerifyScope::bijection: return "bijection";
        case VerifyScope::roots: return "roots";
        case VerifyScope::spectral: return "spectral";
        case VerifyScope::uh: return "uh";
    }
    return "?";
}

CheckResult run_check(const Check& check) {
    CheckResult r;
    r.id = check.id;
    r.title = check.title;
    r.time_limit = check.time_limit;
    const auto start = std::chrono::steady_clock::now();
    try {
        check.body(r);
    } catch (const std::exception& e) {
        r.require(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.time_limit > 0.0) {
        r.require(r.seconds < r.time_limit, "runtime " + num(r.seconds, 3) + " s exceeds " + num(r.time_limit, 3) + " s");
    }
    return r;
}

const std::vector<Check>& verification_checks() { return kChecks; }

const Check& find_check(std::string_view id) {
    for (const auto& c : kChecks) {
        if (c.id == id) {
            return c;
        }
    }
    throw std::out_of_range("no verification check named " + std::string(id));
}

std::vector<CheckResult> run_verification(VerifyScope scope) {
    std::vector<CheckResult> results;
    for (const auto& c : kChecks) {
        if (scope == VerifyScope::all || c.scope == scope) {
            results.push_back(run_check(c));
        }
    }
    return results;
}

}  // namespace leantree
