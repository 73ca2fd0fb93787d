#pragma once

// Location of z*_k, the smallest positive root of S_k = 1 - G_k, and the growth
// constants of G(n,k) ~ c_k alpha_k^n that it determines.

#include <variant>

namespace leantree {

// Value and first derivative carried through arithmetic (forward mode).
struct DualValue {
    double v = 0.0;
    double d = 0.0;

    static constexpr DualValue constant(double x) { return {x, 0.0}; }
    static constexpr DualValue variable(double x) { return {x, 1.0}; }
};

constexpr DualValue operator+(DualValue a, DualValue b) { return {a.v + b.v, a.d + b.d}; }
constexpr DualValue operator-(DualValue a, DualValue b) { return {a.v - b.v, a.d - b.d}; }
constexpr DualValue operator*(DualValue a, DualValue b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
constexpr DualValue operator/(DualValue a, DualValue b) {
    return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
}

// S_j(z) <= 0 was reached at step j, so z >= z*_j >= z*_k.
struct BeyondRoot {
    unsigned index = 0;
};

using SkValue = std::variant<double, BeyondRoot>;

// Iterates S_1 = 1 - z, S_j = S_{j-1} - z / S_{j-1}, stopping at the first
// non-positive value. Throws std::invalid_argument for z < 0 or k == 0.
SkValue eval_sk(double z, unsigned k);

// True iff S_j(z) > 0 for every j <= k, i.e. z < z*_k.
bool below_root(double z, unsigned k);

// G_k and G_k' at z by dual propagation of G_k = G_{k-1} + z / (1 - G_{k-1}).
// Valid for 0 <= z < z*_{k-1}; throws std::domain_error if a denominator is
// not positive.
DualValue eval_gk(double z, unsigned k);

// k - sqrt(k^2 - 1), evaluated as 1 / (k + sqrt(k^2 - 1)).
double zstar_lower_bound(unsigned k);
// 1 / (2k (1 - (4k)^{-1/4})).
double zstar_upper_bound(unsigned k);

struct RootBracket {
    unsigned k = 0;
    double lo = 0.0;  // below_root(lo, k) holds
    double hi = 0.0;  // below_root(hi, k) fails

    double width() const { return hi - lo; }
    double midpoint() const { return lo + 0.5 * (hi - lo); }
};

inline constexpr double kDefaultRootTol = 1e-12;

// Bisection on below_root from [lower bound, min(1, upper bound)] down to
// width tol (or adjacent doubles). Throws std::logic_error if the start
// interval does not straddle the root.
RootBracket zstar(unsigned k, double tol = kDefaultRootTol);

struct Estimate {
    double value = 0.0;
    double lo = 0.0;
    double hi = 0.0;  // lo <= exact <= hi, up to floating evaluation of S_k
};

// alpha_k = 1 / z*_{k-1}, k >= 2, to absolute accuracy about tol.
Estimate alpha(unsigned k, double tol = kDefaultRootTol);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool contains(double x) const { return lo <= x && x <= hi; }
};

// 2(k-1)(1 - 1/(sqrt2 (k-1)^{1/4})) <= alpha_k <= 1/((k-1) - sqrt((k-1)^2 - 1)).
// The lower end is clamped to 0 where the bracket expression is negative.
Interval alpha_bounds(unsigned k);

// c_k = 1 / G'_{k-1}(z*_{k-1}), the simple-pole residue constant, k >= 2.
Estimate ck(unsigned k, double tol = kDefaultRootTol);

}  // namespace leantree
