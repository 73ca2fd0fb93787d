#include "leantree/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace leantree {

SkValue eval_sk(double z, unsigned k) {
    if (k == 0) {
        throw std::invalid_argument("eval_sk: k must be at least 1");
    }
    if (!(z >= 0.0)) {
        throw std::invalid_argument("eval_sk: z must be nonnegative");
    }
    double s = 1.0 - z;
    if (s <= 0.0) {
        return BeyondRoot{1};
    }
    for (unsigned j = 2; j <= k; ++j) {
        s = s - z / s;
        if (s <= 0.0) {
            return BeyondRoot{j};
        }
    }
    return s;
}

bool below_root(double z, unsigned k) { return std::holds_alternative<double>(eval_sk(z, k)); }

DualValue eval_gk(double z, unsigned k) {
    if (k == 0) {
        throw std::invalid_argument("eval_gk: k must be at least 1");
    }
    const DualValue x = DualValue::variable(z);
    DualValue g = x;
    for (unsigned j = 2; j <= k; ++j) {
        const DualValue denom = DualValue::constant(1.0) - g;
        if (!(denom.v > 0.0)) {
            throw std::domain_error("eval_gk: z is at or beyond z*_" + std::to_string(j - 1));
        }
        g = g + x / denom;
    }
    return g;
}

double zstar_lower_bound(unsigned k) {
    if (k == 0) {
        throw std::invalid_argument("zstar_lower_bound: k must be at least 1");
    }
    const double kk = k;
    return 1.0 / (kk + std::sqrt(kk * kk - 1.0));
}

double zstar_upper_bound(unsigned k) {
    if (k == 0) {
        throw std::invalid_argument("zstar_upper_bound: k must be at least 1");
    }
    const double kk = k;
    const double shrink = 1.0 - std::pow(4.0 * kk, -0.25);
    if (shrink <= 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return 1.0 / (2.0 * kk * shrink);
}

RootBracket zstar(unsigned k, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("zstar: tolerance must be positive");
    }
    RootBracket b{k, zstar_lower_bound(k), std::min(1.0, zstar_upper_bound(k))};
    if (below_root(b.hi, k)) {
        throw std::logic_error("zstar: S_" + std::to_string(k) + " still positive at the upper bound " +
                               std::to_string(b.hi));
    }
    if (!below_root(b.lo, k)) {
        // The lower bound is attained (k = 1: z*_1 = 1 exactly); step below it
        // to obtain a positivity certificate.
        const double exact = b.lo;
        b.lo = exact - tol;
        if (b.lo < 0.0 || !below_root(b.lo, k)) {
            throw std::logic_error("zstar: no positivity certificate below " + std::to_string(exact));
        }
        b.hi = std::min(b.hi, exact);
    }
    while (b.width() > tol) {
        const double mid = b.midpoint();
        if (mid <= b.lo || mid >= b.hi) {
            break;
        }
        (below_root(mid, k) ? b.lo : b.hi) = mid;
    }
    return b;
}

Estimate alpha(unsigned k, double tol) {
    if (k < 2) {
        throw std::invalid_argument("alpha: k must be at least 2");
    }
    // |d(1/z)| = |dz| / z^2, so shrink the bracket width by z^2.
    const double z_floor = zstar_lower_bound(k - 1);
    const RootBracket b = zstar(k - 1, tol * z_floor * z_floor);
    return {1.0 / b.midpoint(), 1.0 / b.hi, 1.0 / b.lo};
}

Interval alpha_bounds(unsigned k) {
    if (k < 2) {
        throw std::invalid_argument("alpha_bounds: k must be at least 2");
    }
    const double m = k - 1;
    const double factor = 1.0 - 1.0 / (std::sqrt(2.0) * std::pow(m, 0.25));
    // 1 / (m - sqrt(m^2 - 1)) == m + sqrt(m^2 - 1)
    return {std::max(0.0, 2.0 * m * factor), m + std::sqrt(m * m - 1.0)};
}

Estimate ck(unsigned k, double tol) {
    if (k < 2) {
        throw std::invalid_argument("ck: k must be at least 2");
    }
    const RootBracket b = zstar(k - 1, tol);
    // G'_{k-1} has positive coefficients, so it is increasing in z.
    const double d_mid = eval_gk(b.midpoint(), k - 1).d;
    const double d_lo = eval_gk(b.lo, k - 1).d;
    const double d_hi = eval_gk(b.hi, k - 1).d;
    return {1.0 / d_mid, 1.0 / d_hi, 1.0 / d_lo};
}

}  // namespace leantree
