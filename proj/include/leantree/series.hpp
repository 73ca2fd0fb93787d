#pragma once

// Exact truncated power series over the integers, and the counting sequence
// G(n,k) of planted plane trees on n nodes with strictly decreasing labels
// drawn from {1,...,k}.

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace leantree {

using BigInt = mpz_class;

// Power series truncated to order N: coefficients of z^0 .. z^{N-1}.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order);
    explicit TruncatedSeries(std::vector<BigInt> coeffs);

    static TruncatedSeries one(std::size_t order);
    static TruncatedSeries z(std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size(); }
    const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }
    BigInt& operator[](std::size_t i) { return coeffs_[i]; }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries operator-() const;

    // Multiplication by z; the top coefficient falls off the truncation.
    TruncatedSeries shifted() const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<BigInt> coeffs_;
};

TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs);
TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs);
// Product truncated to the common order; both operands must share it.
TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

// Multiplicative inverse of a series with constant term 1, modulo z^N.
// Throws std::invalid_argument if the constant term is not 1.
TruncatedSeries series_invert_unit(const TruncatedSeries& s);

// G_k(z) to order N, via G_1 = z and G_k = G_{k-1} + z / (1 - G_{k-1}).
TruncatedSeries gk_series(unsigned k, std::size_t order);

// S_k(z) = 1 - G_k(z) to order N, via S_1 = 1 - z and
// S_k = S_{k-1} - z / S_{k-1}. Computed independently of gk_series.
TruncatedSeries sk_series(unsigned k, std::size_t order);

// G(n,k) as the z^n coefficient of gk_series(k, n+1).
BigInt count_trees(unsigned n, unsigned k);

enum class CompositionMethod {
    convolution,  // first-part decomposition of the composition sum, O(n^2 k)
    literal,      // explicit enumeration of all 2^(n-2) compositions of n-1
};

inline constexpr unsigned kLiteralCompositionMaxN = 12;

// G(n,k) from the composition recurrence
//   G(n,k) = G(n,k-1) + sum over compositions S of n-1 of prod_{s in S} G(s,k-1),
// with G(n,0) = 0 and the empty composition of 0 contributing 1.
// The literal method throws GuardError for n > kLiteralCompositionMaxN.
BigInt count_trees_by_compositions(unsigned n, unsigned k,
                                   CompositionMethod method = CompositionMethod::convolution);

// Number of n-node decreasing trees whose root label is exactly k:
// G(n,k) - G(n,k-1).
BigInt count_with_root_label(unsigned n, unsigned k);

// JSON array of decimal strings, e.g. ["0","3","3","6"].
std::string series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const std::string& text);

}  // namespace leantree
