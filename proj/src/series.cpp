#include "leantree/series.hpp"

#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "leantree/errors.hpp"

namespace leantree {

namespace {

void require_order(std::size_t order) {
    if (order == 0) {
        throw std::invalid_argument("series order must be at least 1");
    }
}

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("series orders differ: " + std::to_string(a.order()) +
                                    " vs " + std::to_string(b.order()));
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order) { require_order(order); }

TruncatedSeries::TruncatedSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    require_order(coeffs_.size());
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
    TruncatedSeries s(order);
    s[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::z(std::size_t order) {
    TruncatedSeries s(order);
    if (order > 1) {
        s[1] = 1;
    }
    return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    require_same_order(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    require_same_order(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    return *this;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out(*this);
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

TruncatedSeries TruncatedSeries::shifted() const {
    TruncatedSeries out(order());
    for (std::size_t i = 1; i < order(); ++i) {
        out.coeffs_[i] = coeffs_[i - 1];
    }
    return out;
}

TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) {
    lhs += rhs;
    return lhs;
}

TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) {
    lhs -= rhs;
    return lhs;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    require_same_order(lhs, rhs);
    const std::size_t order = lhs.order();
    TruncatedSeries out(order);
    BigInt term;
    for (std::size_t i = 0; i < order; ++i) {
        if (sgn(lhs[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < order; ++j) {
            mpz_mul(term.get_mpz_t(), lhs[i].get_mpz_t(), rhs[j].get_mpz_t());
            out[i + j] += term;
        }
    }
    return out;
}

TruncatedSeries series_invert_unit(const TruncatedSeries& s) {
    if (s[0] != 1) {
        throw std::invalid_argument("series_invert_unit: constant term must be 1, got " +
                                    s[0].get_str());
    }
    // t_0 = 1, t_n = -sum_{i=1..n} s_i t_{n-i}
    const std::size_t order = s.order();
    TruncatedSeries t(order);
    t[0] = 1;
    BigInt acc;
    for (std::size_t n = 1; n < order; ++n) {
        acc = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            mpz_addmul(acc.get_mpz_t(), s[i].get_mpz_t(), t[n - i].get_mpz_t());
        }
        t[n] = -acc;
    }
    return t;
}

TruncatedSeries gk_series(unsigned k, std::size_t order) {
    if (k == 0) {
        throw std::invalid_argument("gk_series: k must be at least 1");
    }
    require_order(order);
    TruncatedSeries g = TruncatedSeries::z(order);
    for (unsigned j = 2; j <= k; ++j) {
        const TruncatedSeries s = TruncatedSeries::one(order) - g;
        g += series_invert_unit(s).shifted();
    }
    return g;
}

TruncatedSeries sk_series(unsigned k, std::size_t order) {
    if (k == 0) {
        throw std::invalid_argument("sk_series: k must be at least 1");
    }
    require_order(order);
    TruncatedSeries s = TruncatedSeries::one(order) - TruncatedSeries::z(order);
    for (unsigned j = 2; j <= k; ++j) {
        const TruncatedSeries quotient = series_invert_unit(s).shifted();
#ifdef LEANTREE_FAULT_FLIP_S_SIGN
        // Fault-injection build: deliberately wrong sign in the S recurrence.
        s += quotient;
#else
        s -= quotient;
#endif
    }
    return s;
}

BigInt count_trees(unsigned n, unsigned k) {
    if (n == 0 || k == 0) {
        throw std::invalid_argument("count_trees: n and k must be positive");
    }
    return gk_series(k, std::size_t{n} + 1)[n];
}

namespace {

// table[j][s] = G(s, j) for 0 <= j <= k, 0 <= s <= n; row 0 and column 0 are zero.
using CountTable = std::vector<std::vector<BigInt>>;

CountTable counts_by_convolution(unsigned n, unsigned k) {
    CountTable table(k + 1, std::vector<BigInt>(n + 1));
    // prefix[m] = sum over compositions of m of prod G(s, j-1), built from the
    // first part: prefix[m] = sum_{s=1..m} G(s, j-1) * prefix[m - s].
    std::vector<BigInt> prefix(n + 1);
    for (unsigned j = 1; j <= k; ++j) {
        const auto& below = table[j - 1];
        prefix[0] = 1;
        for (unsigned m = 1; m < n; ++m) {
            prefix[m] = 0;
            for (unsigned s = 1; s <= m; ++s) {
                mpz_addmul(prefix[m].get_mpz_t(), below[s].get_mpz_t(), prefix[m - s].get_mpz_t());
            }
        }
        for (unsigned s = 1; s <= n; ++s) {
            table[j][s] = below[s] + prefix[s - 1];
        }
    }
    return table;
}

// Sum over every composition of m of the product of below[part].
BigInt composition_sum_literal(unsigned m, const std::vector<BigInt>& below) {
    if (m == 0) {
        return 1;
    }
    // Bit i of mask set means a cut after position i+1 of the m units.
    BigInt total;
    BigInt product;
    const unsigned long masks = 1ul << (m - 1);
    for (unsigned long mask = 0; mask < masks; ++mask) {
        product = 1;
        unsigned part = 1;
        for (unsigned i = 0; i + 1 < m; ++i) {
            if (mask & (1ul << i)) {
                product *= below[part];
                part = 1;
            } else {
                ++part;
            }
        }
        product *= below[part];
        total += product;
    }
    return total;
}

CountTable counts_by_literal_compositions(unsigned n, unsigned k) {
    CountTable table(k + 1, std::vector<BigInt>(n + 1));
    for (unsigned j = 1; j <= k; ++j) {
        for (unsigned s = 1; s <= n; ++s) {
            table[j][s] = table[j - 1][s] + composition_sum_literal(s - 1, table[j - 1]);
        }
    }
    return table;
}

}  // namespace

BigInt count_trees_by_compositions(unsigned n, unsigned k, CompositionMethod method) {
    if (n == 0 || k == 0) {
        throw std::invalid_argument("count_trees_by_compositions: n and k must be positive");
    }
    if (method == CompositionMethod::literal) {
        if (n > kLiteralCompositionMaxN) {
            throw GuardError("literal composition enumeration limited to n <= " +
                             std::to_string(kLiteralCompositionMaxN));
        }
        return counts_by_literal_compositions(n, k)[k][n];
    }
    return counts_by_convolution(n, k)[k][n];
}

BigInt count_with_root_label(unsigned n, unsigned k) {
    if (n == 0 || k == 0) {
        throw std::invalid_argument("count_with_root_label: n and k must be positive");
    }
    const auto g = gk_series(k, std::size_t{n} + 1);
    if (k == 1) {
        return g[n];
    }
    return g[n] - gk_series(k - 1, std::size_t{n} + 1)[n];
}

std::string series_to_json(const TruncatedSeries& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : s.coeffs()) {
        arr.push_back(c.get_str());
    }
    return arr.dump();
}

TruncatedSeries series_from_json(const std::string& text) {
    const auto arr = nlohmann::json::parse(text);
    if (!arr.is_array() || arr.empty()) {
        throw std::invalid_argument("series JSON must be a non-empty array");
    }
    std::vector<BigInt> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_string()) {
            throw std::invalid_argument("series coefficients must be decimal strings");
        }
        BigInt c;
        if (c.set_str(item.get<std::string>(), 10) != 0) {
            throw std::invalid_argument("not a decimal integer: " + item.get<std::string>());
        }
        coeffs.push_back(std::move(c));
    }
    return TruncatedSeries(std::move(coeffs));
}

}  // namespace leantree
