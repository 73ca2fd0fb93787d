#pragma once

// Tabular output in text, CSV, or JSON. Integers are emitted as decimal
// strings, floats with a fixed number of significant digits.

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace leantree::cli {

enum class Format { text, csv, json };

struct Integer {
    std::string digits;
};

using Cell = std::variant<Integer, double, bool, std::string, std::monostate>;

Cell integer(const mpz_class& x);
Cell integer(long long x);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

inline constexpr int kFloatDigits = 15;

std::string format_double(double x, int digits = kFloatDigits);

void write_table(std::ostream& out, const Table& table, Format format);

// JSON string literal with escapes.
std::string json_quote(const std::string& s);

}  // namespace leantree::cli
