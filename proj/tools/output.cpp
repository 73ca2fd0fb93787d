#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace leantree::cli {

Cell integer(const mpz_class& x) { return Integer{x.get_str()}; }
Cell integer(long long x) { return Integer{std::to_string(x)}; }

std::string format_double(double x, int digits) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

std::string json_quote(const std::string& s) { return nlohmann::json(s).dump(); }

namespace {

std::string plain(const Cell& c) {
    struct Visitor {
        std::string operator()(const Integer& i) const { return i.digits; }
        std::string operator()(double d) const { return format_double(d); }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(const std::string& s) const { return s; }
        std::string operator()(std::monostate) const { return ""; }
    };
    return std::visit(Visitor{}, c);
}

std::string json_cell(const Cell& c) {
    struct Visitor {
        std::string operator()(const Integer& i) const { return json_quote(i.digits); }
        std::string operator()(double d) const { return std::isfinite(d) ? format_double(d) : "null"; }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(const std::string& s) const { return json_quote(s); }
        std::string operator()(std::monostate) const { return "null"; }
    };
    return std::visit(Visitor{}, c);
}

}  // namespace

void write_table(std::ostream& out, const Table& table, Format format) {
    switch (format) {
        case Format::json: {
            out << '[';
            for (std::size_t r = 0; r < table.rows.size(); ++r) {
                out << (r ? ",\n " : "") << '{';
                for (std::size_t c = 0; c < table.columns.size(); ++c) {
                    out << (c ? "," : "") << json_quote(table.columns[c]) << ':' << json_cell(table.rows[r][c]);
                }
                out << '}';
            }
            out << "]\n";
            break;
        }
        case Format::csv: {
            for (std::size_t c = 0; c < table.columns.size(); ++c) {
                out << (c ? "," : "") << table.columns[c];
            }
            out << '\n';
            for (const auto& row : table.rows) {
                for (std::size_t c = 0; c < row.size(); ++c) {
                    out << (c ? "," : "") << plain(row[c]);
                }
                out << '\n';
            }
            break;
        }
        case Format::text: {
            std::vector<std::size_t> width(table.columns.size());
            for (std::size_t c = 0; c < table.columns.size(); ++c) {
                width[c] = table.columns[c].size();
                for (const auto& row : table.rows) {
                    width[c] = std::max(width[c], plain(row[c]).size());
                }
            }
            auto emit = [&](auto&& cell_text) {
                std::string line;
                for (std::size_t c = 0; c < table.columns.size(); ++c) {
                    std::string cell = cell_text(c);
                    if (c + 1 < table.columns.size()) {
                        cell.resize(width[c], ' ');
                        cell += "  ";
                    }
                    line += cell;
                }
                out << line << '\n';
            };
            emit([&](std::size_t c) { return table.columns[c]; });
            for (const auto& row : table.rows) {
                emit([&](std::size_t c) { return plain(row[c]); });
            }
            break;
        }
    }
}

}  // namespace leantree::cli
