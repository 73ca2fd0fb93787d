#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace leantree {

// A size or cost guard was exceeded. The CLI maps this to exit status 3.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input (tree bracket notation, walk tokens).
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A walk that leaves T_k, moves above the root, or fails to close.
class InvalidWalk : public std::invalid_argument {
public:
    InvalidWalk(const std::string& what, std::size_t move_index)
        : std::invalid_argument(what + " (move " + std::to_string(move_index) + ")"),
          move_index_(move_index) {}

    std::size_t move_index() const noexcept { return move_index_; }

private:
    std::size_t move_index_;
};

// Iterative method hit its iteration cap; carries the last estimate.
class NotConverged : public std::runtime_error {
public:
    NotConverged(const std::string& what, double last_estimate)
        : std::runtime_error(what), last_estimate_(last_estimate) {}

    double last_estimate() const noexcept { return last_estimate_; }

private:
    double last_estimate_;
};

}  // namespace leantree
