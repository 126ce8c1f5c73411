#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dapt {

/// Guest-graph vertex, 1-based (v_1..v_n).
using Vertex = std::uint32_t;
/// Host-tree leaf in canonical order, 1-based (b_1..b_b).
using Leaf = std::uint64_t;
/// Objective values and signed deltas.
using Cost = std::int64_t;

/// Raised when an arrangement violates range or injectivity.
class InvalidArrangement : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by the file readers; carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace dapt
