#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace assoc {

// Input text could not be parsed. position() is a 0-based character offset
// for term syntax and a 1-based line number for graph files; the message
// says which.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_ = 0;
};

// An enumeration guard tripped (tree stream, hom set, or oracle table would
// exceed its configured cap).
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace assoc
