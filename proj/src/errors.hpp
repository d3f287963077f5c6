#ifndef HILBNEF_ERRORS_HPP
#define HILBNEF_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hilbnef {

// Violated precondition or unsupported input (maps to HNF_ERROR_DOMAIN).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Expression syntax error; `position` is a byte offset into the input.
class PolyParseError : public std::runtime_error {
public:
    PolyParseError(std::size_t position, const std::string& what)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

} // namespace hilbnef

#endif
