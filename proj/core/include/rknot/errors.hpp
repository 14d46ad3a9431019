#pragma once

#include <stdexcept>
#include <string>

namespace rknot {

// Thrown when an input is syntactically valid but outside an operation's
// mathematical domain (non-coprime pair, link where a knot is required,
// odd denominator for an even-denominator expansion, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rknot
