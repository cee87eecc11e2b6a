#ifndef CF_ERRORS_HPP
#define CF_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cf {

/// Malformed input text (polynomial grammar, ring files, ...).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Ring mismatches, unknown variables, division by zero, bad domains.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A resource budget was exhausted. Distinct from mathematical failure:
/// the computation was cut off, not refuted.
class BudgetExceeded : public std::runtime_error {
public:
    enum class Kind { Pairs, BasisSize, WallClock };

    BudgetExceeded(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Invalid pipeline/CLI configuration (exit code 2 at the CLI).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cf

#endif
