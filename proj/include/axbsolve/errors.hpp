#ifndef AXBSOLVE_ERRORS_HPP
#define AXBSOLVE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "axbsolve/scalar.hpp"

namespace axbsolve {

/// Operands have non-conformable shapes.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed matrix text. Line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A matrix passed as a {1}-inverse fails A*G*A == A.
class InvalidInverseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An injected rank normal form does not satisfy Q*A*P == E_A with Q, P regular.
class InvalidWitnessError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Substitution was asked to evaluate a parameter with no value.
class UnboundParameterError : public std::out_of_range {
public:
    explicit UnboundParameterError(std::string name)
        : std::out_of_range("no value for parameter '" + name + "'"), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

/// One nonzero entry that witnesses inconsistency.
struct CertificateEntry {
    std::string block;  // "C'12", "C'21", "C'22" or "c''"
    std::size_t row = 0;
    std::size_t col = 0;
    Rational value;

    friend bool operator==(const CertificateEntry&, const CertificateEntry&) = default;
};

/// AXB = C has no solution. The certificate lists the offending nonzero entries,
/// largest |numerator| first.
class NoSolutionError : public std::runtime_error {
public:
    explicit NoSolutionError(std::vector<CertificateEntry> certificate)
        : std::runtime_error("inconsistent system: " + std::to_string(certificate.size()) + " nonzero certificate entries"),
          certificate_(std::move(certificate)) {}

    const std::vector<CertificateEntry>& certificate() const { return certificate_; }

private:
    std::vector<CertificateEntry> certificate_;
};

}  // namespace axbsolve

#endif  // AXBSOLVE_ERRORS_HPP
