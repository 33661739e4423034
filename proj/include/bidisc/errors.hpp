#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace bidisc {

// Invalid mathematical input (zero divisor, negative exponent, argument
// outside the operation's domain).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource guard tripped (Groebner term cap, iteration budget).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Text input rejected; carries the offending position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error("parse error at line " + std::to_string(line) +
                             ", column " + std::to_string(column) + ": " + msg),
          line(line), column(column) {}
    int line;
    int column;
};

// An iterative numeric routine failed to meet its tolerance; carries the
// best iterates so the caller can still inspect them.
class NonConvergence : public std::runtime_error {
public:
    NonConvergence(const std::string& msg, std::vector<std::complex<double>> best)
        : std::runtime_error(msg), best_iterates(std::move(best)) {}
    std::vector<std::complex<double>> best_iterates;
};

// Grid sample landed on a (near-)zero of a denominator; names the point.
class SingularSample : public std::runtime_error {
public:
    SingularSample(const std::string& msg, std::complex<double> z1, std::complex<double> z2)
        : std::runtime_error(msg), z1(z1), z2(z2) {}
    std::complex<double> z1, z2;
};

} // namespace bidisc
