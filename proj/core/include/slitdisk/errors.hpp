#pragma once

#include <stdexcept>
#include <string>

namespace slitdisk {

// Base class for all library failures so callers can catch one type.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input outside the mathematical domain of an operation (exterior point,
// point on the slit, zero sequence violating a precondition, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// A certified truncation could not reach the requested tolerance.
class TruncationError : public Error {
public:
    explicit TruncationError(const std::string& what) : Error(what) {}
};

// Evaluation at (or too close to) a pole / zero of a log-derivative.
class PoleError : public Error {
public:
    explicit PoleError(const std::string& what) : Error(what) {}
};

// Contour-based zero counting: contour passes too close to a solution,
// or the quadrature refuses to settle near an integer.
class QuadratureError : public Error {
public:
    explicit QuadratureError(const std::string& what) : Error(what) {}
};

// An intermediate value of the conformal chain left its recorded region,
// or no square-root branch candidate lands in the target region.
class BranchError : public Error {
public:
    explicit BranchError(const std::string& what) : Error(what) {}
};

} // namespace slitdisk
