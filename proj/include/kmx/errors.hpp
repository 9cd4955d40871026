#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kmx {

// Base class for all library errors. Every throw carries a machine-readable
// kind() used by the CLI to pick exit codes and report reasons.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

class NotSymmetricError : public Error {
public:
    explicit NotSymmetricError(const std::string& what = "matrix is not symmetric")
        : Error("NotSymmetric", what) {}
};

class SingularMatrixError : public Error {
public:
    explicit SingularMatrixError(const std::string& what = "matrix is singular")
        : Error("SingularMatrix", what) {}
};

class OddDiagonalError : public Error {
public:
    explicit OddDiagonalError(std::size_t index)
        : Error("OddDiagonal",
                "diagonal entry at index " + std::to_string(index) + " is odd"),
          index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

class DegenerateError : public Error {
public:
    explicit DegenerateError(const std::string& what = "form is degenerate (det = 0)")
        : Error("Degenerate", what) {}
};

class DimensionMismatchError : public Error {
public:
    explicit DimensionMismatchError(const std::string& what = "dimension mismatch")
        : Error("DimensionMismatch", what) {}
};

class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& what = "capacity exceeded")
        : Error("CapacityExceeded", what) {}
};

class NotLagrangianError : public Error {
public:
    explicit NotLagrangianError(const std::string& what = "subspace is not Lagrangian")
        : Error("NotLagrangian", what) {}
};

// Signals that two supposedly-equal internal computation routes disagreed.
class InternalMismatchError : public Error {
public:
    explicit InternalMismatchError(const std::string& what)
        : Error("InternalMismatch", what) {}
};

class NoVacuumRowError : public Error {
public:
    explicit NoVacuumRowError(const std::string& what = "no constant positive row in S")
        : Error("NoVacuumRow", what) {}
};

class AmbiguousVacuumError : public Error {
public:
    explicit AmbiguousVacuumError(const std::string& what = "more than one constant row in S")
        : Error("AmbiguousVacuum", what) {}
};

class NotClosedError : public Error {
public:
    explicit NotClosedError(const std::string& what)
        : Error("NotClosed", what) {}
};

class PolarizationViolationError : public Error {
public:
    explicit PolarizationViolationError(const std::string& what)
        : Error("PolarizationViolation", what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

}  // namespace kmx
