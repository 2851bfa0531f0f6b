// Copyright (c) 2026 the spinpacket authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef SPINPACKET_ERRORS_HPP
#define SPINPACKET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spinpacket {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Violated precondition or argument outside an operation's domain.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

enum class ValidationFailure {
    NotPrimePower,
    BadDegree,
    NotMonic,
    FunctionalEquationFailed,
    RootsOffWeilCircle,
};

// Rejection of a candidate Weil polynomial, with a witness for the
// failing check.
class ValidationError : public Error {
public:
    ValidationError(ValidationFailure kind, const std::string& what,
                    long witness_index = -1, long roots_found = -1,
                    long roots_expected = -1)
        : Error(what),
          kind_(kind),
          witness_index_(witness_index),
          roots_found_(roots_found),
          roots_expected_(roots_expected) {}

    ValidationFailure kind() const { return kind_; }
    // For FunctionalEquationFailed: the first index k with a_{g-k} != q^k a_{g+k}.
    long witness_index() const { return witness_index_; }
    // For RootsOffWeilCircle: Sturm counts.
    long roots_found() const { return roots_found_; }
    long roots_expected() const { return roots_expected_; }

private:
    ValidationFailure kind_;
    long witness_index_;
    long roots_found_;
    long roots_expected_;
};

const char* validation_failure_name(ValidationFailure kind);

// Operation requires an isotypic class.
class NotIsotypicError : public Error {
public:
    explicit NotIsotypicError(const std::string& what) : Error(what) {}
};

// A guaranteed internal identity failed; indicates a bug, not bad input.
class InternalContradiction : public Error {
public:
    explicit InternalContradiction(const std::string& what) : Error(what) {}
};

// Floating-point routine failed to converge or to match within tolerance.
class NumericalFailure : public Error {
public:
    explicit NumericalFailure(const std::string& what, double residual = 0.0)
        : Error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

// Brute-force Weyl enumeration refused (budget 2^g g!).
class RankTooLarge : public Error {
public:
    explicit RankTooLarge(const std::string& what) : Error(what) {}
};

}  // namespace spinpacket

#endif  // SPINPACKET_ERRORS_HPP
