#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mmipm {

// Input matrix has a positive off-diagonal entry, so it cannot be an M-matrix.
class PositiveOffDiagonalError : public std::runtime_error {
public:
    PositiveOffDiagonalError(std::size_t i, std::size_t j, double value)
        : std::runtime_error("positive off-diagonal entry at (" + std::to_string(i) + ", " +
                             std::to_string(j) + "): " + std::to_string(value)),
          row(i), col(j) {}
    std::size_t row;
    std::size_t col;
};

class NotPositiveDefiniteError : public std::runtime_error {
public:
    explicit NotPositiveDefiniteError(const std::string& what) : std::runtime_error(what) {}
};

class CertificationFailedError : public std::runtime_error {
public:
    explicit CertificationFailedError(const std::string& what) : std::runtime_error(what) {}
};

// A corrector step was attempted outside its region of validity. Signals a
// step-size bug upstream; iterates are never clamped to hide it.
class CorrectabilityViolatedError : public std::runtime_error {
public:
    explicit CorrectabilityViolatedError(const std::string& what) : std::runtime_error(what) {}
};

class MaxCorrectorsExceededError : public std::runtime_error {
public:
    explicit MaxCorrectorsExceededError(const std::string& what) : std::runtime_error(what) {}
};

class LineSearchFailedError : public std::runtime_error {
public:
    explicit LineSearchFailedError(const std::string& what) : std::runtime_error(what) {}
};

class DualInfeasibleError : public std::runtime_error {
public:
    DualInfeasibleError(std::size_t i, double value)
        : std::runtime_error("dual slack non-positive at index " + std::to_string(i) + ": " +
                             std::to_string(value)),
          index(i) {}
    std::size_t index;
};

class NonFiniteIterateError : public std::runtime_error {
public:
    explicit NonFiniteIterateError(const std::string& what) : std::runtime_error(what) {}
};

class TooLargeError : public std::runtime_error {
public:
    explicit TooLargeError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown in assert-level diagnostics when a runtime lemma check breaches its
// tolerance.
class LemmaViolationError : public std::runtime_error {
public:
    LemmaViolationError(const std::string& lemma_id, double magnitude)
        : std::runtime_error("lemma check failed: " + lemma_id +
                             " violation=" + std::to_string(magnitude)),
          lemma(lemma_id), magnitude(magnitude) {}
    std::string lemma;
    double magnitude;
};

}  // namespace mmipm
