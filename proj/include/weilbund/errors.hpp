#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace weilbund {

// Base class for all library errors. `code()` is a stable machine-readable
// tag used by the CLI for one-line error reporting.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& message)
        : Error("dimension-mismatch", message) {}
};

class VariableCountMismatch : public Error {
public:
    explicit VariableCountMismatch(const std::string& message)
        : Error("variable-count-mismatch", message) {}
};

class RingMismatch : public Error {
public:
    explicit RingMismatch(const std::string& message)
        : Error("ring-mismatch", message) {}
};

class MissingAssignment : public Error {
public:
    explicit MissingAssignment(const std::string& message)
        : Error("missing-assignment", message) {}
};

class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(const std::string& message)
        : Error("index-out-of-range", message) {}
};

class InvalidPoisson : public Error {
public:
    explicit InvalidPoisson(const std::string& message)
        : Error("invalid-poisson", message) {}
};

class NotAHomomorphism : public Error {
public:
    NotAHomomorphism(const std::string& message, int alpha, int beta)
        : Error("not-a-homomorphism", message), alpha_(alpha), beta_(beta) {}

    int alpha() const { return alpha_; }
    int beta() const { return beta_; }

private:
    int alpha_;
    int beta_;
};

// Frobenius form singular: carries a basis of the kernel as witness
// (each kernel vector given as coefficients in the algebra basis).
class DegenerateForm : public Error {
public:
    DegenerateForm(const std::string& message, std::vector<std::string> kernel)
        : Error("degenerate-form", message), kernel_(std::move(kernel)) {}

    const std::vector<std::string>& kernel_witness() const { return kernel_; }

private:
    std::vector<std::string> kernel_;
};

class InhomogeneousStructure : public Error {
public:
    explicit InhomogeneousStructure(const std::string& message)
        : Error("inhomogeneous-structure", message) {}
};

class MissingIngredient : public Error {
public:
    explicit MissingIngredient(const std::string& message)
        : Error("missing-ingredient", message) {}
};

class UnknownClaim : public Error {
public:
    explicit UnknownClaim(const std::string& message)
        : Error("unknown-claim", message) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& message)
        : Error("config", message) {}
};

// Parse failure for the polynomial grammar: 0-based offset into the input
// plus the token classes that would have been acceptable there.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t offset,
               std::vector<std::string> expected)
        : Error("parse", message), offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

}  // namespace weilbund
