#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace kseg {

// Base of all library errors. `code()` is a stable machine-readable
// identifier; the CLI prints "error: CODE: message" from it.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& msg) : Error("INVALID_ARGUMENT", msg) {}
};

struct SignatureMismatch : Error {
    explicit SignatureMismatch(const std::string& msg) : Error("SIGNATURE_MISMATCH", msg) {}
};

struct GradeOutOfRange : Error {
    explicit GradeOutOfRange(const std::string& msg) : Error("GRADE_OUT_OF_RANGE", msg) {}
};

struct WrongIsomorphismClass : Error {
    explicit WrongIsomorphismClass(const std::string& msg)
        : Error("WRONG_ISOMORPHISM_CLASS", msg) {}
};

struct MaskContainsGeneratorOne : Error {
    explicit MaskContainsGeneratorOne(const std::string& msg)
        : Error("MASK_CONTAINS_GENERATOR_ONE", msg) {}
};

struct KindMismatch : Error {
    explicit KindMismatch(const std::string& msg) : Error("KIND_MISMATCH", msg) {}
};

struct NotInvertible : Error {
    NotInvertible(const std::string& msg, std::vector<std::size_t> vanishing)
        : Error("NOT_INVERTIBLE", msg), vanishing_components(std::move(vanishing)) {}

    // Indices of spectral components below the singularity tolerance.
    std::vector<std::size_t> vanishing_components;
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& msg) : Error("TOO_LARGE", msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error("DIMENSION_MISMATCH", msg) {}
};

struct SyntaxError : Error {
    SyntaxError(const std::string& msg, std::size_t position)
        : Error("SYNTAX_ERROR", msg + " (at position " + std::to_string(position) + ")"),
          position(position) {}

    std::size_t position;
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& msg) : Error("INDEX_OUT_OF_RANGE", msg) {}
};

struct NonCanonicalBlade : Error {
    explicit NonCanonicalBlade(const std::string& msg) : Error("NON_CANONICAL_BLADE", msg) {}
};

struct SchemaError : Error {
    explicit SchemaError(const std::string& msg) : Error("SCHEMA_ERROR", msg) {}
};

} // namespace kseg
