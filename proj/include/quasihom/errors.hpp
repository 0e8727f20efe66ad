#pragma once

#include <stdexcept>
#include <string>

namespace qh {

// Error taxonomy shared by the library, the C API and the CLI.
// The numeric status values are part of the external contract:
//   0 ok, 1 parse/validation, 2 not contracting, 3 irrational spectrum,
//   4 not invariant / outside theorem reach, 5 internal invariant violation,
//   6 certificate verification failure.
enum class ErrorKind {
    Parse,
    BadInput,
    DimensionMismatch,
    NotContracting,
    SingularLinearPart,
    IrrationalSpectrum,
    NotInvariant,
    NotInImage,
    ZeroExtractedGenerator,
    EigenvalueNotInSpectrumImage,
    VerifyFailed,
    Internal,
};

int status_code(ErrorKind kind);
const char* kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }
    int status() const { return status_code(kind_); }

    // Pipeline stage that raised the error, filled in by the drivers.
    const std::string& stage() const { return stage_; }
    void set_stage(std::string stage) { stage_ = std::move(stage); }

private:
    ErrorKind kind_;
    std::string stage_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

inline void require(bool cond, ErrorKind kind, const std::string& message) {
    if (!cond) fail(kind, message);
}

}  // namespace qh
