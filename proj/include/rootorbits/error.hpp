#pragma once

#include <stdexcept>
#include <string>

namespace rootorbits {

// Error codes mirror the failure modes of the public operations.
enum class Err {
    NotGCM,
    NotSymmetrizable,
    UnknownLabel,
    RankOutOfRange,
    InvalidAffChoice,
    NotAffine,
    NotFiniteType,
    FiniteType,
    NotIrreducible,
    NotPermutation,
    NotInitialOrFinal,
    NotTypeACycle,
    NotRealRoot,
    BoundTooSmall,
    WindowExceeded,
    WindowTooSmall,
    SolveFailed,
    OrderBoundExceeded,
    NotProportional,
    NotNegative,
    OrderingFailed,
    KappaNotFound,
    RankNot3,
    Overflow,
    BadInput,
};

const char* err_name(Err code);

class RootError : public std::runtime_error {
public:
    RootError(Err code, const std::string& msg)
        : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

    Err code() const noexcept { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) {
    throw RootError(code, msg);
}

} // namespace rootorbits
