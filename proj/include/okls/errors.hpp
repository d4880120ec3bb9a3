#pragma once

#include <stdexcept>
#include <string>

namespace okls {

// Every failure mode gets a named kind so callers (and the CLI exit-code
// mapping) can react without parsing messages.
enum class ErrorKind {
    NotALattice,
    NotGraded,
    NotGeometric,
    NotComparable,
    NotInterior,
    HostMismatch,
    DegreeExceedsRank,
    KernelCheckFailed,
    RecursionInconsistent,
    ELVerificationFailed,
    LoopCapExceeded,
    CharacterizationMismatch,
    SubcomplexViolation,
    DSquareNonzero,
    ConcentrationFailure,
    SizeGuardExceeded,
    InvalidInput,
};

inline const char* error_kind_name(ErrorKind k)
{
    switch (k) {
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::NotGeometric: return "NotGeometric";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::NotInterior: return "NotInterior";
    case ErrorKind::HostMismatch: return "HostMismatch";
    case ErrorKind::DegreeExceedsRank: return "DegreeExceedsRank";
    case ErrorKind::KernelCheckFailed: return "KernelCheckFailed";
    case ErrorKind::RecursionInconsistent: return "RecursionInconsistent";
    case ErrorKind::ELVerificationFailed: return "ELVerificationFailed";
    case ErrorKind::LoopCapExceeded: return "LoopCapExceeded";
    case ErrorKind::CharacterizationMismatch: return "CharacterizationMismatch";
    case ErrorKind::SubcomplexViolation: return "SubcomplexViolation";
    case ErrorKind::DSquareNonzero: return "DSquareNonzero";
    case ErrorKind::ConcentrationFailure: return "ConcentrationFailure";
    case ErrorKind::SizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorKind::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind)
    {
    }
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

// Size guards. Exceeding a cap raises SizeGuardExceeded instead of degrading.
struct Caps {
    long max_elements = 500;
    long max_chains = 1000000;
    long rewrite_loop_cap = 100000;
    int el_verify_rank_cap = 5;
};

} // namespace okls
