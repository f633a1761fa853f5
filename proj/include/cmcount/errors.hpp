// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#ifndef CMCOUNT_ERRORS_HPP
#define CMCOUNT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cmcount {

enum class ErrorKind {
    InvalidArgument,  // malformed input (bad discriminant, even modulus, ...)
    Precondition,     // well-formed input outside an operation's domain
    NoSolution,       // the requested object does not exist (inert prime, no root, ...)
    Inconsistent,     // an asserted identity failed; indicates wrong input data or a bug
    Resource,         // a configured bound was exceeded
    Domain            // numeric domain error (Im tau <= 0)
};

// Finer classification for NoSolution / Precondition payloads.
enum class Reason {
    None,
    Inert,
    Ramified,
    NonPrincipal,
    NonResidue,
    NoRoot,
    Supersingular,
    Infeasible,
    BadReduction,
    UnitGroup,
    ExcludedDiscriminant
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &what, Reason reason = Reason::None)
        : std::runtime_error(what), kind_(kind), reason_(reason)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }
    Reason reason() const noexcept { return reason_; }

private:
    ErrorKind kind_;
    Reason reason_;
};

inline const char *to_string(Reason r)
{
    switch (r) {
    case Reason::None: return "none";
    case Reason::Inert: return "inert";
    case Reason::Ramified: return "ramified";
    case Reason::NonPrincipal: return "non-principal";
    case Reason::NonResidue: return "nonresidue";
    case Reason::NoRoot: return "no-root";
    case Reason::Supersingular: return "supersingular";
    case Reason::Infeasible: return "infeasible";
    case Reason::BadReduction: return "bad-reduction";
    case Reason::UnitGroup: return "unit-group";
    case Reason::ExcludedDiscriminant: return "excluded-discriminant";
    }
    return "unknown";
}

inline const char *to_string(ErrorKind k)
{
    switch (k) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::NoSolution: return "no-solution";
    case ErrorKind::Inconsistent: return "internal-inconsistency";
    case ErrorKind::Resource: return "resource";
    case ErrorKind::Domain: return "domain";
    }
    return "unknown";
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string &what, Reason reason = Reason::None)
{
    throw Error(kind, what, reason);
}

} // namespace cmcount

#endif
