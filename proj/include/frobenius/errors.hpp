#pragma once
#ifndef FROBENIUS_ERRORS_HPP
#define FROBENIUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace frobenius {

enum class ErrorKind {
    InvalidArgument,     // precondition on an input value (non-coprime pair, negative d, ...)
    BothZero,            // extended_gcd(0, 0)
    NotInvertible,       // mod_inverse with gcd(a, m) != 1
    Overflow,            // a result or intermediate left the 64-bit range
    DegenerateInput,     // a or b equal to 1 where the construction needs a, b >= 2
    DegeneratePolygon,   // fewer than 3 vertices, repeated vertex, or zero area
    SelfIntersecting,    // polygon edges cross
    BijectionViolation,  // interior points of the parallelogram do not biject with the lines
    ChainBroken,         // neither minimal unit expression keeps the chain non-negative
};

inline const char* to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::Overflow: return "OverflowError";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::DegeneratePolygon: return "DegeneratePolygon";
    case ErrorKind::SelfIntersecting: return "SelfIntersecting";
    case ErrorKind::BijectionViolation: return "BijectionViolation";
    case ErrorKind::ChainBroken: return "ChainBroken";
    }
    return "Unknown";
}

/// Base of every exception thrown by the library. `kind()` lets callers such
/// as the CLI map failures onto exit codes without a catch clause per type.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// True for failures that mean a mathematical invariant was falsified,
    /// as opposed to bad input or exhausted integer width.
    bool is_invariant_violation() const noexcept
    {
        return kind_ == ErrorKind::BijectionViolation || kind_ == ErrorKind::ChainBroken;
    }

private:
    ErrorKind kind_;
};

template <ErrorKind K>
class KindedError : public Error {
public:
    explicit KindedError(const std::string& what) : Error(K, what) {}
};

using InvalidArgument = KindedError<ErrorKind::InvalidArgument>;
using BothZero = KindedError<ErrorKind::BothZero>;
using NotInvertible = KindedError<ErrorKind::NotInvertible>;
using OverflowError = KindedError<ErrorKind::Overflow>;
using DegenerateInput = KindedError<ErrorKind::DegenerateInput>;
using DegeneratePolygon = KindedError<ErrorKind::DegeneratePolygon>;
using SelfIntersecting = KindedError<ErrorKind::SelfIntersecting>;
using BijectionViolation = KindedError<ErrorKind::BijectionViolation>;
using ChainBroken = KindedError<ErrorKind::ChainBroken>;

}  // namespace frobenius

#endif  // FROBENIUS_ERRORS_HPP
