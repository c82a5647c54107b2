#pragma once
#ifndef FROBENIUS_ARITH_HPP
#define FROBENIUS_ARITH_HPP

#include <frobenius/errors.hpp>

#include <concepts>
#include <cstdint>
#include <limits>
#include <string>

namespace frobenius {

/// Integer type used by every public operation outside this header.
using Int = std::int64_t;

//=#=#==#==#===============+=+=+=+=++=++++++++++++++-++-+--+-+----+---------------
// Overflow-checked primitives. Every failure is an OverflowError, never a
// wrapped value.

template <std::signed_integral T>
constexpr T checked_add(T lhs, T rhs)
{
    T out{};
    if (__builtin_add_overflow(lhs, rhs, &out)) {
        throw OverflowError("integer overflow in " + std::to_string(lhs) + " + " + std::to_string(rhs));
    }
    return out;
}

template <std::signed_integral T>
constexpr T checked_sub(T lhs, T rhs)
{
    T out{};
    if (__builtin_sub_overflow(lhs, rhs, &out)) {
        throw OverflowError("integer overflow in " + std::to_string(lhs) + " - " + std::to_string(rhs));
    }
    return out;
}

template <std::signed_integral T>
constexpr T checked_mul(T lhs, T rhs)
{
    T out{};
    if (__builtin_mul_overflow(lhs, rhs, &out)) {
        throw OverflowError("integer overflow in " + std::to_string(lhs) + " * " + std::to_string(rhs));
    }
    return out;
}

template <std::signed_integral T>
constexpr T checked_neg(T v)
{
    return checked_sub(T{0}, v);
}

template <std::signed_integral T>
constexpr T checked_abs(T v)
{
    return v < 0 ? checked_neg(v) : v;
}

/// Rejects the one value whose magnitude exceeds numeric_limits<T>::max().
template <std::signed_integral T>
constexpr void require_in_width(T v)
{
    if (v == std::numeric_limits<T>::min()) {
        throw OverflowError("magnitude of " + std::to_string(v) + " exceeds the supported integer width");
    }
}

/// Floor division; `den` must be non-zero.
template <std::signed_integral T>
constexpr T floor_div(T num, T den)
{
    if (num == std::numeric_limits<T>::min() && den == -1) {
        throw OverflowError("integer overflow in floor division");
    }
    T q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) {
        --q;
    }
    return q;
}

/// Ceiling division; `den` must be non-zero.
template <std::signed_integral T>
constexpr T ceil_div(T num, T den)
{
    if (num == std::numeric_limits<T>::min() && den == -1) {
        throw OverflowError("integer overflow in ceiling division");
    }
    T q = num / den;
    if ((num % den != 0) && ((num < 0) == (den < 0))) {
        ++q;
    }
    return q;
}

/// Least non-negative residue of `v` modulo `m` (m > 0).
template <std::signed_integral T>
constexpr T floor_mod(T v, T m)
{
    T r = v % m;
    return r < 0 ? r + m : r;
}

//=#=#==#==#===============+=+=+=+=++=++++++++++++++-++-+--+-+----+---------------

/// Non-negative greatest common divisor; gcd(0, 0) == 0.
template <std::signed_integral T>
constexpr T gcd(T u, T v)
{
    u = checked_abs(u);
    v = checked_abs(v);
    while (v != 0) {
        T r = u % v;
        u = v;
        v = r;
    }
    return u;
}

/// (g, x', y') with a*x' + b*y' = g = gcd(a, b).
///
/// The coefficients are canonical: among the admissible x' + k*(b/g) the one
/// of least absolute value is kept, the positive one on a tie. When b == 0
/// the family is a single point and x' = sign(a).
template <std::signed_integral T>
struct BezoutCertificate {
    T g{};
    T x_prime{};
    T y_prime{};

    friend constexpr bool operator==(const BezoutCertificate&, const BezoutCertificate&) = default;
};

template <std::signed_integral T>
constexpr BezoutCertificate<T> extended_gcd(T a, T b)
{
    if (a == 0 && b == 0) {
        throw BothZero("extended_gcd(0, 0) has no certificate: gcd(0, 0) = 0");
    }
    require_in_width(a);
    require_in_width(b);

    // Iterative Euclid tracking the coefficient rows. All magnitudes stay
    // below max(|a|, |b|) so the checked operations are a formality here.
    T old_r = a, r = b;
    T old_s = 1, s = 0;
    T old_t = 0, t = 1;
    while (r != 0) {
        const T q = old_r / r;
        T next = checked_sub(old_r, checked_mul(q, r));
        old_r = r;
        r = next;
        next = checked_sub(old_s, checked_mul(q, s));
        old_s = s;
        s = next;
        next = checked_sub(old_t, checked_mul(q, t));
        old_t = t;
        t = next;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = checked_neg(old_s);
        old_t = checked_neg(old_t);
    }

    BezoutCertificate<T> cert{old_r, old_s, old_t};
    if (b == 0) {
        return cert;
    }

    // Shift along the solution family (x + j*(b/g), y - j*(a/g)).
    const T step = b / cert.g;
    const T period = step < 0 ? -step : step;
    const T residue = floor_mod(cert.x_prime, period);
    const T canonical = (period - residue < residue) ? residue - period : residue;
    const T j = checked_sub(canonical, cert.x_prime) / step;
    cert.y_prime = checked_sub(cert.y_prime, checked_mul(j, a / cert.g));
    cert.x_prime = canonical;
    return cert;
}

/// Inverse of `a` modulo `m`, in [0, m). m == 1 yields 0.
template <std::signed_integral T>
constexpr T mod_inverse(T a, T m)
{
    if (m <= 0) {
        throw InvalidArgument("mod_inverse modulus must be positive, got " + std::to_string(m));
    }
    require_in_width(a);
    if (m == 1) {
        return 0;
    }
    const T reduced = floor_mod(a, m);
    const auto cert = extended_gcd(reduced, m);
    if (cert.g != 1) {
        throw NotInvertible(std::to_string(a) + " is not invertible modulo " + std::to_string(m) +
                            " (gcd " + std::to_string(cert.g) + ")");
    }
    return floor_mod(cert.x_prime, m);
}

}  // namespace frobenius

#endif  // FROBENIUS_ARITH_HPP
