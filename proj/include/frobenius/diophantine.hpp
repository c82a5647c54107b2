#pragma once
#ifndef FROBENIUS_DIOPHANTINE_HPP
#define FROBENIUS_DIOPHANTINE_HPP

#include <frobenius/arith.hpp>

#include <string>
#include <utility>
#include <vector>

namespace frobenius {

/// A validated pair of coin denominators: a, b >= 1 and gcd(a, b) == 1.
class CoinPair {
public:
    CoinPair(Int a, Int b) : a_(a), b_(b)
    {
        if (a < 1 || b < 1) {
            throw InvalidArgument("denominators must be positive, got (" + std::to_string(a) + ", " +
                                  std::to_string(b) + ")");
        }
        if (gcd(a, b) != 1) {
            throw InvalidArgument("denominators must be coprime, gcd(" + std::to_string(a) + ", " +
                                  std::to_string(b) + ") = " + std::to_string(gcd(a, b)));
        }
    }

    Int a() const noexcept { return a_; }
    Int b() const noexcept { return b_; }

    /// min(a, b) >= 2, the regime where gaps and a Frobenius number exist.
    bool nontrivial() const noexcept { return a_ >= 2 && b_ >= 2; }

    friend bool operator==(const CoinPair&, const CoinPair&) = default;

private:
    Int a_;
    Int b_;
};

/// A non-negative witness (x, y) of a*x + b*y = d.
struct Representation {
    Int x = 0;
    Int y = 0;

    friend bool operator==(const Representation&, const Representation&) = default;
    friend auto operator<=>(const Representation&, const Representation&) = default;
};

/// An integer point, not necessarily non-negative.
struct IntPair {
    Int x = 0;
    Int y = 0;

    friend bool operator==(const IntPair&, const IntPair&) = default;
    friend auto operator<=>(const IntPair&, const IntPair&) = default;
};

/// All integer solutions of a*x + b*y = d, held as one anchor (x0, y0). Member
/// k of the family is (x0 - k*b, y0 + k*a).
struct SolutionFamily {
    CoinPair pair;
    Int d;
    Int x0;
    Int y0;
};

namespace detail {

inline void require_non_negative(Int d)
{
    if (d < 0) {
        throw InvalidArgument("d must be non-negative, got " + std::to_string(d));
    }
}

/// (lhs * rhs) mod m without leaving 64 bits; operands in [0, m).
inline Int mul_mod(Int lhs, Int rhs, Int m)
{
    return static_cast<Int>((static_cast<__int128>(lhs) * rhs) % m);
}

}  // namespace detail

/// Anchor (d*x', d*y') from the canonical Bezout certificate of (a, b).
inline SolutionFamily solve_any(const CoinPair& pair, Int d)
{
    detail::require_non_negative(d);
    const auto cert = extended_gcd(pair.a(), pair.b());
    return SolutionFamily{pair, d, checked_mul(d, cert.x_prime), checked_mul(d, cert.y_prime)};
}

inline IntPair family_member(const SolutionFamily& family, Int k)
{
    return IntPair{checked_sub(family.x0, checked_mul(k, family.pair.b())),
                   checked_add(family.y0, checked_mul(k, family.pair.a()))};
}

/// The unique solution (x_d, y_d) with 0 <= x_d < b, computed as
/// x_d = (d mod b) * a^{-1} mod b. Its y_d is negative exactly when d has no
/// non-negative representation.
inline IntPair canonical_solution(const CoinPair& pair, Int d)
{
    detail::require_non_negative(d);
    const Int a = pair.a();
    const Int b = pair.b();
    if (b == 1) {
        return IntPair{0, d};
    }
    const Int x = detail::mul_mod(d % b, mod_inverse(a % b, b), b);
    // a*x < a*b may exceed 64 bits even though y itself always fits.
    const __int128 y = (static_cast<__int128>(d) - static_cast<__int128>(a) * x) / b;
    if (y > std::numeric_limits<Int>::max() || y < std::numeric_limits<Int>::min()) {
        throw OverflowError("canonical y for d = " + std::to_string(d) + " exceeds the integer width");
    }
    return IntPair{x, static_cast<Int>(y)};
}

/// Every non-negative solution, ascending in x.
inline std::vector<Representation> nonneg_solutions(const CoinPair& pair, Int d)
{
    const auto [x, y] = canonical_solution(pair, d);
    std::vector<Representation> out;
    if (y < 0) {
        return out;
    }
    const Int last = y / pair.a();
    out.reserve(static_cast<std::size_t>(last) + 1);
    for (Int t = 0; t <= last; ++t) {
        out.push_back(Representation{checked_add(x, checked_mul(t, pair.b())), y - t * pair.a()});
    }
    return out;
}

}  // namespace frobenius

#endif  // FROBENIUS_DIOPHANTINE_HPP
