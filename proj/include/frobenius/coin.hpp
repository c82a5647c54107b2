#pragma once
#ifndef FROBENIUS_COIN_HPP
#define FROBENIUS_COIN_HPP

#include <frobenius/diophantine.hpp>

#include <optional>
#include <vector>

namespace frobenius {

/// Outcome of a membership query. Exactly one of `witness` / `certificate`
/// is engaged: a non-negative representation, or the canonical solution
/// (x_d, y_d) with y_d < 0, which rules out every non-negative one because
/// x_d is already the least non-negative x on the line.
struct MembershipVerdict {
    Int d = 0;
    bool representable = false;
    std::optional<Representation> witness;
    std::optional<IntPair> certificate;
};

/// a*b, or nullopt when the product leaves the integer width (then every
/// admissible d is below it).
inline std::optional<Int> checked_product(const CoinPair& pair)
{
    Int out{};
    if (__builtin_mul_overflow(pair.a(), pair.b(), &out)) {
        return std::nullopt;
    }
    return out;
}

inline MembershipVerdict is_representable(const CoinPair& pair, Int d)
{
    const IntPair canonical = canonical_solution(pair, d);
    const auto ab = checked_product(pair);
    const bool beyond_ab = ab.has_value() && d >= *ab;

    MembershipVerdict verdict;
    verdict.d = d;
    if (beyond_ab || canonical.y >= 0) {
        verdict.representable = true;
        verdict.witness = Representation{canonical.x, canonical.y};
    } else {
        verdict.certificate = canonical;
    }
    return verdict;
}

/// a*b - a - b, or nullopt when min(a, b) == 1 (nothing is unrepresentable).
inline std::optional<Int> frobenius_number(const CoinPair& pair)
{
    if (!pair.nontrivial()) {
        return std::nullopt;
    }
    return checked_sub(checked_sub(checked_mul(pair.a(), pair.b()), pair.a()), pair.b());
}

/// Sorted gap set, by running the membership test over 1..f.
inline std::vector<Int> gaps(const CoinPair& pair)
{
    std::vector<Int> out;
    const auto f = frobenius_number(pair);
    if (!f) {
        return out;
    }
    for (Int d = 1; d <= *f; ++d) {
        if (!is_representable(pair, d).representable) {
            out.push_back(d);
        }
    }
    return out;
}

/// Number of non-negative (x, y) with a*x + b*y = d: floor(y_d / a) + 1 when
/// the canonical y_d is non-negative, otherwise zero.
inline Int count_representations(const CoinPair& pair, Int d)
{
    const IntPair canonical = canonical_solution(pair, d);
    if (canonical.y < 0) {
        return 0;
    }
    return canonical.y / pair.a() + 1;
}

}  // namespace frobenius

#endif  // FROBENIUS_COIN_HPP
