#pragma once
#ifndef FROBENIUS_INDUCTIVE_HPP
#define FROBENIUS_INDUCTIVE_HPP

#include <frobenius/coin.hpp>

#include <string>
#include <vector>

namespace frobenius {

/// The two expressions of 1 closest to zero in the family a*x + b*y = 1:
/// `first` has x in (0, b) and y < 0, `second` = first shifted by one step,
/// x in (-b, 0) and y > 0.
struct MinimalUnitPair {
    IntPair first;
    IntPair second;

    friend bool operator==(const MinimalUnitPair&, const MinimalUnitPair&) = default;
};

enum class UnitExpression { First, Second };

inline const char* to_string(UnitExpression e) noexcept
{
    return e == UnitExpression::First ? "first" : "second";
}

struct ChainStep {
    Int d = 0;
    Representation representation;
    UnitExpression added = UnitExpression::First;

    friend bool operator==(const ChainStep&, const ChainStep&) = default;
};

/// Largest d_max accepted is a*b + kChainSlack.
inline constexpr Int kChainSlack = Int{1'000'000};

namespace detail {

inline void require_nontrivial(const CoinPair& pair, const char* what)
{
    if (!pair.nontrivial()) {
        throw DegenerateInput(std::string(what) + " needs a, b >= 2, got (" + std::to_string(pair.a()) + ", " +
                              std::to_string(pair.b()) + ")");
    }
}

}  // namespace detail

inline MinimalUnitPair minimal_unit_expressions(const CoinPair& pair)
{
    detail::require_nontrivial(pair, "minimal unit expressions");
    const Int a = pair.a();
    const Int b = pair.b();
    const Int x1 = mod_inverse(a % b, b);
    // 1 - a*x1 is a multiple of b; evaluate it wide since a*x1 < a*b.
    const Int y1 = static_cast<Int>((1 - static_cast<__int128>(a) * x1) / b);
    return MinimalUnitPair{IntPair{x1, y1}, IntPair{x1 - b, checked_add(y1, a)}};
}

/// True iff ab - a - b has canonical solution (b - 1, -1), which proves it
/// is not representable.
inline bool verify_base_gap(const CoinPair& pair)
{
    detail::require_nontrivial(pair, "the base gap");
    const auto f = frobenius_number(pair);
    return canonical_solution(pair, *f) == IntPair{pair.b() - 1, -1};
}

/// Representations of every d in [ab - a - b + 1, d_max], each obtained from
/// its predecessor by adding a minimal unit expression, starting from
/// ab - a - b = a*(b - 1) + b*(-1). When both expressions keep the
/// coefficients non-negative, First is taken.
inline std::vector<ChainStep> inductive_chain(const CoinPair& pair, Int d_max)
{
    detail::require_nontrivial(pair, "the inductive chain");
    const Int a = pair.a();
    const Int b = pair.b();
    const Int f = *frobenius_number(pair);
    if (d_max < f + 1) {
        throw InvalidArgument("d_max must be at least " + std::to_string(f + 1) + ", got " + std::to_string(d_max));
    }
    if (d_max > checked_add(checked_mul(a, b), kChainSlack)) {
        throw InvalidArgument("d_max may exceed ab by at most " + std::to_string(kChainSlack));
    }

    const MinimalUnitPair units = minimal_unit_expressions(pair);
    const auto add = [](const IntPair& p, const IntPair& unit) {
        return IntPair{checked_add(p.x, unit.x), checked_add(p.y, unit.y)};
    };
    const auto nonneg = [](const IntPair& p) { return p.x >= 0 && p.y >= 0; };

    std::vector<ChainStep> chain;
    chain.reserve(static_cast<std::size_t>(d_max - f));

    IntPair current{b - 1, -1};
    // At the base y = -1 and y1 < 0, so adding First can never work.
    if (nonneg(add(current, units.first))) {
        throw ChainBroken("the first expression unexpectedly repairs the base (" + std::to_string(b - 1) + ", -1)");
    }
    for (Int d = f + 1; d <= d_max; ++d) {
        const IntPair via_first = add(current, units.first);
        const IntPair via_second = add(current, units.second);
        ChainStep step;
        step.d = d;
        if (nonneg(via_first)) {
            current = via_first;
            step.added = UnitExpression::First;
        } else if (nonneg(via_second)) {
            current = via_second;
            step.added = UnitExpression::Second;
        } else {
            throw ChainBroken("neither minimal unit expression keeps (" + std::to_string(current.x) + ", " +
                              std::to_string(current.y) + ") non-negative at d = " + std::to_string(d));
        }
        step.representation = Representation{current.x, current.y};
        chain.push_back(step);
    }
    return chain;
}

}  // namespace frobenius

#endif  // FROBENIUS_INDUCTIVE_HPP
