#pragma once
#ifndef FROBENIUS_ORACLE_HPP
#define FROBENIUS_ORACLE_HPP

// Brute-force references for cross-checking the fast paths. Nothing here
// calls into diophantine/coin beyond the CoinPair type; keep it that way.

#include <frobenius/diophantine.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace frobenius::oracle {

/// Scans x = 0..d/a for a non-negative integer y.
inline bool oracle_representable(const CoinPair& pair, Int d)
{
    for (Int x = 0; x * pair.a() <= d; ++x) {
        if ((d - x * pair.a()) % pair.b() == 0) {
            return true;
        }
    }
    return false;
}

inline Int oracle_count(const CoinPair& pair, Int d)
{
    Int count = 0;
    for (Int x = 0; x * pair.a() <= d; ++x) {
        if ((d - x * pair.a()) % pair.b() == 0) {
            ++count;
        }
    }
    return count;
}

namespace detail {

// reachable[d] for 0 <= d <= bound: mark 0, then propagate +a and +b.
inline std::vector<bool> reachability_sieve(const CoinPair& pair, Int bound)
{
    const auto n = static_cast<std::size_t>(bound) + 1;
    std::vector<bool> reachable(n, false);
    reachable[0] = true;
    const auto a = static_cast<std::size_t>(pair.a());
    const auto b = static_cast<std::size_t>(pair.b());
    for (std::size_t d = 0; d < n; ++d) {
        if (!reachable[d]) {
            continue;
        }
        if (d + a < n) {
            reachable[d + a] = true;
        }
        if (d + b < n) {
            reachable[d + b] = true;
        }
    }
    return reachable;
}

}  // namespace detail

/// Every unreachable d in [1, bound].
inline std::vector<Int> oracle_gaps(const CoinPair& pair, Int bound)
{
    if (bound < 1) {
        throw InvalidArgument("oracle_gaps bound must be positive, got " + std::to_string(bound));
    }
    const auto reachable = detail::reachability_sieve(pair, bound);
    std::vector<Int> out;
    for (Int d = 1; d <= bound; ++d) {
        if (!reachable[static_cast<std::size_t>(d)]) {
            out.push_back(d);
        }
    }
    return out;
}

/// Largest unreachable d below a*b, or nullopt if there is none.
inline std::optional<Int> oracle_frobenius(const CoinPair& pair)
{
    const Int ab = pair.a() * pair.b();
    const auto reachable = detail::reachability_sieve(pair, ab);
    for (Int d = ab - 1; d >= 1; --d) {
        if (!reachable[static_cast<std::size_t>(d)]) {
            return d;
        }
    }
    return std::nullopt;
}

}  // namespace frobenius::oracle

#endif  // FROBENIUS_ORACLE_HPP
