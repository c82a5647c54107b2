#pragma once
#ifndef FROBENIUS_GEOMETRY_HPP
#define FROBENIUS_GEOMETRY_HPP

#include <frobenius/coin.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace frobenius {

using LatticePoint = IntPair;

/// The line a*x + b*y = d.
struct LatticeLine {
    CoinPair pair;
    Int d;
};

/// Exact rational in lowest terms with a positive denominator.
struct Rational {
    Int num = 0;
    Int den = 1;

    static Rational make(Int num, Int den)
    {
        if (den == 0) {
            throw InvalidArgument("rational with zero denominator");
        }
        require_in_width(num);
        require_in_width(den);
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const Int g = gcd(num, den);
        return g > 1 ? Rational{num / g, den / g} : Rational{num, den};
    }

    friend bool operator==(const Rational&, const Rational&) = default;
};

struct RationalPoint {
    Rational x;
    Rational y;

    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

/// Where L_d meets the two positive semi-axes: (d/a, 0) and (0, d/b).
struct SegmentEndpoints {
    RationalPoint on_x_axis;
    RationalPoint on_y_axis;

    friend bool operator==(const SegmentEndpoints&, const SegmentEndpoints&) = default;
};

inline SegmentEndpoints segment_endpoints(const LatticeLine& line)
{
    detail::require_non_negative(line.d);
    return SegmentEndpoints{
        RationalPoint{Rational::make(line.d, line.pair.a()), Rational{0, 1}},
        RationalPoint{Rational{0, 1}, Rational::make(line.d, line.pair.b())},
    };
}

/// Lattice points of L_d with x, y >= 0, ascending in x.
///
/// Walks the k-interval [-y0/a, x0/b] of the anchor family rather than the
/// canonical residue, so it is an independent route to nonneg_solutions.
inline std::vector<LatticePoint> lattice_points_first_quadrant(const LatticeLine& line)
{
    const SolutionFamily family = solve_any(line.pair, line.d);
    const Int k_lo = ceil_div(checked_neg(family.y0), line.pair.a());
    const Int k_hi = floor_div(family.x0, line.pair.b());
    std::vector<LatticePoint> out;
    for (Int k = k_hi; k >= k_lo; --k) {
        out.push_back(family_member(family, k));
    }
    return out;
}

//=#=#==#==#===============+=+=+=+=++=++++++++++++++-++-+--+-+----+---------------

namespace detail {

// Twice the signed area of triangle (o, p, q); positive for a left turn.
inline __int128 cross(const LatticePoint& o, const LatticePoint& p, const LatticePoint& q)
{
    return static_cast<__int128>(p.x - o.x) * (q.y - o.y) - static_cast<__int128>(p.y - o.y) * (q.x - o.x);
}

inline __int128 dot(const LatticePoint& o, const LatticePoint& p, const LatticePoint& q)
{
    return static_cast<__int128>(p.x - o.x) * (q.x - o.x) + static_cast<__int128>(p.y - o.y) * (q.y - o.y);
}

inline int sign(__int128 v) { return (v > 0) - (v < 0); }

inline bool on_segment(const LatticePoint& p, const LatticePoint& q, const LatticePoint& t)
{
    return cross(p, q, t) == 0 && std::min(p.x, q.x) <= t.x && t.x <= std::max(p.x, q.x) &&
           std::min(p.y, q.y) <= t.y && t.y <= std::max(p.y, q.y);
}

// Closed segments [p1, p2] and [q1, q2] share at least one point.
inline bool segments_touch(const LatticePoint& p1, const LatticePoint& p2, const LatticePoint& q1,
                           const LatticePoint& q2)
{
    const int d1 = sign(cross(p1, p2, q1));
    const int d2 = sign(cross(p1, p2, q2));
    const int d3 = sign(cross(q1, q2, p1));
    const int d4 = sign(cross(q1, q2, p2));
    if (d1 * d2 < 0 && d3 * d4 < 0) {
        return true;
    }
    return (d1 == 0 && on_segment(p1, p2, q1)) || (d2 == 0 && on_segment(p1, p2, q2)) ||
           (d3 == 0 && on_segment(q1, q2, p1)) || (d4 == 0 && on_segment(q1, q2, p2));
}

inline __int128 shoelace(std::span<const LatticePoint> v)
{
    __int128 sum = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& p = v[i];
        const auto& q = v[(i + 1) % v.size()];
        sum += static_cast<__int128>(p.x) * q.y - static_cast<__int128>(q.x) * p.y;
    }
    return sum;
}

}  // namespace detail

/// A simple lattice polygon, stored counterclockwise.
///
/// Construction rejects fewer than three vertices, repeated consecutive
/// vertices and zero area (DegeneratePolygon) and crossing or overlapping
/// edges (SelfIntersecting). Clockwise input is reversed about its first
/// vertex; the caller's order stays available through input_vertices().
class LatticePolygon {
public:
    explicit LatticePolygon(std::vector<LatticePoint> vertices) : input_(std::move(vertices))
    {
        const std::size_t n = input_.size();
        if (n < 3) {
            throw DegeneratePolygon("a polygon needs at least 3 vertices, got " + std::to_string(n));
        }
        for (std::size_t i = 0; i < n; ++i) {
            require_in_width(input_[i].x);
            require_in_width(input_[i].y);
            if (input_[i] == input_[(i + 1) % n]) {
                throw DegeneratePolygon("consecutive vertices coincide at index " + std::to_string(i));
            }
        }
        const bool all_collinear = std::all_of(input_.begin(), input_.end(), [&](const LatticePoint& p) {
            return detail::cross(input_[0], input_[1], p) == 0;
        });
        if (all_collinear) {
            throw DegeneratePolygon("all vertices are collinear; the polygon has zero area");
        }
        check_simple();

        const __int128 twice = detail::shoelace(input_);
        if (twice == 0) {
            throw DegeneratePolygon("polygon has zero area");
        }
        if (twice > std::numeric_limits<Int>::max() || -twice > std::numeric_limits<Int>::max()) {
            throw OverflowError("polygon area exceeds the integer width");
        }
        area_twice_ = static_cast<Int>(twice < 0 ? -twice : twice);

        ccw_ = input_;
        if (twice < 0) {
            std::reverse(ccw_.begin() + 1, ccw_.end());
        }
    }

    /// Vertices in counterclockwise order.
    std::span<const LatticePoint> vertices() const noexcept { return ccw_; }
    std::span<const LatticePoint> input_vertices() const noexcept { return input_; }

    /// Twice the enclosed area (exact shoelace).
    Int area_twice() const noexcept { return area_twice_; }

private:
    void check_simple() const
    {
        const std::size_t n = input_.size();
        for (std::size_t i = 0; i < n; ++i) {
            const LatticePoint& p1 = input_[i];
            const LatticePoint& p2 = input_[(i + 1) % n];
            for (std::size_t j = i + 1; j < n; ++j) {
                const LatticePoint& q1 = input_[j];
                const LatticePoint& q2 = input_[(j + 1) % n];
                const bool next = j == i + 1;
                const bool wrap = i == 0 && j == n - 1;
                if (next || wrap) {
                    // Adjacent edges share one vertex; they may not fold back onto each other.
                    const LatticePoint& shared = next ? p2 : p1;
                    const LatticePoint& a = next ? p1 : p2;
                    const LatticePoint& b = next ? q2 : q1;
                    if (detail::cross(shared, a, b) == 0 && detail::dot(shared, a, b) > 0) {
                        throw SelfIntersecting("edges " + std::to_string(i) + " and " + std::to_string(j) +
                                               " overlap");
                    }
                    continue;
                }
                if (detail::segments_touch(p1, p2, q1, q2)) {
                    throw SelfIntersecting("edges " + std::to_string(i) + " and " + std::to_string(j) +
                                           " intersect");
                }
            }
        }
    }

    std::vector<LatticePoint> input_;
    std::vector<LatticePoint> ccw_;
    Int area_twice_ = 0;
};

/// Lattice points on the boundary: the sum over edges of gcd(|dx|, |dy|).
inline Int boundary_count(const LatticePolygon& polygon)
{
    const auto v = polygon.vertices();
    Int total = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& p = v[i];
        const auto& q = v[(i + 1) % v.size()];
        total = checked_add(total, gcd(checked_sub(q.x, p.x), checked_sub(q.y, p.y)));
    }
    return total;
}

/// Upper bound on bounding-box points scanned by interior_points().
inline constexpr Int kMaxScanPoints = Int{100'000'000};

/// Lattice points strictly inside the polygon, by scanning the bounding box
/// row by row (ascending y, then x) with an exact winding-number test.
inline std::vector<LatticePoint> interior_points(const LatticePolygon& polygon)
{
    const auto v = polygon.vertices();
    Int x_lo = v[0].x, x_hi = v[0].x, y_lo = v[0].y, y_hi = v[0].y;
    for (const auto& p : v) {
        x_lo = std::min(x_lo, p.x);
        x_hi = std::max(x_hi, p.x);
        y_lo = std::min(y_lo, p.y);
        y_hi = std::max(y_hi, p.y);
    }
    const __int128 box = (static_cast<__int128>(x_hi) - x_lo + 1) * (static_cast<__int128>(y_hi) - y_lo + 1);
    if (box > kMaxScanPoints) {
        throw InvalidArgument("polygon bounding box too large to scan");
    }

    std::vector<LatticePoint> out;
    for (Int y = y_lo + 1; y < y_hi; ++y) {
        for (Int x = x_lo + 1; x < x_hi; ++x) {
            const LatticePoint t{x, y};
            int winding = 0;
            bool boundary = false;
            for (std::size_t i = 0; i < v.size() && !boundary; ++i) {
                const auto& p = v[i];
                const auto& q = v[(i + 1) % v.size()];
                if (detail::on_segment(p, q, t)) {
                    boundary = true;
                } else if (p.y <= y && q.y > y && detail::cross(p, q, t) > 0) {
                    ++winding;
                } else if (q.y <= y && p.y > y && detail::cross(p, q, t) < 0) {
                    --winding;
                }
            }
            if (!boundary && winding != 0) {
                out.push_back(t);
            }
        }
    }
    return out;
}

/// Pick's identity inputs for one polygon. Area is kept doubled so the
/// identity 2A = 2I + B - 2 is checked in exact integers.
struct PickAudit {
    Int area_twice = 0;
    Int boundary_count = 0;
    Int interior_count = 0;
    bool pick_holds = false;

    friend bool operator==(const PickAudit&, const PickAudit&) = default;
};

inline PickAudit pick_audit(const LatticePolygon& polygon)
{
    PickAudit audit;
    audit.area_twice = polygon.area_twice();
    audit.boundary_count = boundary_count(polygon);
    audit.interior_count = static_cast<Int>(interior_points(polygon).size());
    audit.pick_holds = audit.area_twice == 2 * audit.interior_count + audit.boundary_count - 2;
    return audit;
}

/// The parallelogram with A(0, a), B(b, 0), C(b-1, -1), D(-1, a-1), built
/// from the sequence D, A, B, C (which is clockwise) and so stored as
/// D, C, B, A.
inline LatticePolygon frobenius_parallelogram(const CoinPair& pair)
{
    if (!pair.nontrivial()) {
        throw DegenerateInput("the Frobenius parallelogram needs a, b >= 2, got (" + std::to_string(pair.a()) +
                              ", " + std::to_string(pair.b()) + ")");
    }
    const Int a = pair.a();
    const Int b = pair.b();
    return LatticePolygon({
        LatticePoint{-1, a - 1},  // D
        LatticePoint{0, a},       // A
        LatticePoint{b, 0},       // B
        LatticePoint{b - 1, -1},  // C
    });
}

/// Maps each d with ab - a - b < d < ab to the single interior lattice point
/// of the Frobenius parallelogram lying on L_d. Throws BijectionViolation if
/// some line holds zero or several interior points, or an interior point
/// lies on a line outside that band.
inline std::map<Int, LatticePoint> interior_line_bijection(const CoinPair& pair)
{
    const LatticePolygon polygon = frobenius_parallelogram(pair);
    const Int a = pair.a();
    const Int b = pair.b();
    const Int ab = checked_mul(a, b);
    const Int lo = ab - a - b;

    std::map<Int, LatticePoint> by_line;
    for (const LatticePoint& p : interior_points(polygon)) {
        const Int d = checked_add(checked_mul(a, p.x), checked_mul(b, p.y));
        if (d <= lo || d >= ab) {
            throw BijectionViolation("interior point (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                                     ") lies on L_" + std::to_string(d) + ", outside (" + std::to_string(lo) +
                                     ", " + std::to_string(ab) + ")");
        }
        if (!by_line.emplace(d, p).second) {
            throw BijectionViolation("L_" + std::to_string(d) + " holds more than one interior point");
        }
    }
    for (Int d = lo + 1; d < ab; ++d) {
        if (!by_line.contains(d)) {
            throw BijectionViolation("L_" + std::to_string(d) + " holds no interior point");
        }
    }
    return by_line;
}

}  // namespace frobenius

#endif  // FROBENIUS_GEOMETRY_HPP
