#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lislab/types.hpp"

namespace lislab {

/// The six point families of a matrix embedding: left-grid chain points (L),
/// left-grid turn points (Lp), right-grid points (R), and the special points
/// a_j (A), a'_j (Ap) and b_i (B).
enum class Family : std::uint8_t { L, Lp, R, A, Ap, B };

std::string_view family_name(Family f) noexcept;
std::optional<Family> parse_family(std::string_view name) noexcept;

/// Structural tag of an embedding point. Grid families use both indices;
/// A/Ap use j only and B uses i only, the unused index is -1.
struct PointLabel {
    Family family = Family::L;
    int i = -1;
    int j = -1;

    static constexpr PointLabel left(int i, int j) { return {Family::L, i, j}; }
    static constexpr PointLabel turn(int i, int j) { return {Family::Lp, i, j}; }
    static constexpr PointLabel right(int i, int j) { return {Family::R, i, j}; }
    static constexpr PointLabel a(int j) { return {Family::A, -1, j}; }
    static constexpr PointLabel a_prime(int j) { return {Family::Ap, -1, j}; }
    static constexpr PointLabel b(int i) { return {Family::B, i, -1}; }

    bool is_special() const noexcept {
        return family == Family::A || family == Family::Ap || family == Family::B;
    }

    friend auto operator<=>(const PointLabel&, const PointLabel&) = default;
};

/// "L(1,2)", "A(3)", "B(0)" ...
std::string to_string(const PointLabel& label);

struct WeightedPoint {
    Coord x = 0;
    Coord y = 0;
    Weight w = 0;
    std::optional<PointLabel> label;

    friend bool operator==(const WeightedPoint&, const WeightedPoint&) = default;
};

/// Strict dominance: p.x < q.x and p.y < q.y.
constexpr bool dominates(const WeightedPoint& p, const WeightedPoint& q) noexcept {
    return p.x < q.x && p.y < q.y;
}

using PointSet = std::vector<WeightedPoint>;

/// True iff all x are pairwise distinct and all y are pairwise distinct.
bool has_distinct_coordinates(const PointSet& points);

}  // namespace lislab
