#include "lislab/point.hpp"

#include <unordered_set>

namespace lislab {

std::string_view family_name(Family f) noexcept {
    switch (f) {
        case Family::L: return "L";
        case Family::Lp: return "Lp";
        case Family::R: return "R";
        case Family::A: return "A";
        case Family::Ap: return "Ap";
        case Family::B: return "B";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
    for (Family f : {Family::L, Family::Lp, Family::R, Family::A, Family::Ap, Family::B}) {
        if (family_name(f) == name) return f;
    }
    return std::nullopt;
}

std::string to_string(const PointLabel& label) {
    std::string out(family_name(label.family));
    switch (label.family) {
        case Family::L:
        case Family::Lp:
        case Family::R:
            out += "(" + std::to_string(label.i) + "," + std::to_string(label.j) + ")";
            break;
        case Family::A:
        case Family::Ap:
            out += "(" + std::to_string(label.j) + ")";
            break;
        case Family::B:
            out += "(" + std::to_string(label.i) + ")";
            break;
    }
    return out;
}

bool has_distinct_coordinates(const PointSet& points) {
    std::unordered_set<Coord> xs;
    std::unordered_set<Coord> ys;
    for (const auto& p : points) {
        if (!xs.insert(p.x).second || !ys.insert(p.y).second) return false;
    }
    return true;
}

}  // namespace lislab
