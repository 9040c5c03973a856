#include "lislab/embedding.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace lislab {

namespace {

WeightedPoint make_point(Coord x, Coord y, Weight w, PointLabel label) {
    return WeightedPoint{x, y, w, label};
}

void check_weight_vector(const std::vector<Weight>& b, std::size_t n, Weight multiplier) {
    if (b.size() != n) {
        throw InvalidInput("b vector has length " + std::to_string(b.size()) + ", expected " +
                           std::to_string(n));
    }
    for (Weight w : b) {
        if (w < 0 || w > multiplier) {
            throw InvalidInput("b entry " + std::to_string(w) + " outside {0,...," + std::to_string(multiplier) +
                               "}");
        }
    }
}

}  // namespace

const WeightedPoint& Embedding::at(const PointLabel& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw InvalidInput("no point labeled " + to_string(label));
    return points_[it->second];
}

WeightedPoint& Embedding::mutable_point(const PointLabel& label) {
    auto it = index_.find(label);
    if (it == index_.end()) throw InvalidInput("no point labeled " + to_string(label));
    return points_[it->second];
}

Embedding build_embedding(const Matrix& a, const std::vector<Weight>& b, Weight multiplier) {
    if (multiplier < 1) throw InvalidInput("multiplier M must be at least 1");
    const std::size_t size = a.size();
    for (Weight e : a.entries()) {
        if (e > multiplier) {
            throw InvalidInput("matrix entry " + std::to_string(e) + " exceeds multiplier " +
                               std::to_string(multiplier));
        }
    }
    check_weight_vector(b, size, multiplier);

    Embedding emb(a, b, multiplier);
    const Coord n = static_cast<Coord>(size);
    const Weight m = multiplier;
    const Coord left_stride = checked_add(checked_mul(2, n), 1);   // 2n+1
    const Coord row_stride = checked_add(checked_mul(3, n), 1);    // 3n+1
    auto& pts = emb.points_;
    pts.reserve(static_cast<std::size_t>(3 * n * n + 3 * n));

    for (Coord i = 0; i < n; ++i) {
        for (Coord j = 0; j < n; ++j) {
            const int ii = static_cast<int>(i);
            const int jj = static_cast<int>(j);
            // l_{i,j} = (j(2n+1)+i+2, i(3n+1)+2n+j+1), weight 3M(n-j)
            pts.push_back(make_point(checked_add(checked_mul(j, left_stride), i + 2),
                                     checked_add(checked_mul(i, row_stride), 2 * n + j + 1),
                                     checked_mul(3, m, n - j), PointLabel::left(ii, jj)));
            // l'_{i,j} = ((j+1)(2n+1)-i, i(3n+1)+2n-j), weight 3M(n-j) + A[j][i]
            pts.push_back(make_point(checked_sub(checked_mul(j + 1, left_stride), i),
                                     checked_add(checked_mul(i, row_stride), 2 * n - j),
                                     checked_add(checked_mul(3, m, n - j), a(static_cast<std::size_t>(j),
                                                                              static_cast<std::size_t>(i))),
                                     PointLabel::turn(ii, jj)));
            // r_{i,j} = ((2n+j)(n+1)+i+1, (i+1)(3n+1)+j+1), weight 3M(j+1)
            pts.push_back(make_point(checked_add(checked_mul(2 * n + j, n + 1), i + 1),
                                     checked_add(checked_mul(i + 1, row_stride), j + 1),
                                     checked_mul(3, m, j + 1), PointLabel::right(ii, jj)));
        }
    }
    for (Coord j = 0; j < n; ++j) {
        // a_j = (j(2n+1)+1, n-j)
        pts.push_back(make_point(checked_add(checked_mul(j, left_stride), 1), n - j, 1,
                                 PointLabel::a(static_cast<int>(j))));
        // a'_{n-j-1} = ((2n+j+1)(n+1), 3n(n+1)-j)
        pts.push_back(make_point(checked_mul(2 * n + j + 1, n + 1), checked_sub(checked_mul(3, n, n + 1), j), 1,
                                 PointLabel::a_prime(static_cast<int>(n - j - 1))));
    }
    for (Coord i = 0; i < n; ++i) {
        // b_i = (2n(n+1)-i, (i+1)(3n+1)), weight b[i]
        pts.push_back(make_point(checked_sub(checked_mul(2, n, n + 1), i), checked_mul(i + 1, row_stride),
                                 b[static_cast<std::size_t>(i)], PointLabel::b(static_cast<int>(i))));
    }

    std::sort(pts.begin(), pts.end(), [](const WeightedPoint& p, const WeightedPoint& q) { return p.x < q.x; });
    for (std::size_t k = 0; k < pts.size(); ++k) emb.index_.emplace(*pts[k].label, k);
    return emb;
}

Embedding build_embedding(const Matrix& a, const std::vector<Weight>& b) {
    return build_embedding(a, b, a.bound());
}

std::vector<WeightDelta> swap_b_column(Embedding& emb, const std::vector<Weight>& new_b) {
    check_weight_vector(new_b, emb.n(), emb.multiplier());
    std::vector<WeightDelta> deltas;
    deltas.reserve(new_b.size());
    for (std::size_t i = 0; i < new_b.size(); ++i) {
        const auto label = PointLabel::b(static_cast<int>(i));
        WeightedPoint& p = emb.mutable_point(label);
        deltas.push_back({label, p.w, new_b[i]});
        p.w = new_b[i];
    }
    emb.b_ = new_b;
    return deltas;
}

const WeightedPoint& special_point(const Embedding& emb, const PointLabel& label) { return emb.at(label); }

Coord expansion_scale(const PointSet& points) {
    Weight max_w = 0;
    for (const auto& p : points) max_w = std::max(max_w, p.w);
    return checked_add(max_w, 1);
}

PointSet expand_unweighted(const PointSet& points) { return expand_unweighted(points, expansion_scale(points)); }

PointSet expand_unweighted(const PointSet& points, Coord scale) {
    if (!has_distinct_coordinates(points)) {
        throw InvalidInput("expand_unweighted: input coordinates must be pairwise distinct");
    }
    PointSet out;
    for (const auto& p : points) {
        if (p.w < 0) throw InvalidInput("expand_unweighted: negative weight");
        if (p.w >= scale) throw InvalidInput("expand_unweighted: scale must exceed every weight");
        const Coord bx = checked_mul(p.x, scale);
        const Coord by = checked_mul(p.y, scale);
        for (Weight t = 0; t < p.w; ++t) out.push_back({bx + t, by + t, 1, p.label});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Structure validation

bool ValidationReport::ok() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const StructureCheck& c) { return c.passed; });
}

std::vector<StructureCheck> ValidationReport::failures() const {
    std::vector<StructureCheck> out;
    std::copy_if(checks.begin(), checks.end(), std::back_inserter(out),
                 [](const StructureCheck& c) { return !c.passed; });
    return out;
}

namespace {

class Validator {
public:
    explicit Validator(const Embedding& emb) : emb_(emb), n_(static_cast<int>(emb.n())) {}

    ValidationReport run() {
        check_counts();
        check_labels();
        check_distinct();
        for (int j = 0; j < n_; ++j) {
            chain("L-column-chains", [&](int i) { return PointLabel::left(i, j); });
            antichain("Lp-column-antichains", [&](int i) { return PointLabel::turn(i, j); });
            chain("R-column-chains", [&](int i) { return PointLabel::right(i, j); });
        }
        for (int i = 0; i < n_; ++i) {
            chain("L-row-chains", [&](int j) { return PointLabel::left(i, j); });
            antichain("Lp-row-antichains", [&](int j) { return PointLabel::turn(i, j); });
            chain("R-row-chains", [&](int j) { return PointLabel::right(i, j); });
        }
        antichain("A-antichain", [](int j) { return PointLabel::a(j); });
        antichain("Ap-antichain", [](int j) { return PointLabel::a_prime(j); });
        antichain("B-antichain", [](int i) { return PointLabel::b(i); });
        check_cells();
        check_a_points();
        check_a_prime_points();
        check_b_points();
        check_layout();
        return std::move(report_);
    }

private:
    const WeightedPoint* get(const PointLabel& l) const {
        return emb_.contains(l) ? &emb_.at(l) : nullptr;
    }

    // Records one result per check name; later failures append detail.
    void record(const std::string& name, bool passed, const std::string& detail = {}) {
        auto it = std::find_if(report_.checks.begin(), report_.checks.end(),
                               [&](const StructureCheck& c) { return c.name == name; });
        if (it == report_.checks.end()) {
            report_.checks.push_back({name, passed, passed ? std::string{} : detail});
            return;
        }
        if (!passed && it->passed) {
            it->passed = false;
            it->detail = detail;
        }
    }

    void check_counts() {
        const std::size_t n = emb_.n();
        const std::size_t expected = 3 * n * n + 3 * n;
        record("point-count", emb_.points().size() == expected,
               "expected " + std::to_string(expected) + " points, found " + std::to_string(emb_.points().size()));
    }

    void check_labels() {
        std::vector<PointLabel> missing;
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) {
                for (auto l : {PointLabel::left(i, j), PointLabel::turn(i, j), PointLabel::right(i, j)}) {
                    if (!get(l)) missing.push_back(l);
                }
            }
            for (auto l : {PointLabel::a(i), PointLabel::a_prime(i), PointLabel::b(i)}) {
                if (!get(l)) missing.push_back(l);
            }
        }
        record("labels-resolvable", missing.empty(), missing.empty() ? "" : "missing " + to_string(missing[0]));
    }

    void check_distinct() {
        std::vector<std::pair<Coord, const WeightedPoint*>> xs;
        std::vector<std::pair<Coord, const WeightedPoint*>> ys;
        for (const auto& p : emb_.points()) {
            xs.emplace_back(p.x, &p);
            ys.emplace_back(p.y, &p);
        }
        auto first_dup = [](auto& v) -> std::string {
            std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
            for (std::size_t k = 1; k < v.size(); ++k) {
                if (v[k].first == v[k - 1].first) {
                    return describe(*v[k - 1].second) + " and " + describe(*v[k].second) + " share " +
                           std::to_string(v[k].first);
                }
            }
            return {};
        };
        const auto dx = first_dup(xs);
        const auto dy = first_dup(ys);
        record("distinct-x", dx.empty(), dx);
        record("distinct-y", dy.empty(), dy);
    }

    static std::string describe(const WeightedPoint& p) {
        return (p.label ? to_string(*p.label) : std::string("?")) + "@(" + std::to_string(p.x) + "," +
               std::to_string(p.y) + ")";
    }

    void chain(const std::string& name, const std::function<PointLabel(int)>& at) {
        for (int k = 0; k + 1 < n_; ++k) {
            const auto* p = get(at(k));
            const auto* q = get(at(k + 1));
            if (!p || !q) continue;
            if (!dominates(*p, *q)) {
                record(name, false, describe(*p) + " does not precede " + describe(*q));
                return;
            }
        }
        record(name, true);
    }

    void antichain(const std::string& name, const std::function<PointLabel(int)>& at) {
        for (int s = 0; s < n_; ++s) {
            for (int t = 0; t < n_; ++t) {
                const auto* p = get(at(s));
                const auto* q = get(at(t));
                if (!p || !q || s == t) continue;
                if (dominates(*p, *q)) {
                    record(name, false, describe(*p) + " precedes " + describe(*q));
                    return;
                }
            }
        }
        record(name, true);
    }

    void check_cells() {
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) {
                const auto* l = get(PointLabel::left(i, j));
                const auto* lp = get(PointLabel::turn(i, j));
                if (!l || !lp) continue;
                if (!(l->x < lp->x && l->y > lp->y)) {
                    record("cell-L-above-left-of-Lp", false, describe(*l) + " vs " + describe(*lp));
                    return;
                }
            }
        }
        record("cell-L-above-left-of-Lp", true);
    }

    template <typename Pred>
    bool all_grid(Family f, Pred pred, std::string& detail) const {
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) {
                const auto* p = get(PointLabel{f, i, j});
                if (p && !pred(*p, i, j)) {
                    detail = describe(*p);
                    return false;
                }
            }
        }
        return true;
    }

    void check_a_points() {
        std::string detail;
        bool below = true;
        bool between = true;
        for (int j = 0; j < n_; ++j) {
            const auto* a = get(PointLabel::a(j));
            if (!a) continue;
            auto is_left_grid = [&](auto pred) {
                return all_grid(Family::L, pred, detail) && all_grid(Family::Lp, pred, detail);
            };
            if (below && !is_left_grid([&](const WeightedPoint& p, int, int) { return a->y < p.y; })) {
                below = false;
                record("A-below-left-grid", false, describe(*a) + " not below " + detail);
            }
            auto placed = [&](const WeightedPoint& p, int, int col) {
                if (col == j - 1) return p.x < a->x;
                if (col == j) return a->x < p.x;
                return true;
            };
            if (between && !is_left_grid(placed)) {
                between = false;
                record("A-between-columns", false, describe(*a) + " misplaced against " + detail);
            }
        }
        if (below) record("A-below-left-grid", true);
        if (between) record("A-between-columns", true);
    }

    void check_a_prime_points() {
        std::string detail;
        bool above = true;
        bool between = true;
        for (int j = 0; j < n_; ++j) {
            // a'_{n-j-1} sits right of right-grid column j and left of column j+1.
            const auto* ap = get(PointLabel::a_prime(n_ - j - 1));
            if (!ap) continue;
            if (above && !all_grid(Family::R, [&](const WeightedPoint& p, int, int) { return p.y < ap->y; },
                                   detail)) {
                above = false;
                record("Ap-above-right-grid", false, describe(*ap) + " not above " + detail);
            }
            auto placed = [&](const WeightedPoint& p, int, int col) {
                if (col == j) return p.x < ap->x;
                if (col == j + 1) return ap->x < p.x;
                return true;
            };
            if (between && !all_grid(Family::R, placed, detail)) {
                between = false;
                record("Ap-between-columns", false, describe(*ap) + " misplaced against " + detail);
            }
        }
        if (above) record("Ap-above-right-grid", true);
        if (between) record("Ap-between-columns", true);
    }

    void check_b_points() {
        std::string detail;
        bool above_left = true;
        bool below_right = true;
        bool between = true;
        for (int i = 0; i < n_; ++i) {
            const auto* b = get(PointLabel::b(i));
            if (!b) continue;
            auto left_row = [&](const WeightedPoint& p, int row, int) { return row != i || p.y < b->y; };
            if (above_left &&
                !(all_grid(Family::L, left_row, detail) && all_grid(Family::Lp, left_row, detail))) {
                above_left = false;
                record("B-above-left-row", false, describe(*b) + " not above " + detail);
            }
            auto right_row = [&](const WeightedPoint& p, int row, int) { return row != i || b->y < p.y; };
            if (below_right && !all_grid(Family::R, right_row, detail)) {
                below_right = false;
                record("B-below-right-row", false, describe(*b) + " not below " + detail);
            }
            auto left_of = [&](const WeightedPoint& p, int, int) { return p.x < b->x; };
            auto right_of = [&](const WeightedPoint& p, int, int) { return b->x < p.x; };
            if (between && !(all_grid(Family::L, left_of, detail) && all_grid(Family::Lp, left_of, detail) &&
                             all_grid(Family::R, right_of, detail))) {
                between = false;
                record("B-between-grids", false, describe(*b) + " misplaced against " + detail);
            }
        }
        if (above_left) record("B-above-left-row", true);
        if (below_right) record("B-below-right-row", true);
        if (between) record("B-between-grids", true);
    }

    // Ascending x must read: a_0, left column 0, a_1, left column 1, ...,
    // b_{n-1} .. b_0, right column 0, a'_{n-1}, right column 1, a'_{n-2}, ...
    void check_layout() {
        std::vector<PointLabel> expected;
        for (int j = 0; j < n_; ++j) {
            expected.push_back(PointLabel::a(j));
            for (int i = 0; i < n_; ++i) expected.push_back(PointLabel::left(i, j));
            for (int i = n_ - 1; i >= 0; --i) expected.push_back(PointLabel::turn(i, j));
        }
        for (int i = n_ - 1; i >= 0; --i) expected.push_back(PointLabel::b(i));
        for (int j = 0; j < n_; ++j) {
            for (int i = 0; i < n_; ++i) expected.push_back(PointLabel::right(i, j));
            expected.push_back(PointLabel::a_prime(n_ - j - 1));
        }
        PointSet sorted = emb_.points();
        std::stable_sort(sorted.begin(), sorted.end(),
                         [](const WeightedPoint& p, const WeightedPoint& q) { return p.x < q.x; });
        if (sorted.size() != expected.size()) {
            record("x-order-layout", false, "point count differs from layout");
            return;
        }
        for (std::size_t k = 0; k < sorted.size(); ++k) {
            if (!sorted[k].label || *sorted[k].label != expected[k]) {
                record("x-order-layout", false,
                       "position " + std::to_string(k) + " holds " + describe(sorted[k]) + ", expected " +
                           to_string(expected[k]));
                return;
            }
        }
        record("x-order-layout", true);
    }

    const Embedding& emb_;
    int n_;
    ValidationReport report_;
};

}  // namespace

ValidationReport validate_structure(const Embedding& emb) { return Validator(emb).run(); }

// ---------------------------------------------------------------------------
// Dump format

void write_embedding_dump(std::ostream& out, const PointSet& points) {
    PointSet sorted = points;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const WeightedPoint& p, const WeightedPoint& q) { return p.x < q.x; });
    for (const auto& p : sorted) {
        const PointLabel l = p.label.value_or(PointLabel{});
        out << family_name(l.family) << ' ' << l.i << ' ' << l.j << ' ' << p.x << ' ' << p.y << ' ' << p.w
            << '\n';
    }
}

std::string format_embedding_dump(const Embedding& emb) {
    std::ostringstream out;
    write_embedding_dump(out, emb.points());
    return out.str();
}

PointSet parse_embedding_dump(std::istream& in) {
    PointSet out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string fam;
        int i = 0;
        int j = 0;
        Coord x = 0;
        Coord y = 0;
        Weight w = 0;
        std::string extra;
        if (!(ls >> fam >> i >> j >> x >> y >> w) || (ls >> extra)) {
            throw InvalidInput("embedding dump line " + std::to_string(lineno) + ": expected \"family i j x y w\"");
        }
        auto f = parse_family(fam);
        if (!f) throw InvalidInput("embedding dump line " + std::to_string(lineno) + ": unknown family " + fam);
        out.push_back({x, y, w, PointLabel{*f, i, j}});
    }
    return out;
}

}  // namespace lislab
