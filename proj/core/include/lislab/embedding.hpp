#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "lislab/matrix.hpp"
#include "lislab/point.hpp"

namespace lislab {

struct WeightDelta {
    PointLabel label;
    Weight old_weight = 0;
    Weight new_weight = 0;

    friend bool operator==(const WeightDelta&, const WeightDelta&) = default;
};

/// Labeled point set S_k encoding a matrix A and one weight column b.
///
/// Points are kept sorted by x. The layout is: a left n x n grid carrying
/// chain points L(i,j) and turn points Lp(i,j) whose weights read the
/// transposed matrix, special points a_j below the left grid, the b_i
/// antichain between the grids, and a right grid R(i,j) with special points
/// a'_j above it. With multiplier M = 1 this is the Boolean embedding; with
/// M > 1 grid weights are scaled by M.
class Embedding {
public:
    std::size_t n() const noexcept { return matrix_.size(); }
    Weight multiplier() const noexcept { return multiplier_; }
    const Matrix& matrix() const noexcept { return matrix_; }
    const std::vector<Weight>& b() const noexcept { return b_; }

    /// All 3n^2+3n points, ascending x.
    const PointSet& points() const noexcept { return points_; }

    bool contains(const PointLabel& label) const { return index_.count(label) != 0; }

    /// Throws InvalidInput for labels that are not part of this embedding.
    const WeightedPoint& at(const PointLabel& label) const;

    /// Direct mutable access for fault injection in tests and the CLI's
    /// --inject-fault path. Moving a point may break x-ordering of points().
    WeightedPoint& mutable_point(const PointLabel& label);

private:
    friend Embedding build_embedding(const Matrix& a, const std::vector<Weight>& b, Weight multiplier);
    friend std::vector<WeightDelta> swap_b_column(Embedding& emb, const std::vector<Weight>& new_b);

    Embedding(Matrix a, std::vector<Weight> b, Weight multiplier)
        : matrix_(std::move(a)), b_(std::move(b)), multiplier_(multiplier) {}

    Matrix matrix_;
    std::vector<Weight> b_;
    Weight multiplier_;
    PointSet points_;
    std::map<PointLabel, std::size_t> index_;
};

/// Builds S_k for matrix A and column b with weight multiplier M.
/// Throws InvalidInput when an entry of A or b lies outside {0,...,M} or the
/// dimensions disagree.
Embedding build_embedding(const Matrix& a, const std::vector<Weight>& b, Weight multiplier);

/// Same as build_embedding(a, b, a.bound()).
Embedding build_embedding(const Matrix& a, const std::vector<Weight>& b);

/// Replaces the weights of b_0..b_{n-1}; positions never move. Returns one
/// delta per b point (including unchanged ones) in increasing i.
std::vector<WeightDelta> swap_b_column(Embedding& emb, const std::vector<Weight>& new_b);

/// Returns the point carrying `label`; throws InvalidInput if absent.
const WeightedPoint& special_point(const Embedding& emb, const PointLabel& label);

/// Scale factor used by expand_unweighted: 1 + maximum weight (1 for an
/// empty set).
Coord expansion_scale(const PointSet& points);

/// Replaces every point (x, y, w) by w unit-weight replicas
/// (x*s + t, y*s + t), 0 <= t < w, with s = expansion_scale(points).
/// Replicas keep the source label. Throws InvalidInput on repeated x or y.
PointSet expand_unweighted(const PointSet& points);

/// Same with an explicit scale; requires scale > every weight in the set.
PointSet expand_unweighted(const PointSet& points, Coord scale);

struct StructureCheck {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct ValidationReport {
    std::vector<StructureCheck> checks;

    bool ok() const noexcept;
    std::vector<StructureCheck> failures() const;
};

/// Checks every geometric property the chain formulas rely on. Never throws
/// for a malformed embedding; failures are reported per check.
ValidationReport validate_structure(const Embedding& emb);

// Dump format: one line per point, "family i j x y w", ascending x.
void write_embedding_dump(std::ostream& out, const PointSet& points);
std::string format_embedding_dump(const Embedding& emb);
PointSet parse_embedding_dump(std::istream& in);

}  // namespace lislab
