#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "lislab/embedding.hpp"
#include "lislab/point.hpp"

namespace lislab {

// Brute-force chain computations. These are the trust anchor for every other
// module: sort by x, quadratic DP, nothing clever.

/// Maximum total weight of a chain p0 < p1 < ... (strict dominance). 0 for
/// the empty set.
Weight max_weight_chain(const PointSet& points);

struct Chain {
    Weight weight = 0;
    PointSet points;  // ascending along the chain
};

/// Maximum-weight chain overall, with the points realizing it.
Chain best_chain(const PointSet& points);

/// Maximum weight of a chain that starts at `start` and ends at `end`, both
/// endpoint weights included. std::nullopt means no such chain exists.
/// Throws InvalidInput if either endpoint (matched by position) is absent.
std::optional<Weight> max_weight_chain_between(const PointSet& points, const WeightedPoint& start,
                                               const WeightedPoint& end);

std::optional<Chain> best_chain_between(const PointSet& points, const WeightedPoint& start,
                                        const WeightedPoint& end);

/// Like max_weight_chain_between but the chain must also contain `via`.
std::optional<Weight> max_weight_chain_through(const PointSet& points, const WeightedPoint& start,
                                               const WeightedPoint& via, const WeightedPoint& end);

/// max_weight_chain over points with xlo <= x <= xhi. Throws InvalidInput if
/// xlo > xhi.
Weight max_weight_chain_in_xrange(const PointSet& points, Coord xlo, Coord xhi);

/// A query against the oracle in one of its three modes.
struct ChainQuery {
    enum class Mode { Global, Between, XRange };

    Mode mode = Mode::Global;
    WeightedPoint start{};
    WeightedPoint end{};
    Coord xlo = 0;
    Coord xhi = 0;

    static ChainQuery global() { return {}; }
    static ChainQuery between(const WeightedPoint& s, const WeightedPoint& e) {
        return {Mode::Between, s, e, 0, 0};
    }
    static ChainQuery xrange(Coord lo, Coord hi) { return {Mode::XRange, {}, {}, lo, hi}; }
};

/// nullopt only for a Between query with no connecting chain.
std::optional<Weight> evaluate(const PointSet& points, const ChainQuery& query);

/// Closed-form chain weights of a Boolean embedding (and the weighted
/// a_j -> a'_j form). Names read "<from>To<to>".
enum class ChainCase {
    LToBSameRow,    // c(l_{i,j}, b_i)
    LToBLowerRow,   // c(l_{i,j}, b_{i'}), i < i'
    LpToBSameRow,   // c(l'_{i,j}, b_i)
    LpToBLowerRow,  // c(l'_{i,j}, b_{i'}), i < i'
    AToB,           // c(a_j, b_i)
    BToAp,          // c(b_i, a'_j)
    AToAp,          // c(a_j, a'_j), valid for any multiplier
};

inline constexpr ChainCase kAllChainCases[] = {
    ChainCase::LToBSameRow,   ChainCase::LToBLowerRow, ChainCase::LpToBSameRow,
    ChainCase::LpToBLowerRow, ChainCase::AToB,         ChainCase::BToAp,
    ChainCase::AToAp,
};

std::string_view case_name(ChainCase c) noexcept;

/// Evaluates the closed form for `c`. Index use per case:
///   L/Lp cases: i, i_prime (row of b), j;  AToB, BToAp: i, j;  AToAp: j.
/// Only AToAp is defined for multiplier > 1; other cases throw InvalidInput
/// there, as do out-of-range indices or i/i_prime violating the case.
Weight closed_form_c(const Embedding& emb, ChainCase c, int i, int i_prime, int j);

/// The endpoints (start, end) the closed form for `c` talks about.
std::pair<PointLabel, PointLabel> case_endpoints(ChainCase c, int i, int i_prime, int j);

/// Part of c(a_j, a'_j) that does not depend on the matrices:
/// M(3n-3j)(n-1) + 3M(n-j)(n-j+1) + 2.
Weight a_to_a_prime_offset(std::size_t n, Weight multiplier, std::size_t j);

}  // namespace lislab
