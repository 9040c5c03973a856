#include "lislab/chain_oracle.hpp"

#include <algorithm>
#include <numeric>

namespace lislab {

namespace {

std::vector<std::size_t> x_order(const PointSet& points) {
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return points[a].x < points[b].x; });
    return order;
}

std::size_t locate(const PointSet& points, const WeightedPoint& p, const char* role) {
    for (std::size_t k = 0; k < points.size(); ++k) {
        if (points[k].x == p.x && points[k].y == p.y) return k;
    }
    throw InvalidInput(std::string("chain endpoint (") + role + ") is not in the point set");
}

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// DP restricted to chains beginning at `start`. best[k] is the heaviest chain
// start -> ... -> k, or -1 when k is unreachable.
struct RootedDp {
    std::vector<Weight> best;
    std::vector<std::size_t> parent;
};

RootedDp rooted_dp(const PointSet& points, std::size_t start) {
    RootedDp dp{std::vector<Weight>(points.size(), -1), std::vector<std::size_t>(points.size(), kNone)};
    dp.best[start] = points[start].w;
    const auto order = x_order(points);
    for (std::size_t a = 0; a < order.size(); ++a) {
        const std::size_t k = order[a];
        if (!dominates(points[start], points[k])) continue;
        for (std::size_t b = 0; b < a; ++b) {
            const std::size_t q = order[b];
            if (dp.best[q] < 0 || !dominates(points[q], points[k])) continue;
            const Weight cand = checked_add(dp.best[q], points[k].w);
            if (cand > dp.best[k]) {
                dp.best[k] = cand;
                dp.parent[k] = q;
            }
        }
    }
    return dp;
}

}  // namespace

Chain best_chain(const PointSet& points) {
    const auto order = x_order(points);
    std::vector<Weight> best(points.size(), 0);
    std::vector<std::size_t> parent(points.size(), kNone);
    std::size_t argmax = kNone;
    for (std::size_t a = 0; a < order.size(); ++a) {
        const std::size_t k = order[a];
        best[k] = points[k].w;
        for (std::size_t b = 0; b < a; ++b) {
            const std::size_t q = order[b];
            if (!dominates(points[q], points[k])) continue;
            const Weight cand = checked_add(best[q], points[k].w);
            if (cand > best[k]) {
                best[k] = cand;
                parent[k] = q;
            }
        }
        if (argmax == kNone || best[k] > best[argmax]) argmax = k;
    }
    Chain chain;
    if (argmax == kNone) return chain;
    chain.weight = best[argmax];
    for (std::size_t k = argmax; k != kNone; k = parent[k]) chain.points.push_back(points[k]);
    std::reverse(chain.points.begin(), chain.points.end());
    return chain;
}

Weight max_weight_chain(const PointSet& points) { return best_chain(points).weight; }

std::optional<Chain> best_chain_between(const PointSet& points, const WeightedPoint& start,
                                        const WeightedPoint& end) {
    const std::size_t s = locate(points, start, "start");
    const std::size_t e = locate(points, end, "end");
    if (s == e) return Chain{points[s].w, {points[s]}};
    if (!dominates(points[s], points[e])) return std::nullopt;
    const auto dp = rooted_dp(points, s);
    if (dp.best[e] < 0) return std::nullopt;
    Chain chain{dp.best[e], {}};
    for (std::size_t k = e; k != kNone; k = dp.parent[k]) chain.points.push_back(points[k]);
    std::reverse(chain.points.begin(), chain.points.end());
    return chain;
}

std::optional<Weight> max_weight_chain_between(const PointSet& points, const WeightedPoint& start,
                                               const WeightedPoint& end) {
    auto chain = best_chain_between(points, start, end);
    if (!chain) return std::nullopt;
    return chain->weight;
}

std::optional<Weight> max_weight_chain_through(const PointSet& points, const WeightedPoint& start,
                                               const WeightedPoint& via, const WeightedPoint& end) {
    const auto head = max_weight_chain_between(points, start, via);
    const auto tail = max_weight_chain_between(points, via, end);
    if (!head || !tail) return std::nullopt;
    return checked_sub(checked_add(*head, *tail), points[locate(points, via, "via")].w);
}

Weight max_weight_chain_in_xrange(const PointSet& points, Coord xlo, Coord xhi) {
    if (xlo > xhi) throw InvalidInput("x-range query requires xlo <= xhi");
    PointSet inside;
    std::copy_if(points.begin(), points.end(), std::back_inserter(inside),
                 [&](const WeightedPoint& p) { return xlo <= p.x && p.x <= xhi; });
    return max_weight_chain(inside);
}

std::optional<Weight> evaluate(const PointSet& points, const ChainQuery& query) {
    switch (query.mode) {
        case ChainQuery::Mode::Global: return max_weight_chain(points);
        case ChainQuery::Mode::Between: return max_weight_chain_between(points, query.start, query.end);
        case ChainQuery::Mode::XRange: return max_weight_chain_in_xrange(points, query.xlo, query.xhi);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Closed forms

std::string_view case_name(ChainCase c) noexcept {
    switch (c) {
        case ChainCase::LToBSameRow: return "L-to-b-same-row";
        case ChainCase::LToBLowerRow: return "L-to-b-lower-row";
        case ChainCase::LpToBSameRow: return "Lp-to-b-same-row";
        case ChainCase::LpToBLowerRow: return "Lp-to-b-lower-row";
        case ChainCase::AToB: return "a-to-b";
        case ChainCase::BToAp: return "b-to-a'";
        case ChainCase::AToAp: return "a-to-a'";
    }
    return "?";
}

std::pair<PointLabel, PointLabel> case_endpoints(ChainCase c, int i, int i_prime, int j) {
    switch (c) {
        case ChainCase::LToBSameRow:
        case ChainCase::LToBLowerRow: return {PointLabel::left(i, j), PointLabel::b(i_prime)};
        case ChainCase::LpToBSameRow:
        case ChainCase::LpToBLowerRow: return {PointLabel::turn(i, j), PointLabel::b(i_prime)};
        case ChainCase::AToB: return {PointLabel::a(j), PointLabel::b(i)};
        case ChainCase::BToAp: return {PointLabel::b(i), PointLabel::a_prime(j)};
        case ChainCase::AToAp: return {PointLabel::a(j), PointLabel::a_prime(j)};
    }
    throw InvalidInput("unknown chain case");
}

namespace {

// 1.5 (n-j)(n-j+1), exact: the product of consecutive integers is even.
Weight triangle_term(Weight n, Weight j) {
    const Weight prod = checked_mul(3, n - j, n - j + 1);
    if (prod % 2 != 0) throw ArithmeticOverflow("1.5-factor term is not an integer");
    return prod / 2;
}

}  // namespace

Weight a_to_a_prime_offset(std::size_t n_, Weight m, std::size_t j_) {
    const Weight n = static_cast<Weight>(n_);
    const Weight j = static_cast<Weight>(j_);
    return checked_add(checked_add(checked_mul(m, 3 * n - 3 * j, n - 1), checked_mul(3, m, n - j, n - j + 1)), 2);
}

Weight closed_form_c(const Embedding& emb, ChainCase c, int i, int i_prime, int j) {
    const int size = static_cast<int>(emb.n());
    const Weight n = size;
    const Matrix& a = emb.matrix();
    const auto& b = emb.b();
    auto in_range = [&](int v) { return 0 <= v && v < size; };
    auto A = [&](int row, int col) -> Weight {
        if (row == size) return 0;  // A_{n,.} = 0 convention
        return a(static_cast<std::size_t>(row), static_cast<std::size_t>(col));
    };
    auto B = [&](int row) { return b[static_cast<std::size_t>(row)]; };

    if (c != ChainCase::AToAp && emb.multiplier() != 1) {
        throw InvalidInput(std::string("closed form ") + std::string(case_name(c)) +
                           " is only defined for Boolean embeddings (M = 1)");
    }
    if (!in_range(j)) throw InvalidInput("closed_form_c: j out of range");

    const Weight tri = triangle_term(n, j);
    switch (c) {
        case ChainCase::LToBSameRow:
        case ChainCase::LToBLowerRow:
        case ChainCase::LpToBSameRow:
        case ChainCase::LpToBLowerRow: {
            if (!in_range(i) || !in_range(i_prime)) throw InvalidInput("closed_form_c: row index out of range");
            const bool same = c == ChainCase::LToBSameRow || c == ChainCase::LpToBSameRow;
            if (same ? i != i_prime : i >= i_prime) {
                throw InvalidInput(std::string("closed_form_c: case ") + std::string(case_name(c)) +
                                   (same ? " requires i == i'" : " requires i < i'"));
            }
            const Weight rows = i_prime - i;
            switch (c) {
                case ChainCase::LToBSameRow: return tri + B(i_prime);
                case ChainCase::LToBLowerRow:
                    return checked_mul(3 * n - 3 * j, rows) + tri + A(j, i_prime) + B(i_prime);
                case ChainCase::LpToBSameRow: return tri + A(j, i) + B(i_prime);
                default:
                    return checked_mul(3 * n - 3 * j - 3, rows) + tri + A(j, i) + A(j + 1, i_prime) + B(i_prime);
            }
        }
        case ChainCase::AToB:
            if (!in_range(i)) throw InvalidInput("closed_form_c: i out of range");
            return checked_mul(3 * n - 3 * j, i) + tri + 1 + A(j, i) + B(i);
        case ChainCase::BToAp:
            if (!in_range(i)) throw InvalidInput("closed_form_c: i out of range");
            return checked_mul(3 * n - 3 * j, n - i - 1) + tri + 1 + B(i);
        case ChainCase::AToAp: {
            Weight best = 0;
            for (int r = 0; r < size; ++r) best = std::max(best, A(j, r) + B(r));
            return checked_add(a_to_a_prime_offset(emb.n(), emb.multiplier(), static_cast<std::size_t>(j)), best);
        }
    }
    throw InvalidInput("unknown chain case");
}

}  // namespace lislab
