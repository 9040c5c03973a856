#include "lislab/reductions.hpp"

#include <chrono>
#include <map>

#include "lislab/chain_oracle.hpp"

namespace lislab {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

}  // namespace

OpCounts& OpCounts::operator+=(const OpCounts& o) {
    inserts += o.inserts;
    deletes += o.deletes;
    updates += o.updates;
    queries += o.queries;
    return *this;
}

OpCounts operator-(const OpCounts& a, const OpCounts& b) {
    return {a.inserts - b.inserts, a.deletes - b.deletes, a.updates - b.updates, a.queries - b.queries};
}

OpCounts counts_of(const SequenceStats& s) { return {s.inserts, s.deletes, s.updates, s.queries}; }

// ---------------------------------------------------------------------------
// (max,+) product

MaxplusRun maxplus_via_lis(const Matrix& a, const Matrix& b, Weight bound, RangeQueryMode mode, bool check_oracle) {
    if (a.size() != b.size()) {
        throw InvalidInput("maxplus: A is " + std::to_string(a.size()) + "x" + std::to_string(a.size()) + ", B is " +
                           std::to_string(b.size()) + "x" + std::to_string(b.size()));
    }
    for (Weight e : b.entries()) {
        if (e > bound) throw InvalidInput("maxplus: entry of B exceeds M = " + std::to_string(bound));
    }
    const std::size_t n = a.size();

    ReductionReport report;
    report.problem = "maxplus";
    report.size = n;
    report.bound = bound;

    // Geometry goes in once with every b weight at 0; each column is then
    // installed purely by weight updates.
    auto start = Clock::now();
    Embedding emb = build_embedding(a, std::vector<Weight>(n, 0), bound);
    DynamicSequence seq;
    std::map<PointLabel, Handle> handle_of;
    for (const auto& p : emb.points()) handle_of.emplace(*p.label, seq.insert(p));
    report.timings.build_ms = elapsed_ms(start);
    report.points = seq.size();
    const OpCounts after_build = counts_of(seq.stats());

    std::vector<Coord> lo(n);
    std::vector<Coord> hi(n);
    std::vector<Weight> offset(n);
    for (std::size_t j = 0; j < n; ++j) {
        lo[j] = emb.at(PointLabel::a(static_cast<int>(j))).x;
        hi[j] = emb.at(PointLabel::a_prime(static_cast<int>(j))).x;
        offset[j] = a_to_a_prime_offset(n, bound, j);
    }

    MaxplusRun run{Matrix(n, checked_mul(2, bound)), {}, {}};
    run.answers.reserve(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        start = Clock::now();
        for (const auto& delta : swap_b_column(emb, b.column(k))) {
            seq.update_weight(handle_of.at(delta.label), delta.new_weight);
        }
        report.timings.update_ms += elapsed_ms(start);

        start = Clock::now();
        for (std::size_t j = 0; j < n; ++j) {
            const Weight answer = mode == RangeQueryMode::Direct ? seq.query_range(lo[j], hi[j])
                                                                 : seq.query_range_via_sentinels(lo[j], hi[j]);
            run.answers.push_back(answer);
            const Weight value = answer - offset[j];
            if (value < 0 || value > 2 * bound) {
                throw ReductionFailure("maxplus: query for (j=" + std::to_string(j) + ", k=" + std::to_string(k) +
                                       ") returned " + std::to_string(answer) + ", extracted value " +
                                       std::to_string(value) + " outside {0,...," + std::to_string(2 * bound) +
                                       "}");
            }
            run.product.set(j, k, value);
        }
        report.timings.query_ms += elapsed_ms(start);
    }

    report.counts = counts_of(seq.stats());
    report.post_build = report.counts - after_build;
    if (check_oracle) report.agree = run.product.entries() == maxplus_product(a, b).entries();
    run.report = std::move(report);
    return run;
}

// ---------------------------------------------------------------------------
// Tiling

std::size_t ceil_sqrt(std::size_t m) {
    std::size_t r = 0;
    while (r * r < m) ++r;
    return r;
}

Tiling tile_matrix(const Matrix& a, std::size_t r) {
    const std::size_t m = a.size();
    if (r == 0) throw InvalidInput("tile side must be at least 1");
    if (r * r < m) {
        throw InvalidInput("tile side " + std::to_string(r) + " too small for dimension " + std::to_string(m) +
                           " (need r*r >= m)");
    }
    Tiling t;
    t.original = m;
    t.side = r;
    t.padded = r * r;
    const std::size_t per_side = t.padded / r;
    for (std::size_t i = 0; i < per_side; ++i) {
        for (std::size_t l = 0; l < per_side; ++l) {
            Matrix tile(r, a.bound());
            for (std::size_t row = 0; row < r; ++row) {
                for (std::size_t col = 0; col < r; ++col) {
                    const std::size_t gr = i * r + row;
                    const std::size_t gc = l * r + col;
                    if (gr < m && gc < m) tile.set(row, col, a(gr, gc));
                }
            }
            t.tiles.push_back(std::move(tile));
        }
    }
    return t;
}

Tiling tile_matrix(const Matrix& a) { return tile_matrix(a, ceil_sqrt(a.size())); }

Matrix Tiling::reassemble() const {
    Matrix out(padded, tiles.empty() ? 1 : tiles.front().bound());
    const std::size_t per_side = tiles_per_side();
    for (std::size_t i = 0; i < per_side; ++i) {
        for (std::size_t l = 0; l < per_side; ++l) {
            const Matrix& t = tile(i, l);
            for (std::size_t row = 0; row < side; ++row) {
                for (std::size_t col = 0; col < side; ++col) out.set(i * side + row, l * side + col, t(row, col));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Online Boolean matrix-vector multiplication

OmvSession::OmvSession(const Matrix& a) {
    if (!a.is_boolean()) throw InvalidInput("OMv needs a Boolean matrix (M = 1)");
    const auto start = Clock::now();
    tiling_ = tile_matrix(a);
    const std::size_t r = tiling_.side;
    tiles_.reserve(tiling_.tiles.size());
    for (const Matrix& block : tiling_.tiles) {
        Embedding emb = build_embedding(block, std::vector<Weight>(r, 0), 1);
        const Coord scale = expansion_scale(emb.points());
        Weight total = 0;
        for (const auto& p : emb.points()) total = checked_add(total, p.w);
        DynamicSequence seq;
        for (const auto& p : expand_unweighted(emb.points(), scale)) seq.insert(p);
        tiles_.push_back(Tile{std::move(emb), scale, total, std::move(seq),
                              std::vector<std::optional<Handle>>(r), std::vector<Weight>(r, 0)});
    }
    build_counts_ = counts();
    timings_.build_ms = elapsed_ms(start);
}

BitVector OmvSession::apply(const BitVector& v) {
    const std::size_t m = tiling_.original;
    if (v.size() != m) {
        throw InvalidInput("OMv vector has length " + std::to_string(v.size()) + ", expected " + std::to_string(m));
    }
    const std::size_t r = tiling_.side;
    const std::size_t per_side = tiling_.tiles_per_side();
    BitVector padded(tiling_.padded);
    for (std::size_t q = 0; q < m; ++q) padded.set(q, v[q]);

    auto start = Clock::now();
    for (std::size_t i = 0; i < per_side; ++i) {
        for (std::size_t l = 0; l < per_side; ++l) {
            Tile& tile = tile_at(i, l);
            std::vector<Weight> sub(r);
            for (std::size_t q = 0; q < r; ++q) sub[q] = padded[l * r + q] ? 1 : 0;
            // b_q has weight <= 1, so its expansion is a single replica at
            // (x*s, y*s): toggling the bit is one insert or delete.
            for (const auto& delta : swap_b_column(tile.embedding, sub)) {
                auto& replica = tile.b_replicas[static_cast<std::size_t>(delta.label.i)];
                if (delta.new_weight == 1 && !replica) {
                    const auto& b = tile.embedding.at(delta.label);
                    replica = tile.sequence.insert(
                        {checked_mul(b.x, tile.scale), checked_mul(b.y, tile.scale), 1, b.label});
                } else if (delta.new_weight == 0 && replica) {
                    tile.sequence.erase(*replica);
                    replica.reset();
                }
            }
        }
    }
    timings_.update_ms += elapsed_ms(start);

    start = Clock::now();
    BitVector u(tiling_.padded);
    for (std::size_t i = 0; i < per_side; ++i) {
        for (std::size_t l = 0; l < per_side; ++l) {
            Tile& tile = tile_at(i, l);
            for (std::size_t j = 0; j < r; ++j) {
                const Coord lo = checked_mul(tile.embedding.at(PointLabel::a(static_cast<int>(j))).x, tile.scale);
                const Coord hi =
                    checked_mul(tile.embedding.at(PointLabel::a_prime(static_cast<int>(j))).x, tile.scale);
                const Weight answer = tile.sequence.query_range(lo, hi);
                const Weight value = answer - a_to_a_prime_offset(r, 1, j);
                if (value < 0 || value > 2) {
                    throw ReductionFailure("omv: tile (" + std::to_string(i) + "," + std::to_string(l) + ") row " +
                                           std::to_string(j) + " extracted " + std::to_string(value) +
                                           " outside {0,1,2}");
                }
                tile.values[j] = value;
                // u_{k,i}(j) = max(0, max_l value - 1)
                if (value - 1 > 0) u.set(i * r + j, true);
            }
        }
    }
    timings_.query_ms += elapsed_ms(start);
    ++processed_;

    BitVector out(m);
    for (std::size_t q = 0; q < m; ++q) out.set(q, u[q]);
    return out;
}

const std::vector<Weight>& OmvSession::tile_values(std::size_t i, std::size_t l) const { return tile_at(i, l).values; }

std::size_t OmvSession::tile_points(std::size_t i, std::size_t l) const { return tile_at(i, l).sequence.size(); }

Weight OmvSession::tile_weight_total(std::size_t i, std::size_t l) const { return tile_at(i, l).weight_total; }

std::size_t OmvSession::total_points() const {
    std::size_t total = 0;
    for (const auto& t : tiles_) total += t.sequence.size();
    return total;
}

OpCounts OmvSession::counts() const {
    OpCounts total;
    for (const auto& t : tiles_) total += counts_of(t.sequence.stats());
    return total;
}

OmvSession omv_init(const Matrix& a) { return OmvSession(a); }

BitVector omv_apply(OmvSession& session, const BitVector& v) { return session.apply(v); }

ReductionReport run_omv_online(OmvSession& session, const VectorSupplier& next, const ResultSink& emit,
                               const Matrix* oracle) {
    ReductionReport report;
    report.problem = "omv";
    report.size = session.dimension();
    report.bound = 1;
    report.points = session.total_points();
    bool agree = true;
    std::size_t k = 0;
    while (auto v = next()) {
        BitVector u = session.apply(*v);
        if (oracle) agree = agree && u == boolean_matvec(*oracle, *v);
        emit(k++, u);
    }
    report.counts = session.counts();
    report.post_build = session.counts_after_build();
    report.timings = session.timings();
    if (oracle) report.agree = agree;
    return report;
}

}  // namespace lislab
