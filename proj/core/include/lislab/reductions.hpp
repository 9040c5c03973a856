#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lislab/dynamic_sequence.hpp"
#include "lislab/embedding.hpp"
#include "lislab/matrix.hpp"

namespace lislab {

/// An extracted value fell outside its admissible range; points at a broken
/// embedding or data structure.
class ReductionFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OpCounts {
    std::uint64_t inserts = 0;
    std::uint64_t deletes = 0;
    std::uint64_t updates = 0;
    std::uint64_t queries = 0;

    OpCounts& operator+=(const OpCounts& o);
    friend OpCounts operator-(const OpCounts& a, const OpCounts& b);
    friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

OpCounts counts_of(const SequenceStats& s);

struct PhaseTimings {
    double build_ms = 0;
    double update_ms = 0;
    double query_ms = 0;
};

struct ReductionReport {
    std::string problem;        // "maxplus" or "omv"
    std::size_t size = 0;       // n for maxplus, m for omv
    Weight bound = 1;           // M
    std::uint64_t seed = 0;     // informational, set by callers
    OpCounts counts;            // everything issued, build included
    OpCounts post_build;        // issued after the initial load
    std::size_t points = 0;     // points loaded (per instance, summed over tiles)
    std::optional<bool> agree;  // unset when no oracle was consulted
    PhaseTimings timings;
};

enum class RangeQueryMode {
    Direct,     // DynamicSequence::query_range
    Sentinels,  // DynamicSequence::query_range_via_sentinels
};

struct MaxplusRun {
    Matrix product;
    ReductionReport report;
    std::vector<Weight> answers;  // raw range-query answers, column-major (k, j)
};

/// (max,+) product through a dynamic weighted chain structure. The embedding
/// geometry is loaded once with all b weights at 0; each column k of B is
/// then installed with n weight updates, followed by n range queries over
/// [x(a_j), x(a'_j)] from which C[j][k] is read off. Post-build this issues
/// exactly n^2 weight updates and n^2 queries.
///
/// Throws InvalidInput on dimension/bound violations and ReductionFailure if
/// an extracted value lies outside {0,...,2M}.
MaxplusRun maxplus_via_lis(const Matrix& a, const Matrix& b, Weight bound,
                           RangeQueryMode mode = RangeQueryMode::Direct, bool check_oracle = true);

/// Square decomposition of a zero-padded matrix into side x side tiles.
struct Tiling {
    std::size_t original = 0;  // m
    std::size_t side = 0;      // r
    std::size_t padded = 0;    // r * r
    std::vector<Matrix> tiles; // row-major over (i, l)

    std::size_t tiles_per_side() const noexcept { return padded / side; }
    const Matrix& tile(std::size_t i, std::size_t l) const { return tiles.at(i * tiles_per_side() + l); }
    Matrix reassemble() const;
};

/// Pads A with zeros to side r*r and cuts it into r x r tiles of side r.
/// Throws InvalidInput if r == 0 or r*r < m.
Tiling tile_matrix(const Matrix& a, std::size_t r);

/// r = ceil(sqrt(m)).
Tiling tile_matrix(const Matrix& a);

std::size_t ceil_sqrt(std::size_t m);

/// Online Boolean matrix-vector multiplication through unweighted range
/// chain queries. One unweighted DynamicSequence per tile holds the replica
/// expansion of that tile's Boolean embedding; each incoming vector toggles
/// b replicas (insert/delete) and issues one range query per tile row.
class OmvSession {
public:
    /// Throws InvalidInput for a non-Boolean matrix.
    explicit OmvSession(const Matrix& a);

    std::size_t dimension() const noexcept { return tiling_.original; }
    std::size_t tile_side() const noexcept { return tiling_.side; }
    std::size_t tile_count() const noexcept { return tiles_.size(); }
    const Tiling& tiling() const noexcept { return tiling_; }

    /// Computes A v. Throws InvalidInput on length mismatch and
    /// ReductionFailure on an out-of-range tile value.
    BitVector apply(const BitVector& v);

    /// (max,+) values A_{i,l} o v_l of tile (i,l) from the last apply().
    const std::vector<Weight>& tile_values(std::size_t i, std::size_t l) const;

    /// Current point count of tile (i,l)'s unweighted sequence.
    std::size_t tile_points(std::size_t i, std::size_t l) const;

    /// Sum of weights of tile (i,l)'s weighted embedding with b = 0.
    Weight tile_weight_total(std::size_t i, std::size_t l) const;

    std::size_t vectors_processed() const noexcept { return processed_; }
    std::size_t total_points() const;

    OpCounts counts() const;
    OpCounts counts_after_build() const { return counts() - build_counts_; }
    const PhaseTimings& timings() const noexcept { return timings_; }

private:
    struct Tile {
        Embedding embedding;
        Coord scale = 1;
        Weight weight_total = 0;
        DynamicSequence sequence;
        std::vector<std::optional<Handle>> b_replicas;  // per b_q, present iff bit set
        std::vector<Weight> values;
    };

    Tile& tile_at(std::size_t i, std::size_t l) { return tiles_.at(i * tiling_.tiles_per_side() + l); }
    const Tile& tile_at(std::size_t i, std::size_t l) const {
        return tiles_.at(i * tiling_.tiles_per_side() + l);
    }

    Tiling tiling_;
    std::vector<Tile> tiles_;
    std::size_t processed_ = 0;
    OpCounts build_counts_;
    PhaseTimings timings_;
};

OmvSession omv_init(const Matrix& a);
BitVector omv_apply(OmvSession& session, const BitVector& v);

/// Supplies the online vectors one at a time; next() returns nullopt at the
/// end of the stream.
using VectorSupplier = std::function<std::optional<BitVector>()>;
using ResultSink = std::function<void(std::size_t index, const BitVector& u)>;

/// Online loop: pulls vector k, emits A v_k, and only then pulls vector k+1.
/// If `oracle` is given each output is compared with boolean_matvec and the
/// report's agree flag set accordingly.
ReductionReport run_omv_online(OmvSession& session, const VectorSupplier& next, const ResultSink& emit,
                               const Matrix* oracle = nullptr);

}  // namespace lislab
