#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lislab/dynamic_sequence.hpp"

namespace lislab {

// Replay scripts for DynamicSequence, one operation per line:
//   I x y w | D handle | U handle w | QG | QR xlo xhi | QS xlo xhi
// optionally followed by "→ expected" (or "-> expected"). Blank lines and
// lines starting with '#' are ignored.

enum class OpKind { Insert, Delete, Update, QueryGlobal, QueryRange, QuerySentinel };

struct ScriptOp {
    OpKind kind = OpKind::QueryGlobal;
    Coord x = 0;
    Coord y = 0;
    Weight w = 0;
    std::uint64_t handle = 0;
    Coord xlo = 0;
    Coord xhi = 0;
    std::optional<Weight> expected;

    bool is_query() const noexcept {
        return kind == OpKind::QueryGlobal || kind == OpKind::QueryRange ||
               kind == OpKind::QuerySentinel;
    }
};

/// Throws InvalidInput naming the offending text.
ScriptOp parse_op(const std::string& line);
std::vector<ScriptOp> parse_script(std::istream& in);
std::string format_op(const ScriptOp& op);

struct ReplayResult {
    std::size_t operations = 0;
    std::size_t checked_queries = 0;
    std::vector<Weight> answers;   // one per query, in order
    std::vector<std::string> mismatches;

    bool ok() const noexcept { return mismatches.empty(); }
};

/// Applies the script; queries with an expected value are compared.
ReplayResult replay_script(DynamicSequence& seq, const std::vector<ScriptOp>& ops);

struct ScriptOptions {
    std::size_t steps = 1000;
    std::size_t universe = 300;  // candidate points; x and y are permutations
    Weight max_weight = 20;
};

/// Random mixed script whose expected answers come from the chain oracle run
/// on an independent model of the current point set.
std::vector<ScriptOp> random_script(std::uint64_t seed, const ScriptOptions& options = {});

}  // namespace lislab
