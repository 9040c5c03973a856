#pragma once

#include <nlohmann/json.hpp>

#include "lislab/formula_sweep.hpp"
#include "lislab/reductions.hpp"

namespace lislab::cli {

using Json = nlohmann::ordered_json;

/// {problem, n|m, M, seeds, counts{...}, agree, timings_ms{build,update,query}}
/// plus post_build_counts and points. `agree` is null when no oracle ran.
Json report_to_json(const ReductionReport& report);

Json counts_to_json(const OpCounts& counts);

Json check_to_json(const FormulaCheck& check);

/// Strips timing fields, leaving the part of a report that is reproducible.
Json without_timings(Json report);

}  // namespace lislab::cli
