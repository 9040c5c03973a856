#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lislab/chain_oracle.hpp"
#include "lislab/embedding.hpp"

namespace lislab {

/// One checked tuple: a predicted value (closed form, or a second oracle
/// route) against the brute-force oracle.
struct FormulaCheck {
    std::string kind;  // case_name() or "range-equals-endpoints" / "through-some-b"
    std::size_t n = 0;
    Weight multiplier = 1;
    std::uint64_t seed = 0;
    int i = -1;
    int i_prime = -1;
    int j = -1;
    Weight predicted = 0;
    std::optional<Weight> oracle;
    bool passed = false;
};

/// Deterministic random instance (A, b) for a sweep cell.
struct SweepInstance {
    Matrix a;
    std::vector<Weight> b;
};
SweepInstance make_sweep_instance(std::size_t n, Weight multiplier, std::uint64_t seed);

/// Checks every valid (case, i, i', j) tuple on one embedding. For
/// multiplier > 1 only the a_j -> a'_j form is checked. When
/// `with_range_checks` is set, also compares the x-range optimum over
/// [x(a_j), x(a'_j)] and the best chain forced through some b_i against
/// c(a_j, a'_j).
std::vector<FormulaCheck> check_embedding_formulas(const Embedding& emb, std::uint64_t seed,
                                                   bool with_range_checks = true);

struct SweepOptions {
    std::vector<std::size_t> sizes{1, 2, 3, 4, 5, 6};
    std::vector<Weight> multipliers{1};
    std::uint64_t first_seed = 0;
    std::uint64_t seed_count = 10;
    bool with_range_checks = true;
    /// Adds 1 to the weight of Lp(0,0) in every embedding, so the closed
    /// forms starting there must disagree with the oracle.
    bool perturb_turn_weight = false;
};

std::vector<FormulaCheck> run_formula_sweep(const SweepOptions& options);

}  // namespace lislab
