#include "lislab/formula_sweep.hpp"

#include <algorithm>
#include <random>

#include "lislab/random.hpp"

namespace lislab {

SweepInstance make_sweep_instance(std::size_t n, Weight multiplier, std::uint64_t seed) {
    std::seed_seq seq{static_cast<std::uint64_t>(seed), static_cast<std::uint64_t>(n),
                      static_cast<std::uint64_t>(multiplier)};
    Rng rng(seq);
    Matrix a = random_matrix(n, multiplier, rng);
    auto b = random_weights(n, multiplier, rng);
    return {std::move(a), std::move(b)};
}

std::vector<FormulaCheck> check_embedding_formulas(const Embedding& emb, std::uint64_t seed,
                                                   bool with_range_checks) {
    std::vector<FormulaCheck> out;
    const int n = static_cast<int>(emb.n());
    const PointSet& pts = emb.points();

    auto check_case = [&](ChainCase c, int i, int i_prime, int j) {
        const auto [from, to] = case_endpoints(c, i, i_prime, j);
        FormulaCheck rec;
        rec.kind = std::string(case_name(c));
        rec.n = emb.n();
        rec.multiplier = emb.multiplier();
        rec.seed = seed;
        rec.i = i;
        rec.i_prime = i_prime;
        rec.j = j;
        rec.predicted = closed_form_c(emb, c, i, i_prime, j);
        rec.oracle = max_weight_chain_between(pts, emb.at(from), emb.at(to));
        rec.passed = rec.oracle && *rec.oracle == rec.predicted;
        out.push_back(std::move(rec));
    };

    for (int j = 0; j < n; ++j) {
        if (emb.multiplier() == 1) {
            for (int i = 0; i < n; ++i) {
                check_case(ChainCase::LToBSameRow, i, i, j);
                check_case(ChainCase::LpToBSameRow, i, i, j);
                for (int ip = i + 1; ip < n; ++ip) {
                    check_case(ChainCase::LToBLowerRow, i, ip, j);
                    check_case(ChainCase::LpToBLowerRow, i, ip, j);
                }
                check_case(ChainCase::AToB, i, -1, j);
                check_case(ChainCase::BToAp, i, -1, j);
            }
        }
        check_case(ChainCase::AToAp, -1, -1, j);

        if (!with_range_checks) continue;
        const auto& a = emb.at(PointLabel::a(j));
        const auto& ap = emb.at(PointLabel::a_prime(j));
        const auto endpoints = max_weight_chain_between(pts, a, ap);

        FormulaCheck range;
        range.kind = "range-equals-endpoints";
        range.n = emb.n();
        range.multiplier = emb.multiplier();
        range.seed = seed;
        range.j = j;
        range.predicted = endpoints.value_or(-1);
        range.oracle = max_weight_chain_in_xrange(pts, a.x, ap.x);
        range.passed = endpoints && range.oracle == endpoints;
        out.push_back(range);

        std::optional<Weight> via_b;
        for (int i = 0; i < n; ++i) {
            auto w = max_weight_chain_through(pts, a, emb.at(PointLabel::b(i)), ap);
            if (w && (!via_b || *w > *via_b)) via_b = w;
        }
        FormulaCheck through = range;
        through.kind = "through-some-b";
        through.predicted = via_b.value_or(-1);
        through.oracle = endpoints;
        through.passed = via_b && endpoints && *via_b == *endpoints;
        out.push_back(through);
    }
    return out;
}

std::vector<FormulaCheck> run_formula_sweep(const SweepOptions& options) {
    std::vector<FormulaCheck> out;
    for (Weight m : options.multipliers) {
        for (std::size_t n : options.sizes) {
            for (std::uint64_t s = 0; s < options.seed_count; ++s) {
                const std::uint64_t seed = options.first_seed + s;
                auto inst = make_sweep_instance(n, m, seed);
                Embedding emb = build_embedding(inst.a, inst.b, m);
                if (options.perturb_turn_weight) emb.mutable_point(PointLabel::turn(0, 0)).w += 1;
                auto checks = check_embedding_formulas(emb, seed, options.with_range_checks);
                out.insert(out.end(), std::make_move_iterator(checks.begin()),
                           std::make_move_iterator(checks.end()));
            }
        }
    }
    return out;
}

}  // namespace lislab
