#pragma once

#include <cstdint>
#include <random>

#include "lislab/matrix.hpp"

namespace lislab {

using Rng = std::mt19937_64;

inline Weight uniform_weight(Rng& rng, Weight lo, Weight hi) {
    return std::uniform_int_distribution<Weight>(lo, hi)(rng);
}

inline Matrix random_matrix(std::size_t n, Weight bound, Rng& rng) {
    std::vector<Weight> entries(n * n);
    for (auto& e : entries) e = uniform_weight(rng, 0, bound);
    return Matrix(n, bound, std::move(entries));
}

inline std::vector<Weight> random_weights(std::size_t n, Weight bound, Rng& rng) {
    std::vector<Weight> out(n);
    for (auto& e : out) e = uniform_weight(rng, 0, bound);
    return out;
}

inline BitVector random_bitvector(std::size_t n, Rng& rng) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, uniform_weight(rng, 0, 1) == 1);
    return v;
}

}  // namespace lislab
