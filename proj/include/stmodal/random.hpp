#pragma once

#include "stmodal/formula.hpp"
#include "stmodal/minkowski.hpp"
#include "stmodal/model.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace stmodal {

using Rng = std::mt19937_64;

/// Independent seed for sub-task `stream` of a run seeded with `seed` (splitmix64 mix).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// 1..max_worlds worlds, each edge present with probability `density`.
Frame random_frame(Rng& rng, std::size_t max_worlds, double density = 0.35);
/// Transitive closure of a random frame; each world is made reflexive with probability `reflexive`.
Frame random_transitive_frame(Rng& rng, std::size_t max_worlds, double density = 0.3, double reflexive = 0.5);

/// Random formula over p1..p{atom_count} of modal depth at most `depth`.
Formula random_formula(Rng& rng, int depth, int atom_count);
Model random_model(Rng& rng, const Frame& frame, int atom_count);

/// k/den with |k/den| <= range.
Rational random_rational(Rng& rng, int range, int den);
MinkPoint random_point(Rng& rng, std::size_t n, int range = 4, int den = 4);
/// (1, u) with u a rational unit vector in R^n, via inverse stereographic projection.
MinkPoint random_null_direction(Rng& rng, std::size_t n);
/// Future pointing vector, null with probability 1/2 and timelike otherwise.
MinkPoint random_future_causal(Rng& rng, std::size_t n);

} // namespace stmodal
