#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "nulldecomp/graph.hpp"

namespace nulldecomp {

using Rng = std::mt19937_64;

/// Generator for instance `index` of a run seeded with `seed`; independent of
/// how instances are scheduled across threads.
Rng instance_rng(std::uint64_t seed, std::uint64_t index);

/// Uniform labelled tree on n vertices (Pruefer decoding).
Graph random_tree(Rng& rng, std::size_t n);

/// Random labelled tree plus one random non-edge. Requires n >= 3.
Graph random_unicyclic(Rng& rng, std::size_t n);

/// Rejection-samples random_unicyclic until `accept` holds; gives up after
/// `max_attempts` and returns the last sample.
Graph random_unicyclic(Rng& rng, std::size_t n, const std::function<bool(const Graph&)>& accept,
                       std::size_t max_attempts = 200);

Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

}  // namespace nulldecomp
