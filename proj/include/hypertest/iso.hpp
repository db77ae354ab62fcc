#pragma once

#include <string>

#include "hypertest/hypergraph.hpp"

namespace hypertest {

// Canonical form of a hypergraph under vertex relabelling: the
// lexicographically smallest edge indicator string over all vertex orders,
// found by prefix branch-and-bound with transposition-symmetry pruning.
// Guarded at n <= 10 (the scales at which testers compare samples).
//
// The returned string is an opaque key: equal strings <=> isomorphic graphs
// (with matching n and k, which are encoded in the header bytes).
std::string canonical_signature(const Hypergraph& h);

bool isomorphic(const Hypergraph& a, const Hypergraph& b);

// |Aut(F)|: number of vertex permutations mapping the edge set onto itself.
// Guarded at n <= 10.
u64 automorphism_count(const Hypergraph& h);

}  // namespace hypertest
