#pragma once

#include <cstdint>
#include <random>

#include "shadowsum/checks/checks.hpp"
#include "shadowsum/shadow/shadow.hpp"

namespace shadowsum::checks {

// A valid shadow with at most max_regions regions, random ids and gleams,
// up to two vertices whose faces are backed by edges, extra edges, and
// external regions with boundary data admissible at level r.
shadow::Shadow random_shadow(std::mt19937_64 &rng, int r, int max_regions = 4);

// Colourings by brute force over all tuples, filtered by the definition.
std::vector<shadow::Coloring> naive_colorings(const RootContext &ctx, const shadow::Shadow &s);

// Random ids relabelled and strata reordered; perm[i] is the position in the
// result of region i of s.
shadow::Shadow permute_ids(std::mt19937_64 &rng, const shadow::Shadow &s, std::vector<int> &perm);

// Every vertex relabelled by a random slot permutation from the S4 action.
shadow::Shadow permute_tet_slots(std::mt19937_64 &rng, const shadow::Shadow &s);

// Enumeration vs naive filter, and exact per-colouring agreement of terms
// under id permutations and S4 slot relabelings, over random shadows at
// r in [3, max_r].
CheckResult check_shadow_properties(int cases, std::uint64_t seed, int max_r = 6);

} // namespace shadowsum::checks
