#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gorcontract/clfunc.hpp"
#include "gorcontract/contract.hpp"
#include "gorcontract/cover.hpp"

namespace gorcontract {

// ---------------------------------------------------------------------------
// Brute-force verifiers backing the property tests: exhaustive datum
// enumeration, a second genus route, and semigroup gap counting.
// ---------------------------------------------------------------------------

struct EnumerationSpec {
    int max_twice_slope = 4;                     // |2 * slope| bound per edge
    std::optional<std::vector<int>> support;     // restrict to this exact support
    std::int64_t guard = 10'000'000;             // search-space overflow guard
};

// Every slope assignment within bounds (respecting edge parity) whose
// associated function is a lax contraction datum; strict mode further filters
// to deg_L = 0 on the support. Leg slopes are zero throughout. Iteration is
// lexicographic in edge order, so results reproduce bit-identically.
// Throws when more than `guard` search nodes are visited.
std::vector<CLFunction> enumerate_data(const TropCover& t, const EnumerationSpec& spec,
                                       Strictness strictness);

// Serial reference and the OpenMP kernel partitioned by first-edge slope;
// enumerate_data dispatches to the parallel kernel when built with OpenMP.
std::vector<CLFunction> enumerate_data_serial(const TropCover& t, const EnumerationSpec& spec,
                                              Strictness strictness);
std::vector<CLFunction> enumerate_data_parallel(const TropCover& t, const EnumerationSpec& spec,
                                                Strictness strictness);

// Strict data found by solving the balancing system over every vertex subset
// rather than sweeping slopes; agrees with enumerate_data(strict) within
// bounds and is the fast path for larger trees.
std::vector<CLFunction> strict_data_via_solve(const TropCover& t, int max_twice_slope);

// Genus computed two independent ways: (a) from the cover graph, (b) from the
// contraction outcome as sum of surviving component genera + deltas of the
// singular points (via the branch-germ assembly, not the genus formula)
// - #components + 1. Throws on disagreement.
std::pair<int, long long> genus_two_ways(const TropCover& t, const CoverGraph& g,
                                         const ContractionOutcome& outcome);

// Number of gaps of the numerical semigroup <2, e> with e = m + 2 when the
// branch sits at a contracted point and e = m otherwise; counted by sieve.
// Requires odd m >= 1 (the unibranch case).
long long semigroup_delta(int m, bool contracted);

// ---------------------------------------------------------------------------
// Small census of decorated covers, for the enumeration-backed properties.
// ---------------------------------------------------------------------------

struct TreeShape {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
};

// All unlabelled trees with at most `max_edges` edges, deduplicated by the
// canonical rooted encoding and listed deterministically.
std::vector<TreeShape> tree_shapes(int max_edges);

// Valid covers over a shape: every ramification assignment, branch counts at
// each vertex equal to the parity minimum or minimum + 2, total 2g + 2 with
// g >= 2, and a single marking of order g - 1 at vertex 0.
std::vector<TropCover> decorated_covers(const TreeShape& shape);

}  // namespace gorcontract
