#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gorcontract/cover.hpp"
#include "gorcontract/rational.hpp"

namespace gorcontract {

// ---------------------------------------------------------------------------
// Conewise-linear functions on the target tree and the three balancing
// equations.
//
// Sign conventions, fixed once for the whole project:
//   * edge_slopes[e] is measured from edges[e].u toward edges[e].v; the
//     opposite orientation negates it.
//   * div_at sums outgoing slopes over edges only. Branch-leg and marking-leg
//     terms enter each balancing equation as explicit summands.
//   * canonical balancing:    val(v) - 2 + b(v)/2 - div(f)(v) - legs(f)(v) = 0
//   * tilde balancing:        val(v) - 2 - div(f)(v) - legs(f)(v) + b(v)/2 = 0
//     with the -1/2 branch-leg slope of the tilde normalization folded in via
//     branch_leg_slope.
//   * contraction balancing:  val(v) - 2 + b(v)/2 + div(f)(v) + legs(f)(v) = 0,
//     which is exactly deg_L(v) = 0.
// ---------------------------------------------------------------------------

struct CLFunction {
    std::vector<HalfInt> values;       // per vertex index
    std::vector<HalfInt> edge_slopes;  // per edge index, oriented u -> v
    std::vector<HalfInt> leg_slopes;   // per marking, in marking-id order
    HalfInt branch_leg_slope{};        // 0 for lambda_T, -1/2 for the tilde form

    static CLFunction zero(const TropCover& t);

    HalfInt slope_from(const TropCover& t, int edge, int source) const;
    // Support = vertices with strictly positive value.
    std::vector<int> support(const TropCover& t) const;
};

struct WellFormedReport {
    bool ok = true;
    std::vector<std::string> problems;
};

// Shape, integrality (half-integral slopes only on ramified edges), and value
// compatibility value(v) = value(u) + slope * length along every edge.
WellFormedReport check_well_formed(const TropCover& t, const CLFunction& f);

// Sum of outgoing edge slopes at v. Legs are not included.
HalfInt div_at(const TropCover& t, const CLFunction& f, int v);

// Sum of marking-leg slopes of f at v.
HalfInt leg_sum_at(const TropCover& t, const CLFunction& f, int v);

enum class BalanceMode { canonical, tilde, contraction };

struct BalanceEntry {
    int vertex = 0;
    HalfInt residual{};
    bool ok = false;
};

// Per-vertex balancing report. In contraction mode only the requested
// vertices are checked (defaults to the support of f).
std::vector<BalanceEntry> check_balancing(const TropCover& t, const CLFunction& f,
                                          BalanceMode mode,
                                          const std::vector<int>* vertices = nullptr);

struct SolveResult {
    bool ok = false;
    CLFunction fn;
    std::string error;  // set when !ok, names the offending vertex or edge
};

// The unique CL function vanishing off `support` and satisfying contraction
// balancing at every support vertex, solved exactly on the tree. Fails when
// the linear system has no solution, when positivity fails on the support, or
// when the resulting slopes violate edge integrality.
SolveResult solve_slopes(const TropCover& t, const std::vector<int>& support);

enum class Strictness { strict, lax };

struct DatumValidity {
    bool ok = false;
    std::vector<std::string> problems;
    std::vector<int> contracted_support;  // support vertices with deg_L = 0
    std::vector<int> ribbon_support;      // support vertices with deg_L > 0
};

// Strict: contraction balancing at every support vertex. Lax: deg_L >= 0
// everywhere. Both require f >= 0 and well-formedness.
DatumValidity is_contraction_datum(const TropCover& t, const CLFunction& f,
                                   Strictness strictness);

// ---------------------------------------------------------------------------
// Level structure, truncation, pullback, sprouting
// ---------------------------------------------------------------------------

struct LevelStructure {
    std::vector<int> level;  // per vertex, max is 0
    int depth = 0;           // lowest level is -depth
};

// Levels are the values of -lambda_bar translated so that the maximum is 0.
// Errors when a vertex value is not integral after translation.
LevelStructure level_structure(const TropCover& t, const CLFunction& lambda_bar);

struct Truncation {
    TropCover cover;  // copy of T, subdivided at interior level-i crossings
    CLFunction fn;    // lambda_i = max(-lambda_bar - i, 0)
    std::vector<int> new_vertices;  // indices of inserted 2-valent vertices
};

// Level truncation lambda_i on a subdivided copy of T. Requires i <= 0 and a
// lambda_bar with integral vertex levels. Inserted vertices carry b = 0 and
// no markings; leg slopes of lambda_i are zero (pending leg kinks are handled
// by sprout using the marking zero orders).
Truncation truncate(const TropCover& t, const CLFunction& lambda_bar, int i);

struct CoverCLFunction {
    std::vector<HalfInt> values;       // per cover vertex
    std::vector<HalfInt> edge_slopes;  // per cover edge, oriented u -> v
    std::vector<HalfInt> leg_slopes;   // per cover marking leg
};

// Pullback along the double cover: slopes double on lifts of ramified edges
// and copy onto both lifts of unramified ones; marking-leg slopes copy to the
// two conjugate legs. All resulting slopes are verified integral.
CoverCLFunction pullback_to_cover(const TropCover& t, const CoverGraph& g,
                                  const CLFunction& f);

struct SproutResult {
    TropCover cover;
    CLFunction fn;
    int sprouted = 0;  // number of inserted bubbles
};

// Log modification moving zero-carrying markings off the support: for each
// marking at a support vertex with sprout mass m (the positive stored leg
// slope if any, else the marking's zero order), a 2-valent vertex is inserted
// on the leg and the edge into the support is given descending slope m + 1.
// After sprouting no support vertex carries a marking with positive mass.
SproutResult sprout(const TropCover& t, const CLFunction& lambda_i);

}  // namespace gorcontract
