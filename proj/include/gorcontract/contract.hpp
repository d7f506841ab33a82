#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gorcontract/clfunc.hpp"
#include "gorcontract/cover.hpp"

namespace gorcontract {

// ---------------------------------------------------------------------------
// Graph-level outcome of the contraction: multidegrees of the twisted bundle
// L, the contraction locus, singular-point charts, ribbons, parity analysis,
// and the genus audit.
// ---------------------------------------------------------------------------

struct DegreeProfile {
    std::vector<HalfInt> deg;  // deg_L per vertex
    HalfInt total{};           // = g - 1 + sum of marking-leg slopes
};

// deg_L(v) = val(v) - 2 + b(v)/2 + div(f)(v) + leg slopes at v.
DegreeProfile multidegree(const TropCover& t, const CLFunction& f);
HalfInt deg_L_at(const TropCover& t, const CLFunction& f, int v);

// Connected components of {deg_L = 0} within the support of f; these are the
// exceptional fibres. Vertices with deg_L = 0 outside the support are not
// exceptional: the bundle is trivial on them only fibrewise, and every worked
// contraction keeps them as honest components of the target.
// Throws on a negative degree.
std::vector<std::vector<int>> contraction_locus(const TropCover& t, const DegreeProfile& profile,
                                                const CLFunction& f);

enum class ChartKind { contracted_component, node, branch_point, generic };

struct ChartBranch {
    int edge = -1;       // boundary edge index in T (-1 for synthetic charts)
    int m = 0;           // positive slope of 2*lambda_T at the branch = twice slope
    int delta = 1;       // 0 iff lambda_T > 0 on the branch component
    bool ramified = false;
};

struct SingularityChart {
    ChartKind kind = ChartKind::contracted_component;
    int ell = 0;  // number of branches of the contracted target at the point
    std::vector<ChartBranch> branches;  // reduced (delta=1) branches first
    int g_q = 0;                        // genus of the contracted cover subcurve
    std::vector<int> component;         // contracted T-vertices, empty for nodes

    int reduced_branch_count() const;  // 2h + k over delta=1 branches
    bool reduced() const;              // all branches have delta = 1
    // A branch is stacky when the slope parity disagrees with ramification
    // (an integral slope on a ramified edge). The local catalogue covers only
    // parity-consistent charts; stacky ones keep their numerical invariants
    // but have no presentation.
    bool orbifold() const;
};

struct Ribbon {
    std::vector<int> component;      // support vertices with deg_L > 0
    HalfInt double_structure_degree; // deg of O(-b/2 - lambda_T) on the component
    HalfInt genus;                   // -1 - degree
};

struct ParityRecord {
    int edge = 0;
    int side_b_sum = 0;     // branch points on the ends[0] side
    bool odd_for_b = false;
    bool odd_for_L2 = false;
    bool in_twisting_locus = false;
    // one component of T minus the edge is entirely contracted support; there
    // the balancing forces a strictly half-integral slope and even L2 parity
    bool contracted_side = false;
    bool lemma_violation = false;  // odd, contracted side, yet integral or odd for L2
};

struct PbarVertex {
    std::vector<int> t_vertices;  // one vertex, or a whole contracted component
    int ell = 0;                  // branch count for fused points, 0 otherwise
    bool orbifold = false;        // some constituent has half-integral deg_L
};

struct PbarEdge {
    int t_edge = 0;
    int u = 0, v = 0;  // PbarVertex indices
};

struct PbarGraph {
    std::vector<PbarVertex> vertices;
    std::vector<PbarEdge> edges;
};

struct AuditRecord {
    bool reduced = true;
    int genus = 0;         // from the input cover
    int route_cover = 0;   // sum of cover-vertex genera + b1
    std::optional<long long> route_contracted;  // reduced two-route check
    bool match = false;
    // breakdown of the contracted route
    long long surviving_genus_sum = 0;
    long long chart_delta_sum = 0;
    long long surviving_node_count = 0;
    long long component_count = 0;
    // non-reduced bookkeeping (ribbons glued along length-2 subschemes)
    std::optional<long long> assembled_pa;
    bool assembled_partial = false;
};

struct ContractionOutcome {
    DegreeProfile profile;
    std::vector<std::vector<int>> contracted;  // exceptional components
    std::vector<SingularityChart> charts;      // contracted points, then decorated nodes
    std::vector<Ribbon> ribbons;
    std::vector<int> twisting_locus;  // edge indices
    std::vector<ParityRecord> parity;
    PbarGraph pbar;
    AuditRecord audit;
};

struct ParityAnalysis {
    std::vector<ParityRecord> records;
    std::vector<int> odd_nodes;   // odd for L2
    std::vector<int> even_nodes;
    std::vector<int> twisting_locus;
};

// Classifies every edge as odd/even for L^2 via the two-sided branch sums
// corrected by twice the lambda_T slope; the twisting locus collects odd
// nodes outside the support.
ParityAnalysis parity_analysis(const TropCover& t, const CLFunction& f,
                               const DegreeProfile& profile);

// Full outcome of the contraction for a lax-valid datum.
ContractionOutcome contract(const TropCover& t, const CoverGraph& g, const CLFunction& f);

// Two-route genus check. The reduced route recomputes the arithmetic genus
// from the normalization: sum of surviving component genera + sum of chart
// deltas + one per surviving node - #components + 1. A mismatch throws with
// the full breakdown.
AuditRecord genus_audit(const TropCover& t, const CoverGraph& g, const CLFunction& f,
                        const ContractionOutcome& outcome);

}  // namespace gorcontract
