#pragma once

#include <string>
#include <vector>

#include "gorcontract/rational.hpp"

namespace gorcontract {

// ---------------------------------------------------------------------------
// Tropical side of a hyperelliptic admissible cover: the rational target tree
// T decorated with branch-point counts and marking legs, plus the derived
// double-cover graph.
// ---------------------------------------------------------------------------

struct MarkingLeg {
    int id = 0;          // index into mu
    int zero_order = 0;  // must equal mu[id]
};

struct TVertex {
    int id = 0;  // external id, unique; internal references use positions
    int branch_count = 0;
    std::vector<MarkingLeg> markings;
};

struct TEdge {
    int id = 0;
    int u = 0, v = 0;  // vertex indices (positions, not external ids)
    bool ramified = false;
    Rat length{1};
};

struct TropCover {
    int genus = 0;
    std::vector<int> mu;
    std::vector<TVertex> vertices;
    std::vector<TEdge> edges;

    // derived adjacency, rebuilt by finalize()
    std::vector<std::vector<int>> incident;

    void finalize();

    int valence(int v) const { return (int)incident.at(v).size(); }
    // number of adjacent ramified edges
    int ram_valence(int v) const;
    int other_end(int e, int v) const;
    int vertex_index_of_id(int id) const;
    int edge_index_of_id(int id) const;

    // All marking legs as (vertex index, marking), sorted by marking id.
    std::vector<std::pair<int, MarkingLeg>> marking_table() const;

    // Preimage vertex count in the double cover: 2 iff b + k = 0.
    bool splits(int v) const { return vertices[v].branch_count + ram_valence(v) == 0; }
    // Genus of the unique cover vertex when b + k > 0.
    int cover_genus(int v) const;
};

struct Violation {
    std::string code;
    std::string message;
};

struct ValidationReport {
    bool passed = true;
    std::vector<Violation> violations;
    void fail(std::string code, std::string message) {
        passed = false;
        violations.push_back({std::move(code), std::move(message)});
    }
};

// Checks the admissible-cover invariants: tree-ness, branch-count sum 2g+2,
// parity b(v)+k(v) even, non-negative derived genera, and the zero-order
// bookkeeping against mu.
ValidationReport validate_cover(const TropCover& t);

// ---------------------------------------------------------------------------
// Double cover graph
// ---------------------------------------------------------------------------

struct GVertex {
    int base = 0;   // base vertex index
    int copy = 0;   // 0, or 0/1 for split preimages
    int genus = 0;
};

struct GEdge {
    int base_edge = 0;
    int copy = 0;  // 0, or 0/1 for the two lifts of an unramified edge
    int u = 0, v = 0;  // cover vertex indices
};

struct CoverLeg {
    int marking_id = 0;
    int copy = 0;  // conjugate pair index
    int vertex = 0;
    int zero_order = 0;
};

struct CoverGraph {
    std::vector<GVertex> vertices;
    std::vector<GEdge> edges;
    std::vector<std::vector<int>> lifts;  // base vertex -> cover vertex indices
    std::vector<std::vector<int>> edge_lifts;  // base edge -> cover edge indices
    std::vector<CoverLeg> marking_legs;        // two per base marking, sorted

    int first_betti() const { return (int)edges.size() - (int)vertices.size() + component_count(); }
    int component_count() const;
    int genus() const;  // sum of vertex genera + b1
};

// Deterministic double cover of a validated target tree. Throws
// std::invalid_argument when validate_cover fails.
CoverGraph build_cover_graph(const TropCover& t);

// Genus of the cover subcurve lying over the connected vertex set S:
// sum of cover-vertex genera plus the first Betti number of the preimage.
int contracted_subcurve_genus(const TropCover& t, const CoverGraph& g,
                              const std::vector<int>& S);

// Connected components of a vertex subset inside T (as sorted index lists).
std::vector<std::vector<int>> components_in_tree(const TropCover& t,
                                                 const std::vector<int>& subset);

// Sum of branch counts on one side of an edge (the side containing `side_vertex`).
int side_branch_sum(const TropCover& t, int edge, int side_vertex);

}  // namespace gorcontract
