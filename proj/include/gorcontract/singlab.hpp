#pragma once

#include <string>
#include <vector>

#include "gorcontract/contract.hpp"
#include "gorcontract/poly.hpp"

namespace gorcontract {

// ---------------------------------------------------------------------------
// Explicit local presentations of the double-cover singularities, their
// gluing decomposition, normalization, conductor, delta invariant, Gorenstein
// certificate, dualising pullback, and the Rosenlicht-style generator.
//
// Exponent convention: the branch exponent e_i equals m_i, except at the
// image of a contracted component with a single branch, where the twist at
// the unique node above adds two: e_1 = m_1 + 2.
// ---------------------------------------------------------------------------

struct Presentation {
    std::vector<std::string> vars;      // s1..sl then the u variables
    std::vector<std::string> base_vars; // s1..sl
    std::vector<std::string> extra_vars;
    std::vector<Poly> relations;        // as displayed: s_i*s_j and the u quadrics
    // Module/multiplication relations among the u generators (the cross terms
    // s1*(u_i - u_j), s_i*u_j, u_i*u_j - d1*s1^m1); empty for l <= 2.
    std::vector<Poly> cross_relations;

    std::string render() const;  // one relation per line
};

// Local ring presentation for a chart, per the case catalogue: single-branch
// points give one quadric (exponent m+2 / 1 / 0 for contracted / branch-point
// / generic kinds); multi-branch points give the pairwise s_i*s_j relations
// and u_i^2 - d1*s1^e1 - d_i*s_i^ei. The single u is named "u" for two
// branches, u12..u1l otherwise.
Presentation present(const SingularityChart& chart);

struct GlueDecomposition {
    Presentation branch_one;   // k[[s1]][u1] / (u1^2 - d1 s1^m1)
    Presentation complement;   // transverse union of the remaining branches
    bool substitution_checks_ok = false;
    std::string cokernel;      // "k[e]/(e^2)"
};

// Splits the chart along the distinguished branch: restricting the full ideal
// by s_i = 0 (i >= 2), u_i = u1 gives the branch-one piece; restricting by
// s1 = 0 gives the transverse union of the others. The one-dimensional glue
// is witnessed by the cokernel k[e]/(e^2).
GlueDecomposition glue_decomposition(const SingularityChart& chart);

struct BranchParam {
    enum class Kind { even_pair, odd, ribbon } kind = Kind::odd;
    int branch = 0;  // index into chart.branches
    std::string s_image;
    std::string u_image;
};

struct NormalizationData {
    int h = 0;  // branches with delta=1 and even m (two points upstairs each)
    int k = 0;  // branches with delta=1 and odd m
    int d = 0;  // delta=0 branches
    std::vector<BranchParam> table;
    int reduced_branch_count() const { return 2 * h + k; }
};

// Parameter map of the normalization: s_i -> (a_i, b_i) / c_i^2 / d_i and the
// corresponding u images, following the even/odd/ribbon split.
NormalizationData normalize(const SingularityChart& chart);

struct ConductorExponent {
    std::string parameter;
    int exponent = 0;
};

struct GorensteinCertificate {
    std::vector<ConductorExponent> conductor;
    long long dim_O_over_c = 0;  // from the conductor exponents
    long long delta = 0;         // g(q) + 2h + k - 1
    bool ok = false;             // dim = 2 * delta
};

// The Gorenstein identity with the two sides computed by disjoint code paths:
// dim(O/c) summed from conductor exponents, delta from the genus formula.
// Refuses non-reduced charts.
GorensteinCertificate certify_gorenstein(const SingularityChart& chart);

struct PullbackMultiplicity {
    std::string point;  // q1, q1~, q2, ...
    int multiplicity = 0;
};

// Divisor of the dualising pullback on the pointed normalization:
// (m_i/2 + 1) on each of the two points over an even branch, (m_i + 1) on the
// point over an odd branch. Requires a reduced chart with all m >= 1.
std::vector<PullbackMultiplicity> dualizing_pullback(const SingularityChart& chart);

// Local generator of the dualising sheaf for multi-branch reduced charts:
// ds1/(u*s1) - sum ds_i/(u_i*s_i).
std::string eta_generator(const SingularityChart& chart);

// Delta invariant of the reduced sub-germ of a chart, assembled from the
// branch A-germ deltas plus the gluing: floor(e/2) per reduced branch, + l
// when two or more branches glue at the point. Used by the genus bookkeeping
// and as an independent cross-check of certify_gorenstein.
long long reduced_germ_delta(const SingularityChart& chart);

}  // namespace gorcontract
