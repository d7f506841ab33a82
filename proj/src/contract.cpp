#include "gorcontract/contract.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gorcontract/singlab.hpp"

namespace gorcontract {

HalfInt deg_L_at(const TropCover& t, const CLFunction& f, int v) {
    int b = t.vertices.at(v).branch_count;
    return HalfInt::whole(t.valence(v) - 2) + HalfInt::from_twice(b) + div_at(t, f, v) +
           leg_sum_at(t, f, v) + f.branch_leg_slope * b;
}

DegreeProfile multidegree(const TropCover& t, const CLFunction& f) {
    DegreeProfile p;
    for (size_t v = 0; v < t.vertices.size(); ++v) {
        p.deg.push_back(deg_L_at(t, f, (int)v));
        p.total += p.deg.back();
    }
    return p;
}

std::vector<std::vector<int>> contraction_locus(const TropCover& t, const DegreeProfile& profile,
                                                const CLFunction& f) {
    std::vector<int> zero_support;
    for (size_t v = 0; v < profile.deg.size(); ++v) {
        if (profile.deg[v] < HalfInt{})
            throw std::invalid_argument("invalid datum: negative deg_L at vertex " +
                                        std::to_string(t.vertices[v].id));
        if (profile.deg[v].is_zero() && f.values[v] > HalfInt{}) zero_support.push_back((int)v);
    }
    return components_in_tree(t, zero_support);
}

ParityAnalysis parity_analysis(const TropCover& t, const CLFunction& f,
                               const DegreeProfile& profile) {
    ParityAnalysis out;
    size_t n = t.vertices.size();

    // one rooted pass: subtree branch sums and contracted-vertex counts
    std::vector<int> parent(n, -1), parent_edge(n, -1), order;
    order.reserve(n);
    {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (int e : t.incident[v]) {
                int w = t.other_end(e, v);
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = v;
                    parent_edge[w] = e;
                    stack.push_back(w);
                }
            }
        }
    }
    std::vector<char> is_contracted(n, 0);
    int total_b = 0, total_nc = 0;
    for (size_t v = 0; v < n; ++v) {
        is_contracted[v] = profile.deg[v].is_zero() && f.values[v] > HalfInt{};
        total_b += t.vertices[v].branch_count;
        if (!is_contracted[v]) ++total_nc;
    }
    std::vector<int> sub_b(n, 0), sub_nc(n, 0);
    for (size_t i = order.size(); i-- > 0;) {
        int v = order[i];
        sub_b[v] += t.vertices[v].branch_count;
        sub_nc[v] += is_contracted[v] ? 0 : 1;
        if (parent[v] >= 0) {
            sub_b[parent[v]] += sub_b[v];
            sub_nc[parent[v]] += sub_nc[v];
        }
    }

    std::vector<char> in_supp(n, 0);
    for (int v : f.support(t)) in_supp[v] = 1;

    for (size_t e = 0; e < t.edges.size(); ++e) {
        int u = t.edges[e].u, v = t.edges[e].v;
        int child = parent_edge[u] == (int)e ? u : v;
        int child_b = sub_b[child], child_nc = sub_nc[child];

        ParityRecord r;
        r.edge = (int)e;
        r.side_b_sum = u == child ? child_b : total_b - child_b;
        r.odd_for_b = r.side_b_sum % 2 != 0;
        std::int64_t twice = f.edge_slopes[e].twice;
        r.odd_for_L2 = (r.side_b_sum + twice) % 2 != 0;
        bool outside_support = !in_supp[u] && !in_supp[v];
        r.in_twisting_locus = r.odd_for_L2 && outside_support;
        r.contracted_side = child_nc == 0 || total_nc - child_nc == 0;
        // where one whole side collapses, the balancing there forces a
        // strictly half-integral slope that corrects the parity of b
        if (r.odd_for_b && r.contracted_side)
            r.lemma_violation = f.edge_slopes[e].is_integer() || r.odd_for_L2;
        out.records.push_back(r);
        if (r.odd_for_L2)
            out.odd_nodes.push_back((int)e);
        else
            out.even_nodes.push_back((int)e);
        if (r.in_twisting_locus) out.twisting_locus.push_back((int)e);
    }
    return out;
}

int SingularityChart::reduced_branch_count() const {
    // an unramified branch has two points upstairs, a ramified one has one
    int n = 0;
    for (const auto& b : branches)
        if (b.delta == 1) n += b.ramified ? 1 : 2;
    return n;
}

bool SingularityChart::reduced() const {
    return std::all_of(branches.begin(), branches.end(),
                       [](const ChartBranch& b) { return b.delta == 1; });
}

bool SingularityChart::orbifold() const {
    return std::any_of(branches.begin(), branches.end(), [](const ChartBranch& b) {
        return b.delta == 1 && (b.m % 2 == 0) == b.ramified;
    });
}

namespace {

SingularityChart chart_for_component(const TropCover& t, const CoverGraph& g,
                                     const CLFunction& f, const std::vector<int>& comp,
                                     const std::set<int>& supp) {
    std::set<int> in(comp.begin(), comp.end());
    SingularityChart chart;
    chart.component = comp;
    std::vector<ChartBranch> reduced, ribbon;
    for (int v : comp) {
        for (int e : t.incident[v]) {
            int w = t.other_end(e, v);
            if (in.count(w)) continue;
            ChartBranch b;
            b.edge = e;
            // descending rate out of the support, doubled
            std::int64_t twice = f.slope_from(t, e, v).twice;
            b.m = (int)(twice < 0 ? -twice : twice);
            b.delta = supp.count(w) ? 0 : 1;
            b.ramified = t.edges[e].ramified;
            if (b.delta == 1 && b.m <= 0)
                throw std::logic_error("contracted chart has a branch with m <= 0 on edge " +
                                       std::to_string(t.edges[e].id));
            (b.delta == 1 ? reduced : ribbon).push_back(b);
        }
    }
    auto by_edge = [](const ChartBranch& a, const ChartBranch& b) { return a.edge < b.edge; };
    std::sort(reduced.begin(), reduced.end(), by_edge);
    std::sort(ribbon.begin(), ribbon.end(), by_edge);
    chart.branches = reduced;
    chart.branches.insert(chart.branches.end(), ribbon.begin(), ribbon.end());
    chart.ell = (int)chart.branches.size();
    if (chart.ell == 0)
        throw std::invalid_argument(
            "the datum contracts the whole target; the outcome is not a curve");
    chart.kind = chart.ell == 1 ? ChartKind::contracted_component : ChartKind::node;
    chart.g_q = contracted_subcurve_genus(t, g, comp);
    return chart;
}

}  // namespace

ContractionOutcome contract(const TropCover& t, const CoverGraph& g, const CLFunction& f) {
    DatumValidity validity = is_contraction_datum(t, f, Strictness::lax);
    if (!validity.ok) {
        std::string msg = "not a lax contraction datum:";
        for (const auto& p : validity.problems) msg += " " + p;
        throw std::invalid_argument(msg);
    }

    ContractionOutcome out;
    out.profile = multidegree(t, f);
    out.contracted = contraction_locus(t, out.profile, f);

    std::set<int> supp;
    for (int v : f.support(t)) supp.insert(v);
    std::set<int> contracted_vertices;
    for (const auto& comp : out.contracted)
        for (int v : comp) contracted_vertices.insert(v);

    for (const auto& comp : out.contracted)
        out.charts.push_back(chart_for_component(t, g, f, comp, supp));

    // ribbons: support components of positive degree
    std::vector<int> positive_support;
    for (int v : supp)
        if (out.profile.deg[v] > HalfInt{}) positive_support.push_back(v);
    for (const auto& comp : components_in_tree(t, positive_support)) {
        Ribbon r;
        r.component = comp;
        std::set<int> in(comp.begin(), comp.end());
        HalfInt deg{};
        for (int v : comp) {
            deg -= HalfInt::from_twice(t.vertices[v].branch_count);  // -b/2
            for (int e : t.incident[v])
                if (!in.count(t.other_end(e, v))) deg -= f.slope_from(t, e, v);
        }
        r.double_structure_degree = deg;
        r.genus = HalfInt::whole(-1) - deg;
        out.ribbons.push_back(r);
    }

    // decorated surviving nodes: edges with nonzero slope joining uncontracted sides
    for (size_t e = 0; e < t.edges.size(); ++e) {
        if (f.edge_slopes[e].is_zero()) continue;
        int u = t.edges[e].u, v = t.edges[e].v;
        if (contracted_vertices.count(u) || contracted_vertices.count(v)) continue;
        SingularityChart chart;
        chart.kind = ChartKind::node;
        chart.ell = 2;
        chart.g_q = 0;
        std::int64_t twice = f.edge_slopes[e].twice;
        int m = (int)(twice < 0 ? -twice : twice);
        ChartBranch bu{(int)e, m, supp.count(u) ? 0 : 1, t.edges[e].ramified};
        ChartBranch bv{(int)e, m, supp.count(v) ? 0 : 1, t.edges[e].ramified};
        // reduced side first
        if (bu.delta >= bv.delta)
            chart.branches = {bu, bv};
        else
            chart.branches = {bv, bu};
        out.charts.push_back(chart);
    }

    ParityAnalysis parity = parity_analysis(t, f, out.profile);
    out.parity = parity.records;
    out.twisting_locus = parity.twisting_locus;

    // surviving target graph with contracted components fused
    std::vector<int> pbar_index(t.vertices.size(), -1);
    for (size_t v = 0; v < t.vertices.size(); ++v) {
        if (contracted_vertices.count((int)v)) continue;
        PbarVertex pv;
        pv.t_vertices = {(int)v};
        pv.orbifold = !out.profile.deg[v].is_integer();
        pbar_index[v] = (int)out.pbar.vertices.size();
        out.pbar.vertices.push_back(pv);
    }
    for (const auto& comp : out.contracted) {
        PbarVertex pv;
        pv.t_vertices = comp;
        std::set<int> in(comp.begin(), comp.end());
        for (int v : comp)
            for (int e : t.incident[v])
                if (!in.count(t.other_end(e, v))) ++pv.ell;
        for (int v : comp) pbar_index[v] = (int)out.pbar.vertices.size();
        out.pbar.vertices.push_back(pv);
    }
    for (size_t e = 0; e < t.edges.size(); ++e) {
        int pu = pbar_index[t.edges[e].u], pv = pbar_index[t.edges[e].v];
        if (pu == pv) continue;  // contracted away
        out.pbar.edges.push_back({(int)e, pu, pv});
    }

    out.audit = genus_audit(t, g, f, out);
    return out;
}

AuditRecord genus_audit(const TropCover& t, const CoverGraph& g, const CLFunction& f,
                        const ContractionOutcome& outcome) {
    AuditRecord a;
    a.genus = t.genus;
    a.route_cover = g.genus();
    a.reduced = outcome.ribbons.empty();

    std::set<int> contracted_vertices;
    for (const auto& comp : outcome.contracted)
        for (int v : comp) contracted_vertices.insert(v);
    std::set<int> ribbon_vertices;
    for (const auto& r : outcome.ribbons)
        for (int v : r.component) ribbon_vertices.insert(v);

    auto surviving_cover_vertex = [&](int cv) {
        return !contracted_vertices.count(g.vertices[cv].base);
    };

    if (a.reduced) {
        long long comps = 0, genus_sum = 0, nodes = 0, delta_sum = 0;
        for (size_t cv = 0; cv < g.vertices.size(); ++cv)
            if (surviving_cover_vertex((int)cv)) {
                ++comps;
                genus_sum += g.vertices[cv].genus;
            }
        for (const auto& e : g.edges)
            if (surviving_cover_vertex(e.u) && surviving_cover_vertex(e.v)) ++nodes;
        for (const auto& chart : outcome.charts) delta_sum += certify_gorenstein(chart).delta;

        a.surviving_genus_sum = genus_sum;
        a.chart_delta_sum = delta_sum;
        a.surviving_node_count = nodes;
        a.component_count = comps;
        a.route_contracted = genus_sum + delta_sum + nodes - comps + 1;
        a.match = (*a.route_contracted == a.route_cover) && (a.route_cover == t.genus);
        if (!a.match)
            throw std::logic_error(
                "genus audit mismatch: cover route " + std::to_string(a.route_cover) +
                ", contracted route " + std::to_string(*a.route_contracted) + " (genera " +
                std::to_string(genus_sum) + " + deltas " + std::to_string(delta_sum) +
                " + nodes " + std::to_string(nodes) + " - components " + std::to_string(comps) +
                " + 1), expected g = " + std::to_string(t.genus));
        return a;
    }

    // Non-reduced bookkeeping: Euler characteristic of the reduced structure
    // part, ribbons as separate pieces, length-2 gluings at the delta=0
    // branches. Informational; no independent second route exists here.
    bool partial = false;
    long long chi = 0;
    for (size_t cv = 0; cv < g.vertices.size(); ++cv) {
        int base = g.vertices[cv].base;
        if (contracted_vertices.count(base) || ribbon_vertices.count(base)) continue;
        chi += 1 - g.vertices[cv].genus;
    }
    for (const auto& e : g.edges) {
        int bu = g.vertices[e.u].base, bv = g.vertices[e.v].base;
        bool u_in = !contracted_vertices.count(bu) && !ribbon_vertices.count(bu);
        bool v_in = !contracted_vertices.count(bv) && !ribbon_vertices.count(bv);
        if (u_in && v_in && !f.edge_slopes[e.base_edge].is_zero()) continue;  // chart point
        if (u_in && v_in) chi -= 1;  // plain surviving node
    }
    long long attachments = 0;
    for (const auto& chart : outcome.charts) {
        long long reduced_branches = 0;
        for (const auto& b : chart.branches) {
            if (b.delta == 0)
                ++attachments;
            else
                ++reduced_branches;
        }
        if (reduced_branches == 0) {
            partial = true;  // pure ribbon pinch; contracted genus not visible here
            continue;
        }
        chi -= reduced_germ_delta(chart);
    }
    for (const auto& r : outcome.ribbons) {
        if (!r.genus.is_integer()) {
            partial = true;
            continue;
        }
        chi += 1 - r.genus.to_integer();
    }
    chi -= 2 * attachments;
    a.assembled_partial = partial;
    if (!partial) a.assembled_pa = 1 - chi;
    a.match = !partial && a.assembled_pa && *a.assembled_pa == a.route_cover;
    return a;
}

}  // namespace gorcontract
