#include "gorcontract/clfunc.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "gorcontract/contract.hpp"

namespace gorcontract {

CLFunction CLFunction::zero(const TropCover& t) {
    CLFunction f;
    f.values.assign(t.vertices.size(), HalfInt{});
    f.edge_slopes.assign(t.edges.size(), HalfInt{});
    f.leg_slopes.assign(t.mu.size(), HalfInt{});
    return f;
}

HalfInt CLFunction::slope_from(const TropCover& t, int edge, int source) const {
    const TEdge& e = t.edges.at(edge);
    if (e.u == source) return edge_slopes.at(edge);
    if (e.v == source) return -edge_slopes.at(edge);
    throw std::logic_error("vertex not on edge");
}

std::vector<int> CLFunction::support(const TropCover& t) const {
    std::vector<int> s;
    for (size_t v = 0; v < t.vertices.size(); ++v)
        if (values[v] > HalfInt{}) s.push_back((int)v);
    return s;
}

WellFormedReport check_well_formed(const TropCover& t, const CLFunction& f) {
    WellFormedReport r;
    auto bad = [&](std::string m) {
        r.ok = false;
        r.problems.push_back(std::move(m));
    };
    if (f.values.size() != t.vertices.size()) bad("value count does not match vertex count");
    if (f.edge_slopes.size() != t.edges.size()) bad("slope count does not match edge count");
    if (f.leg_slopes.size() != t.mu.size()) bad("leg slope count does not match marking count");
    if (!r.ok) return r;

    for (size_t e = 0; e < t.edges.size(); ++e) {
        if (!t.edges[e].ramified && !f.edge_slopes[e].is_integer())
            bad("slope " + f.edge_slopes[e].str() + " on unramified edge " +
                std::to_string(t.edges[e].id) + " must be integral");
        // value compatibility along the edge
        Rat expect = f.values[t.edges[e].u].to_rat() +
                     f.edge_slopes[e].to_rat() * t.edges[e].length;
        if (expect != f.values[t.edges[e].v].to_rat())
            bad("values along edge " + std::to_string(t.edges[e].id) +
                " are incompatible with its slope and length");
    }
    for (size_t m = 0; m < f.leg_slopes.size(); ++m)
        if (!f.leg_slopes[m].is_integer())
            bad("slope on marking leg " + std::to_string(m) + " must be integral");
    return r;
}

HalfInt div_at(const TropCover& t, const CLFunction& f, int v) {
    if (v < 0 || v >= (int)t.vertices.size())
        throw std::invalid_argument("unknown vertex index " + std::to_string(v));
    HalfInt s{};
    for (int e : t.incident[v]) s += f.slope_from(t, e, v);
    return s;
}

HalfInt leg_sum_at(const TropCover& t, const CLFunction& f, int v) {
    HalfInt s{};
    auto table = t.marking_table();
    for (size_t m = 0; m < table.size(); ++m)
        if (table[m].first == v) s += f.leg_slopes.at(m);
    return s;
}

std::vector<BalanceEntry> check_balancing(const TropCover& t, const CLFunction& f,
                                          BalanceMode mode, const std::vector<int>* vertices) {
    std::vector<int> targets;
    if (vertices)
        targets = *vertices;
    else if (mode == BalanceMode::contraction)
        targets = f.support(t);
    else
        for (size_t v = 0; v < t.vertices.size(); ++v) targets.push_back((int)v);

    std::vector<BalanceEntry> out;
    for (int v : targets) {
        int b = t.vertices.at(v).branch_count;
        HalfInt divisor = div_at(t, f, v) + leg_sum_at(t, f, v) + f.branch_leg_slope * b;
        HalfInt val2 = HalfInt::whole(t.valence(v) - 2);
        HalfInt half_b = HalfInt::from_twice(b);
        HalfInt residual;
        switch (mode) {
            case BalanceMode::canonical: residual = val2 + half_b - divisor; break;
            case BalanceMode::tilde: residual = val2 - divisor; break;
            case BalanceMode::contraction: residual = val2 + half_b + divisor; break;
        }
        out.push_back({v, residual, residual.is_zero()});
    }
    return out;
}

namespace {

// Exact Gaussian elimination; returns false when the system is singular.
bool gauss_solve(std::vector<std::vector<Rat>>& a, std::vector<Rat>& rhs,
                 std::vector<Rat>& x, bool& inconsistent) {
    size_t n = rhs.size();
    inconsistent = false;
    for (size_t col = 0, row = 0; col < n && row < n; ++col, ++row) {
        size_t piv = row;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) {
            // singular; check consistency of the remaining rows later
            for (size_t r = row; r < n; ++r) {
                bool all_zero = true;
                for (size_t c = 0; c < n; ++c)
                    if (!a[r][c].is_zero()) all_zero = false;
                if (all_zero && !rhs[r].is_zero()) inconsistent = true;
            }
            return false;
        }
        std::swap(a[piv], a[row]);
        std::swap(rhs[piv], rhs[row]);
        for (size_t r = 0; r < n; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            Rat factor = a[r][col] / a[row][col];
            for (size_t c = col; c < n; ++c) a[r][c] = a[r][c] - factor * a[row][c];
            rhs[r] = rhs[r] - factor * rhs[row];
        }
    }
    x.assign(n, Rat(0));
    for (size_t r = 0; r < n; ++r) x[r] = rhs[r] / a[r][r];
    return true;
}

}  // namespace

SolveResult solve_slopes(const TropCover& t, const std::vector<int>& support) {
    SolveResult res;
    std::set<int> supp(support.begin(), support.end());
    for (int v : supp)
        if (v < 0 || v >= (int)t.vertices.size()) {
            res.error = "unknown support vertex index " + std::to_string(v);
            return res;
        }

    CLFunction f = CLFunction::zero(t);
    if (supp.empty()) {
        res.ok = true;
        res.fn = f;
        return res;
    }

    // One unknown per support vertex; off-support values are pinned at 0.
    std::vector<int> idx(t.vertices.size(), -1);
    std::vector<int> verts(supp.begin(), supp.end());
    for (size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = (int)i;

    size_t n = verts.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> rhs(n, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        int u = verts[i];
        rhs[i] = Rat(0) - (Rat(t.valence(u) - 2) + Rat(t.vertices[u].branch_count, 2));
        for (int e : t.incident[u]) {
            int w = t.other_end(e, u);
            Rat inv_len = Rat(1) / t.edges[e].length;
            a[i][i] -= inv_len;
            if (idx[w] >= 0) a[i][(size_t)idx[w]] += inv_len;
        }
    }

    std::vector<Rat> x;
    bool inconsistent = false;
    if (!gauss_solve(a, rhs, x, inconsistent)) {
        res.error = inconsistent
                        ? "balancing equations on the support have no solution"
                        : "balancing equations are under-determined on the support "
                          "(support component has no boundary)";
        return res;
    }

    for (size_t i = 0; i < n; ++i)
        if (x[i] < Rat(0)) {
            res.error = "positivity fails at vertex " +
                        std::to_string(t.vertices[verts[i]].id) + " (value " + x[i].str() + ")";
            return res;
        }

    for (size_t i = 0; i < n; ++i) {
        if (x[i].den > 2) {
            res.error = "value at vertex " + std::to_string(t.vertices[verts[i]].id) +
                        " is not half-integral (" + x[i].str() + ")";
            return res;
        }
        f.values[verts[i]] = HalfInt::from_rat(x[i]);
    }
    for (size_t e = 0; e < t.edges.size(); ++e) {
        Rat slope = (f.values[t.edges[e].v].to_rat() - f.values[t.edges[e].u].to_rat()) /
                    t.edges[e].length;
        int max_den = t.edges[e].ramified ? 2 : 1;
        if (slope.den > max_den) {
            res.error = "slope " + slope.str() + " on edge " + std::to_string(t.edges[e].id) +
                        (t.edges[e].ramified ? " is not half-integral" : " is not integral");
            return res;
        }
        f.edge_slopes[e] = HalfInt::from_rat(slope);
    }

    res.ok = true;
    res.fn = f;
    return res;
}

DatumValidity is_contraction_datum(const TropCover& t, const CLFunction& f,
                                   Strictness strictness) {
    DatumValidity v;
    WellFormedReport wf = check_well_formed(t, f);
    if (!wf.ok) {
        v.problems = wf.problems;
        return v;
    }
    for (size_t i = 0; i < f.values.size(); ++i)
        if (f.values[i] < HalfInt{}) {
            v.problems.push_back("negative value at vertex " + std::to_string(t.vertices[i].id));
            return v;
        }
    for (size_t m = 0; m < f.leg_slopes.size(); ++m)
        if (f.leg_slopes[m] < HalfInt{}) {
            v.problems.push_back("negative slope on marking leg " + std::to_string(m));
            return v;
        }

    DegreeProfile profile = multidegree(t, f);
    std::vector<int> supp = f.support(t);
    std::set<int> in_supp(supp.begin(), supp.end());
    v.ok = true;

    if (strictness == Strictness::strict) {
        for (int s : supp)
            if (!profile.deg[s].is_zero()) {
                v.ok = false;
                v.problems.push_back("balancing fails at support vertex " +
                                     std::to_string(t.vertices[s].id) + " (deg_L = " +
                                     profile.deg[s].str() + ")");
            }
    } else {
        for (size_t i = 0; i < profile.deg.size(); ++i)
            if (profile.deg[i] < HalfInt{}) {
                v.ok = false;
                v.problems.push_back("negative deg_L at vertex " +
                                     std::to_string(t.vertices[i].id) + " (" +
                                     profile.deg[i].str() + ")");
            }
    }
    for (int s : supp) {
        if (profile.deg[s].is_zero())
            v.contracted_support.push_back(s);
        else if (profile.deg[s] > HalfInt{})
            v.ribbon_support.push_back(s);
    }
    return v;
}

LevelStructure level_structure(const TropCover& t, const CLFunction& lambda_bar) {
    WellFormedReport wf = check_well_formed(t, lambda_bar);
    if (!wf.ok) throw std::invalid_argument("lambda_bar is not well-formed: " + wf.problems[0]);
    HalfInt min = lambda_bar.values.at(0);
    for (const auto& v : lambda_bar.values) min = std::min(min, v);
    LevelStructure ls;
    for (size_t v = 0; v < lambda_bar.values.size(); ++v) {
        HalfInt shifted = lambda_bar.values[v] - min;
        if (!shifted.is_integer())
            throw std::invalid_argument("vertex " + std::to_string(t.vertices[v].id) +
                                        " sits at non-integral level " + (-shifted).str());
        ls.level.push_back((int)-shifted.to_integer());
        ls.depth = std::max<int>(ls.depth, (int)shifted.to_integer());
    }
    return ls;
}

Truncation truncate(const TropCover& t, const CLFunction& lambda_bar, int i) {
    if (i > 0) throw std::invalid_argument("truncation level must be <= 0, got " + std::to_string(i));
    LevelStructure ls = level_structure(t, lambda_bar);

    Truncation out;
    out.cover = t;
    TropCover& c = out.cover;

    int next_vertex_id = 0, next_edge_id = 0;
    for (const auto& v : t.vertices) next_vertex_id = std::max(next_vertex_id, v.id + 1);
    for (const auto& e : t.edges) next_edge_id = std::max(next_edge_id, e.id + 1);

    std::vector<int> level = ls.level;
    for (size_t e = 0; e < t.edges.size(); ++e) {
        int u = t.edges[e].u, v = t.edges[e].v;
        int lu = level[u], lv = level[v];
        bool crosses = (lu > i && lv < i) || (lu < i && lv > i);
        if (!crosses) continue;
        // insert the level-i point in the edge interior
        Rat len = t.edges[e].length;
        Rat from_u = len * Rat(lu - i) / Rat(lu - lv);
        TVertex w;
        w.id = next_vertex_id++;
        w.branch_count = 0;
        int w_index = (int)c.vertices.size();
        c.vertices.push_back(w);
        level.push_back(i);
        out.new_vertices.push_back(w_index);

        TEdge upper = c.edges[e];
        upper.v = w_index;
        upper.length = from_u;
        TEdge lower = c.edges[e];
        lower.id = next_edge_id++;
        lower.u = w_index;
        lower.length = len - from_u;
        c.edges[e] = upper;
        c.edges.push_back(lower);
    }
    c.finalize();

    CLFunction f = CLFunction::zero(c);
    for (size_t v = 0; v < c.vertices.size(); ++v)
        f.values[v] = HalfInt::whole(std::max(level[v] - i, 0));
    for (size_t e = 0; e < c.edges.size(); ++e) {
        Rat slope = (f.values[c.edges[e].v].to_rat() - f.values[c.edges[e].u].to_rat()) /
                    c.edges[e].length;
        f.edge_slopes[e] = HalfInt::from_rat(slope);  // equals -slope(lambda_bar) on the support
    }
    out.fn = f;
    return out;
}

CoverCLFunction pullback_to_cover(const TropCover& t, const CoverGraph& g, const CLFunction& f) {
    CoverCLFunction p;
    p.values.resize(g.vertices.size());
    for (size_t cv = 0; cv < g.vertices.size(); ++cv)
        p.values[cv] = f.values.at(g.vertices[cv].base);
    p.edge_slopes.resize(g.edges.size());
    for (size_t ce = 0; ce < g.edges.size(); ++ce) {
        const GEdge& e = g.edges[ce];
        HalfInt s = f.edge_slopes.at(e.base_edge);
        p.edge_slopes[ce] = t.edges[e.base_edge].ramified ? s.doubled() : s;
        if (!p.edge_slopes[ce].is_integer())
            throw std::logic_error("pullback produced a non-integral slope on cover edge " +
                                   std::to_string(ce));
    }
    auto table = t.marking_table();
    p.leg_slopes.resize(g.marking_legs.size());
    for (size_t l = 0; l < g.marking_legs.size(); ++l) {
        int mid = g.marking_legs[l].marking_id;
        for (size_t m = 0; m < table.size(); ++m)
            if (table[m].second.id == mid) p.leg_slopes[l] = f.leg_slopes.at(m);
    }
    return p;
}

SproutResult sprout(const TropCover& t, const CLFunction& lambda_i) {
    DatumValidity validity = is_contraction_datum(t, lambda_i, Strictness::lax);
    if (!validity.ok)
        throw std::invalid_argument("sprout requires a lax contraction datum: " +
                                    validity.problems.at(0));

    SproutResult out;
    out.cover = t;
    out.fn = lambda_i;
    TropCover& c = out.cover;
    CLFunction& f = out.fn;

    int next_vertex_id = 0, next_edge_id = 0;
    for (const auto& v : t.vertices) next_vertex_id = std::max(next_vertex_id, v.id + 1);
    for (const auto& e : t.edges) next_edge_id = std::max(next_edge_id, e.id + 1);

    auto table = t.marking_table();
    std::set<int> supp;
    for (int v : lambda_i.support(t)) supp.insert(v);

    for (size_t m = 0; m < table.size(); ++m) {
        int v = table[m].first;
        if (!supp.count(v)) continue;
        std::int64_t mass = f.leg_slopes[m] > HalfInt{} ? f.leg_slopes[m].to_integer()
                                                        : table[m].second.zero_order;
        if (mass <= 0) continue;

        // The bubble sits where the function reaches zero along the leg; the
        // extended differential forces descending slope mass + 1 on the new
        // edge (orders at a node differ from the slope by one).
        std::int64_t slope = mass + 1;
        Rat len = f.values[v].to_rat() / Rat(slope);

        TVertex w;
        w.id = next_vertex_id++;
        w.branch_count = 0;
        w.markings.push_back(table[m].second);
        int w_index = (int)c.vertices.size();
        c.vertices.push_back(w);

        auto& old_markings = c.vertices[v].markings;
        std::erase_if(old_markings, [&](const MarkingLeg& leg) {
            return leg.id == table[m].second.id;
        });

        TEdge e;
        e.id = next_edge_id++;
        e.u = v;
        e.v = w_index;
        e.ramified = false;
        e.length = len;
        c.edges.push_back(e);

        f.values.push_back(HalfInt{});
        f.edge_slopes.push_back(HalfInt::whole(-slope));
        f.leg_slopes[m] = HalfInt{};
        ++out.sprouted;
    }
    c.finalize();

    // postcondition: the support carries no marking with positive mass
    auto new_table = c.marking_table();
    std::set<int> new_supp;
    for (int v : f.support(c)) new_supp.insert(v);
    for (size_t m = 0; m < new_table.size(); ++m) {
        if (!new_supp.count(new_table[m].first)) continue;
        bool positive = f.leg_slopes[m] > HalfInt{} || new_table[m].second.zero_order > 0;
        if (positive) throw std::logic_error("sprout left a zero-carrying marking on the support");
    }
    return out;
}

}  // namespace gorcontract
