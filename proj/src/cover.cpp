#include "gorcontract/cover.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gorcontract {

void TropCover::finalize() {
    incident.assign(vertices.size(), {});
    for (size_t e = 0; e < edges.size(); ++e) {
        if (edges[e].u < 0 || edges[e].u >= (int)vertices.size() || edges[e].v < 0 ||
            edges[e].v >= (int)vertices.size())
            throw std::invalid_argument("edge " + std::to_string(edges[e].id) +
                                        " references an unknown vertex");
        incident[edges[e].u].push_back((int)e);
        incident[edges[e].v].push_back((int)e);
    }
}

int TropCover::ram_valence(int v) const {
    int k = 0;
    for (int e : incident.at(v))
        if (edges[e].ramified) ++k;
    return k;
}

int TropCover::other_end(int e, int v) const {
    const TEdge& ed = edges.at(e);
    if (ed.u == v) return ed.v;
    if (ed.v == v) return ed.u;
    throw std::logic_error("vertex not on edge");
}

int TropCover::vertex_index_of_id(int id) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id) return (int)i;
    throw std::invalid_argument("unknown vertex id " + std::to_string(id));
}

int TropCover::edge_index_of_id(int id) const {
    for (size_t i = 0; i < edges.size(); ++i)
        if (edges[i].id == id) return (int)i;
    throw std::invalid_argument("unknown edge id " + std::to_string(id));
}

std::vector<std::pair<int, MarkingLeg>> TropCover::marking_table() const {
    std::vector<std::pair<int, MarkingLeg>> out;
    for (size_t v = 0; v < vertices.size(); ++v)
        for (const auto& m : vertices[v].markings) out.push_back({(int)v, m});
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.second.id < b.second.id; });
    return out;
}

int TropCover::cover_genus(int v) const {
    int bk = vertices[v].branch_count + ram_valence(v);
    if (bk == 0) throw std::logic_error("split preimage has no single cover genus");
    return (bk - 2) / 2;
}

ValidationReport validate_cover(const TropCover& t) {
    ValidationReport r;

    if (t.genus < 1)
        r.fail("genus_range", "genus must be at least 1, got " + std::to_string(t.genus));

    // tree check: connected and acyclic
    size_t n = t.vertices.size();
    if (n == 0) {
        r.fail("not_tree", "empty vertex set");
        return r;
    }
    if (t.edges.size() != n - 1) {
        r.fail("not_tree", "a tree on " + std::to_string(n) + " vertices needs " +
                               std::to_string(n - 1) + " edges, got " +
                               std::to_string(t.edges.size()));
    } else {
        std::vector<int> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        size_t count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : t.incident[v]) {
                int w = t.other_end(e, v);
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        if (count != n) r.fail("not_tree", "edge set is disconnected");
    }

    long long bsum = 0;
    for (const auto& v : t.vertices) {
        bsum += v.branch_count;
        if (v.branch_count < 0)
            r.fail("branch_count", "vertex " + std::to_string(v.id) + " has negative branch count");
    }
    if (bsum != 2LL * t.genus + 2)
        r.fail("branch_sum", "branch counts sum to " + std::to_string(bsum) + ", expected 2g+2 = " +
                                 std::to_string(2 * t.genus + 2));

    for (size_t i = 0; i < n; ++i) {
        int b = t.vertices[i].branch_count;
        int k = t.ram_valence((int)i);
        if ((b + k) % 2 != 0)
            r.fail("parity", "vertex " + std::to_string(t.vertices[i].id) + " has odd b+k = " +
                                 std::to_string(b + k));
        else if (b + k > 0 && (b + k - 2) / 2 < 0)
            r.fail("negative_genus", "vertex " + std::to_string(t.vertices[i].id) +
                                         " has negative derived genus");
    }

    long long musum = std::accumulate(t.mu.begin(), t.mu.end(), 0LL);
    if (musum != t.genus - 1)
        r.fail("mu_sum", "mu sums to " + std::to_string(musum) + ", expected g-1 = " +
                             std::to_string(t.genus - 1));
    for (int m : t.mu)
        if (m < 0) r.fail("mu_sum", "mu entries must be non-negative");

    // every mu entry carried by exactly one marking leg, with equal zero order
    std::map<int, int> count;
    for (size_t v = 0; v < n; ++v) {
        for (const auto& m : t.vertices[v].markings) {
            ++count[m.id];
            if (m.id < 0 || m.id >= (int)t.mu.size())
                r.fail("mu_mismatch", "marking id " + std::to_string(m.id) + " has no mu entry");
            else if (m.zero_order != t.mu[m.id])
                r.fail("mu_mismatch", "marking " + std::to_string(m.id) + " has zero order " +
                                          std::to_string(m.zero_order) + " but mu[" +
                                          std::to_string(m.id) + "] = " +
                                          std::to_string(t.mu[m.id]));
        }
    }
    for (size_t j = 0; j < t.mu.size(); ++j)
        if (count[(int)j] != 1)
            r.fail("mu_mismatch", "marking " + std::to_string(j) + " appears " +
                                      std::to_string(count[(int)j]) + " times, expected once");

    for (const auto& e : t.edges)
        if (!(e.length > Rat(0)))
            r.fail("edge_length", "edge " + std::to_string(e.id) + " has non-positive length");

    return r;
}

CoverGraph build_cover_graph(const TropCover& t) {
    ValidationReport rep = validate_cover(t);
    if (!rep.passed) {
        std::string msg = "cover validation failed:";
        for (const auto& v : rep.violations) msg += " [" + v.code + "] " + v.message;
        throw std::invalid_argument(msg);
    }

    CoverGraph g;
    g.lifts.assign(t.vertices.size(), {});
    for (size_t v = 0; v < t.vertices.size(); ++v) {
        if (t.splits((int)v)) {
            g.lifts[v] = {(int)g.vertices.size(), (int)g.vertices.size() + 1};
            g.vertices.push_back({(int)v, 0, 0});
            g.vertices.push_back({(int)v, 1, 0});
        } else {
            g.lifts[v] = {(int)g.vertices.size()};
            g.vertices.push_back({(int)v, 0, t.cover_genus((int)v)});
        }
    }

    g.edge_lifts.assign(t.edges.size(), {});
    for (size_t e = 0; e < t.edges.size(); ++e) {
        const TEdge& ed = t.edges[e];
        const auto& lu = g.lifts[ed.u];
        const auto& lv = g.lifts[ed.v];
        if (ed.ramified) {
            // Ramified edges meet odd b+k on both sides, so neither end splits.
            g.edge_lifts[e] = {(int)g.edges.size()};
            g.edges.push_back({(int)e, 0, lu[0], lv[0]});
        } else {
            // Canonical pairing: copy i attaches to copy i (trees carry no
            // monodromy, so this choice is harmless and reproducible).
            int u0 = lu[0], u1 = lu.size() > 1 ? lu[1] : lu[0];
            int v0 = lv[0], v1 = lv.size() > 1 ? lv[1] : lv[0];
            g.edge_lifts[e] = {(int)g.edges.size(), (int)g.edges.size() + 1};
            g.edges.push_back({(int)e, 0, u0, v0});
            g.edges.push_back({(int)e, 1, u1, v1});
        }
    }

    for (const auto& [v, m] : t.marking_table()) {
        const auto& lv = g.lifts[v];
        int first = lv[0];
        int second = lv.size() > 1 ? lv[1] : lv[0];
        g.marking_legs.push_back({m.id, 0, first, m.zero_order});
        g.marking_legs.push_back({m.id, 1, second, m.zero_order});
    }

    if (g.component_count() != 1)
        throw std::logic_error("double cover graph is disconnected");
    if (g.genus() != t.genus)
        throw std::logic_error("cover genus " + std::to_string(g.genus()) +
                               " does not reproduce g = " + std::to_string(t.genus));
    return g;
}

int CoverGraph::component_count() const {
    std::vector<int> comp(vertices.size(), -1);
    int c = 0;
    for (size_t s = 0; s < vertices.size(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{(int)s};
        comp[s] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& e : edges) {
                int w = -1;
                if (e.u == v) w = e.v;
                else if (e.v == v) w = e.u;
                if (w >= 0 && comp[w] < 0) {
                    comp[w] = c;
                    stack.push_back(w);
                }
            }
        }
        ++c;
    }
    return c;
}

int CoverGraph::genus() const {
    int s = 0;
    for (const auto& v : vertices) s += v.genus;
    return s + first_betti();
}

std::vector<std::vector<int>> components_in_tree(const TropCover& t,
                                                 const std::vector<int>& subset) {
    std::vector<char> in(t.vertices.size(), 0), seen(t.vertices.size(), 0);
    for (int s : subset) in[(size_t)s] = 1;
    std::vector<std::vector<int>> comps;
    for (int s : subset) {
        if (seen[(size_t)s]) continue;
        std::vector<int> comp;
        std::vector<int> stack{s};
        seen[(size_t)s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int e : t.incident[v]) {
                int w = t.other_end(e, v);
                if (in[(size_t)w] && !seen[(size_t)w]) {
                    seen[(size_t)w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

int contracted_subcurve_genus(const TropCover& t, const CoverGraph& g,
                              const std::vector<int>& S) {
    if (S.empty()) throw std::invalid_argument("empty vertex set");
    auto comps = components_in_tree(t, S);
    if (comps.size() != 1 || comps[0].size() != S.size())
        throw std::invalid_argument("vertex set does not induce a connected subgraph");

    std::set<int> in(S.begin(), S.end());
    std::set<int> cover_vertices;
    int genus_sum = 0;
    for (size_t cv = 0; cv < g.vertices.size(); ++cv)
        if (in.count(g.vertices[cv].base)) {
            cover_vertices.insert((int)cv);
            genus_sum += g.vertices[cv].genus;
        }
    int cover_edges = 0;
    for (const auto& e : g.edges)
        if (cover_vertices.count(e.u) && cover_vertices.count(e.v)) ++cover_edges;

    // component count of the preimage
    std::map<int, int> comp;
    int c = 0;
    for (int s : cover_vertices) {
        if (comp.count(s)) continue;
        std::vector<int> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& e : g.edges) {
                if (!cover_vertices.count(e.u) || !cover_vertices.count(e.v)) continue;
                int w = -1;
                if (e.u == v) w = e.v;
                else if (e.v == v) w = e.u;
                if (w >= 0 && !comp.count(w)) {
                    comp[w] = c;
                    stack.push_back(w);
                }
            }
        }
        ++c;
    }
    int b1 = cover_edges - (int)cover_vertices.size() + c;
    return genus_sum + b1;
}

int side_branch_sum(const TropCover& t, int edge, int side_vertex) {
    // branch counts on the component of T - edge containing side_vertex
    int sum = 0;
    std::set<int> seen{side_vertex};
    std::vector<int> stack{side_vertex};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        sum += t.vertices[v].branch_count;
        for (int e : t.incident[v]) {
            if (e == edge) continue;
            int w = t.other_end(e, v);
            if (!seen.count(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
        }
    }
    return sum;
}

}  // namespace gorcontract
