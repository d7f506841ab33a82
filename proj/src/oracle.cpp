#include "gorcontract/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <stdexcept>

#include "gorcontract/singlab.hpp"

namespace gorcontract {

namespace {

struct EnumContext {
    const TropCover& t;
    const EnumerationSpec& spec;
    Strictness strictness;
    std::vector<std::vector<std::int64_t>> domain;  // twice-slopes per edge
    std::vector<int> pending;                       // unassigned incident edges per vertex
};

// Visit order completes vertex stars as early as possible so the lax bound
// prunes aggressively.
std::vector<std::vector<std::int64_t>> slope_domains(const TropCover& t, int bound) {
    std::vector<std::vector<std::int64_t>> d(t.edges.size());
    for (size_t e = 0; e < t.edges.size(); ++e) {
        int step = t.edges[e].ramified ? 1 : 2;
        for (std::int64_t tw = -bound; tw <= bound; ++tw)
            if (tw % step == 0 || step == 1) d[e].push_back(tw);
    }
    return d;
}

// deg_L at v from twice-slopes alone (legs are zero in enumeration).
std::int64_t twice_deg_at(const TropCover& t, const std::vector<std::int64_t>& twice, int v) {
    std::int64_t s = 2LL * (t.valence(v) - 2) + t.vertices[v].branch_count;
    for (int e : t.incident[v]) {
        std::int64_t tw = twice[e];
        s += (t.edges[e].u == v) ? tw : -tw;
    }
    return s;
}

std::optional<CLFunction> finish_candidate(const TropCover& t,
                                           const std::vector<std::int64_t>& twice,
                                           const EnumerationSpec& spec, Strictness strictness) {
    // integrate slopes into values from vertex 0, then shift the minimum to 0
    std::vector<Rat> raw(t.vertices.size());
    std::vector<int> seen(t.vertices.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : t.incident[v]) {
            int w = t.other_end(e, v);
            if (seen[w]) continue;
            seen[w] = 1;
            Rat slope(twice[e], 2);
            if (t.edges[e].u == v)
                raw[w] = raw[v] + slope * t.edges[e].length;
            else
                raw[w] = raw[v] - slope * t.edges[e].length;
            stack.push_back(w);
        }
    }
    Rat min = raw[0];
    for (const auto& r : raw) min = std::min(min, r);

    CLFunction f = CLFunction::zero(t);
    for (size_t v = 0; v < raw.size(); ++v) {
        Rat shifted = raw[v] - min;
        if (shifted.den > 2) return std::nullopt;  // not a half-integral vertex value
        f.values[v] = HalfInt::from_rat(shifted);
    }
    for (size_t e = 0; e < twice.size(); ++e) f.edge_slopes[e] = HalfInt::from_twice(twice[e]);

    DatumValidity lax = is_contraction_datum(t, f, Strictness::lax);
    if (!lax.ok) return std::nullopt;
    if (strictness == Strictness::strict) {
        DatumValidity strict = is_contraction_datum(t, f, Strictness::strict);
        if (!strict.ok) return std::nullopt;
    }
    if (spec.support) {
        std::vector<int> want = *spec.support;
        std::sort(want.begin(), want.end());
        if (f.support(t) != want) return std::nullopt;
    }
    return f;
}

void dfs(EnumContext& ctx, size_t edge, std::vector<std::int64_t>& twice,
         std::vector<int>& pending, std::atomic<std::int64_t>& visits, bool& overflow,
         std::vector<CLFunction>& out) {
    if (overflow) return;
    if (visits.fetch_add(1, std::memory_order_relaxed) >= ctx.spec.guard) {
        overflow = true;
        return;
    }
    if (edge == ctx.t.edges.size()) {
        if (auto f = finish_candidate(ctx.t, twice, ctx.spec, ctx.strictness)) out.push_back(*f);
        return;
    }
    int u = ctx.t.edges[edge].u, v = ctx.t.edges[edge].v;
    for (std::int64_t tw : ctx.domain[edge]) {
        twice[edge] = tw;
        --pending[u];
        --pending[v];
        bool feasible = true;
        if (pending[u] == 0 && twice_deg_at(ctx.t, twice, u) < 0) feasible = false;
        if (feasible && pending[v] == 0 && twice_deg_at(ctx.t, twice, v) < 0) feasible = false;
        if (feasible) dfs(ctx, edge + 1, twice, pending, visits, overflow, out);
        ++pending[u];
        ++pending[v];
        if (overflow) return;
    }
}

std::vector<int> initial_pending(const TropCover& t) {
    std::vector<int> p(t.vertices.size(), 0);
    for (const auto& e : t.edges) {
        ++p[e.u];
        ++p[e.v];
    }
    return p;
}

}  // namespace

std::vector<CLFunction> enumerate_data_serial(const TropCover& t, const EnumerationSpec& spec,
                                              Strictness strictness) {
    EnumContext ctx{t, spec, strictness, slope_domains(t, spec.max_twice_slope),
                    initial_pending(t)};
    if (t.edges.empty()) {
        // only the zero function exists within bounds
        std::vector<std::int64_t> twice;
        std::vector<CLFunction> out;
        if (auto f = finish_candidate(t, twice, spec, strictness)) out.push_back(*f);
        return out;
    }
    std::vector<std::int64_t> twice(t.edges.size(), 0);
    std::vector<int> pending = ctx.pending;
    std::atomic<std::int64_t> visits{0};
    bool overflow = false;
    std::vector<CLFunction> out;
    dfs(ctx, 0, twice, pending, visits, overflow, out);
    if (overflow)
        throw std::overflow_error("enumeration exceeded the search-space guard of " +
                                  std::to_string(spec.guard) + " nodes");
    return out;
}

std::vector<CLFunction> enumerate_data_parallel(const TropCover& t, const EnumerationSpec& spec,
                                                Strictness strictness) {
    if (t.edges.empty()) return enumerate_data_serial(t, spec, strictness);
    EnumContext ctx{t, spec, strictness, slope_domains(t, spec.max_twice_slope),
                    initial_pending(t)};
    const auto& first = ctx.domain[0];
    std::vector<std::vector<CLFunction>> buckets(first.size());
    std::atomic<std::int64_t> visits{0};
    bool overflow = false;

#ifdef GORCONTRACT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::int64_t i = 0; i < (std::int64_t)first.size(); ++i) {
        if (overflow) continue;
        std::vector<std::int64_t> twice(t.edges.size(), 0);
        std::vector<int> pending = ctx.pending;
        twice[0] = first[(size_t)i];
        int u = t.edges[0].u, v = t.edges[0].v;
        --pending[u];
        --pending[v];
        bool feasible = true;
        if (pending[u] == 0 && twice_deg_at(t, twice, u) < 0) feasible = false;
        if (feasible && pending[v] == 0 && twice_deg_at(t, twice, v) < 0) feasible = false;
        if (feasible)
            dfs(ctx, 1, twice, pending, visits, overflow, buckets[(size_t)i]);
    }
    if (overflow)
        throw std::overflow_error("enumeration exceeded the search-space guard of " +
                                  std::to_string(spec.guard) + " nodes");
    std::vector<CLFunction> out;
    for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::vector<CLFunction> enumerate_data(const TropCover& t, const EnumerationSpec& spec,
                                       Strictness strictness) {
#ifdef GORCONTRACT_HAVE_OPENMP
    return enumerate_data_parallel(t, spec, strictness);
#else
    return enumerate_data_serial(t, spec, strictness);
#endif
}

std::vector<CLFunction> strict_data_via_solve(const TropCover& t, int max_twice_slope) {
    std::vector<CLFunction> out;
    size_t n = t.vertices.size();
    if (n > 24) throw std::invalid_argument("tree too large for subset sweep");
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        std::vector<int> supp;
        for (size_t v = 0; v < n; ++v)
            if (mask & (1ull << v)) supp.push_back((int)v);
        SolveResult r = solve_slopes(t, supp);
        if (!r.ok) continue;
        bool bounded = true;
        for (const auto& s : r.fn.edge_slopes)
            if (s.twice > max_twice_slope || s.twice < -max_twice_slope) bounded = false;
        if (!bounded) continue;
        if (r.fn.support(t) != supp) continue;  // a solved value collapsed to zero
        if (!is_contraction_datum(t, r.fn, Strictness::lax).ok) continue;
        if (!is_contraction_datum(t, r.fn, Strictness::strict).ok) continue;
        out.push_back(r.fn);
    }
    return out;
}

std::pair<int, long long> genus_two_ways(const TropCover& t, const CoverGraph& g,
                                         const ContractionOutcome& outcome) {
    int route_cover = g.genus();

    std::set<int> contracted;
    for (const auto& comp : outcome.contracted)
        for (int v : comp) contracted.insert(v);
    if (!outcome.ribbons.empty())
        throw std::invalid_argument("genus_two_ways needs a reduced outcome");

    long long comps = 0, genus_sum = 0, nodes = 0, delta_sum = 0;
    for (const auto& cv : g.vertices)
        if (!contracted.count(cv.base)) {
            ++comps;
            genus_sum += cv.genus;
        }
    for (const auto& e : g.edges)
        if (!contracted.count(g.vertices[e.u].base) && !contracted.count(g.vertices[e.v].base))
            ++nodes;
    // deltas via the branch-germ assembly, independent of the genus formula
    for (const auto& chart : outcome.charts) delta_sum += reduced_germ_delta(chart);

    long long route_contracted = genus_sum + delta_sum + nodes - comps + 1;
    if (route_contracted != route_cover)
        throw std::logic_error("genus routes disagree: cover " + std::to_string(route_cover) +
                               " vs contracted " + std::to_string(route_contracted));
    return {route_cover, route_contracted};
}

long long semigroup_delta(int m, bool contracted) {
    if (m < 1 || m % 2 == 0)
        throw std::invalid_argument("semigroup delta needs odd m >= 1, got " + std::to_string(m));
    int e = contracted ? m + 2 : m;
    int limit = 2 * e + 2;
    std::vector<char> reach((size_t)limit + 1, 0);
    reach[0] = 1;
    for (int x = 1; x <= limit; ++x) {
        if (x >= 2 && reach[(size_t)(x - 2)]) reach[(size_t)x] = 1;
        if (x >= e && reach[(size_t)(x - e)]) reach[(size_t)x] = 1;
    }
    long long gaps = 0;
    for (int x = 1; x <= limit; ++x)
        if (!reach[(size_t)x]) ++gaps;
    return gaps;
}

// --------------------------------------------------------------------------
// census
// --------------------------------------------------------------------------

namespace {

// canonical string of a rooted tree (AHU encoding)
std::string ahu(int root, int parent, const std::vector<std::vector<int>>& adj) {
    std::vector<std::string> children;
    for (int w : adj[root])
        if (w != parent) children.push_back(ahu(w, root, adj));
    std::sort(children.begin(), children.end());
    std::string s = "(";
    for (const auto& c : children) s += c;
    return s + ")";
}

std::string canonical_form(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    // centroid(s) via repeated leaf stripping
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = (int)adj[v].size();
    std::vector<int> layer;
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1) layer.push_back(v);
    int remaining = n;
    std::vector<int> centers = layer;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = 1;
            --remaining;
            for (int w : adj[v])
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
        }
        layer = next;
        centers = layer;
    }
    if (n == 1) centers = {0};
    std::string best;
    for (int c : centers) {
        std::string s = ahu(c, -1, adj);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

void prufer_trees(int n, std::vector<TreeShape>& out, std::set<std::string>& seen) {
    if (n == 1) {
        TreeShape s{1, {}};
        if (seen.insert(canonical_form(1, s.edges)).second) out.push_back(s);
        return;
    }
    if (n == 2) {
        TreeShape s{2, {{0, 1}}};
        if (seen.insert(canonical_form(2, s.edges)).second) out.push_back(s);
        return;
    }
    std::vector<int> code(n - 2, 0);
    while (true) {
        // decode
        std::vector<int> degree(n, 1);
        for (int c : code) ++degree[c];
        std::vector<std::pair<int, int>> edges;
        std::set<int> leaves;
        for (int v = 0; v < n; ++v)
            if (degree[v] == 1) leaves.insert(v);
        std::vector<int> work = code;
        for (int c : work) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.push_back({std::min(leaf, c), std::max(leaf, c)});
            if (--degree[c] == 1) leaves.insert(c);
        }
        int a = *leaves.begin(), b = *std::next(leaves.begin());
        edges.push_back({std::min(a, b), std::max(a, b)});
        std::sort(edges.begin(), edges.end());
        if (seen.insert(canonical_form(n, edges)).second) out.push_back({n, edges});

        // next code
        int i = n - 3;
        while (i >= 0 && code[i] == n - 1) code[i--] = 0;
        if (i < 0) break;
        ++code[i];
    }
}

}  // namespace

std::vector<TreeShape> tree_shapes(int max_edges) {
    std::vector<TreeShape> out;
    std::set<std::string> seen;
    for (int n = 1; n <= max_edges + 1; ++n) prufer_trees(n, out, seen);
    return out;
}

std::vector<TropCover> decorated_covers(const TreeShape& shape) {
    std::vector<TropCover> out;
    int E = (int)shape.edges.size();
    int V = shape.vertex_count;
    for (int ram_mask = 0; ram_mask < (1 << E); ++ram_mask) {
        std::vector<int> k(V, 0);
        for (int e = 0; e < E; ++e)
            if (ram_mask & (1 << e)) {
                ++k[shape.edges[(size_t)e].first];
                ++k[shape.edges[(size_t)e].second];
            }
        // branch counts: parity minimum or minimum + 2 at each vertex
        for (int extra_mask = 0; extra_mask < (1 << V); ++extra_mask) {
            long long bsum = 0;
            std::vector<int> b(V);
            for (int v = 0; v < V; ++v) {
                b[v] = (k[v] % 2) + ((extra_mask >> v) & 1 ? 2 : 0);
                bsum += b[v];
            }
            if (bsum < 6 || bsum % 2 != 0) continue;  // need g >= 2
            int g = (int)(bsum - 2) / 2;

            TropCover t;
            t.genus = g;
            t.mu = {g - 1};
            for (int v = 0; v < V; ++v) {
                TVertex tv;
                tv.id = v;
                tv.branch_count = b[v];
                if (v == 0) tv.markings.push_back({0, g - 1});
                t.vertices.push_back(tv);
            }
            for (int e = 0; e < E; ++e) {
                TEdge te;
                te.id = e;
                te.u = shape.edges[(size_t)e].first;
                te.v = shape.edges[(size_t)e].second;
                te.ramified = (ram_mask >> e) & 1;
                t.edges.push_back(te);
            }
            t.finalize();
            if (validate_cover(t).passed) out.push_back(std::move(t));
        }
    }
    return out;
}

}  // namespace gorcontract
