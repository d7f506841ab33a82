// Compares the serial and OpenMP enumeration kernels on a chain cover and
// checks that both produce the same data.

#include <chrono>
#include <cstdio>

#include "gorcontract/oracle.hpp"

using namespace gorcontract;

namespace {

TropCover chain_cover(int edges) {
    TropCover t;
    t.genus = 2 * (edges + 1) - 1;  // b = 4 per vertex
    int total_b = 4 * (edges + 1);
    t.genus = (total_b - 2) / 2;
    t.mu = {t.genus - 1};
    for (int v = 0; v <= edges; ++v) {
        TVertex tv;
        tv.id = v;
        tv.branch_count = 4;
        if (v == 0) tv.markings.push_back({0, t.genus - 1});
        t.vertices.push_back(tv);
    }
    for (int e = 0; e < edges; ++e) {
        TEdge te;
        te.id = e;
        te.u = e;
        te.v = e + 1;
        te.ramified = false;
        t.edges.push_back(te);
    }
    t.finalize();
    return t;
}

template <typename F>
double timed(F&& fn, size_t& found) {
    auto start = std::chrono::steady_clock::now();
    auto result = fn();
    auto stop = std::chrono::steady_clock::now();
    found = result.size();
    return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    int edges = argc > 1 ? std::atoi(argv[1]) : 6;
    int bound = argc > 2 ? std::atoi(argv[2]) : 8;
    TropCover t = chain_cover(edges);
    EnumerationSpec spec;
    spec.max_twice_slope = bound;
    spec.guard = 200'000'000;

    size_t n_serial = 0, n_parallel = 0;
    double ts = timed([&] { return enumerate_data_serial(t, spec, Strictness::lax); }, n_serial);
    double tp = timed([&] { return enumerate_data_parallel(t, spec, Strictness::lax); }, n_parallel);

    std::printf("chain with %d edges, twice-slope bound %d\n", edges, bound);
    std::printf("serial:   %8.3fs  (%zu lax data)\n", ts, n_serial);
    std::printf("parallel: %8.3fs  (%zu lax data)\n", tp, n_parallel);
    if (n_serial != n_parallel) {
        std::printf("MISMATCH between kernels\n");
        return 1;
    }
    std::printf("speedup:  %8.2fx\n", tp > 0 ? ts / tp : 0.0);
    return 0;
}
