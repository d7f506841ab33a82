#include "doctest.h"

#include "gorcontract/cover.hpp"
#include "gorcontract/io.hpp"
#include "gorcontract/oracle.hpp"
#include "helpers.hpp"

using namespace gorcontract;

namespace {

TropCover smooth_cover(int genus) {
    TropCover t;
    t.genus = genus;
    t.mu = {genus - 1};
    TVertex v;
    v.id = 0;
    v.branch_count = 2 * genus + 2;
    v.markings.push_back({0, genus - 1});
    t.vertices.push_back(v);
    t.finalize();
    return t;
}

bool has_violation(const ValidationReport& r, const std::string& code) {
    for (const auto& v : r.violations)
        if (v.code == code) return true;
    return false;
}

}  // namespace

TEST_SUITE_BEGIN("cover");

TEST_CASE("figure-one cover with b = (5,1) validates") {
    InputDoc doc = load_fixture("fig1_case1.json");
    ValidationReport r = validate_cover(doc.cover);
    CHECK(r.passed);
    CHECK(doc.cover.cover_genus(0) == 2);
    CHECK(doc.cover.cover_genus(1) == 0);
}

TEST_CASE("smooth target validates with full branch load") {
    TropCover t = smooth_cover(2);
    CHECK(validate_cover(t).passed);
    CHECK(t.cover_genus(0) == 2);
}

TEST_CASE("unramified edge with odd sides fails parity") {
    InputDoc doc = load_fixture("fig1_case1.json");
    doc.cover.edges[0].ramified = false;
    ValidationReport r = validate_cover(doc.cover);
    CHECK(!r.passed);
    CHECK(has_violation(r, "parity"));
}

TEST_CASE("branch sum and mu bookkeeping are enforced") {
    InputDoc doc = load_fixture("fig1_case2.json");
    doc.cover.vertices[0].branch_count = 6;
    CHECK(has_violation(validate_cover(doc.cover), "branch_sum"));

    InputDoc doc2 = load_fixture("fig1_case2.json");
    doc2.cover.mu = {2};
    ValidationReport r2 = validate_cover(doc2.cover);
    CHECK(has_violation(r2, "mu_sum"));
    CHECK(has_violation(r2, "mu_mismatch"));
}

TEST_CASE("disconnected edge set is rejected") {
    InputDoc doc = load_fixture("fig1_case2.json");
    doc.cover.edges.clear();
    doc.cover.finalize();
    CHECK(has_violation(validate_cover(doc.cover), "not_tree"));
}

TEST_CASE("double cover of the three-leaf star") {
    InputDoc doc = load_fixture("ex2_9.json");
    CoverGraph g = build_cover_graph(doc.cover);
    CHECK(g.vertices.size() == 7);
    CHECK(g.edges.size() == 6);
    CHECK(g.first_betti() == 0);
    CHECK(g.genus() == 1);
    int genus_one = 0;
    for (const auto& v : g.vertices)
        if (v.genus == 1) ++genus_one;
    CHECK(genus_one == 1);
}

TEST_CASE("double cover of the two-level chain is a four-cycle") {
    InputDoc doc = load_fixture("ex5_5.json");
    CoverGraph g = build_cover_graph(doc.cover);
    CHECK(g.vertices.size() == 4);
    CHECK(g.edges.size() == 4);
    CHECK(g.first_betti() == 1);
    CHECK(g.genus() == 3);
    std::vector<int> genera;
    for (const auto& v : g.vertices) genera.push_back(v.genus);
    std::sort(genera.begin(), genera.end());
    CHECK(genera == std::vector<int>{0, 0, 1, 1});
    // two conjugate legs per marking
    CHECK(g.marking_legs.size() == 4);
}

TEST_CASE("smooth target lifts to a single vertex") {
    TropCover t = smooth_cover(2);
    CoverGraph g = build_cover_graph(t);
    CHECK(g.vertices.size() == 1);
    CHECK(g.vertices[0].genus == 2);
}

TEST_CASE("cover build is deterministic") {
    InputDoc doc = load_fixture("ex5_5.json");
    CoverGraph a = build_cover_graph(doc.cover);
    CoverGraph b = build_cover_graph(doc.cover);
    CHECK(cover_dot(doc.cover, a) == cover_dot(doc.cover, b));
}

TEST_CASE("contracted subcurve genus") {
    InputDoc ten = load_fixture("ex2_10.json");
    CoverGraph g10 = build_cover_graph(ten.cover);
    CHECK(contracted_subcurve_genus(ten.cover, g10, {1}) == 2);

    InputDoc five = load_fixture("ex5_5.json");
    CoverGraph g55 = build_cover_graph(five.cover);
    CHECK(contracted_subcurve_genus(five.cover, g55, {0}) == 1);
    // split preimage of the middle vertex: two rational pieces
    CHECK(contracted_subcurve_genus(five.cover, g55, {1}) == 0);
    // the whole tree carries the full genus
    CHECK(contracted_subcurve_genus(five.cover, g55, {0, 1, 2}) == 3);

    CHECK_THROWS_AS(contracted_subcurve_genus(five.cover, g55, {}), std::invalid_argument);
    CHECK_THROWS_AS(contracted_subcurve_genus(five.cover, g55, {0, 2}), std::invalid_argument);
}

TEST_CASE("census covers reproduce their genus and edge-lift counts") {
    int checked = 0;
    for (const auto& shape : tree_shapes(3)) {
        for (const auto& t : decorated_covers(shape)) {
            CoverGraph g = build_cover_graph(t);  // throws unless genus matches
            int ram = 0;
            for (const auto& e : t.edges)
                if (e.ramified) ++ram;
            CHECK((int)g.edges.size() == ram + 2 * ((int)t.edges.size() - ram));
            for (size_t s = 0; s < t.vertices.size(); ++s)
                CHECK(contracted_subcurve_genus(t, g, {(int)s}) <= t.genus);
            ++checked;
        }
    }
    CHECK(checked > 50);
}

TEST_SUITE_END();
