#include "doctest.h"

#include "gorcontract/contract.hpp"
#include "gorcontract/io.hpp"
#include "gorcontract/oracle.hpp"
#include "helpers.hpp"

using namespace gorcontract;

namespace {

std::vector<std::string> deg_strings(const DegreeProfile& p) {
    std::vector<std::string> out;
    for (const auto& d : p.deg) out.push_back(d.str());
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("contract");

TEST_CASE("multidegrees of the worked examples") {
    InputDoc nine = load_fixture("ex2_9.json");
    DegreeProfile p9 = multidegree(nine.cover, *nine.datum);
    CHECK(deg_strings(p9) == std::vector<std::string>{"0", "0", "0", "0"});
    CHECK(p9.total.is_zero());  // g - 1 with g = 1

    InputDoc ten = load_fixture("ex2_10.json");
    DegreeProfile p10 = multidegree(ten.cover, *ten.datum);
    CHECK(deg_strings(p10) == std::vector<std::string>{"0", "0", "1"});
    CHECK(p10.total == HalfInt::whole(1));

    InputDoc twelve = load_fixture("ex2_12.json");
    DegreeProfile p12 = multidegree(twelve.cover, *twelve.datum);
    CHECK(deg_strings(p12) == std::vector<std::string>{"1", "1"});
    CHECK(p12.total == HalfInt::whole(2));
}

TEST_CASE("contraction locus") {
    InputDoc ten = load_fixture("ex2_10.json");
    auto locus10 = contraction_locus(ten.cover, multidegree(ten.cover, *ten.datum), *ten.datum);
    CHECK(locus10 == std::vector<std::vector<int>>{{1}});

    InputDoc nine = load_fixture("ex2_9.json");
    auto locus9 = contraction_locus(nine.cover, multidegree(nine.cover, *nine.datum), *nine.datum);
    CHECK(locus9 == std::vector<std::vector<int>>{{0}});

    InputDoc twelve = load_fixture("ex2_12.json");
    auto locus12 =
        contraction_locus(twelve.cover, multidegree(twelve.cover, *twelve.datum), *twelve.datum);
    CHECK(locus12.empty());

    // an ascending slope makes deg_L negative at the far end
    InputDoc two = load_fixture("fig1_case2.json");
    CLFunction bad = *two.datum;
    bad.values = {HalfInt::whole(0), HalfInt::whole(1)};
    bad.edge_slopes = {HalfInt::whole(1)};
    CHECK_THROWS_AS(contraction_locus(two.cover, multidegree(two.cover, bad), bad),
                    std::invalid_argument);
}

TEST_CASE("contract the genus-two chain") {
    InputDoc ten = load_fixture("ex2_10.json");
    CoverGraph g = build_cover_graph(ten.cover);
    ContractionOutcome out = contract(ten.cover, g, *ten.datum);
    REQUIRE(out.charts.size() == 1);
    const SingularityChart& c = out.charts[0];
    CHECK(c.kind == ChartKind::node);
    CHECK(c.ell == 2);
    CHECK(c.g_q == 2);
    REQUIRE(c.branches.size() == 2);
    CHECK(c.branches[0].m == 2);
    CHECK(c.branches[0].delta == 1);
    CHECK(!c.branches[0].ramified);
    CHECK(c.branches[1].m == 3);
    CHECK(c.branches[1].delta == 1);
    CHECK(c.branches[1].ramified);
    CHECK(out.ribbons.empty());
    CHECK(out.audit.match);
    CHECK(out.pbar.vertices.size() == 3);
    CHECK(out.pbar.edges.size() == 2);
}

TEST_CASE("contract the three-leaf star to a three-fold point") {
    InputDoc nine = load_fixture("ex2_9.json");
    CoverGraph g = build_cover_graph(nine.cover);
    ContractionOutcome out = contract(nine.cover, g, *nine.datum);
    REQUIRE(out.charts.size() == 1);
    CHECK(out.charts[0].kind == ChartKind::node);
    CHECK(out.charts[0].ell == 3);
    CHECK(out.charts[0].g_q == 1);
    for (const auto& b : out.charts[0].branches) {
        CHECK(b.m == 2);
        CHECK(b.delta == 1);
    }
    // fused vertex carries the three branches
    bool found = false;
    for (const auto& pv : out.pbar.vertices)
        if (pv.ell == 3) found = true;
    CHECK(found);
    CHECK(out.audit.match);
    CHECK(out.audit.route_cover == 1);
    CHECK(*out.audit.route_contracted == 1);
    CHECK(out.audit.chart_delta_sum == 6);
    CHECK(out.audit.component_count == 6);
}

TEST_CASE("contract the one-edge covers") {
    InputDoc one = load_fixture("fig1_case1.json");
    CoverGraph g = build_cover_graph(one.cover);
    ContractionOutcome out = contract(one.cover, g, *one.datum);
    REQUIRE(out.charts.size() == 1);
    CHECK(out.charts[0].kind == ChartKind::contracted_component);
    CHECK(out.charts[0].ell == 1);
    CHECK(out.charts[0].branches[0].m == 3);
    CHECK(out.charts[0].g_q == 2);
    CHECK(out.audit.match);
}

TEST_CASE("ribbon outcomes") {
    InputDoc eleven = load_fixture("ex2_11.json");
    CoverGraph g11 = build_cover_graph(eleven.cover);
    ContractionOutcome out11 = contract(eleven.cover, g11, *eleven.datum);
    CHECK(out11.contracted.empty());
    REQUIRE(out11.ribbons.size() == 1);
    CHECK(out11.ribbons[0].component == std::vector<int>{0});
    CHECK(out11.ribbons[0].double_structure_degree == HalfInt::whole(-2));
    CHECK(out11.ribbons[0].genus == HalfInt::whole(1));
    REQUIRE(out11.charts.size() == 1);
    CHECK(out11.charts[0].kind == ChartKind::node);
    CHECK(out11.charts[0].branches[0].m == 2);
    CHECK(out11.charts[0].branches[0].delta == 1);
    CHECK(out11.charts[0].branches[1].delta == 0);
    CHECK(!out11.audit.reduced);
    REQUIRE(out11.audit.assembled_pa);
    CHECK(*out11.audit.assembled_pa == 2);

    InputDoc twelve = load_fixture("ex2_12.json");
    CoverGraph g12 = build_cover_graph(twelve.cover);
    ContractionOutcome out12 = contract(twelve.cover, g12, *twelve.datum);
    CHECK(out12.contracted.empty());
    REQUIRE(out12.ribbons.size() == 1);
    CHECK(out12.ribbons[0].double_structure_degree == HalfInt::whole(-2));
    CHECK(out12.ribbons[0].genus == HalfInt::whole(1));
    REQUIRE(out12.charts.size() == 1);
    CHECK(out12.charts[0].branches[0].m == 3);
    CHECK(out12.charts[0].branches[0].delta == 1);
    CHECK(out12.charts[0].branches[0].ramified);
    CHECK(out12.charts[0].branches[1].delta == 0);
    REQUIRE(out12.audit.assembled_pa);
    CHECK(*out12.audit.assembled_pa == 3);
}

TEST_CASE("two tacnodes from the level truncation") {
    InputDoc five = load_fixture("ex5_5.json");
    Truncation tr = truncate(five.cover, *five.lambda_bar, -1);
    CoverGraph g = build_cover_graph(tr.cover);
    ContractionOutcome out = contract(tr.cover, g, tr.fn);
    REQUIRE(out.charts.size() == 2);
    for (const auto& c : out.charts) {
        CHECK(c.kind == ChartKind::contracted_component);
        CHECK(c.ell == 1);
        CHECK(c.branches[0].m == 2);
        CHECK(c.branches[0].delta == 1);
        CHECK(c.g_q == 1);
    }
    CHECK(out.audit.match);
    CHECK(out.audit.route_cover == 3);
    CHECK(*out.audit.route_contracted == 3);
    CHECK(out.audit.chart_delta_sum == 4);
    CHECK(out.audit.component_count == 2);
}

TEST_CASE("parity analysis") {
    InputDoc one = load_fixture("fig1_case1.json");
    ParityAnalysis p1 =
        parity_analysis(one.cover, *one.datum, multidegree(one.cover, *one.datum));
    REQUIRE(p1.records.size() == 1);
    CHECK(p1.records[0].odd_for_b);        // 5 | 1
    CHECK(!p1.records[0].odd_for_L2);      // corrected by the half-integral slope
    CHECK(!p1.records[0].lemma_violation);
    CHECK(p1.twisting_locus.empty());

    InputDoc two = load_fixture("fig1_case2.json");
    ParityAnalysis p2 =
        parity_analysis(two.cover, *two.datum, multidegree(two.cover, *two.datum));
    CHECK(!p2.records[0].odd_for_b);
    CHECK(!p2.records[0].odd_for_L2);

    // two odd edges away from the (empty) support are both twisting
    InputDoc twist = load_fixture("parity_twist.json");
    ParityAnalysis pt =
        parity_analysis(twist.cover, *twist.datum, multidegree(twist.cover, *twist.datum));
    CHECK(pt.twisting_locus == std::vector<int>{0, 1});
    for (const auto& r : pt.records) {
        CHECK(r.odd_for_b);
        CHECK(r.odd_for_L2);
        CHECK(r.in_twisting_locus);
    }
}

TEST_CASE("smooth cover with the zero datum audits to its own genus") {
    TropCover t;
    t.genus = 2;
    t.mu = {1};
    t.vertices.push_back({0, 6, {{0, 1}}});
    t.finalize();
    REQUIRE(validate_cover(t).passed);
    CoverGraph g = build_cover_graph(t);
    ContractionOutcome out = contract(t, g, CLFunction::zero(t));
    CHECK(out.charts.empty());
    CHECK(out.contracted.empty());
    CHECK(out.audit.match);
    CHECK(*out.audit.route_contracted == 2);
}

TEST_CASE("enumerated strict data never produce ribbons and keep the degree total") {
    for (const auto& shape : tree_shapes(2)) {
        for (const auto& t : decorated_covers(shape)) {
            EnumerationSpec spec;
            spec.max_twice_slope = 4;
            for (const auto& f : enumerate_data(t, spec, Strictness::lax)) {
                DegreeProfile p = multidegree(t, f);
                HalfInt legs{};
                for (const auto& l : f.leg_slopes) legs += l;
                CHECK(p.total == HalfInt::whole(t.genus - 1) + legs);
            }
            CoverGraph g = build_cover_graph(t);
            for (const auto& f : enumerate_data(t, spec, Strictness::strict)) {
                ContractionOutcome out = contract(t, g, f);
                CHECK(out.ribbons.empty());
                CHECK(out.audit.match);
            }
        }
    }
}

TEST_SUITE_END();
