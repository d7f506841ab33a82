#include "doctest.h"

#include "gorcontract/io.hpp"
#include "gorcontract/oracle.hpp"
#include "gorcontract/singlab.hpp"
#include "helpers.hpp"

using namespace gorcontract;

namespace {

SingularityChart chart_from(const char* fixture) {
    InputDoc doc = load_fixture(fixture);
    CoverGraph g = build_cover_graph(doc.cover);
    ContractionOutcome out = contract(doc.cover, g, *doc.datum);
    REQUIRE(out.charts.size() == 1);
    return out.charts[0];
}

SingularityChart synthetic(ChartKind kind, std::vector<ChartBranch> branches, int g_q) {
    SingularityChart c;
    c.kind = kind;
    c.branches = std::move(branches);
    c.ell = (int)c.branches.size();
    c.g_q = g_q;
    return c;
}

bool relations_match(const Presentation& p, const std::vector<std::string>& expected) {
    if (p.relations.size() != expected.size()) return false;
    std::vector<bool> used(expected.size(), false);
    for (const auto& rel : p.relations) {
        bool hit = false;
        for (size_t i = 0; i < expected.size(); ++i) {
            if (used[i]) continue;
            if (rel.same_relation(Poly::parse(p.vars, expected[i]))) {
                used[i] = true;
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE_BEGIN("singlab");

TEST_CASE("presentations of the worked singularities") {
    CHECK(relations_match(present(chart_from("ex2_10.json")),
                          {"s1*s2", "u^2 - s1^2 - s2^3"}));
    CHECK(relations_match(present(chart_from("ex2_11.json")), {"s1*s2", "u^2 - s1^2"}));
    CHECK(relations_match(present(chart_from("ex2_12.json")), {"s1*s2", "u^2 - s1^3"}));
    CHECK(relations_match(
        present(chart_from("ex2_9.json")),
        {"s1*s2", "s1*s3", "s2*s3", "u12^2 - s1^2 - s2^2", "u13^2 - s1^2 - s3^2"}));
}

TEST_CASE("cross relations carry the module structure for three branches") {
    Presentation p = present(chart_from("ex2_9.json"));
    REQUIRE(p.cross_relations.size() == 4);
    std::vector<std::string> expected{"s1*u12 - s1*u13", "s2*u13", "s3*u12",
                                      "u12*u13 - s1^2"};
    std::vector<bool> used(expected.size(), false);
    for (const auto& rel : p.cross_relations) {
        bool hit = false;
        for (size_t i = 0; i < expected.size(); ++i) {
            if (!used[i] && rel.same_relation(Poly::parse(p.vars, expected[i]))) {
                used[i] = hit = true;
                break;
            }
        }
        CHECK(hit);
    }
}

TEST_CASE("tacnode from the level truncation") {
    InputDoc five = load_fixture("ex5_5.json");
    Truncation tr = truncate(five.cover, *five.lambda_bar, -1);
    CoverGraph g = build_cover_graph(tr.cover);
    ContractionOutcome out = contract(tr.cover, g, tr.fn);
    REQUIRE(out.charts.size() == 2);
    for (const auto& c : out.charts)
        CHECK(relations_match(present(c), {"u^2 - s1^4"}));
}

TEST_CASE("single-branch cases") {
    ChartBranch ramified_point{-1, 1, 1, true};
    CHECK(present(synthetic(ChartKind::branch_point, {ramified_point}, 0)).relations[0].str() ==
          "u^2 - s1");
    CHECK(present(synthetic(ChartKind::generic, {{-1, 0, 1, false}}, 0)).relations[0].str() ==
          "u^2 - 1");
    CHECK(present(synthetic(ChartKind::generic, {{-1, 0, 0, false}}, 0)).relations[0].str() ==
          "u^2");
    // ribbon germ over a contracted point
    CHECK(present(synthetic(ChartKind::contracted_component, {{-1, 2, 0, false}}, 1))
              .relations[0]
              .str() == "u^2");
    CHECK_THROWS_AS(present(synthetic(ChartKind::contracted_component, {{-1, 0, 1, false}}, 1)),
                    std::invalid_argument);
}

TEST_CASE("gluing decomposition") {
    GlueDecomposition nine = glue_decomposition(chart_from("ex2_9.json"));
    CHECK(nine.branch_one.relations[0].str() == "u1^2 - s1^2");
    CHECK(nine.substitution_checks_ok);
    CHECK(nine.cokernel == "k[e]/(e^2)");
    std::vector<std::string> expect{"s2*s3", "s2*u13", "s3*u12", "u12^2 - s2^2",
                                    "u13^2 - s3^2"};
    CHECK(nine.complement.relations.size() == expect.size());
    for (size_t i = 0; i < expect.size(); ++i) {
        bool found = false;
        for (const auto& r : nine.complement.relations)
            if (r.same_relation(Poly::parse(nine.complement.vars, expect[i]))) found = true;
        CHECK(found);
    }

    GlueDecomposition ten = glue_decomposition(chart_from("ex2_10.json"));
    CHECK(ten.branch_one.relations[0].str() == "u1^2 - s1^2");
    CHECK(ten.complement.relations.back().str() == "u^2 - s2^3");
    CHECK(ten.substitution_checks_ok);

    // two simple ramified branches stay smooth on both pieces
    SingularityChart smooth = synthetic(
        ChartKind::node, {{-1, 1, 1, true}, {-1, 1, 1, true}}, 0);
    GlueDecomposition gs = glue_decomposition(smooth);
    CHECK(gs.branch_one.relations[0].str() == "u1^2 - s1");
    CHECK(gs.complement.relations.back().str() == "u^2 - s2");
    CHECK(gs.substitution_checks_ok);

    CHECK_THROWS_AS(glue_decomposition(synthetic(
                        ChartKind::contracted_component, {{-1, 2, 1, false}}, 1)),
                    std::invalid_argument);
}

TEST_CASE("normalization tables") {
    NormalizationData ten = normalize(chart_from("ex2_10.json"));
    CHECK(ten.h == 1);
    CHECK(ten.k == 1);
    CHECK(ten.d == 0);
    CHECK(ten.reduced_branch_count() == 3);
    CHECK(ten.table[0].s_image == "(a1, b1)");
    CHECK(ten.table[1].s_image == "c2^2");
    CHECK(ten.table[1].u_image == "(a1, -b1, c2^3)");

    NormalizationData nine = normalize(chart_from("ex2_9.json"));
    CHECK(nine.h == 3);
    CHECK(nine.k == 0);
    CHECK(nine.reduced_branch_count() == 6);

    NormalizationData uni =
        normalize(synthetic(ChartKind::contracted_component, {{-1, 3, 1, true}}, 2));
    CHECK(uni.h == 0);
    CHECK(uni.k == 1);
    CHECK(uni.reduced_branch_count() == 1);
    CHECK(uni.table[0].s_image == "c1^2");
    CHECK(uni.table[0].u_image == "(c1^5)");

    NormalizationData mixed = normalize(chart_from("ex2_12.json"));
    CHECK(mixed.k == 1);
    CHECK(mixed.d == 1);
    CHECK(mixed.table[1].s_image == "d2");
}

TEST_CASE("Gorenstein certificates") {
    GorensteinCertificate ten = certify_gorenstein(chart_from("ex2_10.json"));
    CHECK(ten.dim_O_over_c == 8);
    CHECK(ten.delta == 4);
    CHECK(ten.ok);

    GorensteinCertificate nine = certify_gorenstein(chart_from("ex2_9.json"));
    CHECK(nine.dim_O_over_c == 12);
    CHECK(nine.delta == 6);
    CHECK(nine.ok);

    // odd unibranch family: delta = g0, dim = 2 g0
    for (int g0 = 1; g0 <= 4; ++g0) {
        SingularityChart c = synthetic(ChartKind::contracted_component,
                                       {{-1, 2 * g0 - 1, 1, true}}, g0);
        GorensteinCertificate cert = certify_gorenstein(c);
        CHECK(cert.delta == g0);
        CHECK(cert.dim_O_over_c == 2 * g0);
        CHECK(cert.ok);
        CHECK(cert.delta == semigroup_delta(2 * g0 - 1, true));
    }

    CHECK_THROWS_AS(certify_gorenstein(chart_from("ex2_12.json")), std::invalid_argument);
}

TEST_CASE("dualising pullback") {
    auto ten = dualizing_pullback(chart_from("ex2_10.json"));
    REQUIRE(ten.size() == 3);
    CHECK(ten[0].point == "q1");
    CHECK(ten[0].multiplicity == 2);
    CHECK(ten[1].point == "q1~");
    CHECK(ten[1].multiplicity == 2);
    CHECK(ten[2].point == "q2");
    CHECK(ten[2].multiplicity == 4);

    auto cusp =
        dualizing_pullback(synthetic(ChartKind::node, {{-1, 1, 1, true}, {-1, 1, 1, true}}, 0));
    CHECK(cusp[0].multiplicity == 2);

    // plain nodes are outside the formula's domain
    CHECK_THROWS_AS(
        dualizing_pullback(synthetic(ChartKind::node, {{-1, 0, 1, false}, {-1, 0, 1, false}}, 0)),
        std::invalid_argument);

    // Noether consistency: multiplicities sum to dim(O/c)
    for (const char* name : {"ex2_9.json", "ex2_10.json"}) {
        SingularityChart c = chart_from(name);
        long long total = 0;
        for (const auto& p : dualizing_pullback(c)) total += p.multiplicity;
        CHECK(total == certify_gorenstein(c).dim_O_over_c);
    }
}

TEST_CASE("eta generator") {
    CHECK(eta_generator(chart_from("ex2_10.json")) == "ds1/(u*s1) - ds2/(u*s2)");
    CHECK(eta_generator(chart_from("ex2_9.json")) ==
          "ds1/(u1*s1) - ds2/(u12*s2) - ds3/(u13*s3)");
    CHECK_THROWS_AS(
        eta_generator(synthetic(ChartKind::contracted_component, {{-1, 2, 1, false}}, 1)),
        std::invalid_argument);
}

TEST_CASE("branch permutation preserves the numerical invariants") {
    SingularityChart a = synthetic(ChartKind::node,
                                   {{-1, 2, 1, false}, {-1, 3, 1, true}, {-1, 4, 1, false}}, 0);
    // admissible genus for this boundary data
    a.g_q = (2 + 3 + 4 + 1) / 2 - 3 + 1;
    SingularityChart b = a;
    std::swap(b.branches[0], b.branches[2]);
    SingularityChart c = a;
    std::rotate(c.branches.begin(), c.branches.begin() + 1, c.branches.end());
    GorensteinCertificate ca = certify_gorenstein(a);
    for (const auto& chart : {b, c}) {
        GorensteinCertificate cert = certify_gorenstein(chart);
        CHECK(cert.delta == ca.delta);
        CHECK(cert.dim_O_over_c == ca.dim_O_over_c);
        NormalizationData na = normalize(a), nn = normalize(chart);
        CHECK(na.h == nn.h);
        CHECK(na.k == nn.k);
    }
}

TEST_CASE("reduced germ assembly matches the genus-formula delta") {
    for (const char* name : {"ex2_9.json", "ex2_10.json"}) {
        SingularityChart c = chart_from(name);
        CHECK(reduced_germ_delta(c) == certify_gorenstein(c).delta);
    }
    // and for the two-branch node germ of the ribbon examples
    CHECK(reduced_germ_delta(chart_from("ex2_11.json")) == 1);  // a node
    CHECK(reduced_germ_delta(chart_from("ex2_12.json")) == 1);  // a cusp
}

TEST_SUITE_END();
