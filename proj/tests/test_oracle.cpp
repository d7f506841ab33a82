#include "doctest.h"

#include <set>

#include "gorcontract/io.hpp"
#include "gorcontract/oracle.hpp"
#include "gorcontract/report.hpp"
#include "helpers.hpp"

using namespace gorcontract;

namespace {

std::set<std::string> canonical(const TropCover& t, const std::vector<CLFunction>& fns) {
    std::set<std::string> out;
    for (const auto& f : fns) out.insert(clfunc_to_json(t, f).dump());
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("enumeration finds exactly the solved datum on the (5,1) cover") {
    InputDoc doc = load_fixture("fig1_case1.json");
    EnumerationSpec spec;
    spec.max_twice_slope = 4;
    spec.support = std::vector<int>{0};
    auto strict = enumerate_data(doc.cover, spec, Strictness::strict);
    REQUIRE(strict.size() == 1);
    CHECK(strict[0].edge_slopes[0] == HalfInt::parse("-3/2"));
    CHECK(strict[0].values[0] == HalfInt::parse("3/2"));
}

TEST_CASE("empty support admits only the zero function") {
    InputDoc doc = load_fixture("fig1_case2.json");
    EnumerationSpec spec;
    spec.max_twice_slope = 4;
    spec.support = std::vector<int>{};
    auto strict = enumerate_data(doc.cover, spec, Strictness::strict);
    REQUIRE(strict.size() == 1);
    CHECK(strict[0].edge_slopes[0].is_zero());
}

TEST_CASE("the worked genus-two chain datum appears in the enumeration") {
    InputDoc doc = load_fixture("ex2_10.json");
    EnumerationSpec spec;
    spec.max_twice_slope = 4;
    auto strict = enumerate_data(doc.cover, spec, Strictness::strict);
    bool found = false;
    for (const auto& f : strict)
        if (f.edge_slopes[0] == HalfInt::whole(1) && f.edge_slopes[1] == HalfInt::parse("-3/2"))
            found = true;
    CHECK(found);
}

TEST_CASE("search-space guard") {
    InputDoc doc = load_fixture("ex2_9.json");
    EnumerationSpec spec;
    spec.max_twice_slope = 8;
    spec.guard = 10;
    CHECK_THROWS_AS(enumerate_data_serial(doc.cover, spec, Strictness::lax),
                    std::overflow_error);
}

TEST_CASE("serial and parallel kernels agree") {
    InputDoc doc = load_fixture("parity_twist.json");
    EnumerationSpec spec;
    spec.max_twice_slope = 6;
    auto serial = enumerate_data_serial(doc.cover, spec, Strictness::lax);
    auto parallel = enumerate_data_parallel(doc.cover, spec, Strictness::lax);
    CHECK(serial.size() == parallel.size());
    CHECK(canonical(doc.cover, serial) == canonical(doc.cover, parallel));
}

TEST_CASE("subset-solve agrees with the brute-force strict sweep") {
    int compared = 0;
    for (const auto& shape : tree_shapes(2)) {
        for (const auto& t : decorated_covers(shape)) {
            EnumerationSpec spec;
            spec.max_twice_slope = 6;
            auto brute = enumerate_data(t, spec, Strictness::strict);
            auto solved = strict_data_via_solve(t, 6);
            CHECK(canonical(t, brute) == canonical(t, solved));
            ++compared;
        }
    }
    CHECK(compared > 10);
}

TEST_CASE("genus two ways on the fixtures") {
    InputDoc nine = load_fixture("ex2_9.json");
    CoverGraph g9 = build_cover_graph(nine.cover);
    auto r9 = genus_two_ways(nine.cover, g9, contract(nine.cover, g9, *nine.datum));
    CHECK(r9 == std::pair<int, long long>{1, 1});

    InputDoc five = load_fixture("ex5_5.json");
    Truncation tr = truncate(five.cover, *five.lambda_bar, -1);
    CoverGraph g5 = build_cover_graph(tr.cover);
    auto r5 = genus_two_ways(tr.cover, g5, contract(tr.cover, g5, tr.fn));
    CHECK(r5 == std::pair<int, long long>{3, 3});

    TropCover smooth;
    smooth.genus = 2;
    smooth.mu = {1};
    smooth.vertices.push_back({0, 6, {{0, 1}}});
    smooth.finalize();
    CoverGraph gs = build_cover_graph(smooth);
    auto rs = genus_two_ways(smooth, gs, contract(smooth, gs, CLFunction::zero(smooth)));
    CHECK(rs == std::pair<int, long long>{2, 2});
}

TEST_CASE("semigroup gap counts") {
    CHECK(semigroup_delta(3, true) == 2);   // gaps of <2,5> = {1,3}
    CHECK(semigroup_delta(1, true) == 1);   // gaps of <2,3> = {1}
    CHECK(semigroup_delta(3, false) == 1);  // gaps of <2,3>
    for (int g0 = 1; g0 <= 5; ++g0) CHECK(semigroup_delta(2 * g0 - 1, true) == g0);
    CHECK_THROWS_AS(semigroup_delta(2, true), std::invalid_argument);
    CHECK_THROWS_AS(semigroup_delta(0, true), std::invalid_argument);
}

TEST_CASE("tree census") {
    auto shapes = tree_shapes(3);
    CHECK(shapes.size() == 5);  // path lengths 0..3 plus the 3-star
    auto single = tree_shapes(0);
    CHECK(single.size() == 1);
    int total_covers = 0;
    for (const auto& shape : shapes) {
        auto covers = decorated_covers(shape);
        for (const auto& t : covers) {
            CHECK(validate_cover(t).passed);
            CHECK(t.genus >= 2);
        }
        total_covers += (int)covers.size();
    }
    CHECK(total_covers > 40);
}

TEST_SUITE_END();
