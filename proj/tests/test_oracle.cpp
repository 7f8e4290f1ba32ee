#include <doctest.h>

#include "halpart/oracle.hpp"
#include "support.hpp"

using namespace halpart;
using namespace halpart::test;

namespace {

std::vector<std::vector<std::string>> value_tuples(const FiniteMapping& f, const std::vector<Selection>& all) {
    std::vector<std::vector<std::string>> out;
    for (const auto& s : all) {
        std::vector<std::string> row;
        for (auto y : s.values)
            row.push_back(f.y_labels()[y]);
        out.push_back(row);
    }
    return out;
}

} // namespace

TEST_CASE("enumerate_selections lists every injective selection in depth-first order") {
    const auto f = m1();
    CHECK(value_tuples(f, oracle::enumerate_selections(f)) ==
          std::vector<std::vector<std::string>>{{"1", "2", "3"}, {"2", "1", "3"}});

    CHECK(oracle::enumerate_selections(mapping({{1, {1}}, {2, {1}}})).empty());
    CHECK(oracle::enumerate_selections(permutation_mapping(3)).size() == 1);
}

TEST_CASE("a complete mapping on n points has n! selections") {
    const auto f = mapping({{1, {1, 2, 3, 4}}, {2, {1, 2, 3, 4}}, {3, {1, 2, 3, 4}}, {4, {1, 2, 3, 4}}});
    CHECK(oracle::enumerate_selections(f).size() == 24);
    for (const auto& s : oracle::enumerate_selections(f))
        CHECK(is_valid_selection(f, s));
}

TEST_CASE("oracle_kernel collects the values used by some selection") {
    const auto f = m1();
    const auto k = oracle::oracle_kernel(f);
    CHECK_FALSE(k.empty);
    CHECK(k.kernel_images == std::vector<YSubset>{ys(f, {1, 2}), ys(f, {1, 2}), ys(f, {3})});

    const auto dead = mapping({{1, {1}}, {2, {1}}});
    const auto kd = oracle::oracle_kernel(dead);
    CHECK(kd.empty);
    for (auto img : kd.kernel_images)
        CHECK(img.empty());

    const auto p = permutation_mapping(4);
    CHECK(oracle::oracle_kernel(p).kernel_images == p.images());
}

TEST_CASE("oracle_hall_check returns the smallest violating subset") {
    auto f = mapping({{1, {1}}, {2, {1}}});
    auto v = oracle::oracle_hall_check(f);
    REQUIRE(v);
    CHECK(v->witness == xs(f, {1, 2}));

    CHECK_FALSE(oracle::oracle_hall_check(permutation_mapping(5)));

    auto g = mapping({{1, {1, 2}}, {2, {1, 2}}, {3, {1, 2}}});
    auto vg = oracle::oracle_hall_check(g);
    REQUIRE(vg);
    CHECK(vg->witness == xs(g, {1, 2, 3}));

    // An empty image is caught as a singleton before anything larger.
    auto h = mapping({{1, {1}}, {2, {}}, {3, {1}}}, 1);
    auto vh = oracle::oracle_hall_check(h);
    REQUIRE(vh);
    CHECK(vh->witness == xs(h, {2}));
}

TEST_CASE("oracle caps reject large domains") {
    std::mt19937_64 rng(7);
    const auto big = random_mapping(rng, oracle::selection_cap + 1, 20, 0.5);
    CHECK_THROWS_AS((void)oracle::enumerate_selections(big), SizeLimitError);
    const auto huge = random_mapping(rng, oracle::subset_scan_cap + 1, 30, 0.5);
    CHECK_THROWS_AS((void)oracle::oracle_hall_check(huge), SizeLimitError);
    CHECK_THROWS_AS((void)oracle::critical_sets(huge), SizeLimitError);
}

TEST_CASE("critical_sets of the example mapping") {
    const auto f = m1();
    CHECK(oracle::critical_sets(f) == std::vector<XSubset>{xs(f, {1, 2}), xs(f, {1, 2, 3})});
}
