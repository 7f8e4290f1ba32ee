#include <doctest.h>

#include <random>

#include "halpart/mapping_io.hpp"
#include "support.hpp"

using namespace halpart;
using namespace halpart::test;

namespace {

constexpr const char* m1_text = "X: 1 2 3\n"
                                "Y: 1 2 3\n"
                                "1 : 1 2\n"
                                "2 : 1 2\n"
                                "3 : 1 2 3\n";

} // namespace

TEST_CASE("parse the example document") {
    const auto doc = parse_mapping_document(m1_text);
    REQUIRE(doc.x_elements);
    CHECK(*doc.x_elements == std::vector<std::string>{"1", "2", "3"});
    CHECK(doc.rows.size() == 3);
    CHECK(to_mapping(doc) == m1());
    CHECK(serialize(doc) == m1_text);
}

TEST_CASE("comments, blank lines, glued colons, and empty images") {
    const auto doc = parse_mapping_document("# header comment\n\n"
                                            "a: p q   # trailing\n"
                                            "b :\n"
                                            "c : q\n");
    CHECK_FALSE(doc.x_elements);
    const auto f = to_mapping(doc);
    CHECK(f.x_labels() == std::vector<std::string>{"a", "b", "c"});
    CHECK(f.y_labels() == std::vector<std::string>{"p", "q"});
    CHECK(f.image(1).empty());
    CHECK(serialize(doc) == "a : p q\nb :\nc : q\n");
}

TEST_CASE("declarations fix the element order and supply missing rows") {
    const auto f = to_mapping(parse_mapping_document("X: b a c\nY: 3 2 1\na : 1\nb : 2 3\n"));
    CHECK(f.x_labels() == std::vector<std::string>{"b", "a", "c"});
    CHECK(f.y_labels() == std::vector<std::string>{"3", "2", "1"});
    CHECK(f.labels_of(f.image(0)) == std::vector<std::string>{"3", "2"});
    CHECK(f.image(2).empty());
}

TEST_CASE("malformed documents") {
    CHECK_THROWS_WITH_AS((void)parse_mapping_document("1 : 1\n1 : 2\n"), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_AS((void)parse_mapping_document("1 1 2\n"), ParseError);
    CHECK_THROWS_AS((void)parse_mapping_document("X: 1 1\n"), ParseError);
    CHECK_THROWS_AS((void)parse_mapping_document("1 : 2 2\n"), ParseError);
    CHECK_THROWS_AS((void)parse_mapping_document("X: 1\nX: 2\n"), ParseError);
    CHECK_THROWS_AS((void)parse_mapping_document("1 : 2\nX: 1\n"), ParseError);
    CHECK_THROWS_AS((void)parse_mapping_document("1 : 2 : 3\n"), ParseError);
    CHECK_THROWS_AS((void)to_mapping(parse_mapping_document("X: 1\n2 : 1\n")), ParseError);
    CHECK_THROWS_AS((void)to_mapping(parse_mapping_document("Y: 1\n1 : 2\n")), ParseError);
    CHECK_THROWS_AS((void)to_mapping(parse_mapping_document("# nothing\n")), ParseError);
}

TEST_CASE("parse and serialize round-trip on random documents") {
    std::mt19937_64 rng(5);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = random_instance(rng, 8, 8);
        auto doc = to_document(f);
        if (coin(rng))
            doc.x_elements.reset();
        if (coin(rng))
            doc.y_elements.reset();
        const auto again = parse_mapping_document(serialize(doc));
        CHECK(again == doc);
        CHECK(serialize(again) == serialize(doc));
    }
}
