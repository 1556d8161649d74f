#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ncsf/composition.hpp"

using namespace ncsf;

TEST_CASE("descent_set", "[composition]") {
    CHECK(Composition({2, 3, 2, 2, 1}).descent_set() == std::vector<int>{2, 5, 7, 9});
    CHECK(Composition({5}).descent_set().empty());
    CHECK(Composition({1, 1, 1}).descent_set() == std::vector<int>{1, 2});
    CHECK(Composition().descent_set().empty());
}

TEST_CASE("from_descents", "[composition]") {
    CHECK(Composition::from_descents({2}, 3) == Composition({2, 1}));
    CHECK(Composition::from_descents({}, 4) == Composition({4}));
    CHECK(Composition::from_descents({1, 2, 3}, 4) == Composition({1, 1, 1, 1}));
    CHECK_THROWS_AS(Composition::from_descents({4}, 4), std::invalid_argument);
    CHECK_THROWS_AS(Composition::from_descents({0}, 4), std::invalid_argument);
}

TEST_CASE("descent bijection round-trips exhaustively", "[composition]") {
    for (int n = 1; n <= 10; ++n) {
        for (const Composition& I : compositions_of(n, 10))
            CHECK(Composition::from_descents(I.descent_set(), n) == I);
        // every subset of {1..n-1}, via bitmask
        for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
            std::vector<int> s;
            for (int b = 0; b < n - 1; ++b)
                if (mask & (1u << b)) s.push_back(b + 1);
            CHECK(Composition::from_descents(s, n).descent_set() == s);
        }
    }
}

TEST_CASE("is_finer", "[composition]") {
    CHECK(is_finer(Composition({1, 1, 1}), Composition({2, 1})));
    CHECK_FALSE(is_finer(Composition({2, 1}), Composition({1, 2})));
    CHECK_FALSE(is_finer(Composition({4, 1}), Composition({2, 2, 1})));
    CHECK(is_finer(Composition({2, 2, 1}), Composition({4, 1})));
    CHECK_FALSE(is_finer(Composition({2}), Composition({3})));  // weight mismatch
}

TEST_CASE("is_finer is a partial order with known extremes", "[composition]") {
    const int n = 5;
    std::vector<Composition> all = compositions_of(n);
    Composition ones({1, 1, 1, 1, 1});
    Composition top({n});
    for (const auto& a : all) {
        CHECK(is_finer(a, a));
        CHECK(is_finer(ones, a));
        CHECK(is_finer(a, top));
        for (const auto& b : all) {
            if (is_finer(a, b) && is_finer(b, a)) CHECK(a == b);
            for (const auto& c : all)
                if (is_finer(a, b) && is_finer(b, c)) CHECK(is_finer(a, c));
        }
    }
}

TEST_CASE("concatenate and near_concatenate", "[composition]") {
    CHECK(concatenate(Composition({4, 1}), Composition({1, 3})) ==
          Composition({4, 1, 1, 3}));
    CHECK(concatenate(Composition({5}), Composition()) == Composition({5}));
    CHECK(concatenate(Composition({2, 1}), Composition({1})) == Composition({2, 1, 1}));

    CHECK(near_concatenate(Composition({4, 1}), Composition({1, 1, 1, 1})) ==
          Composition({4, 2, 1, 1, 1}));
    CHECK(near_concatenate(Composition({1}), Composition({1})) == Composition({2}));
    CHECK(near_concatenate(Composition({2, 1}), Composition({3})) == Composition({2, 4}));
    CHECK_THROWS_AS(near_concatenate(Composition(), Composition({1})), std::domain_error);
    CHECK_THROWS_AS(near_concatenate(Composition({1}), Composition()), std::domain_error);
}

TEST_CASE("split_at_weight", "[composition]") {
    WeightSplit s = split_at_weight(Composition({4, 2, 1, 1, 1}), 5);
    CHECK(s.left == Composition({4, 1}));
    CHECK(s.right == Composition({1, 1, 1, 1}));
    CHECK(s.kind == SplitKind::near_concat);

    s = split_at_weight(Composition({4, 1, 1, 3}), 5);
    CHECK(s.left == Composition({4, 1}));
    CHECK(s.right == Composition({1, 3}));
    CHECK(s.kind == SplitKind::concat);

    s = split_at_weight(Composition({2, 2}), 3);
    CHECK(s.left == Composition({2, 1}));
    CHECK(s.right == Composition({1}));
    CHECK(s.kind == SplitKind::near_concat);

    CHECK_THROWS_AS(split_at_weight(Composition({2, 2}), 0), std::out_of_range);
    CHECK_THROWS_AS(split_at_weight(Composition({2, 2}), 4), std::out_of_range);
}

TEST_CASE("split_at_weight is the unique reconstruction", "[composition]") {
    for (int n = 2; n <= 7; ++n) {
        for (const Composition& K : compositions_of(n)) {
            for (int m = 1; m < n; ++m) {
                WeightSplit s = split_at_weight(K, m);
                CHECK(s.left.weight() == m);
                if (s.kind == SplitKind::concat) {
                    CHECK(concatenate(s.left, s.right) == K);
                    CHECK(near_concatenate(s.left, s.right) != K);
                } else {
                    CHECK(near_concatenate(s.left, s.right) == K);
                    CHECK(concatenate(s.left, s.right) != K);
                }
            }
        }
    }
}

TEST_CASE("compositions_of matches the table order", "[composition]") {
    std::vector<Composition> c3 = compositions_of(3);
    REQUIRE(c3.size() == 4);
    CHECK(c3[0] == Composition({3}));
    CHECK(c3[1] == Composition({2, 1}));
    CHECK(c3[2] == Composition({1, 2}));
    CHECK(c3[3] == Composition({1, 1, 1}));

    std::vector<Composition> c4 = compositions_of(4);
    REQUIRE(c4.size() == 8);
    std::vector<Composition> expected = {
        Composition({4}),       Composition({3, 1}),    Composition({2, 2}),
        Composition({2, 1, 1}), Composition({1, 3}),    Composition({1, 2, 1}),
        Composition({1, 1, 2}), Composition({1, 1, 1, 1})};
    CHECK(c4 == expected);

    CHECK(compositions_of(1) == std::vector<Composition>{Composition({1})});
}

TEST_CASE("compositions_of counts and cap", "[composition]") {
    for (int n = 1; n <= 11; ++n)
        CHECK(compositions_of(n, 11).size() == size_t{1} << (n - 1));
    CHECK_THROWS_AS(compositions_of(9), resource_limit_error);
    CHECK_THROWS_AS(compositions_of(0), std::invalid_argument);
}

TEST_CASE("composition text syntax", "[composition]") {
    CHECK(Composition::parse("[2,2,1]") == Composition({2, 2, 1}));
    CHECK(Composition::parse("[ 2, 10 ,1 ]") == Composition({2, 10, 1}));
    CHECK(Composition::parse("[]") == Composition());
    CHECK(Composition({2, 2, 1}).str() == "[2,2,1]");
    CHECK(Composition().str() == "[]");
    CHECK(Composition::parse(Composition({1, 12, 3}).str()) == Composition({1, 12, 3}));
    CHECK_THROWS_AS(Composition::parse("[2,0]"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("[2,]"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("2,1"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("[2,1] x"), std::invalid_argument);
    CHECK_THROWS_AS(Composition({2, 0, 1}), std::invalid_argument);
}

TEST_CASE("descending lex order relation", "[composition]") {
    DescLex lt;
    CHECK(lt(Composition({3}), Composition({2, 1})));
    CHECK(lt(Composition({2, 2}), Composition({2, 1, 1})));
    CHECK(lt(Composition({2, 1}), Composition({2})));  // longer word first on prefix ties
    std::vector<Composition> all = compositions_of(6);
    for (size_t i = 0; i + 1 < all.size(); ++i) CHECK(lt(all[i], all[i + 1]));
}
