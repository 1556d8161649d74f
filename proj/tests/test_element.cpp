#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ncsf/element.hpp"

using namespace ncsf;

TEST_CASE("rational arithmetic", "[element]") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(3, 6).str() == "1/2");
    CHECK(Rational(-4, 2).str() == "-2");
    CHECK((Rational(1, 2) * Rational(2)) == Rational(1));
    CHECK(Rational(1, 2).is_integer() == false);
    CHECK(Rational(7).is_nonnegative_integer());
    CHECK_FALSE(Rational(-7).is_nonnegative_integer());
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("multiply is the bilinear concatenation product", "[element]") {
    Element a = Element::generator(2) * Element::generator(1);
    CHECK(a == Element::monomial(Composition({2, 1}), Rational(1)));

    Element x = Element::generator(1) + Element::generator(2);
    CHECK((x * Element::zero()).is_zero());

    Element half = Rational(1, 2) * Element::generator(1);
    Element two = Rational(2) * Element::generator(1);
    CHECK(half * two == Element::monomial(Composition({1, 1}), Rational(1)));
}

TEST_CASE("multiply is associative and unital", "[element]") {
    std::mt19937 rng(7);
    auto random_element = [&]() {
        Element e;
        std::uniform_int_distribution<int> nterms(1, 4), part(1, 3), len(0, 2),
            num(-3, 3), den(1, 3);
        for (int t = 0; t < nterms(rng); ++t) {
            std::vector<int> parts;
            for (int i = 0, l = len(rng); i < l; ++i) parts.push_back(part(rng));
            e += Element::monomial(Composition(parts), Rational(num(rng), den(rng)));
        }
        return e;
    };
    for (int trial = 0; trial < 50; ++trial) {
        Element a = random_element(), b = random_element(), c = random_element();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * Element::one() == a);
        CHECK(Element::one() * a == a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("homogeneity bookkeeping", "[element]") {
    Element x = Element::generator(3) + Element::generator(1) * Element::generator(2);
    int d = 0;
    CHECK(x.is_homogeneous(&d));
    CHECK(d == 3);
    Element y = x + Element::generator(1);
    CHECK_FALSE(y.is_homogeneous());
    CHECK(y.homogeneous_component(3) == x);
    CHECK(y.homogeneous_component(1) == Element::generator(1));
    CHECK(y.degrees() == std::vector<int>{1, 3});
}

TEST_CASE("element printing", "[element]") {
    Element e = Rational(1, 2) * Element::monomial(Composition({1, 1}), Rational(1)) -
                Rational(1, 2) * Element::generator(2);
    CHECK(e.str() == "-1/2*Psi[2] + 1/2*Psi[1,1]");
    CHECK(Element::zero().str() == "0");
    CHECK(Element::one().str() == "1");
    Element f = Rational(2) * Element::monomial(Composition({2, 1}), Rational(1));
    CHECK(f.str("L") == "2*L[2,1]");
    CHECK((Element::generator(2) + Element::one()).str() == "1*Psi[2] + 1");
}
