#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "zetamap/dyck.hpp"
#include "zetamap/enumerate.hpp"
#include "zetamap/rational.hpp"

using namespace zetamap;

namespace {

// independent oracle: the Catalan recurrence
BigInt catalan_by_recurrence(int n) {
    std::vector<BigInt> cat(n + 1);
    cat[0] = 1;
    for (int m = 1; m <= n; ++m) {
        BigInt sum = 0;
        for (int k = 0; k < m; ++k) sum += cat[k] * cat[m - 1 - k];
        cat[m] = sum;
    }
    return cat[n];
}

}  // namespace

TEST_CASE("catalan numbers") {
    CHECK(catalan_number(0) == 1);
    CHECK(catalan_number(3) == 5);
    CHECK(catalan_number(12) == 208012);
    for (int n = 0; n <= 15; ++n) CHECK(catalan_number(n) == catalan_by_recurrence(n));
    CHECK_THROWS_AS(catalan_number(-1), std::invalid_argument);
}

TEST_CASE("rationals are exact and normalized") {
    Rational r = make_rational(769, 216);
    CHECK(boost::multiprecision::numerator(r) == 769);
    CHECK(boost::multiprecision::denominator(r) == 216);
    CHECK(to_string(r) == "769/216");
    CHECK(to_string(make_rational(4, 2)) == "2");
    CHECK(make_rational(1, 3) + make_rational(1, 6) == make_rational(1, 2));
    CHECK(make_rational(-2, -4) == make_rational(1, 2));  // denominator kept positive
}

TEST_CASE("dyck path parsing") {
    CHECK(DyckPath::parse("").size() == 0);
    CHECK(DyckPath::parse("NE").str() == "NE");
    CHECK(DyckPath::parse("NNENEE").size() == 3);

    CHECK_THROWS_WITH_AS(DyckPath::parse("NEXE"), "invalid step character 'X' at position 3",
                         ParseError);
    CHECK_THROWS_WITH_AS(DyckPath::parse("NEEN"), "path dips below the diagonal at position 3",
                         ParseError);
    CHECK_THROWS_WITH_AS(DyckPath::parse("NEN"),
                         "unbalanced path (2 north vs 1 east steps) at position 3", ParseError);
    try {
        DyckPath::parse("NEEN");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
    }
}

TEST_CASE("area vector of a path") {
    CHECK(area_vector(DyckPath::parse("NE")) == AreaVector({0}));
    CHECK(area_vector(DyckPath::parse("NENE")) == AreaVector({0, 0}));
    CHECK(area_vector(DyckPath::parse("NNENEE")) == AreaVector({0, 1, 1}));
    CHECK(area_vector(DyckPath()) == AreaVector());
}

TEST_CASE("path from area vector") {
    CHECK(dyck_from_area(AreaVector({0})).str() == "NE");
    CHECK(dyck_from_area(AreaVector({0, 1})).str() == "NNEE");
    CHECK(dyck_from_area(AreaVector({0, 1, 1})).str() == "NNENEE");

    CHECK_THROWS_AS(AreaVector({1}), std::invalid_argument);
    CHECK_THROWS_AS(AreaVector({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(AreaVector({0, -1}), std::invalid_argument);
}

TEST_CASE("area round trips, exhaustive to n = 12") {
    for (int n = 0; n <= 12; ++n) {
        DyckEnumerator en(n);
        while (auto d = en.next()) {
            AreaVector a = area_vector(*d);
            CHECK(dyck_from_area(a) == *d);
        }
    }
    // the other direction: every valid area vector comes from its path
    for (int n = 0; n <= 8; ++n) {
        DyckEnumerator en(n);
        while (auto d = en.next()) {
            AreaVector a = area_vector(*d);
            CHECK(area_vector(dyck_from_area(a)) == a);
        }
    }
}

TEST_CASE("north runs") {
    CHECK(north_runs(DyckPath::parse("NENNEE")) == std::vector<int>{1, 2, 0});
    CHECK(north_runs(DyckPath()) == std::vector<int>{});
}
