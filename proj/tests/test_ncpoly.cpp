#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncformal/ncpoly.hpp"
#include "ncformal/rng.hpp"
#include "ncformal/sampling.hpp"

using namespace ncformal;

TEST_CASE("free algebra product") {
    NCPoly x1 = NCPoly::generator(2, 0);
    NCPoly x2 = NCPoly::generator(2, 1);

    CHECK(nc_mul(x1, x2) == NCPoly::monomial(2, {0, 1}));
    CHECK(nc_mul(NCPoly::one(2), x2) == x2);

    NCPoly lhs = nc_mul(x1 + x2, x1 - x2);
    NCPoly expected(2);
    expected.add_term({0, 0}, Rational(1));
    expected.add_term({0, 1}, Rational(-1));
    expected.add_term({1, 0}, Rational(1));
    expected.add_term({1, 1}, Rational(-1));
    CHECK(lhs == expected);

    CHECK_THROWS_AS(nc_mul(NCPoly::generator(2, 0), NCPoly::generator(3, 0)), ContractError);
}

TEST_CASE("commutator basics") {
    NCPoly x1 = NCPoly::generator(2, 0);
    NCPoly x2 = NCPoly::generator(2, 1);

    NCPoly b = nc_commutator(x2, x1);
    NCPoly expected(2);
    expected.add_term({1, 0}, Rational(1));
    expected.add_term({0, 1}, Rational(-1));
    CHECK(b == expected);

    NCPoly p = x1 + nc_mul(x2, x2);
    CHECK(nc_commutator(p, p).is_zero());

    // nested bracket expanded through the product oracle
    NCPoly nested = nc_commutator(b, x2);
    CHECK(nested == nc_mul(b, x2) - nc_mul(x2, b));
    NCPoly direct(2);
    direct.add_term({1, 0, 1}, Rational(2));
    direct.add_term({0, 1, 1}, Rational(-1));
    direct.add_term({1, 1, 0}, Rational(-1));
    CHECK(nested == direct);
}

TEST_CASE("nc_mul is associative on random triples") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int d = rng.next_int(1, 3);
        NCPoly p = random_ncpoly(rng, d, 2, 3);
        NCPoly q = random_ncpoly(rng, d, 2, 3);
        NCPoly r = random_ncpoly(rng, d, 2, 3);
        CHECK(nc_mul(nc_mul(p, q), r) == nc_mul(p, nc_mul(q, r)));
    }
}

TEST_CASE("partial derivatives") {
    int d = 2;
    CommPoly f = parse_commpoly("x1*x1*x2", d);
    CHECK(partial_derivative(f, 0) == parse_commpoly("2*x1*x2", d));
    CHECK(partial_derivative(CommPoly::constant(d, Rational(7)), 1).is_zero());
    CommPoly g = parse_commpoly("x1*x2 + x2*x2*x2", d);
    CHECK(partial_derivative(g, 1) == parse_commpoly("x1 + 3*x2*x2", d));
    CHECK_THROWS_AS(partial_derivative(f, 5), ContractError);
}

TEST_CASE("mixed partials commute") {
    Rng rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        int d = rng.next_int(2, 3);
        CommPoly f = random_commpoly(rng, d, 4, 4);
        CHECK(partial_derivative(partial_derivative(f, 0), 1) ==
              partial_derivative(partial_derivative(f, 1), 0));
    }
}

TEST_CASE("localized derivative quotient rule") {
    int d = 2;
    CommPoly x1 = CommPoly::variable(d, 0);

    LocalizedElement inv(CommPoly::one(d), 1, x1);  // 1/x1
    LocalizedElement di = localized_derivative(inv, 0);
    CHECK(di == LocalizedElement(CommPoly::constant(d, Rational(-1)), 2, x1));
    CHECK(localized_derivative(inv, 1).is_zero());

    LocalizedElement frac(CommPoly::variable(d, 1), 1, x1);  // x2/x1
    CHECK(localized_derivative(frac, 1) == LocalizedElement(CommPoly::one(d), 1, x1));

    LocalizedElement g(parse_commpoly("x1 + x2", d), 2, x1);
    CHECK(localized_derivative(g, 0) ==
          LocalizedElement(parse_commpoly("0 - x1 - 2*x2", d), 3, x1));
}

TEST_CASE("localized derivative reduces to the polynomial case") {
    Rng rng(13);
    CommPoly center = parse_commpoly("x1*x1 + x2", 2);
    for (int trial = 0; trial < 25; ++trial) {
        CommPoly f = random_commpoly(rng, 2, 3, 4);
        LocalizedElement g(f, 0, center);
        for (int var = 0; var < 2; ++var) {
            LocalizedElement dg = localized_derivative(g, var);
            CHECK(dg.denom_power() == 0);
            CHECK(dg.numerator() == partial_derivative(f, var));
        }
        // mixed partials on a genuinely localized element
        LocalizedElement h(f, 2, center);
        CHECK(localized_derivative(localized_derivative(h, 0), 1) ==
              localized_derivative(localized_derivative(h, 1), 0));
    }
}

TEST_CASE("localized reduction cancels center powers") {
    int d = 1;
    CommPoly x = CommPoly::variable(d, 0);
    // x^2 / x reduces to x
    LocalizedElement e(comm_mul(x, x), 1, x);
    CHECK(e.denom_power() == 0);
    CHECK(e.numerator() == x);
    CHECK_THROWS_AS(LocalizedElement(x, 1, CommPoly::zero(d)), ContractError);
}

TEST_CASE("abelianization") {
    NCPoly p = parse_ncpoly("x2*x1", 2);
    CommPoly image = abelianize(p);
    CHECK(image == parse_commpoly("x1*x2", 2));

    NCPoly x1 = NCPoly::generator(2, 0);
    NCPoly x2 = NCPoly::generator(2, 1);
    CHECK(abelianize(nc_commutator(x2, x1)).is_zero());

    CHECK(abelianize(parse_ncpoly("x1*x2*x1 - 2*x2", 2)) ==
          parse_commpoly("x1*x1*x2 - 2*x2", 2));
}

TEST_CASE("abelianize is a ring map") {
    Rng rng(14);
    for (int trial = 0; trial < 30; ++trial) {
        int d = rng.next_int(1, 3);
        NCPoly p = random_ncpoly(rng, d, 3, 4);
        NCPoly q = random_ncpoly(rng, d, 3, 4);
        CHECK(abelianize(nc_mul(p, q)) == comm_mul(abelianize(p), abelianize(q)));
        CHECK(abelianize(nc_commutator(p, q)).is_zero());
    }
}

TEST_CASE("polynomial text grammar") {
    NCPoly p = parse_ncpoly("3*x2*x1 - x1*x2", 2);
    NCPoly expected(2);
    expected.add_term({1, 0}, Rational(3));
    expected.add_term({0, 1}, Rational(-1));
    CHECK(p == expected);
    CHECK(parse_ncpoly(to_string(p), 2) == p);

    CHECK(parse_ncpoly("1/2*x1 + 1/2*x1", 1) == NCPoly::generator(1, 0));
    CHECK(parse_commpoly("x2*x1", 2) == parse_commpoly("x1*x2", 2));
    CHECK(parse_ncpoly("5", 1) == NCPoly::monomial(1, {}, Rational(5)));
    CHECK(parse_commpoly("0", 2).is_zero());

    CHECK_THROWS_AS(parse_ncpoly("x3", 2), ParseError);
    CHECK_THROWS_AS(parse_ncpoly("", 2), ParseError);
    CHECK_THROWS_AS(parse_ncpoly("x1 +", 2), ParseError);

    // printing round trip on random samples
    Rng rng(15);
    for (int trial = 0; trial < 20; ++trial) {
        NCPoly r = random_ncpoly(rng, 3, 3, 5);
        CHECK(parse_ncpoly(to_string(r), 3) == r);
        CommPoly cf = random_commpoly(rng, 3, 3, 5);
        CHECK(parse_commpoly(to_string(cf), 3) == cf);
    }
}
