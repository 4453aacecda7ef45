#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncformal/hallbasis.hpp"
#include "ncformal/rng.hpp"
#include "ncformal/sampling.hpp"

using namespace ncformal;

TEST_CASE("layers for d=2 up to weight 4") {
    auto basis = generate_basis(2, 4);

    REQUIRE(basis->layer_size(1) == 2);
    CHECK(basis->pretty(basis->layer(1)[0]) == "x1");
    CHECK(basis->pretty(basis->layer(1)[1]) == "x2");

    REQUIRE(basis->layer_size(2) == 1);
    CHECK(basis->pretty(basis->layer(2)[0]) == "[x2,x1]");

    REQUIRE(basis->layer_size(3) == 2);
    CHECK(basis->pretty(basis->layer(3)[0]) == "[[x2,x1],x1]");
    CHECK(basis->pretty(basis->layer(3)[1]) == "[[x2,x1],x2]");

    CHECK(basis->layer_size(4) == 3);
    CHECK(basis->pretty(basis->layer(4)[0]) == "[[[x2,x1],x1],x1]");
    CHECK(basis->pretty(basis->layer(4)[1]) == "[[[x2,x1],x1],x2]");
    CHECK(basis->pretty(basis->layer(4)[2]) == "[[[x2,x1],x2],x2]");

    // numbering of the bracket elements starts at b_1
    CHECK(basis->bracket_number(basis->layer(2)[0]) == 1);
    CHECK(basis->bracket_number(basis->layer(3)[0]) == 2);
    CHECK(basis->bracket_number(basis->layer(1)[0]) == 0);

    CHECK(basis->sexpr(basis->layer(3)[1]) == "((x2 x1) x2)");
}

TEST_CASE("order is total and layered") {
    auto basis = generate_basis(3, 4);
    for (int idx = 1; idx < basis->size(); ++idx) {
        const HallElement& prev = basis->element(idx - 1);
        const HallElement& cur = basis->element(idx);
        CHECK(prev.weight <= cur.weight);
        CHECK(cur.index == idx);
        CHECK(cur.ord == cur.weight - 1);
        if (prev.weight == cur.weight && cur.weight >= 2) {
            // within a layer: right components nondecreasing, ties by left
            CHECK(prev.right <= cur.right);
            if (prev.right == cur.right) CHECK(prev.left < cur.left);
        }
    }
    // the defining constraint of each bracket element
    for (int idx = 0; idx < basis->size(); ++idx) {
        const HallElement& e = basis->element(idx);
        if (e.is_leaf()) continue;
        CHECK(e.right < e.left);
        const HallElement& left = basis->element(e.left);
        if (!left.is_leaf()) CHECK(left.right <= e.right);
        CHECK(e.weight == left.weight + basis->element(e.right).weight);
    }
}

TEST_CASE("word expansions") {
    auto basis = generate_basis(2, 3);
    CHECK(basis->expand_to_words(0) == NCPoly::generator(2, 0));
    CHECK(basis->expand_to_words(2) ==
          nc_commutator(NCPoly::generator(2, 1), NCPoly::generator(2, 0)));
    // [[x2,x1],x1] = x2x1x1 - 2x1x2x1 + x1x1x2
    NCPoly expected(2);
    expected.add_term({1, 0, 0}, Rational(1));
    expected.add_term({0, 1, 0}, Rational(-2));
    expected.add_term({0, 0, 1}, Rational(1));
    CHECK(basis->expand_to_words(3) == expected);
}

TEST_CASE("layer sizes match the brute-force rank oracle") {
    CHECK(lie_rank(2, 2) == 1);
    CHECK(lie_rank(2, 3) == 2);
    CHECK(lie_rank(2, 5) == 6);

    int expected_d2[] = {2, 1, 2, 3, 6, 9};
    auto basis2 = generate_basis(2, 6);
    for (int k = 1; k <= 6; ++k) {
        CHECK(basis2->layer_size(k) == expected_d2[k - 1]);
        CHECK(basis2->layer_size(k) == lie_rank(2, k));
    }
    auto basis3 = generate_basis(3, 6);
    for (int k = 1; k <= 6; ++k) CHECK(basis3->layer_size(k) == lie_rank(3, k));
}

TEST_CASE("expansions of each layer are linearly independent") {
    for (int d = 2; d <= 3; ++d) {
        auto basis = generate_basis(d, 6);
        for (int k = 1; k <= 6; ++k) {
            EchelonSolver ech(false);
            for (int idx : basis->layer(k)) {
                const NCPoly& p = basis->expand_to_words(idx);
                SparseVec v;
                long key = 0;
                for (const auto& [w, c] : p.terms()) {
                    key = 0;
                    for (int g : w) key = key * d + g;
                    v[key] = c;
                }
                CHECK(ech.insert(v));
            }
        }
    }
}

TEST_CASE("bracket normalization") {
    auto basis = generate_basis(2, 4);
    LieElement x1, x2, b;
    x1.add(0, Rational(1));
    x2.add(1, Rational(1));
    b.add(2, Rational(1));  // [x2,x1]

    // antisymmetry down to the basis element
    LieElement r = bracket_normalize(*basis, x1, x2);
    LieElement expected;
    expected.add(2, Rational(-1));
    CHECK(r == expected);

    // already basic
    LieElement basic = bracket_normalize(*basis, b, x1);
    LieElement expected2;
    expected2.add(3, Rational(1));
    CHECK(basic == expected2);

    // solved through the word expansion
    LieElement swapped = bracket_normalize(*basis, x1, b);
    LieElement expected3;
    expected3.add(3, Rational(-1));
    CHECK(swapped == expected3);

    CHECK_THROWS_AS(bracket_normalize(*basis, b,
                                      bracket_normalize(*basis, b, bracket_normalize(*basis, b, x1))),
                    ContractError);
}

TEST_CASE("bracket normalization is a Lie bracket") {
    Rng rng(21);
    for (int d = 2; d <= 3; ++d) {
        auto basis = generate_basis(d, 6);
        auto random_elem = [&](int max_weight) {
            LieElement e;
            int terms = rng.next_int(1, 3);
            for (int t = 0; t < terms; ++t) {
                int idx = rng.next_int(0, basis->size() - 1);
                if (basis->element(idx).weight > max_weight) continue;
                e.add(idx, random_rational(rng));
            }
            return e;
        };
        for (int trial = 0; trial < 15; ++trial) {
            LieElement a = random_elem(2);
            LieElement b = random_elem(2);
            LieElement c = random_elem(2);

            // agreement with the word-level commutator
            LieElement ab = bracket_normalize(*basis, a, b);
            CHECK(expand_to_words(*basis, ab) ==
                  nc_commutator(expand_to_words(*basis, a), expand_to_words(*basis, b)));

            // antisymmetry and bilinearity
            LieElement ba = bracket_normalize(*basis, b, a);
            for (const auto& [idx, coeff] : ab.terms) {
                auto it = ba.terms.find(idx);
                REQUIRE(it != ba.terms.end());
                CHECK(it->second == -coeff);
            }

            // Jacobi through expansions
            NCPoly jacobi =
                expand_to_words(*basis, bracket_normalize(*basis, a, bracket_normalize(*basis, b, c))) +
                expand_to_words(*basis, bracket_normalize(*basis, b, bracket_normalize(*basis, c, a))) +
                expand_to_words(*basis, bracket_normalize(*basis, c, bracket_normalize(*basis, a, b)));
            CHECK(jacobi.is_zero());
        }
    }
}
