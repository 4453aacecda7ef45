#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncformal/quiver.hpp"
#include "ncformal/rng.hpp"
#include "ncformal/sampling.hpp"

using namespace ncformal;

TEST_CASE("path multiplication rules") {
    // v1 --a--> v2 with a loop at v2
    auto q = std::make_shared<Quiver>(2, std::vector<std::pair<int, int>>{{1, 2}, {2, 2}});
    auto a = PathAlgebraElement::arrow(q, 0);
    auto loop = PathAlgebraElement::arrow(q, 1);
    auto v1 = PathAlgebraElement::vertex(q, 1);
    auto v2 = PathAlgebraElement::vertex(q, 2);

    CHECK(path_mul(v2, a) == a);
    CHECK(path_mul(a, v1) == a);
    CHECK(path_mul(v1, a).is_zero());
    CHECK(path_mul(a, v2).is_zero());

    CHECK(path_mul(PathAlgebraElement::one(q), a) == a);
    CHECK(path_mul(a, PathAlgebraElement::one(q)) == a);

    // loop . a is the composable concatenation, a . loop is zero
    PathAlgebraElement la = path_mul(loop, a);
    REQUIRE(la.terms().size() == 1);
    CHECK(la.terms().begin()->first.arrow_ids == std::vector<int>{0, 1});
    CHECK(path_mul(a, loop).is_zero());

    // vertex idempotents are orthogonal
    CHECK(path_mul(v1, v1) == v1);
    CHECK(path_mul(v1, v2).is_zero());

    auto other = std::make_shared<Quiver>(1, std::vector<std::pair<int, int>>{});
    CHECK_THROWS_AS(path_mul(a, PathAlgebraElement::vertex(other, 1)), ContractError);
}

TEST_CASE("path multiplication is associative") {
    Rng rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        auto q = std::make_shared<Quiver>(random_quiver(rng, 3, 4));
        auto random_elem = [&] {
            PathAlgebraElement e = PathAlgebraElement::zero(q);
            int terms = rng.next_int(1, 3);
            for (int t = 0; t < terms; ++t) {
                if (q->arrow_count() > 0 && rng.next_bool())
                    e = e + PathAlgebraElement::arrow(q, rng.next_int(0, q->arrow_count() - 1)) *
                                random_rational(rng);
                else
                    e = e + PathAlgebraElement::vertex(q, rng.next_int(1, q->vertices)) *
                                random_rational(rng);
            }
            return e;
        };
        PathAlgebraElement x = random_elem(), y = random_elem(), z = random_elem();
        CHECK(path_mul(path_mul(x, y), z) == path_mul(x, path_mul(y, z)));
        CHECK(path_mul(PathAlgebraElement::one(q), x) == x);
        CHECK(path_mul(x, PathAlgebraElement::one(q)) == x);
    }
}

TEST_CASE("euler form") {
    Quiver point(1, {});
    CHECK(euler_form(point).evaluate(DimVector({3}), DimVector({2})) == 6);

    Quiver two_loops(1, {{1, 1}, {1, 1}});
    CHECK(euler_form(two_loops).evaluate(DimVector({2}), DimVector({2})) == -4);

    Quiver arrow(2, {{1, 2}});
    CHECK(euler_form(arrow).evaluate(DimVector({1, 0}), DimVector({0, 1})) == -1);
}

TEST_CASE("extended quiver shape") {
    Quiver two_loops(1, {{1, 1}, {1, 1}});
    ExtendedQuiver ext = extend_quiver(two_loops, 2);
    Quiver plain = ext.as_quiver();
    CHECK(plain.vertices == 2);
    CHECK(plain.arrow_count() == 4);  // 2 loops + 2 x-arrows

    Quiver q3(3, {{1, 2}, {2, 3}});
    CHECK(extend_quiver(q3, 1).as_quiver().arrow_count() == q3.arrow_count() + 3);
    CHECK(extend_quiver(q3, 4).as_quiver().arrow_count() == q3.arrow_count() + 12);

    // x-arrow ids point from v_0 to the right vertex
    ExtendedQuiver e3 = extend_quiver(q3, 2);
    Quiver p3 = e3.as_quiver();
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 2; ++j) {
            auto [s, t] = p3.arrows[static_cast<size_t>(e3.x_arrow_id(i, j))];
            CHECK(s == 1);
            CHECK(t == i + 1);
        }
}

TEST_CASE("extended euler form agrees with the block formula") {
    Quiver two_loops(1, {{1, 1}, {1, 1}});
    DimVector at({1, 2});
    CHECK(euler_block_formula(two_loops, 2, at, at) == -7);
    CHECK(euler_form_extended(two_loops, 2).evaluate(at, at) == -7);

    // a_0 = 0 reduces to the base form; beta = 0 gives a_0 b_0
    CHECK(euler_block_formula(two_loops, 2, DimVector({0, 2}), DimVector({0, 2})) ==
          euler_form(two_loops).evaluate(DimVector({2}), DimVector({2})));
    CHECK(euler_block_formula(two_loops, 2, DimVector({3, 0}), DimVector({1, 0})) == 3);

    Rng rng(52);
    for (int trial = 0; trial < 100; ++trial) {
        Quiver q = random_quiver(rng, 4, 6);
        int n = rng.next_int(1, 5);
        std::vector<int> a, b;
        for (int i = 0; i <= q.vertices; ++i) {
            a.push_back(rng.next_int(0, 4));
            b.push_back(rng.next_int(0, 4));
        }
        DimVector at2(a), bt2(b);
        CHECK(euler_block_formula(q, n, at2, bt2) ==
              euler_form_extended(q, n).evaluate(at2, bt2));
    }
}

TEST_CASE("representation space dimensions") {
    Quiver two_loops(1, {{1, 1}, {1, 1}});
    CHECK(rep_dim(two_loops, DimVector({3})) == 18);  // d n^2 with d=2, n=3
    CHECK(rep_dim(Quiver(2, {}), DimVector({1, 1})) == 0);
    CHECK(rep_dim(Quiver(2, {{1, 2}}), DimVector({1, 1})) == 1);

    CHECK(bundle_dim(2, two_loops, DimVector({2})) == 8);
    CHECK(bundle_dim(2, Quiver(2, {{1, 2}}), DimVector({1, 1})) == 3);
    CHECK_THROWS_AS(bundle_dim(3, two_loops, DimVector({2})), ContractError);

    for (int d = 1; d <= 3; ++d) {
        std::vector<std::pair<int, int>> loops(static_cast<size_t>(d), {1, 1});
        Quiver q(1, loops);
        for (int n = 1; n <= 4; ++n)
            CHECK(bundle_dim(n, q, DimVector({n})) == static_cast<long>(d) * n * n);
    }
}

TEST_CASE("dimension vector enumeration") {
    auto v22 = enumerate_dimvectors(2, 2);
    REQUIRE(v22.size() == 3);
    CHECK(v22[0] == DimVector({2, 0}));
    CHECK(v22[1] == DimVector({1, 1}));
    CHECK(v22[2] == DimVector({0, 2}));

    auto v15 = enumerate_dimvectors(1, 5);
    REQUIRE(v15.size() == 1);
    CHECK(v15[0] == DimVector({5}));

    CHECK(enumerate_dimvectors(3, 2).size() == 6);  // C(4,2)
    CHECK(enumerate_dimvectors(4, 3).size() == 20);  // C(6,3)
    CHECK(enumerate_dimvectors(2, 0).size() == 1);

    // no duplicates
    auto v43 = enumerate_dimvectors(4, 3);
    for (size_t i = 0; i < v43.size(); ++i)
        for (size_t j = i + 1; j < v43.size(); ++j) CHECK(!(v43[i] == v43[j]));
}

TEST_CASE("numerical condition of a localization") {
    // sigma: P_1 + ... + P_k -> P_0^n on the extended quiver, read on
    // (a_0, alpha): sum a_i = n a_0
    Quiver two_loops(1, {{1, 1}, {1, 1}});
    int n = 3;
    // extended quiver dimension vectors (a_0, a_1): e = (0,1), f = (n,0)
    std::vector<int> e = {0, 1}, f = {n, 0};
    CHECK(numerical_condition(e, f, DimVector({1, 3})));
    CHECK(!numerical_condition(e, f, DimVector({1, 2})));
    CHECK(numerical_condition(e, e, DimVector({7, 9})));
    CHECK(!numerical_condition({1, 0}, {0, 1}, DimVector({2, 1})));
    CHECK_THROWS_AS(numerical_condition({1}, {1, 2}, DimVector({1, 1})), ContractError);
}

TEST_CASE("localization data and point checks") {
    Quiver two_loops(1, {{1, 1}, {1, 1}});

    SUBCASE("n=1 scalar inverse") {
        LocalizationData data = localization_data(two_loops, 1);
        ExtendedRep rep;
        rep.dims = DimVector({1, 1});
        QMat one(1, 1), two(1, 1), half(1, 1);
        one.at(0, 0) = 1;
        two.at(0, 0) = 2;
        half.at(0, 0) = make_rational(1, 2);
        rep.arrow_matrices[data.extended.x_arrow_id(1, 1)] = one;
        rep.arrow_matrices[data.extended.y_arrow_id(1, 1)] = one;
        rep.arrow_matrices[0] = two;  // loop values are unconstrained
        rep.arrow_matrices[1] = two;
        CHECK(check_localization_point(data, rep));

        // x=2 needs y=1/2
        rep.arrow_matrices[data.extended.x_arrow_id(1, 1)] = two;
        CHECK(!check_localization_point(data, rep));
        rep.arrow_matrices[data.extended.y_arrow_id(1, 1)] = half;
        CHECK(check_localization_point(data, rep));
    }

    SUBCASE("rank-deficient stack fails") {
        LocalizationData data = localization_data(two_loops, 2);
        ExtendedRep rep;
        rep.dims = DimVector({1, 2});
        QMat z21(2, 1), z12(1, 2), loop(2, 2);
        rep.arrow_matrices[0] = loop;
        rep.arrow_matrices[1] = loop;
        rep.arrow_matrices[data.extended.x_arrow_id(1, 1)] = z21;
        rep.arrow_matrices[data.extended.x_arrow_id(1, 2)] = z21;
        rep.arrow_matrices[data.extended.y_arrow_id(1, 1)] = z12;
        rep.arrow_matrices[data.extended.y_arrow_id(1, 2)] = z12;
        CHECK(!check_localization_point(data, rep));
    }

    SUBCASE("relation shapes") {
        Quiver q(2, {{1, 2}});
        LocalizationData data = localization_data(q, 2);
        // k^2 entries of MN plus n^2 entries of NM
        CHECK(data.relations.size() == 4 + 4);
        CHECK(data.sigma_matrix.size() == 2);
        CHECK(data.sigma_matrix[0].size() == 2);
        CHECK(data.inverse_matrix.size() == 2);
        CHECK(data.inverse_matrix[0].size() == 2);
    }
}

TEST_CASE("path enumeration between projectives") {
    // v1 -a-> v2 -b-> v3 with a loop c at v2
    Quiver q(3, {{1, 2}, {2, 3}, {2, 2}});
    auto p13 = enumerate_paths(q, 1, 3, 4);
    // a then b, with 0, 1 or 2 turns of the loop in between
    REQUIRE(p13.size() == 3);
    CHECK(p13[0].arrow_ids == std::vector<int>{0, 1});
    CHECK(p13[1].arrow_ids == std::vector<int>{0, 2, 1});
    CHECK(p13[2].arrow_ids == std::vector<int>{0, 2, 2, 1});

    auto p11 = enumerate_paths(q, 1, 1, 5);
    REQUIRE(p11.size() == 1);  // only the trivial path
    CHECK(p11[0].arrow_ids.empty());

    CHECK(enumerate_paths(q, 3, 1, 6).empty());
    CHECK(enumerate_paths(q, 2, 2, 3).size() == 4);  // loop powers 0..3
}

TEST_CASE("quiver json round trip") {
    Quiver q(3, {{1, 2}, {2, 3}, {3, 3}});
    Quiver back = quiver_from_json_text(quiver_to_json_text(q));
    CHECK(back == q);
    CHECK_THROWS_AS(quiver_from_json_text("{"), ParseError);
    CHECK_THROWS_AS(quiver_from_json_text("{\"vertices\": 1, \"arrows\": [[1,5]]}"), ParseError);
}
