#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncformal/strata.hpp"
#include "ncformal/rng.hpp"
#include "ncformal/sampling.hpp"

using namespace ncformal;

namespace {

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("partitions") {
    auto p2 = partitions(2);
    REQUIRE(p2.size() == 2);
    CHECK(p2[0].parts == std::vector<int>{2});
    CHECK(p2[1].parts == std::vector<int>{1, 1});

    CHECK(partitions(1).size() == 1);
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(5).size() == 7);
    CHECK(partitions(6).size() == 11);

    for (const auto& p : partitions(6)) {
        CHECK(p.total() == 6);
        for (size_t i = 1; i < p.parts.size(); ++i) CHECK(p.parts[i] <= p.parts[i - 1]);
    }
}

TEST_CASE("substrata enumeration") {
    Quiver two_loops(1, {{1, 1}, {1, 1}});
    auto sub = enumerate_substrata(2, 2, two_loops);
    REQUIRE(sub.size() == 2);
    CHECK(sub[0].lambda.parts == std::vector<int>{2});
    CHECK(sub[0].dim_vectors.size() == 1);
    CHECK(sub[0].dim_vectors[0] == DimVector({2}));
    CHECK(sub[1].lambda.parts == std::vector<int>{1, 1});
    CHECK(sub[1].dim_vectors.size() == 2);

    // m=1: one substratum per dimension vector
    Quiver arrow(2, {{1, 2}});
    CHECK(enumerate_substrata(1, 3, arrow).size() == enumerate_dimvectors(2, 3).size());

    // two vertices, no arrows: 3 choices for lambda=(2), multiset pairs from
    // 3 vectors for lambda=(1,1)
    Quiver discrete(2, {});
    auto sub2 = enumerate_substrata(2, 2, discrete);
    int count_single = 0, count_pair = 0;
    for (const auto& t : sub2) {
        if (t.lambda.size() == 1) ++count_single;
        if (t.lambda.size() == 2) ++count_pair;
    }
    CHECK(count_single == 3);
    CHECK(count_pair == 6);
    CHECK(sub2.size() == 9);

    // multiset counting formula over equal-part groups
    Rng rng(81);
    for (int trial = 0; trial < 10; ++trial) {
        Quiver q = random_quiver(rng, 3, 3);
        int n = rng.next_int(1, 3);
        int m = rng.next_int(1, 4);
        long v = static_cast<long>(enumerate_dimvectors(q.vertices, n).size());
        long expected = 0;
        for (const auto& lambda : partitions(m)) {
            long ways = 1;
            int i = 0;
            while (i < lambda.size()) {
                int j = i;
                while (j < lambda.size() && lambda.parts[j] == lambda.parts[i]) ++j;
                ways *= binomial(v + (j - i) - 1, j - i);
                i = j;
            }
            expected += ways;
        }
        CHECK(static_cast<long>(enumerate_substrata(m, n, q).size()) == expected);
    }
}

TEST_CASE("substrata dimensions") {
    Quiver two_loops(1, {{1, 1}, {1, 1}});
    SemisimpleType single;
    single.lambda = Partition({1});
    single.dim_vectors = {DimVector({2})};
    CHECK(stratum_dimension(single, 2, two_loops) == 8);

    SemisimpleType pair;
    pair.lambda = Partition({1, 1});
    pair.dim_vectors = {DimVector({2}), DimVector({2})};
    CHECK(stratum_dimension(pair, 2, two_loops) == 16);

    Quiver discrete(3, {});
    SemisimpleType conc;
    conc.lambda = Partition({2});
    conc.dim_vectors = {DimVector({2, 1, 0})};
    CHECK(stratum_dimension(conc, 3, discrete) == 9 - (4 + 1 + 0));
}

TEST_CASE("tilde representation construction") {
    Quiver two_loops(1, {{1, 1}, {1, 1}});
    Rng rng(82);
    QuiverRep s = random_quiver_rep(rng, two_loops, DimVector({2}));
    TildeRep t = build_tilde_rep(s, two_loops, 2);
    REQUIRE(t.x_matrices.size() == 1);
    REQUIRE(t.x_matrices[0].size() == 2);
    CHECK(t.x_matrices[0][0].at(0, 0) == 1);
    CHECK(t.x_matrices[0][0].at(1, 0) == 0);
    CHECK(t.x_matrices[0][1].at(0, 0) == 0);
    CHECK(t.x_matrices[0][1].at(1, 0) == 1);

    // offsets across two vertices
    Quiver arrow(2, {{1, 2}});
    QuiverRep s2 = random_quiver_rep(rng, arrow, DimVector({1, 1}));
    TildeRep t2 = build_tilde_rep(s2, arrow, 2);
    CHECK(t2.x_matrices[0][0].at(0, 0) == 1);
    CHECK(t2.x_matrices[0][1].at(0, 0) == 0);
    CHECK(t2.x_matrices[1][0].at(0, 0) == 0);
    CHECK(t2.x_matrices[1][1].at(0, 0) == 1);

    // zero-dimensional vertex gets zero maps
    QuiverRep s3 = random_quiver_rep(rng, arrow, DimVector({2, 0}));
    TildeRep t3 = build_tilde_rep(s3, arrow, 2);
    CHECK(t3.x_matrices[1].size() == 2);
    CHECK(t3.x_matrices[1][0].rows == 0);

    CHECK_THROWS_AS(build_tilde_rep(s3, arrow, 3), ContractError);
}

TEST_CASE("generation from the added vertex") {
    Quiver two_loops(1, {{1, 1}, {1, 1}});
    Rng rng(83);
    QuiverRep s = random_quiver_rep(rng, two_loops, DimVector({3}));
    TildeRep t = build_tilde_rep(s, two_loops, 3);
    CHECK(is_generated_from_v0(t));

    // all x-arrows zero: nothing is generated
    TildeRep dead = t;
    for (auto& cols : dead.x_matrices)
        for (auto& col : cols) col = QMat(col.rows, 1);
    CHECK(!is_generated_from_v0(dead));

    // one missing basis direction that the loops cannot recover
    TildeRep partial = t;
    partial.x_matrices[0][2] = QMat(3, 1);
    partial.base_matrices[0] = QMat(3, 3);
    partial.base_matrices[1] = QMat(3, 3);
    CHECK(!is_generated_from_v0(partial));

    // the loops can regenerate a dropped direction
    TildeRep recovered = partial;
    recovered.base_matrices[0] = QMat::identity(3);
    QMat shift(3, 3);
    shift.at(2, 1) = 1;
    recovered.base_matrices[1] = shift;
    CHECK(is_generated_from_v0(recovered));

    // empty representation is generated vacuously
    Quiver point(1, {});
    QuiverRep empty_rep;
    empty_rep.dims = DimVector({0});
    TildeRep empty_tilde = build_tilde_rep(empty_rep, point, 0);
    CHECK(is_generated_from_v0(empty_tilde));
}

TEST_CASE("theta pairing and stability") {
    Theta theta{{-2, 1}};
    CHECK(theta_pairing(theta, DimVector({1, 2})) == 0);
    CHECK(theta_pairing(theta, DimVector({0, 0})) == 0);
    CHECK(theta_pairing(theta, DimVector({0, 2})) == 2);
    CHECK_THROWS_AS(theta_pairing(theta, DimVector({1, 2, 3})), ContractError);

    Quiver two_loops(1, {{1, 1}, {1, 1}});
    Rng rng(84);
    for (int trial = 0; trial < 20; ++trial) {
        int n = rng.next_int(1, 4);
        QuiverRep s = random_quiver_rep(rng, two_loops, DimVector({n}));
        TildeRep t = build_tilde_rep(s, two_loops, n);
        Theta th = default_theta(t);
        CHECK(theta_pairing(th, DimVector({1, n})) == 0);
        CHECK(check_theta_stability(t, th));
    }

    // destabilized when the x-arrows vanish
    QuiverRep s = random_quiver_rep(rng, two_loops, DimVector({2}));
    TildeRep t = build_tilde_rep(s, two_loops, 2);
    for (auto& cols : t.x_matrices)
        for (auto& col : cols) col = QMat(col.rows, 1);
    CHECK(!check_theta_stability(t, default_theta(t)));

    // unsupported theta shapes are contract violations
    CHECK_THROWS_AS(check_theta_stability(t, Theta{{-2, -1}}), ContractError);
    CHECK_THROWS_AS(check_theta_stability(t, Theta{{-1, 1}}), ContractError);
}

TEST_CASE("stability across random quivers") {
    Rng rng(85);
    for (int trial = 0; trial < 60; ++trial) {
        Quiver q = random_quiver(rng, 3, 4);
        int n = rng.next_int(1, 4);
        DimVector alpha = random_dimvector(rng, q.vertices, n);
        QuiverRep s = random_quiver_rep(rng, q, alpha);
        TildeRep t = build_tilde_rep(s, q, n);
        CHECK(check_theta_stability(t, default_theta(t)));
    }
}

TEST_CASE("local quiver settings") {
    Quiver two_loops(1, {{1, 1}, {1, 1}});

    SemisimpleType single;
    single.lambda = Partition({1});
    single.dim_vectors = {DimVector({2})};
    LocalQuiverSetting s1 = local_quiver(single, 2, two_loops);
    CHECK(s1.gamma.vertices == 1);
    CHECK(s1.arrow_counts[0][0] == 8);
    CHECK(s1.gamma.arrow_count() == 8);
    CHECK(s1.multiplicities == DimVector({1}));
    CHECK(s1.ambient_dim == 8);

    SemisimpleType pair;
    pair.lambda = Partition({1, 1});
    pair.dim_vectors = {DimVector({2}), DimVector({2})};
    LocalQuiverSetting s2 = local_quiver(pair, 2, two_loops);
    CHECK(s2.gamma.vertices == 2);
    CHECK(s2.arrow_counts[0][0] == 8);
    CHECK(s2.arrow_counts[1][1] == 8);
    CHECK(s2.arrow_counts[0][1] == 7);
    CHECK(s2.arrow_counts[1][0] == 7);

    // loop count equals the free-algebra generator count d n^2
    for (int d = 1; d <= 3; ++d) {
        std::vector<std::pair<int, int>> loops(static_cast<size_t>(d), {1, 1});
        Quiver q(1, loops);
        for (int n = 1; n <= 4; ++n) {
            SemisimpleType t;
            t.lambda = Partition({1});
            t.dim_vectors = {DimVector({n})};
            LocalQuiverSetting s = local_quiver(t, n, q);
            CHECK(s.arrow_counts[0][0] == static_cast<long>(d) * n * n);
        }
    }

    // multiplicity lambda=(m): one vertex, gamma=(m)
    SemisimpleType conc;
    conc.lambda = Partition({3});
    conc.dim_vectors = {DimVector({2})};
    LocalQuiverSetting s3 = local_quiver(conc, 2, two_loops);
    CHECK(s3.gamma.vertices == 1);
    CHECK(s3.multiplicities == DimVector({3}));
    CHECK(s3.ambient_dim == 9 * s3.arrow_counts[0][0]);

    // an empty substratum signals through the negative-count error
    Quiver discrete(2, {});
    SemisimpleType impossible;
    impossible.lambda = Partition({1, 1});
    impossible.dim_vectors = {DimVector({2, 0}), DimVector({2, 0})};
    CHECK_THROWS_AS(local_quiver(impossible, 2, discrete), ContractError);
}

TEST_CASE("fiber setting report") {
    Quiver two_loops(1, {{1, 1}, {1, 1}});
    SemisimpleType pair;
    pair.lambda = Partition({1, 1});
    pair.dim_vectors = {DimVector({2}), DimVector({2})};
    FiberReport report = fiber_setting_report(pair, 2, two_loops);
    CHECK(report.setting.gamma.vertices == 2);
    CHECK(report.setting.ambient_dim ==
          rep_dim(report.setting.gamma, report.setting.multiplicities));
    CHECK(report.theta.weights == std::vector<int>{-2, 1});
    CHECK(report.stratum_dim == 16);

    SemisimpleType ones;
    ones.lambda = Partition({1, 1, 1});
    ones.dim_vectors = {DimVector({2}), DimVector({2}), DimVector({2})};
    FiberReport r2 = fiber_setting_report(ones, 2, two_loops);
    CHECK(r2.setting.multiplicities == DimVector({1, 1, 1}));
}

TEST_CASE("tilde representations invert the localization matrix") {
    // the x-arrows of a tilde representation stack to a permutation-like
    // matrix; transposed columns provide the inverse arrows
    Rng rng(87);
    std::vector<Quiver> quivers = {Quiver(1, {{1, 1}, {1, 1}}), Quiver(2, {{1, 2}})};
    for (const Quiver& q : quivers) {
        int n = 3;
        DimVector alpha = random_dimvector(rng, q.vertices, n);
        QuiverRep s = random_quiver_rep(rng, q, alpha);
        TildeRep t = build_tilde_rep(s, q, n);

        LocalizationData data = localization_data(q, n);
        ExtendedRep rep;
        std::vector<int> dims{1};
        dims.insert(dims.end(), alpha.components.begin(), alpha.components.end());
        rep.dims = DimVector(dims);
        for (int a = 0; a < q.arrow_count(); ++a)
            rep.arrow_matrices[a] = s.matrices[static_cast<size_t>(a)];
        for (int i = 1; i <= q.vertices; ++i)
            for (int j = 1; j <= n; ++j) {
                const QMat& col = t.x_matrices[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
                QMat row(1, col.rows);
                for (int r = 0; r < col.rows; ++r) row.at(0, r) = col.at(r, 0);
                rep.arrow_matrices[data.extended.x_arrow_id(i, j)] = col;
                rep.arrow_matrices[data.extended.y_arrow_id(i, j)] = row;
            }
        CHECK(check_localization_point(data, rep));
    }
}

TEST_CASE("simples attached to a type must be distinct points") {
    Quiver two_loops(1, {{1, 1}, {1, 1}});
    Rng rng(86);
    QuiverRep s = random_quiver_rep(rng, two_loops, DimVector({2}));

    SemisimpleType good;
    good.lambda = Partition({1, 1});
    good.dim_vectors = {DimVector({2}), DimVector({2})};
    good.simples = {s, random_quiver_rep(rng, two_loops, DimVector({2}))};
    CHECK(stratum_dimension(good, 2, two_loops) == 16);

    SemisimpleType repeated = good;
    repeated.simples = {s, s};
    CHECK_THROWS_AS(stratum_dimension(repeated, 2, two_loops), ContractError);
}
