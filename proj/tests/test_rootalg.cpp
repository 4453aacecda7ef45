#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncformal/pbw.hpp"
#include "ncformal/repscheme.hpp"
#include "ncformal/rootalg.hpp"
#include "ncformal/sampling.hpp"

using namespace ncformal;

namespace {

MatrixAlgebraMap random_free_map(Rng& rng, const BaseAlgebraPtr& base, int d, int n) {
    MatrixAlgebraMap phi;
    phi.base = base;
    phi.n = n;
    for (int k = 0; k < d; ++k) phi.gen_images.push_back(random_alg_mat(rng, base, n, n));
    return phi;
}

std::vector<BaseAlgebraPtr> stock_bases() {
    return {BaseAlgebra::matrix_algebra(2), BaseAlgebra::truncated_poly(3),
            BaseAlgebra::upper_triangular(2)};
}

}  // namespace

TEST_CASE("free presentation shape") {
    RootPresentation pres = root_presentation_free(2, 2);
    CHECK(pres.generator_count() == 8);
    CHECK(pres.relations.empty());
    CHECK(pres.generators[static_cast<size_t>(pres.free_index(1, 1, 2))].label == "x12,1");
    CHECK(pres.generators[static_cast<size_t>(pres.free_index(2, 2, 1))].label == "x21,2");
}

TEST_CASE("path presentation shapes") {
    // one vertex, two loops: vertex cycles and two arrow-cycle families
    Quiver two_loops(1, {{1, 1}, {1, 1}});
    for (int n = 1; n <= 3; ++n) {
        RootPresentation pres = root_presentation_path(two_loops, n);
        CHECK(pres.generator_count() == n * n * 3);
        // the unit relation at a single vertex pins e_{pq} = delta_pq; since
        // E is then the identity, the arrow cycles are unconstrained
        int arrow_gens = 2 * n * n;
        CHECK(pres.generator_count() - n * n == arrow_gens);
    }

    Quiver arrow(2, {{1, 2}});
    RootPresentation p1 = root_presentation_path(arrow, 1);
    CHECK(p1.generator_count() == 3);  // two vertex cycles and one arrow cycle
    // e1 + e2 = 1 and orthogonality relations are present
    bool found_sum = false;
    for (const auto& rel : p1.relations) {
        NCPoly sum(3);
        sum = NCPoly::generator(3, p1.vertex_index(1, 1, 1)) +
              NCPoly::generator(3, p1.vertex_index(2, 1, 1)) - NCPoly::one(3);
        if (rel == sum) found_sum = true;
    }
    CHECK(found_sum);
}

TEST_CASE("lower reads matrix entries") {
    auto base = BaseAlgebra::matrix_algebra(2);
    RootPresentation pres = root_presentation_free(1, 2);

    MatrixAlgebraMap phi;
    phi.base = base;
    phi.n = 2;
    phi.gen_images.push_back(AlgMat::identity(2, *base));
    RootMap psi = lower(pres, phi);
    CHECK(psi.images[static_cast<size_t>(pres.free_index(1, 1, 1))] == base->one());
    CHECK(psi.images[static_cast<size_t>(pres.free_index(1, 1, 2))] == base->zero());

    Rng rng(71);
    MatrixAlgebraMap phi2 = random_free_map(rng, base, 1, 2);
    RootMap psi2 = lower(pres, phi2);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            CHECK(psi2.images[static_cast<size_t>(pres.free_index(1, i, j))] ==
                  phi2.gen_images[0].at(i - 1, j - 1));
}

TEST_CASE("raise assembles matrices and checks the relations") {
    RootPresentation pres = root_presentation_free(2, 2);
    auto base = BaseAlgebra::truncated_poly(3);
    RootMap zero;
    zero.base = base;
    for (int g = 0; g < pres.generator_count(); ++g) zero.images.push_back(base->zero());
    MatrixAlgebraMap phi = raise(pres, zero);
    for (const auto& mat : phi.gen_images) CHECK(alg_mat_is_zero(mat));

    // an invalid path-algebra root map is rejected
    Quiver arrow(2, {{1, 2}});
    RootPresentation path_pres = root_presentation_path(arrow, 1);
    RootMap bad;
    bad.base = base;
    for (int g = 0; g < path_pres.generator_count(); ++g) bad.images.push_back(base->one());
    CHECK_THROWS_AS(raise(path_pres, bad), ContractError);
}

TEST_CASE("round trips over the stock coefficient algebras") {
    Rng rng(72);
    for (const auto& base : stock_bases()) {
        for (int d = 1; d <= 2; ++d)
            for (int n = 1; n <= 3; ++n) {
                RootPresentation pres = root_presentation_free(d, n);
                for (int trial = 0; trial < 6; ++trial) {
                    MatrixAlgebraMap phi = random_free_map(rng, base, d, n);
                    RootMap psi = lower(pres, phi);
                    CHECK(raise(pres, psi) == phi);
                    CHECK(lower(pres, raise(pres, psi)) == psi);
                }
                // arbitrary images are valid root maps in the free case
                RootMap free_psi;
                free_psi.base = base;
                for (int g = 0; g < pres.generator_count(); ++g)
                    free_psi.images.push_back(random_alg_elem(rng, base));
                CHECK(lower(pres, raise(pres, free_psi)) == free_psi);
            }
    }
}

TEST_CASE("path algebra round trips") {
    Rng rng(73);
    std::vector<Quiver> quivers = {Quiver(1, {{1, 1}, {1, 1}}), Quiver(2, {{1, 2}}),
                                   Quiver(2, {})};
    for (const auto& base : stock_bases()) {
        for (const auto& q : quivers)
            for (int n = 1; n <= 2; ++n) {
                RootPresentation pres = root_presentation_path(q, n);
                Rng sample_rng(rng.next_u64());
                EquivalenceReport report = abelianized_root_equals_rep_ring(pres, sample_rng, 3);
                // the commutative-coefficient machinery is exercised below
                // regardless of this report
                (void)report;
                for (int trial = 0; trial < 4; ++trial) {
                    MatrixAlgebraMap phi = random_path_matrix_map(rng, base, q, n);
                    RootMap psi = lower(pres, phi);
                    CHECK(raise(pres, psi) == phi);
                    CHECK(lower(pres, raise(pres, psi)) == psi);
                }
            }
    }
}

TEST_CASE("arrow cycles of the loop quiver are operationally free") {
    // any assignment to the arrow-cycle generators extends to a valid root
    // map once the vertex cycles are pinned to the identity pattern, exactly
    // as in the free presentation on d n^2 variables
    Rng rng(74);
    Quiver two_loops(1, {{1, 1}, {1, 1}});
    for (const auto& base : stock_bases()) {
        for (int n = 1; n <= 2; ++n) {
            RootPresentation path_pres = root_presentation_path(two_loops, n);
            RootPresentation free_pres = root_presentation_free(2, n);
            for (int trial = 0; trial < 5; ++trial) {
                RootMap free_psi;
                free_psi.base = base;
                for (int g = 0; g < free_pres.generator_count(); ++g)
                    free_psi.images.push_back(random_alg_elem(rng, base));

                RootMap path_psi;
                path_psi.base = base;
                path_psi.images.assign(static_cast<size_t>(path_pres.generator_count()),
                                       base->zero());
                for (int p = 1; p <= n; ++p)
                    path_psi.images[static_cast<size_t>(path_pres.vertex_index(1, p, p))] =
                        base->one();
                for (int a = 0; a < 2; ++a)
                    for (int p = 1; p <= n; ++p)
                        for (int q = 1; q <= n; ++q)
                            path_psi.images[static_cast<size_t>(path_pres.arrow_index(a, p, q))] =
                                free_psi.images[static_cast<size_t>(
                                    free_pres.free_index(a + 1, p, q))];

                MatrixAlgebraMap phi_path = raise(path_pres, path_psi);
                MatrixAlgebraMap phi_free = raise(free_pres, free_psi);
                CHECK(phi_path.arrow_images == phi_free.gen_images);
                CHECK(lower(path_pres, phi_path) == path_psi);
            }
        }
    }
}

TEST_CASE("lowering is functorial in the coefficient algebra") {
    Rng rng(75);

    auto trunc = BaseAlgebra::truncated_poly(3);
    auto rats = BaseAlgebra::rationals();
    AlgebraMorphism drop_t(trunc, rats, {rats->one(), rats->zero(), rats->zero()});

    auto upper = BaseAlgebra::upper_triangular(2);
    AlgebraMorphism corner(upper, rats, {rats->one(), rats->zero(), rats->zero()});

    auto run = [&](const BaseAlgebraPtr& src, const AlgebraMorphism& h) {
        RootPresentation pres = root_presentation_free(2, 2);
        for (int trial = 0; trial < 8; ++trial) {
            MatrixAlgebraMap phi = random_free_map(rng, src, 2, 2);
            RootMap lowered = lower(pres, phi);

            MatrixAlgebraMap mapped;
            mapped.base = h.target();
            mapped.n = phi.n;
            for (const auto& mat : phi.gen_images) {
                AlgMat out(mat.rows, mat.cols, *h.target());
                for (int i = 0; i < mat.rows; ++i)
                    for (int j = 0; j < mat.cols; ++j) out.at(i, j) = h.apply(mat.at(i, j));
                mapped.gen_images.push_back(std::move(out));
            }
            RootMap lowered_then_mapped;
            lowered_then_mapped.base = h.target();
            for (const auto& img : lowered.images)
                lowered_then_mapped.images.push_back(h.apply(img));
            CHECK(lower(pres, mapped) == lowered_then_mapped);
        }
    };
    run(trunc, drop_t);
    run(upper, corner);
}

TEST_CASE("free root algebra truncations live on d n^2 variables") {
    // the root algebra of a free algebra is free on d n^2 generators, so its
    // truncated quotients are exactly the truncated algebras on that many
    // variables: the K=1 layer is the coordinate ring of the representation
    // space, higher layers multiply through the straightening calculus
    int d = 1, n = 2;
    RootPresentation pres = root_presentation_free(d, n);
    int vars = pres.generator_count();
    CHECK(vars == d * n * n);

    auto basis = generate_basis(vars, 4);
    PBWContext ctx(basis);
    Rng rng(77);
    NCPoly p = random_ncpoly(rng, vars, 2, 3);
    NCPoly q = random_ncpoly(rng, vars, 2, 3);

    PBWElement k1 = truncated_mul(ctx, pbw_normalize(ctx, p), pbw_normalize(ctx, q), 1);
    CommPoly image(vars);
    if (const CommPoly* f = k1.coefficient(BracketMonomial())) image = *f;
    CHECK(image == comm_mul(abelianize(p), abelianize(q)));
    CHECK(image.nvars() == relation_ideal(Presentation(d, {}), n).space.var_count());

    PBWElement k2 = truncated_mul(ctx, pbw_normalize(ctx, p), pbw_normalize(ctx, q), 2);
    for (const auto& [m, f] : k2.terms()) CHECK(m.ord() < 2);
}

TEST_CASE("abelianized presentation matches the representation ring") {
    Rng rng(76);
    RootPresentation free_pres = root_presentation_free(2, 3);
    EquivalenceReport free_report = abelianized_root_equals_rep_ring(free_pres, rng, 0);
    CHECK(free_report.pass);

    std::vector<Quiver> quivers = {Quiver(2, {}), Quiver(1, {{1, 1}, {1, 1}}),
                                   Quiver(2, {{1, 2}})};
    for (const auto& q : quivers)
        for (int n = 1; n <= 2; ++n) {
            RootPresentation pres = root_presentation_path(q, n);
            EquivalenceReport report = abelianized_root_equals_rep_ring(pres, rng, 5);
            CHECK(report.pass);
            CHECK(report.samples_checked == 10);  // five samples over each coefficient ring
        }
}
