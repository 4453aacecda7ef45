#include "ncformal/rootalg.hpp"

#include <json.hpp>

#include "ncformal/sampling.hpp"

namespace ncformal {

int RootPresentation::free_index(int k, int i, int j) const {
    if (kind != Kind::Free) throw ContractError("free generator lookup on path presentation");
    if (k < 1 || k > d || i < 1 || i > n || j < 1 || j > n)
        throw ContractError("generator label outside range");
    return ((k - 1) * n + (i - 1)) * n + (j - 1);
}

int RootPresentation::vertex_index(int i, int p, int q) const {
    if (kind != Kind::PathAlgebra) throw ContractError("vertex cycle lookup on free presentation");
    if (i < 1 || i > quiver.vertices || p < 1 || p > n || q < 1 || q > n)
        throw ContractError("generator label outside range");
    return ((i - 1) * n + (p - 1)) * n + (q - 1);
}

int RootPresentation::arrow_index(int a, int p, int q) const {
    if (kind != Kind::PathAlgebra) throw ContractError("arrow cycle lookup on free presentation");
    if (a < 0 || a >= quiver.arrow_count() || p < 1 || p > n || q < 1 || q > n)
        throw ContractError("generator label outside range");
    return quiver.vertices * n * n + (a * n + (p - 1)) * n + (q - 1);
}

RootPresentation root_presentation_free(int d, int n) {
    if (d < 0 || n < 1) throw ContractError("free presentation needs d >= 0, n >= 1");
    RootPresentation pres;
    pres.kind = RootPresentation::Kind::Free;
    pres.d = d;
    pres.n = n;
    for (int k = 1; k <= d; ++k)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                RootPresentation::Generator g;
                g.type = RootPresentation::Generator::Type::FreeEntry;
                g.label = "x" + std::to_string(i) + std::to_string(j) + "," + std::to_string(k);
                g.k = k;
                g.p = i;
                g.q = j;
                pres.generators.push_back(std::move(g));
            }
    return pres;
}

RootPresentation root_presentation_path(const Quiver& q, int n) {
    if (n < 1) throw ContractError("path presentation needs n >= 1");
    RootPresentation pres;
    pres.kind = RootPresentation::Kind::PathAlgebra;
    pres.quiver = q;
    pres.n = n;
    int k = q.vertices;

    for (int i = 1; i <= k; ++i)
        for (int p = 1; p <= n; ++p)
            for (int qq = 1; qq <= n; ++qq) {
                RootPresentation::Generator g;
                g.type = RootPresentation::Generator::Type::VertexCycle;
                g.label = "e" + std::to_string(i) + "_" + std::to_string(p) + std::to_string(qq);
                g.vertex = i;
                g.p = p;
                g.q = qq;
                pres.generators.push_back(std::move(g));
            }
    for (int a = 0; a < q.arrow_count(); ++a)
        for (int p = 1; p <= n; ++p)
            for (int qq = 1; qq <= n; ++qq) {
                RootPresentation::Generator g;
                g.type = RootPresentation::Generator::Type::ArrowCycle;
                g.label = "c" + std::to_string(a + 1) + "_" + std::to_string(p) + std::to_string(qq);
                g.arrow = a;
                g.p = p;
                g.q = qq;
                pres.generators.push_back(std::move(g));
            }

    int m = pres.generator_count();
    auto e_gen = [&](int i, int p, int qq) { return NCPoly::generator(m, pres.vertex_index(i, p, qq)); };
    auto c_gen = [&](int a, int p, int qq) { return NCPoly::generator(m, pres.arrow_index(a, p, qq)); };

    // E^(i) E^(j) = delta_ij E^(i)
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            for (int p = 1; p <= n; ++p)
                for (int qq = 1; qq <= n; ++qq) {
                    NCPoly rel(m);
                    for (int r = 1; r <= n; ++r)
                        rel = rel + nc_mul(e_gen(i, p, r), e_gen(j, r, qq));
                    if (i == j) rel = rel - e_gen(i, p, qq);
                    if (!rel.is_zero()) pres.relations.push_back(std::move(rel));
                }
    // sum_i E^(i) = identity
    for (int p = 1; p <= n; ++p)
        for (int qq = 1; qq <= n; ++qq) {
            NCPoly rel(m);
            for (int i = 1; i <= k; ++i) rel = rel + e_gen(i, p, qq);
            if (p == qq) rel = rel - NCPoly::one(m);
            if (!rel.is_zero()) pres.relations.push_back(std::move(rel));
        }
    // E^(t(a)) A^(a) = A^(a) = A^(a) E^(s(a))
    for (int a = 0; a < q.arrow_count(); ++a) {
        int s = q.arrows[static_cast<size_t>(a)].first;
        int t = q.arrows[static_cast<size_t>(a)].second;
        for (int p = 1; p <= n; ++p)
            for (int qq = 1; qq <= n; ++qq) {
                NCPoly left(m);
                for (int r = 1; r <= n; ++r)
                    left = left + nc_mul(e_gen(t, p, r), c_gen(a, r, qq));
                left = left - c_gen(a, p, qq);
                if (!left.is_zero()) pres.relations.push_back(std::move(left));

                NCPoly right(m);
                for (int r = 1; r <= n; ++r)
                    right = right + nc_mul(c_gen(a, p, r), e_gen(s, r, qq));
                right = right - c_gen(a, p, qq);
                if (!right.is_zero()) pres.relations.push_back(std::move(right));
            }
    }
    return pres;
}

void validate_matrix_map(const RootPresentation& pres, const MatrixAlgebraMap& phi) {
    if (!phi.base) throw ContractError("matrix map without base algebra");
    if (phi.n != pres.n) throw ContractError("matrix map size mismatch");
    const BaseAlgebra& alg = *phi.base;
    auto check_shape = [&](const AlgMat& mat) {
        if (mat.rows != pres.n || mat.cols != pres.n)
            throw ContractError("matrix map entry shape mismatch");
    };

    if (pres.kind == RootPresentation::Kind::Free) {
        if (static_cast<int>(phi.gen_images.size()) != pres.d)
            throw ContractError("matrix map generator count mismatch");
        for (const auto& mat : phi.gen_images) check_shape(mat);
        return;
    }

    int k = pres.quiver.vertices;
    if (static_cast<int>(phi.vertex_images.size()) != k ||
        static_cast<int>(phi.arrow_images.size()) != pres.quiver.arrow_count())
        throw ContractError("matrix map vertex/arrow count mismatch");
    for (const auto& mat : phi.vertex_images) check_shape(mat);
    for (const auto& mat : phi.arrow_images) check_shape(mat);

    AlgMat total(pres.n, pres.n, alg);
    for (int i = 0; i < k; ++i) {
        const AlgMat& vi = phi.vertex_images[static_cast<size_t>(i)];
        total = alg_mat_add(total, vi);
        for (int j = 0; j < k; ++j) {
            const AlgMat& vj = phi.vertex_images[static_cast<size_t>(j)];
            AlgMat prod = alg_mat_mul(vi, vj);
            AlgMat expect =
                (i == j) ? vi : AlgMat(pres.n, pres.n, alg);
            if (!(prod == expect)) throw ContractError("vertex images are not orthogonal idempotents");
        }
    }
    if (!(total == AlgMat::identity(pres.n, alg)))
        throw ContractError("vertex images do not sum to the identity");
    for (int a = 0; a < pres.quiver.arrow_count(); ++a) {
        int s = pres.quiver.arrows[static_cast<size_t>(a)].first;
        int t = pres.quiver.arrows[static_cast<size_t>(a)].second;
        const AlgMat& mat = phi.arrow_images[static_cast<size_t>(a)];
        if (!(alg_mat_mul(phi.vertex_images[static_cast<size_t>(t - 1)], mat) == mat) ||
            !(alg_mat_mul(mat, phi.vertex_images[static_cast<size_t>(s - 1)]) == mat))
            throw ContractError("arrow image incompatible with vertex idempotents");
    }
}

void validate_root_map(const RootPresentation& pres, const RootMap& psi) {
    if (!psi.base) throw ContractError("root map without base algebra");
    if (static_cast<int>(psi.images.size()) != pres.generator_count())
        throw ContractError("root map image count mismatch");
    for (const auto& rel : pres.relations) {
        AlgElem value = eval_ncpoly(rel, psi.images, *psi.base);
        if (!value.is_zero()) throw ContractError("root map violates a presentation relation");
    }
}

RootMap lower(const RootPresentation& pres, const MatrixAlgebraMap& phi) {
    validate_matrix_map(pres, phi);
    RootMap psi;
    psi.base = phi.base;
    psi.images.reserve(static_cast<size_t>(pres.generator_count()));
    for (const auto& g : pres.generators) {
        switch (g.type) {
            case RootPresentation::Generator::Type::FreeEntry:
                psi.images.push_back(
                    phi.gen_images[static_cast<size_t>(g.k - 1)].at(g.p - 1, g.q - 1));
                break;
            case RootPresentation::Generator::Type::VertexCycle:
                psi.images.push_back(
                    phi.vertex_images[static_cast<size_t>(g.vertex - 1)].at(g.p - 1, g.q - 1));
                break;
            case RootPresentation::Generator::Type::ArrowCycle:
                psi.images.push_back(
                    phi.arrow_images[static_cast<size_t>(g.arrow)].at(g.p - 1, g.q - 1));
                break;
        }
    }
    validate_root_map(pres, psi);
    return psi;
}

MatrixAlgebraMap raise(const RootPresentation& pres, const RootMap& psi) {
    validate_root_map(pres, psi);
    const BaseAlgebra& alg = *psi.base;
    MatrixAlgebraMap phi;
    phi.base = psi.base;
    phi.n = pres.n;

    if (pres.kind == RootPresentation::Kind::Free) {
        for (int k = 1; k <= pres.d; ++k) {
            AlgMat mat(pres.n, pres.n, alg);
            for (int i = 1; i <= pres.n; ++i)
                for (int j = 1; j <= pres.n; ++j)
                    mat.at(i - 1, j - 1) = psi.images[static_cast<size_t>(pres.free_index(k, i, j))];
            phi.gen_images.push_back(std::move(mat));
        }
    } else {
        for (int i = 1; i <= pres.quiver.vertices; ++i) {
            AlgMat mat(pres.n, pres.n, alg);
            for (int p = 1; p <= pres.n; ++p)
                for (int qq = 1; qq <= pres.n; ++qq)
                    mat.at(p - 1, qq - 1) =
                        psi.images[static_cast<size_t>(pres.vertex_index(i, p, qq))];
            phi.vertex_images.push_back(std::move(mat));
        }
        for (int a = 0; a < pres.quiver.arrow_count(); ++a) {
            AlgMat mat(pres.n, pres.n, alg);
            for (int p = 1; p <= pres.n; ++p)
                for (int qq = 1; qq <= pres.n; ++qq)
                    mat.at(p - 1, qq - 1) =
                        psi.images[static_cast<size_t>(pres.arrow_index(a, p, qq))];
            phi.arrow_images.push_back(std::move(mat));
        }
    }
    validate_matrix_map(pres, phi);
    return phi;
}

MatrixAlgebraMap random_path_matrix_map(Rng& rng, const BaseAlgebraPtr& coeffs, const Quiver& q,
                                        int n) {
    int k = q.vertices;
    DimVector alpha = random_dimvector(rng, k, n);
    const BaseAlgebra& alg = *coeffs;

    std::vector<AlgMat> projectors;
    int offset = 0;
    for (int i = 0; i < k; ++i) {
        AlgMat p(n, n, alg);
        for (int r = 0; r < alpha[i]; ++r) p.at(offset + r, offset + r) = alg.one();
        projectors.push_back(std::move(p));
        offset += alpha[i];
    }

    auto [g, ginv] = random_invertible_alg_pair(rng, coeffs, n);

    MatrixAlgebraMap phi;
    phi.base = coeffs;
    phi.n = n;
    for (int i = 0; i < k; ++i)
        phi.vertex_images.push_back(
            alg_mat_mul(alg_mat_mul(g, projectors[static_cast<size_t>(i)]), ginv));
    for (const auto& [s, t] : q.arrows) {
        AlgMat block = alg_mat_mul(projectors[static_cast<size_t>(t - 1)],
                                   alg_mat_mul(random_alg_mat(rng, coeffs, n, n),
                                               projectors[static_cast<size_t>(s - 1)]));
        phi.arrow_images.push_back(alg_mat_mul(alg_mat_mul(g, block), ginv));
    }
    return phi;
}

EquivalenceReport abelianized_root_equals_rep_ring(const RootPresentation& pres, Rng& rng,
                                                   int samples) {
    EquivalenceReport report;
    if (pres.kind == RootPresentation::Kind::Free) {
        int expected = pres.d * pres.n * pres.n;
        if (pres.generator_count() != expected || !pres.relations.empty()) {
            report.pass = false;
            report.detail = "free presentation should have d*n^2 generators and no relations";
        }
        report.samples_checked = 0;
        return report;
    }

    std::vector<BaseAlgebraPtr> coefficient_algebras = {BaseAlgebra::rationals(),
                                                        BaseAlgebra::dual_numbers()};
    for (const auto& coeffs : coefficient_algebras) {
        if (!coeffs->is_commutative()) throw ContractError("coefficient algebra must be commutative");
        for (int s = 0; s < samples; ++s) {
            MatrixAlgebraMap phi = random_path_matrix_map(rng, coeffs, pres.quiver, pres.n);
            try {
                // representation point -> commutative point of the presentation
                RootMap psi = lower(pres, phi);
                // commutative point -> representation point, and back
                MatrixAlgebraMap phi2 = raise(pres, psi);
                if (!(phi2 == phi)) {
                    report.pass = false;
                    report.detail = "raise(lower(phi)) differs from phi";
                    return report;
                }
                RootMap psi2 = lower(pres, phi2);
                if (!(psi2 == psi)) {
                    report.pass = false;
                    report.detail = "lower(raise(psi)) differs from psi";
                    return report;
                }
            } catch (const ContractError& e) {
                report.pass = false;
                report.detail = e.what();
                return report;
            }
            ++report.samples_checked;
        }
    }
    return report;
}

std::string root_presentation_to_json_text(const RootPresentation& pres) {
    nlohmann::json j;
    j["schema"] = "ncformal/1";
    j["n"] = pres.n;
    std::vector<std::string> labels;
    for (const auto& g : pres.generators) labels.push_back(g.label);
    if (pres.kind == RootPresentation::Kind::Free) {
        j["kind"] = "free";
        j["d"] = pres.d;
    } else {
        j["kind"] = "path_algebra";
        j["quiver"] = nlohmann::json::parse(quiver_to_json_text(pres.quiver));
    }
    j["generators"] = labels;
    auto rels = nlohmann::json::array();
    for (const auto& r : pres.relations) rels.push_back(to_string(r, labels));
    j["relations"] = rels;
    return j.dump(2);
}

}  // namespace ncformal
