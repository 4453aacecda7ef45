#include "ncformal/repscheme.hpp"

#include <json.hpp>

namespace ncformal {

Presentation::Presentation(int gens, std::vector<NCPoly> rels)
    : d(gens), relations(std::move(rels)) {
    if (d < 0) throw ContractError("negative generator count");
    for (const auto& r : relations)
        if (r.alphabet_size() != d) throw ContractError("relation alphabet mismatch");
}

int GenericMatrixSpace::var_index(int k, int i, int j) const {
    if (k < 1 || k > d || i < 1 || i > n || j < 1 || j > n)
        throw ContractError("variable label outside range");
    return ((k - 1) * n + (i - 1)) * n + (j - 1);
}

std::string GenericMatrixSpace::var_label(int index) const {
    int j = index % n + 1;
    int i = (index / n) % n + 1;
    int k = index / (n * n) + 1;
    return "x" + std::to_string(i) + std::to_string(j) + "," + std::to_string(k);
}

std::vector<std::string> GenericMatrixSpace::var_labels() const {
    std::vector<std::string> out;
    for (int v = 0; v < var_count(); ++v) out.push_back(var_label(v));
    return out;
}

CommPoly GenericMatrixSpace::variable(int k, int i, int j) const {
    return CommPoly::variable(var_count(), var_index(k, i, j));
}

std::vector<std::vector<CommPoly>> evaluate_at_generic(const NCPoly& f, int n) {
    if (n < 1) throw ContractError("matrix size must be positive");
    GenericMatrixSpace space{f.alphabet_size(), n};
    int nv = space.var_count();

    auto zero_mat = [&] {
        return std::vector<std::vector<CommPoly>>(
            static_cast<size_t>(n), std::vector<CommPoly>(static_cast<size_t>(n), CommPoly(nv)));
    };
    auto identity = [&] {
        auto m = zero_mat();
        for (int i = 0; i < n; ++i)
            m[static_cast<size_t>(i)][static_cast<size_t>(i)] = CommPoly::one(nv);
        return m;
    };
    auto mul = [&](const auto& x, const auto& y) {
        auto r = zero_mat();
        for (int i = 0; i < n; ++i)
            for (int kk = 0; kk < n; ++kk) {
                const CommPoly& v = x[static_cast<size_t>(i)][static_cast<size_t>(kk)];
                if (v.is_zero()) continue;
                for (int j = 0; j < n; ++j)
                    r[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        r[static_cast<size_t>(i)][static_cast<size_t>(j)] +
                        comm_mul(v, y[static_cast<size_t>(kk)][static_cast<size_t>(j)]);
            }
        return r;
    };

    std::vector<std::vector<std::vector<CommPoly>>> generic;
    for (int k = 1; k <= f.alphabet_size(); ++k) {
        auto m = zero_mat();
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = space.variable(k, i, j);
        generic.push_back(std::move(m));
    }

    auto result = zero_mat();
    for (const auto& [w, c] : f.terms()) {
        auto prod = identity();
        for (int g : w) prod = mul(prod, generic[static_cast<size_t>(g)]);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                result[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    result[static_cast<size_t>(i)][static_cast<size_t>(j)] +
                    prod[static_cast<size_t>(i)][static_cast<size_t>(j)] * c;
    }
    return result;
}

RelationIdeal relation_ideal(const Presentation& p, int n) {
    RelationIdeal ideal;
    ideal.n = n;
    ideal.space = GenericMatrixSpace{p.d, n};
    int r = 0;
    for (const auto& f : p.relations) {
        ++r;
        auto mat = evaluate_at_generic(f, n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                ideal.polynomials.push_back(
                    {r, i, j, mat[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)],
                     "f" + std::to_string(r) + "_" + std::to_string(i) + std::to_string(j)});
    }
    return ideal;
}

RepPoint RepPoint::from_rational(const std::vector<QMat>& mats) {
    RepPoint pt;
    pt.coefficients = BaseAlgebra::rationals();
    for (const auto& m : mats) {
        AlgMat am(m.rows, m.cols, *pt.coefficients);
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j)
                am.at(i, j) = pt.coefficients->scalar(m.at(i, j));
        pt.matrices.push_back(std::move(am));
    }
    return pt;
}

bool is_representation(const Presentation& p, const RepPoint& pt) {
    if (static_cast<int>(pt.matrices.size()) != p.d)
        throw ContractError("matrix count mismatch with presentation");
    int n = pt.n();
    for (const auto& m : pt.matrices)
        if (m.rows != n || m.cols != n) throw ContractError("matrix size mismatch");
    for (const auto& rel : p.relations) {
        AlgMat value = eval_ncpoly_mat(rel, pt.matrices, *pt.coefficients);
        if (!alg_mat_is_zero(value)) return false;
    }
    return true;
}

RepPoint conjugate(const RepPoint& pt, const QMat& g) {
    auto inv = mat_inverse(g);
    if (!inv) throw ContractError("conjugating matrix is singular");
    int n = pt.n();
    if (g.rows != n || g.cols != n) throw ContractError("conjugator size mismatch");
    const BaseAlgebra& alg = *pt.coefficients;

    auto scale_mul_left = [&](const QMat& q, const AlgMat& m) {
        AlgMat r(q.rows, m.cols, alg);
        for (int i = 0; i < q.rows; ++i)
            for (int k = 0; k < q.cols; ++k) {
                if (is_zero(q.at(i, k))) continue;
                for (int j = 0; j < m.cols; ++j)
                    r.at(i, j) = r.at(i, j) + m.at(k, j) * q.at(i, k);
            }
        return r;
    };
    auto scale_mul_right = [&](const AlgMat& m, const QMat& q) {
        AlgMat r(m.rows, q.cols, alg);
        for (int i = 0; i < m.rows; ++i)
            for (int k = 0; k < m.cols; ++k) {
                if (m.at(i, k).is_zero()) continue;
                for (int j = 0; j < q.cols; ++j)
                    r.at(i, j) = r.at(i, j) + m.at(i, k) * q.at(k, j);
            }
        return r;
    };

    RepPoint out;
    out.coefficients = pt.coefficients;
    for (const auto& m : pt.matrices)
        out.matrices.push_back(scale_mul_right(scale_mul_left(g, m), *inv));
    return out;
}

AlgElem eval_commpoly(const CommPoly& poly, const std::vector<AlgElem>& values,
                      const BaseAlgebra& alg) {
    if (static_cast<int>(values.size()) != poly.nvars())
        throw ContractError("value count mismatch");
    AlgElem out = alg.zero();
    for (const auto& [e, c] : poly.terms()) {
        AlgElem prod = alg.one();
        for (size_t v = 0; v < e.size(); ++v)
            for (int rep = 0; rep < e[v]; ++rep) prod = prod * values[v];
        out = out + prod * c;
    }
    return out;
}

std::vector<QuiverStratum> decompose_rep_quiver(const Quiver& q, int n) {
    std::vector<QuiverStratum> out;
    for (const auto& alpha : enumerate_dimvectors(q.vertices, n))
        out.push_back({alpha, rep_dim(q, alpha), bundle_dim(n, q, alpha)});
    return out;
}

Presentation presentation_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad presentation JSON: ") + e.what());
    }
    if (!j.contains("d")) throw ParseError("presentation JSON needs 'd'");
    int d = j["d"].get<int>();
    std::vector<NCPoly> rels;
    if (j.contains("relations"))
        for (const auto& r : j["relations"]) rels.push_back(parse_ncpoly(r.get<std::string>(), d));
    return Presentation(d, std::move(rels));
}

std::string presentation_to_json_text(const Presentation& p) {
    nlohmann::json j;
    j["d"] = p.d;
    auto arr = nlohmann::json::array();
    for (const auto& r : p.relations) arr.push_back(to_string(r));
    j["relations"] = arr;
    return j.dump();
}

}  // namespace ncformal
