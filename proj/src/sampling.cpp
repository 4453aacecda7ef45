#include "ncformal/sampling.hpp"

namespace ncformal {

Rational random_rational(Rng& rng, long lo, long hi, long max_den) {
    long num = rng.next_long(lo, hi);
    long den = rng.next_long(1, max_den);
    return make_rational(num, den);
}

NCPoly random_ncpoly(Rng& rng, int d, int max_degree, int max_terms) {
    NCPoly p(d);
    int terms = rng.next_int(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        int len = rng.next_int(0, max_degree);
        Word w;
        for (int i = 0; i < len; ++i) w.push_back(rng.next_int(0, d - 1));
        p.add_term(w, random_rational(rng));
    }
    return p;
}

CommPoly random_commpoly(Rng& rng, int d, int max_degree, int max_terms) {
    CommPoly p(d);
    int terms = rng.next_int(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        Exponents e(static_cast<size_t>(d), 0);
        int deg = rng.next_int(0, max_degree);
        for (int i = 0; i < deg; ++i) e[static_cast<size_t>(rng.next_int(0, d - 1))] += 1;
        p.add_term(e, random_rational(rng));
    }
    return p;
}

QMat random_qmat(Rng& rng, int rows, int cols, long lo, long hi) {
    QMat m(rows, cols);
    for (auto& x : m.a) x = Rational(rng.next_long(lo, hi));
    return m;
}

QMat random_invertible_qmat(Rng& rng, int n) {
    QMat lower = QMat::identity(n);
    QMat upper = QMat::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i > j) lower.at(i, j) = Rational(rng.next_long(-2, 2));
            if (i < j) upper.at(i, j) = Rational(rng.next_long(-2, 2));
        }
    return mat_mul(lower, upper);
}

AlgElem random_alg_elem(Rng& rng, const BaseAlgebraPtr& alg, long lo, long hi) {
    std::vector<Rational> coords;
    for (int i = 0; i < alg->dim(); ++i) coords.push_back(Rational(rng.next_long(lo, hi)));
    return alg->element(std::move(coords));
}

AlgMat random_alg_mat(Rng& rng, const BaseAlgebraPtr& alg, int rows, int cols) {
    AlgMat m(rows, cols, *alg);
    for (auto& x : m.a) x = random_alg_elem(rng, alg);
    return m;
}

std::pair<AlgMat, AlgMat> random_invertible_alg_pair(Rng& rng, const BaseAlgebraPtr& alg, int n) {
    AlgMat lower = AlgMat::identity(n, *alg);
    AlgMat upper = AlgMat::identity(n, *alg);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i > j) lower.at(i, j) = random_alg_elem(rng, alg, -2, 2);
            if (i < j) upper.at(i, j) = random_alg_elem(rng, alg, -2, 2);
        }
    // each factor is unipotent; the product usually is not, so invert the
    // factors separately
    AlgMat g = alg_mat_mul(lower, upper);
    AlgMat ginv = alg_mat_mul(unipotent_inverse(upper), unipotent_inverse(lower));
    return {g, ginv};
}

AlgMat unipotent_inverse(const AlgMat& g) {
    // g = 1 + N with N nilpotent of index <= n: inverse is the finite
    // alternating Neumann sum
    int n = g.rows;
    const BaseAlgebra& alg = *g.a.front().algebra();
    AlgMat nil = alg_mat_sub(g, AlgMat::identity(n, alg));
    AlgMat inv = AlgMat::identity(n, alg);
    AlgMat power = AlgMat::identity(n, alg);
    for (int m = 1; m <= n; ++m) {
        power = alg_mat_mul(power, nil);
        if (alg_mat_is_zero(power)) break;
        AlgMat term = power;
        if (m % 2 == 1)
            for (auto& e : term.a) e = e * Rational(-1);
        inv = alg_mat_add(inv, term);
    }
    return inv;
}

Quiver random_quiver(Rng& rng, int max_vertices, int max_arrows) {
    int k = rng.next_int(1, max_vertices);
    int l = rng.next_int(0, max_arrows);
    std::vector<std::pair<int, int>> arrows;
    for (int a = 0; a < l; ++a)
        arrows.emplace_back(rng.next_int(1, k), rng.next_int(1, k));
    return Quiver(k, std::move(arrows));
}

DimVector random_dimvector(Rng& rng, int k, int total) {
    std::vector<int> c(static_cast<size_t>(k), 0);
    for (int unit = 0; unit < total; ++unit) c[static_cast<size_t>(rng.next_int(0, k - 1))] += 1;
    return DimVector(std::move(c));
}

QuiverRep random_quiver_rep(Rng& rng, const Quiver& q, const DimVector& alpha) {
    QuiverRep rep;
    rep.dims = alpha;
    for (const auto& [s, t] : q.arrows)
        rep.matrices.push_back(random_qmat(rng, alpha[t - 1], alpha[s - 1]));
    return rep;
}

}  // namespace ncformal
