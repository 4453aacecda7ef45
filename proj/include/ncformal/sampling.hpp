#pragma once

#include "ncformal/finalg.hpp"
#include "ncformal/ncpoly.hpp"
#include "ncformal/quiver.hpp"
#include "ncformal/rng.hpp"

namespace ncformal {

// Deterministic sample builders for randomized verification; everything is
// driven by an explicit Rng so seeded runs reproduce byte for byte.

Rational random_rational(Rng& rng, long lo = -5, long hi = 5, long max_den = 3);

NCPoly random_ncpoly(Rng& rng, int d, int max_degree, int max_terms);
CommPoly random_commpoly(Rng& rng, int d, int max_degree, int max_terms);

QMat random_qmat(Rng& rng, int rows, int cols, long lo = -3, long hi = 3);
QMat random_invertible_qmat(Rng& rng, int n);  // product of unipotent factors

AlgElem random_alg_elem(Rng& rng, const BaseAlgebraPtr& alg, long lo = -3, long hi = 3);
AlgMat random_alg_mat(Rng& rng, const BaseAlgebraPtr& alg, int rows, int cols);

// Invertible over any base: unipotent lower times unipotent upper, returned
// together with its exact inverse.
std::pair<AlgMat, AlgMat> random_invertible_alg_pair(Rng& rng, const BaseAlgebraPtr& alg, int n);

// Inverse of 1 + N with N nilpotent (finite Neumann sum).
AlgMat unipotent_inverse(const AlgMat& g);

Quiver random_quiver(Rng& rng, int max_vertices, int max_arrows);
DimVector random_dimvector(Rng& rng, int k, int total);
QuiverRep random_quiver_rep(Rng& rng, const Quiver& q, const DimVector& alpha);

}  // namespace ncformal
