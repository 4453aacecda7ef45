#pragma once

#include <string>
#include <vector>

#include "ncformal/finalg.hpp"
#include "ncformal/linalg.hpp"
#include "ncformal/ncpoly.hpp"
#include "ncformal/quiver.hpp"

namespace ncformal {

// Finitely presented algebra: d generators and the relations generating the
// defining ideal.
struct Presentation {
    int d = 0;
    std::vector<NCPoly> relations;

    Presentation() = default;
    Presentation(int gens, std::vector<NCPoly> rels);
};

// Coordinates of the representation scheme: for generator k (1-based) an
// n x n matrix of distinct commutative variables x_{ij,k}. Variables are
// ordered (k, i, j) lexicographically.
struct GenericMatrixSpace {
    int d = 0;
    int n = 0;

    int var_count() const { return d * n * n; }
    int var_index(int k, int i, int j) const;          // all 1-based
    std::string var_label(int index) const;            // "x{i}{j},{k}"
    std::vector<std::string> var_labels() const;
    CommPoly variable(int k, int i, int j) const;
};

struct RelationIdeal {
    int n = 0;
    GenericMatrixSpace space;
    struct Entry {
        int relation_index;  // 1-based position in the presentation
        int i, j;            // 1-based matrix entry
        CommPoly poly;
        std::string label;   // "f{r}_{i}{j}"
    };
    std::vector<Entry> polynomials;
};

// A point of the representation scheme with entries in a commutative
// coefficient algebra (the rationals, dual numbers, ...).
struct RepPoint {
    BaseAlgebraPtr coefficients;
    std::vector<AlgMat> matrices;  // one n x n matrix per generator

    int n() const { return matrices.empty() ? 0 : matrices.front().rows; }

    static RepPoint from_rational(const std::vector<QMat>& mats);
};

// f evaluated at the generic matrices: an n x n matrix of polynomials in the
// d n^2 coordinate variables.
std::vector<std::vector<CommPoly>> evaluate_at_generic(const NCPoly& f, int n);

RelationIdeal relation_ideal(const Presentation& p, int n);

bool is_representation(const Presentation& p, const RepPoint& pt);

RepPoint conjugate(const RepPoint& pt, const QMat& g);

// Evaluate an ideal generator at concrete coordinates (entries listed in the
// (k,i,j) variable order).
AlgElem eval_commpoly(const CommPoly& poly, const std::vector<AlgElem>& values,
                      const BaseAlgebra& alg);

struct QuiverStratum {
    DimVector alpha;
    long fiber_dim;   // dim rep_alpha Q
    long bundle_dim;  // dim of the associated fiber bundle inside rep_n CQ
};

std::vector<QuiverStratum> decompose_rep_quiver(const Quiver& q, int n);

// JSON helpers for the CLI ({"d": 2, "relations": ["x1*x2 - x2*x1"]}).
Presentation presentation_from_json_text(const std::string& text);
std::string presentation_to_json_text(const Presentation& p);

}  // namespace ncformal
