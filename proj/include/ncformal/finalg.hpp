#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ncformal/ncpoly.hpp"
#include "ncformal/rational.hpp"

namespace ncformal {

class BaseAlgebra;
using BaseAlgebraPtr = std::shared_ptr<const BaseAlgebra>;

// Element of a finite-dimensional algebra, stored as coordinates over the
// structure-constant basis.
class AlgElem {
  public:
    AlgElem() = default;
    AlgElem(BaseAlgebraPtr alg, std::vector<Rational> coords);

    const std::vector<Rational>& coords() const { return coords_; }
    const BaseAlgebraPtr& algebra() const { return alg_; }
    bool is_zero() const;

    AlgElem operator+(const AlgElem& o) const;
    AlgElem operator-(const AlgElem& o) const;
    AlgElem operator*(const AlgElem& o) const;
    AlgElem operator*(const Rational& c) const;
    bool operator==(const AlgElem& o) const { return coords_ == o.coords_; }

  private:
    BaseAlgebraPtr alg_;
    std::vector<Rational> coords_;
};

// Associative unital algebra of dimension m over the rationals, given by
// structure constants c[i][j] = coordinates of e_i * e_j. Associativity and
// the unit law are verified once at construction.
class BaseAlgebra : public std::enable_shared_from_this<BaseAlgebra> {
  public:
    static BaseAlgebraPtr create(std::vector<std::vector<std::vector<Rational>>> table,
                                 std::vector<Rational> unit_coords,
                                 std::vector<std::string> basis_labels);

    int dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<Rational>& unit_coords() const { return unit_; }
    bool is_commutative() const { return commutative_; }

    AlgElem zero() const;
    AlgElem one() const;
    AlgElem basis_element(int i) const;
    AlgElem scalar(const Rational& c) const;
    AlgElem element(std::vector<Rational> coords) const;

    // coordinates of e_i * e_j
    const std::vector<Rational>& product_row(int i, int j) const {
        return table_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }

    // --- stock algebras ----------------------------------------------------
    static BaseAlgebraPtr rationals();               // dim 1
    static BaseAlgebraPtr dual_numbers();            // Q[eps]/(eps^2)
    static BaseAlgebraPtr truncated_poly(int k);     // Q[t]/(t^k)
    static BaseAlgebraPtr matrix_algebra(int n);     // M_n(Q)
    static BaseAlgebraPtr upper_triangular(int n);   // n x n upper triangular

  private:
    BaseAlgebra(std::vector<std::vector<std::vector<Rational>>> table,
                std::vector<Rational> unit_coords, std::vector<std::string> basis_labels);
    void validate();

    int dim_;
    std::vector<std::vector<std::vector<Rational>>> table_;
    std::vector<Rational> unit_;
    std::vector<std::string> labels_;
    bool commutative_ = false;
};

// Dense matrix with AlgElem entries.
struct AlgMat {
    int rows = 0, cols = 0;
    std::vector<AlgElem> a;

    AlgMat() = default;
    AlgMat(int r, int c, const BaseAlgebra& alg);

    AlgElem& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const AlgElem& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static AlgMat identity(int n, const BaseAlgebra& alg);
    bool operator==(const AlgMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

AlgMat alg_mat_mul(const AlgMat& x, const AlgMat& y);
AlgMat alg_mat_add(const AlgMat& x, const AlgMat& y);
AlgMat alg_mat_sub(const AlgMat& x, const AlgMat& y);
bool alg_mat_is_zero(const AlgMat& m);

// Evaluate a polynomial in noncommuting variables at algebra elements.
AlgElem eval_ncpoly(const NCPoly& p, const std::vector<AlgElem>& values, const BaseAlgebra& alg);

// Evaluate at square matrices over the algebra.
AlgMat eval_ncpoly_mat(const NCPoly& p, const std::vector<AlgMat>& values, const BaseAlgebra& alg);

// Algebra morphism B -> B' given by the images of basis elements; checked to
// be unital and multiplicative at construction.
class AlgebraMorphism {
  public:
    AlgebraMorphism(BaseAlgebraPtr source, BaseAlgebraPtr target, std::vector<AlgElem> images);
    AlgElem apply(const AlgElem& x) const;
    const BaseAlgebraPtr& source() const { return source_; }
    const BaseAlgebraPtr& target() const { return target_; }

  private:
    BaseAlgebraPtr source_;
    BaseAlgebraPtr target_;
    std::vector<AlgElem> images_;
};

}  // namespace ncformal
