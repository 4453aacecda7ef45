#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ncformal/rational.hpp"

namespace ncformal {

// Sparse exact vector: index -> nonzero coefficient.
using SparseVec = std::map<long, Rational>;

void sparse_axpy(SparseVec& dst, const Rational& c, const SparseVec& src);

// Incremental row echelon basis over the rationals. Vectors are inserted one
// at a time; each stored row optionally remembers how it was built from the
// inserted vectors so that later right-hand sides can be expressed in terms
// of them.
class EchelonSolver {
  public:
    explicit EchelonSolver(bool track_combinations = false) : track_(track_combinations) {}

    // Returns true if v was independent of everything inserted so far.
    // Dependent vectors are counted but not stored.
    bool insert(const SparseVec& v);

    int rank() const { return static_cast<int>(rows_.size()); }
    int inserted() const { return inserted_; }

    // Expresses b as an exact combination of the inserted vectors, indexed in
    // insertion order. Requires track_combinations. nullopt if b is outside
    // the span.
    std::optional<std::vector<Rational>> solve(const SparseVec& b) const;

  private:
    struct Row {
        SparseVec vec;                  // leading coefficient normalized to 1
        std::map<int, Rational> combo;  // expression in inserted vectors
        long pivot = 0;
    };
    std::vector<Row> rows_;
    bool track_;
    int inserted_ = 0;
};

// Small dense matrix over the rationals; only what the callers need.
struct QMat {
    int rows = 0, cols = 0;
    std::vector<Rational> a;

    QMat() = default;
    QMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rational(0)) {}

    Rational& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static QMat identity(int n);
    bool operator==(const QMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

QMat mat_mul(const QMat& x, const QMat& y);
QMat mat_add(const QMat& x, const QMat& y);

// Gauss-Jordan; nullopt when singular.
std::optional<QMat> mat_inverse(const QMat& m);

}  // namespace ncformal
