#include "ncformal/finalg.hpp"

#include <stdexcept>

namespace ncformal {

AlgElem::AlgElem(BaseAlgebraPtr alg, std::vector<Rational> coords)
    : alg_(std::move(alg)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != alg_->dim())
        throw ContractError("coordinate length mismatch");
}

bool AlgElem::is_zero() const {
    for (const auto& c : coords_)
        if (!ncformal::is_zero(c)) return false;
    return true;
}

AlgElem AlgElem::operator+(const AlgElem& o) const {
    if (coords_.size() != o.coords_.size()) throw ContractError("algebra dimension mismatch");
    std::vector<Rational> c = coords_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return AlgElem(alg_, std::move(c));
}

AlgElem AlgElem::operator-(const AlgElem& o) const {
    if (coords_.size() != o.coords_.size()) throw ContractError("algebra dimension mismatch");
    std::vector<Rational> c = coords_;
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
    return AlgElem(alg_, std::move(c));
}

AlgElem AlgElem::operator*(const AlgElem& o) const {
    if (coords_.size() != o.coords_.size()) throw ContractError("algebra dimension mismatch");
    const BaseAlgebra& alg = *alg_;
    std::vector<Rational> out(static_cast<size_t>(alg.dim()), Rational(0));
    for (int i = 0; i < alg.dim(); ++i) {
        if (ncformal::is_zero(coords_[static_cast<size_t>(i)])) continue;
        for (int j = 0; j < alg.dim(); ++j) {
            if (ncformal::is_zero(o.coords_[static_cast<size_t>(j)])) continue;
            Rational c = coords_[static_cast<size_t>(i)] * o.coords_[static_cast<size_t>(j)];
            const auto& row = alg.product_row(i, j);
            for (int k = 0; k < alg.dim(); ++k) out[static_cast<size_t>(k)] += c * row[static_cast<size_t>(k)];
        }
    }
    return AlgElem(alg_, std::move(out));
}

AlgElem AlgElem::operator*(const Rational& c) const {
    std::vector<Rational> out = coords_;
    for (auto& x : out) x *= c;
    return AlgElem(alg_, std::move(out));
}

BaseAlgebra::BaseAlgebra(std::vector<std::vector<std::vector<Rational>>> table,
                         std::vector<Rational> unit_coords, std::vector<std::string> basis_labels)
    : dim_(static_cast<int>(table.size())),
      table_(std::move(table)),
      unit_(std::move(unit_coords)),
      labels_(std::move(basis_labels)) {}

BaseAlgebraPtr BaseAlgebra::create(std::vector<std::vector<std::vector<Rational>>> table,
                                   std::vector<Rational> unit_coords,
                                   std::vector<std::string> basis_labels) {
    auto alg = std::shared_ptr<BaseAlgebra>(
        new BaseAlgebra(std::move(table), std::move(unit_coords), std::move(basis_labels)));
    alg->validate();
    return alg;
}

void BaseAlgebra::validate() {
    size_t m = static_cast<size_t>(dim_);
    if (m == 0 || unit_.size() != m || labels_.size() != m || table_.size() != m)
        throw ContractError("malformed structure constant table");
    for (const auto& row : table_) {
        if (row.size() != m) throw ContractError("malformed structure constant table");
        for (const auto& cell : row)
            if (cell.size() != m) throw ContractError("malformed structure constant table");
    }
    auto self = shared_from_this();
    auto basis = [&](int i) {
        std::vector<Rational> c(m, Rational(0));
        c[static_cast<size_t>(i)] = 1;
        return AlgElem(self, c);
    };
    AlgElem u(self, unit_);
    bool comm = true;
    for (int i = 0; i < dim_; ++i) {
        AlgElem ei = basis(i);
        if (!((u * ei) == ei) || !((ei * u) == ei)) throw ContractError("unit law fails");
        for (int j = 0; j < dim_; ++j) {
            AlgElem ej = basis(j);
            if (!((ei * ej) == (ej * ei))) comm = false;
            for (int k = 0; k < dim_; ++k) {
                AlgElem ek = basis(k);
                if (!(((ei * ej) * ek) == (ei * (ej * ek))))
                    throw ContractError("associativity fails");
            }
        }
    }
    commutative_ = comm;
}

AlgElem BaseAlgebra::zero() const {
    return AlgElem(shared_from_this(), std::vector<Rational>(static_cast<size_t>(dim_), Rational(0)));
}

AlgElem BaseAlgebra::one() const { return AlgElem(shared_from_this(), unit_); }

AlgElem BaseAlgebra::basis_element(int i) const {
    if (i < 0 || i >= dim_) throw ContractError("basis index outside range");
    std::vector<Rational> c(static_cast<size_t>(dim_), Rational(0));
    c[static_cast<size_t>(i)] = 1;
    return AlgElem(shared_from_this(), std::move(c));
}

AlgElem BaseAlgebra::scalar(const Rational& c) const {
    std::vector<Rational> coords = unit_;
    for (auto& x : coords) x *= c;
    return AlgElem(shared_from_this(), std::move(coords));
}

AlgElem BaseAlgebra::element(std::vector<Rational> coords) const {
    return AlgElem(shared_from_this(), std::move(coords));
}

BaseAlgebraPtr BaseAlgebra::rationals() {
    return create({{{Rational(1)}}}, {Rational(1)}, {"1"});
}

BaseAlgebraPtr BaseAlgebra::dual_numbers() { return truncated_poly(2); }

BaseAlgebraPtr BaseAlgebra::truncated_poly(int k) {
    if (k < 1) throw ContractError("truncation must be positive");
    size_t m = static_cast<size_t>(k);
    std::vector<std::vector<std::vector<Rational>>> table(
        m, std::vector<std::vector<Rational>>(m, std::vector<Rational>(m, Rational(0))));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if (i + j < m) table[i][j][i + j] = 1;
    std::vector<Rational> unit(m, Rational(0));
    unit[0] = 1;
    std::vector<std::string> labels;
    for (size_t i = 0; i < m; ++i)
        labels.push_back(i == 0 ? "1" : "t^" + std::to_string(i));
    return create(std::move(table), std::move(unit), std::move(labels));
}

namespace {

BaseAlgebraPtr matrix_units_algebra(const std::vector<std::pair<int, int>>& units, int n) {
    size_t m = units.size();
    auto find_unit = [&](int i, int j) -> int {
        for (size_t u = 0; u < m; ++u)
            if (units[u].first == i && units[u].second == j) return static_cast<int>(u);
        return -1;
    };
    std::vector<std::vector<std::vector<Rational>>> table(
        m, std::vector<std::vector<Rational>>(m, std::vector<Rational>(m, Rational(0))));
    for (size_t u = 0; u < m; ++u)
        for (size_t v = 0; v < m; ++v) {
            // E_{ij} E_{kl} = delta_jk E_{il}
            if (units[u].second != units[v].first) continue;
            int w = find_unit(units[u].first, units[v].second);
            if (w >= 0) table[u][v][static_cast<size_t>(w)] = 1;
        }
    std::vector<Rational> unit(m, Rational(0));
    for (size_t u = 0; u < m; ++u)
        if (units[u].first == units[u].second) unit[u] = 1;
    std::vector<std::string> labels;
    for (const auto& [i, j] : units)
        labels.push_back("E" + std::to_string(i) + std::to_string(j));
    (void)n;
    return BaseAlgebra::create(std::move(table), std::move(unit), std::move(labels));
}

}  // namespace

BaseAlgebraPtr BaseAlgebra::matrix_algebra(int n) {
    std::vector<std::pair<int, int>> units;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) units.emplace_back(i, j);
    return matrix_units_algebra(units, n);
}

BaseAlgebraPtr BaseAlgebra::upper_triangular(int n) {
    std::vector<std::pair<int, int>> units;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) units.emplace_back(i, j);
    return matrix_units_algebra(units, n);
}

AlgMat::AlgMat(int r, int c, const BaseAlgebra& alg) : rows(r), cols(c) {
    a.assign(static_cast<size_t>(r) * c, alg.zero());
}

AlgMat AlgMat::identity(int n, const BaseAlgebra& alg) {
    AlgMat m(n, n, alg);
    for (int i = 0; i < n; ++i) m.at(i, i) = alg.one();
    return m;
}

AlgMat alg_mat_mul(const AlgMat& x, const AlgMat& y) {
    if (x.cols != y.rows) throw ContractError("matrix shape mismatch");
    if (x.a.empty() || y.a.empty()) throw ContractError("empty matrix");
    const BaseAlgebra& alg = *x.a.front().algebra();
    AlgMat r(x.rows, y.cols, alg);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const AlgElem& v = x.at(i, k);
            if (v.is_zero()) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) = r.at(i, j) + v * y.at(k, j);
        }
    return r;
}

AlgMat alg_mat_add(const AlgMat& x, const AlgMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw ContractError("matrix shape mismatch");
    AlgMat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = r.a[i] + y.a[i];
    return r;
}

AlgMat alg_mat_sub(const AlgMat& x, const AlgMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw ContractError("matrix shape mismatch");
    AlgMat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = r.a[i] - y.a[i];
    return r;
}

bool alg_mat_is_zero(const AlgMat& m) {
    for (const auto& e : m.a)
        if (!e.is_zero()) return false;
    return true;
}

AlgElem eval_ncpoly(const NCPoly& p, const std::vector<AlgElem>& values, const BaseAlgebra& alg) {
    if (static_cast<int>(values.size()) != p.alphabet_size())
        throw ContractError("value count mismatch");
    AlgElem out = alg.zero();
    for (const auto& [w, c] : p.terms()) {
        AlgElem prod = alg.one();
        for (int g : w) prod = prod * values[static_cast<size_t>(g)];
        out = out + prod * c;
    }
    return out;
}

AlgMat eval_ncpoly_mat(const NCPoly& p, const std::vector<AlgMat>& values,
                       const BaseAlgebra& alg) {
    if (static_cast<int>(values.size()) != p.alphabet_size())
        throw ContractError("value count mismatch");
    int n = values.empty() ? 1 : values.front().rows;
    AlgMat out(n, n, alg);
    for (const auto& [w, c] : p.terms()) {
        AlgMat prod = AlgMat::identity(n, alg);
        for (int g : w) prod = alg_mat_mul(prod, values[static_cast<size_t>(g)]);
        for (auto& e : prod.a) e = e * c;
        out = alg_mat_add(out, prod);
    }
    return out;
}

AlgebraMorphism::AlgebraMorphism(BaseAlgebraPtr source, BaseAlgebraPtr target,
                                 std::vector<AlgElem> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != source_->dim())
        throw ContractError("image count mismatch");
    // unital and multiplicative on the basis
    AlgElem u = target_->zero();
    for (int i = 0; i < source_->dim(); ++i)
        u = u + images_[static_cast<size_t>(i)] * source_->unit_coords()[static_cast<size_t>(i)];
    if (!(u == target_->one())) throw ContractError("morphism does not preserve the unit");
    for (int i = 0; i < source_->dim(); ++i)
        for (int j = 0; j < source_->dim(); ++j) {
            AlgElem lhs = images_[static_cast<size_t>(i)] * images_[static_cast<size_t>(j)];
            AlgElem rhs = target_->zero();
            const auto& row = source_->product_row(i, j);
            for (int k = 0; k < source_->dim(); ++k)
                rhs = rhs + images_[static_cast<size_t>(k)] * row[static_cast<size_t>(k)];
            if (!(lhs == rhs)) throw ContractError("morphism is not multiplicative");
        }
}

AlgElem AlgebraMorphism::apply(const AlgElem& x) const {
    AlgElem out = target_->zero();
    for (int i = 0; i < source_->dim(); ++i)
        out = out + images_[static_cast<size_t>(i)] * x.coords()[static_cast<size_t>(i)];
    return out;
}

}  // namespace ncformal
