#include "ncformal/linalg.hpp"

#include <stdexcept>

namespace ncformal {

void sparse_axpy(SparseVec& dst, const Rational& c, const SparseVec& src) {
    if (is_zero(c)) return;
    for (const auto& [idx, val] : src) {
        auto it = dst.find(idx);
        if (it == dst.end()) {
            dst.emplace(idx, c * val);
        } else {
            it->second += c * val;
            if (is_zero(it->second)) dst.erase(it);
        }
    }
}

bool EchelonSolver::insert(const SparseVec& v) {
    int my_index = inserted_++;
    SparseVec w = v;
    std::map<int, Rational> combo;
    if (track_) combo[my_index] = Rational(1);

    for (const auto& row : rows_) {
        auto it = w.find(row.pivot);
        if (it == w.end()) continue;
        Rational c = -it->second;
        sparse_axpy(w, c, row.vec);
        if (track_) {
            for (const auto& [k, q] : row.combo) {
                Rational& slot = combo[k];
                slot += c * q;
                if (is_zero(slot)) combo.erase(k);
            }
        }
    }
    if (w.empty()) return false;

    // normalize leading coefficient to 1
    long pivot = w.begin()->first;
    Rational lead = w.begin()->second;
    for (auto& [idx, val] : w) val /= lead;
    if (track_)
        for (auto& [k, q] : combo) q /= lead;

    rows_.push_back(Row{std::move(w), std::move(combo), pivot});
    return true;
}

std::optional<std::vector<Rational>> EchelonSolver::solve(const SparseVec& b) const {
    if (!track_) throw std::logic_error("EchelonSolver::solve without combination tracking");
    SparseVec w = b;
    std::map<int, Rational> combo;
    for (const auto& row : rows_) {
        auto it = w.find(row.pivot);
        if (it == w.end()) continue;
        Rational c = it->second;
        sparse_axpy(w, -c, row.vec);
        for (const auto& [k, q] : row.combo) {
            Rational& slot = combo[k];
            slot += c * q;
            if (is_zero(slot)) combo.erase(k);
        }
    }
    if (!w.empty()) return std::nullopt;
    std::vector<Rational> out(static_cast<size_t>(inserted_), Rational(0));
    for (const auto& [k, q] : combo) out[static_cast<size_t>(k)] = q;
    return out;
}

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat mat_mul(const QMat& x, const QMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    QMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Rational& v = x.at(i, k);
            if (is_zero(v)) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

QMat mat_add(const QMat& x, const QMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("mat_add: shape mismatch");
    QMat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
}

std::optional<QMat> mat_inverse(const QMat& m) {
    if (m.rows != m.cols) return std::nullopt;
    int n = m.rows;
    QMat a = m;
    QMat inv = QMat::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!is_zero(a.at(r, col))) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        if (piv != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        }
        Rational d = a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) /= d;
            inv.at(col, j) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            Rational c = a.at(r, col);
            if (is_zero(c)) continue;
            for (int j = 0; j < n; ++j) {
                a.at(r, j) -= c * a.at(col, j);
                inv.at(r, j) -= c * inv.at(col, j);
            }
        }
    }
    return inv;
}

}  // namespace ncformal
