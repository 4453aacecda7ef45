#include "ncformal/quiver.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>

namespace ncformal {

Quiver::Quiver(int k, std::vector<std::pair<int, int>> a) : vertices(k), arrows(std::move(a)) {
    if (k < 0) throw ContractError("negative vertex count");
    for (const auto& [s, t] : arrows)
        if (s < 1 || s > k || t < 1 || t > k)
            throw ContractError("arrow endpoint outside vertex range");
}

int Path::start(const Quiver& q) const {
    if (arrow_ids.empty()) return base;
    return q.arrows[static_cast<size_t>(arrow_ids.front())].first;
}

int Path::end(const Quiver& q) const {
    if (arrow_ids.empty()) return base;
    return q.arrows[static_cast<size_t>(arrow_ids.back())].second;
}

PathAlgebraElement PathAlgebraElement::one(QuiverPtr q) {
    PathAlgebraElement e(q);
    for (int v = 1; v <= q->vertices; ++v) e.add_term(Path::trivial(v), Rational(1));
    return e;
}

PathAlgebraElement PathAlgebraElement::path(QuiverPtr q, const Path& p, const Rational& c) {
    PathAlgebraElement e(std::move(q));
    e.add_term(p, c);
    return e;
}

PathAlgebraElement PathAlgebraElement::vertex(QuiverPtr q, int v) {
    if (v < 1 || v > q->vertices) throw ContractError("vertex outside range");
    return path(std::move(q), Path::trivial(v));
}

PathAlgebraElement PathAlgebraElement::arrow(QuiverPtr q, int arrow_id) {
    if (arrow_id < 0 || arrow_id >= q->arrow_count()) throw ContractError("arrow outside range");
    return path(std::move(q), Path{0, {arrow_id}});
}

void PathAlgebraElement::add_term(const Path& p, const Rational& c) {
    if (ncformal::is_zero(c)) return;
    // composability of consecutive arrows
    if (quiver_) {
        for (size_t i = 0; i + 1 < p.arrow_ids.size(); ++i) {
            int cur_end = quiver_->arrows[static_cast<size_t>(p.arrow_ids[i])].second;
            int next_start = quiver_->arrows[static_cast<size_t>(p.arrow_ids[i + 1])].first;
            if (cur_end != next_start) throw ContractError("non-composable path");
        }
    }
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, c);
    } else {
        it->second += c;
        if (ncformal::is_zero(it->second)) terms_.erase(it);
    }
}

PathAlgebraElement PathAlgebraElement::operator+(const PathAlgebraElement& o) const {
    PathAlgebraElement r = *this;
    if (!r.quiver_) r.quiver_ = o.quiver_;
    for (const auto& [p, c] : o.terms_) r.add_term(p, c);
    return r;
}

PathAlgebraElement PathAlgebraElement::operator-(const PathAlgebraElement& o) const {
    PathAlgebraElement r = *this;
    if (!r.quiver_) r.quiver_ = o.quiver_;
    for (const auto& [p, c] : o.terms_) r.add_term(p, -c);
    return r;
}

PathAlgebraElement PathAlgebraElement::operator*(const Rational& c) const {
    PathAlgebraElement r(quiver_);
    if (ncformal::is_zero(c)) return r;
    for (const auto& [p, q] : terms_) r.add_term(p, q * c);
    return r;
}

PathAlgebraElement path_mul(const PathAlgebraElement& a, const PathAlgebraElement& b) {
    const QuiverPtr& qa = a.quiver();
    const QuiverPtr& qb = b.quiver();
    if (!qa || !qb) throw ContractError("path algebra element without quiver");
    if (qa != qb && !(*qa == *qb)) throw ContractError("quiver mismatch");
    const Quiver& q = *qa;

    PathAlgebraElement r(qa);
    for (const auto& [pa, ca] : a.terms())
        for (const auto& [pb, cb] : b.terms()) {
            // left concatenation: pa * pb applies pb first
            if (pb.end(q) != pa.start(q)) continue;
            Path prod;
            prod.base = pb.arrow_ids.empty() && pa.arrow_ids.empty() ? pb.base : 0;
            prod.arrow_ids = pb.arrow_ids;
            prod.arrow_ids.insert(prod.arrow_ids.end(), pa.arrow_ids.begin(), pa.arrow_ids.end());
            r.add_term(prod, ca * cb);
        }
    return r;
}

std::vector<Path> enumerate_paths(const Quiver& q, int from, int to, int max_length) {
    if (from < 1 || from > q.vertices || to < 1 || to > q.vertices)
        throw ContractError("vertex outside range");
    if (max_length < 0) throw ContractError("negative length bound");
    std::vector<Path> out;
    // breadth-first over partial paths, extending at the end vertex
    std::vector<Path> frontier{Path::trivial(from)};
    for (int len = 0; len <= max_length; ++len) {
        std::vector<Path> next;
        for (const Path& p : frontier) {
            if (p.end(q) == to) out.push_back(p);
            if (len == max_length) continue;
            for (int a = 0; a < q.arrow_count(); ++a)
                if (q.arrows[static_cast<size_t>(a)].first == p.end(q)) {
                    Path extended = p;
                    extended.arrow_ids.push_back(a);
                    next.push_back(std::move(extended));
                }
        }
        frontier = std::move(next);
    }
    return out;
}

DimVector::DimVector(std::vector<int> c) : components(std::move(c)) {
    for (int x : components)
        if (x < 0) throw ContractError("negative dimension vector entry");
}

int DimVector::total() const {
    int t = 0;
    for (int x : components) t += x;
    return t;
}

EulerForm euler_form(const Quiver& q) {
    EulerForm f;
    f.matrix.assign(static_cast<size_t>(q.vertices),
                    std::vector<long>(static_cast<size_t>(q.vertices), 0));
    for (int i = 0; i < q.vertices; ++i) f.matrix[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    for (const auto& [s, t] : q.arrows)
        f.matrix[static_cast<size_t>(s - 1)][static_cast<size_t>(t - 1)] -= 1;
    return f;
}

long EulerForm::evaluate(const DimVector& a, const DimVector& b) const {
    if (a.size() != static_cast<int>(matrix.size()) || b.size() != static_cast<int>(matrix.size()))
        throw ContractError("dimension vector length mismatch");
    long total = 0;
    for (size_t i = 0; i < matrix.size(); ++i)
        for (size_t j = 0; j < matrix.size(); ++j)
            total += a.components[i] * matrix[i][j] * b.components[j];
    return total;
}

ExtendedQuiver extend_quiver(const Quiver& q, int n, bool localized) {
    if (n < 1) throw ContractError("extension needs n >= 1");
    return ExtendedQuiver{q, n, localized};
}

Quiver ExtendedQuiver::as_quiver() const {
    std::vector<std::pair<int, int>> arrows;
    for (const auto& [s, t] : base.arrows) arrows.emplace_back(s + 1, t + 1);
    for (int i = 1; i <= base.vertices; ++i)
        for (int j = 1; j <= n; ++j) arrows.emplace_back(1, i + 1);
    if (localized)
        for (int i = 1; i <= base.vertices; ++i)
            for (int j = 1; j <= n; ++j) arrows.emplace_back(i + 1, 1);
    return Quiver(base.vertices + 1, std::move(arrows));
}

int ExtendedQuiver::x_arrow_id(int i, int j) const {
    if (i < 1 || i > base.vertices || j < 1 || j > n)
        throw ContractError("x-arrow label outside range");
    return base.arrow_count() + (i - 1) * n + (j - 1);
}

int ExtendedQuiver::y_arrow_id(int i, int j) const {
    if (!localized) throw ContractError("y-arrows exist only in the localized extension");
    if (i < 1 || i > base.vertices || j < 1 || j > n)
        throw ContractError("y-arrow label outside range");
    return base.arrow_count() + base.vertices * n + (i - 1) * n + (j - 1);
}

EulerForm euler_form_extended(const Quiver& q, int n) {
    return euler_form(extend_quiver(q, n).as_quiver());
}

long euler_block_formula(const Quiver& q, int n, const DimVector& atilde,
                         const DimVector& btilde) {
    if (atilde.size() != q.vertices + 1 || btilde.size() != q.vertices + 1)
        throw ContractError("dimension vector length mismatch");
    long a0 = atilde[0], b0 = btilde[0];
    DimVector alpha(std::vector<int>(atilde.components.begin() + 1, atilde.components.end()));
    DimVector beta(std::vector<int>(btilde.components.begin() + 1, btilde.components.end()));
    long beta_total = beta.total();
    return a0 * b0 - static_cast<long>(n) * a0 * beta_total + euler_form(q).evaluate(alpha, beta);
}

long rep_dim(const Quiver& q, const DimVector& alpha) {
    if (alpha.size() != q.vertices) throw ContractError("dimension vector length mismatch");
    long total = 0;
    for (const auto& [s, t] : q.arrows)
        total += static_cast<long>(alpha[s - 1]) * alpha[t - 1];
    return total;
}

long bundle_dim(int n, const Quiver& q, const DimVector& alpha) {
    if (alpha.total() != n) throw ContractError("dimension vector total must equal n");
    long sum_sq = 0;
    for (int a : alpha.components) sum_sq += static_cast<long>(a) * a;
    return static_cast<long>(n) * n - sum_sq + rep_dim(q, alpha);
}

std::vector<DimVector> enumerate_dimvectors(int k, int n) {
    if (k < 0 || n < 0) throw ContractError("negative arguments");
    std::vector<DimVector> out;
    if (k == 0) {
        if (n == 0) out.push_back(DimVector(std::vector<int>{}));
        return out;
    }
    std::vector<int> cur(static_cast<size_t>(k), 0);
    std::function<void(int, int)> rec = [&](int pos, int rest) {
        if (pos == k - 1) {
            cur[static_cast<size_t>(pos)] = rest;
            out.push_back(DimVector(cur));
            return;
        }
        for (int v = rest; v >= 0; --v) {
            cur[static_cast<size_t>(pos)] = v;
            rec(pos + 1, rest - v);
        }
    };
    rec(0, n);
    return out;
}

bool numerical_condition(const std::vector<int>& e, const std::vector<int>& f,
                         const DimVector& alpha) {
    if (static_cast<int>(e.size()) != alpha.size() || static_cast<int>(f.size()) != alpha.size())
        throw ContractError("length mismatch");
    long le = 0, lf = 0;
    for (size_t i = 0; i < e.size(); ++i) {
        le += static_cast<long>(e[i]) * alpha.components[i];
        lf += static_cast<long>(f[i]) * alpha.components[i];
    }
    return le == lf;
}

LocalizationData localization_data(const Quiver& q, int n) {
    LocalizationData data;
    data.extended = extend_quiver(q, n, true);
    data.carrier = std::make_shared<Quiver>(data.extended.as_quiver());
    int k = q.vertices;

    data.sigma_matrix.assign(static_cast<size_t>(k), std::vector<std::string>());
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= n; ++j)
            data.sigma_matrix[static_cast<size_t>(i - 1)].push_back(
                "x_" + std::to_string(i) + std::to_string(j));
    data.inverse_matrix.assign(static_cast<size_t>(n), std::vector<std::string>());
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= k; ++i)
            data.inverse_matrix[static_cast<size_t>(j - 1)].push_back(
                "y_" + std::to_string(i) + std::to_string(j));

    auto x_elem = [&](int i, int j) {
        return PathAlgebraElement::arrow(data.carrier, data.extended.x_arrow_id(i, j));
    };
    auto y_elem = [&](int i, int j) {
        return PathAlgebraElement::arrow(data.carrier, data.extended.y_arrow_id(i, j));
    };

    // M.N = diag(v_1, ..., v_k): entry (i,j) is sum_q x_{iq} y_{jq}
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            PathAlgebraElement lhs = PathAlgebraElement::zero(data.carrier);
            for (int qq = 1; qq <= n; ++qq) lhs = lhs + path_mul(x_elem(i, qq), y_elem(j, qq));
            PathAlgebraElement rhs = PathAlgebraElement::zero(data.carrier);
            if (i == j) rhs = PathAlgebraElement::vertex(data.carrier, i + 1);
            data.relations.push_back({lhs, rhs,
                                      "MN_" + std::to_string(i) + std::to_string(j)});
        }
    // N.M = v_0 * identity: entry (p,q) is sum_i y_{ip} x_{iq}
    for (int p = 1; p <= n; ++p)
        for (int qq = 1; qq <= n; ++qq) {
            PathAlgebraElement lhs = PathAlgebraElement::zero(data.carrier);
            for (int i = 1; i <= k; ++i) lhs = lhs + path_mul(y_elem(i, p), x_elem(i, qq));
            PathAlgebraElement rhs = PathAlgebraElement::zero(data.carrier);
            if (p == qq) rhs = PathAlgebraElement::vertex(data.carrier, 1);
            data.relations.push_back({lhs, rhs,
                                      "NM_" + std::to_string(p) + std::to_string(qq)});
        }
    return data;
}

namespace {

// evaluate a path algebra element at a representation as a single matrix,
// nonzero only when every path in it shares start and end vertices
QMat evaluate_path_elem(const PathAlgebraElement& elem, const ExtendedRep& rep, const Quiver& q,
                        int from, int to) {
    int rows = rep.dims[to - 1];
    int cols = rep.dims[from - 1];
    QMat acc(rows, cols);
    for (const auto& [p, c] : elem.terms()) {
        if (p.start(q) != from || p.end(q) != to) continue;
        QMat m = QMat::identity(cols);
        int cur = from;
        for (int aid : p.arrow_ids) {
            auto it = rep.arrow_matrices.find(aid);
            if (it == rep.arrow_matrices.end()) throw ContractError("missing arrow matrix");
            m = mat_mul(it->second, m);
            cur = q.arrows[static_cast<size_t>(aid)].second;
        }
        (void)cur;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) acc.at(i, j) += c * m.at(i, j);
    }
    return acc;
}

}  // namespace

bool check_localization_point(const LocalizationData& data, const ExtendedRep& rep) {
    const Quiver& q = *data.carrier;
    if (rep.dims.size() != q.vertices) throw ContractError("dimension vector length mismatch");
    for (const auto& [aid, m] : rep.arrow_matrices) {
        if (aid < 0 || aid >= q.arrow_count()) throw ContractError("arrow id outside range");
        const auto& [s, t] = q.arrows[static_cast<size_t>(aid)];
        if (m.rows != rep.dims[t - 1] || m.cols != rep.dims[s - 1])
            throw ContractError("arrow matrix shape mismatch");
    }
    for (const auto& rel : data.relations) {
        // both sides of each relation connect a single (from, to) pair
        int from = 0, to = 0;
        const PathAlgebraElement& probe = rel.lhs.is_zero() ? rel.rhs : rel.lhs;
        if (probe.is_zero()) continue;
        from = probe.terms().begin()->first.start(q);
        to = probe.terms().begin()->first.end(q);
        QMat l = evaluate_path_elem(rel.lhs, rep, q, from, to);
        QMat r = evaluate_path_elem(rel.rhs, rep, q, from, to);
        if (!(l == r)) return false;
    }
    return true;
}

Quiver quiver_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad quiver JSON: ") + e.what());
    }
    if (!j.contains("vertices") || !j.contains("arrows"))
        throw ParseError("quiver JSON needs 'vertices' and 'arrows'");
    int k = j["vertices"].get<int>();
    std::vector<std::pair<int, int>> arrows;
    for (const auto& a : j["arrows"]) {
        if (!a.is_array() || a.size() != 2) throw ParseError("arrow must be a pair [s,t]");
        arrows.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
    try {
        return Quiver(k, std::move(arrows));
    } catch (const ContractError& e) {
        throw ParseError(std::string("bad quiver: ") + e.what());
    }
}

std::string quiver_to_json_text(const Quiver& q) {
    nlohmann::json j;
    j["vertices"] = q.vertices;
    auto arr = nlohmann::json::array();
    for (const auto& [s, t] : q.arrows) arr.push_back({s, t});
    j["arrows"] = arr;
    return j.dump();
}

}  // namespace ncformal
