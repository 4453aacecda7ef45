#include "ncformal/hallbasis.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncformal {

namespace {

// encode a degree-k word over d letters as a radix-d integer
long word_key(const Word& w, int d) {
    long key = 0;
    for (int g : w) key = key * d + g;
    return key;
}

SparseVec poly_to_vec(const NCPoly& p, int d) {
    SparseVec v;
    for (const auto& [w, c] : p.terms()) v[word_key(w, d)] = c;
    return v;
}

}  // namespace

HallBasis::HallBasis(int d, int max_weight) : d_(d), max_weight_(max_weight) {
    if (d < 1 || max_weight < 1) throw ContractError("basis needs d >= 1 and max weight >= 1");
    layers_.resize(static_cast<size_t>(max_weight) + 1);

    for (int g = 0; g < d; ++g) {
        HallElement e;
        e.gen = g;
        e.weight = 1;
        e.ord = 0;
        e.index = static_cast<int>(elements_.size());
        layers_[1].push_back(e.index);
        elements_.push_back(e);
    }

    for (int k = 2; k <= max_weight; ++k) {
        // candidates [t,w]: w < t, and v <= w when t = [u,v]
        std::vector<std::pair<int, int>> cand;  // (w, t), the layer sort key
        for (int l = 1; l < k; ++l) {
            for (int t : layers_[static_cast<size_t>(l)]) {
                const HallElement& te = elements_[static_cast<size_t>(t)];
                for (int w : layers_[static_cast<size_t>(k - l)]) {
                    if (!(w < t)) continue;
                    if (!te.is_leaf() && !(te.right <= w)) continue;
                    cand.emplace_back(w, t);
                }
            }
        }
        std::sort(cand.begin(), cand.end());
        for (const auto& [w, t] : cand) {
            HallElement e;
            e.left = t;
            e.right = w;
            e.weight = k;
            e.ord = k - 1;
            e.index = static_cast<int>(elements_.size());
            layers_[static_cast<size_t>(k)].push_back(e.index);
            by_children_[{t, w}] = e.index;
            elements_.push_back(e);
        }
    }
}

const std::vector<int>& HallBasis::layer(int weight) const {
    if (weight < 1 || weight > max_weight_) throw ContractError("layer weight outside registry");
    return layers_[static_cast<size_t>(weight)];
}

int HallBasis::bracket_number(int index) const {
    const HallElement& e = element(index);
    return e.is_leaf() ? 0 : index - d_ + 1;
}

std::string HallBasis::sexpr(int index) const {
    const HallElement& e = element(index);
    if (e.is_leaf()) return "x" + std::to_string(e.gen + 1);
    return "(" + sexpr(e.left) + " " + sexpr(e.right) + ")";
}

std::string HallBasis::pretty(int index) const {
    const HallElement& e = element(index);
    if (e.is_leaf()) return "x" + std::to_string(e.gen + 1);
    return "[" + pretty(e.left) + "," + pretty(e.right) + "]";
}

int HallBasis::find_bracket(int left, int right) const {
    auto it = by_children_.find({left, right});
    return it == by_children_.end() ? -1 : it->second;
}

const NCPoly& HallBasis::expand_to_words(int index) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = expansion_cache_.find(index);
        if (it != expansion_cache_.end()) return it->second;
    }
    const HallElement& e = element(index);
    NCPoly p(d_);
    if (e.is_leaf()) {
        p = NCPoly::generator(d_, e.gen);
    } else {
        p = nc_commutator(expand_to_words(e.left), expand_to_words(e.right));
    }
    std::lock_guard<std::mutex> lock(mu_);
    return expansion_cache_.emplace(index, std::move(p)).first->second;
}

const EchelonSolver& HallBasis::layer_solver(int weight) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = solver_cache_.find(weight);
        if (it != solver_cache_.end()) return *it->second;
    }
    auto solver = std::make_unique<EchelonSolver>(true);
    for (int idx : layer(weight)) {
        if (!solver->insert(poly_to_vec(expand_to_words(idx), d_)))
            throw std::logic_error("basis layer expansions are dependent");
    }
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = solver_cache_.emplace(weight, std::move(solver));
    (void)inserted;
    return *it->second;
}

const std::map<int, Rational>& HallBasis::normalize_bracket(int a_index, int b_index) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = bracket_cache_.find({a_index, b_index});
        if (it != bracket_cache_.end()) return it->second;
    }
    const HallElement& a = element(a_index);
    const HallElement& b = element(b_index);
    int k = a.weight + b.weight;
    if (k > max_weight_) throw ContractError("bracket weight exceeds basis registry");

    std::map<int, Rational> result;
    if (a_index == b_index) {
        // zero
    } else if (int hit = find_bracket(a_index, b_index); hit >= 0) {
        result[hit] = Rational(1);
    } else if (int mirror = find_bracket(b_index, a_index); mirror >= 0) {
        result[mirror] = Rational(-1);
    } else {
        // solve against the word expansions of the target layer
        NCPoly rhs = nc_commutator(expand_to_words(a_index), expand_to_words(b_index));
        const EchelonSolver& solver = layer_solver(k);
        auto combo = solver.solve(poly_to_vec(rhs, d_));
        if (!combo) throw std::logic_error("bracket expansion escaped the Lie span");
        const auto& lay = layer(k);
        for (size_t i = 0; i < combo->size(); ++i)
            if (!is_zero((*combo)[i])) result[lay[i]] = (*combo)[i];
    }
    std::lock_guard<std::mutex> lock(mu_);
    return bracket_cache_.emplace(std::make_pair(a_index, b_index), std::move(result))
        .first->second;
}

std::shared_ptr<const HallBasis> generate_basis(int d, int max_weight) {
    return std::make_shared<HallBasis>(d, max_weight);
}

NCPoly expand_to_words(const HallBasis& basis, const LieElement& a) {
    NCPoly p(basis.alphabet_size());
    for (const auto& [idx, c] : a.terms) p = p + basis.expand_to_words(idx) * c;
    return p;
}

LieElement bracket_normalize(const HallBasis& basis, const LieElement& a, const LieElement& b) {
    LieElement out;
    for (const auto& [ia, ca] : a.terms)
        for (const auto& [ib, cb] : b.terms) {
            Rational c = ca * cb;
            for (const auto& [idx, q] : basis.normalize_bracket(ia, ib)) out.add(idx, c * q);
        }
    return out;
}

int lie_rank(int d, int k) {
    if (d < 1 || k < 1) throw ContractError("lie_rank needs d,k >= 1");
    EchelonSolver ech(false);
    // iterate over all d^k nested commutators [r_1,[r_2,...,[r_{k-1},r_k]...]]
    std::vector<int> seq(static_cast<size_t>(k), 0);
    while (true) {
        NCPoly e = NCPoly::generator(d, seq[static_cast<size_t>(k - 1)]);
        for (int i = k - 2; i >= 0; --i)
            e = nc_commutator(NCPoly::generator(d, seq[static_cast<size_t>(i)]), e);
        if (!e.is_zero()) {
            SparseVec v;
            for (const auto& [w, c] : e.terms()) v[word_key(w, d)] = c;
            ech.insert(v);
        }
        int pos = k - 1;
        while (pos >= 0 && seq[static_cast<size_t>(pos)] == d - 1) {
            seq[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++seq[static_cast<size_t>(pos)];
    }
    return ech.rank();
}

}  // namespace ncformal
