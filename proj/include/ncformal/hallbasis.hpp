#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ncformal/linalg.hpp"
#include "ncformal/ncpoly.hpp"

namespace ncformal {

// One element of the layered bracket basis of the free Lie algebra on d
// generators. Leaves are the generators; a bracket [t,w] of weight k keeps
// references to its halves by global index.
struct HallElement {
    int left = -1;   // global index of t, -1 for leaves
    int right = -1;  // global index of w, -1 for leaves
    int gen = -1;    // 0-based generator index, leaves only
    int weight = 0;  // k for elements of layer k
    int ord = 0;     // weight - 1, number of brackets
    int index = 0;   // global position in the total order

    bool is_leaf() const { return left < 0; }
};

// The layered basis B = B_1 u B_2 u ... u B_K, generated eagerly and then
// frozen. Layer rule for k >= 2: [t,w] with t in B_l, w in B_{k-l}, w < t,
// and v <= w whenever t = [u,v]. Within a layer [t,w] < [t',w'] iff w < w'
// or (w = w' and t < t'); lower layers precede higher ones, so comparison of
// elements is comparison of global indices.
//
// Normalization caches are filled lazily under a mutex and behave as if each
// entry were computed exactly once; everything else is immutable after
// construction.
class HallBasis {
  public:
    HallBasis(int d, int max_weight);

    int alphabet_size() const { return d_; }
    int max_weight() const { return max_weight_; }

    const HallElement& element(int index) const { return elements_.at(static_cast<size_t>(index)); }
    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<int>& layer(int weight) const;  // global indices of B_weight
    int layer_size(int weight) const { return static_cast<int>(layer(weight).size()); }

    // 1-based position within the numbering b_1, b_2, ... of the elements of
    // weight >= 2; 0 for leaves.
    int bracket_number(int index) const;

    std::string sexpr(int index) const;   // nested pairs, e.g. "((x2 x1) x1)"
    std::string pretty(int index) const;  // bracket notation, e.g. "[[x2,x1],x1]"

    // word expansion inside the free associative algebra (cached)
    const NCPoly& expand_to_words(int index) const;

    // basis expansion of [a_index, b_index]; indices of the result live in
    // the layer of weight weight(a)+weight(b)
    const std::map<int, Rational>& normalize_bracket(int a_index, int b_index) const;

  private:
    int find_bracket(int left, int right) const;  // -1 when [left,right] is not basic
    const EchelonSolver& layer_solver(int weight) const;

    int d_;
    int max_weight_;
    std::vector<HallElement> elements_;
    std::vector<std::vector<int>> layers_;      // [weight] -> global indices
    std::map<std::pair<int, int>, int> by_children_;

    mutable std::mutex mu_;
    mutable std::map<int, NCPoly> expansion_cache_;
    mutable std::map<int, std::unique_ptr<EchelonSolver>> solver_cache_;
    mutable std::map<std::pair<int, int>, std::map<int, Rational>> bracket_cache_;
};

// Linear combination of basis elements, keyed by global index.
struct LieElement {
    std::map<int, Rational> terms;

    void add(int index, const Rational& c) {
        auto it = terms.find(index);
        if (it == terms.end()) {
            if (!is_zero(c)) terms.emplace(index, c);
        } else {
            it->second += c;
            if (is_zero(it->second)) terms.erase(it);
        }
    }
    bool operator==(const LieElement& o) const { return terms == o.terms; }
};

std::shared_ptr<const HallBasis> generate_basis(int d, int max_weight);

NCPoly expand_to_words(const HallBasis& basis, const LieElement& a);

// Basis expansion of the bracket [a,b]. Requires all weight sums to stay
// within the registered max weight.
LieElement bracket_normalize(const HallBasis& basis, const LieElement& a, const LieElement& b);

// Independent oracle: rank over the rationals of the span of all fully
// nested commutators [r_1,[r_2,...,[r_{k-1},r_k]...]] of k generators inside
// the degree-k piece of the free algebra. Brute force.
int lie_rank(int d, int k);

}  // namespace ncformal
