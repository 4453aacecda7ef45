#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "ncformal/hallbasis.hpp"
#include "ncformal/ncpoly.hpp"

namespace ncformal {

// Multiset of basis elements of weight >= 2, kept sorted; the bracket part
// M_lambda of a normal-form term. ord = sum of entry ords.
class BracketMonomial {
  public:
    BracketMonomial() = default;
    BracketMonomial(std::vector<int> entries, const HallBasis& basis);

    const std::vector<int>& entries() const { return entries_; }
    int ord() const { return ord_; }
    int weight() const { return ord_ + static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }

    bool operator<(const BracketMonomial& o) const { return entries_ < o.entries_; }
    bool operator==(const BracketMonomial& o) const { return entries_ == o.entries_; }

  private:
    std::vector<int> entries_;
    int ord_ = 0;
};

// Normal form sum_lambda [[f_lambda]] M_lambda with commutative coefficients.
class PBWElement {
  public:
    PBWElement(int d, std::shared_ptr<const HallBasis> basis)
        : d_(d), basis_(std::move(basis)) {}

    int alphabet_size() const { return d_; }
    const std::shared_ptr<const HallBasis>& basis() const { return basis_; }
    const std::map<BracketMonomial, CommPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // max over terms of deg f_lambda + weight(lambda); -1 for zero
    int degree() const;

    void add_term(const BracketMonomial& m, const CommPoly& f);
    const CommPoly* coefficient(const BracketMonomial& m) const;

    PBWElement operator+(const PBWElement& o) const;
    PBWElement operator-(const PBWElement& o) const;
    bool operator==(const PBWElement& o) const { return d_ == o.d_ && terms_ == o.terms_; }

  private:
    int d_;
    std::shared_ptr<const HallBasis> basis_;
    std::map<BracketMonomial, CommPoly> terms_;
};

// One bilinear differential operator with polynomial coefficients:
// (f,g) -> sum over terms of coeff(x) * d^alpha f * d^beta g.
struct COperatorTerm {
    CommPoly coeff;
    Exponents alpha;
    Exponents beta;
};

struct BilinearOperatorEntry {
    BracketMonomial target;
    std::vector<COperatorTerm> terms;  // sorted by (alpha, beta), zero coeffs omitted
    bool stabilized = false;
    int bound = 0;

    CommPoly apply(const CommPoly& f, const CommPoly& g) const;
    LocalizedElement apply(const LocalizedElement& f, const LocalizedElement& g) const;
    bool same_operator(const BilinearOperatorEntry& o) const;
};

// Truncated formal section over the basic open X(center): finitely many
// terms [[f_lambda]] M_lambda with localized coefficients, ord(lambda) < K.
class FormalSection {
  public:
    FormalSection(int d, std::shared_ptr<const HallBasis> basis, CommPoly center, int truncation);

    int alphabet_size() const { return d_; }
    const CommPoly& center() const { return center_; }
    int truncation() const { return trunc_; }
    const std::shared_ptr<const HallBasis>& basis() const { return basis_; }
    const std::map<BracketMonomial, LocalizedElement>& terms() const { return terms_; }

    void add_term(const BracketMonomial& m, const LocalizedElement& g);
    bool operator==(const FormalSection& o) const;

  private:
    int d_;
    std::shared_ptr<const HallBasis> basis_;
    CommPoly center_;
    int trunc_;
    std::map<BracketMonomial, LocalizedElement> terms_;
};

// Straightening engine plus operator-extraction caches bound to one basis
// registry. Caches fill lazily under a mutex; fills are idempotent.
class PBWContext {
  public:
    explicit PBWContext(std::shared_ptr<const HallBasis> basis);

    const HallBasis& basis() const { return *basis_; }
    const std::shared_ptr<const HallBasis>& basis_ptr() const { return basis_; }

    // Straighten a product of basis elements (given by global indices) into
    // sorted monomials. Monomials of ord > cutoff are dropped; ord never
    // decreases along rewriting, so the cutoff is sound.
    const std::map<std::vector<int>, Rational>& straighten(const std::vector<int>& seq,
                                                           int cutoff) const;

    // Family of operators C_{lambda mu}^{nu} for all nu with ord <= cutoff,
    // interpolated on monomial pairs of degree <= bound.
    using OperatorFamily = std::map<BracketMonomial, BilinearOperatorEntry>;
    OperatorFamily extract_family(const BracketMonomial& lambda, const BracketMonomial& mu,
                                  int cutoff, int bound) const;

    // Raises the interpolation bound until two consecutive bounds agree.
    // Throws ContractError when no stable family is found below the cap.
    OperatorFamily stabilized_family(const BracketMonomial& lambda, const BracketMonomial& mu,
                                     int cutoff, int min_bound = 2, int max_bound = 10) const;

  private:
    using FamilyKey = std::tuple<std::vector<int>, std::vector<int>, int>;

    std::shared_ptr<const HallBasis> basis_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, std::vector<int>>, std::map<std::vector<int>, Rational>>
        straighten_cache_;
    mutable std::map<FamilyKey, std::pair<OperatorFamily, int>> family_cache_;
};

// --- operations ----------------------------------------------------------

PBWElement pbw_normalize(const PBWContext& ctx, const NCPoly& p);
NCPoly pbw_expand(const PBWElement& e);

// Largest k with p in F^{-k}; nullopt for p = 0 (degree +infinity).
std::optional<int> filtration_degree(const PBWContext& ctx, const NCPoly& p);

// Product in the K-th truncation: terms of ord >= K are dropped.
PBWElement truncated_mul(const PBWContext& ctx, const PBWElement& a, const PBWElement& b, int K);

BilinearOperatorEntry extract_C_operator(const PBWContext& ctx, const BracketMonomial& lambda,
                                         const BracketMonomial& mu, const BracketMonomial& nu,
                                         int degree_bound);

// Evaluates both operator compositions of the associativity constraint at nu
// on each sample triple and compares them (and the direct triple product)
// exactly.
bool check_associativity_constraint(const PBWContext& ctx, const BracketMonomial& l1,
                                    const BracketMonomial& l2, const BracketMonomial& l3,
                                    const BracketMonomial& nu,
                                    const std::vector<std::array<CommPoly, 3>>& samples);

FormalSection formal_section_mul(const PBWContext& ctx, const FormalSection& a,
                                 const FormalSection& b);

// Sections with polynomial coefficients, for comparison against truncated_mul.
FormalSection section_from_pbw(const PBWElement& e, const CommPoly& center, int K);

}  // namespace ncformal
