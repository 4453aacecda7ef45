#include "ncformal/pbw.hpp"

#include <algorithm>
#include <climits>
#include <functional>

namespace ncformal {

namespace {

int seq_ord(const std::vector<int>& seq, const HallBasis& basis) {
    int ord = 0;
    for (int idx : seq) ord += basis.element(idx).ord;
    return ord;
}

Word word_from_exponents(const Exponents& e) {
    Word w;
    for (size_t i = 0; i < e.size(); ++i)
        for (int rep = 0; rep < e[i]; ++rep) w.push_back(static_cast<int>(i));
    return w;
}

// all exponent vectors of total degree <= bound, sorted by (degree, lex)
std::vector<Exponents> monomials_up_to(int d, int bound) {
    std::vector<Exponents> out;
    out.push_back(Exponents(static_cast<size_t>(d), 0));
    for (int deg = 1; deg <= bound; ++deg) {
        std::vector<Exponents> next;
        Exponents e(static_cast<size_t>(d), 0);
        // compositions of deg into d parts
        std::function<void(int, int)> rec = [&](int pos, int rest) {
            if (pos == d - 1) {
                e[static_cast<size_t>(pos)] = rest;
                next.push_back(e);
                return;
            }
            for (int v = rest; v >= 0; --v) {
                e[static_cast<size_t>(pos)] = v;
                rec(pos + 1, rest - v);
            }
        };
        rec(0, deg);
        std::sort(next.begin(), next.end());
        out.insert(out.end(), next.begin(), next.end());
    }
    return out;
}

// coefficient of d^s applied to x^a: product of falling factorials, 0 if s !<= a
Rational falling_coeff(const Exponents& a, const Exponents& s) {
    Rational r(1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (s[i] > a[i]) return Rational(0);
        for (int j = 0; j < s[i]; ++j) r *= Rational(a[i] - j);
    }
    return r;
}

CommPoly iterated_derivative(const CommPoly& f, const Exponents& alpha) {
    CommPoly r = f;
    for (size_t i = 0; i < alpha.size(); ++i)
        for (int rep = 0; rep < alpha[i]; ++rep) r = partial_derivative(r, static_cast<int>(i));
    return r;
}

LocalizedElement iterated_derivative(const LocalizedElement& f, const Exponents& alpha) {
    LocalizedElement r = f;
    for (size_t i = 0; i < alpha.size(); ++i)
        for (int rep = 0; rep < alpha[i]; ++rep) r = localized_derivative(r, static_cast<int>(i));
    return r;
}

bool componentwise_leq(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents exps_add(const Exponents& a, const Exponents& b) {
    Exponents r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Exponents exps_sub(const Exponents& a, const Exponents& b) {
    Exponents r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

}  // namespace

BracketMonomial::BracketMonomial(std::vector<int> entries, const HallBasis& basis)
    : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    for (int idx : entries_) {
        const HallElement& e = basis.element(idx);
        if (e.weight < 2) throw ContractError("bracket monomial entry of weight < 2");
        ord_ += e.ord;
    }
}

int PBWElement::degree() const {
    int deg = -1;
    for (const auto& [m, f] : terms_) deg = std::max(deg, f.degree() + m.weight());
    return deg;
}

void PBWElement::add_term(const BracketMonomial& m, const CommPoly& f) {
    if (f.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, f);
    } else {
        it->second = it->second + f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const CommPoly* PBWElement::coefficient(const BracketMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
}

PBWElement PBWElement::operator+(const PBWElement& o) const {
    if (d_ != o.d_) throw ContractError("alphabet mismatch");
    PBWElement r = *this;
    for (const auto& [m, f] : o.terms_) r.add_term(m, f);
    return r;
}

PBWElement PBWElement::operator-(const PBWElement& o) const {
    if (d_ != o.d_) throw ContractError("alphabet mismatch");
    PBWElement r = *this;
    for (const auto& [m, f] : o.terms_) r.add_term(m, -f);
    return r;
}

// --- straightening ---------------------------------------------------------

PBWContext::PBWContext(std::shared_ptr<const HallBasis> basis) : basis_(std::move(basis)) {}

const std::map<std::vector<int>, Rational>& PBWContext::straighten(const std::vector<int>& seq,
                                                                   int cutoff) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = straighten_cache_.find({cutoff, seq});
        if (it != straighten_cache_.end()) return it->second;
    }
    std::map<std::vector<int>, Rational> result;
    const HallBasis& b = *basis_;

    int ord = seq_ord(seq, b);
    if (ord <= cutoff) {
        // find the first adjacent descent
        int descent = -1;
        for (size_t i = 0; i + 1 < seq.size(); ++i)
            if (seq[i] > seq[i + 1]) {
                descent = static_cast<int>(i);
                break;
            }
        if (descent < 0) {
            result[seq] = Rational(1);
        } else {
            int u = seq[static_cast<size_t>(descent)];
            int w = seq[static_cast<size_t>(descent) + 1];

            std::vector<int> swapped = seq;
            std::swap(swapped[static_cast<size_t>(descent)],
                      swapped[static_cast<size_t>(descent) + 1]);
            for (const auto& [m, c] : straighten(swapped, cutoff)) {
                Rational& slot = result[m];
                slot += c;
                if (is_zero(slot)) result.erase(m);
            }

            // bracket branch raises ord by one; skip when it would be cut
            if (ord + 1 <= cutoff) {
                int bw = b.element(u).weight + b.element(w).weight;
                if (bw > b.max_weight())
                    throw ContractError("basis registry too small for straightening");
                for (const auto& [idx, q] : b.normalize_bracket(u, w)) {
                    std::vector<int> merged;
                    merged.reserve(seq.size() - 1);
                    merged.insert(merged.end(), seq.begin(), seq.begin() + descent);
                    merged.push_back(idx);
                    merged.insert(merged.end(), seq.begin() + descent + 2, seq.end());
                    for (const auto& [m, c] : straighten(merged, cutoff)) {
                        Rational& slot = result[m];
                        slot += q * c;
                        if (is_zero(slot)) result.erase(m);
                    }
                }
            }
        }
    }
    std::lock_guard<std::mutex> lock(mu_);
    return straighten_cache_.emplace(std::make_pair(cutoff, seq), std::move(result)).first->second;
}

namespace {

// split a sorted monomial into commutative exponents (leaf part) and the
// bracket tail, and accumulate into a PBW element
void accumulate_sorted(PBWElement& out, const std::vector<int>& mono, const Rational& c,
                       const HallBasis& basis) {
    int d = basis.alphabet_size();
    Exponents e(static_cast<size_t>(d), 0);
    std::vector<int> tail;
    for (int idx : mono) {
        if (idx < d)
            e[static_cast<size_t>(idx)] += 1;
        else
            tail.push_back(idx);
    }
    out.add_term(BracketMonomial(tail, basis), CommPoly::monomial(d, e, c));
}

PBWElement normalize_with_cutoff(const PBWContext& ctx, const NCPoly& p, int cutoff) {
    const HallBasis& basis = ctx.basis();
    if (p.alphabet_size() != basis.alphabet_size())
        throw ContractError("alphabet mismatch with basis registry");
    PBWElement out(p.alphabet_size(), ctx.basis_ptr());
    for (const auto& [w, c] : p.terms()) {
        for (const auto& [m, q] : ctx.straighten(w, cutoff))
            accumulate_sorted(out, m, c * q, basis);
    }
    return out;
}

}  // namespace

PBWElement pbw_normalize(const PBWContext& ctx, const NCPoly& p) {
    if (p.degree() > ctx.basis().max_weight())
        throw ContractError("basis registry too small for polynomial degree");
    return normalize_with_cutoff(ctx, p, INT_MAX);
}

NCPoly pbw_expand(const PBWElement& e) {
    const HallBasis& basis = *e.basis();
    int d = e.alphabet_size();
    NCPoly out(d);
    for (const auto& [m, f] : e.terms()) {
        NCPoly bracket_part = NCPoly::one(d);
        for (int idx : m.entries()) bracket_part = nc_mul(bracket_part, basis.expand_to_words(idx));
        for (const auto& [exps, c] : f.terms()) {
            NCPoly word_part = NCPoly::monomial(d, word_from_exponents(exps), c);
            out = out + nc_mul(word_part, bracket_part);
        }
    }
    return out;
}

std::optional<int> filtration_degree(const PBWContext& ctx, const NCPoly& p) {
    if (p.is_zero()) return std::nullopt;
    PBWElement e = pbw_normalize(ctx, p);
    int best = INT_MAX;
    for (const auto& [m, f] : e.terms()) best = std::min(best, m.ord());
    return best;
}

PBWElement truncated_mul(const PBWContext& ctx, const PBWElement& a, const PBWElement& b, int K) {
    if (a.is_zero() || b.is_zero()) return PBWElement(a.alphabet_size(), ctx.basis_ptr());
    if (a.degree() + b.degree() > ctx.basis().max_weight())
        throw ContractError("basis registry too small for truncated product");
    NCPoly product = nc_mul(pbw_expand(a), pbw_expand(b));
    return normalize_with_cutoff(ctx, product, K - 1);
}

// --- operator extraction ----------------------------------------------------

CommPoly BilinearOperatorEntry::apply(const CommPoly& f, const CommPoly& g) const {
    CommPoly out(f.nvars());
    for (const auto& t : terms) {
        CommPoly df = iterated_derivative(f, t.alpha);
        if (df.is_zero()) continue;
        CommPoly dg = iterated_derivative(g, t.beta);
        if (dg.is_zero()) continue;
        out = out + comm_mul(t.coeff, comm_mul(df, dg));
    }
    return out;
}

LocalizedElement BilinearOperatorEntry::apply(const LocalizedElement& f,
                                              const LocalizedElement& g) const {
    LocalizedElement out(CommPoly::zero(f.numerator().nvars()), 0, f.center());
    for (const auto& t : terms) {
        LocalizedElement df = iterated_derivative(f, t.alpha);
        if (df.is_zero()) continue;
        LocalizedElement dg = iterated_derivative(g, t.beta);
        if (dg.is_zero()) continue;
        out = out + (df * dg) * t.coeff;
    }
    return out;
}

bool BilinearOperatorEntry::same_operator(const BilinearOperatorEntry& o) const {
    if (!(target == o.target) || terms.size() != o.terms.size()) return false;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].alpha != o.terms[i].alpha || terms[i].beta != o.terms[i].beta ||
            !(terms[i].coeff == o.terms[i].coeff))
            return false;
    }
    return true;
}

PBWContext::OperatorFamily PBWContext::extract_family(const BracketMonomial& lambda,
                                                      const BracketMonomial& mu, int cutoff,
                                                      int bound) const {
    if (bound < 0) throw ContractError("extraction bound must be nonnegative");
    const HallBasis& b = *basis_;
    int d = b.alphabet_size();
    std::vector<Exponents> monos = monomials_up_to(d, bound);

    // straightened products of all monomial pairs, grouped by bracket part
    std::map<std::pair<size_t, size_t>, std::map<BracketMonomial, CommPoly>> table;
    for (size_t ai = 0; ai < monos.size(); ++ai)
        for (size_t bi = 0; bi < monos.size(); ++bi) {
            std::vector<int> seq;
            Word wa = word_from_exponents(monos[ai]);
            Word wb = word_from_exponents(monos[bi]);
            seq.insert(seq.end(), wa.begin(), wa.end());
            seq.insert(seq.end(), lambda.entries().begin(), lambda.entries().end());
            seq.insert(seq.end(), wb.begin(), wb.end());
            seq.insert(seq.end(), mu.entries().begin(), mu.entries().end());
            PBWElement grouped(d, basis_);
            for (const auto& [m, c] : straighten(seq, cutoff)) accumulate_sorted(grouped, m, c, b);
            auto& slot = table[{ai, bi}];
            for (const auto& [m, f] : grouped.terms()) slot.emplace(m, f);
        }

    std::vector<BracketMonomial> targets;
    for (const auto& [key, by_nu] : table)
        for (const auto& [nu, f] : by_nu)
            if (std::find(targets.begin(), targets.end(), nu) == targets.end())
                targets.push_back(nu);
    std::sort(targets.begin(), targets.end());

    OperatorFamily family;
    for (const BracketMonomial& nu : targets) {
        // triangular interpolation: pairs in (degree, lex) order dominate all
        // componentwise-smaller pairs
        std::map<std::pair<Exponents, Exponents>, CommPoly> coeffs;
        for (size_t ai = 0; ai < monos.size(); ++ai)
            for (size_t bi = 0; bi < monos.size(); ++bi) {
                const Exponents& a = monos[ai];
                const Exponents& bb = monos[bi];
                CommPoly t(d);
                auto it = table.find({ai, bi});
                auto jt = it->second.find(nu);
                if (jt != it->second.end()) t = jt->second;
                for (const auto& [key, cpoly] : coeffs) {
                    const auto& [sigma, tau] = key;
                    if (!componentwise_leq(sigma, a) || !componentwise_leq(tau, bb)) continue;
                    Rational ff = falling_coeff(a, sigma) * falling_coeff(bb, tau);
                    if (is_zero(ff)) continue;
                    Exponents shift = exps_add(exps_sub(a, sigma), exps_sub(bb, tau));
                    t = t - comm_mul(cpoly, CommPoly::monomial(d, shift, ff));
                }
                if (!t.is_zero()) {
                    Rational norm = falling_coeff(a, a) * falling_coeff(bb, bb);
                    coeffs[{a, bb}] = t * (Rational(1) / norm);
                }
            }
        if (coeffs.empty()) continue;
        BilinearOperatorEntry entry;
        entry.target = nu;
        entry.bound = bound;
        for (const auto& [key, cpoly] : coeffs)
            entry.terms.push_back(COperatorTerm{cpoly, key.first, key.second});
        family.emplace(nu, std::move(entry));
    }
    return family;
}

namespace {

bool families_agree(const PBWContext::OperatorFamily& x, const PBWContext::OperatorFamily& y) {
    if (x.size() != y.size()) return false;
    auto it = x.begin();
    auto jt = y.begin();
    for (; it != x.end(); ++it, ++jt) {
        if (!(it->first == jt->first)) return false;
        if (!it->second.same_operator(jt->second)) return false;
    }
    return true;
}

}  // namespace

PBWContext::OperatorFamily PBWContext::stabilized_family(const BracketMonomial& lambda,
                                                         const BracketMonomial& mu, int cutoff,
                                                         int min_bound, int max_bound) const {
    min_bound = std::max(min_bound, 1);
    max_bound = std::max(max_bound, min_bound);
    FamilyKey key{lambda.entries(), mu.entries(), cutoff};

    OperatorFamily cached;
    int cached_bound = -1;
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = family_cache_.find(key);
        if (it != family_cache_.end()) {
            if (it->second.second >= min_bound) return it->second.first;
            cached = it->second.first;
            cached_bound = it->second.second;
        }
    }

    OperatorFamily result;
    int verified = -1;
    if (cached_bound >= 0) {
        // cheap extension: agreeing with an already-stable family at the new
        // bound is agreement across an even wider gap
        OperatorFamily cur = extract_family(lambda, mu, cutoff, min_bound);
        if (families_agree(cached, cur)) {
            result = std::move(cur);
            verified = min_bound;
        }
    }
    if (verified < 0) {
        OperatorFamily prev = extract_family(lambda, mu, cutoff, min_bound - 1);
        for (int bound = min_bound; bound <= max_bound; ++bound) {
            OperatorFamily cur = extract_family(lambda, mu, cutoff, bound);
            if (families_agree(prev, cur)) {
                result = std::move(cur);
                verified = bound;
                break;
            }
            prev = std::move(cur);
        }
    }
    if (verified < 0) throw ContractError("operator family did not stabilize below the bound cap");

    for (auto& [nu, entry] : result) {
        entry.stabilized = true;
        entry.bound = verified;
    }
    std::lock_guard<std::mutex> lock(mu_);
    auto it = family_cache_.find(key);
    if (it == family_cache_.end() || it->second.second < verified)
        family_cache_[key] = {result, verified};
    return result;
}

BilinearOperatorEntry extract_C_operator(const PBWContext& ctx, const BracketMonomial& lambda,
                                         const BracketMonomial& mu, const BracketMonomial& nu,
                                         int degree_bound) {
    if (degree_bound < 1) throw ContractError("degree bound must be at least 1");
    auto prev = ctx.extract_family(lambda, mu, nu.ord(), degree_bound - 1);
    auto cur = ctx.extract_family(lambda, mu, nu.ord(), degree_bound);

    BilinearOperatorEntry entry;
    entry.target = nu;
    entry.bound = degree_bound;
    if (auto it = cur.find(nu); it != cur.end()) entry.terms = it->second.terms;

    BilinearOperatorEntry before;
    before.target = nu;
    if (auto it = prev.find(nu); it != prev.end()) before.terms = it->second.terms;
    entry.stabilized = entry.same_operator(before);
    return entry;
}

bool check_associativity_constraint(const PBWContext& ctx, const BracketMonomial& l1,
                                    const BracketMonomial& l2, const BracketMonomial& l3,
                                    const BracketMonomial& nu,
                                    const std::vector<std::array<CommPoly, 3>>& samples) {
    const HallBasis& basis = ctx.basis();
    int d = basis.alphabet_size();

    // stabilization certifies the families; the direct triple product below
    // cross-checks every evaluation, so a false certificate cannot pass
    PBWContext::OperatorFamily inner12, inner23;
    if (nu.ord() - l3.ord() >= 0)
        inner12 = ctx.stabilized_family(l1, l2, nu.ord() - l3.ord(), 3);
    if (nu.ord() - l1.ord() >= 0)
        inner23 = ctx.stabilized_family(l2, l3, nu.ord() - l1.ord(), 3);

    for (const auto& [f, g, h] : samples) {
        CommPoly lhs(d), rhs(d);
        for (const auto& [mu1, op12] : inner12) {
            CommPoly q = op12.apply(f, g);
            if (q.is_zero()) continue;
            auto outer = ctx.stabilized_family(mu1, l3, nu.ord(), 3);
            if (auto it = outer.find(nu); it != outer.end()) lhs = lhs + it->second.apply(q, h);
        }
        for (const auto& [mu2, op23] : inner23) {
            CommPoly r = op23.apply(g, h);
            if (r.is_zero()) continue;
            auto outer = ctx.stabilized_family(l1, mu2, nu.ord(), 3);
            if (auto it = outer.find(nu); it != outer.end()) rhs = rhs + it->second.apply(f, r);
        }

        // direct triple product, for cross-checking both sides
        NCPoly triple(d);
        {
            auto lift = [&](const CommPoly& p, const BracketMonomial& m) {
                NCPoly out(d);
                NCPoly bracket_part = NCPoly::one(d);
                for (int idx : m.entries())
                    bracket_part = nc_mul(bracket_part, basis.expand_to_words(idx));
                for (const auto& [exps, c] : p.terms())
                    out = out +
                          nc_mul(NCPoly::monomial(d, word_from_exponents(exps), c), bracket_part);
                return out;
            };
            triple = nc_mul(nc_mul(lift(f, l1), lift(g, l2)), lift(h, l3));
        }
        PBWElement direct(d, ctx.basis_ptr());
        for (const auto& [w, c] : triple.terms())
            for (const auto& [m, q] : ctx.straighten(w, nu.ord()))
                accumulate_sorted(direct, m, c * q, basis);
        CommPoly expected(d);
        if (const CommPoly* p = direct.coefficient(nu)) expected = *p;

        if (!(lhs == rhs) || !(lhs == expected)) return false;
    }
    return true;
}

// --- formal sections ---------------------------------------------------------

FormalSection::FormalSection(int d, std::shared_ptr<const HallBasis> basis, CommPoly center,
                             int truncation)
    : d_(d), basis_(std::move(basis)), center_(std::move(center)), trunc_(truncation) {
    if (center_.is_zero()) throw ContractError("localization center must be nonzero");
    if (trunc_ < 1) throw ContractError("truncation must be at least 1");
}

void FormalSection::add_term(const BracketMonomial& m, const LocalizedElement& g) {
    if (m.ord() >= trunc_) return;
    if (!(g.center() == center_)) throw ContractError("localization center mismatch");
    if (g.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, g);
    } else {
        LocalizedElement sum = it->second + g;
        if (sum.is_zero())
            terms_.erase(it);
        else
            it->second = sum;
    }
}

bool FormalSection::operator==(const FormalSection& o) const {
    return d_ == o.d_ && center_ == o.center_ && trunc_ == o.trunc_ && terms_ == o.terms_;
}

FormalSection formal_section_mul(const PBWContext& ctx, const FormalSection& a,
                                 const FormalSection& b) {
    if (a.alphabet_size() != b.alphabet_size()) throw ContractError("alphabet mismatch");
    if (!(a.center() == b.center())) throw ContractError("localization center mismatch");
    if (a.truncation() != b.truncation()) throw ContractError("truncation mismatch");
    int K = a.truncation();
    FormalSection out(a.alphabet_size(), ctx.basis_ptr(), a.center(), K);

    for (const auto& [lambda, f] : a.terms())
        for (const auto& [mu, g] : b.terms()) {
            if (lambda.ord() + mu.ord() >= K) continue;
            auto family = ctx.stabilized_family(lambda, mu, K - 1, 3);
            for (const auto& [nu, op] : family) {
                LocalizedElement value = op.apply(f, g);
                out.add_term(nu, value);
            }
        }
    return out;
}

FormalSection section_from_pbw(const PBWElement& e, const CommPoly& center, int K) {
    FormalSection out(e.alphabet_size(), e.basis(), center, K);
    for (const auto& [m, f] : e.terms())
        out.add_term(m, LocalizedElement::from_poly(f, center));
    return out;
}

}  // namespace ncformal
