#include "ncformal/ncpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ncformal {

NCPoly NCPoly::one(int d) { return monomial(d, {}); }

NCPoly NCPoly::generator(int d, int index) {
    if (index < 0 || index >= d) throw ContractError("generator index out of range");
    return monomial(d, {index});
}

NCPoly NCPoly::monomial(int d, const Word& w, const Rational& c) {
    NCPoly p(d);
    p.add_term(w, c);
    return p;
}

int NCPoly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.rbegin()->first.size());
}

void NCPoly::add_term(const Word& w, const Rational& c) {
    if (ncformal::is_zero(c)) return;
    for (int g : w)
        if (g < 0 || g >= d_) throw ContractError("word letter outside alphabet");
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (ncformal::is_zero(it->second)) terms_.erase(it);
    }
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    if (d_ != o.d_) throw ContractError("alphabet mismatch");
    NCPoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
    if (d_ != o.d_) throw ContractError("alphabet mismatch");
    NCPoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

NCPoly NCPoly::operator-() const {
    NCPoly r(d_);
    for (const auto& [w, c] : terms_) r.add_term(w, -c);
    return r;
}

NCPoly NCPoly::operator*(const Rational& c) const {
    NCPoly r(d_);
    if (ncformal::is_zero(c)) return r;
    for (const auto& [w, q] : terms_) r.add_term(w, q * c);
    return r;
}

NCPoly nc_mul(const NCPoly& p, const NCPoly& q) {
    if (p.alphabet_size() != q.alphabet_size()) throw ContractError("alphabet mismatch");
    NCPoly r(p.alphabet_size());
    for (const auto& [wp, cp] : p.terms())
        for (const auto& [wq, cq] : q.terms()) {
            Word w = wp;
            w.insert(w.end(), wq.begin(), wq.end());
            r.add_term(w, cp * cq);
        }
    return r;
}

NCPoly nc_commutator(const NCPoly& p, const NCPoly& q) { return nc_mul(p, q) - nc_mul(q, p); }

CommPoly abelianize(const NCPoly& p) {
    CommPoly r(p.alphabet_size());
    for (const auto& [w, c] : p.terms()) {
        Exponents e(static_cast<size_t>(p.alphabet_size()), 0);
        for (int g : w) e[static_cast<size_t>(g)] += 1;
        r.add_term(e, c);
    }
    return r;
}

// --- CommPoly -------------------------------------------------------------

CommPoly CommPoly::one(int d) { return constant(d, Rational(1)); }

CommPoly CommPoly::variable(int d, int index) {
    if (index < 0 || index >= d) throw ContractError("variable index out of range");
    Exponents e(static_cast<size_t>(d), 0);
    e[static_cast<size_t>(index)] = 1;
    return monomial(d, e);
}

CommPoly CommPoly::constant(int d, const Rational& c) {
    return monomial(d, Exponents(static_cast<size_t>(d), 0), c);
}

CommPoly CommPoly::monomial(int d, const Exponents& e, const Rational& c) {
    CommPoly p(d);
    p.add_term(e, c);
    return p;
}

int CommPoly::degree() const {
    if (terms_.empty()) return -1;
    long deg = 0;
    for (int x : terms_.rbegin()->first) deg += x;
    return static_cast<int>(deg);
}

void CommPoly::add_term(const Exponents& e, const Rational& c) {
    if (ncformal::is_zero(c)) return;
    if (static_cast<int>(e.size()) != d_) throw ContractError("exponent vector length mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (ncformal::is_zero(it->second)) terms_.erase(it);
    }
}

CommPoly CommPoly::operator+(const CommPoly& o) const {
    if (d_ != o.d_) throw ContractError("variable count mismatch");
    CommPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

CommPoly CommPoly::operator-(const CommPoly& o) const {
    if (d_ != o.d_) throw ContractError("variable count mismatch");
    CommPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

CommPoly CommPoly::operator-() const {
    CommPoly r(d_);
    for (const auto& [e, c] : terms_) r.add_term(e, -c);
    return r;
}

CommPoly CommPoly::operator*(const CommPoly& o) const { return comm_mul(*this, o); }

CommPoly CommPoly::operator*(const Rational& c) const {
    CommPoly r(d_);
    if (ncformal::is_zero(c)) return r;
    for (const auto& [e, q] : terms_) r.add_term(e, q * c);
    return r;
}

CommPoly comm_mul(const CommPoly& f, const CommPoly& g) {
    if (f.nvars() != g.nvars()) throw ContractError("variable count mismatch");
    CommPoly r(f.nvars());
    for (const auto& [ef, cf] : f.terms())
        for (const auto& [eg, cg] : g.terms()) {
            Exponents e = ef;
            for (size_t i = 0; i < e.size(); ++i) e[i] += eg[i];
            r.add_term(e, cf * cg);
        }
    return r;
}

CommPoly comm_pow(const CommPoly& f, int e) {
    CommPoly r = CommPoly::one(f.nvars());
    for (int i = 0; i < e; ++i) r = comm_mul(r, f);
    return r;
}

CommPoly partial_derivative(const CommPoly& f, int var) {
    if (var < 0 || var >= f.nvars()) throw ContractError("derivative index out of range");
    CommPoly r(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        int k = e[static_cast<size_t>(var)];
        if (k == 0) continue;
        Exponents e2 = e;
        e2[static_cast<size_t>(var)] = k - 1;
        r.add_term(e2, c * k);
    }
    return r;
}

std::optional<CommPoly> divide_exact(const CommPoly& p, const CommPoly& f) {
    if (f.is_zero()) throw ContractError("division by zero polynomial");
    if (p.nvars() != f.nvars()) throw ContractError("variable count mismatch");
    CommPoly rem = p;
    CommPoly quot(p.nvars());
    const auto& flead = *f.terms().rbegin();  // deg-lex leading term
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        Exponents e = rlead.first;
        bool divisible = true;
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] -= flead.first[i];
            if (e[i] < 0) {
                divisible = false;
                break;
            }
        }
        if (!divisible) return std::nullopt;
        Rational c = rlead.second / flead.second;
        CommPoly t = CommPoly::monomial(p.nvars(), e, c);
        quot = quot + t;
        rem = rem - comm_mul(t, f);
    }
    return quot;
}

// --- LocalizedElement ------------------------------------------------------

LocalizedElement::LocalizedElement(CommPoly numerator, int denom_power, CommPoly center)
    : num_(std::move(numerator)), pow_(denom_power), center_(std::move(center)) {
    if (center_.is_zero()) throw ContractError("localization center must be nonzero");
    if (pow_ < 0) throw ContractError("negative denominator power");
    if (num_.nvars() != center_.nvars()) throw ContractError("variable count mismatch");
    reduce();
}

void LocalizedElement::reduce() {
    if (num_.is_zero()) {
        pow_ = 0;
        return;
    }
    while (pow_ > 0) {
        auto q = divide_exact(num_, center_);
        if (!q) break;
        num_ = *q;
        --pow_;
    }
}

LocalizedElement LocalizedElement::operator+(const LocalizedElement& o) const {
    if (!(center_ == o.center_)) throw ContractError("localization center mismatch");
    int m = std::max(pow_, o.pow_);
    CommPoly a = comm_mul(num_, comm_pow(center_, m - pow_));
    CommPoly b = comm_mul(o.num_, comm_pow(center_, m - o.pow_));
    return LocalizedElement(a + b, m, center_);
}

LocalizedElement LocalizedElement::operator-(const LocalizedElement& o) const {
    return *this + (o * Rational(-1));
}

LocalizedElement LocalizedElement::operator*(const LocalizedElement& o) const {
    if (!(center_ == o.center_)) throw ContractError("localization center mismatch");
    return LocalizedElement(comm_mul(num_, o.num_), pow_ + o.pow_, center_);
}

LocalizedElement LocalizedElement::operator*(const CommPoly& p) const {
    return LocalizedElement(comm_mul(num_, p), pow_, center_);
}

LocalizedElement LocalizedElement::operator*(const Rational& c) const {
    return LocalizedElement(num_ * c, pow_, center_);
}

bool LocalizedElement::operator==(const LocalizedElement& o) const {
    return center_ == o.center_ && pow_ == o.pow_ && num_ == o.num_;
}

LocalizedElement localized_derivative(const LocalizedElement& g, int var) {
    // quotient rule: d(p/f^m) = (dp*f - m*p*df) / f^(m+1)
    if (g.denom_power() == 0)
        return LocalizedElement(partial_derivative(g.numerator(), var), 0, g.center());
    CommPoly dp = partial_derivative(g.numerator(), var);
    CommPoly df = partial_derivative(g.center(), var);
    CommPoly num =
        comm_mul(dp, g.center()) - comm_mul(g.numerator(), df) * Rational(g.denom_power());
    return LocalizedElement(num, g.denom_power() + 1, g.center());
}

// --- text grammar ----------------------------------------------------------

namespace {

struct Term {
    Rational coeff;
    std::vector<int> gens;  // 0-based, in written order
};

// poly := term (('+'|'-') term)* ; term := [rational '*'] gen ('*' gen)* | rational
std::vector<Term> parse_terms(const std::string& text, int d) {
    std::vector<Term> out;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto parse_uint_str = [&]() -> std::string {
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw ParseError("expected digits at position " + std::to_string(start));
        return text.substr(start, i - start);
    };

    skip_ws();
    if (i == text.size()) throw ParseError("empty polynomial");
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        skip_ws();
        if (!first) {
            if (text[i] == '+') {
                ++i;
            } else if (text[i] == '-') {
                sign = -1;
                ++i;
            } else {
                throw ParseError("expected '+' or '-' at position " + std::to_string(i));
            }
            skip_ws();
        } else {
            if (text[i] == '-') {
                sign = -1;
                ++i;
                skip_ws();
            } else if (text[i] == '+') {
                ++i;
                skip_ws();
            }
        }
        first = false;

        Term t;
        t.coeff = Rational(sign);
        bool saw_factor = false;
        bool expect_factor = true;
        while (expect_factor) {
            skip_ws();
            if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                std::string numpart = parse_uint_str();
                skip_ws();
                if (i < text.size() && text[i] == '/') {
                    ++i;
                    skip_ws();
                    std::string denpart = parse_uint_str();
                    t.coeff *= rational_from_string(numpart + "/" + denpart);
                } else {
                    t.coeff *= rational_from_string(numpart);
                }
                saw_factor = true;
            } else if (i < text.size() && text[i] == 'x') {
                ++i;
                std::string idx = parse_uint_str();
                int g = std::stoi(idx) - 1;
                if (g < 0 || g >= d)
                    throw ParseError("generator x" + idx + " outside alphabet of size " +
                                     std::to_string(d));
                t.gens.push_back(g);
                saw_factor = true;
            } else {
                throw ParseError("expected factor at position " + std::to_string(i));
            }
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
            } else {
                expect_factor = false;
            }
        }
        if (!saw_factor) throw ParseError("empty term");
        out.push_back(std::move(t));
        skip_ws();
    }
    return out;
}

std::string format_coeff_prefix(const Rational& c, bool is_first, bool has_factors) {
    Rational abs = c < 0 ? Rational(-c) : c;
    std::string s;
    if (is_first) {
        if (c < 0) s += "-";
    } else {
        s += (c < 0) ? " - " : " + ";
    }
    if (abs != 1 || !has_factors) {
        s += to_string(abs);
        if (has_factors) s += "*";
    }
    return s;
}

}  // namespace

NCPoly parse_ncpoly(const std::string& text, int d) {
    NCPoly p(d);
    for (const auto& t : parse_terms(text, d)) p.add_term(t.gens, t.coeff);
    return p;
}

CommPoly parse_commpoly(const std::string& text, int d) {
    CommPoly p(d);
    for (const auto& t : parse_terms(text, d)) {
        Exponents e(static_cast<size_t>(d), 0);
        for (int g : t.gens) e[static_cast<size_t>(g)] += 1;
        p.add_term(e, t.coeff);
    }
    return p;
}

std::string to_string(const NCPoly& p, const std::vector<std::string>& labels) {
    if (p.is_zero()) return "0";
    std::string s;
    bool fst = true;
    for (const auto& [w, c] : p.terms()) {
        s += format_coeff_prefix(c, fst, !w.empty());
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) s += "*";
            s += labels[static_cast<size_t>(w[i])];
        }
        fst = false;
    }
    return s;
}

std::string to_string(const NCPoly& p) {
    std::vector<std::string> labels;
    for (int i = 0; i < p.alphabet_size(); ++i) labels.push_back("x" + std::to_string(i + 1));
    return to_string(p, labels);
}

std::string to_string(const CommPoly& p, const std::vector<std::string>& labels) {
    if (p.is_zero()) return "0";
    std::string s;
    bool fst = true;
    for (const auto& [e, c] : p.terms()) {
        bool has_factors = false;
        for (int x : e) has_factors = has_factors || x > 0;
        s += format_coeff_prefix(c, fst, has_factors);
        bool inner_fst = true;
        for (size_t i = 0; i < e.size(); ++i)
            for (int rep = 0; rep < e[i]; ++rep) {
                if (!inner_fst) s += "*";
                s += labels[i];
                inner_fst = false;
            }
        fst = false;
    }
    return s;
}

std::string to_string(const CommPoly& p) {
    std::vector<std::string> labels;
    for (int i = 0; i < p.nvars(); ++i) labels.push_back("x" + std::to_string(i + 1));
    return to_string(p, labels);
}

std::string to_string(const LocalizedElement& g) {
    std::ostringstream os;
    os << "(" << to_string(g.numerator()) << ")";
    if (g.denom_power() > 0)
        os << "/(" << to_string(g.center()) << ")^" << g.denom_power();
    return os.str();
}

}  // namespace ncformal
