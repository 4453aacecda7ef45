#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncformal/rational.hpp"

namespace ncformal {

// Raised when an operation's precondition is violated (alphabet mismatch,
// index out of range, registry too small, ...). The CLI maps it to exit 2.
struct ContractError : std::runtime_error {
    explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Monomial in the free algebra: sequence of 0-based generator indices.
// The empty word is the unit. Printed 1-based as x1, x2, ...
using Word = std::vector<int>;

// degree-lexicographic: shorter words first, then lexicographic
struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Exponent vector of a commutative monomial, length = alphabet size.
using Exponents = std::vector<int>;

struct DegLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        long da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

// Element of the free associative algebra on d generators, exact rational
// coefficients, sparse with canonical key order. Zero coefficients are never
// stored, so equality is structural.
class NCPoly {
  public:
    explicit NCPoly(int alphabet_size = 0) : d_(alphabet_size) {}

    static NCPoly zero(int d) { return NCPoly(d); }
    static NCPoly one(int d);
    static NCPoly generator(int d, int index);  // 0-based index
    static NCPoly monomial(int d, const Word& w, const Rational& c = Rational(1));

    int alphabet_size() const { return d_; }
    const std::map<Word, Rational, WordLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // max word length; -1 for zero

    void add_term(const Word& w, const Rational& c);

    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator-() const;
    NCPoly operator*(const Rational& c) const;
    bool operator==(const NCPoly& o) const { return d_ == o.d_ && terms_ == o.terms_; }

  private:
    int d_;
    std::map<Word, Rational, WordLess> terms_;
};

// Element of the commutative polynomial ring on d variables.
class CommPoly {
  public:
    explicit CommPoly(int nvars = 0) : d_(nvars) {}

    static CommPoly zero(int d) { return CommPoly(d); }
    static CommPoly one(int d);
    static CommPoly variable(int d, int index);
    static CommPoly constant(int d, const Rational& c);
    static CommPoly monomial(int d, const Exponents& e, const Rational& c = Rational(1));

    int nvars() const { return d_; }
    const std::map<Exponents, Rational, DegLexLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // total degree; -1 for zero

    void add_term(const Exponents& e, const Rational& c);

    CommPoly operator+(const CommPoly& o) const;
    CommPoly operator-(const CommPoly& o) const;
    CommPoly operator-() const;
    CommPoly operator*(const CommPoly& o) const;
    CommPoly operator*(const Rational& c) const;
    bool operator==(const CommPoly& o) const { return d_ == o.d_ && terms_ == o.terms_; }

  private:
    int d_;
    std::map<Exponents, Rational, DegLexLess> terms_;
};

// Section of the structure sheaf over the basic open where a fixed center
// polynomial f is invertible: numerator / center^denom_power, kept reduced so
// the center never divides the numerator while denom_power > 0.
class LocalizedElement {
  public:
    LocalizedElement(CommPoly numerator, int denom_power, CommPoly center);

    static LocalizedElement from_poly(CommPoly p, CommPoly center) {
        return LocalizedElement(std::move(p), 0, std::move(center));
    }

    const CommPoly& numerator() const { return num_; }
    int denom_power() const { return pow_; }
    const CommPoly& center() const { return center_; }
    bool is_zero() const { return num_.is_zero(); }

    LocalizedElement operator+(const LocalizedElement& o) const;
    LocalizedElement operator-(const LocalizedElement& o) const;
    LocalizedElement operator*(const LocalizedElement& o) const;
    LocalizedElement operator*(const CommPoly& p) const;
    LocalizedElement operator*(const Rational& c) const;
    bool operator==(const LocalizedElement& o) const;

  private:
    void reduce();
    CommPoly num_;
    int pow_;
    CommPoly center_;
};

// --- operations ---------------------------------------------------------

NCPoly nc_mul(const NCPoly& p, const NCPoly& q);
NCPoly nc_commutator(const NCPoly& p, const NCPoly& q);

CommPoly partial_derivative(const CommPoly& f, int var);  // 0-based variable
LocalizedElement localized_derivative(const LocalizedElement& g, int var);

CommPoly abelianize(const NCPoly& p);

CommPoly comm_mul(const CommPoly& f, const CommPoly& g);
CommPoly comm_pow(const CommPoly& f, int e);

// Exact division test: p / f when f divides p, nullopt otherwise.
std::optional<CommPoly> divide_exact(const CommPoly& p, const CommPoly& f);

// --- text grammar -------------------------------------------------------
// terms joined by + / -, optional rational scalar prefixed with '*',
// generators x1..x9 joined by '*' (order significant for NCPoly).

NCPoly parse_ncpoly(const std::string& text, int d);
CommPoly parse_commpoly(const std::string& text, int d);

std::string to_string(const NCPoly& p);
std::string to_string(const NCPoly& p, const std::vector<std::string>& labels);
std::string to_string(const CommPoly& p);
std::string to_string(const CommPoly& p, const std::vector<std::string>& labels);
std::string to_string(const LocalizedElement& g);

}  // namespace ncformal
