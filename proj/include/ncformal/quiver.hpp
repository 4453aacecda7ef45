#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ncformal/linalg.hpp"
#include "ncformal/ncpoly.hpp"

namespace ncformal {

// Finite directed multigraph; vertices are 1-based, loops and parallel
// arrows allowed.
struct Quiver {
    int vertices = 0;
    std::vector<std::pair<int, int>> arrows;  // (source, target)

    Quiver() = default;
    Quiver(int k, std::vector<std::pair<int, int>> a);

    int arrow_count() const { return static_cast<int>(arrows.size()); }
    bool operator==(const Quiver& o) const {
        return vertices == o.vertices && arrows == o.arrows;
    }
};

using QuiverPtr = std::shared_ptr<const Quiver>;

// Oriented path. Arrows are stored in application order: arrow_ids[0] acts
// first. A length-zero path carries its base vertex.
struct Path {
    int base = 0;                // vertex for trivial paths
    std::vector<int> arrow_ids;  // indices into Quiver::arrows, first applied first

    static Path trivial(int vertex) { return Path{vertex, {}}; }

    int start(const Quiver& q) const;
    int end(const Quiver& q) const;
    bool operator<(const Path& o) const {
        if (arrow_ids.size() != o.arrow_ids.size()) return arrow_ids.size() < o.arrow_ids.size();
        if (arrow_ids != o.arrow_ids) return arrow_ids < o.arrow_ids;
        return base < o.base;
    }
    bool operator==(const Path& o) const { return base == o.base && arrow_ids == o.arrow_ids; }
};

class PathAlgebraElement {
  public:
    explicit PathAlgebraElement(QuiverPtr q = nullptr) : quiver_(std::move(q)) {}

    static PathAlgebraElement zero(QuiverPtr q) { return PathAlgebraElement(std::move(q)); }
    static PathAlgebraElement one(QuiverPtr q);  // sum of vertex idempotents
    static PathAlgebraElement path(QuiverPtr q, const Path& p, const Rational& c = Rational(1));
    static PathAlgebraElement vertex(QuiverPtr q, int v);
    static PathAlgebraElement arrow(QuiverPtr q, int arrow_id);

    const QuiverPtr& quiver() const { return quiver_; }
    const std::map<Path, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Path& p, const Rational& c);

    PathAlgebraElement operator+(const PathAlgebraElement& o) const;
    PathAlgebraElement operator-(const PathAlgebraElement& o) const;
    PathAlgebraElement operator*(const Rational& c) const;
    bool operator==(const PathAlgebraElement& o) const { return terms_ == o.terms_; }

  private:
    QuiverPtr quiver_;
    std::map<Path, Rational> terms_;
};

struct DimVector {
    std::vector<int> components;

    DimVector() = default;
    explicit DimVector(std::vector<int> c);

    int size() const { return static_cast<int>(components.size()); }
    int total() const;
    int operator[](int i) const { return components[static_cast<size_t>(i)]; }
    bool operator==(const DimVector& o) const { return components == o.components; }
    bool operator<(const DimVector& o) const { return components < o.components; }
};

// x-arrows x_{ij}: n arrows from the added vertex v_0 to each base vertex
// v_i; the localized form also carries y-arrows y_{ij} back to v_0.
struct ExtendedQuiver {
    Quiver base;
    int n = 0;
    bool localized = false;

    // The extension as a plain quiver: vertex 1 is v_0, base vertex i becomes
    // i+1. Arrow order: base arrows first, then x-arrows (i = 1..k outer,
    // j = 1..n inner), then y-arrows in the same order when localized.
    Quiver as_quiver() const;
    int x_arrow_id(int i, int j) const;  // 1-based base vertex i, 1 <= j <= n
    int y_arrow_id(int i, int j) const;
};

// Presentation data of the universal localization inverting the map
// P_1 + ... + P_k -> P_0^n given by the matrix of x-arrows: the symbolic
// matrices plus the two entrywise relation families.
struct LocalizationData {
    ExtendedQuiver extended;
    QuiverPtr carrier;  // as_quiver() of the localized extension

    std::vector<std::vector<std::string>> sigma_matrix;    // k x n, entries x_{iq}
    std::vector<std::vector<std::string>> inverse_matrix;  // n x k, entries y_{jq}

    struct Relation {
        PathAlgebraElement lhs;
        PathAlgebraElement rhs;
        std::string name;
    };
    std::vector<Relation> relations;  // M.N = diag(v_1..v_k), N.M = v_0 * identity
};

// chi(alpha, beta) = sum_i a_i b_i - sum_{arrows s->t} a_s b_t
struct EulerForm {
    std::vector<std::vector<long>> matrix;  // entry (i,j) = delta_ij - #arrows i->j

    long evaluate(const DimVector& a, const DimVector& b) const;
    bool operator==(const EulerForm& o) const { return matrix == o.matrix; }
};

// Matrices over the rationals assigned to the arrows of the localized
// extended quiver, for point-checking the localization relations.
struct ExtendedRep {
    DimVector dims;                      // length k+1, entry 0 = dim at v_0
    std::map<int, QMat> arrow_matrices;  // arrow id -> (dim target) x (dim source)
};

// Representation of a plain quiver over the rationals: one
// (alpha_target x alpha_source) matrix per arrow, in arrow order.
struct QuiverRep {
    DimVector dims;
    std::vector<QMat> matrices;

    bool operator==(const QuiverRep& o) const { return dims == o.dims && matrices == o.matrices; }
};

PathAlgebraElement path_mul(const PathAlgebraElement& a, const PathAlgebraElement& b);

// All oriented paths from one vertex to another of length <= max_length.
// This is the hom-space basis between the corresponding projectives, cut off
// at a caller-supplied bound since oriented cycles make it infinite.
std::vector<Path> enumerate_paths(const Quiver& q, int from, int to, int max_length);

EulerForm euler_form(const Quiver& q);
ExtendedQuiver extend_quiver(const Quiver& q, int n, bool localized = false);
EulerForm euler_form_extended(const Quiver& q, int n);
long euler_block_formula(const Quiver& q, int n, const DimVector& atilde, const DimVector& btilde);

long rep_dim(const Quiver& q, const DimVector& alpha);
long bundle_dim(int n, const Quiver& q, const DimVector& alpha);

std::vector<DimVector> enumerate_dimvectors(int k, int n);

bool numerical_condition(const std::vector<int>& e, const std::vector<int>& f,
                         const DimVector& alpha);

LocalizationData localization_data(const Quiver& q, int n);
bool check_localization_point(const LocalizationData& data, const ExtendedRep& rep);

// JSON round trip for the CLI ({"vertices": k, "arrows": [[s,t],...]})
Quiver quiver_from_json_text(const std::string& text);
std::string quiver_to_json_text(const Quiver& q);

}  // namespace ncformal
