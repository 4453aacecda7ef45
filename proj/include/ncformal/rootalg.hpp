#pragma once

#include <string>
#include <vector>

#include "ncformal/finalg.hpp"
#include "ncformal/ncpoly.hpp"
#include "ncformal/quiver.hpp"
#include "ncformal/rng.hpp"

namespace ncformal {

// Presentation of the n-th root algebra for the two computed classes: free
// algebras (d n^2 free generators, no relations) and path algebras (cycle
// generators through the added vertex, with the matrix relations making the
// vertex-cycle matrices an orthogonal idempotent decomposition compatible
// with the arrow cycles).
struct RootPresentation {
    enum class Kind { Free, PathAlgebra };

    struct Generator {
        enum class Type { FreeEntry, VertexCycle, ArrowCycle };
        Type type;
        std::string label;
        int k = 0;        // 1-based generator index (FreeEntry)
        int vertex = 0;   // 1-based vertex (VertexCycle)
        int arrow = 0;    // 0-based arrow id (ArrowCycle)
        int p = 0, q = 0; // 1-based matrix position
    };

    Kind kind;
    int d = 0;  // Free only
    Quiver quiver;  // PathAlgebra only
    int n = 0;
    std::vector<Generator> generators;
    std::vector<NCPoly> relations;  // alphabet = generators.size()

    int generator_count() const { return static_cast<int>(generators.size()); }
    int free_index(int k, int i, int j) const;     // FreeEntry lookup, 1-based
    int vertex_index(int i, int p, int q) const;   // VertexCycle lookup
    int arrow_index(int a, int p, int q) const;    // ArrowCycle lookup, a 0-based
};

// An algebra map A -> M_n(B) given on generators (free case) or on vertices
// and arrows (path algebra case).
struct MatrixAlgebraMap {
    BaseAlgebraPtr base;
    int n = 0;
    std::vector<AlgMat> gen_images;     // free case, one per generator
    std::vector<AlgMat> vertex_images;  // path algebra case
    std::vector<AlgMat> arrow_images;

    bool operator==(const MatrixAlgebraMap& o) const {
        return n == o.n && gen_images == o.gen_images && vertex_images == o.vertex_images &&
               arrow_images == o.arrow_images;
    }
};

// An algebra map root(A) -> B: one element of B per presentation generator.
struct RootMap {
    BaseAlgebraPtr base;
    std::vector<AlgElem> images;

    bool operator==(const RootMap& o) const { return images == o.images; }
};

RootPresentation root_presentation_free(int d, int n);
RootPresentation root_presentation_path(const Quiver& q, int n);

// Throws ContractError when the map does not satisfy the source relations.
void validate_matrix_map(const RootPresentation& pres, const MatrixAlgebraMap& phi);
void validate_root_map(const RootPresentation& pres, const RootMap& psi);

RootMap lower(const RootPresentation& pres, const MatrixAlgebraMap& phi);
MatrixAlgebraMap raise(const RootPresentation& pres, const RootMap& psi);

// Random valid algebra map CQ -> M_n(B): conjugated block projectors for the
// vertices and conjugated compatible blocks for the arrows.
MatrixAlgebraMap random_path_matrix_map(Rng& rng, const BaseAlgebraPtr& base, const Quiver& q,
                                        int n);

struct EquivalenceReport {
    bool pass = true;
    int samples_checked = 0;
    std::string detail;  // first counterexample, empty when pass
};

// Free case: counts d n^2 commuting variables against the coordinate ring of
// the representation space. Path algebra case: samples commutative points on
// both sides of the correspondence (over the rationals and the dual numbers)
// and checks the two translations land on valid points.
EquivalenceReport abelianized_root_equals_rep_ring(const RootPresentation& pres, Rng& rng,
                                                   int samples);

std::string root_presentation_to_json_text(const RootPresentation& pres);

}  // namespace ncformal
