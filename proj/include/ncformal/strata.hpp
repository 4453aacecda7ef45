#pragma once

#include <string>
#include <vector>

#include "ncformal/linalg.hpp"
#include "ncformal/quiver.hpp"

namespace ncformal {

struct Partition {
    std::vector<int> parts;  // nonincreasing, positive

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int total() const;
    int size() const { return static_cast<int>(parts.size()); }
    bool operator==(const Partition& o) const { return parts == o.parts; }
};

// A point type of the semisimple quotient: partition of the module dimension
// plus one total-n dimension vector per distinct simple factor; concrete
// simple representations are optional.
struct SemisimpleType {
    Partition lambda;
    std::vector<DimVector> dim_vectors;
    std::vector<QuiverRep> simples;  // empty, or one per part and pairwise distinct
};

// Extension of an n-dimensional representation to the extended quiver with a
// one-dimensional space at the added vertex.
struct TildeRep {
    Quiver base;
    int n = 0;
    DimVector alpha;                            // base dimensions
    std::vector<QMat> base_matrices;            // per base arrow
    std::vector<std::vector<QMat>> x_matrices;  // [vertex][j]: (alpha_vertex x 1)
};

struct Theta {
    std::vector<int> weights;  // length = base vertices + 1, entry 0 at v_0
};

struct LocalQuiverSetting {
    Quiver gamma;                                 // z vertices
    std::vector<std::vector<long>> arrow_counts;  // a_ij = delta_ij - chi~(a~_i, a~_j)
    DimVector multiplicities;                     // gamma = (e_1, ..., e_z)
    long ambient_dim = 0;                         // dim rep_gamma Gamma
};

struct FiberReport {
    LocalQuiverSetting setting;
    Theta theta;        // default stability weights for the tilde reps
    long stratum_dim;   // dimension of the substratum
};

std::vector<Partition> partitions(int m);

std::vector<SemisimpleType> enumerate_substrata(int m, int n, const Quiver& q);

long stratum_dimension(const SemisimpleType& t, int n, const Quiver& q);

TildeRep build_tilde_rep(const QuiverRep& s, const Quiver& q, int n);

bool is_generated_from_v0(const TildeRep& t);

long theta_pairing(const Theta& theta, const DimVector& beta_tilde);

Theta default_theta(const TildeRep& t);

bool check_theta_stability(const TildeRep& t, const Theta& theta);

LocalQuiverSetting local_quiver(const SemisimpleType& t, int n, const Quiver& q);

FiberReport fiber_setting_report(const SemisimpleType& t, int n, const Quiver& q);

}  // namespace ncformal
