#pragma once

#include <vector>

#include "geomplex/filtered_complex.hpp"

namespace geomplex {

struct DiagramPoint {
    int dim = 0;
    double birth = 0.0;
    double death = 0.0;  // +infinity for essential classes

    friend bool operator==(const DiagramPoint& a, const DiagramPoint& b) {
        return a.dim == b.dim && a.birth == b.birth && a.death == b.death;
    }
};

bool diagram_point_less(const DiagramPoint& a, const DiagramPoint& b);

// Multiset of (dim, birth, death) triples, birth < death.
struct PersistenceDiagram {
    std::vector<DiagramPoint> points;

    void sort_canonical();
    PersistenceDiagram restrict_dim(int dim) const;
    PersistenceDiagram restrict_max_dim(int max_dim) const;

    // Multiset equality (exact coordinate comparison).
    bool same_multiset(const PersistenceDiagram& other) const;
};

// Persistent homology of a filtered complex over Z/p via column reduction
// with the clearing optimization; columns ordered by (value, dim,
// lexicographic vertices). Zero-persistence pairs are dropped. The dimension
// K.max_dim is included in the output, but its deaths are only meaningful if
// the complex carries the full (max_dim)-skeleton of the object of interest:
// build one dimension above the homology degree you need.
PersistenceDiagram compute_persistence(const FilteredComplex& K, int field_p = 2);

// Betti numbers of the single complex K_a (or K_{a^-} when strict), one per
// dimension 0..K.max_dim.
std::vector<int> betti_at(const FilteredComplex& K, double a, bool strict, int field_p = 2);

// Rank of the inclusion-induced map H_dim(K_a) -> H_dim(K_b); equals the
// number of diagram points with birth <= a and death > b.
int rank_of_inclusion(const FilteredComplex& K, double a, double b, int dim, int field_p = 2);

bool is_prime(int p);

}  // namespace geomplex
