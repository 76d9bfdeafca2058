#pragma once

#include <vector>

#include "geomplex/common.hpp"

namespace geomplex {

struct Simplex {
    std::vector<int> vertices;  // sorted ascending
    double value = 0.0;

    int dim() const { return static_cast<int>(vertices.size()) - 1; }

    friend bool operator==(const Simplex& a, const Simplex& b) {
        return a.value == b.value && a.vertices == b.vertices;
    }
};

// Canonical order: (value, dim, lexicographic vertices).
bool simplex_less(const Simplex& a, const Simplex& b);

// The codimension-1 faces of a vertex tuple, in drop-vertex order (dropping
// position i carries boundary sign (-1)^i).
std::vector<std::vector<int>> facets_of(const std::vector<int>& vertices);

// A finite filtered simplicial complex: one filtration value per simplex,
// closed under faces up to max_dim, monotone along face inclusions.
struct FilteredComplex {
    int vertex_count = 0;
    int max_dim = 0;
    std::vector<Simplex> simplices;

    void sort_canonical();

    // Checks the structural invariants (sorted vertex lists in range, no
    // duplicates, face closure, monotonicity). Throws ValidationError.
    void validate() const;

    // Sub-complex of simplices with value <= a (or < a when strict).
    FilteredComplex slice(double a, bool strict) const;

    std::vector<double> critical_values() const;  // sorted, distinct
};

}  // namespace geomplex
