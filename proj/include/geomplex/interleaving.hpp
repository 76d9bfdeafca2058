#pragma once

#include <map>
#include <optional>
#include <string>

#include "geomplex/dissimilarity.hpp"
#include "geomplex/filtered_complex.hpp"
#include "geomplex/persistence.hpp"

namespace geomplex {

// A simplicial chain written on vertex tuples, independent of any particular
// simplex ordering. Terms are sorted by tuple with coefficients in [1, p).
struct ChainTerm {
    std::vector<int> vertices;
    int coeff = 1;
};
using Chain = std::vector<ChainTerm>;

// Pushes a chain through a vertex map: each simplex maps to its sorted image
// with the orientation sign of the sorting permutation; degenerate images
// (repeated vertices) vanish.
Chain apply_vertex_map(const Chain& chain, std::span<const int> vertex_map, int field_p);

// Small dense matrix over Z/p.
struct ZpMatrix {
    int rows = 0, cols = 0;
    std::vector<int> a;

    ZpMatrix() = default;
    ZpMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
    int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    int at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    friend bool operator==(const ZpMatrix&, const ZpMatrix&) = default;
};
ZpMatrix zp_multiply(const ZpMatrix& lhs, const ZpMatrix& rhs, int field_p);

// Homology bases of the sub-complexes K_a of one filtered complex, memoized
// per distinct slice. Bases are deterministic: boundary columns are
// echelonized in filtration order and kernel representatives are reduced
// against them, so repeated queries and different consumers agree.
class SliceHomologyCache {
  public:
    SliceHomologyCache(const FilteredComplex& K, int field_p);
    ~SliceHomologyCache();

    int field_p() const { return p_; }
    int max_dim() const { return max_dim_; }

    int betti(double a, int dim);
    const std::vector<Chain>& homology_basis(double a, int dim);

    // Coordinates of a cycle of K_a in the homology basis at (a, dim).
    // Throws ValidationError if the chain is not a cycle of the slice.
    std::vector<int> express(double a, int dim, const Chain& cycle);

  private:
    struct DimData;
    struct SliceData;

    SliceData& slice(double a);

    int p_;
    int max_dim_;
    std::vector<Simplex> sorted_;  // canonical filtration order
    std::map<std::size_t, SliceData> memo_;
};

// Result of checking Def. "eps-simplicial" for a multivalued map between two
// filtered complexes: for every simplex sigma of S with value a, every
// subset of the image C(sigma) up to T's dimension cap must be a simplex of
// T with value <= a + eps (within kAbsTol).
struct SimplicialCheck {
    bool ok = true;
    Simplex offending;         // simplex of S whose image fails
    std::vector<int> image;    // the failing target vertex set
    double target_value = 0;   // its value in T, +infinity if absent
};
SimplicialCheck is_eps_simplicial(const Correspondence& c, const FilteredComplex& S, const FilteredComplex& T,
                                  double eps);

// Single-valued map subordinate to a multivalued map: (x, f(x)) in C.
struct SubordinateMap {
    std::vector<int> map;  // source vertex -> target vertex
};
SubordinateMap min_index_subordinate(const Correspondence& c);
bool is_subordinate(const SubordinateMap& f, const Correspondence& c);

// Critical-value grid for degree-eps comparisons: both complexes' values
// together with their +-eps and +-2eps shifts.
std::vector<double> interleaving_grid(const FilteredComplex& S, const FilteredComplex& T, double eps);

// The matrices of the linear map H_k(S_a) -> H_k(T_{a+eps}) induced by a
// subordinate vertex map, at every grid value and dimension 0..max_dim.
struct HomologyMap {
    double eps = 0;
    int field_p = 2;
    int max_dim = 0;
    std::vector<double> grid;
    std::vector<std::vector<ZpMatrix>> levels;  // [grid index][dim]

    friend bool operator==(const HomologyMap&, const HomologyMap&) = default;
};

HomologyMap induced_homology_map(const SubordinateMap& f, SliceHomologyCache& source, SliceHomologyCache& target,
                                 double eps, int max_dim, const std::vector<double>& grid);
HomologyMap induced_homology_map(const SubordinateMap& f, const FilteredComplex& S, const FilteredComplex& T,
                                 double eps, int field_p, int max_dim);

struct InterleavingVerdict {
    bool applicable = true;
    bool verified = false;
    std::string reason;  // filled when not applicable or not verified
    std::optional<double> failure_value;
    std::optional<int> failure_dim;
};

// Checks the canonical eps-interleaving induced by a correspondence whose
// two projections are both eps-simplicial: composing the two induced maps
// must equal the internal 2*eps shift on each side, at every grid value and
// dimension <= max_dim. eps is padded by kAbsTol against boundary rounding.
InterleavingVerdict verify_interleaving(const Correspondence& c, const FilteredComplex& S,
                                        const FilteredComplex& T, double eps, int field_p, int max_dim);

}  // namespace geomplex
