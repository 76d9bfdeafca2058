#include "geomplex/interleaving.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace geomplex {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int mod_pow(long long base, long long exp, long long p) {
    long long r = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) r = r * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return static_cast<int>(r);
}

int mod_inv(int a, int p) { return mod_pow(a, p - 2, p); }

// Sorts a vertex tuple in place; returns the permutation sign, or 0 when the
// tuple has repeated vertices.
int sort_with_sign(std::vector<int>& v) {
    int sign = 1;
    for (std::size_t i = 1; i < v.size(); ++i)
        for (std::size_t j = i; j > 0 && v[j - 1] >= v[j]; --j) {
            if (v[j - 1] == v[j]) return 0;
            std::swap(v[j - 1], v[j]);
            sign = -sign;
        }
    return sign;
}

using SparseVec = std::vector<std::pair<int, int>>;  // (row, coeff), rows ascending

SparseVec sparse_axpy(const SparseVec& x, const SparseVec& y, int factor, int p) {
    SparseVec out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
            int c = static_cast<int>(static_cast<long long>(y[j].second) * factor % p);
            if (c != 0) out.emplace_back(y[j].first, c);
            ++j;
        } else {
            int c = static_cast<int>((x[i].second + static_cast<long long>(y[j].second) * factor) % p);
            if (c != 0) out.emplace_back(x[i].first, c);
            ++i, ++j;
        }
    }
    return out;
}

}  // namespace

Chain apply_vertex_map(const Chain& chain, std::span<const int> vertex_map, int field_p) {
    std::map<std::vector<int>, int> acc;
    for (const auto& term : chain) {
        std::vector<int> image;
        image.reserve(term.vertices.size());
        for (int v : term.vertices) image.push_back(vertex_map[v]);
        int sign = sort_with_sign(image);
        if (sign == 0) continue;
        int c = term.coeff;
        if (sign < 0) c = field_p - c;
        auto [it, inserted] = acc.emplace(std::move(image), 0);
        it->second = (it->second + c) % field_p;
    }
    Chain out;
    for (auto& [tuple, coeff] : acc)
        if (coeff != 0) out.push_back({tuple, coeff});
    return out;
}

ZpMatrix zp_multiply(const ZpMatrix& lhs, const ZpMatrix& rhs, int field_p) {
    if (lhs.cols != rhs.rows) throw ValidationError("matrix dimensions do not compose");
    ZpMatrix out(lhs.rows, rhs.cols);
    for (int r = 0; r < lhs.rows; ++r)
        for (int k = 0; k < lhs.cols; ++k) {
            int l = lhs.at(r, k);
            if (l == 0) continue;
            for (int c = 0; c < rhs.cols; ++c)
                out.at(r, c) = static_cast<int>((out.at(r, c) + static_cast<long long>(l) * rhs.at(k, c)) % field_p);
        }
    return out;
}

// --- SliceHomologyCache -----------------------------------------------------

struct SliceHomologyCache::DimData {
    std::vector<std::vector<int>> simplices;  // canonical order within the slice
    std::map<std::vector<int>, int> row_of;

    // Echelonized cycle-space decomposition: boundary columns (images of the
    // next dimension) first, then homology representatives. Pivots unique.
    std::vector<SparseVec> columns;
    std::map<int, int> pivot_to_column;
    std::vector<int> homology_index_of_column;  // -1 for boundary columns
    std::vector<Chain> homology_chains;
};

struct SliceHomologyCache::SliceData {
    std::vector<DimData> dims;
};

SliceHomologyCache::SliceHomologyCache(const FilteredComplex& K, int field_p) : p_(field_p), max_dim_(K.max_dim) {
    if (!is_prime(field_p)) throw ValidationError("field characteristic must be prime");
    sorted_ = K.simplices;
    std::sort(sorted_.begin(), sorted_.end(), simplex_less);
}

SliceHomologyCache::~SliceHomologyCache() = default;

SliceHomologyCache::SliceData& SliceHomologyCache::slice(double a) {
    std::size_t count = std::upper_bound(sorted_.begin(), sorted_.end(), a,
                                         [](double val, const Simplex& s) { return val < s.value; }) -
                        sorted_.begin();
    auto it = memo_.find(count);
    if (it != memo_.end()) return it->second;

    SliceData data;
    data.dims.resize(max_dim_ + 1);
    for (std::size_t i = 0; i < count; ++i) {
        auto& dd = data.dims[sorted_[i].dim()];
        dd.row_of.emplace(sorted_[i].vertices, static_cast<int>(dd.simplices.size()));
        dd.simplices.push_back(sorted_[i].vertices);
    }

    for (int k = 0; k <= max_dim_; ++k) {
        auto& dd = data.dims[k];

        // image of the boundary of dimension k+1
        if (k + 1 <= max_dim_) {
            for (const auto& tuple : data.dims[k + 1].simplices) {
                SparseVec col;
                int sign = 1;
                for (const auto& face : facets_of(tuple)) {
                    col.emplace_back(dd.row_of.at(face), sign == 1 ? 1 : p_ - 1);
                    sign = -sign;
                }
                std::sort(col.begin(), col.end());
                // eliminate against existing pivots
                while (!col.empty()) {
                    auto [row, coeff] = col.back();
                    auto hit = dd.pivot_to_column.find(row);
                    if (hit == dd.pivot_to_column.end()) break;
                    const SparseVec& other = dd.columns[hit->second];
                    int factor =
                        static_cast<int>(static_cast<long long>(p_ - coeff) * mod_inv(other.back().second, p_) % p_);
                    col = sparse_axpy(col, other, factor, p_);
                }
                if (!col.empty()) {
                    dd.pivot_to_column.emplace(col.back().first, static_cast<int>(dd.columns.size()));
                    dd.columns.push_back(std::move(col));
                    dd.homology_index_of_column.push_back(-1);
                }
            }
        }

        // kernel of the boundary of dimension k, reduced against the image
        const int n_k = static_cast<int>(dd.simplices.size());
        std::vector<SparseVec> r_cols, v_cols;
        std::map<int, int> r_pivots;
        for (int j = 0; j < n_k; ++j) {
            SparseVec r;
            if (k > 0) {
                auto& below = data.dims[k - 1];
                int sign = 1;
                for (const auto& face : facets_of(dd.simplices[j])) {
                    r.emplace_back(below.row_of.at(face), sign == 1 ? 1 : p_ - 1);
                    sign = -sign;
                }
                std::sort(r.begin(), r.end());
            }
            SparseVec v{{j, 1}};
            while (!r.empty()) {
                auto [row, coeff] = r.back();
                auto hit = r_pivots.find(row);
                if (hit == r_pivots.end()) break;
                int factor = static_cast<int>(static_cast<long long>(p_ - coeff) *
                                              mod_inv(r_cols[hit->second].back().second, p_) % p_);
                r = sparse_axpy(r, r_cols[hit->second], factor, p_);
                v = sparse_axpy(v, v_cols[hit->second], factor, p_);
            }
            if (r.empty()) {
                // v is a cycle; reduce against boundary and accepted homology columns
                SparseVec z = std::move(v);
                while (!z.empty()) {
                    auto [row, coeff] = z.back();
                    auto hit = dd.pivot_to_column.find(row);
                    if (hit == dd.pivot_to_column.end()) break;
                    const SparseVec& other = dd.columns[hit->second];
                    int factor =
                        static_cast<int>(static_cast<long long>(p_ - coeff) * mod_inv(other.back().second, p_) % p_);
                    z = sparse_axpy(z, other, factor, p_);
                }
                if (!z.empty()) {
                    Chain chain;
                    for (auto [row, coeff] : z) chain.push_back({dd.simplices[row], coeff});
                    dd.pivot_to_column.emplace(z.back().first, static_cast<int>(dd.columns.size()));
                    dd.homology_index_of_column.push_back(static_cast<int>(dd.homology_chains.size()));
                    dd.columns.push_back(std::move(z));
                    dd.homology_chains.push_back(std::move(chain));
                }
            } else {
                r_pivots.emplace(r.back().first, static_cast<int>(r_cols.size()));
                r_cols.push_back(std::move(r));
                v_cols.push_back(std::move(v));
            }
        }
    }
    return memo_.emplace(count, std::move(data)).first->second;
}

int SliceHomologyCache::betti(double a, int dim) {
    if (dim < 0 || dim > max_dim_) return 0;
    return static_cast<int>(slice(a).dims[dim].homology_chains.size());
}

const std::vector<Chain>& SliceHomologyCache::homology_basis(double a, int dim) {
    return slice(a).dims[dim].homology_chains;
}

std::vector<int> SliceHomologyCache::express(double a, int dim, const Chain& cycle) {
    auto& dd = slice(a).dims[dim];
    SparseVec z;
    for (const auto& term : cycle) {
        auto it = dd.row_of.find(term.vertices);
        if (it == dd.row_of.end()) throw ValidationError("chain is not supported on the slice");
        int coeff = ((term.coeff % p_) + p_) % p_;
        if (coeff != 0) z.emplace_back(it->second, coeff);
    }
    std::sort(z.begin(), z.end());
    std::vector<int> coords(dd.homology_chains.size(), 0);
    while (!z.empty()) {
        auto [row, coeff] = z.back();
        auto hit = dd.pivot_to_column.find(row);
        if (hit == dd.pivot_to_column.end()) throw ValidationError("chain is not a cycle of the slice");
        const SparseVec& other = dd.columns[hit->second];
        int factor = static_cast<int>(static_cast<long long>(coeff) * mod_inv(other.back().second, p_) % p_);
        int h = dd.homology_index_of_column[hit->second];
        if (h >= 0) coords[h] = (coords[h] + factor) % p_;
        z = sparse_axpy(z, other, p_ - factor, p_);
    }
    return coords;
}

// --- eps-simplicial check ---------------------------------------------------

SimplicialCheck is_eps_simplicial(const Correspondence& c, const FilteredComplex& S, const FilteredComplex& T,
                                  double eps) {
    if (!c.is_multivalued_map())
        throw ValidationError("is_eps_simplicial needs a multivalued map (left-total relation)");
    std::map<std::vector<int>, double> t_value;
    for (const auto& s : T.simplices) t_value.emplace(s.vertices, s.value);
    auto images = c.images();

    SimplicialCheck check;
    auto fail = [&](const Simplex& sigma, std::vector<int> image, double value) {
        check.ok = false;
        check.offending = sigma;
        check.image = std::move(image);
        check.target_value = value;
    };

    for (const auto& sigma : S.simplices) {
        std::vector<int> image;
        for (int v : sigma.vertices)
            for (int y : images[v]) image.push_back(y);
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());

        const double bound = sigma.value + eps + kAbsTol;
        const int cap = std::min<int>(static_cast<int>(image.size()), T.max_dim + 1);

        // check all subsets of size `cap`; smaller subsets follow by
        // monotonicity of the target filtration
        std::vector<int> subset(cap);
        auto choose = [&](auto&& self, int from, int depth) -> bool {
            if (depth == cap) {
                auto it = t_value.find(subset);
                if (it == t_value.end()) {
                    fail(sigma, subset, kInf);
                    return false;
                }
                if (it->second > bound) {
                    fail(sigma, subset, it->second);
                    return false;
                }
                return true;
            }
            for (int i = from; i <= static_cast<int>(image.size()) - (cap - depth); ++i) {
                subset[depth] = image[i];
                if (!self(self, i + 1, depth + 1)) return false;
            }
            return true;
        };
        if (!choose(choose, 0, 0)) return check;
    }
    return check;
}

SubordinateMap min_index_subordinate(const Correspondence& c) {
    if (!c.is_multivalued_map()) throw ValidationError("subordinate map needs a left-total relation");
    SubordinateMap f;
    f.map.assign(c.left_size, -1);
    for (auto [i, j] : c.pairs)
        if (f.map[i] < 0) f.map[i] = j;  // pairs sorted: first hit is the least target
    return f;
}

bool is_subordinate(const SubordinateMap& f, const Correspondence& c) {
    if (static_cast<int>(f.map.size()) != c.left_size) return false;
    for (int i = 0; i < c.left_size; ++i)
        if (!std::binary_search(c.pairs.begin(), c.pairs.end(), std::make_pair(i, f.map[i]))) return false;
    return true;
}

std::vector<double> interleaving_grid(const FilteredComplex& S, const FilteredComplex& T, double eps) {
    std::vector<double> grid;
    auto push = [&](double v) {
        grid.push_back(v);
        grid.push_back(v - eps);
        grid.push_back(v + eps);
        grid.push_back(v - 2 * eps);
        grid.push_back(v + 2 * eps);
    };
    for (const auto& s : S.simplices) push(s.value);
    for (const auto& s : T.simplices) push(s.value);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

namespace {

// Matrix of the map H_dim(src_a) -> H_dim(dst_b) induced by a vertex map
// (or by inclusion when vertex_map is null).
ZpMatrix map_matrix(SliceHomologyCache& src, double a, SliceHomologyCache& dst, double b, int dim,
                    const std::vector<int>* vertex_map, int p) {
    const auto& basis = src.homology_basis(a, dim);
    ZpMatrix m(dst.betti(b, dim), static_cast<int>(basis.size()));
    for (int j = 0; j < static_cast<int>(basis.size()); ++j) {
        Chain image = vertex_map ? apply_vertex_map(basis[j], *vertex_map, p) : basis[j];
        std::vector<int> coords = dst.express(b, dim, image);
        for (int r = 0; r < m.rows; ++r) m.at(r, j) = coords[r];
    }
    return m;
}

}  // namespace

HomologyMap induced_homology_map(const SubordinateMap& f, SliceHomologyCache& source, SliceHomologyCache& target,
                                 double eps, int max_dim, const std::vector<double>& grid) {
    HomologyMap hm;
    hm.eps = eps;
    hm.field_p = source.field_p();
    hm.max_dim = max_dim;
    hm.grid = grid;
    hm.levels.resize(grid.size());
    for (std::size_t g = 0; g < grid.size(); ++g) {
        hm.levels[g].reserve(max_dim + 1);
        for (int k = 0; k <= max_dim; ++k)
            hm.levels[g].push_back(map_matrix(source, grid[g], target, grid[g] + eps, k, &f.map, hm.field_p));
    }
    return hm;
}

HomologyMap induced_homology_map(const SubordinateMap& f, const FilteredComplex& S, const FilteredComplex& T,
                                 double eps, int field_p, int max_dim) {
    SliceHomologyCache src(S, field_p), dst(T, field_p);
    return induced_homology_map(f, src, dst, eps, max_dim, interleaving_grid(S, T, eps));
}

InterleavingVerdict verify_interleaving(const Correspondence& c, const FilteredComplex& S,
                                        const FilteredComplex& T, double eps, int field_p, int max_dim) {
    // full verification recomputes bases at every grid value; keep instances small
    if (S.vertex_count > 12 || T.vertex_count > 12)
        throw ValidationError("verify_interleaving is capped at 12 vertices per complex");
    if (max_dim > 2) throw ValidationError("verify_interleaving is capped at homology dimension 2");
    InterleavingVerdict verdict;
    if (!c.is_correspondence()) {
        verdict.applicable = false;
        verdict.reason = "relation is not a correspondence";
        return verdict;
    }
    const double eps_eff = eps + kAbsTol;  // rounding guard at filtration boundaries
    Correspondence ct = c.transpose();
    SimplicialCheck forward = is_eps_simplicial(c, S, T, eps);
    if (!forward.ok) {
        verdict.applicable = false;
        verdict.reason = "C is not eps-simplicial (offending simplex value " +
                         std::to_string(forward.offending.value) + ")";
        return verdict;
    }
    SimplicialCheck backward = is_eps_simplicial(ct, T, S, eps);
    if (!backward.ok) {
        verdict.applicable = false;
        verdict.reason = "C^T is not eps-simplicial (offending simplex value " +
                         std::to_string(backward.offending.value) + ")";
        return verdict;
    }

    SubordinateMap f = min_index_subordinate(c);
    SubordinateMap g = min_index_subordinate(ct);
    SliceHomologyCache cs(S, field_p), ct_cache(T, field_p);
    std::vector<double> grid = interleaving_grid(S, T, eps_eff);

    for (double a : grid) {
        for (int k = 0; k <= max_dim; ++k) {
            ZpMatrix phi = map_matrix(cs, a, ct_cache, a + eps_eff, k, &f.map, field_p);
            ZpMatrix psi = map_matrix(ct_cache, a + eps_eff, cs, a + 2 * eps_eff, k, &g.map, field_p);
            ZpMatrix shift_s = map_matrix(cs, a, cs, a + 2 * eps_eff, k, nullptr, field_p);
            if (zp_multiply(psi, phi, field_p) != shift_s) {
                verdict.verified = false;
                verdict.reason = "Psi o Phi differs from the 2*eps shift on H(S)";
                verdict.failure_value = a;
                verdict.failure_dim = k;
                return verdict;
            }
            ZpMatrix psi2 = map_matrix(ct_cache, a, cs, a + eps_eff, k, &g.map, field_p);
            ZpMatrix phi2 = map_matrix(cs, a + eps_eff, ct_cache, a + 2 * eps_eff, k, &f.map, field_p);
            ZpMatrix shift_t = map_matrix(ct_cache, a, ct_cache, a + 2 * eps_eff, k, nullptr, field_p);
            if (zp_multiply(phi2, psi2, field_p) != shift_t) {
                verdict.verified = false;
                verdict.reason = "Phi o Psi differs from the 2*eps shift on H(T)";
                verdict.failure_value = a;
                verdict.failure_dim = k;
                return verdict;
            }
        }
    }
    verdict.verified = true;
    return verdict;
}

}  // namespace geomplex
