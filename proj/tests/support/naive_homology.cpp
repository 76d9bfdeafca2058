#include "naive_homology.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>

namespace oracle {

namespace {

using geomplex::Simplex;
using SparseVec = std::vector<std::pair<int, int>>;  // (index, coeff)

int mod_pow(long long b, long long e, long long p) {
    long long r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<int>(r);
}

// Column arithmetic over Z/2, packed 64 rows per word.
struct GF2Ops {
    using Col = std::vector<std::uint64_t>;
    int p;

    Col make(int rows) const { return Col((rows + 63) / 64, 0); }
    void add_entry(Col& c, int r, int v) const {
        if (v & 1) c[r >> 6] ^= 1ULL << (r & 63);
    }
    int top_row(const Col& c) const {
        for (int w = static_cast<int>(c.size()) - 1; w >= 0; --w)
            if (c[w] != 0) return (w << 6) + 63 - std::countl_zero(c[w]);
        return -1;
    }
    int coeff_at(const Col& c, int r) const { return static_cast<int>((c[r >> 6] >> (r & 63)) & 1); }
    // factor that zeroes row r of x when adding factor * y
    int cancel_factor(int x_coeff, int y_coeff) const {
        (void)x_coeff;
        (void)y_coeff;
        return 1;
    }
    void axpy(Col& x, const Col& y, int factor) const {
        if ((factor & 1) == 0) return;
        for (std::size_t w = 0; w < x.size(); ++w) x[w] ^= y[w];
    }
};

// Column arithmetic over Z/p, one int per row.
struct GFpOps {
    using Col = std::vector<int>;
    int p;

    Col make(int rows) const { return Col(rows, 0); }
    void add_entry(Col& c, int r, int v) const { c[r] = (c[r] + v) % p; }
    int top_row(const Col& c) const {
        for (int r = static_cast<int>(c.size()) - 1; r >= 0; --r)
            if (c[r] != 0) return r;
        return -1;
    }
    int coeff_at(const Col& c, int r) const { return c[r]; }
    int cancel_factor(int x_coeff, int y_coeff) const {
        return static_cast<int>(static_cast<long long>(p - x_coeff) * mod_pow(y_coeff, p - 2, p) % p);
    }
    void axpy(Col& x, const Col& y, int factor) const {
        for (std::size_t r = 0; r < x.size(); ++r)
            x[r] = static_cast<int>((x[r] + static_cast<long long>(y[r]) * factor) % p);
    }
};

// Column echelon elimination. Returns the rank; when kernel != nullptr also
// collects a kernel basis as sparse vectors over the column indices.
template <class Ops>
int eliminate(const Ops& ops, std::vector<typename Ops::Col> cols, std::vector<SparseVec>* kernel = nullptr) {
    const int n_cols = static_cast<int>(cols.size());
    std::map<int, int> pivot_col;  // pivot row -> column index
    std::vector<typename Ops::Col> trackers;
    if (kernel) {
        trackers.reserve(n_cols);
        for (int j = 0; j < n_cols; ++j) {
            auto t = ops.make(n_cols);
            ops.add_entry(t, j, 1);
            trackers.push_back(std::move(t));
        }
    }
    int rank = 0;
    for (int j = 0; j < n_cols; ++j) {
        int r = ops.top_row(cols[j]);
        while (r >= 0) {
            auto it = pivot_col.find(r);
            if (it == pivot_col.end()) break;
            int factor = ops.cancel_factor(ops.coeff_at(cols[j], r), ops.coeff_at(cols[it->second], r));
            ops.axpy(cols[j], cols[it->second], factor);
            if (kernel) ops.axpy(trackers[j], trackers[it->second], factor);
            r = ops.top_row(cols[j]);
        }
        if (r >= 0) {
            pivot_col.emplace(r, j);
            ++rank;
        } else if (kernel) {
            SparseVec kv;
            for (int c = 0; c < n_cols; ++c) {
                int coeff = ops.coeff_at(trackers[j], c);
                if (coeff != 0) kv.emplace_back(c, coeff);
            }
            kernel->push_back(std::move(kv));
        }
    }
    return rank;
}

struct Buckets {
    std::vector<std::vector<std::vector<int>>> tuples;      // [dim][row] = vertex tuple
    std::vector<std::map<std::vector<int>, int>> index_of;  // [dim]
};

Buckets bucket(const std::vector<Simplex>& simplices, int max_dim) {
    Buckets b;
    b.tuples.resize(max_dim + 2);
    b.index_of.resize(max_dim + 2);
    for (const auto& s : simplices) {
        int d = s.dim();
        if (d > max_dim + 1) continue;
        if (b.index_of[d].emplace(s.vertices, static_cast<int>(b.tuples[d].size())).second)
            b.tuples[d].push_back(s.vertices);
    }
    return b;
}

template <class Ops>
std::vector<typename Ops::Col> boundary_columns(const Ops& ops, const Buckets& b, int k) {
    std::vector<typename Ops::Col> cols;
    if (k <= 0 || k >= static_cast<int>(b.tuples.size())) return cols;
    const int n_rows = static_cast<int>(b.tuples[k - 1].size());
    cols.reserve(b.tuples[k].size());
    for (const auto& tuple : b.tuples[k]) {
        auto c = ops.make(n_rows);
        int sign = 1;
        for (std::size_t drop = 0; drop < tuple.size(); ++drop) {
            std::vector<int> face;
            for (std::size_t i = 0; i < tuple.size(); ++i)
                if (i != drop) face.push_back(tuple[i]);
            ops.add_entry(c, b.index_of[k - 1].at(face), sign == 1 ? 1 : ops.p - 1);
            sign = -sign;
        }
        cols.push_back(std::move(c));
    }
    return cols;
}

template <class Ops>
std::vector<int> betti_impl(const Ops& ops, const std::vector<Simplex>& simplices, int max_dim) {
    Buckets b = bucket(simplices, max_dim);
    std::vector<int> ranks(max_dim + 2, 0);
    for (int k = 1; k <= max_dim + 1; ++k) ranks[k] = eliminate(ops, boundary_columns(ops, b, k));
    std::vector<int> out(max_dim + 1, 0);
    for (int k = 0; k <= max_dim; ++k)
        out[k] = static_cast<int>(b.tuples[k].size()) - ranks[k] - ranks[k + 1];
    return out;
}

template <class Ops>
int inclusion_rank_impl(const Ops& ops, const std::vector<Simplex>& small_complex,
                        const std::vector<Simplex>& large_complex, int dim) {
    Buckets bs = bucket(small_complex, dim);
    Buckets bl = bucket(large_complex, dim + 1);
    const int n_rows = static_cast<int>(bl.tuples[dim].size());

    // cycle space of the small complex, rewritten over the large complex rows
    std::vector<SparseVec> kernel;
    if (dim == 0) {
        // the boundary map on C_0 is zero: every vertex is a cycle
        std::vector<typename Ops::Col> zero_cols(bs.tuples[0].size(), ops.make(0));
        eliminate(ops, std::move(zero_cols), &kernel);
    } else {
        eliminate(ops, boundary_columns(ops, bs, dim), &kernel);
    }
    std::vector<typename Ops::Col> z_cols;
    for (const auto& kv : kernel) {
        auto z = ops.make(n_rows);
        for (auto [j, coeff] : kv) ops.add_entry(z, bl.index_of[dim].at(bs.tuples[dim][j]), coeff);
        z_cols.push_back(std::move(z));
    }

    std::vector<typename Ops::Col> b_cols = boundary_columns(ops, bl, dim + 1);
    int rank_b = eliminate(ops, b_cols);
    for (auto& z : z_cols) b_cols.push_back(std::move(z));
    int rank_joint = eliminate(ops, std::move(b_cols));
    return rank_joint - rank_b;
}

}  // namespace

std::vector<int> betti(const std::vector<Simplex>& simplices, int max_dim, int field_p) {
    if (field_p == 2) return betti_impl(GF2Ops{2}, simplices, max_dim);
    return betti_impl(GFpOps{field_p}, simplices, max_dim);
}

int inclusion_rank(const std::vector<Simplex>& small_complex, const std::vector<Simplex>& large_complex, int dim,
                   int field_p) {
    if (field_p == 2) return inclusion_rank_impl(GF2Ops{2}, small_complex, large_complex, dim);
    return inclusion_rank_impl(GFpOps{field_p}, small_complex, large_complex, dim);
}

geomplex::PersistenceDiagram diagram(const geomplex::FilteredComplex& K, int field_p) {
    std::vector<double> values = K.critical_values();
    const int v = static_cast<int>(values.size());
    std::vector<std::vector<Simplex>> slices(v);
    for (int i = 0; i < v; ++i) slices[i] = K.slice(values[i], false).simplices;

    geomplex::PersistenceDiagram dgm;
    for (int dim = 0; dim <= K.max_dim; ++dim) {
        std::vector<std::vector<int>> r(v, std::vector<int>(v, 0));
        for (int i = 0; i < v; ++i)
            for (int j = i; j < v; ++j) r[i][j] = inclusion_rank(slices[i], slices[j], dim, field_p);
        auto rank = [&](int i, int j) { return (i < 0 || j < 0 || i > j) ? 0 : r[i][j]; };
        for (int i = 0; i < v; ++i) {
            for (int j = i + 1; j < v; ++j) {
                int mult = (rank(i, j - 1) - rank(i, j)) - (rank(i - 1, j - 1) - rank(i - 1, j));
                for (int c = 0; c < mult; ++c) dgm.points.push_back({dim, values[i], values[j]});
            }
            int essential = rank(i, v - 1) - rank(i - 1, v - 1);
            for (int c = 0; c < essential; ++c)
                dgm.points.push_back({dim, values[i], std::numeric_limits<double>::infinity()});
        }
    }
    dgm.sort_canonical();
    return dgm;
}

}  // namespace oracle
