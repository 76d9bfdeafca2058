#include "geomplex/persistence.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <string>

namespace geomplex {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct SortedComplex {
    std::vector<const Simplex*> order;           // canonical filtration order
    std::vector<std::vector<int>> facet_rows;    // per simplex, row indices of its facets (drop order)
};

SortedComplex sort_and_index(const FilteredComplex& K) {
    SortedComplex sc;
    sc.order.reserve(K.simplices.size());
    for (const auto& s : K.simplices) sc.order.push_back(&s);
    std::sort(sc.order.begin(), sc.order.end(),
              [](const Simplex* a, const Simplex* b) { return simplex_less(*a, *b); });

    std::map<std::vector<int>, int> index_of;
    for (std::size_t i = 0; i < sc.order.size(); ++i) {
        if (!index_of.emplace(sc.order[i]->vertices, static_cast<int>(i)).second)
            throw ValidationError("duplicate simplex in filtered complex");
    }
    sc.facet_rows.resize(sc.order.size());
    for (std::size_t i = 0; i < sc.order.size(); ++i) {
        for (const auto& face : facets_of(sc.order[i]->vertices)) {
            auto it = index_of.find(face);
            if (it == index_of.end()) throw ValidationError("complex is not closed under faces");
            sc.facet_rows[i].push_back(it->second);
        }
    }
    return sc;
}

// --- Z/2 reduction: sparse stored columns, bit-packed working column -------

class Z2Reducer {
  public:
    explicit Z2Reducer(std::size_t n) : bits_((n + 63) / 64, 0), stored_(n), pivot_owner_(n, -1) {}

    // Reduces the column with the given boundary rows. Returns the pivot row
    // on pairing, or -1 when the column reduces to zero.
    int reduce(int col, const std::vector<int>& boundary) {
        touched_.clear();
        int top = -1;
        for (int r : boundary) {
            flip(r);
            top = std::max(top, r);
        }
        int pivot = scan_down(top);
        while (pivot >= 0) {
            int owner = pivot_owner_[pivot];
            if (owner < 0) {
                pivot_owner_[pivot] = col;
                store(col, pivot);
                break;
            }
            for (int r : stored_[owner]) flip(r);
            pivot = scan_down(pivot);  // the shared pivot bit cancelled
        }
        for (int w : touched_) bits_[w] = 0;
        return pivot;
    }

  private:
    void flip(int r) {
        std::size_t w = static_cast<std::size_t>(r) >> 6;
        if (bits_[w] == 0) touched_.push_back(static_cast<int>(w));
        bits_[w] ^= (1ULL << (r & 63));
    }
    int scan_down(int from) const {
        if (from < 0) return -1;
        std::size_t w = static_cast<std::size_t>(from) >> 6;
        std::uint64_t mask = (from & 63) == 63 ? ~0ULL : ((1ULL << ((from & 63) + 1)) - 1);
        std::uint64_t word = bits_[w] & mask;
        while (true) {
            if (word != 0) return static_cast<int>((w << 6) + 63 - std::countl_zero(word));
            if (w == 0) return -1;
            word = bits_[--w];
        }
    }
    void store(int col, int pivot) {
        // touched_ may list a word more than once if it was zeroed and re-set
        std::sort(touched_.begin(), touched_.end());
        touched_.erase(std::unique(touched_.begin(), touched_.end()), touched_.end());
        auto& dst = stored_[col];
        for (int w : touched_) {
            std::uint64_t word = bits_[w];
            while (word != 0) {
                int b = std::countr_zero(word);
                word &= word - 1;
                dst.push_back((w << 6) + b);
            }
        }
        (void)pivot;
    }

    std::vector<std::uint64_t> bits_;
    std::vector<int> touched_;
    std::vector<std::vector<int>> stored_;
    std::vector<int> pivot_owner_;
};

// --- Z/p reduction: sorted (row, coeff) columns ----------------------------

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

using ZpColumn = std::vector<std::pair<int, int>>;  // (row, coeff in 1..p-1), rows ascending

ZpColumn zp_axpy(const ZpColumn& a, const ZpColumn& b, int factor, int p) {
    // a + factor * b
    ZpColumn out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            int c = static_cast<int>(static_cast<long long>(b[j].second) * factor % p);
            if (c != 0) out.emplace_back(b[j].first, c);
            ++j;
        } else {
            int c = static_cast<int>((a[i].second + static_cast<long long>(b[j].second) * factor) % p);
            if (c != 0) out.emplace_back(a[i].first, c);
            ++i;
            ++j;
        }
    }
    return out;
}

class ZpReducer {
  public:
    ZpReducer(std::size_t n, int p) : p_(p), stored_(n), pivot_owner_(n, -1) {}

    int reduce(int col, const std::vector<int>& boundary_rows) {
        ZpColumn c;
        {
            // boundary with alternating signs in drop-vertex order
            std::vector<std::pair<int, int>> terms;
            terms.reserve(boundary_rows.size());
            int sign = 1;
            for (int r : boundary_rows) {
                terms.emplace_back(r, sign == 1 ? 1 : p_ - 1);
                sign = -sign;
            }
            std::sort(terms.begin(), terms.end());
            c = std::move(terms);
        }
        while (!c.empty()) {
            auto [row, coeff] = c.back();
            int owner = pivot_owner_[row];
            if (owner < 0) {
                pivot_owner_[row] = col;
                stored_[col] = std::move(c);
                return row;
            }
            int owner_coeff = stored_[owner].back().second;
            int factor = static_cast<int>(static_cast<long long>(p_ - coeff) * mod_inv(owner_coeff, p_) % p_);
            c = zp_axpy(c, stored_[owner], factor, p_);
        }
        return -1;
    }

  private:
    int p_;
    std::vector<ZpColumn> stored_;
    std::vector<int> pivot_owner_;
};

}  // namespace

bool is_prime(int p) {
    if (p < 2) return false;
    for (int q = 2; static_cast<long long>(q) * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

bool diagram_point_less(const DiagramPoint& a, const DiagramPoint& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.birth != b.birth) return a.birth < b.birth;
    return a.death < b.death;
}

void PersistenceDiagram::sort_canonical() { std::sort(points.begin(), points.end(), diagram_point_less); }

PersistenceDiagram PersistenceDiagram::restrict_dim(int dim) const {
    PersistenceDiagram out;
    for (const auto& pt : points)
        if (pt.dim == dim) out.points.push_back(pt);
    return out;
}

PersistenceDiagram PersistenceDiagram::restrict_max_dim(int max_dim) const {
    PersistenceDiagram out;
    for (const auto& pt : points)
        if (pt.dim <= max_dim) out.points.push_back(pt);
    return out;
}

bool PersistenceDiagram::same_multiset(const PersistenceDiagram& other) const {
    if (points.size() != other.points.size()) return false;
    auto a = points, b = other.points;
    std::sort(a.begin(), a.end(), diagram_point_less);
    std::sort(b.begin(), b.end(), diagram_point_less);
    return a == b;
}

PersistenceDiagram compute_persistence(const FilteredComplex& K, int field_p) {
    if (!is_prime(field_p)) throw ValidationError("field characteristic must be prime");
    const SortedComplex sc = sort_and_index(K);
    const std::size_t n = sc.order.size();

    // columns grouped by dimension, each group in filtration order
    int top_dim = 0;
    for (const auto* s : sc.order) top_dim = std::max(top_dim, s->dim());
    std::vector<std::vector<int>> by_dim(top_dim + 1);
    for (std::size_t i = 0; i < n; ++i) by_dim[sc.order[i]->dim()].push_back(static_cast<int>(i));

    std::vector<char> paired_as_birth(n, 0);  // set when a column becomes some pivot (clearing)
    std::vector<char> killer(n, 0);           // set when a column reduces to nonzero
    std::vector<std::pair<int, int>> pairs;

    auto run = [&](auto& reducer) {
        for (int d = top_dim; d >= 1; --d) {
            for (int col : by_dim[d]) {
                if (paired_as_birth[col]) continue;  // cleared: known creator, already paired
                int pivot = reducer.reduce(col, sc.facet_rows[col]);
                if (pivot >= 0) {
                    paired_as_birth[pivot] = 1;
                    killer[col] = 1;
                    pairs.emplace_back(pivot, col);
                }
            }
        }
    };
    if (field_p == 2) {
        Z2Reducer reducer(n);
        run(reducer);
    } else {
        ZpReducer reducer(n, field_p);
        run(reducer);
    }

    PersistenceDiagram dgm;
    for (auto [birth, death] : pairs) {
        double b = sc.order[birth]->value, dv = sc.order[death]->value;
        if (b != dv) dgm.points.push_back({sc.order[birth]->dim(), b, dv});
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!paired_as_birth[i] && !killer[i]) dgm.points.push_back({sc.order[i]->dim(), sc.order[i]->value, kInf});
    dgm.sort_canonical();
    return dgm;
}

std::vector<int> betti_at(const FilteredComplex& K, double a, bool strict, int field_p) {
    FilteredComplex sub = K.slice(a, strict);
    PersistenceDiagram dgm = compute_persistence(sub, field_p);
    std::vector<int> betti(K.max_dim + 1, 0);
    for (const auto& pt : dgm.points)
        if (pt.death == kInf) ++betti[pt.dim];
    return betti;
}

int rank_of_inclusion(const FilteredComplex& K, double a, double b, int dim, int field_p) {
    if (a > b) throw ValidationError("rank_of_inclusion needs a <= b");
    PersistenceDiagram dgm = compute_persistence(K, field_p);
    int rank = 0;
    for (const auto& pt : dgm.points)
        if (pt.dim == dim && pt.birth <= a && pt.death > b) ++rank;
    return rank;
}

}  // namespace geomplex
