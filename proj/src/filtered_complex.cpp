#include "geomplex/filtered_complex.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace geomplex {

bool simplex_less(const Simplex& a, const Simplex& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
}

std::vector<std::vector<int>> facets_of(const std::vector<int>& vertices) {
    std::vector<std::vector<int>> out;
    if (vertices.size() <= 1) return out;
    out.reserve(vertices.size());
    for (std::size_t drop = 0; drop < vertices.size(); ++drop) {
        std::vector<int> face;
        face.reserve(vertices.size() - 1);
        for (std::size_t k = 0; k < vertices.size(); ++k)
            if (k != drop) face.push_back(vertices[k]);
        out.push_back(std::move(face));
    }
    return out;
}

void FilteredComplex::sort_canonical() { std::sort(simplices.begin(), simplices.end(), simplex_less); }

void FilteredComplex::validate() const {
    std::map<std::vector<int>, double> value_of;
    for (const auto& s : simplices) {
        if (s.vertices.empty()) throw ValidationError("empty simplex");
        if (s.dim() > max_dim) throw ValidationError("simplex above max_dim");
        for (int v : s.vertices)
            if (v < 0 || v >= vertex_count) throw ValidationError("vertex index out of range");
        if (!std::is_sorted(s.vertices.begin(), s.vertices.end()) ||
            std::adjacent_find(s.vertices.begin(), s.vertices.end()) != s.vertices.end())
            throw ValidationError("simplex vertices must be sorted and distinct");
        if (!value_of.emplace(s.vertices, s.value).second) throw ValidationError("duplicate simplex");
    }
    for (const auto& s : simplices) {
        for (const auto& face : facets_of(s.vertices)) {
            auto it = value_of.find(face);
            if (it == value_of.end())
                throw ValidationError("complex is not closed under faces (dim " + std::to_string(s.dim()) + ")");
            if (it->second > s.value) throw ValidationError("filtration values are not monotone along faces");
        }
    }
}

FilteredComplex FilteredComplex::slice(double a, bool strict) const {
    FilteredComplex out;
    out.vertex_count = vertex_count;
    out.max_dim = max_dim;
    for (const auto& s : simplices)
        if (strict ? (s.value < a) : (s.value <= a)) out.simplices.push_back(s);
    return out;
}

std::vector<double> FilteredComplex::critical_values() const {
    std::vector<double> vals;
    vals.reserve(simplices.size());
    for (const auto& s : simplices) vals.push_back(s.value);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

}  // namespace geomplex
