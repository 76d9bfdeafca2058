#pragma once

#include "geomplex/persistence.hpp"

namespace geomplex {

// One assignment in a bottleneck matching: indices into the two diagrams'
// point lists, -1 meaning the diagonal.
struct MatchEntry {
    int left = -1;
    int right = -1;
};

struct MatchingCertificate {
    std::vector<MatchEntry> pairs;
    double cost = 0.0;
};

struct BottleneckResult {
    double value = 0.0;
    MatchingCertificate certificate;
};

// L-infinity displacement between two diagram points on the extended plane;
// equal infinite coordinates contribute zero.
double linf_displacement(const DiagramPoint& a, const DiagramPoint& b);

// Distance from a point to the diagonal: (death - birth) / 2, infinite for
// points with an infinite coordinate.
double diagonal_cost(const DiagramPoint& p);

// Recomputes the max cost of a certificate against the diagrams it refers
// to. Used to validate certificates independently of the solver.
double certificate_cost(const MatchingCertificate& cert, const PersistenceDiagram& d1, const PersistenceDiagram& d2,
                        int dim);

// Bottleneck distance between the dim-restricted diagrams. Points with
// infinite coordinates are matched within their own class by sorted finite
// coordinate (+infinity if the class sizes differ); the finite part is solved
// exactly by a binary search over the candidate costs with bipartite-matching
// feasibility tests. Returns the optimal value and a witness matching.
BottleneckResult bottleneck_distance(const PersistenceDiagram& d1, const PersistenceDiagram& d2, int dim);

// Exact value by enumerating all partial matchings; the oracle for
// bottleneck_distance. Total point count capped.
double bottleneck_bruteforce(const PersistenceDiagram& d1, const PersistenceDiagram& d2, int dim,
                             int max_points = 8);

}  // namespace geomplex
