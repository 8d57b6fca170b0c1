#pragma once

#include <string>
#include <vector>

#include "ramify/matroid.hpp"

namespace ramify {

// All pairwise cophenetic distances between homology classes alive at a common
// base scale.  Unmerged pairs carry +infinity, serialized as "inf".
struct DistanceMatrix {
    double eps = 0;
    std::vector<ElementId> ids;
    std::vector<std::string> labels;
    std::vector<std::vector<double>> values;

    std::size_t size() const { return ids.size(); }
    double at(std::size_t i, std::size_t j) const { return values[i][j]; }
};

// Two classes are merged at a scale when their pair has rank < 2 there AND the
// two classes agree in rank individually: either both still nonzero (one is a
// scalar multiple of the other) or both already boundaries.  A live class and
// a dead one are never merged, which is what makes the distance an ultrametric.
bool merged_at_step(const FilteredMatroid& fm, ElementId a, ElementId b, std::size_t step);

// Smallest critical value eta >= eps with the pair merged, minus eps;
// +infinity if they never merge within the filtration.  Both classes must be
// nonzero at eps (zero classes are rejected).
double cophenetic_distance(const FilteredMatroid& fm, ElementId a, ElementId b, double eps);

// Pairwise distances over the given generators; validated to be an ultrametric
// before returning (a violation means an implementation bug, not bad input).
DistanceMatrix distance_matrix(const FilteredMatroid& fm, double eps, const ElementSet& generators);

// throws InternalError naming the violating triple
void validate_ultrametric(const DistanceMatrix& m);

// CSV with a header row of generator ids and "inf" for unmerged pairs
std::string distance_matrix_csv(const DistanceMatrix& m);

}  // namespace ramify
