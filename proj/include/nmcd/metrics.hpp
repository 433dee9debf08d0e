#pragma once

#include <vector>

#include "nmcd/dp.hpp"

namespace nmcd {

// sup over b in `to` of the distance from b to the nearest a in `from`.
// Both sets must be nonempty. Exact (integer) value.
int xi(const std::vector<int>& from, const std::vector<int>& to);

// xi(a, b) + xi(b, a)
int xi_sum(const std::vector<int>& a, const std::vector<int>& b);

// Conventional labels for the two directions of xi between an estimated and
// a true change-point set. Note the formulas: the "over-segmentation" error
// is large when some true point has no nearby estimate, and the
// "under-segmentation" error is large when some estimate is far from every
// true point.
inline int over_segmentation_error(const std::vector<int>& estimate, const std::vector<int>& truth) {
  return xi(estimate, truth);
}
inline int under_segmentation_error(const std::vector<int>& estimate, const std::vector<int>& truth) {
  return xi(truth, estimate);
}

// Rand index of the two interval partitions: fraction of the n*(n-1)/2
// index pairs on whose co-membership the segmentations agree.
double rand_index(const Segmentation& a, const Segmentation& b);

}  // namespace nmcd
