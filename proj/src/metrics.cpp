#include "nmcd/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace nmcd {

int xi(const std::vector<int>& from, const std::vector<int>& to) {
  if (from.empty() || to.empty()) throw std::invalid_argument("xi needs nonempty index sets");
  std::vector<int> a(from);
  std::sort(a.begin(), a.end());
  int sup = 0;
  for (int b : to) {
    const auto it = std::lower_bound(a.begin(), a.end(), b);
    int nearest = std::abs((it != a.end() ? *it : a.back()) - b);
    if (it != a.begin()) nearest = std::min(nearest, b - *(it - 1));
    sup = std::max(sup, nearest);
  }
  return sup;
}

int xi_sum(const std::vector<int>& a, const std::vector<int>& b) {
  return xi(a, b) + xi(b, a);
}

namespace {

double pairs_within(const std::vector<int>& boundaries) {
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < boundaries.size(); ++k) {
    const double len = boundaries[k + 1] - boundaries[k];
    total += len * (len - 1) / 2.0;
  }
  return total;
}

}  // namespace

double rand_index(const Segmentation& a, const Segmentation& b) {
  if (a.n != b.n) throw std::invalid_argument("rand_index needs equal lengths");
  if (a.n < 2) throw std::invalid_argument("rand_index needs n >= 2");
  const std::vector<int> ba = a.boundaries();
  const std::vector<int> bb = b.boundaries();

  // co-membership in both: walk the refinement of the two partitions
  double both = 0.0;
  std::size_t ia = 0, ib = 0;
  int pos = 1;
  while (pos <= a.n) {
    const int end = std::min(ba[ia + 1], bb[ib + 1]);
    const double len = end - pos;
    both += len * (len - 1) / 2.0;
    pos = end;
    if (ba[ia + 1] == end) ++ia;
    if (bb[ib + 1] == end) ++ib;
  }

  const double n = a.n;
  const double total = n * (n - 1) / 2.0;
  return (total - pairs_within(ba) - pairs_within(bb) + 2.0 * both) / total;
}

}  // namespace nmcd
