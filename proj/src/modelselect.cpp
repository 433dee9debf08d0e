#include "nmcd/modelselect.hpp"

#include <cmath>
#include <stdexcept>

namespace nmcd {

double default_zeta(int n, double exponent) {
  if (n < 3) throw std::invalid_argument("default zeta needs n >= 3");
  if (!(exponent > 0.0)) throw std::invalid_argument("zeta exponent must be positive");
  return std::pow(std::log(static_cast<double>(n)), exponent) / 2.0;
}

BicTrace select_bic(const std::map<int, double>& dp_values, double zeta, int l_min, int k_bar) {
  if (l_min != 0 && l_min != 1) throw std::invalid_argument("l_min must be 0 or 1");
  if (k_bar < l_min) throw std::invalid_argument("k_bar below l_min");
  if (!(zeta > 0.0) || !std::isfinite(zeta)) throw std::invalid_argument("zeta must be positive");

  BicTrace trace;
  trace.zeta = zeta;
  trace.l_min = l_min;
  trace.k_bar = k_bar;
  trace.entries.reserve(k_bar - l_min + 1);

  bool found = false;
  double best = 0.0;
  for (int l = l_min; l <= k_bar; ++l) {
    const auto it = dp_values.find(l);
    if (it == dp_values.end()) throw std::invalid_argument("dp_values missing an L in range");
    const double bic = -it->second + l * zeta;
    trace.entries.push_back({l, it->second, bic});
    if (std::isfinite(bic) && (!found || bic < best)) {
      found = true;
      best = bic;
      trace.k_hat = l;
    }
  }
  if (!found) throw std::invalid_argument("no finite criterion value in range");
  return trace;
}

}  // namespace nmcd
