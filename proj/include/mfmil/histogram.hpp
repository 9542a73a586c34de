#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mfmil {

// Fixed-range binned counts. Values outside [lo, hi] are clamped into the
// end bins so total mass always equals the number of samples added.
struct Histogram {
  double lo = 0.0;
  double hi = 1.0;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;

  Histogram() = default;
  Histogram(double lo_, double hi_, std::size_t bins) : lo(lo_), hi(hi_), counts(bins, 0) {
    if (bins == 0 || !(hi_ > lo_)) throw std::invalid_argument("histogram: bad range or bin count");
  }

  std::size_t bin_index(double x) const {
    double t = (x - lo) / (hi - lo) * static_cast<double>(counts.size());
    auto i = static_cast<std::ptrdiff_t>(t);
    i = std::clamp<std::ptrdiff_t>(i, 0, static_cast<std::ptrdiff_t>(counts.size()) - 1);
    return static_cast<std::size_t>(i);
  }

  void add(double x) {
    ++counts[bin_index(x)];
    ++total;
  }

  double bin_lo(std::size_t i) const {
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(counts.size());
  }
  double bin_hi(std::size_t i) const { return bin_lo(i + 1); }

  // Fraction of mass in bins fully or partially inside [a, b].
  double mass_in(double a, double b) const {
    if (total == 0) return 0.0;
    std::uint64_t inside = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (bin_hi(i) > a && bin_lo(i) < b) inside += counts[i];
    }
    return static_cast<double>(inside) / static_cast<double>(total);
  }
};

}  // namespace mfmil
