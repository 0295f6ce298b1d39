#pragma once

#include <optional>
#include <vector>

namespace sfcplace {

struct Summary {
  std::size_t n = 0;
  double mean = 0.0;
  // Half-width of the two-sided 95% confidence interval (Student t);
  // 0 for fewer than two samples.
  double ci95 = 0.0;
};

Summary summarize(const std::vector<double>& values);

// Spearman rank correlation with average ranks for ties. nullopt when
// either side is constant or there are fewer than two pairs.
std::optional<double> spearman(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace sfcplace
