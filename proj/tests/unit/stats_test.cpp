#include <doctest.h>

#include <cmath>

#include "sfcplace/stats.hpp"

using namespace sfcplace;

TEST_CASE("summary mean and t interval") {
  const Summary s = summarize({1, 2, 3, 4, 5});
  CHECK(s.n == 5);
  CHECK(s.mean == doctest::Approx(3.0));
  // t(0.975, 4) = 2.776445, sd = sqrt(2.5)
  CHECK(s.ci95 == doctest::Approx(2.776445 * std::sqrt(2.5) / std::sqrt(5.0)).epsilon(1e-6));
  CHECK(summarize({7}).ci95 == 0.0);
  CHECK(summarize({}).n == 0);
  CHECK(summarize({4, 4, 4}).ci95 == 0.0);
}

TEST_CASE("spearman with ties") {
  CHECK(*spearman({1, 2, 3, 4}, {10, 20, 30, 40}) == doctest::Approx(1.0));
  CHECK(*spearman({1, 2, 3, 4}, {4, 3, 2, 1}) == doctest::Approx(-1.0));
  CHECK(*spearman({1, 2, 3, 4}, {1, 1, 2, 2}) == doctest::Approx(0.894427).epsilon(1e-5));
  CHECK_FALSE(spearman({1, 2, 3}, {5, 5, 5}).has_value());
  CHECK_FALSE(spearman({1}, {2}).has_value());
}
