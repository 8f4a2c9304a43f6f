#include "doctest.h"

#include <cmath>
#include <sstream>

#include "support/fixtures.hpp"
#include "timeprobe/diagnostics.hpp"
#include "timeprobe/error.hpp"
#include "timeprobe/rng.hpp"

using namespace timeprobe;
using fixtures::rec;

TEST_CASE("pearson against a two-pass reference") {
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = 3 + rng.uniform_index(50);
    std::vector<double> x(n);
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = rng.normal();
      y[i] = 0.5 * x[i] + rng.normal();
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) mx += x[i], my += y[i];
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
      sxy += (x[i] - mx) * (y[i] - my);
      sxx += (x[i] - mx) * (x[i] - mx);
      syy += (y[i] - my) * (y[i] - my);
    }
    CHECK(pearson(x, y) == doctest::Approx(sxy / std::sqrt(sxx * syy)).epsilon(1e-12));
  }
  const std::vector<double> a{1, 2, 3};
  const std::vector<double> b{2, 4, 6};
  const std::vector<double> c{5, 5, 5};
  CHECK(pearson(a, b) == doctest::Approx(1.0));
  CHECK_THROWS_AS(pearson(a, c), UndefinedMetricError);
  CHECK_THROWS_AS(pearson(std::vector<double>{1}, std::vector<double>{1}), UndefinedMetricError);
}

TEST_CASE("item rows and correlations") {
  // Item a: old and big, dead recently. Item b: young and hot. Item c: in between.
  std::vector<RawRecord> records;
  for (int k = 0; k < 6; ++k) records.push_back(rec("a" + std::to_string(k), "a", k));
  for (int k = 0; k < 3; ++k) records.push_back(rec("b" + std::to_string(k), "b", 18 + k));
  for (int k = 0; k < 2; ++k) records.push_back(rec("c" + std::to_string(k), "c", 10 + k * 9));
  records.push_back(rec("p1", "b", 21));
  records.push_back(rec("p2", "b", 21));
  records.push_back(rec("p3", "c", 21));
  records.push_back(rec("p4", "new", 21));
  const auto log = EventLog::from_records(std::move(records));
  const auto split = time_probe(log, 21, 1);

  const auto rows = item_degree_rows(split, 5);
  REQUIRE(rows.size() == 3);
  CHECK(log.item_id(rows[0].item) == "a");
  CHECK(rows[0].age == 21);
  CHECK(rows[0].training_degree == 6);
  CHECK(rows[0].recent_increase == 0);
  CHECK(rows[0].probe_degree == 0);
  CHECK(rows[1].recent_increase == 3);
  CHECK(rows[1].probe_degree == 2);
  CHECK(rows[2].age == 11);
  CHECK(rows[2].recent_increase == 1);

  const auto corr = probe_degree_correlations(split, 5);
  CHECK(corr.items == 3);
  CHECK(corr.training_vs_probe < 0.0);
  CHECK(corr.increase_vs_probe > 0.9);

  std::ostringstream out;
  write_scatter_csv(out, log, rows);
  CHECK(out.str().rfind("item_id,age,k_train,dk,k_P\na,21,6,0,0\n", 0) == 0);
}

TEST_CASE("half-life") {
  const std::vector<Timestamp> times{0, 10, 20, 30};
  CHECK(item_half_life(times) == 10);
  CHECK(item_half_life(std::vector<Timestamp>{5}) == 0);
  CHECK(item_half_life(std::vector<Timestamp>{5, 6, 100}) == 1);

  const auto log = EventLog::from_records({rec("u1", "a", 0), rec("u2", "a", 10), rec("u3", "a", 20), rec("u4", "a", 30),
                                           rec("u1", "b", 4), rec("u2", "b", 8), rec("u1", "c", 3)});
  const auto stats = popularity_half_life(log, 2);
  CHECK(stats.items == 2);
  CHECK(stats.mean == doctest::Approx(5.0));
  CHECK(stats.median == doctest::Approx(5.0));
  CHECK(popularity_half_life(log, 100).items == 0);
}
