#include "timeprobe/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "timeprobe/error.hpp"

namespace timeprobe {

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ConfigError("pearson: series lengths differ");
  if (x.size() < 2) throw UndefinedMetricError("pearson: fewer than two points");
  const auto n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw UndefinedMetricError("pearson: zero variance");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<ItemDegreeRow> item_degree_rows(const ProbeSplit& split, Timestamp tau) {
  if (tau <= 0) throw ConfigError("tau must be positive");
  const auto& training = split.training;
  const auto reference = split.reference_time();
  std::vector<std::size_t> probe_degree(training.item_space(), 0);
  for (const auto& e : split.probe) ++probe_degree[e.item];

  std::vector<ItemDegreeRow> rows;
  rows.reserve(training.active_item_count());
  for (ItemIndex alpha = 0; alpha < training.item_space(); ++alpha) {
    const auto k = training.item_degree(alpha);
    if (k == 0) continue;
    ItemDegreeRow row;
    row.item = alpha;
    row.age = reference - training.item_times(alpha).front();
    row.training_degree = k;
    row.recent_increase = training.degree_increase(alpha, reference, tau);
    row.probe_degree = probe_degree[alpha];
    rows.push_back(row);
  }
  return rows;
}

ProbeCorrelations probe_degree_correlations(const ProbeSplit& split, Timestamp tau) {
  if (split.probe.empty()) throw UndefinedMetricError("correlations need a non-empty probe");
  const auto rows = item_degree_rows(split, tau);
  std::vector<double> k;
  std::vector<double> dk;
  std::vector<double> kp;
  k.reserve(rows.size());
  dk.reserve(rows.size());
  kp.reserve(rows.size());
  for (const auto& r : rows) {
    k.push_back(static_cast<double>(r.training_degree));
    dk.push_back(static_cast<double>(r.recent_increase));
    kp.push_back(static_cast<double>(r.probe_degree));
  }
  return {pearson(k, kp), pearson(dk, kp), rows.size()};
}

void write_scatter_csv(std::ostream& out, const EventLog& log, std::span<const ItemDegreeRow> rows) {
  out << "item_id,age,k_train,dk,k_P\n";
  for (const auto& r : rows)
    out << log.item_id(r.item) << ',' << r.age << ',' << r.training_degree << ',' << r.recent_increase << ','
        << r.probe_degree << '\n';
}

Timestamp item_half_life(std::span<const Timestamp> sorted_times) {
  if (sorted_times.empty()) return 0;
  const auto half = (sorted_times.size() + 1) / 2;  // ceil(k / 2), 1-based
  return sorted_times[half - 1] - sorted_times.front();
}

HalfLifeStats popularity_half_life(const EventLog& log, std::size_t min_degree) {
  if (log.empty()) throw EmptyLogError("half-life needs a non-empty log");
  std::vector<double> values;
  for (ItemIndex alpha = 0; alpha < log.item_count(); ++alpha) {
    const auto times = log.item_times(alpha);
    if (times.size() < std::max<std::size_t>(min_degree, 1)) continue;
    values.push_back(static_cast<double>(item_half_life(times)));
  }
  HalfLifeStats stats;
  stats.items = values.size();
  if (values.empty()) return stats;
  double sum = 0.0;
  for (const double v : values) sum += v;
  stats.mean = sum / static_cast<double>(values.size());
  std::sort(values.begin(), values.end());
  const auto mid = values.size() / 2;
  stats.median = values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
  return stats;
}

}  // namespace timeprobe
