#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "timeprobe/event_log.hpp"
#include "timeprobe/probes.hpp"

namespace timeprobe {

/// Pearson correlation; throws UndefinedMetricError for fewer than two points
/// or a constant series.
double pearson(std::span<const double> x, std::span<const double> y);

/// One row per training item.
struct ItemDegreeRow {
  ItemIndex item = 0;
  /// Reference time minus the item's first training link.
  Timestamp age = 0;
  std::size_t training_degree = 0;
  std::size_t recent_increase = 0;
  std::size_t probe_degree = 0;
};

/// Items with training links; items missing from the probe get k_P = 0.
std::vector<ItemDegreeRow> item_degree_rows(const ProbeSplit& split, Timestamp tau);

struct ProbeCorrelations {
  double training_vs_probe = 0.0;
  double increase_vs_probe = 0.0;
  std::size_t items = 0;
};

/// corr(k_train, k_P) and corr(dk(T_P, tau), k_P) over training items. Throws
/// UndefinedMetricError for an empty probe.
ProbeCorrelations probe_degree_correlations(const ProbeSplit& split, Timestamp tau);

/// CSV: item_id,age,k_train,dk,k_P.
void write_scatter_csv(std::ostream& out, const EventLog& log, std::span<const ItemDegreeRow> rows);

struct HalfLifeStats {
  double mean = 0.0;
  double median = 0.0;
  std::size_t items = 0;
};

/// Time from an item's first link to its ceil(k/2)-th link.
Timestamp item_half_life(std::span<const Timestamp> sorted_times);

/// Mean and median half-life over items with final degree >= min_degree.
/// Items below the floor are skipped; no qualifying item gives zeros.
HalfLifeStats popularity_half_life(const EventLog& log, std::size_t min_degree = 1);

}  // namespace timeprobe
