#include "timeprobe/metrics.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "timeprobe/error.hpp"

namespace timeprobe {

std::vector<UserProbe> group_probe(std::span<const Event> probe) {
  std::map<UserIndex, std::vector<ItemIndex>> grouped;
  for (const auto& e : probe) grouped[e.user].push_back(e.item);
  std::vector<UserProbe> out;
  out.reserve(grouped.size());
  for (auto& [user, items] : grouped) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    out.push_back({user, std::move(items)});
  }
  return out;
}

UserOutcome user_outcome(std::span<const double> scores, const Snapshot& snapshot, const UserProbe& probe,
                         std::size_t list_length) {
  if (list_length < 1) throw ConfigError("list length must be at least 1");
  const UserIndex user = probe.user;
  UserOutcome outcome;
  outcome.user = user;
  outcome.probe_item_count = probe.items.size();

  // Probe items that can appear in the ranking, with their "ranked ahead" counters.
  std::vector<ItemIndex> rankable;
  for (const auto alpha : probe.items)
    if (alpha < snapshot.item_space() && snapshot.item_degree(alpha) > 0 && !snapshot.has_edge(user, alpha))
      rankable.push_back(alpha);
  std::vector<std::size_t> ahead(rankable.size(), 0);

  std::vector<ItemIndex> candidates;
  candidates.reserve(snapshot.active_item_count());
  const auto collected = snapshot.items_of(user);
  auto next = collected.begin();
  for (ItemIndex alpha = 0; alpha < snapshot.item_space(); ++alpha) {
    if (snapshot.item_degree(alpha) == 0) continue;
    if (next != collected.end() && *next == alpha) {
      ++next;
      continue;
    }
    candidates.push_back(alpha);
    const double sa = scores[alpha];
    for (std::size_t p = 0; p < rankable.size(); ++p)
      if (ranks_before(sa, alpha, scores[rankable[p]], rankable[p])) ++ahead[p];
  }

  const double denominator = static_cast<double>(candidates.size());
  outcome.relative_ranks.reserve(probe.items.size());
  std::size_t r = 0;
  for (const auto alpha : probe.items) {
    if (r < rankable.size() && rankable[r] == alpha) {
      const auto position = ahead[r] + 1;
      if (position <= list_length) ++outcome.hits;
      outcome.relative_ranks.push_back(static_cast<double>(position) / denominator);
      ++r;
    } else {
      outcome.relative_ranks.push_back(1.0);
    }
  }

  const auto top = std::min(list_length, candidates.size());
  outcome.list_length = top;
  if (top > 0) {
    std::nth_element(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(top - 1), candidates.end(),
                     [&](ItemIndex a, ItemIndex b) { return ranks_before(scores[a], a, scores[b], b); });
    // Sort the head so the degree sum runs in rank order.
    std::sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(top),
              [&](ItemIndex a, ItemIndex b) { return ranks_before(scores[a], a, scores[b], b); });
    double degree_sum = 0.0;
    for (std::size_t n = 0; n < top; ++n) degree_sum += static_cast<double>(snapshot.item_degree(candidates[n]));
    outcome.top_degree_mean = degree_sum / static_cast<double>(top);
  }
  return outcome;
}

MetricsReport summarize(std::span<const UserOutcome> outcomes, std::size_t list_length) {
  MetricsReport report;
  report.list_length = list_length;
  double recall_sum = 0.0;
  double rank_sum = 0.0;
  double degree_sum = 0.0;
  std::size_t degree_users = 0;
  for (const auto& o : outcomes) {
    if (o.probe_item_count == 0) continue;
    ++report.users;
    recall_sum += static_cast<double>(o.hits) / static_cast<double>(o.probe_item_count);
    for (const double r : o.relative_ranks) rank_sum += r;
    report.probe_entries += o.relative_ranks.size();
    if (o.list_length > 0) {
      degree_sum += o.top_degree_mean;
      ++degree_users;
    }
  }
  if (report.users == 0) throw UndefinedMetricError("no probe entries to evaluate");
  report.recall = recall_sum / static_cast<double>(report.users);
  report.ranking_score = rank_sum / static_cast<double>(report.probe_entries);
  report.mean_top_degree = degree_users ? degree_sum / static_cast<double>(degree_users) : 0.0;
  return report;
}

double recall_at_L(std::span<const RecommendationList> lists, std::span<const Event> probe, std::size_t list_length) {
  if (list_length < 1) throw ConfigError("list length must be at least 1");
  const auto users = group_probe(probe);
  if (users.empty()) throw UndefinedMetricError("recall is undefined for an empty probe");
  std::unordered_map<UserIndex, const RecommendationList*> by_user;
  for (const auto& list : lists) by_user[list.user] = &list;

  double total = 0.0;
  for (const auto& up : users) {
    std::size_t hits = 0;
    if (const auto it = by_user.find(up.user); it != by_user.end()) {
      const auto& items = it->second->items;
      const auto n = std::min(list_length, items.size());
      for (std::size_t k = 0; k < n; ++k)
        if (std::binary_search(up.items.begin(), up.items.end(), items[k])) ++hits;
    }
    total += static_cast<double>(hits) / static_cast<double>(up.items.size());
  }
  return total / static_cast<double>(users.size());
}

double ranking_score(std::span<const FullRanking> rankings, std::span<const Event> probe, const Snapshot& snapshot) {
  if (probe.empty()) throw UndefinedMetricError("ranking score is undefined for an empty probe");
  std::unordered_map<UserIndex, std::unordered_map<ItemIndex, std::size_t>> positions;
  for (const auto& ranking : rankings) {
    auto& pos = positions[ranking.user];
    for (std::size_t k = 0; k < ranking.items.size(); ++k) pos.emplace(ranking.items[k], k + 1);
  }
  double total = 0.0;
  for (const auto& e : probe) {
    const auto it = positions.find(e.user);
    if (it == positions.end()) throw ConfigError("no ranking supplied for probe user " + std::to_string(e.user));
    const auto p = it->second.find(e.item);
    if (p == it->second.end()) {
      total += 1.0;
      continue;
    }
    const auto uncollected = snapshot.active_item_count() - snapshot.user_degree(e.user);
    total += static_cast<double>(p->second) / static_cast<double>(uncollected);
  }
  return total / static_cast<double>(probe.size());
}

double avg_degree_top_L(std::span<const RecommendationList> lists, const Snapshot& snapshot, std::size_t list_length) {
  if (list_length < 1) throw ConfigError("list length must be at least 1");
  double total = 0.0;
  std::size_t counted = 0;
  for (const auto& list : lists) {
    const auto n = std::min(list_length, list.items.size());
    if (n == 0) continue;
    double sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) sum += static_cast<double>(snapshot.item_degree(list.items[k]));
    total += sum / static_cast<double>(n);
    ++counted;
  }
  return counted ? total / static_cast<double>(counted) : 0.0;
}

nlohmann::json to_json(const MetricsReport& report) {
  nlohmann::json j;
  j["method"] = report.method;
  j["params"] = report.params;
  j["L"] = report.list_length;
  j["recall"] = report.recall;
  j["ranking_score"] = report.ranking_score;
  j["k_R"] = report.mean_top_degree;
  j["users"] = report.users;
  j["probe_entries"] = report.probe_entries;
  j["cold_item_fraction"] = report.cold_fraction;
  j["probe"] = report.probe;
  return j;
}

}  // namespace timeprobe
