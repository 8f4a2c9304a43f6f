#include "timeprobe/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>
#include <vector>

#include "timeprobe/error.hpp"
#include "timeprobe/rng.hpp"

namespace timeprobe {
namespace {

constexpr std::uint64_t kGeneratorStream = 0x67726f77;  // "grow"

std::size_t arrivals_through(double rate, std::size_t steps) {
  return static_cast<std::size_t>(std::floor(rate * static_cast<double>(steps) + 1e-9));
}

}  // namespace

void validate(const GenParams& p) {
  if (p.n_users < 1 || p.n_items_initial < 1 || p.events_per_step < 1 || p.total_steps < 1)
    throw ConfigError("generator counts must be at least 1");
  if (!(p.item_arrival_rate >= 0.0) || !std::isfinite(p.item_arrival_rate))
    throw ConfigError("item arrival rate must be a non-negative number");
  if (!(p.attractiveness > 0.0)) throw ConfigError("initial attractiveness must be positive");
  if (!(p.decay_mean > 0.0)) throw ConfigError("relevance decay timescale must be positive");
  if (!(p.decay_spread >= 0.0) || !std::isfinite(p.decay_spread))
    throw ConfigError("relevance decay spread must be a non-negative number");
  if (p.max_retries < 1) throw ConfigError("max_retries must be at least 1");

  const double items = static_cast<double>(p.n_items_initial + arrivals_through(p.item_arrival_rate, p.total_steps));
  const double pairs = static_cast<double>(p.n_users) * items;
  const double events = static_cast<double>(p.events_per_step) * static_cast<double>(p.total_steps);
  if (pairs < events)
    throw ConfigError("users x items (" + std::to_string(static_cast<long long>(pairs)) + ") is smaller than the number of events (" +
                      std::to_string(static_cast<long long>(events)) + ")");
}

EventLog generate(const GenParams& p) {
  validate(p);
  Rng rng(child_seed(p.seed, kGeneratorStream, 0));

  std::vector<Timestamp> birth;
  std::vector<double> timescale;
  std::vector<std::size_t> degree;
  const auto add_item = [&](Timestamp t) {
    birth.push_back(t);
    if (p.aging()) {
      const double z = rng.normal();
      // Log-normal with mean decay_mean.
      timescale.push_back(p.decay_mean * std::exp(p.decay_spread * z - 0.5 * p.decay_spread * p.decay_spread));
    } else {
      timescale.push_back(std::numeric_limits<double>::infinity());
    }
    degree.push_back(0);
  };
  for (std::size_t i = 0; i < p.n_items_initial; ++i) add_item(0);

  std::unordered_set<std::uint64_t> pairs;
  pairs.reserve(p.events_per_step * p.total_steps);
  std::vector<RawRecord> records;
  records.reserve(p.events_per_step * p.total_steps);
  std::vector<double> cumulative;
  std::vector<ItemIndex> linked;

  for (std::size_t step = 0; step < p.total_steps; ++step) {
    const auto t = static_cast<Timestamp>(step);
    const auto arrivals = arrivals_through(p.item_arrival_rate, step + 1) - arrivals_through(p.item_arrival_rate, step);
    for (std::size_t a = 0; a < arrivals; ++a) add_item(t);

    // Attachment weights (k + A) R(t), normalized by the largest one in log
    // space so that strongly decayed items underflow to 0 instead of everything.
    const std::size_t n_items = birth.size();
    cumulative.resize(n_items);
    double max_log = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n_items; ++i) {
      const double age = static_cast<double>(t - birth[i]);
      cumulative[i] = std::log(static_cast<double>(degree[i]) + p.attractiveness) - age / timescale[i];
      max_log = std::max(max_log, cumulative[i]);
    }
    double total = 0.0;
    for (std::size_t i = 0; i < n_items; ++i) {
      total += std::exp(cumulative[i] - max_log);
      cumulative[i] = total;
    }

    linked.clear();
    for (std::size_t e = 0; e < p.events_per_step; ++e) {
      std::size_t attempt = 0;
      while (true) {
        const auto user = static_cast<std::uint64_t>(rng.uniform_index(p.n_users));
        const double target = rng.uniform01() * total;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
        if (it == cumulative.end()) --it;
        const auto item = static_cast<std::uint64_t>(it - cumulative.begin());
        if (pairs.insert((user << 32) | item).second) {
          records.push_back({std::to_string(user), std::to_string(item), t, std::nullopt});
          linked.push_back(static_cast<ItemIndex>(item));
          break;
        }
        if (++attempt >= p.max_retries)
          throw ConfigError("rejection sampling found no new (user, item) pair at step " + std::to_string(step));
      }
    }
    // Degrees advance once per step: every draw in a step sees k(t).
    for (const auto item : linked) ++degree[item];
  }
  return EventLog::from_records(std::move(records), "step");
}

nlohmann::json to_json(const GenParams& p) {
  nlohmann::json j;
  j["n_users"] = p.n_users;
  j["n_items_initial"] = p.n_items_initial;
  j["item_arrival_rate"] = p.item_arrival_rate;
  j["events_per_step"] = p.events_per_step;
  if (p.aging())
    j["decay_mean"] = p.decay_mean;
  else
    j["decay_mean"] = "inf";
  j["decay_spread"] = p.decay_spread;
  j["attractiveness"] = p.attractiveness;
  j["total_steps"] = p.total_steps;
  j["seed"] = p.seed;
  j["max_retries"] = p.max_retries;
  return j;
}

GenParams gen_params_from_json(const nlohmann::json& j) {
  GenParams p;
  try {
    p.n_users = j.value("n_users", p.n_users);
    p.n_items_initial = j.value("n_items_initial", p.n_items_initial);
    p.item_arrival_rate = j.value("item_arrival_rate", p.item_arrival_rate);
    p.events_per_step = j.value("events_per_step", p.events_per_step);
    if (j.contains("decay_mean")) {
      const auto& d = j.at("decay_mean");
      p.decay_mean = d.is_string() && d.get<std::string>() == "inf" ? std::numeric_limits<double>::infinity()
                                                                    : d.get<double>();
    }
    p.decay_spread = j.value("decay_spread", p.decay_spread);
    p.attractiveness = j.value("attractiveness", p.attractiveness);
    p.total_steps = j.value("total_steps", p.total_steps);
    p.seed = j.value("seed", p.seed);
    p.max_retries = j.value("max_retries", p.max_retries);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid generator parameters: ") + e.what());
  }
  return p;
}

}  // namespace timeprobe
