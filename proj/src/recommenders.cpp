#include "timeprobe/recommenders.hpp"

#include <algorithm>
#include <cmath>

#include "timeprobe/error.hpp"
#include "timeprobe/format.hpp"

namespace timeprobe {
namespace {

/// k^-e with the exponents 0 and 1 kept exact.
inline double inv_pow(double k, double e) noexcept {
  if (e == 0.0) return 1.0;
  if (e == 1.0) return 1.0 / k;
  return std::pow(k, -e);
}

/// s^theta with 0^theta = 0 for every theta > 0.
inline double pow_theta(double s, double theta) noexcept {
  if (s == 0.0) return 0.0;
  if (theta == 1.0) return s;
  return std::pow(s, theta);
}

/// First pass: spreads edge_weight(beta) from every item of `user` to that
/// item's users. Leaves the per-user totals in ws.mass() and the touched
/// users, ascending, in ws.touched().
template <class EdgeWeight>
void gather_users(const Snapshot& s, UserIndex user, DiffusionWorkspace& ws, EdgeWeight edge_weight) {
  ws.reserve(s.user_space());
  auto& mass = ws.mass();
  auto& touched = ws.touched();
  touched.clear();
  for (const ItemIndex beta : s.items_of(user)) {
    const double w = edge_weight(beta);
    for (const UserIndex j : s.users_of(beta)) {
      if (mass[j] == 0.0) touched.push_back(j);
      mass[j] += w;
    }
  }
  std::sort(touched.begin(), touched.end());
}

/// Second pass: every touched user j adds user_value(j, mass_j) to each of
/// its items. Resets the workspace.
template <class UserValue>
void scatter_items(const Snapshot& s, DiffusionWorkspace& ws, std::span<double> out, UserValue user_value) {
  auto& mass = ws.mass();
  for (const UserIndex j : ws.touched()) {
    const double v = user_value(j, mass[j]);
    mass[j] = 0.0;
    for (const ItemIndex alpha : s.items_of(j)) out[alpha] += v;
  }
  ws.touched().clear();
}

void check_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw ConfigError("lambda must lie in [0, 1]");
}

void check_theta(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) throw ConfigError("theta must be positive");
}

void check_user(const Snapshot& s, UserIndex user) {
  if (user >= s.user_space()) throw ConfigError("user index " + std::to_string(user) + " outside the snapshot");
}

ScoreVector make_vector(const Snapshot& s, UserIndex user) {
  check_user(s, user);
  return ScoreVector{user, std::vector<double>(s.item_space(), 0.0)};
}

}  // namespace

void probs_into(const Snapshot& s, UserIndex user, DiffusionWorkspace& ws, std::span<double> out) {
  std::fill(out.begin(), out.end(), 0.0);
  gather_users(s, user, ws, [&](ItemIndex beta) { return 1.0 / static_cast<double>(s.item_degree(beta)); });
  scatter_items(s, ws, out, [&](UserIndex j, double m) { return m / static_cast<double>(s.user_degree(j)); });
}

void heats_into(const Snapshot& s, UserIndex user, DiffusionWorkspace& ws, std::span<double> out) {
  std::fill(out.begin(), out.end(), 0.0);
  gather_users(s, user, ws, [](ItemIndex) { return 1.0; });
  scatter_items(s, ws, out, [&](UserIndex j, double m) { return m / static_cast<double>(s.user_degree(j)); });
  for (std::size_t alpha = 0; alpha < out.size(); ++alpha)
    if (out[alpha] != 0.0) out[alpha] /= static_cast<double>(s.item_degree(static_cast<ItemIndex>(alpha)));
}

void hybrid_into(const Snapshot& s, UserIndex user, double lambda, DiffusionWorkspace& ws, std::span<double> out) {
  std::fill(out.begin(), out.end(), 0.0);
  gather_users(s, user, ws,
               [&](ItemIndex beta) { return inv_pow(static_cast<double>(s.item_degree(beta)), lambda); });
  scatter_items(s, ws, out, [&](UserIndex j, double m) { return m / static_cast<double>(s.user_degree(j)); });
  if (lambda == 1.0) return;
  for (std::size_t alpha = 0; alpha < out.size(); ++alpha)
    if (out[alpha] != 0.0)
      out[alpha] *= inv_pow(static_cast<double>(s.item_degree(static_cast<ItemIndex>(alpha))), 1.0 - lambda);
}

void sims_into(const Snapshot& s, UserIndex user, double theta, double lambda, DiffusionWorkspace& ws,
               std::span<double> out) {
  std::fill(out.begin(), out.end(), 0.0);
  // mass_j ends up as the similarity s_ij.
  gather_users(s, user, ws, [&](ItemIndex beta) { return 1.0 / static_cast<double>(s.item_degree(beta)); });
  scatter_items(s, ws, out, [&](UserIndex j, double sim) {
    return pow_theta(sim, theta) * inv_pow(static_cast<double>(s.user_degree(j)), lambda);
  });
  if (lambda == 1.0) return;
  for (std::size_t alpha = 0; alpha < out.size(); ++alpha)
    if (out[alpha] != 0.0)
      out[alpha] *= inv_pow(static_cast<double>(s.item_degree(static_cast<ItemIndex>(alpha))), 1.0 - lambda);
}

ScoreVector probs_scores(const Snapshot& s, UserIndex user) {
  auto v = make_vector(s, user);
  DiffusionWorkspace ws(s.user_space());
  probs_into(s, user, ws, v.scores);
  return v;
}

ScoreVector heats_scores(const Snapshot& s, UserIndex user) {
  auto v = make_vector(s, user);
  DiffusionWorkspace ws(s.user_space());
  heats_into(s, user, ws, v.scores);
  return v;
}

ScoreVector hybrid_scores(const Snapshot& s, UserIndex user, double lambda) {
  check_lambda(lambda);
  auto v = make_vector(s, user);
  DiffusionWorkspace ws(s.user_space());
  hybrid_into(s, user, lambda, ws, v.scores);
  return v;
}

ScoreVector sims_scores(const Snapshot& s, UserIndex user, double theta, double lambda) {
  check_theta(theta);
  check_lambda(lambda);
  auto v = make_vector(s, user);
  DiffusionWorkspace ws(s.user_space());
  sims_into(s, user, theta, lambda, ws, v.scores);
  return v;
}

void validate_epsilon(double epsilon, std::size_t max_item_degree) {
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  if (max_item_degree > 0 && !(epsilon * static_cast<double>(max_item_degree) < 1.0))
    throw ConfigError("epsilon " + format_number(epsilon) + " is not below 1 / max item degree (" +
                      std::to_string(max_item_degree) + ")");
}

std::vector<double> degree_increase_scores(const Snapshot& s, Timestamp t, Timestamp tau, double epsilon) {
  if (tau <= 0) throw ConfigError("tau must be positive");
  validate_epsilon(epsilon, s.max_item_degree());
  std::vector<double> scores(s.item_space(), 0.0);
  for (ItemIndex alpha = 0; alpha < scores.size(); ++alpha) {
    const auto k = s.item_degree(alpha);
    if (k == 0) continue;
    scores[alpha] = regularized_increase(s.degree_increase(alpha, t, tau), k, epsilon);
  }
  return scores;
}

ScoreVector di_scores(const EventLog& log, Timestamp tp, Timestamp tau, double epsilon) {
  if (tau <= 0) throw ConfigError("tau must be positive");
  std::size_t max_degree = 0;
  for (ItemIndex alpha = 0; alpha < log.item_count(); ++alpha)
    max_degree = std::max(max_degree, log.item_degree_at(alpha, tp));
  validate_epsilon(epsilon, max_degree);

  ScoreVector v{std::nullopt, std::vector<double>(log.item_count(), 0.0)};
  for (ItemIndex alpha = 0; alpha < log.item_count(); ++alpha) {
    const auto k = log.item_degree_at(alpha, tp);
    if (k == 0) continue;
    v.scores[alpha] = regularized_increase(log.degree_increase(alpha, tp, tau), k, epsilon);
  }
  return v;
}

std::vector<double> temporal_factors(const Snapshot& s, Timestamp t, Timestamp tau, double epsilon) {
  auto factors = degree_increase_scores(s, t, tau, epsilon);
  for (ItemIndex alpha = 0; alpha < factors.size(); ++alpha)
    if (const auto k = s.item_degree(alpha); k > 0) factors[alpha] /= static_cast<double>(k);
  return factors;
}

void apply_factors(std::span<double> scores, std::span<const double> factors) noexcept {
  for (std::size_t alpha = 0; alpha < scores.size(); ++alpha) scores[alpha] *= factors[alpha];
}

ScoreVector temporal_reweight(const ScoreVector& base, const EventLog& log, Timestamp tp, Timestamp tau,
                              double epsilon) {
  const auto di = di_scores(log, tp, tau, epsilon);
  if (base.scores.size() != di.scores.size()) throw ConfigError("score vector does not match the log's item space");
  ScoreVector out = base;
  for (ItemIndex alpha = 0; alpha < out.scores.size(); ++alpha) {
    const auto k = log.item_degree_at(alpha, tp);
    out.scores[alpha] = k == 0 ? 0.0 : out.scores[alpha] * (di.scores[alpha] / static_cast<double>(k));
  }
  return out;
}

const char* to_string(Method method) noexcept {
  switch (method) {
    case Method::probs:
      return "probs";
    case Method::heats:
      return "heats";
    case Method::hybrid:
      return "hybrid";
    case Method::sims:
      return "sims";
    case Method::di:
      return "di";
    case Method::tprobs:
      return "tprobs";
    case Method::thybrid:
      return "thybrid";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  for (const auto m : {Method::probs, Method::heats, Method::hybrid, Method::sims, Method::di, Method::tprobs,
                       Method::thybrid})
    if (name == to_string(m)) return m;
  throw ConfigError("unknown method '" + std::string(name) + "'");
}

bool is_temporal(Method method) noexcept {
  return method == Method::di || method == Method::tprobs || method == Method::thybrid;
}

bool uses_lambda(Method method) noexcept {
  return method == Method::hybrid || method == Method::sims || method == Method::thybrid;
}

bool uses_theta(Method method) noexcept { return method == Method::sims; }

std::string MethodSpec::label() const {
  std::string out = to_string(method);
  std::vector<std::string> parts;
  if (is_temporal(method)) parts.push_back("tau=" + std::to_string(params.tau));
  if (uses_theta(method)) parts.push_back("theta=" + format_number(params.theta));
  if (uses_lambda(method)) parts.push_back("lambda=" + format_number(params.lambda));
  if (parts.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  out += ')';
  return out;
}

nlohmann::json params_json(const MethodSpec& spec) {
  nlohmann::json j = nlohmann::json::object();
  if (is_temporal(spec.method)) {
    j["tau"] = spec.params.tau;
    j["epsilon"] = spec.params.epsilon;
  }
  if (uses_theta(spec.method)) j["theta"] = spec.params.theta;
  if (uses_lambda(spec.method)) j["lambda"] = spec.params.lambda;
  return j;
}

void validate(const MethodSpec& spec, const Snapshot& snapshot) {
  if (uses_lambda(spec.method)) check_lambda(spec.params.lambda);
  if (uses_theta(spec.method)) check_theta(spec.params.theta);
  if (is_temporal(spec.method)) {
    if (spec.params.tau <= 0) throw ConfigError("tau must be positive");
    validate_epsilon(spec.params.epsilon, snapshot.max_item_degree());
  }
}

Scorer::Scorer(const Snapshot& snapshot, MethodSpec spec, Timestamp reference_time)
    : snapshot_(&snapshot), spec_(spec) {
  validate(spec_, snapshot);
  const auto& p = spec_.params;
  if (spec_.method == Method::di) shared_ = degree_increase_scores(snapshot, reference_time, p.tau, p.epsilon);
  if (spec_.method == Method::tprobs || spec_.method == Method::thybrid)
    shared_ = temporal_factors(snapshot, reference_time, p.tau, p.epsilon);
}

void Scorer::score(UserIndex user, DiffusionWorkspace& ws, std::span<double> out) const {
  const auto& s = *snapshot_;
  const auto& p = spec_.params;
  switch (spec_.method) {
    case Method::probs:
      probs_into(s, user, ws, out);
      break;
    case Method::heats:
      heats_into(s, user, ws, out);
      break;
    case Method::hybrid:
      hybrid_into(s, user, p.lambda, ws, out);
      break;
    case Method::sims:
      sims_into(s, user, p.theta, p.lambda, ws, out);
      break;
    case Method::di:
      std::copy(shared_.begin(), shared_.end(), out.begin());
      break;
    case Method::tprobs:
      probs_into(s, user, ws, out);
      apply_factors(out, shared_);
      break;
    case Method::thybrid:
      hybrid_into(s, user, p.lambda, ws, out);
      apply_factors(out, shared_);
      break;
  }
}

ScoreVector Scorer::score(UserIndex user) const {
  check_user(*snapshot_, user);
  ScoreVector v{user, std::vector<double>(snapshot_->item_space(), 0.0)};
  DiffusionWorkspace ws(snapshot_->user_space());
  score(user, ws, v.scores);
  return v;
}

}  // namespace timeprobe
