#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "timeprobe/event_log.hpp"
#include "timeprobe/snapshot.hpp"

namespace timeprobe {

/// Per-user item scores, indexed by ItemIndex over the snapshot's item space.
/// Items without training links always score 0 and are never ranked.
struct ScoreVector {
  /// Empty for non-personalized scores (DI).
  std::optional<UserIndex> user;
  std::vector<double> scores;
};

/// Scratch space for one diffusion pass. Reusable across users; one per
/// thread when scoring in parallel.
class DiffusionWorkspace {
 public:
  explicit DiffusionWorkspace(std::size_t user_space = 0) : mass_(user_space, 0.0) {}

  void reserve(std::size_t user_space) {
    if (mass_.size() < user_space) mass_.assign(user_space, 0.0);
  }

  /// Per-user accumulator plus the list of touched users; both are reset by
  /// the kernels after use so the buffer stays all-zero between calls.
  std::vector<double>& mass() noexcept { return mass_; }
  std::vector<UserIndex>& touched() noexcept { return touched_; }

 private:
  std::vector<double> mass_;
  std::vector<UserIndex> touched_;
};

// Sparse diffusion kernels. Each writes item scores for `user` into `out`
// (size item_space, overwritten) using two propagation passes over the CSR
// adjacency: items of the user -> their users -> those users' items.

/// Probabilistic spreading (mass diffusion). Scores sum to k_user.
void probs_into(const Snapshot& snapshot, UserIndex user, DiffusionWorkspace& ws, std::span<double> out);

/// Heat spreading: h_a = (1/k_a) sum_j a_ja (1/k_j) sum_b a_jb a_ib.
/// Reconstructed from the heat-conduction recommender literature.
void heats_into(const Snapshot& snapshot, UserIndex user, DiffusionWorkspace& ws, std::span<double> out);

/// ProbS-HeatS hybrid with weight (k_a^(1-lambda) k_b^lambda)^-1 sum_j a_ja a_jb / k_j.
/// lambda = 1 is ProbS, lambda = 0 is HeatS. Reconstructed, like heats_into.
void hybrid_into(const Snapshot& snapshot, UserIndex user, double lambda, DiffusionWorkspace& ws,
                 std::span<double> out);

/// Similarity-preferential diffusion. User similarity s_ij = sum_b a_ib a_jb / k_b
/// is computed on demand for the target user; scores are
/// sum_j a_ja s_ij^theta / (k_j^lambda k_a^(1-lambda)).
void sims_into(const Snapshot& snapshot, UserIndex user, double theta, double lambda, DiffusionWorkspace& ws,
               std::span<double> out);

ScoreVector probs_scores(const Snapshot& snapshot, UserIndex user);
ScoreVector heats_scores(const Snapshot& snapshot, UserIndex user);
/// Throws ConfigError unless 0 <= lambda <= 1.
ScoreVector hybrid_scores(const Snapshot& snapshot, UserIndex user, double lambda);
/// Throws ConfigError unless theta > 0 and 0 <= lambda <= 1.
ScoreVector sims_scores(const Snapshot& snapshot, UserIndex user, double theta, double lambda);

/// Throws ConfigError unless 0 < epsilon < 1 / max item degree, which keeps
/// the epsilon term from reordering items of different degree increase.
void validate_epsilon(double epsilon, std::size_t max_item_degree);

/// dk + epsilon * k for one item.
inline double regularized_increase(std::size_t dk, std::size_t k, double epsilon) noexcept {
  return static_cast<double>(dk) + epsilon * static_cast<double>(k);
}

/// Regularized recent degree increase dk(t, tau) + epsilon * k(t) per item of
/// the snapshot; 0 for items without links.
std::vector<double> degree_increase_scores(const Snapshot& snapshot, Timestamp t, Timestamp tau, double epsilon);

/// DI computed from the log at T_P: identical for every user.
ScoreVector di_scores(const EventLog& log, Timestamp tp, Timestamp tau, double epsilon);

/// Multipliers (dk(t, tau) + epsilon k(t)) / k(t); 0 for items without links.
std::vector<double> temporal_factors(const Snapshot& snapshot, Timestamp t, Timestamp tau, double epsilon);

/// Element-wise product; used for TProbS (base = ProbS) and THybrid (base = hybrid).
void apply_factors(std::span<double> scores, std::span<const double> factors) noexcept;

/// Multiplies base scores by dk'/k evaluated on the log at T_P.
ScoreVector temporal_reweight(const ScoreVector& base, const EventLog& log, Timestamp tp, Timestamp tau,
                              double epsilon);

enum class Method { probs, heats, hybrid, sims, di, tprobs, thybrid };

const char* to_string(Method method) noexcept;
/// Accepts the lower-case names printed by to_string.
Method parse_method(std::string_view name);
/// Methods that read timestamps (tau applies).
bool is_temporal(Method method) noexcept;
bool uses_lambda(Method method) noexcept;
bool uses_theta(Method method) noexcept;

struct MethodParams {
  Timestamp tau = 1;
  double epsilon = 1e-9;
  double lambda = 0.5;
  double theta = 1.0;
};

/// A method with concrete parameter values.
struct MethodSpec {
  Method method = Method::probs;
  MethodParams params;

  /// e.g. "thybrid(tau=5,lambda=0.2)"; only parameters the method uses.
  std::string label() const;
};

/// Parameters the method uses, as a JSON object.
nlohmann::json params_json(const MethodSpec& spec);

/// Checks parameter ranges; epsilon is checked against the snapshot when
/// the method uses it.
void validate(const MethodSpec& spec, const Snapshot& snapshot);

/// A method prepared for one snapshot and reference time. Holds the
/// user-independent part (temporal factors or DI scores), so scoring a user
/// only touches the workspace and the output buffer. Safe to share across
/// threads.
class Scorer {
 public:
  Scorer(const Snapshot& snapshot, MethodSpec spec, Timestamp reference_time);

  const MethodSpec& spec() const noexcept { return spec_; }
  const Snapshot& snapshot() const noexcept { return *snapshot_; }
  /// DI scores for di, dk'/k multipliers for tprobs/thybrid, empty otherwise.
  std::span<const double> shared_values() const noexcept { return shared_; }

  void score(UserIndex user, DiffusionWorkspace& ws, std::span<double> out) const;
  ScoreVector score(UserIndex user) const;

 private:
  const Snapshot* snapshot_;
  MethodSpec spec_;
  std::vector<double> shared_;
};

}  // namespace timeprobe
