#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "timeprobe/metrics.hpp"
#include "timeprobe/probes.hpp"
#include "timeprobe/recommenders.hpp"

namespace timeprobe {

enum class Execution { serial, parallel };

struct EvaluationOptions {
  std::size_t list_length = 50;
  /// Probe users without training links get all-zero scores and are ranked by
  /// tie-break. Turning this off skips them.
  bool include_untrained_users = true;
  Execution execution = Execution::parallel;
};

/// Probe users that take part in evaluation under `options`.
std::vector<UserProbe> evaluation_users(const ProbeSplit& split, const EvaluationOptions& options);

/// Reference path: one Scorer per method, users scored one after another.
std::vector<std::vector<UserOutcome>> evaluate_users_serial(const ProbeSplit& split, std::span<const MethodSpec> methods,
                                                            std::span<const UserProbe> users, std::size_t list_length);

/// OpenMP path. Users are distributed over threads; each thread owns its
/// workspace. Diffusion bases shared by several method points (e.g. ProbS and
/// every TProbS tau) are computed once per user and reweighted. Output is
/// bit-identical to evaluate_users_serial.
std::vector<std::vector<UserOutcome>> evaluate_users_parallel(const ProbeSplit& split,
                                                              std::span<const MethodSpec> methods,
                                                              std::span<const UserProbe> users,
                                                              std::size_t list_length);

/// Scores every probe user under every method and reduces per method in user
/// order. Throws UndefinedMetricError if the split has no evaluable users.
std::vector<MetricsReport> evaluate_split(const ProbeSplit& split, std::span<const MethodSpec> methods,
                                          const EvaluationOptions& options = {});

MetricsReport evaluate_split(const ProbeSplit& split, const MethodSpec& method, const EvaluationOptions& options = {});

/// Sets the OpenMP thread cap; 0 leaves the runtime default.
void set_thread_count(int threads);
int max_threads();

}  // namespace timeprobe
