#include "timeprobe/evaluation.hpp"

#include <omp.h>

#include <algorithm>
#include <cstddef>

#include "timeprobe/error.hpp"

namespace timeprobe {
namespace {

/// Method points that share one diffusion base. TProbS reweights ProbS and
/// THybrid reweights the hybrid with the same lambda.
struct BaseGroup {
  MethodSpec base;
  std::vector<std::size_t> members;
};

MethodSpec base_of(const MethodSpec& spec) {
  MethodSpec base = spec;
  if (spec.method == Method::tprobs) base.method = Method::probs;
  if (spec.method == Method::thybrid) base.method = Method::hybrid;
  if (!is_temporal(base.method)) base.params.tau = 1;
  if (!uses_lambda(base.method)) base.params.lambda = 0.0;
  if (!uses_theta(base.method)) base.params.theta = 1.0;
  return base;
}

bool same_base(const MethodSpec& a, const MethodSpec& b) {
  if (a.method != b.method) return false;
  // DI is never shared: its scores depend on tau.
  if (a.method == Method::di) return false;
  return a.params.lambda == b.params.lambda && a.params.theta == b.params.theta;
}

std::vector<BaseGroup> group_methods(std::span<const MethodSpec> methods) {
  std::vector<BaseGroup> groups;
  for (std::size_t m = 0; m < methods.size(); ++m) {
    const auto base = base_of(methods[m]);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const BaseGroup& g) { return same_base(g.base, base); });
    if (it == groups.end()) {
      groups.push_back({base, {}});
      it = groups.end() - 1;
    }
    it->members.push_back(m);
  }
  return groups;
}

void check_list_length(std::size_t list_length) {
  if (list_length < 1) throw ConfigError("list length must be at least 1");
}

}  // namespace

std::vector<UserProbe> evaluation_users(const ProbeSplit& split, const EvaluationOptions& options) {
  auto users = group_probe(split.probe);
  if (!options.include_untrained_users)
    std::erase_if(users, [&](const UserProbe& up) { return split.training.user_degree(up.user) == 0; });
  return users;
}

std::vector<std::vector<UserOutcome>> evaluate_users_serial(const ProbeSplit& split, std::span<const MethodSpec> methods,
                                                            std::span<const UserProbe> users,
                                                            std::size_t list_length) {
  check_list_length(list_length);
  const auto& snapshot = split.training;
  std::vector<std::vector<UserOutcome>> outcomes(methods.size());
  DiffusionWorkspace ws(snapshot.user_space());
  std::vector<double> scores(snapshot.item_space());
  for (std::size_t m = 0; m < methods.size(); ++m) {
    const Scorer scorer(snapshot, methods[m], split.reference_time());
    outcomes[m].reserve(users.size());
    for (const auto& up : users) {
      scorer.score(up.user, ws, scores);
      outcomes[m].push_back(user_outcome(scores, snapshot, up, list_length));
    }
  }
  return outcomes;
}

std::vector<std::vector<UserOutcome>> evaluate_users_parallel(const ProbeSplit& split,
                                                              std::span<const MethodSpec> methods,
                                                              std::span<const UserProbe> users,
                                                              std::size_t list_length) {
  check_list_length(list_length);
  const auto& snapshot = split.training;
  const auto reference = split.reference_time();

  // Scorers validate parameters and precompute user-independent vectors
  // before any thread starts, so nothing inside the parallel region throws.
  std::vector<Scorer> scorers;
  scorers.reserve(methods.size());
  for (const auto& spec : methods) scorers.emplace_back(snapshot, spec, reference);
  const auto groups = group_methods(methods);
  std::vector<Scorer> base_scorers;
  base_scorers.reserve(groups.size());
  for (const auto& g : groups) base_scorers.emplace_back(snapshot, g.base, reference);

  std::vector<std::vector<UserOutcome>> outcomes(methods.size(), std::vector<UserOutcome>(users.size()));
  const auto n = static_cast<std::ptrdiff_t>(users.size());

#pragma omp parallel
  {
    DiffusionWorkspace ws(snapshot.user_space());
    std::vector<double> base(snapshot.item_space());
    std::vector<double> scores(snapshot.item_space());
#pragma omp for schedule(dynamic, 4)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      const auto& up = users[static_cast<std::size_t>(k)];
      for (std::size_t g = 0; g < groups.size(); ++g) {
        base_scorers[g].score(up.user, ws, base);
        for (const auto m : groups[g].members) {
          const auto& spec = methods[m];
          if (spec.method == Method::tprobs || spec.method == Method::thybrid) {
            std::copy(base.begin(), base.end(), scores.begin());
            apply_factors(scores, scorers[m].shared_values());
            outcomes[m][static_cast<std::size_t>(k)] = user_outcome(scores, snapshot, up, list_length);
          } else {
            outcomes[m][static_cast<std::size_t>(k)] = user_outcome(base, snapshot, up, list_length);
          }
        }
      }
    }
  }
  return outcomes;
}

std::vector<MetricsReport> evaluate_split(const ProbeSplit& split, std::span<const MethodSpec> methods,
                                          const EvaluationOptions& options) {
  if (split.status == ProbeStatus::empty_probe) throw UndefinedMetricError("probe is empty");
  const auto users = evaluation_users(split, options);
  if (users.empty()) throw UndefinedMetricError("probe has no evaluable users");

  const auto outcomes = options.execution == Execution::serial
                            ? evaluate_users_serial(split, methods, users, options.list_length)
                            : evaluate_users_parallel(split, methods, users, options.list_length);

  const auto probe = describe(split);
  std::vector<MetricsReport> reports;
  reports.reserve(methods.size());
  for (std::size_t m = 0; m < methods.size(); ++m) {
    auto report = summarize(outcomes[m], options.list_length);
    report.method = methods[m].label();
    report.params = params_json(methods[m]);
    report.probe = probe;
    report.cold_fraction = split.cold_fraction();
    reports.push_back(std::move(report));
  }
  return reports;
}

MetricsReport evaluate_split(const ProbeSplit& split, const MethodSpec& method, const EvaluationOptions& options) {
  return evaluate_split(split, std::span<const MethodSpec>(&method, 1), options).front();
}

void set_thread_count(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace timeprobe
