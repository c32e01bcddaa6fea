#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "cflab/diophantine.hpp"

namespace cflab::lab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "cflab";
inline constexpr const char* kToolVersion = "0.1.0";

enum class Task { Expand, ClosedForm, Omega, Verify, Measure, OpenQ, Square };

const char* task_name(Task t);
std::optional<Task> task_from_name(std::string_view name);

struct Job {
  Family family = Family::E1;
  Poly A{kDefaultP};
  Poly C{kDefaultP};
  std::optional<QuarticSpec> raw;
  uint32_t p = kDefaultP;
  int terms = 16;
  int depth = 5;
  int precision = 0;  // 0 = auto-sized from the family degree law
  int n0 = -1;        // -1 = half the available indices
  std::optional<Poly> D;
  bool no_meta = false;
};

// Emblematic catalog instances so `--family X` alone is meaningful.
Job default_job(Family f, uint32_t p = kDefaultP);

EquationSpec job_equation(const Job& job);
Json equation_json(const EquationSpec& eq);
EquationSpec equation_from_json(const Json& j);

Json cf_json(const ContinuedFraction& cf);
std::string cf_csv(const ContinuedFraction& cf);
std::string sequence_csv(const std::vector<Poly>& entries);

// Exit codes: 0 success/match, 2 mismatch or counterexample, 3 precision
// exhausted, 4 invalid input (mapped by the CLI from thrown exceptions).
struct Outcome {
  Json report;
  int exit_code = 0;
  ContinuedFraction cf;  // populated by expand-style tasks
};

Outcome run(const Job& job, Task task);
Outcome run_many(const std::vector<Job>& jobs, Task task, int parallelism);

// Auto precision from the family degree law for the requested quotient
// count, before the one retry at 2x that the runner performs on exhaustion.
int auto_precision(const Job& job);

// Engine expansion with the retry-once policy. Returns the continued
// fraction and the precision actually used.
std::pair<ContinuedFraction, int> expand_with_retry(const EquationSpec& eq,
                                                    std::size_t terms, int precision);

}  // namespace cflab::lab
