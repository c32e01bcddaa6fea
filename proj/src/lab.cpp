#include "cflab/lab.hpp"

#include <chrono>
#include <future>
#include <sstream>

namespace cflab::lab {

const char* task_name(Task t) {
  switch (t) {
    case Task::Expand: return "expand";
    case Task::ClosedForm: return "closed-form";
    case Task::Omega: return "omega";
    case Task::Verify: return "verify";
    case Task::Measure: return "measure";
    case Task::OpenQ: return "openq";
    case Task::Square: return "square";
  }
  return "?";
}

std::optional<Task> task_from_name(std::string_view name) {
  for (Task t : {Task::Expand, Task::ClosedForm, Task::Omega, Task::Verify, Task::Measure,
                 Task::OpenQ, Task::Square})
    if (name == task_name(t)) return t;
  return std::nullopt;
}

Job default_job(Family f, uint32_t p) {
  Job job;
  job.family = f;
  job.p = p;
  const Poly t = Poly::t(p);
  switch (f) {
    case Family::W1:
      job.A = t;
      job.C = Poly::constant(1, p);
      break;
    case Family::W2:
    case Family::E2:
      job.A = t * t;
      job.C = t;
      break;
    case Family::E1:
      job.A = t;
      job.C = t;
      break;
    case Family::MR:
    case Family::Raw:
      break;
  }
  return job;
}

EquationSpec job_equation(const Job& job) {
  switch (job.family) {
    case Family::MR:
      return EquationSpec::mills_robbins(job.p);
    case Family::Raw:
      detail::require(job.raw.has_value(), "raw family needs quartic coefficients");
      return EquationSpec::raw(*job.raw);
    default:
      return EquationSpec::make(job.family, job.A, job.C);
  }
}

Json equation_json(const EquationSpec& eq) {
  Json j;
  j["family"] = family_name(eq.family());
  j["p"] = eq.p();
  if (eq.family() == Family::Raw) {
    const QuarticSpec& q = *eq.raw_quartic();
    j["c4"] = format_poly(q.c4);
    j["c3"] = format_poly(q.c3);
    j["c2"] = format_poly(q.c2);
    j["c1"] = format_poly(q.c1);
    j["c0"] = format_poly(q.c0);
  } else if (eq.family() != Family::MR) {
    j["A"] = format_poly(eq.A());
    j["C"] = format_poly(eq.C());
  }
  return j;
}

EquationSpec equation_from_json(const Json& j) {
  auto fam = family_from_name(j.at("family").get<std::string>());
  detail::require(fam.has_value(), "unknown family in equation JSON");
  uint32_t p = j.value("p", kDefaultP);
  if (*fam == Family::MR) return EquationSpec::mills_robbins(p);
  if (*fam == Family::Raw) {
    QuarticSpec q{parse_poly(j.at("c4").get<std::string>(), p),
                  parse_poly(j.at("c3").get<std::string>(), p),
                  parse_poly(j.at("c2").get<std::string>(), p),
                  parse_poly(j.at("c1").get<std::string>(), p),
                  parse_poly(j.at("c0").get<std::string>(), p)};
    return EquationSpec::raw(std::move(q));
  }
  return EquationSpec::make(*fam, parse_poly(j.at("A").get<std::string>(), p),
                            parse_poly(j.at("C").get<std::string>(), p));
}

Json cf_json(const ContinuedFraction& cf) {
  Json j;
  j["a0"] = cf.quotients.empty() ? "0" : format_poly(cf.quotients[0]);
  Json qs = Json::array();
  for (std::size_t i = 1; i < cf.quotients.size(); ++i)
    qs.push_back(format_poly(cf.quotients[i]));
  j["quotients"] = std::move(qs);
  if (cf.exhausted_at)
    j["exhausted_at"] = *cf.exhausted_at;
  else
    j["exhausted_at"] = nullptr;
  j["finite"] = cf.finite;
  return j;
}

namespace {

std::string csv_of(const std::vector<Poly>& items, std::size_t start_index) {
  std::ostringstream os;
  os << "index,quotient,degree\n";
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Poly& f = items[i];
    os << (start_index + i) << ',' << format_poly(f) << ',';
    if (f.is_zero())
      os << "-inf";
    else
      os << f.degree();
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string cf_csv(const ContinuedFraction& cf) { return csv_of(cf.quotients, 0); }

std::string sequence_csv(const std::vector<Poly>& entries) { return csv_of(entries, 1); }

namespace {

long long omega_degree_mass(const OmegaBuild& b, std::size_t terms) {
  long long mass = 0;
  for (std::size_t i = 0; i < b.seq.entries.size() && i < terms; ++i)
    mass += std::max(b.seq.entries[i].degree(), 1);
  return mass;
}

int omega_depth_for_terms(int terms) {
  std::vector<long long> L = omega_lengths(12);
  for (int k = 1; k <= 12; ++k)
    if (L[static_cast<std::size_t>(k)] >= terms) return k;
  return 12;
}

struct StreamCompare {
  std::size_t matched = 0;
  std::optional<std::size_t> mismatch_index;  // 1-based quotient index
  std::string engine_value, generator_value;
};

StreamCompare compare_streams(const std::vector<Poly>& engine_tail,
                              const std::vector<Poly>& generated, std::size_t limit) {
  StreamCompare out;
  std::size_t n = std::min({engine_tail.size(), generated.size(), limit});
  for (std::size_t i = 0; i < n; ++i) {
    if (engine_tail[i] != generated[i]) {
      out.mismatch_index = i + 1;
      out.engine_value = format_poly(engine_tail[i]);
      out.generator_value = format_poly(generated[i]);
      return out;
    }
    out.matched = i + 1;
  }
  return out;
}

Json rat_json(const Rat& r) {
  Json j;
  j["exact"] = r.to_string();
  j["value"] = r.to_double();
  return j;
}

std::optional<Rat> predicted_nu(const EquationSpec& eq) {
  int a = 0, c = 0;
  switch (eq.family()) {
    case Family::W1:
      a = eq.A().degree();
      c = std::max(eq.C().degree(), 0);
      return eq.c_divides_a() ? Rat::of(4) : Rat::of(4) - Rat::make(c, a);
    case Family::W2:
      a = eq.A().degree();
      c = std::max(eq.C().degree(), 0);
      return eq.c_divides_a() ? Rat::of(4) : Rat::of(4) - Rat::make(3 * c, a);
    case Family::E1:
    case Family::E2:
    case Family::MR:
      return Rat::of(2);
    case Family::Raw:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

int auto_precision(const Job& job) {
  const int guard = 64;
  switch (job.family) {
    case Family::W1:
    case Family::W2: {
      int a = job.A.degree();
      int c = std::max(job.C.degree(), 0);
      EquationSpec eq = job_equation(job);
      if (eq.c_divides_a() && job.terms <= 30) {
        std::vector<long long> d = job.family == Family::W1
                                       ? w1_quotient_degrees(a, c, job.terms)
                                       : w2_quotient_degrees(a, c, job.terms);
        long long mass = 0;
        for (long long x : d) mass += x;
        return static_cast<int>(2 * mass + d.back()) + guard;
      }
      return 4 * (a + c + 1) * job.terms + guard;
    }
    case Family::E1:
    case Family::E2: {
      int depth = std::min(omega_depth_for_terms(job.terms), 9);
      OmegaBuild b = omega_build(job.family, job.A, job.C, depth);
      return static_cast<int>(2 * omega_degree_mass(b, static_cast<std::size_t>(job.terms))) +
             4 * (job.A.degree() + std::max(job.C.degree(), 0) + 2) + guard;
    }
    case Family::MR: {
      if (job.p == 3) {
        OmegaBuild b = omega_build_mr(std::min(omega_depth_for_terms(job.terms), 9), 3);
        return static_cast<int>(2 * omega_degree_mass(b, static_cast<std::size_t>(job.terms))) +
               guard;
      }
      return 6 * job.terms + guard;
    }
    case Family::Raw: {
      int md = 1;
      if (job.raw)
        for (const Poly& f : job.raw->ascending())
          if (!f.is_zero()) md = std::max(md, f.degree());
      return 8 * (md + 1) * job.terms + guard;
    }
  }
  return 256;
}

std::pair<ContinuedFraction, int> expand_with_retry(const EquationSpec& eq,
                                                    std::size_t terms, int precision) {
  Laurent root = solve_root(eq, precision);
  ContinuedFraction cf = expand(root, terms);
  if (cf.size() >= terms || !cf.exhausted_at || cf.finite) return {std::move(cf), precision};
  int bigger = precision * 2;
  root = solve_root(eq, bigger);
  cf = expand(root, terms);
  return {std::move(cf), bigger};
}

namespace {

int min_precision_for(const EquationSpec& eq) {
  int da = 1, dc = 0;
  switch (eq.family()) {
    case Family::W1:
    case Family::W2:
    case Family::E1:
    case Family::E2:
      da = eq.A().degree();
      dc = std::max(eq.C().degree(), 0);
      break;
    case Family::Raw:
      for (const Poly& f : eq.raw_quartic()->ascending())
        if (!f.is_zero()) da = std::max(da, f.degree());
      break;
    case Family::MR:
      break;
  }
  return 4 * (da + dc + 1);
}

int job_precision(const Job& job) {
  int p = job.precision > 0 ? job.precision : auto_precision(job);
  return std::max(p, min_precision_for(job_equation(job)));
}

Outcome do_expand(const Job& job) {
  Outcome out;
  EquationSpec eq = job_equation(job);
  auto [cf, used] = expand_with_retry(eq, static_cast<std::size_t>(job.terms) + 1,
                                      job_precision(job));
  out.report["task"] = "expand";
  out.report["equation"] = equation_json(eq);
  out.report["terms"] = job.terms;
  out.report["cf"] = cf_json(cf);
  out.report["precision_used"] = used;
  long long emitted = static_cast<long long>(cf.size()) - 1;
  if (cf.exhausted_at && !cf.finite && emitted < job.terms) out.exit_code = 3;
  out.cf = std::move(cf);
  return out;
}

Outcome do_closed_form(const Job& job) {
  Outcome out;
  EquationSpec eq = job_equation(job);
  detail::require(eq.family() == Family::W1 || eq.family() == Family::W2,
                  "closed-form: only the W1/W2 families have closed-form quotients");
  detail::require(eq.c_divides_a(), "closed-form: requires C | A");
  std::vector<Poly> q = eq.family() == Family::W1 ? w1_quotients(job.A, job.C, job.terms)
                                                  : w2_quotients(job.A, job.C, job.terms);
  out.report["task"] = "closed-form";
  out.report["equation"] = equation_json(eq);
  out.report["terms"] = job.terms;
  Json arr = Json::array();
  for (const Poly& f : q) arr.push_back(format_poly(f));
  out.report["quotients"] = std::move(arr);
  out.cf.p = job.p;
  out.cf.quotients.push_back(Poly(job.p));
  out.cf.quotients.insert(out.cf.quotients.end(), q.begin(), q.end());
  return out;
}

Outcome do_omega(const Job& job) {
  Outcome out;
  detail::require(job.family == Family::E1 || job.family == Family::E2 ||
                      job.family == Family::MR,
                  "omega: family must be E1, E2 or MR");
  OmegaBuild b = job.family == Family::MR ? omega_build_mr(job.depth, job.p)
                                          : omega_build(job.family, job.A, job.C, job.depth);
  out.report["task"] = "omega";
  out.report["family"] = family_name(job.family);
  if (job.family != Family::MR) {
    out.report["A"] = format_poly(job.A);
    out.report["C"] = format_poly(job.C);
  }
  out.report["depth"] = job.depth;
  out.report["built_depth"] = b.seq.depth;
  Json arr = Json::array();
  for (const Poly& f : b.seq.entries) arr.push_back(format_poly(f));
  out.report["entries"] = std::move(arr);
  if (b.issue) {
    out.report["issue"] = {{"depth", b.issue->depth},
                           {"index", b.issue->index},
                           {"what", b.issue->what}};
    out.exit_code = 2;  // counterexample candidate for the recursion
  } else {
    out.report["issue"] = nullptr;
  }
  out.cf.p = job.p;
  out.cf.quotients.push_back(Poly(job.p));
  out.cf.quotients.insert(out.cf.quotients.end(), b.seq.entries.begin(), b.seq.entries.end());
  return out;
}

Outcome do_verify(const Job& job) {
  Outcome out;
  EquationSpec eq = job_equation(job);
  out.report["task"] = "verify";
  out.report["equation"] = equation_json(eq);

  std::vector<Poly> generated;
  std::optional<Json> issue;
  std::string generator;
  if (eq.family() == Family::W1 || eq.family() == Family::W2) {
    detail::require(eq.c_divides_a(),
                    "verify: the W1/W2 closed forms require C | A");
    generated = eq.family() == Family::W1 ? w1_quotients(job.A, job.C, job.terms)
                                          : w2_quotients(job.A, job.C, job.terms);
    generator = "closed-form";
    out.report["terms"] = job.terms;
  } else {
    OmegaBuild b = eq.family() == Family::MR
                       ? omega_build_mr(job.depth, job.p)
                       : omega_build(eq.family(), job.A, job.C, job.depth);
    generated = b.seq.entries;
    generator = "omega";
    out.report["depth"] = job.depth;
    if (b.issue)
      issue = Json{{"depth", b.issue->depth}, {"index", b.issue->index}, {"what", b.issue->what}};
  }
  out.report["generator"] = generator;

  Job sized = job;
  sized.terms = static_cast<int>(generated.size());
  auto [cf, used] = expand_with_retry(eq, generated.size() + 1, job_precision(sized));
  bool a0_zero = !cf.quotients.empty() && cf.quotients[0].is_zero();
  std::vector<Poly> tail(cf.quotients.begin() + (cf.quotients.empty() ? 0 : 1),
                         cf.quotients.end());
  StreamCompare cmp = compare_streams(tail, generated, generated.size());

  out.report["engine_terms"] = tail.size();
  out.report["generator_terms"] = generated.size();
  out.report["matched_prefix_length"] = cmp.matched;
  if (!a0_zero) {
    out.report["first_mismatch"] = {{"index", 0},
                                    {"engine", cf.quotients.empty() ? "" : format_poly(cf.quotients[0])},
                                    {"generator", "0"}};
    out.exit_code = 2;
  } else if (cmp.mismatch_index) {
    out.report["first_mismatch"] = {{"index", *cmp.mismatch_index},
                                    {"engine", cmp.engine_value},
                                    {"generator", cmp.generator_value}};
    out.exit_code = 2;
  } else {
    out.report["first_mismatch"] = nullptr;
  }
  if (issue) {
    out.report["generator_issue"] = *issue;
    out.exit_code = 2;
  }
  out.report["precision_used"] = used;
  out.cf = std::move(cf);
  return out;
}

Outcome do_measure(const Job& job) {
  Outcome out;
  EquationSpec eq = job_equation(job);
  out.report["task"] = "measure";
  out.report["family"] = family_name(eq.family());
  if (eq.family() != Family::MR && eq.family() != Family::Raw) {
    out.report["A"] = format_poly(eq.A());
    out.report["C"] = format_poly(eq.C());
  }

  std::vector<long long> degrees;
  std::string source;
  int used = 0;
  if ((eq.family() == Family::W1 || eq.family() == Family::W2) && eq.c_divides_a()) {
    // The proven closed form is the expansion; its exact degree law scales
    // far past what materialized polynomials could.
    degrees = eq.family() == Family::W1
                  ? w1_quotient_degrees(eq.A().degree(), std::max(eq.C().degree(), 0), job.terms)
                  : w2_quotient_degrees(eq.A().degree(), std::max(eq.C().degree(), 0), job.terms);
    source = "closed-form-degrees";
  } else {
    auto [cf, prec] = expand_with_retry(eq, static_cast<std::size_t>(job.terms) + 1,
                                        job_precision(job));
    used = prec;
    for (std::size_t i = 1; i < cf.quotients.size(); ++i)
      degrees.push_back(cf.quotients[i].degree());
    source = "engine";
    out.cf = std::move(cf);
  }

  MeasureEstimate est = measure_from_degrees(degrees, job.n0);
  est.predicted = predicted_nu(eq);

  if (est.predicted)
    out.report["predicted_nu"] = rat_json(*est.predicted);
  else
    out.report["predicted_nu"] = nullptr;
  out.report["estimate_global"] = rat_json(est.estimate_global());
  out.report["estimate_tail"] = rat_json(est.estimate_tail());
  out.report["n0"] = est.n0;
  out.report["depth"] = degrees.size();
  Json ratios = Json::array();
  for (const Rat& r : est.ratios) ratios.push_back(rat_json(r));
  out.report["ratios"] = std::move(ratios);
  out.report["source"] = source;
  if (used) out.report["precision_used"] = used;
  return out;
}

Outcome do_openq(const Job& job) {
  Outcome out;
  detail::require(job.family == Family::E1 || job.family == Family::E2,
                  "openq: --from-omega family must be E1 or E2");
  OmegaBuild b = omega_build(job.family, job.A, job.C, job.depth);
  Poly D = job.D.value_or(job.C.scaled(2));
  out.report["task"] = "openq";
  out.report["family"] = family_name(job.family);
  out.report["A"] = format_poly(job.A);
  out.report["C"] = format_poly(job.C);
  out.report["depth"] = job.depth;
  out.report["D"] = format_poly(D);
  if (b.issue) {
    out.report["generator_issue"] = {{"depth", b.issue->depth},
                                     {"index", b.issue->index},
                                     {"what", b.issue->what}};
    out.report["result"] = "omega build incomplete";
    out.exit_code = 2;
    return out;
  }
  OpenQuestionReport rep = open_question_check(b.seq.entries, D);
  out.report["hypothesis_holds"] = rep.hypothesis_holds;
  out.report["n"] = rep.n;
  out.report["n_even"] = rep.n_even;
  out.report["conclusion_holds"] = rep.conclusion_holds;
  if (rep.witness_k)
    out.report["witness_k"] = *rep.witness_k;
  else
    out.report["witness_k"] = nullptr;
  out.report["result"] = rep.detail;
  // hypothesis-implies-conclusion is the claim under test
  if (rep.hypothesis_holds && !rep.conclusion_holds) out.exit_code = 2;
  return out;
}

Outcome do_square(const Job& job) {
  Outcome out;
  SquareRelationReport rep = square_relation_check(job.A, job.C, job.terms);
  out.report["task"] = "square";
  out.report["A"] = format_poly(job.A);
  out.report["C"] = format_poly(job.C);
  out.report["terms"] = job.terms;
  out.report["first_identity"] = {{"checked", rep.first_checked},
                                  {"matched", rep.first_matched}};
  out.report["second_identity"] = {{"checked", rep.second_checked},
                                   {"matched", rep.second_matched}};
  out.report["ok"] = rep.ok;
  if (!rep.ok) {
    out.report["mismatch"] = rep.mismatch_detail;
    out.exit_code = 2;
  }
  return out;
}

}  // namespace

Outcome run(const Job& job, Task task) {
  auto started = std::chrono::steady_clock::now();
  Outcome out;
  switch (task) {
    case Task::Expand: out = do_expand(job); break;
    case Task::ClosedForm: out = do_closed_form(job); break;
    case Task::Omega: out = do_omega(job); break;
    case Task::Verify: out = do_verify(job); break;
    case Task::Measure: out = do_measure(job); break;
    case Task::OpenQ: out = do_openq(job); break;
    case Task::Square: out = do_square(job); break;
  }
  if (!job.no_meta) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - started)
                  .count();
    out.report["meta"] = {{"tool", kToolName}, {"version", kToolVersion}, {"wall_time_ms", ms}};
  }
  return out;
}

Outcome run_many(const std::vector<Job>& jobs, Task task, int parallelism) {
  Outcome combined;
  combined.report = Json::array();
  if (jobs.size() == 1) {
    Outcome one = run(jobs[0], task);
    return one;
  }
  std::vector<std::future<Outcome>> futures;
  futures.reserve(jobs.size());
  std::launch policy = parallelism > 1 ? std::launch::async : std::launch::deferred;
  for (const Job& j : jobs)
    futures.push_back(std::async(policy, [&j, task] { return run(j, task); }));
  for (auto& f : futures) {
    Outcome one = f.get();
    combined.report.push_back(one.report);
    combined.exit_code = std::max(combined.exit_code, one.exit_code);
  }
  return combined;
}

}  // namespace cflab::lab
