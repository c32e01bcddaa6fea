#include "doctest.h"

#include "cflab/lab.hpp"

using namespace cflab;
using namespace cflab::lab;

namespace {

Poly P(const char* text) { return parse_poly(text, 3); }

}  // namespace

TEST_CASE("equation JSON round trip") {
  EquationSpec e1 = EquationSpec::make(Family::E1, P("T"), P("T"));
  Json j = equation_json(e1);
  CHECK(j["family"] == "E1");
  CHECK(j["p"] == 3);
  CHECK(j["A"] == "T");
  EquationSpec back = equation_from_json(j);
  CHECK(back.family() == Family::E1);
  CHECK(back.A() == e1.A());

  EquationSpec raw = EquationSpec::raw(
      QuarticSpec{P("1"), P("0"), P("1"), P("-T"), P("1")});
  Json jr = equation_json(raw);
  CHECK(jr["c1"] == "2*T");
  EquationSpec rback = equation_from_json(jr);
  CHECK(rback.raw_quartic()->c1 == P("2*T"));
}

TEST_CASE("cf serialization") {
  ContinuedFraction cf;
  cf.p = 3;
  cf.quotients = {Poly(3), P("T"), P("2*T^2")};
  cf.exhausted_at = 3;
  Json j = cf_json(cf);
  CHECK(j["a0"] == "0");
  CHECK(j["quotients"].size() == 2);
  CHECK(j["quotients"][1] == "2*T^2");
  CHECK(j["exhausted_at"] == 3);
  CHECK(j["finite"] == false);

  std::string csv = cf_csv(cf);
  CHECK(csv == "index,quotient,degree\n0,0,-inf\n1,T,1\n2,2*T^2,2\n");
}

TEST_CASE("expand task reproduces the MR prefix and the raw route agrees") {
  Job job = default_job(Family::MR);
  job.terms = 15;
  job.no_meta = true;
  Outcome out = run(job, Task::Expand);
  CHECK(out.exit_code == 0);
  CHECK(out.report["cf"]["a0"] == "0");
  CHECK(out.report["cf"]["quotients"][0] == "T");
  CHECK(out.report["cf"]["quotients"][1] == "2*T");
  CHECK(out.report["cf"]["quotients"][2] == "2*T");
  CHECK(out.report["cf"]["quotients"][3] == "T");

  Job rawjob;
  rawjob.family = Family::Raw;
  rawjob.raw = QuarticSpec{P("1"), P("0"), P("1"), P("-T"), P("1")};
  rawjob.terms = 15;
  rawjob.no_meta = true;
  Outcome rout = run(rawjob, Task::Expand);
  CHECK(rout.report["cf"] == out.report["cf"]);
}

TEST_CASE("verify task: closed form versus engine") {
  Job job = default_job(Family::W1);
  job.terms = 6;
  job.no_meta = true;
  Outcome out = run(job, Task::Verify);
  CHECK(out.exit_code == 0);
  CHECK(out.report["matched_prefix_length"] == 6);
  CHECK(out.report["first_mismatch"].is_null());
}

TEST_CASE("verify task reports the first mismatch of a corrupted generator") {
  // corrupt the stream by checking against the wrong family parameters
  Job job = default_job(Family::E1);
  job.depth = 2;
  job.no_meta = true;
  Outcome good = run(job, Task::Verify);
  CHECK(good.exit_code == 0);

  // fault injection: compare the engine stream against a corrupted copy
  OmegaBuild b = omega_build(Family::E1, job.A, job.C, 2);
  std::vector<Poly> corrupted = b.seq.entries;
  corrupted[2] = corrupted[2] + Poly::constant(1, 3);
  EquationSpec eq = job_equation(job);
  auto [cf, prec] = expand_with_retry(eq, corrupted.size() + 1, 200);
  std::size_t mismatch_at = 0;
  for (std::size_t i = 0; i < corrupted.size(); ++i)
    if (cf.quotients[i + 1] != corrupted[i]) {
      mismatch_at = i + 1;
      break;
    }
  CHECK(mismatch_at == 3);
}

TEST_CASE("measure task emits the spec report shape") {
  Job job = default_job(Family::W1);
  job.A = P("T^2+1");
  job.C = P("T");
  job.terms = 16;
  job.n0 = 8;
  job.no_meta = true;
  Outcome out = run(job, Task::Measure);
  CHECK(out.report["family"] == "W1");
  CHECK(out.report["predicted_nu"]["exact"] == "7/2");
  double tail = out.report["estimate_tail"]["value"].get<double>();
  CHECK(tail > 3.4);
  CHECK(tail < 3.6);
  CHECK(out.report["n0"] == 8);
  CHECK(out.report["ratios"].is_array());
}

TEST_CASE("openq task on the depth-2 stream") {
  Job job = default_job(Family::E1);
  job.depth = 2;
  job.D = P("2*T");
  job.no_meta = true;
  Outcome out = run(job, Task::OpenQ);
  CHECK(out.exit_code == 0);
  CHECK(out.report["hypothesis_holds"] == true);
  CHECK(out.report["conclusion_holds"] == true);
  CHECK(out.report["n_even"] == true);
}

TEST_CASE("square task confirms both identities") {
  Job job = default_job(Family::E1);
  job.A = P("T");
  job.C = P("1");
  job.terms = 6;
  job.no_meta = true;
  Outcome out = run(job, Task::Square);
  CHECK(out.exit_code == 0);
  CHECK(out.report["ok"] == true);
}

TEST_CASE("reports are deterministic with --no-meta") {
  Job job = default_job(Family::E1);
  job.depth = 3;
  job.no_meta = true;
  Outcome a = run(job, Task::Verify);
  Outcome b = run(job, Task::Verify);
  CHECK(a.report.dump() == b.report.dump());
  // with meta the payload still matches after stripping it
  job.no_meta = false;
  Outcome c = run(job, Task::Verify);
  Json stripped = c.report;
  stripped.erase("meta");
  CHECK(stripped.dump() == a.report.dump());
}

TEST_CASE("run_many aggregates reports in input order") {
  std::vector<Job> jobs;
  for (Family f : {Family::E1, Family::MR}) {
    Job j = default_job(f);
    j.depth = 2;
    j.terms = 5;
    j.no_meta = true;
    jobs.push_back(j);
  }
  Outcome out = run_many(jobs, Task::Expand, 2);
  REQUIRE(out.report.is_array());
  CHECK(out.report.size() == 2);
  CHECK(out.report[0]["equation"]["family"] == "E1");
  CHECK(out.report[1]["equation"]["family"] == "MR");
}

TEST_CASE("catalog defaults match the emblematic instances") {
  Job w1 = default_job(Family::W1);
  CHECK(w1.A == P("T"));
  CHECK(w1.C == P("1"));
  Job e1 = default_job(Family::E1);
  CHECK(e1.A == P("T"));
  CHECK(e1.C == P("T"));
  Job mr = default_job(Family::MR);
  CHECK(mr.p == 3);
}

TEST_CASE("precision autosizing covers the requested quotient count") {
  for (Family f : {Family::W1, Family::W2}) {
    Job j = default_job(f);
    j.terms = 7;
    int p = auto_precision(j);
    EquationSpec eq = job_equation(j);
    auto [cf, used] = expand_with_retry(eq, 8, p);
    CHECK(cf.size() >= 8);
    CHECK(used == p);  // no retry needed for the sized estimate
  }
}
