#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cflab/lab.hpp"

namespace {

using cflab::lab::Job;
using cflab::lab::Task;

struct CommonFlags {
  std::vector<std::string> families;
  std::string a_text, c_text, raw_text, d_text;
  uint32_t p = cflab::kDefaultP;
  int terms = -1;
  int depth = -1;
  int precision = 0;
  int n0 = -1;
  std::string out_path;
  std::string format = "json";
  int jobs = 1;
  bool no_meta = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--family", f.families, "equation family (W1|W2|E1|E2|MR); repeatable");
  cmd->add_option("--A", f.a_text, "polynomial A (catalog default per family)");
  cmd->add_option("--C", f.c_text, "polynomial C (catalog default per family)");
  cmd->add_option("--raw", f.raw_text, "raw quartic as five comma-separated coefficients c4,c3,c2,c1,c0");
  cmd->add_option("--p", f.p, "field characteristic (small prime, default 3)");
  cmd->add_option("--terms", f.terms, "number of partial quotients");
  cmd->add_option("--depth", f.depth, "recursion depth of the generated stream");
  cmd->add_option("--precision", f.precision, "certified coefficients below T^0 (0 = auto)");
  cmd->add_option("--n0", f.n0, "tail window start for the measure (-1 = half)");
  cmd->add_option("--D", f.d_text, "divisor polynomial for openq (default 2C)");
  cmd->add_option("--out", f.out_path, "write the report to this file instead of stdout");
  cmd->add_option("--format", f.format, "json|csv (csv only for quotient streams)")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--jobs", f.jobs, "run the given families concurrently");
  cmd->add_flag("--no-meta", f.no_meta, "omit tool/version/wall-time metadata");
}

cflab::QuarticSpec parse_raw(const std::string& text, uint32_t p) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 5)
    throw std::invalid_argument("--raw needs exactly five comma-separated coefficients");
  return cflab::QuarticSpec{cflab::parse_poly(parts[0], p), cflab::parse_poly(parts[1], p),
                            cflab::parse_poly(parts[2], p), cflab::parse_poly(parts[3], p),
                            cflab::parse_poly(parts[4], p)};
}

std::vector<Job> build_jobs(const CommonFlags& f, Task task) {
  std::vector<Job> jobs;
  std::vector<std::string> fams = f.families;
  if (fams.empty() && !f.raw_text.empty()) fams.push_back("RAW");
  if (fams.empty() && task == Task::Square) fams.push_back("E1");  // the square identities live there
  if (fams.empty()) throw std::invalid_argument("missing --family (or --raw)");
  for (const std::string& name : fams) {
    auto fam = cflab::family_from_name(name);
    if (!fam) throw std::invalid_argument("unknown family: " + name);
    Job job = cflab::lab::default_job(*fam, f.p);
    if (*fam == cflab::Family::Raw) {
      if (f.raw_text.empty()) throw std::invalid_argument("--raw coefficients required");
      job.raw = parse_raw(f.raw_text, f.p);
    }
    if (!f.a_text.empty()) job.A = cflab::parse_poly(f.a_text, f.p);
    if (!f.c_text.empty()) job.C = cflab::parse_poly(f.c_text, f.p);
    if (!f.d_text.empty()) job.D = cflab::parse_poly(f.d_text, f.p);
    job.precision = f.precision;
    job.n0 = f.n0;
    job.no_meta = f.no_meta;

    // task-appropriate defaults and safety budgets (quotient degrees grow
    // like 3^n, so unbounded knobs would ask for astronomically long series)
    switch (task) {
      case Task::Expand:
        job.terms = f.terms > 0 ? f.terms : 16;
        break;
      case Task::ClosedForm:
        job.terms = f.terms > 0 ? f.terms : 7;
        if (job.terms > 14) throw std::invalid_argument("closed-form: --terms capped at 14");
        break;
      case Task::Omega:
        job.depth = f.depth > 0 ? f.depth : 5;
        if (job.depth > 9) throw std::invalid_argument("omega: --depth capped at 9");
        break;
      case Task::Verify:
        job.terms = f.terms > 0 ? f.terms : 7;
        job.depth = f.depth > 0 ? f.depth : 5;
        if (job.terms > 10) throw std::invalid_argument("verify: --terms capped at 10");
        if (job.depth > 7) throw std::invalid_argument("verify: --depth capped at 7");
        break;
      case Task::Measure:
        job.terms = f.terms > 0 ? f.terms : 16;
        if (job.terms > 72) throw std::invalid_argument("measure: --terms capped at 72");
        break;
      case Task::OpenQ:
        job.depth = f.depth > 0 ? f.depth : 2;
        if (job.depth > 6) throw std::invalid_argument("openq: --depth capped at 6");
        break;
      case Task::Square:
        job.terms = f.terms > 0 ? f.terms : 6;
        if (job.terms > 69) throw std::invalid_argument("square: --terms capped at 69");
        break;
    }
    jobs.push_back(std::move(job));
  }
  return jobs;
}

int emit(const cflab::lab::Outcome& out, const CommonFlags& f, Task task) {
  std::string text;
  if (f.format == "csv") {
    if (task != Task::Expand && task != Task::Omega && task != Task::ClosedForm)
      throw std::invalid_argument("--format csv is only available for quotient streams");
    text = cflab::lab::cf_csv(out.cf);
  } else {
    text = out.report.dump(2);
    text += '\n';
  }
  if (!f.out_path.empty()) {
    std::ofstream os(f.out_path, std::ios::binary);
    if (!os) throw std::invalid_argument("cannot open output file: " + f.out_path);
    os << text;
  } else {
    std::cout << text;
  }
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact continued fraction laboratory for quartic power series over F_p"};
  app.require_subcommand(1);

  struct Sub {
    Task task;
    CLI::App* cmd;
    CommonFlags flags;
  };
  std::vector<Sub> subs;
  subs.push_back({Task::Expand,
                  app.add_subcommand("expand", "solve a root and expand its continued fraction"),
                  {}});
  subs.push_back({Task::ClosedForm,
                  app.add_subcommand("closed-form", "closed-form partial quotients (W1/W2, C | A)"),
                  {}});
  subs.push_back({Task::Omega,
                  app.add_subcommand("omega", "build the recursive quotient stream (E1/E2/MR)"),
                  {}});
  subs.push_back({Task::Verify,
                  app.add_subcommand("verify", "compare the engine expansion against the generator"),
                  {}});
  subs.push_back({Task::Measure,
                  app.add_subcommand("measure", "estimate the approximation exponent"),
                  {}});
  subs.push_back({Task::OpenQ,
                  app.add_subcommand("openq", "reversal symmetry check on an omega stream"),
                  {}});
  subs.push_back({Task::Square,
                  app.add_subcommand("square", "verify the square-of-expansion identities"),
                  {}});
  for (Sub& s : subs) {
    add_common(s.cmd, s.flags);
    if (s.task == Task::OpenQ)
      s.cmd->add_option("--from-omega", s.flags.families,
                        "build the sequence from this family's omega stream (E1|E2)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 4;
  }

  for (Sub& s : subs) {
    if (!s.cmd->parsed()) continue;
    try {
      std::vector<Job> jobs = build_jobs(s.flags, s.task);
      cflab::lab::Outcome out =
          cflab::lab::run_many(jobs, s.task, std::max(1, s.flags.jobs));
      return emit(out, s.flags, s.task);
    } catch (const cflab::precision_error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 3;
    } catch (const cflab::parse_error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 4;
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 4;
    } catch (const cflab::solve_error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 4;
    } catch (const std::exception& e) {
      std::cerr << "internal error: " << e.what() << "\n";
      return 1;
    }
  }
  return 4;
}
