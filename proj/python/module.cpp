#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cflab/lab.hpp"

namespace py = pybind11;
using namespace cflab;

namespace {

py::object json_to_py(const lab::Json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(json_to_py(v));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default: return py::none();
  }
}

lab::Job make_job(const std::string& family, const std::string& A, const std::string& C,
                  uint32_t p, int terms, int depth, int precision, int n0,
                  const std::string& D) {
  auto fam = family_from_name(family);
  if (!fam) throw std::invalid_argument("unknown family: " + family);
  lab::Job job = lab::default_job(*fam, p);
  if (!A.empty()) job.A = parse_poly(A, p);
  if (!C.empty()) job.C = parse_poly(C, p);
  if (!D.empty()) job.D = parse_poly(D, p);
  if (terms > 0) job.terms = terms;
  if (depth > 0) job.depth = depth;
  job.precision = precision;
  job.n0 = n0;
  job.no_meta = true;  // keep python results reproducible
  return job;
}

py::object run_task(lab::Task task, const std::string& family, const std::string& A,
                    const std::string& C, uint32_t p, int terms, int depth, int precision,
                    int n0, const std::string& D) {
  lab::Outcome out = lab::run(make_job(family, A, C, p, terms, depth, precision, n0, D), task);
  py::dict d = json_to_py(out.report);
  d["exit_code"] = out.exit_code;
  return d;
}

std::vector<Poly> parse_seq(const std::vector<std::string>& items, uint32_t p) {
  std::vector<Poly> seq;
  seq.reserve(items.size());
  for (const std::string& s : items) seq.push_back(parse_poly(s, p));
  return seq;
}

std::vector<std::string> format_seq(const std::vector<Poly>& items) {
  std::vector<std::string> out;
  out.reserve(items.size());
  for (const Poly& f : items) out.push_back(format_poly(f));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact continued fraction laboratory for quartic power series over F_p";

  py::class_<Poly>(m, "Poly")
      .def(py::init([](const std::string& text, uint32_t p) { return parse_poly(text, p); }),
           py::arg("text"), py::arg("p") = kDefaultP)
      .def_property_readonly("p", &Poly::modulus)
      .def_property_readonly("is_zero", &Poly::is_zero)
      .def_property_readonly("degree",
                             [](const Poly& f) -> py::object {
                               if (f.is_zero()) return py::none();
                               return py::int_(f.degree());
                             })
      .def("__str__", [](const Poly& f) { return format_poly(f); })
      .def("__repr__", [](const Poly& f) { return "Poly('" + format_poly(f) + "')"; })
      .def("__add__", [](const Poly& a, const Poly& b) { return a + b; })
      .def("__sub__", [](const Poly& a, const Poly& b) { return a - b; })
      .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; })
      .def("__neg__", [](const Poly& a) { return -a; })
      .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
      .def("divmod", [](const Poly& a, const Poly& b) { return divmod(a, b); })
      .def("gcd", [](const Poly& a, const Poly& b) { return gcd(a, b); })
      .def("divides", [](const Poly& d, const Poly& a) { return divides(d, a); })
      .def("frobenius_cube", [](const Poly& f) { return frobenius_cube(f); });

  m.def("expand",
        [](const std::string& family, const std::string& A, const std::string& C, uint32_t p,
           int terms, int precision) {
          return run_task(lab::Task::Expand, family, A, C, p, terms, -1, precision, -1, "");
        },
        py::arg("family"), py::arg("A") = "", py::arg("C") = "", py::arg("p") = kDefaultP,
        py::arg("terms") = 16, py::arg("precision") = 0,
        "solve the family root and expand its continued fraction");

  m.def("verify",
        [](const std::string& family, const std::string& A, const std::string& C, uint32_t p,
           int terms, int depth) {
          return run_task(lab::Task::Verify, family, A, C, p, terms, depth, 0, -1, "");
        },
        py::arg("family"), py::arg("A") = "", py::arg("C") = "", py::arg("p") = kDefaultP,
        py::arg("terms") = 7, py::arg("depth") = 5,
        "compare the engine expansion against the family generator");

  m.def("measure",
        [](const std::string& family, const std::string& A, const std::string& C, uint32_t p,
           int terms, int n0) {
          return run_task(lab::Task::Measure, family, A, C, p, terms, -1, 0, n0, "");
        },
        py::arg("family"), py::arg("A") = "", py::arg("C") = "", py::arg("p") = kDefaultP,
        py::arg("terms") = 16, py::arg("n0") = -1);

  m.def("openq",
        [](const std::string& family, const std::string& A, const std::string& C, uint32_t p,
           int depth, const std::string& D) {
          return run_task(lab::Task::OpenQ, family, A, C, p, -1, depth, 0, -1, D);
        },
        py::arg("family"), py::arg("A") = "", py::arg("C") = "", py::arg("p") = kDefaultP,
        py::arg("depth") = 2, py::arg("D") = "");

  m.def("square",
        [](const std::string& A, const std::string& C, uint32_t p, int terms) {
          return run_task(lab::Task::Square, "E1", A, C, p, terms, -1, 0, -1, "");
        },
        py::arg("A"), py::arg("C"), py::arg("p") = kDefaultP, py::arg("terms") = 6);

  m.def("omega_build",
        [](const std::string& family, const std::string& A, const std::string& C, int depth,
           uint32_t p) {
          auto fam = family_from_name(family);
          if (!fam) throw std::invalid_argument("unknown family: " + family);
          OmegaBuild b = *fam == Family::MR ? omega_build_mr(depth, p)
                                            : omega_build(*fam, parse_poly(A, p),
                                                          parse_poly(C, p), depth);
          py::dict d;
          d["entries"] = format_seq(b.seq.entries);
          d["depth"] = b.seq.depth;
          if (b.issue) {
            py::dict issue;
            issue["depth"] = b.issue->depth;
            issue["index"] = b.issue->index;
            issue["what"] = b.issue->what;
            d["issue"] = issue;
          } else {
            d["issue"] = py::none();
          }
          return d;
        },
        py::arg("family"), py::arg("A") = "T", py::arg("C") = "T", py::arg("depth") = 5,
        py::arg("p") = kDefaultP);

  m.def("w1_quotients",
        [](const std::string& A, const std::string& C, int n, uint32_t p) {
          return format_seq(w1_quotients(parse_poly(A, p), parse_poly(C, p), n));
        },
        py::arg("A"), py::arg("C"), py::arg("n"), py::arg("p") = kDefaultP);

  m.def("w2_quotients",
        [](const std::string& A, const std::string& C, int n, uint32_t p) {
          return format_seq(w2_quotients(parse_poly(A, p), parse_poly(C, p), n));
        },
        py::arg("A"), py::arg("C"), py::arg("n"), py::arg("p") = kDefaultP);

  m.def("convergents",
        [](const std::vector<std::string>& quotients, uint32_t p) {
          ContinuedFraction cf;
          cf.p = p;
          cf.quotients = parse_seq(quotients, p);
          ConvergentTable t = convergents(cf);
          return py::make_tuple(format_seq(t.num), format_seq(t.den));
        },
        py::arg("quotients"), py::arg("p") = kDefaultP,
        "convergent numerators and denominators of [q0; q1, ...]");

  m.def("open_question_check",
        [](const std::vector<std::string>& seq, const std::string& D, uint32_t p) {
          OpenQuestionReport rep = open_question_check(parse_seq(seq, p), parse_poly(D, p));
          py::dict d;
          d["hypothesis_holds"] = rep.hypothesis_holds;
          d["n_even"] = rep.n_even;
          d["conclusion_holds"] = rep.conclusion_holds;
          d["n"] = rep.n;
          d["detail"] = rep.detail;
          if (rep.witness_k)
            d["witness_k"] = *rep.witness_k;
          else
            d["witness_k"] = py::none();
          return d;
        },
        py::arg("seq"), py::arg("D"), py::arg("p") = kDefaultP);
}
