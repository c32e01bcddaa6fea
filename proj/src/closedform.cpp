#include "cflab/closedform.hpp"

#include <algorithm>

namespace cflab {

namespace {

long long ipow3(int k) {
  long long v = 1;
  for (int i = 0; i < k; ++i) v *= 3;
  return v;
}

void require_char3(const Poly& f, const char* who) {
  detail::require(f.modulus() == 3, who);
}

void append(std::vector<Poly>& dst, const std::vector<Poly>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

}  // namespace

std::vector<long long> omega_lengths(int depth) {
  std::vector<long long> L(static_cast<std::size_t>(std::max(depth, 1)) + 1, 0);
  if (depth >= 1) L[1] = 1;
  for (int k = 2; k <= depth; ++k)
    L[static_cast<std::size_t>(k)] =
        2 * L[static_cast<std::size_t>(k - 1)] + L[static_cast<std::size_t>(k - 2)] + 2;
  return L;
}

OmegaBuild omega_build(Family family, const Poly& A, const Poly& C, int depth) {
  detail::require(depth >= 0 && depth <= 16, "omega_build: depth out of range");
  if (family == Family::MR) return omega_build_mr(depth, A.modulus());
  detail::require(family == Family::E1 || family == Family::E2,
                  "omega_build: family must be E1, E2 or MR");
  require_char3(A, "omega_build: requires p = 3");
  detail::require(A.modulus() == C.modulus(), "omega_build: modulus mismatch");
  detail::require(A.degree() >= 1, "omega_build: A must be nonconstant");
  detail::require(!C.is_zero() && divides(C, A), "omega_build: requires C | A");
  if (family == Family::E1)
    detail::require(C.degree() <= A.degree(), "omega_build: requires deg C <= deg A");
  else
    detail::require(C.degree() < A.degree(), "omega_build: requires deg C < deg A");

  const Poly A2 = A * A;
  const Poly twoA2 = A2.scaled(2);
  const Poly C2 = C * C;
  const Poly twoC = C.scaled(2);

  OmegaBuild out;
  out.seq.family = family;
  std::vector<std::vector<Poly>> om(static_cast<std::size_t>(depth) + 1);
  if (depth >= 1)
    om[1] = {family == Family::E1 ? A2 : exact_div(A2, C2)};

  for (int k = 2; k <= depth; ++k) {
    const std::vector<Poly>& prev = om[static_cast<std::size_t>(k - 1)];
    const std::vector<Poly>& prev2 = om[static_cast<std::size_t>(k - 2)];
    std::vector<Poly> cur = prev;
    try {
      if (family == Family::E1) {
        if (k % 2 == 1) {
          cur.push_back(twoA2);
          append(cur, alt_scale(cube_each(prev2), C2, AltScalePositions::DivideOdd));
          cur.push_back(twoA2);
          append(cur, reversed(prev));
        } else {
          cur.push_back(exact_div(A2, C));
          append(cur, alt_scale(cube_each(prev2), twoC, AltScalePositions::DivideOdd));
          cur.push_back(twoA2);
          append(cur, alt_scale(prev, twoC, AltScalePositions::DivideOdd));
        }
      } else {
        const Poly twoA2overC2 = exact_div(A2, C2).scaled(2);
        if (k % 2 == 1) {
          cur.push_back(twoA2overC2);
          append(cur, alt_scale(cube_each(prev2), C2, AltScalePositions::DivideEven));
          cur.push_back(twoA2overC2);
          append(cur, reversed(prev));
        } else {
          cur.push_back(exact_div(A2, C).scaled(2));
          append(cur, alt_scale(cube_each(prev2), C, AltScalePositions::DivideEven));
          cur.push_back(twoA2overC2);
          append(cur, alt_scale(prev, C, AltScalePositions::DivideEven));
        }
      }
    } catch (const divisibility_error& e) {
      out.seq.entries = om[static_cast<std::size_t>(k - 1)];
      out.seq.depth = k - 1;
      out.issue = DivisibilityIssue{k, e.index, e.what()};
      return out;
    }
    om[static_cast<std::size_t>(k)] = std::move(cur);
  }

  const std::vector<long long> L = omega_lengths(depth);
  if (static_cast<long long>(om[static_cast<std::size_t>(depth)].size()) !=
      L[static_cast<std::size_t>(depth)])
    throw std::logic_error("omega_build: length recursion violated");
  out.seq.entries = std::move(om[static_cast<std::size_t>(depth)]);
  out.seq.depth = depth;
  return out;
}

OmegaBuild omega_build_mr(int depth, uint32_t p) {
  detail::require(p == 3, "omega_build: the MR recursion requires p = 3");
  detail::require(depth >= 0 && depth <= 16, "omega_build: depth out of range");
  const Poly t = Poly::t(p);
  const Poly minus_t = -t;
  std::vector<std::vector<Poly>> om(static_cast<std::size_t>(depth) + 1);
  if (depth >= 1) om[1] = {t};
  for (int k = 2; k <= depth; ++k) {
    std::vector<Poly> cur = om[static_cast<std::size_t>(k - 1)];
    cur.push_back(minus_t);
    append(cur, cube_each(om[static_cast<std::size_t>(k - 2)]));
    cur.push_back(minus_t);
    append(cur, om[static_cast<std::size_t>(k - 1)]);
    om[static_cast<std::size_t>(k)] = std::move(cur);
  }
  OmegaBuild out;
  out.seq.family = Family::MR;
  out.seq.depth = depth;
  out.seq.entries = std::move(om[static_cast<std::size_t>(depth)]);
  return out;
}

namespace {

// Closed power form shared by w1/w2: base^(3^(n-1)) times C^(+-e_n) with
// e_n = (3^(n-1) + (-1)^n)/4, maintained by e_n = 3 e_{n-1} + (-1)^n.
struct PowerForm {
  Poly base_pow;  // base^(3^(n-1))
  Poly c_pow;     // C^(e_n)
};

void power_form_step(PowerForm& pf, const Poly& C, int n) {
  pf.base_pow = frobenius_cube(pf.base_pow);
  pf.c_pow = frobenius_cube(pf.c_pow);
  if (n % 2 == 0)
    pf.c_pow = pf.c_pow * C;
  else
    pf.c_pow = exact_div(pf.c_pow, C);
}

}  // namespace

std::vector<Poly> w1_quotients(const Poly& A, const Poly& C, int n) {
  require_char3(A, "w1_quotients: requires p = 3");
  detail::require(n >= 1, "w1_quotients: n must be >= 1");
  detail::require(A.degree() >= 1 && !C.is_zero() && divides(C, A),
                  "w1_quotients: requires C | A with A nonconstant");
  std::vector<Poly> b;
  b.reserve(static_cast<std::size_t>(n));
  b.push_back(A);
  PowerForm pf{A, Poly::constant(1, 3)};
  for (int k = 2; k <= n; ++k) {
    Poly cubed = frobenius_cube(b.back());
    Poly next = k % 2 == 1 ? -(C * cubed) : -exact_div(cubed, C);
    power_form_step(pf, C, k);
    Poly closed = exact_div(pf.base_pow, pf.c_pow);
    if (k % 2 == 0) closed = -closed;
    if (closed != next)
      throw std::logic_error("w1_quotients: recurrence and closed form disagree");
    b.push_back(std::move(next));
  }
  return b;
}

std::vector<Poly> w2_quotients(const Poly& A, const Poly& C, int n) {
  require_char3(A, "w2_quotients: requires p = 3");
  detail::require(n >= 1, "w2_quotients: n must be >= 1");
  detail::require(!C.is_zero() && C.degree() < A.degree() && divides(C, A),
                  "w2_quotients: requires C | A with deg A > deg C");
  const Poly b1 = exact_div(A, C);
  std::vector<Poly> b;
  b.reserve(static_cast<std::size_t>(n));
  b.push_back(b1);
  PowerForm pf{b1, Poly::constant(1, 3)};
  for (int k = 2; k <= n; ++k) {
    Poly cubed = frobenius_cube(b.back());
    Poly next = k % 2 == 0 ? C * cubed : exact_div(cubed, C);
    power_form_step(pf, C, k);
    Poly closed = pf.base_pow * pf.c_pow;
    if (closed != next)
      throw std::logic_error("w2_quotients: recurrence and closed form disagree");
    b.push_back(std::move(next));
  }
  return b;
}

std::vector<long long> w1_quotient_degrees(int a, int c, int n) {
  detail::require(n >= 1 && n <= 36, "w1_quotient_degrees: n out of range");
  std::vector<long long> d;
  long long tri = 1, e = 0;  // 3^(k-1), e_k
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      tri *= 3;
      e = 3 * e + (k % 2 == 0 ? 1 : -1);
    }
    d.push_back(tri * a - e * c);
  }
  return d;
}

std::vector<long long> w2_quotient_degrees(int a, int c, int n) {
  detail::require(n >= 1 && n <= 36, "w2_quotient_degrees: n out of range");
  std::vector<long long> d;
  long long tri = 1, e = 0;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      tri *= 3;
      e = 3 * e + (k % 2 == 0 ? 1 : -1);
    }
    d.push_back(tri * (a - c) + e * c);
  }
  return d;
}

SpecialConvergentSeq w1_special_convergents(const Poly& A, const Poly& C, int n) {
  require_char3(A, "w1_special_convergents: requires p = 3");
  detail::require(n >= 0, "w1_special_convergents: n must be >= 0");
  SpecialConvergentSeq s{{}, {}, Family::W1, A, C};
  s.P.push_back(Poly::constant(1, 3));
  s.Q.push_back(A);
  for (int k = 1; k <= n; ++k) {
    Poly q3 = frobenius_cube(s.Q.back());
    Poly p3 = frobenius_cube(s.P.back());
    s.P.push_back(q3);
    s.Q.push_back(A * q3 - C * p3);
  }
  return s;
}

SpecialConvergentSeq w2_special_convergents(const Poly& A, const Poly& C, int n) {
  require_char3(A, "w2_special_convergents: requires p = 3");
  detail::require(!A.is_zero() && !C.is_zero(), "w2_special_convergents: A, C nonzero");
  SpecialConvergentSeq s{{}, {}, Family::W2, A, C};
  s.P.push_back(A);
  s.Q.push_back(C);
  for (int k = 1; k <= n; ++k) {
    Poly p3 = frobenius_cube(s.P.back());
    Poly q3 = frobenius_cube(s.Q.back());
    s.P.push_back(A * p3 + q3);
    s.Q.push_back(C * p3);
  }
  return s;
}

long long w1_special_deg_q(int a, int n) { return a * (ipow3(n + 1) - 1) / 2; }

long long w1_special_valuation(int a, int c, int n) {
  return a * (6 * ipow3(n) - 1) - c * (ipow3(n + 1) - 1) / 2;
}

long long w2_special_deg_q(int a, int c, int n) {
  return (static_cast<long long>(a) * ipow3(n + 1) - 3 * a + 2 * c) / 2;
}

long long w2_special_valuation(int a, int c, int n) {
  return (static_cast<long long>(a - c) * ipow3(n + 2) + static_cast<long long>(a) * ipow3(n + 1) -
          6 * (a - c) - c) / 2;
}

SpecialConvergentSeq beta_convergents_e1(const Poly& A, const Poly& C, int n) {
  require_char3(A, "beta_convergents_e1: requires p = 3");
  detail::require(n >= 1, "beta_convergents_e1: n must be >= 1");
  detail::require(divides(C, A), "beta_convergents_e1: requires C | A");
  const Poly a_over_c = exact_div(A, C);
  SpecialConvergentSeq s{{}, {}, Family::E1, A, C};
  s.P = {Poly(3), Poly::constant(1, 3)};
  s.Q = {Poly::constant(1, 3), A};
  for (int k = 2; k <= n; ++k) {
    Poly q3 = frobenius_cube(s.Q.back());
    Poly p3 = frobenius_cube(s.P.back());
    if (k % 2 == 0) {
      auto [pq, pr] = divmod(q3, C);
      if (!pr.is_zero())
        throw divisibility_error("beta_convergents_e1: C does not divide Q^3",
                                 static_cast<std::size_t>(k));
      s.P.push_back(-pq);
      s.Q.push_back(-(a_over_c * q3) + p3);
    } else {
      s.P.push_back(q3);
      s.Q.push_back(A * q3 - C * p3);
    }
  }
  return s;
}

RsTriple section3_rs_convergents(const Poly& A, const Poly& C, int n) {
  detail::require(n >= 1, "section3_rs_convergents: n must be >= 1");
  SpecialConvergentSeq bc = beta_convergents_e1(A, C, n);
  const Poly& P = bc.P.back();
  const Poly& Q = bc.Q.back();
  const Poly one = Poly::constant(1, 3);
  const Poly P2 = P * P;
  const Poly Q2 = Q * Q;
  const Poly Q4 = Q2 * Q2;
  const Poly Q6 = Q4 * Q2;
  const long long a = A.degree(), c = std::max(C.degree(), 0);

  RsTriple t;
  t.n = n;
  t.rs[0] = {P2, Q2};
  if (n % 2 == 1) {
    t.rs[1] = {exact_div(P2 * Q2, C), exact_div(Q4, C) + one};
    t.rs[2] = {P2 * (-exact_div(Q4, C) + one), -exact_div(Q6, C)};
    t.predicted_next_degree = {2 * a - c, 2 * a, 2 * a - c};
  } else {
    t.rs[1] = {P2 * Q2, Q4 + one};
    t.rs[2] = {P2 * (Q4 + Poly::constant(2, 3)), Q6};
    t.predicted_next_degree = {2 * a, 2 * a, 2 * a};
  }
  return t;
}

std::vector<Poly> hyperquadratic_square_quotients(const Poly& A, const Poly& C, int count) {
  require_char3(A, "hyperquadratic_square_quotients: requires p = 3");
  detail::require(count >= 1 && count <= 12, "hyperquadratic_square_quotients: count out of range");
  detail::require(divides(C, A), "hyperquadratic_square_quotients: requires C | A");
  std::vector<Poly> q;
  q.push_back(pow(A, 4) - C);
  if (count == 1) return q;
  // u_i = 3^i - (-1)^i and v_i = (3^i + 3(-1)^i)/4 via
  // u_i = 3 u_{i-1} - 4(-1)^i, v_i = 3 v_{i-1} + 3(-1)^i.
  Poly a_pow = pow(A, 8);   // A^(u_2)
  Poly c_pow = pow(C, 3);   // C^(v_2)
  const Poly a4 = pow(A, 4);
  const Poly c3 = pow(C, 3);
  for (int i = 2; i <= count; ++i) {
    if (i > 2) {
      a_pow = frobenius_cube(a_pow);
      c_pow = frobenius_cube(c_pow);
      if (i % 2 == 0) {
        a_pow = exact_div(a_pow, a4);
        c_pow = c_pow * c3;
      } else {
        a_pow = a_pow * a4;
        c_pow = exact_div(c_pow, c3);
      }
    }
    Poly term = exact_div(a_pow, c_pow);
    if (i % 2 == 0) term = -term;
    q.push_back(std::move(term));
  }
  return q;
}

namespace {

std::size_t matched_prefix(const std::vector<Poly>& a, const std::vector<Poly>& b,
                           std::size_t limit, std::optional<std::size_t>& mismatch) {
  std::size_t n = std::min({a.size(), b.size(), limit});
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) {
      mismatch = i;
      return i;
    }
  }
  return n;
}

}  // namespace

SquareRelationReport square_relation_check(const Poly& A, const Poly& C, int terms) {
  detail::require(terms >= 1, "square_relation_check: terms must be >= 1");
  EquationSpec w1 = EquationSpec::make(Family::W1, A, C);
  detail::require(w1.c_divides_a(), "square_relation_check: requires C | A");
  const int a = A.degree(), c = std::max(C.degree(), 0);

  // Size the root window from the degree mass of both target streams.
  OmegaBuild ob = [&] {
    int depth = 2;
    while (depth < 9) {
      OmegaBuild b = omega_build(Family::E1, A, C, depth);
      if (b.issue || static_cast<long long>(b.seq.entries.size()) >= terms) return b;
      ++depth;
    }
    return omega_build(Family::E1, A, C, 9);
  }();
  std::vector<Poly> hyper = hyperquadratic_square_quotients(A, C, std::min(terms, 8));

  long long mass1 = 0;
  for (std::size_t i = 0; i < ob.seq.entries.size() && i < static_cast<std::size_t>(terms); ++i)
    mass1 += ob.seq.entries[i].degree();
  long long mass2 = 0;
  for (const Poly& f : hyper) mass2 += f.degree();
  int precision = static_cast<int>(2 * std::max(mass1, mass2)) + 16 * (a + c + 1) + 64;

  Laurent beta = solve_root(w1, precision);
  Laurent alpha = mul(beta, beta);
  Laurent alpha2 = mul(alpha, alpha);

  SquareRelationReport rep;
  ContinuedFraction cf1 = expand(alpha, static_cast<std::size_t>(terms) + 1);
  ContinuedFraction cf2 = expand(alpha2, hyper.size() + 1);

  // both sides start with a_0 = 0
  bool a0_ok = !cf1.quotients.empty() && cf1.quotients[0].is_zero() &&
               !cf2.quotients.empty() && cf2.quotients[0].is_zero();

  std::vector<Poly> got1(cf1.quotients.begin() + (cf1.quotients.empty() ? 0 : 1),
                         cf1.quotients.end());
  std::vector<Poly> got2(cf2.quotients.begin() + (cf2.quotients.empty() ? 0 : 1),
                         cf2.quotients.end());

  rep.first_checked = std::min<std::size_t>(static_cast<std::size_t>(terms),
                                            std::min(got1.size(), ob.seq.entries.size()));
  rep.first_matched = matched_prefix(got1, ob.seq.entries, rep.first_checked,
                                     rep.first_mismatch_1);
  rep.second_checked = std::min(got2.size(), hyper.size());
  rep.second_matched = matched_prefix(got2, hyper, rep.second_checked, rep.first_mismatch_2);

  rep.ok = a0_ok && !rep.first_mismatch_1 && !rep.first_mismatch_2 &&
           rep.first_checked >= static_cast<std::size_t>(std::min<long long>(terms, 5)) &&
           rep.second_checked >= 5;
  if (rep.first_mismatch_1)
    rep.mismatch_detail = "square of W1 root diverges from the omega stream at index " +
                          std::to_string(*rep.first_mismatch_1 + 1);
  else if (rep.first_mismatch_2)
    rep.mismatch_detail = "square of the stream diverges from the power-form quotients at index " +
                          std::to_string(*rep.first_mismatch_2 + 1);
  return rep;
}

long long e1_central_degree(int a, int c, int i) {
  long long p3 = ipow3(i);
  long long sgn = i % 2 == 1 ? 1 : -1;
  return 2 * p3 * a - (p3 + sgn) / 2 * c;
}

long long e1_degv_before_central(int a, int c, int i) {
  long long p3 = ipow3(i);
  long long p32 = ipow3(2 * i + 1);
  long long sgn = i % 2 == 0 ? 1 : -1;
  return a * (p32 - 2 * p3 - 1) / 2 - c * (p32 - 2 * p3 - 3 + 2 * sgn) / 8;
}

}  // namespace cflab
