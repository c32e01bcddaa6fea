#include "doctest.h"

#include <random>

#include "cflab/laurent.hpp"

using namespace cflab;

namespace {

Poly P(const char* text) { return parse_poly(text, 3); }

// Independent oracle for the W1-family root: the fixed-point form
// x <- (C x^4 + 1)/A iterated at a fixed window. Deliberately avoids the
// Newton path used by solve_root.
Laurent w1_fixed_point_root(const Poly& A, const Poly& C, int floor, int iters) {
  Laurent x = series_div(Laurent::from_poly(Poly::constant(1, 3)), Laurent::from_poly(A), floor);
  Laurent one = Laurent::from_poly(Poly::constant(1, 3));
  Laurent cl = Laurent::from_poly(C);
  Laurent al = Laurent::from_poly(A);
  for (int i = 0; i < iters; ++i) {
    Laurent x2 = mul(x, x);
    Laurent x4 = mul(x2, x2);
    x = series_div(add(mul(cl, x4), one), al, floor);
  }
  return x;
}

Laurent random_series(std::mt19937& rng, int top, int len, uint32_t p = 3) {
  std::uniform_int_distribution<uint32_t> coeff(0, p - 1);
  Laurent x = Laurent::certified_zero(top - len + 1, p);
  // build via sum of monomials to keep the test independent of internals
  for (int i = 0; i < len; ++i) {
    uint32_t c = i == 0 ? 1 + coeff(rng) % (p - 1) : coeff(rng);
    x = add(x, Laurent::monomial(c, top - i, p));
  }
  return x.truncated(top - len + 1);
}

}  // namespace

TEST_CASE("monomial inversion keeps exactness") {
  Laurent t = Laurent::from_poly(P("T"));
  Laurent inv = invert(t);
  CHECK(inv.exact());
  CHECK(inv.top_degree() == -1);
  CHECK(inv.coeff(-1) == 1);
}

TEST_CASE("series multiplication aligns valuations") {
  // (1/T + 1/T^2) * T = 1 + 1/T
  Laurent s = add(Laurent::monomial(1, -1, 3), Laurent::monomial(1, -2, 3));
  Laurent r = mul(s, Laurent::from_poly(P("T")));
  CHECK(r.coeff(0) == 1);
  CHECK(r.coeff(-1) == 1);
  CHECK(r.top_degree() == 0);
}

TEST_CASE("geometric series: invert(1 + 1/T) over F_3") {
  Laurent x = add(Laurent::monomial(1, 0, 3), Laurent::monomial(1, -1, 3)).approximated(-9);
  Laurent inv = invert(x);
  // 1 - 1/T + 1/T^2 - ... with -1 = 2 in F_3
  CHECK(inv.coeff(0) == 1);
  CHECK(inv.coeff(-1) == 2);
  CHECK(inv.coeff(-2) == 1);
  CHECK(inv.coeff(-3) == 2);
  // multiply-back oracle to the certified precision
  Laurent back = mul(x, inv);
  CHECK(back.coeff(0) == 1);
  for (int e = -1; e >= back.precision_floor(); --e) CHECK(back.coeff(e) == 0);
  // invert preserves the significant length
  CHECK(inv.significant_length() == x.significant_length());
}

TEST_CASE("poly_part splits at exponent zero") {
  Laurent x = add(Laurent::from_poly(P("T^2+1")), Laurent::monomial(1, -1, 3));
  auto [head, tail] = poly_part(x);
  CHECK(head == P("T^2+1"));
  CHECK(tail.top_degree() == -1);

  auto [h2, t2] = poly_part(Laurent::monomial(1, -1, 3));
  CHECK(h2.is_zero());
  CHECK(t2.top_degree() == -1);

  Laurent y = add(Laurent::monomial(2, 3, 3), Laurent::monomial(2, -5, 3));
  auto [h3, t3] = poly_part(y);
  CHECK(h3 == P("2*T^3"));
  CHECK(t3.top_degree() == -5);
  CHECK(t3.coeff(-5) == 2);
}

TEST_CASE("precision floors are the exact worst case") {
  std::mt19937 rng(99);
  for (int iter = 0; iter < 100; ++iter) {
    Laurent a = random_series(rng, 2, 10);
    Laurent b = random_series(rng, -1, 7);
    Laurent prod = mul(a, b);
    CHECK(prod.top_degree() == a.top_degree() + b.top_degree());  // |xy| = |x||y|
    int expect = std::max(a.precision_floor() + b.top_degree(),
                          b.precision_floor() + a.top_degree());
    CHECK(prod.precision_floor() == expect);
    // add floors
    Laurent s = add(a, b);
    CHECK(s.precision_floor() == std::max(a.precision_floor(), b.precision_floor()));
  }
}

TEST_CASE("truncation never claims new coefficients") {
  Laurent x = random_series(*new std::mt19937(7), 0, 6);
  Laurent t = x.truncated(-2);
  CHECK(t.precision_floor() == -2);
  CHECK(!t.certified_at(-3));
  Laurent deeper = x.truncated(-100);  // clamped to the certified floor
  CHECK(deeper.precision_floor() == x.precision_floor());
}

TEST_CASE("equation catalog validation") {
  CHECK_THROWS_AS(EquationSpec::make(Family::W1, P("2"), P("1")), std::invalid_argument);
  CHECK_THROWS_AS(EquationSpec::make(Family::W1, P("T"), Poly(3)), std::invalid_argument);
  CHECK_THROWS_AS(EquationSpec::make(Family::W1, P("T"), P("T^2")), std::invalid_argument);
  CHECK_THROWS_AS(EquationSpec::make(Family::W2, P("T"), P("T")), std::invalid_argument);
  CHECK(EquationSpec::make(Family::W1, P("T^2+1"), P("T")).c_divides_a() == false);
  CHECK(EquationSpec::make(Family::W1, P("T^3+T"), P("T")).c_divides_a() == true);
  CHECK_THROWS_AS(EquationSpec::raw(QuarticSpec{Poly(3), P("1"), P("1"), P("T"), P("1")}),
                  std::invalid_argument);
}

TEST_CASE("eval_quartic on the catalog") {
  // MR at x = 0 is the constant 1
  EquationSpec mr = EquationSpec::mills_robbins(3);
  Laurent at_zero = eval_quartic(mr.quartic(), Laurent::exact_zero(3));
  CHECK(at_zero.exact());
  CHECK(at_zero.top_degree() == 0);
  CHECK(at_zero.coeff(0) == 1);

  // W1 with A=T, C=1 at x = 1/A: residual is exactly T^-4
  EquationSpec w1 = EquationSpec::make(Family::W1, P("T"), P("1"));
  Laurent res = eval_quartic(w1.quartic(), Laurent::monomial(1, -1, 3));
  CHECK(res.exact());
  CHECK(res.top_degree() == -4);
  CHECK(res.coeff(-4) == 1);
}

TEST_CASE("solve_root W1 matches the fixed-point oracle") {
  Poly A = P("T"), C = P("1");
  EquationSpec eq = EquationSpec::make(Family::W1, A, C);
  Laurent root = solve_root(eq, 40);
  // begins 1/T + 1/T^5 + ...
  CHECK(root.top_degree() == -1);
  CHECK(root.coeff(-1) == 1);
  CHECK(root.coeff(-5) == 1);
  CHECK(root.coeff(-2) == 0);

  Laurent oracle = w1_fixed_point_root(A, C, -40, 24);
  CertifiedOverlap cmp = compare_certified(root, oracle);
  CHECK(cmp.equal);

  // residual self-consistency
  Laurent res = eval_quartic(eq.quartic(), root);
  CHECK(res.zero_window());
}

TEST_CASE("solve_root W1 with a nontrivial pair against the oracle") {
  Poly A = P("T^3+T"), C = P("T");
  EquationSpec eq = EquationSpec::make(Family::W1, A, C);
  Laurent root = solve_root(eq, 80);
  Laurent oracle = w1_fixed_point_root(A, C, -80, 16);
  CHECK(compare_certified(root, oracle).equal);
  CHECK(eval_quartic(eq.quartic(), root).zero_window());
}

TEST_CASE("solve_root W2 leading behavior") {
  EquationSpec eq = EquationSpec::make(Family::W2, P("T^2"), P("T"));
  Laurent root = solve_root(eq, 60);
  CHECK(root.top_degree() == -1);  // deg C - deg A
  CHECK(root.coeff(-1) == 1);
  CHECK(eval_quartic(eq.quartic(), root).zero_window());
  // the reciprocal's polynomial part is A/C
  auto [head, tail] = poly_part(invert(root));
  CHECK(head == P("T"));
}

TEST_CASE("solve_root MR and raw coefficients agree") {
  EquationSpec mr = EquationSpec::mills_robbins(3);
  Laurent root = solve_root(mr, 60);
  CHECK(root.top_degree() == -1);
  CHECK(eval_quartic(mr.quartic(), root).zero_window());

  QuarticSpec q{P("1"), P("0"), P("1"), P("-T"), P("1")};
  Laurent praw = solve_root(EquationSpec::raw(q), 60);
  CHECK(compare_certified(root, praw).equal);
}

TEST_CASE("solve_root E1 is certified and matches the squared W1 root") {
  EquationSpec eq = EquationSpec::make(Family::E1, P("T"), P("T"));
  Laurent root = solve_root(eq, 80);
  CHECK(root.top_degree() == -2);
  CHECK(eval_quartic(eq.quartic(), root).zero_window());
}

TEST_CASE("precision monotonicity: deeper runs extend the certified prefix") {
  for (Family fam : {Family::W1, Family::E1}) {
    EquationSpec eq = EquationSpec::make(fam, P("T"), P("T"));
    Laurent lo = solve_root(eq, 48);
    Laurent hi = solve_root(eq, 96);
    CertifiedOverlap cmp = compare_certified(lo, hi);
    CHECK(cmp.equal);
    CHECK(hi.precision_floor() < lo.precision_floor());
  }
}

TEST_CASE("frobenius compatibility for series in char 3") {
  std::mt19937 rng(31);
  for (int iter = 0; iter < 40; ++iter) {
    Laurent x = random_series(rng, 1, 9);
    Laurent cubed = mul(mul(x, x), x);
    // coefficientwise cube with tripled exponents
    for (int e = cubed.top_degree(); e >= cubed.precision_floor(); --e) {
      uint32_t expect = (e % 3 == 0) && x.certified_at(e / 3) ? x.coeff(e / 3) : 0;
      CHECK(cubed.coeff(e) == expect);
    }
  }
}

TEST_CASE("solve_root rejects an impossible precision request") {
  EquationSpec eq = EquationSpec::make(Family::W1, P("T"), P("1"));
  CHECK_THROWS_AS(solve_root(eq, 4), std::invalid_argument);
}
