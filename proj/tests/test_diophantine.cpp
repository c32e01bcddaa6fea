#include "doctest.h"

#include "cflab/diophantine.hpp"

using namespace cflab;

namespace {

Poly P(const char* text) { return parse_poly(text, 3); }

}  // namespace

TEST_CASE("exact rational arithmetic") {
  CHECK(Rat::make(6, 4) == Rat::make(3, 2));
  CHECK(Rat::make(1, -2) == Rat::make(-1, 2));
  CHECK(Rat::make(1, 3) < Rat::make(1, 2));
  CHECK((Rat::of(2) + Rat::make(243, 121)).to_string() == "485/121");
  CHECK((Rat::make(7, 2) - Rat::of(1)) * (Rat::make(7, 2) - Rat::of(1)) == Rat::make(25, 4));
  CHECK_THROWS_AS(Rat::make(1, 0), std::invalid_argument);
}

TEST_CASE("measure: bounded degrees force the ratio toward zero") {
  std::vector<long long> degs(100, 1);
  MeasureEstimate est = measure_from_degrees(degs, 50);
  CHECK(est.tail_sup <= Rat::make(1, 50));
  CHECK(est.estimate_tail() <= Rat::make(101, 50));  // <= 2.02
}

TEST_CASE("measure: geometric degree growth gives the quartic exponent") {
  // degrees 1, 3, 9, 27, ...: r_n = 3^n / ((3^n - 1)/2)
  std::vector<long long> degs = w1_quotient_degrees(1, 0, 8);
  MeasureEstimate est = measure_from_degrees(degs, 5);
  CHECK(est.ratios[4] == Rat::make(243, 121));
  CHECK(est.estimate_tail() == Rat::of(2) + Rat::make(243, 121));  // about 4.0083
  CHECK(est.tail_sup == Rat::make(243, 121));
  // ratios decrease toward 2, so the global sup sits at the front
  CHECK(est.global_sup == Rat::of(3));
}

TEST_CASE("measure input validation") {
  std::vector<long long> degs{1, 2, 3};
  CHECK_THROWS_AS(measure_from_degrees(degs, 5), std::invalid_argument);
  std::vector<long long> bad{1, 0, 3, 4, 5};
  CHECK_THROWS_AS(measure_from_degrees(bad, 1), std::invalid_argument);
}

TEST_CASE("measure consistency: degrees versus measured valuations") {
  // the best-approximation identity links the two routes exactly
  EquationSpec eq = EquationSpec::make(Family::W1, P("T"), P("T"));
  Laurent root = solve_root(eq, 260);
  ContinuedFraction cf = expand(root, 7);
  ConvergentTable tab = convergents(cf);
  REQUIRE(cf.size() >= 5);
  for (std::size_t k = 1; k + 1 < cf.size(); ++k) {
    long long val = convergent_valuation(root, tab.num[k], tab.den[k]);
    long long degv = tab.den[k].degree();
    CHECK(val == 2 * degv + cf.quotients[k + 1].degree());
  }
}

TEST_CASE("liouville bound holds for a quartic root") {
  auto degs = w1_quotient_degrees(1, 0, 12);
  ContinuedFraction cf;
  cf.p = 3;
  cf.quotients.push_back(Poly(3));
  for (long long d : degs) cf.quotients.push_back(Poly::monomial(1, static_cast<int>(d), 3));
  LiouvilleReport rep = liouville_check(cf, 4);
  CHECK(rep.within_bound);
}

TEST_CASE("voloch hypotheses for the W1 construction with C not dividing A") {
  Poly A = P("T^2+1"), C = P("T");
  SpecialConvergentSeq seq = w1_special_convergents(A, C, 4);
  EquationSpec eq = EquationSpec::make(Family::W1, A, C);
  Laurent root = solve_root(eq, 1000);
  VolochCheck chk = voloch_hypothesis_check(seq, root);
  CHECK(chk.exact_fit);
  CHECK(chk.mu == Rat::of(3));
  CHECK(chk.gamma == Rat::make(7, 2));  // (4s-1)/s with s = 2
  CHECK(chk.gamma_exceeds);
  CHECK(chk.log_lambda == Rat::of(2));  // lambda = |A|
  for (std::size_t n = 0; n < chk.valuations.size(); ++n)
    CHECK(chk.valuations[n] == w1_special_valuation(2, 1, static_cast<int>(n)));
}

TEST_CASE("voloch hypotheses for the W2 construction, s = 5") {
  Poly A = P("T^5+1"), C = P("T");
  SpecialConvergentSeq seq = w2_special_convergents(A, C, 4);
  EquationSpec eq = EquationSpec::make(Family::W2, A, C);
  Laurent beta = solve_root(eq, 2300);
  VolochCheck chk = voloch_hypothesis_check(seq, invert(beta));
  CHECK(chk.exact_fit);
  CHECK(chk.mu == Rat::of(3));
  CHECK(chk.gamma == Rat::make(17, 5));  // 4 - 3/s
  CHECK(chk.gamma_exceeds);              // s = 5 clears the threshold
  for (std::size_t n = 0; n < chk.valuations.size(); ++n)
    CHECK(chk.valuations[n] == w2_special_valuation(5, 1, static_cast<int>(n)));
}

TEST_CASE("voloch check reports insufficient precision honestly") {
  Poly A = P("T^2+1"), C = P("T");
  SpecialConvergentSeq seq = w1_special_convergents(A, C, 4);
  EquationSpec eq = EquationSpec::make(Family::W1, A, C);
  Laurent shallow = solve_root(eq, 100);  // the valuation at n=4 is 849
  CHECK_THROWS_AS(voloch_hypothesis_check(seq, shallow), precision_error);
}

TEST_CASE("lambda bounds on the A=C=T stream") {
  OmegaBuild b = omega_build(Family::E1, P("T"), P("T"), 7);
  LambdaBoundsReport rep = lambda_bounds_check(b.seq.entries, 1, 1, 3);
  REQUIRE(rep.profile_found);
  REQUIRE(rep.centrals.size() == 3);
  for (const auto& c : rep.centrals) {
    CHECK(c.deg_v_law_ok);
    CHECK(c.lambda1_ok);
  }
  CHECK(rep.centrals[0].k == 6);
  CHECK(rep.centrals[1].k == 35);
  CHECK(rep.centrals[1].deg_v_before == 84);
  CHECK(rep.lambda2_exceeds);
  CHECK(rep.min_lambda2_sq == Rat::make(7, 3));

  // trend over i <= 4 requires the depth-9 stream
  OmegaBuild b9 = omega_build(Family::E1, P("T"), P("T"), 9);
  LambdaBoundsReport deep = lambda_bounds_check(b9.seq.entries, 1, 1, 4);
  REQUIRE(deep.profile_found);
  CHECK(deep.trend_ok);
  REQUIRE(deep.block_sup_sq.size() == 4);
  CHECK(deep.block_sup_sq[0] == Rat::of(2));
  CHECK(deep.block_sup_sq[1] == Rat::make(7, 3));
  CHECK(deep.block_sup_sq[2] == Rat::of(2));
  CHECK(deep.block_sup_sq[3] == Rat::make(61, 30));
}

TEST_CASE("lambda bounds flag a profile mismatch") {
  std::vector<Poly> flat(10, P("T"));
  LambdaBoundsReport rep = lambda_bounds_check(flat, 1, 1, 1);
  CHECK(!rep.profile_found);
}
