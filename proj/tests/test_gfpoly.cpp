#include "doctest.h"

#include <random>

#include "cflab/gfpoly.hpp"

using namespace cflab;

namespace {

Poly P(const char* text) { return parse_poly(text, 3); }

Poly random_poly(std::mt19937& rng, int max_deg, uint32_t p = 3) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<uint32_t> coeff(0, p - 1);
  int d = deg(rng);
  std::vector<uint32_t> c(static_cast<std::size_t>(d) + 1);
  for (auto& v : c) v = coeff(rng);
  return Poly::from_coeffs(std::move(c), p);
}

}  // namespace

TEST_CASE("field element arithmetic is exact mod p") {
  Fp a(2, 3), b(2, 3);
  CHECK((a + b).value() == 1);
  CHECK((a * b).value() == 1);
  CHECK((-a).value() == 1);
  CHECK(a.inverse().value() == 2);
  CHECK((Fp(-1, 3)).value() == 2);
  CHECK_THROWS_AS(Fp(0, 3).inverse(), std::invalid_argument);
  CHECK_THROWS_AS(Fp(1, 3) + Fp(1, 5), std::invalid_argument);
}

TEST_CASE("basic ring operations over F_3") {
  CHECK(P("T+1") + P("2*T+2") == Poly(3));       // additive inverse
  CHECK(P("T") * P("T") == P("T^2"));
  CHECK(P("T+1") * P("T+1") * P("T+1") == P("T^3+1"));  // freshman's dream
  CHECK(-P("T^2") == P("2*T^2"));
  CHECK(P("T").degree() == 1);
  CHECK(Poly(3).degree() == kZeroDegree);
}

TEST_CASE("divmod examples") {
  auto [q1, r1] = divmod(P("T^3"), P("T"));
  CHECK(q1 == P("T^2"));
  CHECK(r1.is_zero());

  auto [q2, r2] = divmod(P("T^3+1"), P("T^2"));
  CHECK(q2 == P("T"));
  CHECK(r2 == P("1"));

  auto [q3, r3] = divmod(P("2*T^4+T"), P("T^2+1"));
  CHECK(q3 == P("2*T^2+1"));
  CHECK(r3 == P("T+2"));
  CHECK(q3 * P("T^2+1") + r3 == P("2*T^4+T"));

  CHECK_THROWS_AS(divmod(P("T"), Poly(3)), std::invalid_argument);
}

TEST_CASE("gcd, divides, frobenius cube") {
  CHECK(gcd(P("T^2-1"), P("T-1")) == P("T+2"));
  CHECK(!divides(P("T"), P("T^2+1")));
  CHECK(divides(P("T"), P("T^3+T")));
  CHECK(frobenius_cube(P("T+1")) == P("T^3+1"));
  CHECK_THROWS_AS(gcd(Poly(3), Poly(3)), std::invalid_argument);
  CHECK_THROWS_AS(frobenius_cube(parse_poly("T", 5)), std::invalid_argument);
}

TEST_CASE("parse and format") {
  CHECK(P("T^2+2*T+1").coeffs() == std::vector<uint32_t>{1, 2, 1});
  CHECK(P("-T^3") == P("2*T^3"));
  CHECK(format_poly(P("2*T^4+T")) == "2*T^4+T");
  CHECK(format_poly(Poly(3)) == "0");
  CHECK(P("  T ^ 2 + 1 ") == P("T^2+1"));
  CHECK(P("2T") == P("2*T"));  // lenient: '*' optional
  CHECK(P("5") == P("2"));
  CHECK_THROWS_AS(parse_poly("T^^2", 3), parse_error);
  CHECK_THROWS_AS(parse_poly("", 3), parse_error);
  CHECK_THROWS_AS(parse_poly("T+*", 3), parse_error);
  try {
    parse_poly("T+@", 3);
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.position >= 2);
  }
}

TEST_CASE("ring axioms and round trips on random polynomials") {
  std::mt19937 rng(12345);
  for (int iter = 0; iter < 200; ++iter) {
    Poly a = random_poly(rng, 64);
    Poly b = random_poly(rng, 64);
    Poly c = random_poly(rng, 64);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Poly(3));
    CHECK(parse_poly(format_poly(a), 3) == a);

    if (!b.is_zero()) {
      auto [q, r] = divmod(a, b);
      CHECK(q * b + r == a);
      if (!r.is_zero()) CHECK(r.degree() < b.degree());
    }
    // char-3 ring homomorphism
    CHECK(frobenius_cube(a * b) == frobenius_cube(a) * frobenius_cube(b));
    CHECK(frobenius_cube(a + b) == frobenius_cube(a) + frobenius_cube(b));
    CHECK(frobenius_cube(a) == a * a * a);
  }
}

TEST_CASE("modulus mismatch is rejected") {
  CHECK_THROWS_AS(P("T") + parse_poly("T", 5), std::invalid_argument);
  CHECK_THROWS_AS(P("T") * parse_poly("T", 5), std::invalid_argument);
}

TEST_CASE("generic p arithmetic stays exact") {
  Poly a = parse_poly("4*T^2+3", 5);
  Poly b = parse_poly("2*T+1", 5);
  auto [q, r] = divmod(a, b);
  CHECK(q * b + r == a);
  CHECK(format_poly(parse_poly("-T", 5)) == "4*T");
}
