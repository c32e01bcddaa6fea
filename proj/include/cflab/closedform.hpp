#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cflab/cfrac.hpp"

namespace cflab {

// Finite quotient sequence produced by one of the juxtaposition recursions.
struct OmegaSeq {
  std::vector<Poly> entries;
  int depth = 0;
  Family family = Family::E1;
};

struct DivisibilityIssue {
  int depth;          // recursion step that failed
  std::size_t index;  // entry index inside the scaled block
  std::string what;
};

struct OmegaBuild {
  OmegaSeq seq;  // deepest completed sequence
  // A violation would falsify the well-formedness of the recursion for this
  // (A, C); it is reported as a counterexample candidate, not thrown.
  std::optional<DivisibilityIssue> issue;
};

// Expected length of Omega_k: L_k = 2 L_{k-1} + L_{k-2} + 2, L_0 = 0, L_1 = 1
// (the same recursion for all three families).
std::vector<long long> omega_lengths(int depth);

// Builders for the three quotient-stream recursions:
//   E1:  Omega_1 = A^2
//        Omega_{2n+1} = Omega_2n, 2A^2, (1/C^2) Omega_{2n-1}^(3), 2A^2, ~Omega_2n
//        Omega_{2n+2} = Omega_{2n+1}, A^2/C, (1/2C) Omega_2n^(3), 2A^2, (1/2C) Omega_{2n+1}
//   E2:  Omega_1 = A^2/C^2
//        Omega_{2n+1} = Omega_2n, 2A^2/C^2, C^2 Omega_{2n-1}^(3), 2A^2/C^2, ~Omega_2n
//        Omega_{2n+2} = Omega_{2n+1}, 2A^2/C, C Omega_2n^(3), 2A^2/C^2, C Omega_{2n+1}
//   MR:  Omega_1 = T, Omega_n = Omega_{n-1}, -T, Omega_{n-2}^(3), -T, Omega_{n-1}
// Scalings are the alternating multiply/divide convention (alt_scale).
OmegaBuild omega_build(Family family, const Poly& A, const Poly& C, int depth);
OmegaBuild omega_build_mr(int depth, uint32_t p = 3);

// Partial quotients b_1..b_n of the W1 root when C | A, by the recurrence
//   b_1 = A, b_n = -C b_{n-1}^3 (n odd), b_n = b_{n-1}^3 / -C (n even),
// cross-validated against the closed power form
//   b_n = (-1)^(n-1) A^(3^(n-1)) C^(-(3^(n-1)+(-1)^n)/4).
std::vector<Poly> w1_quotients(const Poly& A, const Poly& C, int n);
// W2 analogue when C | A and deg A > deg C:
//   b_1 = A/C, b_n = C b_{n-1}^3 (n even), b_n = b_{n-1}^3 / C (n odd),
//   b_n = (A/C)^(3^(n-1)) C^((3^(n-1)+(-1)^n)/4).
std::vector<Poly> w2_quotients(const Poly& A, const Poly& C, int n);

// Exact degree sequences implied by the same recurrences; materializing the
// polynomials grows like 3^n, the degrees do not.
std::vector<long long> w1_quotient_degrees(int a, int c, int n);
std::vector<long long> w2_quotient_degrees(int a, int c, int n);

struct SpecialConvergentSeq {
  std::vector<Poly> P, Q;
  Family family = Family::W1;
  Poly A, C;
};

// P_0 = 1, Q_0 = A; P_n = Q_{n-1}^3, Q_n = A Q_{n-1}^3 - C P_{n-1}^3.
// Approximates the W1 root; used in the C-does-not-divide-A regime.
SpecialConvergentSeq w1_special_convergents(const Poly& A, const Poly& C, int n);
// P_0 = A, Q_0 = C; P_n = A P_{n-1}^3 + Q_{n-1}^3, Q_n = C P_{n-1}^3.
// Approximates the reciprocal root 1/beta of the W2 equation.
SpecialConvergentSeq w2_special_convergents(const Poly& A, const Poly& C, int n);

// Degree and valuation laws for the special convergents (exact integers).
long long w1_special_deg_q(int a, int n);                 // a (3^(n+1)-1)/2
long long w1_special_valuation(int a, int c, int n);      // a(6 3^n - 1) - c(3^(n+1)-1)/2
long long w2_special_deg_q(int a, int c, int n);          // (a 3^(n+1) - 3a + 2c)/2
long long w2_special_valuation(int a, int c, int n);      // vs 1/beta

// Convergents of the W1 root (C | A) from the cubing recurrence:
// P_0=0, Q_0=1, P_1=1, Q_1=A;
//   P_{2n+1} = Q_{2n}^3,        Q_{2n+1} = A Q_{2n}^3 - C P_{2n}^3
//   P_{2n}   = -Q_{2n-1}^3 / C, Q_{2n}   = -(A/C) Q_{2n-1}^3 + P_{2n-1}^3
// Every division by C must be exact; a failure is flagged loudly.
SpecialConvergentSeq beta_convergents_e1(const Poly& A, const Poly& C, int n);

struct RsTriple {
  std::array<std::pair<Poly, Poly>, 3> rs;  // (R_i, S_i) for i = 1..3
  std::array<long long, 3> predicted_next_degree;
  int n = 0;
};

// The three convergent constructions R_{i,n}/S_{i,n} built on top of
// beta_convergents_e1, with the parity table of predicted next-quotient
// degrees (2a or 2a-c).
RsTriple section3_rs_convergents(const Poly& A, const Poly& C, int n);

// Quotient stream of the square [0, Omega_inf]^2:
//   q_1 = A^4 - C, q_i = (-1)^(i-1) A^(3^i-(-1)^i) C^(-(3^i+3(-1)^i)/4).
std::vector<Poly> hyperquadratic_square_quotients(const Poly& A, const Poly& C, int count);

struct SquareRelationReport {
  // expand((W1 root)^2) against the E1 omega stream
  std::size_t first_checked = 0, first_matched = 0;
  std::optional<std::size_t> first_mismatch_1;
  // expand((E1 root)^2) against hyperquadratic_square_quotients
  std::size_t second_checked = 0, second_matched = 0;
  std::optional<std::size_t> first_mismatch_2;
  bool ok = false;
  std::string mismatch_detail;
};

// Numeric verification of both square identities to `terms` certified
// quotients per side.
SquareRelationReport square_relation_check(const Poly& A, const Poly& C, int terms);

// Degree profile of the E1 stream (exact integers):
// central entry of Omega_{2i+1} and the denominator degree just before it.
long long e1_central_degree(int a, int c, int i);
long long e1_degv_before_central(int a, int c, int i);

}  // namespace cflab
