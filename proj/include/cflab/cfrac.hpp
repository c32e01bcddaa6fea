#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cflab/laurent.hpp"

namespace cflab {

class divisibility_error : public std::runtime_error {
public:
  divisibility_error(const std::string& msg, std::size_t index)
      : std::runtime_error(msg + " (index " + std::to_string(index) + ")"),
        index(index) {}
  std::size_t index;
};

// [a_0; a_1, a_2, ...] with polynomial partial quotients. quotients[0] is
// a_0 (any polynomial, including zero); deg a_i >= 1 for i >= 1.
//
// exhausted_at records the index at which the certified precision of the
// source series could no longer guarantee the next quotient; quotients past
// it never exist. finite marks a proven rational termination (the remainder
// vanished exactly), which only exact sources can produce.
struct ContinuedFraction {
  std::vector<Poly> quotients;
  std::optional<std::size_t> exhausted_at;
  bool finite = false;
  uint32_t p = kDefaultP;

  std::size_t size() const { return quotients.size(); }
};

// Expand a certified series into partial quotients. Emission is governed by
// the conservative budget rule: emitting a quotient of degree d and
// inverting the remainder costs 2d certified coefficients, so the engine
// stops before emitting once s - 2d < 1 where s is the certified significant
// length of the current complete quotient. Exhaustion is a recorded state,
// not an error.
ContinuedFraction expand(const Laurent& alpha, std::size_t max_terms);

struct ConvergentTable {
  std::vector<Poly> num;  // U_k
  std::vector<Poly> den;  // V_k
};

// U_k = a_k U_{k-1} + U_{k-2}, V_k likewise, seeded U_{-1}=1, V_{-1}=0,
// U_0 = a_0, V_0 = 1. Satisfies U_{k+1} V_k - V_{k+1} U_k = (-1)^k.
ConvergentTable convergents(const ContinuedFraction& cf);

// Value of [items[0]; items[1], ...] as a reduced pair (numerator,
// denominator) via the same recurrence.
std::pair<Poly, Poly> cf_value(std::span<const Poly> items);

bool determinant_identity_holds(const ConvergentTable& t);

struct Reconstruction {
  Laurent series;
  // set when the requested precision exceeded what the finite quotient list
  // determines; the returned series covers the determined part
  bool truncated_to_determined = false;
};

// Evaluate the continued fraction back into a Laurent series.
Reconstruction reconstruct(const ContinuedFraction& cf, int precision);

// Exact check of the scaling identity
//   C [B a_0, C a_1, B a_2, ...] = B [C a_0, B a_1, C a_2, ...]
// on a finite quotient list, both sides evaluated as rational functions.
bool scale_identity_check(const Poly& B, const Poly& C, const ContinuedFraction& cf);

enum class AltScalePositions { DivideOdd, DivideEven };

// Alternating scaling of a quotient sequence by B: entries at the chosen
// (1-based) parity are divided by B (divisibility checked), the others are
// multiplied. DivideOdd realizes B^{-1}*seq, DivideEven realizes B*seq in
// the notation used by the Omega recursions.
std::vector<Poly> alt_scale(std::span<const Poly> seq, const Poly& B,
                            AltScalePositions positions);

std::vector<Poly> reversed(std::span<const Poly> seq);
std::vector<Poly> cube_each(std::span<const Poly> seq);

struct OpenQuestionReport {
  bool hypothesis_holds = false;   // [a_n,...,a_1] == D^{-1} [a_1,...,a_n]
  bool n_even = false;
  bool conclusion_holds = false;   // a_{n-k} = D^{(-1)^{k+1}} a_{k+1} for all k
  std::optional<std::size_t> witness_k;  // first k where the conclusion fails
  std::size_t n = 0;
  std::string detail;
};

// Empirical check of the reversal symmetry: if the value of the reversed
// sequence equals D^{-1} times the value of the sequence, then n should be
// even and the entries should match under the alternating D-scaling.
OpenQuestionReport open_question_check(std::span<const Poly> seq, const Poly& D);

}  // namespace cflab
