#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cflab/closedform.hpp"

namespace cflab {

// Exact rational on 64-bit parts. Every decision in this module is made on
// these; floating point only ever appears in rendered reports.
struct Rat {
  long long num = 0;
  long long den = 1;

  static Rat make(long long n, long long d);
  static Rat of(long long n) { return Rat{n, 1}; }
  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
  bool operator<(const Rat& o) const;
  bool operator<=(const Rat& o) const { return *this < o || *this == o; }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;
};

struct MeasureEstimate {
  std::vector<Rat> ratios;  // r_n = deg a_{n+1} / sum_{1<=i<=n} deg a_i, n >= 1
  Rat global_sup;
  Rat tail_sup;
  int n0 = 0;
  std::optional<Rat> predicted;  // from the theorem catalog, when known
  Rat estimate_global() const { return Rat::of(2) + global_sup; }
  Rat estimate_tail() const { return Rat::of(2) + tail_sup; }
};

// Approximation-exponent estimate from quotient degrees. n0 < 0 selects the
// default tail window (half the available indices). Both the global and the
// tail sup are reported; the true limsup is never claimed.
MeasureEstimate measure_from_degrees(const std::vector<long long>& degrees, int n0);
MeasureEstimate measure_estimate(const ContinuedFraction& cf, int n0);

struct LiouvilleReport {
  int degree_bound = 0;
  MeasureEstimate measure;
  // largest log|T| constant c with |alpha - U_k/V_k| >= c |V_k|^(-n) over
  // the measured range
  long long fitted_c_log = 0;
  bool within_bound = false;  // estimate_tail <= degree_bound + 1/10
};

// Check the Liouville/Mahler bound nu(alpha) <= n against the measured
// quotient stream of an algebraic element of degree n.
LiouvilleReport liouville_check(const ContinuedFraction& cf, int degree_bound);

// Valuation of root - P/Q measured by exact series subtraction.
long long convergent_valuation(const Laurent& root, const Poly& P, const Poly& Q);

struct VolochCheck {
  Rat mu;          // |Q_n| = lambda |Q_{n-1}|^mu
  Rat log_lambda;  // in deg-of-T units
  Rat gamma;       // |root - P_n/Q_n| = rho |Q_n|^(-gamma)
  Rat log_rho;
  bool exact_fit = false;   // the two-term recurrences hold exactly
  Rat max_residual;         // worst deviation of the per-index fits
  bool gamma_exceeds = false;  // gamma > 1 + sqrt(mu), decided as (gamma-1)^2 > mu
  std::vector<long long> deg_q;
  std::vector<long long> valuations;
};

// Fit the hypotheses of the Voloch-style exponent theorem from a special
// convergent sequence measured against a solved root.
VolochCheck voloch_hypothesis_check(const SpecialConvergentSeq& seq, const Laurent& root);

struct LambdaBoundsReport {
  struct Central {
    int i = 0;
    std::size_t k = 0;             // 1-based quotient index of the central entry
    long long quotient_degree = 0;
    long long deg_v_before = 0;
    bool deg_v_law_ok = false;
    bool lambda1_ok = false;       // d^2 >= (4/3) deg V_{k-1}
  };
  std::vector<Central> centrals;
  bool profile_found = false;
  Rat min_lambda2_sq;              // max over k of d_{k+1}^2 / deg V_k
  bool lambda2_exceeds = false;    // min admissible lambda2 > 2/sqrt(3)
  bool trend_ok = false;           // windowed block maxima non-increasing
  std::vector<Rat> block_sup_sq;
  std::string detail;
};

// Verify the lambda_1 = 2/sqrt(3) inequality at the central convergents of
// an E1-family quotient stream and measure the minimal admissible lambda_2.
// All comparisons are squared so the irrational threshold never appears.
LambdaBoundsReport lambda_bounds_check(std::span<const Poly> quotients, int a, int c,
                                       int depth);

}  // namespace cflab
