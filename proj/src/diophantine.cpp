#include "cflab/diophantine.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace cflab {

Rat Rat::make(long long n, long long d) {
  detail::require(d != 0, "Rat: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rat{n, d};
}

Rat Rat::operator+(const Rat& o) const {
  return make(num * o.den + o.num * den, den * o.den);
}

Rat Rat::operator-(const Rat& o) const {
  return make(num * o.den - o.num * den, den * o.den);
}

Rat Rat::operator*(const Rat& o) const { return make(num * o.num, den * o.den); }

bool Rat::operator<(const Rat& o) const {
  return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
}

std::string Rat::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

MeasureEstimate measure_from_degrees(const std::vector<long long>& degrees, int n0) {
  const std::size_t m = degrees.size();
  int tail_start = n0 < 0 ? std::max<int>(1, static_cast<int>(m) / 2) : n0;
  detail::require(tail_start >= 1, "measure: n0 must be >= 1");
  detail::require(m >= static_cast<std::size_t>(tail_start) + 2,
                  "measure: too few quotients for the requested tail window");
  for (long long d : degrees)
    detail::require(d >= 1, "measure: quotient degrees past index 0 must be positive");

  MeasureEstimate est;
  est.n0 = tail_start;
  long long sum = degrees[0];
  bool have_global = false, have_tail = false;
  for (std::size_t n = 1; n < m; ++n) {
    Rat r = Rat::make(degrees[n], sum);
    est.ratios.push_back(r);
    if (!have_global || est.global_sup < r) {
      est.global_sup = r;
      have_global = true;
    }
    if (static_cast<int>(n) >= tail_start && (!have_tail || est.tail_sup < r)) {
      est.tail_sup = r;
      have_tail = true;
    }
    sum += degrees[n];
  }
  return est;
}

namespace {

std::vector<long long> quotient_degrees(const ContinuedFraction& cf) {
  std::vector<long long> d;
  for (std::size_t i = 1; i < cf.quotients.size(); ++i)
    d.push_back(cf.quotients[i].degree());
  return d;
}

}  // namespace

MeasureEstimate measure_estimate(const ContinuedFraction& cf, int n0) {
  return measure_from_degrees(quotient_degrees(cf), n0);
}

LiouvilleReport liouville_check(const ContinuedFraction& cf, int degree_bound) {
  LiouvilleReport rep;
  rep.degree_bound = degree_bound;
  rep.measure = measure_estimate(cf, -1);
  // |alpha - U_k/V_k| = |V_k|^(-2) |a_{k+1}|^(-1): valuation 2 deg V_k + d_{k+1}.
  std::vector<long long> d = quotient_degrees(cf);
  long long degv = 0;
  long long fitted = LLONG_MAX;
  for (std::size_t k = 0; k + 1 < d.size(); ++k) {
    degv += d[k];
    long long val = 2 * degv + d[k + 1];
    fitted = std::min(fitted, static_cast<long long>(degree_bound) * degv - val);
  }
  rep.fitted_c_log = fitted == LLONG_MAX ? 0 : fitted;
  // finite windows overshoot the limsup, so the bound carries the same 1/10
  // tolerance as the measure reproduction checks
  rep.within_bound =
      rep.measure.estimate_tail() <= Rat::of(degree_bound) + Rat::make(1, 10);
  return rep;
}

long long convergent_valuation(const Laurent& root, const Poly& P, const Poly& Q) {
  Laurent approx = series_div(Laurent::from_poly(P), Laurent::from_poly(Q),
                              root.precision_floor());
  return valuation_of_difference(root, approx);
}

VolochCheck voloch_hypothesis_check(const SpecialConvergentSeq& seq, const Laurent& root) {
  const std::size_t n = seq.Q.size();
  detail::require(n >= 4, "voloch_hypothesis_check: need at least 4 convergent pairs");

  VolochCheck chk;
  for (const Poly& q : seq.Q) chk.deg_q.push_back(q.degree());
  for (std::size_t i = 0; i < n; ++i) {
    try {
      chk.valuations.push_back(convergent_valuation(root, seq.P[i], seq.Q[i]));
    } catch (const precision_error&) {
      throw precision_error(
          "voloch_hypothesis_check: root precision too small to measure the valuation at index " +
          std::to_string(i));
    }
  }

  // |Q_n| = lambda |Q_{n-1}|^mu  =>  dq_{n+1} - dq_n = mu (dq_n - dq_{n-1})
  std::vector<Rat> mus;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    long long den = chk.deg_q[i] - chk.deg_q[i - 1];
    detail::require(den != 0, "voloch_hypothesis_check: degenerate |Q| growth");
    mus.push_back(Rat::make(chk.deg_q[i + 1] - chk.deg_q[i], den));
  }
  std::vector<Rat> gammas;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    long long den = chk.deg_q[i + 1] - chk.deg_q[i];
    gammas.push_back(Rat::make(chk.valuations[i + 1] - chk.valuations[i], den));
  }
  chk.mu = mus.back();
  chk.gamma = gammas.back();
  chk.exact_fit = true;
  Rat worst = Rat::of(0);
  for (const Rat& m : mus) {
    Rat dev = m < chk.mu ? chk.mu - m : m - chk.mu;
    if (worst < dev) worst = dev;
    if (!(m == chk.mu)) chk.exact_fit = false;
  }
  for (const Rat& g : gammas) {
    Rat dev = g < chk.gamma ? chk.gamma - g : g - chk.gamma;
    if (worst < dev) worst = dev;
    if (!(g == chk.gamma)) chk.exact_fit = false;
  }
  chk.max_residual = worst;
  chk.log_lambda = Rat::of(chk.deg_q[n - 1]) - chk.mu * Rat::of(chk.deg_q[n - 2]);
  chk.log_rho = chk.gamma * Rat::of(chk.deg_q[n - 1]) - Rat::of(chk.valuations[n - 1]);
  // gamma > 1 + sqrt(mu) decided without irrational arithmetic
  Rat gm1 = chk.gamma - Rat::of(1);
  chk.gamma_exceeds = Rat::of(0) < gm1 && chk.mu < gm1 * gm1;
  return chk;
}

LambdaBoundsReport lambda_bounds_check(std::span<const Poly> quotients, int a, int c,
                                       int depth) {
  detail::require(depth >= 1, "lambda_bounds_check: depth must be >= 1");
  LambdaBoundsReport rep;
  const std::size_t m = quotients.size();
  std::vector<long long> d(m + 1, 0), sums(m + 1, 0);
  for (std::size_t k = 1; k <= m; ++k) {
    d[k] = quotients[k - 1].degree();
    sums[k] = sums[k - 1] + d[k];
  }

  std::vector<std::size_t> central_index;
  rep.profile_found = true;
  for (int i = 1; i <= depth; ++i) {
    long long g = e1_central_degree(a, c, i);
    std::size_t k = 0;
    for (std::size_t j = 1; j <= m; ++j)
      if (d[j] == g) {
        k = j;
        break;
      }
    if (k == 0) {
      rep.profile_found = false;
      rep.detail = "central quotient of level " + std::to_string(i) +
                   " (degree " + std::to_string(g) + ") not found in the stream";
      break;
    }
    LambdaBoundsReport::Central cen;
    cen.i = i;
    cen.k = k;
    cen.quotient_degree = g;
    cen.deg_v_before = sums[k - 1];
    cen.deg_v_law_ok = sums[k - 1] == e1_degv_before_central(a, c, i);
    // d >= (2/sqrt(3)) sqrt(deg V)  <=>  3 d^2 >= 4 deg V
    cen.lambda1_ok = 3 * g * g >= 4 * sums[k - 1];
    central_index.push_back(k);
    rep.centrals.push_back(cen);
  }

  // minimal admissible lambda_2: sup over convergents of d_{k+1} / sqrt(deg V_k)
  bool have = false;
  for (std::size_t k = 1; k + 1 <= m; ++k) {
    Rat r = Rat::make(d[k + 1] * d[k + 1], sums[k]);
    if (!have || rep.min_lambda2_sq < r) {
      rep.min_lambda2_sq = r;
      have = true;
    }
  }
  rep.lambda2_exceeds = have && Rat::make(4, 3) < rep.min_lambda2_sq;

  // per-block suprema between consecutive central entries, then windowed
  // pairwise maxima must not increase
  if (!central_index.empty()) {
    std::size_t lo = 1;
    for (std::size_t b = 0; b < central_index.size(); ++b) {
      std::size_t hi = central_index[b];
      Rat sup = Rat::of(0);
      for (std::size_t k = std::max<std::size_t>(lo, 2); k <= hi && k <= m; ++k)
        if (sums[k - 1] > 0) {
          Rat r = Rat::make(d[k] * d[k], sums[k - 1]);
          if (sup < r) sup = r;
        }
      rep.block_sup_sq.push_back(sup);
      lo = hi + 1;
    }
    rep.trend_ok = true;
    for (std::size_t b = 0; b + 2 < rep.block_sup_sq.size(); ++b) {
      Rat w1 = std::max(rep.block_sup_sq[b], rep.block_sup_sq[b + 1],
                        [](const Rat& x, const Rat& y) { return x < y; });
      Rat w2 = std::max(rep.block_sup_sq[b + 1], rep.block_sup_sq[b + 2],
                        [](const Rat& x, const Rat& y) { return x < y; });
      if (w1 < w2) rep.trend_ok = false;
    }
  }
  return rep;
}

}  // namespace cflab
