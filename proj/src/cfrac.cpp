#include "cflab/cfrac.hpp"

#include <algorithm>

namespace cflab {

ContinuedFraction expand(const Laurent& alpha, std::size_t max_terms) {
  ContinuedFraction cf;
  cf.p = alpha.modulus();
  Laurent x = alpha;
  for (std::size_t k = 0; k < max_terms; ++k) {
    if (x.zero_window()) {
      // only reachable at k == 0; later iterations handle the remainder below
      if (x.is_exact_zero()) {
        cf.quotients.push_back(Poly(cf.p));
        cf.finite = true;
      } else {
        cf.exhausted_at = k;
      }
      break;
    }
    if (!x.exact() && x.precision_floor() > 0) {
      cf.exhausted_at = k;
      break;
    }
    auto [a, rem] = poly_part(x);
    long long d = a.is_zero() ? 0 : std::max(a.degree(), 0);
    if (x.significant_length() - 2 * d < 1) {
      cf.exhausted_at = k;
      break;
    }
    if (k >= 1 && a.degree() < 1)
      throw std::logic_error("expand: partial quotient of degree < 1 past index 0");
    cf.quotients.push_back(a);
    if (rem.zero_window()) {
      if (rem.is_exact_zero()) {
        cf.finite = true;
      } else {
        cf.exhausted_at = k + 1;
      }
      break;
    }
    x = invert(rem);
  }
  return cf;
}

namespace {

std::pair<std::vector<Poly>, std::vector<Poly>> convergent_columns(
    std::span<const Poly> items, uint32_t p) {
  std::vector<Poly> num, den;
  Poly upp = Poly::constant(1, p);  // U_{-1}
  Poly vpp(p);                      // V_{-1}
  Poly up(p), vp(p);
  bool first = true;
  for (const Poly& a : items) {
    Poly u, v;
    if (first) {
      u = a;
      v = Poly::constant(1, p);
      first = false;
    } else {
      u = a * up + upp;
      v = a * vp + vpp;
      upp = up;
      vpp = vp;
    }
    num.push_back(u);
    den.push_back(v);
    up = u;
    vp = v;
  }
  return {std::move(num), std::move(den)};
}

}  // namespace

ConvergentTable convergents(const ContinuedFraction& cf) {
  auto [num, den] = convergent_columns(cf.quotients, cf.p);
  return {std::move(num), std::move(den)};
}

std::pair<Poly, Poly> cf_value(std::span<const Poly> items) {
  detail::require(!items.empty(), "cf_value: empty quotient list");
  auto [num, den] = convergent_columns(items, items[0].modulus());
  return {num.back(), den.back()};
}

bool determinant_identity_holds(const ConvergentTable& t) {
  if (t.num.empty()) return true;
  const uint32_t p = t.num[0].modulus();
  for (std::size_t k = 0; k + 1 < t.num.size(); ++k) {
    Poly det = t.num[k + 1] * t.den[k] - t.den[k + 1] * t.num[k];
    Poly want = Poly::constant(k % 2 == 0 ? 1 : -1, p);
    if (det != want) return false;
  }
  return true;
}

Reconstruction reconstruct(const ContinuedFraction& cf, int precision) {
  detail::require(!cf.quotients.empty(), "reconstruct: empty continued fraction");
  auto [u, v] = cf_value(cf.quotients);
  Reconstruction out;
  long long determined = cf.finite
      ? static_cast<long long>(precision)
      : 2LL * std::max(v.degree(), 0);
  long long target = std::min<long long>(precision, determined);
  out.truncated_to_determined = target < precision;
  out.series = series_div(Laurent::from_poly(u), Laurent::from_poly(v),
                          static_cast<int>(-target));
  return out;
}

bool scale_identity_check(const Poly& B, const Poly& C, const ContinuedFraction& cf) {
  detail::require(!B.is_zero() && !C.is_zero(), "scale_identity_check: B, C nonzero");
  detail::require(!cf.quotients.empty(), "scale_identity_check: empty continued fraction");
  std::vector<Poly> left, right;
  left.reserve(cf.size());
  right.reserve(cf.size());
  for (std::size_t i = 0; i < cf.size(); ++i) {
    const Poly& a = cf.quotients[i];
    if (i % 2 == 0) {
      left.push_back(B * a);
      right.push_back(C * a);
    } else {
      left.push_back(C * a);
      right.push_back(B * a);
    }
  }
  auto [ul, vl] = cf_value(left);
  auto [ur, vr] = cf_value(right);
  return C * ul * vr == B * ur * vl;
}

std::vector<Poly> alt_scale(std::span<const Poly> seq, const Poly& B,
                            AltScalePositions positions) {
  detail::require(!B.is_zero(), "alt_scale: zero scaling polynomial");
  std::vector<Poly> out;
  out.reserve(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    bool odd_pos = (i % 2) == 0;  // 1-based position i+1
    bool divide = (positions == AltScalePositions::DivideOdd) ? odd_pos : !odd_pos;
    if (divide) {
      auto [q, r] = divmod(seq[i], B);
      if (!r.is_zero())
        throw divisibility_error(
            "alt_scale: " + format_poly(B) + " does not divide " + format_poly(seq[i]), i);
      out.push_back(q);
    } else {
      out.push_back(seq[i] * B);
    }
  }
  return out;
}

std::vector<Poly> reversed(std::span<const Poly> seq) {
  return std::vector<Poly>(seq.rbegin(), seq.rend());
}

std::vector<Poly> cube_each(std::span<const Poly> seq) {
  std::vector<Poly> out;
  out.reserve(seq.size());
  for (const Poly& f : seq) out.push_back(frobenius_cube(f));
  return out;
}

OpenQuestionReport open_question_check(std::span<const Poly> seq, const Poly& D) {
  detail::require(D.degree() >= 1, "open_question_check: deg D must be >= 1");
  detail::require(!seq.empty(), "open_question_check: empty sequence");
  for (const Poly& a : seq)
    detail::require(a.degree() >= 1, "open_question_check: entries must have deg > 0");
  if (!divides(D, seq[0]))
    throw std::invalid_argument("open_question_check: D does not divide a_1");

  OpenQuestionReport rep;
  rep.n = seq.size();

  std::vector<Poly> rev = reversed(seq);
  auto [un, vn] = cf_value(seq);
  auto [ur, vr] = cf_value(rev);
  // [a_n,...,a_1] == (1/D) [a_1,...,a_n] as rational functions
  rep.hypothesis_holds = (ur * D * vn == un * vr);
  if (!rep.hypothesis_holds) {
    rep.detail = "hypothesis not satisfied";
    return rep;
  }

  rep.n_even = seq.size() % 2 == 0;
  if (!rep.n_even) {
    rep.conclusion_holds = false;
    rep.detail = "counterexample: hypothesis holds but n is odd";
    return rep;
  }
  // a_{n-k} = D^{(-1)^{k+1}} a_{k+1}: divide when k is even, multiply when odd.
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const Poly& lhs = seq[seq.size() - 1 - k];  // a_{n-k}
    const Poly& rhs = seq[k];                   // a_{k+1}
    bool ok;
    if (k % 2 == 0) {
      auto [q, r] = divmod(rhs, D);
      ok = r.is_zero() && lhs == q;
    } else {
      ok = lhs == rhs * D;
    }
    if (!ok) {
      rep.conclusion_holds = false;
      rep.witness_k = k;
      rep.detail = "counterexample: entry symmetry fails at k=" + std::to_string(k);
      return rep;
    }
  }
  rep.conclusion_holds = true;
  rep.detail = "hypothesis and conclusion hold";
  return rep;
}

}  // namespace cflab
