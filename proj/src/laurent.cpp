#include "cflab/laurent.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <functional>

namespace cflab {

namespace {
constexpr long long kHugeLength = LLONG_MAX / 4;
}

Laurent Laurent::exact_zero(uint32_t p) { return Laurent(p, true); }

Laurent Laurent::certified_zero(int floor, uint32_t p) {
  Laurent z(p, false);
  z.floor_ = floor;
  return z;
}

Laurent Laurent::from_poly(const Poly& f) {
  Laurent x(f.modulus(), true);
  if (f.is_zero()) return x;
  x.top_ = f.degree();
  x.floor_ = 0;
  x.c_.resize(static_cast<std::size_t>(f.degree()) + 1);
  for (int i = 0; i <= f.degree(); ++i)
    x.c_[static_cast<std::size_t>(f.degree() - i)] = f.coeff(i);
  x.normalize();
  return x;
}

Laurent Laurent::monomial(long long c, int exp, uint32_t p) {
  Laurent x(p, true);
  long long r = c % static_cast<long long>(p);
  if (r < 0) r += p;
  if (r == 0) return x;
  x.top_ = exp;
  x.floor_ = exp;
  x.c_.assign(1, static_cast<uint32_t>(r));
  return x;
}

void Laurent::normalize() {
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    return;
  }
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    top_ -= static_cast<int>(lead);
  }
  if (exact_) {
    while (!c_.empty() && c_.back() == 0) {
      c_.pop_back();
      ++floor_;
    }
    floor_ = top_ - static_cast<int>(c_.size()) + 1;
  }
}

uint32_t Laurent::coeff(int exp) const {
  if (!certified_at(exp))
    throw precision_error("Laurent: coefficient below the certified floor");
  if (c_.empty() || exp > top_) return 0;
  int lo = top_ - static_cast<int>(c_.size()) + 1;
  if (exp < lo) return 0;  // exact value below its support
  return c_[static_cast<std::size_t>(top_ - exp)];
}

long long Laurent::significant_length() const {
  if (exact_) return kHugeLength;
  if (c_.empty()) return 0;
  return static_cast<long long>(top_) - floor_ + 1;
}

Laurent Laurent::truncated(int new_floor) const {
  if (exact_ && (c_.empty() || new_floor <= floor_)) return *this;
  int eff = exact_ ? new_floor : std::max(new_floor, floor_);
  Laurent r(p_, false);
  r.floor_ = eff;
  if (c_.empty() || top_ < eff) return r;
  r.top_ = top_;
  r.c_.assign(c_.begin(), c_.begin() + (static_cast<long long>(top_) - eff + 1));
  r.normalize();
  return r;
}

Laurent Laurent::approximated(int floor) const {
  if (!exact_) return truncated(floor);
  Laurent r(p_, false);
  r.floor_ = floor;
  if (c_.empty() || top_ < floor) return r;
  r.top_ = top_;
  r.c_.assign(static_cast<std::size_t>(top_ - floor) + 1, 0);
  for (std::size_t i = 0; i < c_.size() && i < r.c_.size(); ++i) r.c_[i] = c_[i];
  r.normalize();
  return r;
}

std::string Laurent::to_string(std::size_t max_terms) const {
  if (is_exact_zero()) return "0";
  if (c_.empty()) return "O(T^" + std::to_string(floor_ - 1) + ")";
  std::string out;
  std::size_t shown = 0;
  for (std::size_t i = 0; i < c_.size() && shown < max_terms; ++i) {
    if (c_[i] == 0) continue;
    int exp = top_ - static_cast<int>(i);
    if (!out.empty()) out += '+';
    if (exp == 0) {
      out += std::to_string(c_[i]);
    } else {
      if (c_[i] != 1) {
        out += std::to_string(c_[i]);
        out += '*';
      }
      out += "T";
      if (exp != 1) out += "^" + std::to_string(exp);
    }
    ++shown;
  }
  if (out.empty()) out = "0";
  if (!exact_) out += "+O(T^" + std::to_string(floor_ - 1) + ")";
  return out;
}

namespace {

void match(const Laurent& a, const Laurent& b) {
  detail::require(a.modulus() == b.modulus(), "Laurent: modulus mismatch");
}

}  // namespace

Laurent add(const Laurent& a, const Laurent& b) {
  match(a, b);
  const uint32_t p = a.p_;
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;

  bool exact = a.exact_ && b.exact_;
  // Window bottom: the higher of the approximate floors; exact operands are
  // certified everywhere.
  long long floor;
  if (exact) {
    long long fa = a.c_.empty() ? 0 : a.top_ - static_cast<long long>(a.c_.size()) + 1;
    long long fb = b.c_.empty() ? 0 : b.top_ - static_cast<long long>(b.c_.size()) + 1;
    floor = std::min(fa, fb);
  } else {
    floor = LLONG_MIN;
    if (!a.exact_) floor = std::max(floor, static_cast<long long>(a.floor_));
    if (!b.exact_) floor = std::max(floor, static_cast<long long>(b.floor_));
  }
  long long top = std::max(static_cast<long long>(a.top_bound()),
                           static_cast<long long>(b.top_bound()));
  Laurent r(p, exact);
  r.floor_ = static_cast<int>(floor);
  if (top < floor) return r;  // nothing certified nonzero above the floor
  r.top_ = static_cast<int>(top);
  r.c_.resize(static_cast<std::size_t>(top - floor + 1));
  for (long long e = top; e >= floor; --e) {
    uint32_t va = (!a.c_.empty() && e <= a.top_ && (a.exact_ || e >= a.floor_))
                      ? a.coeff(static_cast<int>(e)) : 0u;
    uint32_t vb = (!b.c_.empty() && e <= b.top_ && (b.exact_ || e >= b.floor_))
                      ? b.coeff(static_cast<int>(e)) : 0u;
    uint32_t v = va + vb;
    r.c_[static_cast<std::size_t>(top - e)] = v >= p ? v - p : v;
  }
  r.normalize();
  if (exact && !r.c_.empty()) r.floor_ = r.top_ - static_cast<int>(r.c_.size()) + 1;
  return r;
}

Laurent neg(const Laurent& a) {
  Laurent r = a;
  for (uint32_t& v : r.c_)
    if (v != 0) v = r.p_ - v;
  return r;
}

Laurent sub(const Laurent& a, const Laurent& b) { return add(a, neg(b)); }

Laurent mul(const Laurent& a, const Laurent& b) {
  match(a, b);
  const uint32_t p = a.p_;
  if (a.is_exact_zero() || b.is_exact_zero()) return Laurent::exact_zero(p);
  if (a.c_.empty() || b.c_.empty()) {
    // |x*y| <= |T|^(top_bound(a) + top_bound(b)); zero is certified above it.
    long long fl = static_cast<long long>(a.top_bound()) + b.top_bound() + 1;
    return Laurent::certified_zero(static_cast<int>(fl), p);
  }

  bool exact = a.exact_ && b.exact_;
  long long top = static_cast<long long>(a.top_) + b.top_;
  long long floor;
  if (exact) {
    long long fa = a.top_ - static_cast<long long>(a.c_.size()) + 1;
    long long fb = b.top_ - static_cast<long long>(b.c_.size()) + 1;
    floor = fa + fb;
  } else {
    floor = LLONG_MIN;
    if (!a.exact_) floor = std::max(floor, static_cast<long long>(a.floor_) + b.top_);
    if (!b.exact_) floor = std::max(floor, static_cast<long long>(b.floor_) + a.top_);
  }

  Laurent r(a.p_, exact);
  r.top_ = static_cast<int>(top);
  r.floor_ = static_cast<int>(floor);
  std::vector<uint64_t> acc(static_cast<std::size_t>(top - floor + 1), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    long long ea = static_cast<long long>(a.top_) - static_cast<long long>(i);
    if (ea + b.top_ < floor) break;  // every further product sits below the floor
    uint64_t av = a.c_[i];
    std::size_t jmax = std::min<std::size_t>(b.c_.size() - 1,
        static_cast<std::size_t>(ea + b.top_ - floor));
    for (std::size_t j = 0; j <= jmax; ++j) {
      if (b.c_[j] == 0) continue;
      long long e = ea + b.top_ - static_cast<long long>(j);
      acc[static_cast<std::size_t>(top - e)] += av * b.c_[j];
    }
  }
  r.c_.resize(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k)
    r.c_[k] = static_cast<uint32_t>(acc[k] % p);
  r.normalize();
  if (exact && !r.c_.empty()) r.floor_ = r.top_ - static_cast<int>(r.c_.size()) + 1;
  return r;
}

Laurent invert(const Laurent& x) {
  const uint32_t p = x.p_;
  if (x.is_exact_zero()) throw std::invalid_argument("invert: division by zero");
  if (x.c_.empty())
    throw precision_error("invert: certified segment is all zero");
  if (x.exact_) {
    if (x.c_.size() == 1)
      return Laurent::monomial(detail::mod_inverse(x.c_[0], p), -x.top_, p);
    throw std::invalid_argument("invert: exact non-monomial, use series_div");
  }
  const std::size_t L = x.c_.size();
  const uint32_t inv0 = detail::mod_inverse(x.c_[0], p);
  std::vector<uint32_t> v(L, 0);
  v[0] = inv0;
  for (std::size_t k = 1; k < L; ++k) {
    uint64_t acc = 0;
    for (std::size_t j = 1; j <= k; ++j)
      acc += static_cast<uint64_t>(x.c_[j]) * v[k - j];
    uint32_t s = static_cast<uint32_t>(acc % p);
    v[k] = static_cast<uint32_t>(static_cast<uint64_t>(s == 0 ? 0 : p - s) * inv0 % p);
  }
  Laurent r(p, false);
  r.top_ = -x.top_;
  r.floor_ = r.top_ - static_cast<int>(L) + 1;
  r.c_ = std::move(v);
  r.normalize();
  return r;
}

Laurent series_div(const Laurent& num, const Laurent& den, int floor) {
  match(num, den);
  const uint32_t p = num.p_;
  if (den.is_exact_zero()) throw std::invalid_argument("series_div: division by zero");
  if (den.c_.empty())
    throw precision_error("series_div: divisor has no certified leading coefficient");
  if (num.is_exact_zero()) return Laurent::exact_zero(p);

  long long h = floor;
  if (!num.exact_) h = std::max(h, static_cast<long long>(num.floor_) - den.top_);
  if (!den.exact_)
    h = std::max(h, static_cast<long long>(den.floor_) + num.top_bound() - 2LL * den.top_);
  if (num.c_.empty())
    return Laurent::certified_zero(static_cast<int>(h), p);

  long long qt = static_cast<long long>(num.top_) - den.top_;
  if (qt < h) return Laurent::certified_zero(static_cast<int>(h), p);

  const std::size_t L = static_cast<std::size_t>(qt - h + 1);
  const uint32_t inv0 = detail::mod_inverse(den.c_[0], p);
  std::vector<uint32_t> w(L, 0);
  for (std::size_t k = 0; k < L; ++k) {
    uint64_t nk = k < num.c_.size() ? num.c_[k] : 0;
    uint64_t acc = 0;
    for (std::size_t j = 1; j <= k && j < den.c_.size(); ++j)
      acc += static_cast<uint64_t>(den.c_[j]) * w[k - j];
    uint64_t diff = (nk % p + p - acc % p) % p;
    w[k] = static_cast<uint32_t>(diff * inv0 % p);
  }
  Laurent r(p, false);
  r.top_ = static_cast<int>(qt);
  r.floor_ = static_cast<int>(h);
  r.c_ = std::move(w);
  r.normalize();
  return r;
}

std::pair<Poly, Laurent> poly_part(const Laurent& x) {
  const uint32_t p = x.modulus();
  if (x.zero_window() || x.top_degree() < 0) return {Poly(p), x};
  if (!x.exact() && x.precision_floor() > 0)
    throw precision_error("poly_part: polynomial part is not fully certified");

  std::vector<uint32_t> asc(static_cast<std::size_t>(x.top_degree()) + 1, 0);
  for (int e = 0; e <= x.top_degree(); ++e) asc[static_cast<std::size_t>(e)] = x.coeff(e);
  Poly head = Poly::from_coeffs(std::move(asc), p);

  Laurent tail = sub(x, Laurent::from_poly(head));
  if (!tail.zero_window() && tail.top_degree() >= 0)
    throw std::logic_error("poly_part: head subtraction left high terms");
  return {head, tail};
}

const char* family_name(Family f) {
  switch (f) {
    case Family::W1: return "W1";
    case Family::W2: return "W2";
    case Family::E1: return "E1";
    case Family::E2: return "E2";
    case Family::MR: return "MR";
    case Family::Raw: return "RAW";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "W1") return Family::W1;
  if (name == "W2") return Family::W2;
  if (name == "E1") return Family::E1;
  if (name == "E2") return Family::E2;
  if (name == "MR") return Family::MR;
  if (name == "RAW" || name == "raw") return Family::Raw;
  return std::nullopt;
}

EquationSpec EquationSpec::make(Family family, const Poly& A, const Poly& C) {
  detail::require(A.modulus() == C.modulus(), "EquationSpec: modulus mismatch");
  switch (family) {
    case Family::W1:
    case Family::E1:
      detail::require(A.degree() >= 1, "EquationSpec: A must be nonconstant");
      detail::require(!C.is_zero(), "EquationSpec: C must be nonzero");
      detail::require(C.degree() <= A.degree(), "EquationSpec: requires deg C <= deg A");
      break;
    case Family::W2:
    case Family::E2:
      detail::require(!C.is_zero(), "EquationSpec: C must be nonzero");
      detail::require(C.degree() < A.degree(), "EquationSpec: requires deg C < deg A");
      break;
    case Family::MR:
    case Family::Raw:
      throw std::invalid_argument("EquationSpec: family has no (A, C) parameters");
  }
  EquationSpec eq(family, A, C, A.modulus());
  eq.c_divides_a_ = divides(C, A);
  return eq;
}

EquationSpec EquationSpec::mills_robbins(uint32_t p) {
  return EquationSpec(Family::MR, Poly(p), Poly(p), p);
}

EquationSpec EquationSpec::raw(QuarticSpec q) {
  const uint32_t p = q.modulus();
  detail::require(q.c3.modulus() == p && q.c2.modulus() == p && q.c1.modulus() == p &&
                      q.c0.modulus() == p,
                  "EquationSpec: modulus mismatch in raw quartic");
  detail::require(!q.c4.is_zero(), "EquationSpec: raw quartic needs a nonzero x^4 coefficient");
  EquationSpec eq(Family::Raw, Poly(p), Poly(p), p);
  eq.raw_ = std::move(q);
  return eq;
}

QuarticSpec EquationSpec::quartic() const {
  const uint32_t p = p_;
  const Poly zero(p);
  const Poly one = Poly::constant(1, p);
  switch (family_) {
    case Family::W1:
      return {C_, zero, zero, -A_, one};
    case Family::W2:
      return {-one, zero, zero, -A_, C_};
    case Family::E1:
      return {C_ * C_, zero, C_.scaled(2), -(A_ * A_), one};
    case Family::E2:
      return {one, zero, C_, -(A_ * A_), C_ * C_};
    case Family::MR:
      return {one, zero, one, -Poly::t(p), one};
    case Family::Raw:
      return *raw_;
  }
  throw std::logic_error("EquationSpec: bad family");
}

Laurent eval_poly_series(const std::vector<Poly>& ascending, const Laurent& x) {
  detail::require(!ascending.empty(), "eval_poly_series: empty coefficient list");
  Laurent acc = Laurent::from_poly(ascending.back());
  for (std::size_t i = ascending.size() - 1; i-- > 0;)
    acc = add(mul(acc, x), Laurent::from_poly(ascending[i]));
  return acc;
}

Laurent eval_quartic(const QuarticSpec& q, const Laurent& x) {
  return eval_poly_series(q.ascending(), x);
}

namespace {

std::vector<Poly> quartic_derivative(const QuarticSpec& q) {
  return {q.c1, q.c2.scaled(2), q.c3.scaled(3), q.c4.scaled(4)};
}

long long residual_valuation(const Laurent& r) {
  return r.zero_window() ? LLONG_MAX / 2 : -static_cast<long long>(r.top_degree());
}

// Newton iteration on a fixed window, with an a-posteriori certificate: at
// the end, eval on the truncated root must vanish on its certified window
// deeply enough for the ultrametric Newton bound to pin every claimed
// coefficient.
Laurent newton_root(const QuarticSpec& q, const Laurent& seed, int precision,
                    int window_floor) {
  const std::vector<Poly> f = q.ascending();
  const std::vector<Poly> fp = quartic_derivative(q);

  Laurent x = seed.truncated(window_floor);
  long long prev_rv = LLONG_MIN;
  for (int iter = 0; iter < 80; ++iter) {
    Laurent r = eval_poly_series(f, x);
    if (r.zero_window()) break;
    long long rv = residual_valuation(r);
    if (rv <= prev_rv)
      throw solve_error("solve_root: residual fails to contract (no root with this leading behavior?)");
    prev_rv = rv;
    Laurent d = eval_poly_series(fp, x);
    if (d.zero_window())
      throw solve_error("solve_root: derivative vanishes at the iterate");
    Laurent dx = series_div(r, d, window_floor);
    x = sub(x, dx).truncated(window_floor);
  }

  Laurent out = x.truncated(-precision);
  Laurent res = eval_poly_series(f, out);
  if (res.is_exact_zero()) return out;
  Laurent der = eval_poly_series(fp, out);
  if (der.zero_window())
    throw solve_error("solve_root: derivative vanishes at the root");
  long long m = der.top_degree();
  // |x* - out| <= |f(out)| / |f'(out)| must stay below T^(-precision), and
  // the simple-root condition |f| < |f'|^2 must hold.
  if (!res.zero_window() ||
      static_cast<long long>(res.precision_floor()) > m - precision ||
      static_cast<long long>(res.precision_floor()) - 1 >= 2 * m)
    throw precision_error("solve_root: residual certificate failed at this window");
  return out;
}

Laurent newton_with_retry(const QuarticSpec& q,
                          const std::function<Laurent(int)>& seed_at, int precision,
                          int base_slack) {
  int slack = base_slack;
  for (int attempt = 0;; ++attempt) {
    int w = -(precision + slack);
    try {
      return newton_root(q, seed_at(w), precision, w);
    } catch (const precision_error&) {
      if (attempt >= 3) throw;
      slack *= 2;
    }
  }
}

int max_coeff_degree(const QuarticSpec& q) {
  int d = 0;
  for (const Poly& c : q.ascending())
    if (!c.is_zero()) d = std::max(d, c.degree());
  return d;
}

Laurent solve_raw(const EquationSpec& eq, int precision) {
  const QuarticSpec q = *eq.raw_quartic();
  const uint32_t p = eq.p();
  const std::vector<Poly> cs = q.ascending();
  const int maxdeg = max_coeff_degree(q);
  const int base_slack = 64 + 6 * (maxdeg + 2);

  for (int v = -1; v >= -(4 * maxdeg + 8); --v) {
    // Terms c_i x^i have size deg(c_i) + i*v; a root with |x| = |T|^v needs
    // the maximum attained at least twice, with cancelling leading terms.
    long long best = LLONG_MIN;
    for (int i = 0; i <= 4; ++i)
      if (!cs[static_cast<std::size_t>(i)].is_zero())
        best = std::max(best, static_cast<long long>(cs[static_cast<std::size_t>(i)].degree()) +
                                  static_cast<long long>(i) * v);
    std::vector<int> argmax;
    for (int i = 0; i <= 4; ++i)
      if (!cs[static_cast<std::size_t>(i)].is_zero() &&
          static_cast<long long>(cs[static_cast<std::size_t>(i)].degree()) +
                  static_cast<long long>(i) * v == best)
        argmax.push_back(i);
    if (argmax.size() < 2) continue;
    for (uint32_t l = 1; l < p; ++l) {
      uint64_t s = 0;
      for (int i : argmax)
        s += static_cast<uint64_t>(cs[static_cast<std::size_t>(i)].leading().value()) *
             detail::mod_pow(l, static_cast<uint64_t>(i), p) % p;
      if (s % p != 0) continue;
      try {
        auto seed_at = [&](int) { return Laurent::monomial(l, v, p); };
        return newton_with_retry(q, seed_at, precision, base_slack + 6 * (-v));
      } catch (const solve_error&) {
        // wrong branch; try the next candidate
      }
    }
  }
  throw solve_error("solve_root: no root with |x| < 1 found for the raw quartic");
}

}  // namespace

Laurent solve_root(const EquationSpec& eq, int precision) {
  const uint32_t p = eq.p();
  int da = 1, dc = 0;
  if (eq.family() == Family::W1 || eq.family() == Family::W2 ||
      eq.family() == Family::E1 || eq.family() == Family::E2) {
    da = eq.A().degree();
    dc = std::max(eq.C().degree(), 0);
  } else if (eq.family() == Family::Raw) {
    da = max_coeff_degree(*eq.raw_quartic());
  }
  detail::require(precision >= 4 * (da + dc + 1),
                  "solve_root: precision below 4*(deg A + deg C + 1)");

  const QuarticSpec q = eq.quartic();
  const int base_slack = 64 + 6 * (max_coeff_degree(q) + 2);
  const Laurent one = Laurent::from_poly(Poly::constant(1, p));

  switch (eq.family()) {
    case Family::W1: {
      auto seed = [&](int w) { return series_div(one, Laurent::from_poly(eq.A()), w); };
      return newton_with_retry(q, seed, precision, base_slack);
    }
    case Family::W2: {
      // Reciprocal route: y = 1/x satisfies C y^4 - A y^3 - 1 = 0 with
      // seed A/C, then invert.
      const int gap = eq.A().degree() - eq.C().degree();
      QuarticSpec g{eq.C(), -eq.A(), Poly(p), Poly(p), -Poly::constant(1, p)};
      auto seed = [&](int w) {
        return series_div(Laurent::from_poly(eq.A()), Laurent::from_poly(eq.C()), w);
      };
      Laurent y = newton_with_retry(g, seed, precision + 2 * gap + 8, base_slack);
      Laurent x = invert(y).truncated(-precision);
      Laurent res = eval_quartic(q, x);
      if (!res.zero_window() ||
          static_cast<long long>(res.precision_floor()) > eq.A().degree() - precision)
        throw precision_error("solve_root: W2 residual check failed");
      return x;
    }
    case Family::E1:
    case Family::E2: {
      Laurent direct = [&] {
        if (eq.family() == Family::E1) {
          auto seed = [&](int w) {
            return series_div(one, Laurent::from_poly(eq.A() * eq.A()), w);
          };
          return newton_with_retry(q, seed, precision, base_slack);
        }
        auto seed = [&](int w) {
          return series_div(Laurent::from_poly(eq.C() * eq.C()),
                            Laurent::from_poly(eq.A() * eq.A()), w);
        };
        return newton_with_retry(q, seed, precision, base_slack);
      }();
      // Built-in cross-check: the root is the square of the matching
      // W-family root. Newton stays authoritative.
      Family wf = eq.family() == Family::E1 ? Family::W1 : Family::W2;
      EquationSpec weq = EquationSpec::make(wf, eq.A(), eq.C());
      int wprec = std::max(precision, 4 * (da + dc + 1) + 8);
      Laurent wroot = solve_root(weq, wprec);
      Laurent squared = mul(wroot, wroot);
      int overlap = std::max(-precision, squared.precision_floor());
      for (int e = direct.top_degree(); e >= overlap; --e)
        if (direct.coeff(e) != squared.coeff(e))
          throw std::logic_error("solve_root: direct root disagrees with the squared W-root");
      return direct;
    }
    case Family::MR: {
      auto seed = [&](int) { return Laurent::monomial(1, -1, p); };
      return newton_with_retry(q, seed, precision, base_slack);
    }
    case Family::Raw:
      return solve_raw(eq, precision);
  }
  throw std::logic_error("solve_root: bad family");
}

CertifiedOverlap compare_certified(const Laurent& a, const Laurent& b) {
  detail::require(a.modulus() == b.modulus(), "compare_certified: modulus mismatch");
  long long floor = LLONG_MIN / 2;
  if (!a.exact()) floor = std::max(floor, static_cast<long long>(a.precision_floor()));
  if (!b.exact()) floor = std::max(floor, static_cast<long long>(b.precision_floor()));
  long long top = LLONG_MIN / 2;
  if (!a.zero_window()) top = std::max(top, static_cast<long long>(a.top_degree()));
  if (!b.zero_window()) top = std::max(top, static_cast<long long>(b.top_degree()));
  if (floor == LLONG_MIN / 2) {
    // both exact: compare the full supports
    if (top == LLONG_MIN / 2) return {0, true, std::nullopt};
    long long lo = top;
    for (const Laurent* s : {&a, &b})
      if (!s->zero_window())
        lo = std::min(lo, static_cast<long long>(s->window_floor()));
    floor = lo;
  }
  CertifiedOverlap out{static_cast<int>(floor), true, std::nullopt};
  for (long long e = top; e >= floor; --e) {
    if (a.coeff(static_cast<int>(e)) != b.coeff(static_cast<int>(e))) {
      out.equal = false;
      out.first_mismatch_exp = static_cast<int>(e);
      break;
    }
  }
  return out;
}

long long valuation_of_difference(const Laurent& a, const Laurent& b) {
  Laurent d = sub(a, b);
  if (d.zero_window())
    throw precision_error(
        "valuation_of_difference: certified windows do not separate the values");
  return -static_cast<long long>(d.top_degree());
}

}  // namespace cflab
