#include "cflab/gfpoly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace cflab {

namespace detail {

uint32_t mod_pow(uint32_t base, uint64_t e, uint32_t p) {
  uint64_t acc = 1, b = base % p;
  while (e) {
    if (e & 1) acc = acc * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(acc);
}

uint32_t mod_inverse(uint32_t v, uint32_t p) {
  // p prime, v != 0 mod p
  return mod_pow(v % p, p - 2, p);
}

}  // namespace detail

Poly Poly::from_coeffs(std::vector<uint32_t> ascending, uint32_t p) {
  Poly f(p);
  for (uint32_t& v : ascending) v %= p;
  f.c_ = std::move(ascending);
  f.normalize();
  return f;
}

Poly Poly::constant(long long c, uint32_t p) {
  Poly f(p);
  uint32_t r = f.reduce(c);
  if (r != 0) f.c_.push_back(r);
  return f;
}

Poly Poly::monomial(long long c, int exp, uint32_t p) {
  detail::require(exp >= 0, "Poly: monomial exponent must be >= 0");
  Poly f(p);
  uint32_t r = f.reduce(c);
  if (r == 0) return f;
  f.c_.assign(static_cast<std::size_t>(exp) + 1, 0);
  f.c_.back() = r;
  return f;
}

Poly Poly::operator+(const Poly& o) const {
  match(o);
  Poly r(p_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    uint32_t v = (i < c_.size() ? c_[i] : 0u) + (i < o.c_.size() ? o.c_[i] : 0u);
    r.c_[i] = v >= p_ ? v - p_ : v;
  }
  r.normalize();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly r(p_);
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] == 0 ? 0 : p_ - c_[i];
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  match(o);
  if (c_.empty() || o.c_.empty()) return Poly(p_);
  Poly r(p_);
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  // (p-1)^2 per term; accumulate in 64 bits and reduce per output coefficient.
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    uint64_t acc = 0;
    std::size_t lo = i >= o.c_.size() ? i - o.c_.size() + 1 : 0;
    std::size_t hi = std::min(i, c_.size() - 1);
    for (std::size_t j = lo; j <= hi; ++j)
      acc += static_cast<uint64_t>(c_[j]) * o.c_[i - j];
    r.c_[i] = static_cast<uint32_t>(acc % p_);
  }
  r.normalize();
  return r;
}

Poly Poly::scaled(long long k) const {
  uint32_t s = reduce(k);
  Poly r(p_);
  if (s == 0 || c_.empty()) return r;
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i)
    r.c_[i] = static_cast<uint32_t>(static_cast<uint64_t>(c_[i]) * s % p_);
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
  detail::require(num.modulus() == den.modulus(), "divmod: modulus mismatch");
  detail::require(!den.is_zero(), "divmod: division by zero polynomial");
  const uint32_t p = num.modulus();
  if (num.is_zero() || num.degree() < den.degree())
    return {Poly(p), num};

  std::vector<uint32_t> rem(num.coeffs());
  const std::vector<uint32_t>& d = den.coeffs();
  const int dd = den.degree();
  const uint32_t inv_lead = detail::mod_inverse(d.back(), p);
  std::vector<uint32_t> q(rem.size() - d.size() + 1, 0);

  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    uint32_t top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    uint32_t factor = static_cast<uint32_t>(static_cast<uint64_t>(top) * inv_lead % p);
    q[static_cast<std::size_t>(i - dd)] = factor;
    for (int j = 0; j <= dd; ++j) {
      std::size_t k = static_cast<std::size_t>(i - dd + j);
      uint64_t sub = static_cast<uint64_t>(factor) * d[static_cast<std::size_t>(j)] % p;
      rem[k] = static_cast<uint32_t>((rem[k] + p - sub) % p);
    }
  }
  return {Poly::from_coeffs(std::move(q), p), Poly::from_coeffs(std::move(rem), p)};
}

Poly gcd(Poly a, Poly b) {
  detail::require(a.modulus() == b.modulus(), "gcd: modulus mismatch");
  detail::require(!(a.is_zero() && b.is_zero()), "gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  // monic normalization
  return a.scaled(static_cast<long long>(a.leading().inverse().value()));
}

bool divides(const Poly& d, const Poly& a) {
  detail::require(!d.is_zero(), "divides: zero divisor");
  if (a.is_zero()) return true;
  return divmod(a, d).second.is_zero();
}

Poly exact_div(const Poly& num, const Poly& den) {
  auto [q, r] = divmod(num, den);
  detail::require(r.is_zero(), "exact_div: division is not exact");
  return q;
}

Poly frobenius_cube(const Poly& f) {
  detail::require(f.modulus() == 3, "frobenius_cube: requires characteristic 3");
  if (f.is_zero()) return f;
  std::vector<uint32_t> c(static_cast<std::size_t>(f.degree()) * 3 + 1, 0);
  for (int i = 0; i <= f.degree(); ++i) {
    uint32_t v = f.coeff(i);
    c[static_cast<std::size_t>(i) * 3] = v;  // v^3 == v in F_3
  }
  return Poly::from_coeffs(std::move(c), f.modulus());
}

Poly pow(const Poly& base, uint64_t e) {
  Poly acc = Poly::constant(1, base.modulus());
  Poly b = base;
  while (e) {
    if (e & 1) acc = acc * b;
    b = b * b;
    e >>= 1;
  }
  return acc;
}

Poly derivative(const Poly& f) {
  if (f.is_zero() || f.degree() == 0) return Poly(f.modulus());
  std::vector<uint32_t> c(static_cast<std::size_t>(f.degree()), 0);
  for (int i = 1; i <= f.degree(); ++i)
    c[static_cast<std::size_t>(i - 1)] =
        static_cast<uint32_t>(static_cast<uint64_t>(f.coeff(i)) * (static_cast<uint32_t>(i) % f.modulus()) % f.modulus());
  return Poly::from_coeffs(std::move(c), f.modulus());
}

namespace {

struct Scanner {
  std::string_view s;
  std::size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    skip_ws();
    return s[i++];
  }
};

long long scan_int(Scanner& sc) {
  sc.skip_ws();
  std::size_t start = sc.i;
  while (sc.i < sc.s.size() && std::isdigit(static_cast<unsigned char>(sc.s[sc.i]))) ++sc.i;
  if (sc.i == start) throw parse_error("expected integer", start);
  errno = 0;
  long long v = std::strtoll(std::string(sc.s.substr(start, sc.i - start)).c_str(), nullptr, 10);
  if (errno == ERANGE) throw parse_error("coefficient out of range", start);
  return v;
}

int scan_exponent(Scanner& sc) {
  if (sc.peek() == '^') {
    sc.take();
    long long e = scan_int(sc);
    if (e < 0 || e > (1 << 24)) throw parse_error("exponent out of range", sc.i);
    return static_cast<int>(e);
  }
  return 1;
}

}  // namespace

Poly parse_poly(std::string_view text, uint32_t p) {
  Scanner sc{text};
  Poly result(p);
  bool first = true;
  while (!sc.done()) {
    long long sign = 1;
    char c = sc.peek();
    if (c == '+' || c == '-') {
      sc.take();
      sign = c == '-' ? -1 : 1;
    } else if (!first) {
      throw parse_error("expected '+' or '-'", sc.i);
    }
    first = false;

    long long coeff = 1;
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      coeff = scan_int(sc);
      saw_coeff = true;
      if (sc.peek() == '*') sc.take();
    }
    if (sc.peek() == 'T') {
      sc.take();
      int exp = scan_exponent(sc);
      result = result + Poly::monomial(sign * coeff, exp, p);
    } else if (saw_coeff) {
      result = result + Poly::constant(sign * coeff, p);
    } else {
      throw parse_error("expected coefficient or 'T'", sc.i);
    }
  }
  if (first) throw parse_error("empty polynomial", 0);
  return result;
}

std::string format_poly(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    uint32_t v = f.coeff(i);
    if (v == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(v);
    } else {
      if (v != 1) {
        out += std::to_string(v);
        out += '*';
      }
      out += 'T';
      if (i != 1) {
        out += '^';
        out += std::to_string(i);
      }
    }
  }
  return out;
}

}  // namespace cflab
