#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cflab {

inline constexpr uint32_t kDefaultP = 3;

// Degree of the zero polynomial. Distinguished sentinel, never fed into
// degree arithmetic; comparisons special-case it.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

namespace detail {
inline void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}
uint32_t mod_pow(uint32_t base, uint64_t e, uint32_t p);
uint32_t mod_inverse(uint32_t v, uint32_t p);
}  // namespace detail

// Residue in [0, p) for a small prime modulus p.
class Fp {
public:
  Fp(long long value, uint32_t p) : p_(p) {
    detail::require(p >= 2, "Fp: modulus must be >= 2");
    long long r = value % static_cast<long long>(p);
    if (r < 0) r += p;
    v_ = static_cast<uint32_t>(r);
  }

  uint32_t value() const { return v_; }
  uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(const Fp& o) const { return with(v_ + o.matched(p_)); }
  Fp operator-(const Fp& o) const { return with(v_ + p_ - o.matched(p_)); }
  Fp operator*(const Fp& o) const {
    return with(static_cast<uint64_t>(v_) * o.matched(p_) % p_);
  }
  Fp operator-() const { return with(v_ == 0 ? 0 : p_ - v_); }
  Fp inverse() const {
    detail::require(v_ != 0, "Fp: inverse of zero");
    return with(detail::mod_inverse(v_, p_));
  }
  bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }

private:
  Fp with(uint64_t raw) const { return Fp(static_cast<long long>(raw % p_), p_); }
  uint32_t matched(uint32_t p) const {
    detail::require(p_ == p, "Fp: modulus mismatch");
    return v_;
  }
  uint32_t v_;
  uint32_t p_;
};

// Dense univariate polynomial over F_p, coefficients by ascending power of T.
// Normalized: the vector carries no trailing zero (leading-coefficient)
// entries, so the zero polynomial is the empty vector.
class Poly {
public:
  explicit Poly(uint32_t p = kDefaultP) : p_(p) { check_p(); }
  Poly(std::initializer_list<long long> ascending, uint32_t p = kDefaultP) : p_(p) {
    check_p();
    c_.reserve(ascending.size());
    for (long long v : ascending) c_.push_back(reduce(v));
    normalize();
  }

  static Poly from_coeffs(std::vector<uint32_t> ascending, uint32_t p);
  static Poly constant(long long c, uint32_t p = kDefaultP);
  static Poly monomial(long long c, int exp, uint32_t p = kDefaultP);
  // The indeterminate T.
  static Poly t(uint32_t p = kDefaultP) { return monomial(1, 1, p); }

  uint32_t modulus() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  uint32_t coeff(int i) const {
    return (i < 0 || i >= static_cast<int>(c_.size())) ? 0u : c_[static_cast<std::size_t>(i)];
  }
  Fp leading() const {
    detail::require(!c_.empty(), "Poly: leading coefficient of zero polynomial");
    return Fp(c_.back(), p_);
  }
  const std::vector<uint32_t>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(long long k) const;  // multiply by the scalar k mod p
  bool operator==(const Poly& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

private:
  void check_p() const { detail::require(p_ >= 2, "Poly: modulus must be >= 2"); }
  uint32_t reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
  }
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  void match(const Poly& o) const { detail::require(p_ == o.p_, "Poly: modulus mismatch"); }

  std::vector<uint32_t> c_;
  uint32_t p_;
};

// quotient/remainder with deg r < deg den; throws on zero divisor.
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
// Monic gcd; gcd(0, 0) is an error.
Poly gcd(Poly a, Poly b);
// Exact divisibility, decided by the remainder.
bool divides(const Poly& d, const Poly& a);
// num / den asserting a zero remainder.
Poly exact_div(const Poly& num, const Poly& den);
// f(T)^3 by coefficientwise cube placement; a ring endomorphism in char 3,
// so this requires p == 3.
Poly frobenius_cube(const Poly& f);
Poly pow(const Poly& base, uint64_t e);
Poly derivative(const Poly& f);

// Text grammar (whitespace ignored):
//   poly  := ['+'|'-'] term (('+'|'-') term)*
//   term  := coeff ['*'] 'T' ['^' uint] | coeff | 'T' ['^' uint]
// Canonical output is descending powers with coefficients reduced to [0, p),
// e.g. "2*T^4+T". parse(format(x)) == x.
Poly parse_poly(std::string_view text, uint32_t p = kDefaultP);
std::string format_poly(const Poly& f);

}  // namespace cflab
