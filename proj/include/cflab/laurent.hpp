#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cflab/gfpoly.hpp"

namespace cflab {

class precision_error : public std::runtime_error {
public:
  explicit precision_error(const std::string& msg) : std::runtime_error(msg) {}
};

class solve_error : public std::runtime_error {
public:
  explicit solve_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Truncated formal power series in 1/T over F_p.
//
// A value is either exact (finite support, every coefficient known, all
// others zero) or approximate: a dense certified window of coefficients for
// the exponents [precision_floor, top_degree], with nothing claimed below
// the floor. Every operation propagates the worst-case floor implied by its
// operands; no coefficient is ever reported that is not certified.
class Laurent {
public:
  Laurent() : Laurent(kDefaultP, true) {}  // exact zero
  static Laurent exact_zero(uint32_t p = kDefaultP);
  // Zero on every exponent >= floor; unknown below.
  static Laurent certified_zero(int floor, uint32_t p = kDefaultP);
  static Laurent from_poly(const Poly& f);
  static Laurent monomial(long long c, int exp, uint32_t p = kDefaultP);

  uint32_t modulus() const { return p_; }
  bool exact() const { return exact_; }
  bool is_exact_zero() const { return exact_ && c_.empty(); }
  // True when no certified coefficient is nonzero.
  bool zero_window() const { return c_.empty(); }
  // Leading exponent; requires a nonzero certified coefficient.
  int top_degree() const {
    detail::require(!c_.empty(), "Laurent: top_degree of a zero window");
    return top_;
  }
  // Smallest certified exponent. Meaningless for exact values (everything
  // below the stored support is certified zero).
  int precision_floor() const {
    detail::require(!exact_, "Laurent: exact values have no finite floor");
    return floor_;
  }
  bool certified_at(int exp) const { return exact_ || exp >= floor_; }
  // Lowest stored exponent: the precision floor for approximate values, the
  // support floor for exact ones. Requires a nonzero window.
  int window_floor() const {
    detail::require(!c_.empty(), "Laurent: window_floor of a zero window");
    return top_ - static_cast<int>(c_.size()) + 1;
  }
  uint32_t coeff(int exp) const;
  // Count of certified coefficients from the leading term down.
  long long significant_length() const;

  Laurent truncated(int new_floor) const;
  // Forget exactness: an approximate value certified exactly down to floor.
  Laurent approximated(int floor) const;
  std::string to_string(std::size_t max_terms = 16) const;

  friend Laurent add(const Laurent& a, const Laurent& b);
  friend Laurent sub(const Laurent& a, const Laurent& b);
  friend Laurent neg(const Laurent& a);
  friend Laurent mul(const Laurent& a, const Laurent& b);
  friend Laurent invert(const Laurent& x);
  friend Laurent series_div(const Laurent& num, const Laurent& den, int floor);

private:
  Laurent(uint32_t p, bool exact) : exact_(exact), p_(p) {}
  void normalize();
  // Exponent bounding |value| from above: top for a nonzero window,
  // floor-1 for an approximate zero window.
  int top_bound() const { return c_.empty() ? floor_ - 1 : top_; }

  int top_ = 0;    // exponent of c_[0]
  int floor_ = 0;  // smallest certified exponent (approximate values)
  bool exact_;
  std::vector<uint32_t> c_;  // c_[i] is the coefficient of T^(top_ - i)
  uint32_t p_;
};

Laurent add(const Laurent& a, const Laurent& b);
Laurent sub(const Laurent& a, const Laurent& b);
Laurent neg(const Laurent& a);
Laurent mul(const Laurent& a, const Laurent& b);
// Reciprocal, preserving the significant length. The input must have a
// certified nonzero leading coefficient (or be an exact monomial).
Laurent invert(const Laurent& x);
// num/den certified down to `floor` at best; the honest floor implied by the
// operands wins if it is higher.
Laurent series_div(const Laurent& num, const Laurent& den, int floor);
// ([x], x - [x]): the polynomial collecting every term with exponent >= 0.
std::pair<Poly, Laurent> poly_part(const Laurent& x);

// Coefficients of c4*x^4 + c3*x^3 + c2*x^2 + c1*x + c0.
struct QuarticSpec {
  Poly c4, c3, c2, c1, c0;
  uint32_t modulus() const { return c4.modulus(); }
  std::vector<Poly> ascending() const { return {c0, c1, c2, c3, c4}; }
};

enum class Family { W1, W2, E1, E2, MR, Raw };

const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

// One equation from the catalog:
//   W1:  C x^4 - A x + 1 = 0
//   W2:  -x^4 - A x + C = 0
//   E1:  C^2 x^4 + 2C x^2 - A^2 x + 1 = 0
//   E2:  x^4 + C x^2 - A^2 x + C^2 = 0
//   MR:  x^4 + x^2 - T x + 1 = 0
// or a raw quartic. Family constraints are validated at construction.
class EquationSpec {
public:
  static EquationSpec make(Family family, const Poly& A, const Poly& C);
  static EquationSpec mills_robbins(uint32_t p = kDefaultP);
  static EquationSpec raw(QuarticSpec q);

  Family family() const { return family_; }
  const Poly& A() const { return A_; }
  const Poly& C() const { return C_; }
  uint32_t p() const { return p_; }
  bool c_divides_a() const { return c_divides_a_; }
  QuarticSpec quartic() const;
  const std::optional<QuarticSpec>& raw_quartic() const { return raw_; }

private:
  EquationSpec(Family f, Poly A, Poly C, uint32_t p)
      : family_(f), A_(std::move(A)), C_(std::move(C)), p_(p) {}
  Family family_;
  Poly A_, C_;
  std::optional<QuarticSpec> raw_;
  uint32_t p_;
  bool c_divides_a_ = false;
};

// Horner evaluation with exact precision propagation.
Laurent eval_quartic(const QuarticSpec& q, const Laurent& x);
Laurent eval_poly_series(const std::vector<Poly>& ascending, const Laurent& x);

// The unique root with |root| < 1, certified down to T^(-precision).
// Newton iteration from a family-specific seed; the returned value carries
// an a-posteriori residual certificate (eval_quartic on it vanishes on the
// certified window with the margin required by the ultrametric Newton bound).
Laurent solve_root(const EquationSpec& eq, int precision);

struct CertifiedOverlap {
  int floor;  // deepest exponent certified on both sides
  bool equal;
  std::optional<int> first_mismatch_exp;
};
// Compare two series on the region where both are certified.
CertifiedOverlap compare_certified(const Laurent& a, const Laurent& b);

// Valuation (negated top degree) of a - b; precision_error if the certified
// windows cannot separate the two.
long long valuation_of_difference(const Laurent& a, const Laurent& b);

}  // namespace cflab
