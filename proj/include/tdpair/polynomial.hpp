#pragma once

#include <vector>

#include "tdpair/field.hpp"

namespace tdpair {

/// Dense univariate polynomial, coefficients stored lowest degree first and
/// kept trimmed (no trailing zeros). The zero polynomial has no coefficients.
class Polynomial {
 public:
  explicit Polynomial(FieldDescriptor fd) : fd_(fd) {}
  Polynomial(FieldDescriptor fd, std::vector<FieldElement> coeffs);

  static Polynomial constant(const FieldElement& c);
  /// x - root
  static Polynomial linear_factor(const FieldElement& root);

  const FieldDescriptor& field() const { return fd_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<FieldElement>& coefficients() const { return coeffs_; }
  FieldElement coefficient(int k) const;
  FieldElement leading() const;

  FieldElement operator()(const FieldElement& x) const;

  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const FieldElement& c, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  struct DivMod;
  DivMod divmod(const Polynomial& divisor) const;

 private:
  void trim();

  FieldDescriptor fd_;
  std::vector<FieldElement> coeffs_;
};

struct Polynomial::DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

/// Distinct roots of p lying in its field, sorted by the element order.
/// Over GF(p) every residue is tried; over Q the square-free part is mapped to
/// a monic integer polynomial whose integer roots are isolated with a Sturm
/// sequence. Throws FieldError for the zero polynomial.
std::vector<FieldElement> roots_in_field(const Polynomial& p);

}  // namespace tdpair
