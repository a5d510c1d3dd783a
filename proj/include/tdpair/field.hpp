#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace tdpair {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FieldKind { Rationals, PrimeField };

/// Identifies the exact field all scalars of a computation live in:
/// the rationals (characteristic 0) or GF(p) for a prime p.
class FieldDescriptor {
 public:
  static FieldDescriptor rationals() { return FieldDescriptor(FieldKind::Rationals, 0); }
  /// Throws FieldError unless p is a prime below 2^62.
  static FieldDescriptor prime(std::uint64_t p);

  FieldKind kind() const { return kind_; }
  std::uint64_t characteristic() const { return characteristic_; }
  bool is_rationals() const { return kind_ == FieldKind::Rationals; }
  bool is_finite() const { return kind_ == FieldKind::PrimeField; }

  std::string name() const;

  bool operator==(const FieldDescriptor&) const = default;

 private:
  FieldDescriptor(FieldKind kind, std::uint64_t p) : kind_(kind), characteristic_(p) {}

  FieldKind kind_;
  std::uint64_t characteristic_;
};

bool is_prime(std::uint64_t n);

/// An exact scalar. Rationals are kept as reduced fractions with a positive
/// denominator, residues in [0, p). Elements are immutable values.
class FieldElement {
 public:
  FieldElement(const FieldDescriptor& fd, long value);
  FieldElement(const FieldDescriptor& fd, const mpz_class& value);
  /// Rational only.
  explicit FieldElement(const mpq_class& value);

  static FieldElement zero(const FieldDescriptor& fd) { return FieldElement(fd, 0L); }
  static FieldElement one(const FieldDescriptor& fd) { return FieldElement(fd, 1L); }

  const FieldDescriptor& field() const { return fd_; }
  bool is_zero() const;
  bool is_one() const;

  /// Underlying values; throws FieldError when the kind does not match.
  const mpq_class& rational() const;
  std::uint64_t residue() const;

  FieldElement operator-() const;
  FieldElement inverse() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// A total order used only for deterministic sorting (numeric order on Q,
  /// residue order on GF(p)). It is not a field order.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

  /// Canonical text: "a" or "a/b" over Q, "r" over GF(p).
  std::string to_string() const;

 private:
  FieldElement(const FieldDescriptor& fd, std::uint64_t residue, int);

  FieldDescriptor fd_;
  std::variant<mpq_class, std::uint64_t> value_;
};

enum class ArithOp { Add, Sub, Mul, Div };

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op);

/// Parses "a" or "a/b" (decimal integers, optional sign). In GF(p) "a/b" is a*b^-1.
FieldElement parse_element(std::string_view text, const FieldDescriptor& fd);

}  // namespace tdpair
