#include "tdpair/field.hpp"

#include <cctype>

namespace tdpair {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

// Extended Euclid on (a, p); a is a nonzero residue and p prime.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  __int128 old_r = static_cast<__int128>(a), r = static_cast<__int128>(p);
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    const __int128 tmp_r = old_r - q * r;
    old_r = r;
    r = tmp_r;
    const __int128 tmp_s = old_s - q * s;
    old_s = s;
    s = tmp_s;
  }
  __int128 inv = old_s % static_cast<__int128>(p);
  if (inv < 0) inv += p;
  return static_cast<std::uint64_t>(inv);
}

std::uint64_t reduce(const mpz_class& value, std::uint64_t p) {
  mpz_class r = value % mpz_class(std::to_string(p));
  if (r < 0) r += mpz_class(std::to_string(p));
  return std::stoull(r.get_str());
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) {
    throw FieldError("field mismatch: " + a.field().name() + " vs " + b.field().name());
  }
}

bool parse_integer(std::string_view text, mpz_class& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (n % d == 0) return n == d;
  }
  mpz_class z(std::to_string(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

FieldDescriptor FieldDescriptor::prime(std::uint64_t p) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (p >= (1ULL << 62)) throw FieldError("prime " + std::to_string(p) + " is too large");
  return FieldDescriptor(FieldKind::PrimeField, p);
}

std::string FieldDescriptor::name() const {
  return is_rationals() ? std::string("Q") : "GF(" + std::to_string(characteristic_) + ")";
}

FieldElement::FieldElement(const FieldDescriptor& fd, long value)
    : FieldElement(fd, mpz_class(value)) {}

FieldElement::FieldElement(const FieldDescriptor& fd, const mpz_class& value) : fd_(fd) {
  if (fd.is_rationals()) {
    value_ = mpq_class(value);
  } else {
    value_ = reduce(value, fd.characteristic());
  }
}

FieldElement::FieldElement(const mpq_class& value) : fd_(FieldDescriptor::rationals()) {
  mpq_class q = value;
  q.canonicalize();
  value_ = std::move(q);
}

FieldElement::FieldElement(const FieldDescriptor& fd, std::uint64_t residue, int)
    : fd_(fd), value_(residue) {}

bool FieldElement::is_zero() const {
  if (fd_.is_rationals()) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool FieldElement::is_one() const {
  if (fd_.is_rationals()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

const mpq_class& FieldElement::rational() const {
  if (!fd_.is_rationals()) throw FieldError("element of " + fd_.name() + " is not rational");
  return std::get<mpq_class>(value_);
}

std::uint64_t FieldElement::residue() const {
  if (!fd_.is_finite()) throw FieldError("element of Q has no residue");
  return std::get<std::uint64_t>(value_);
}

FieldElement FieldElement::operator-() const {
  if (fd_.is_rationals()) return FieldElement(mpq_class(-std::get<mpq_class>(value_)));
  const std::uint64_t r = std::get<std::uint64_t>(value_);
  return FieldElement(fd_, r == 0 ? 0 : fd_.characteristic() - r, 0);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  if (fd_.is_rationals()) return FieldElement(mpq_class(1 / std::get<mpq_class>(value_)));
  return FieldElement(fd_, inverse_mod(std::get<std::uint64_t>(value_), fd_.characteristic()), 0);
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  if (a.fd_.is_rationals()) {
    return FieldElement(mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
  }
  const std::uint64_t p = a.fd_.characteristic();
  const std::uint64_t s = std::get<std::uint64_t>(a.value_) + std::get<std::uint64_t>(b.value_);
  return FieldElement(a.fd_, s >= p ? s - p : s, 0);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  if (a.fd_.is_rationals()) {
    return FieldElement(mpq_class(std::get<mpq_class>(a.value_) - std::get<mpq_class>(b.value_)));
  }
  const std::uint64_t p = a.fd_.characteristic();
  const std::uint64_t x = std::get<std::uint64_t>(a.value_);
  const std::uint64_t y = std::get<std::uint64_t>(b.value_);
  return FieldElement(a.fd_, x >= y ? x - y : x + (p - y), 0);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  if (a.fd_.is_rationals()) {
    return FieldElement(mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
  }
  return FieldElement(a.fd_,
                      mul_mod(std::get<std::uint64_t>(a.value_), std::get<std::uint64_t>(b.value_),
                              a.fd_.characteristic()),
                      0);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return a * b.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (!(a.fd_ == b.fd_)) return false;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  if (a.fd_.is_rationals()) {
    const int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  return std::get<std::uint64_t>(a.value_) <=> std::get<std::uint64_t>(b.value_);
}

std::string FieldElement::to_string() const {
  if (fd_.is_rationals()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw FieldError("unknown arithmetic operation");
}

FieldElement parse_element(std::string_view text, const FieldDescriptor& fd) {
  const auto slash = text.find('/');
  mpz_class num, den(1);
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) throw FieldError("malformed field element '" + std::string(text) + "'");
  } else {
    const auto den_text = text.substr(slash + 1);
    if (!parse_integer(text.substr(0, slash), num) || !parse_integer(den_text, den)) {
      throw FieldError("malformed field element '" + std::string(text) + "'");
    }
    if (den == 0) throw FieldError("zero denominator in '" + std::string(text) + "'");
  }
  if (fd.is_rationals()) {
    mpq_class q(num, den);
    q.canonicalize();
    return FieldElement(q);
  }
  const FieldElement d(fd, den);
  if (d.is_zero()) {
    throw FieldError("denominator of '" + std::string(text) + "' vanishes in " + fd.name());
  }
  return FieldElement(fd, num) / d;
}

}  // namespace tdpair
