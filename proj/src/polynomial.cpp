#include "tdpair/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace tdpair {

Polynomial::Polynomial(FieldDescriptor fd, std::vector<FieldElement> coeffs)
    : fd_(fd), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!(c.field() == fd_)) throw FieldError("polynomial coefficient from a different field");
  }
  trim();
}

Polynomial Polynomial::constant(const FieldElement& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::linear_factor(const FieldElement& root) {
  return Polynomial(root.field(), {-root, FieldElement::one(root.field())});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return FieldElement::zero(fd_);
  return coeffs_[static_cast<std::size_t>(k)];
}

FieldElement Polynomial::leading() const {
  if (is_zero()) return FieldElement::zero(fd_);
  return coeffs_.back();
}

FieldElement Polynomial::operator()(const FieldElement& x) const {
  FieldElement acc = FieldElement::zero(fd_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<FieldElement> out;
  for (int k = 1; k <= degree(); ++k) out.push_back(FieldElement(fd_, static_cast<long>(k)) * coeffs_[k]);
  return Polynomial(fd_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return leading().inverse() * *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<FieldElement> out;
  const int n = std::max(a.degree(), b.degree());
  for (int k = 0; k <= n; ++k) out.push_back(a.coefficient(k) + b.coefficient(k));
  return Polynomial(a.fd_, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<FieldElement> out;
  const int n = std::max(a.degree(), b.degree());
  for (int k = 0; k <= n; ++k) out.push_back(a.coefficient(k) - b.coefficient(k));
  return Polynomial(a.fd_, std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.fd_);
  std::vector<FieldElement> out(static_cast<std::size_t>(a.degree() + b.degree() + 1),
                                FieldElement::zero(a.fd_));
  for (int i = 0; i <= a.degree(); ++i) {
    for (int j = 0; j <= b.degree(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(a.fd_, std::move(out));
}

Polynomial operator*(const FieldElement& c, const Polynomial& a) {
  std::vector<FieldElement> out;
  for (const auto& x : a.coeffs_) out.push_back(c * x);
  return Polynomial(a.fd_, std::move(out));
}

Polynomial::DivMod Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw FieldError("polynomial division by zero");
  std::vector<FieldElement> rem = coeffs_;
  const int dd = divisor.degree();
  const int qdeg = degree() - dd;
  std::vector<FieldElement> quot(static_cast<std::size_t>(std::max(qdeg + 1, 0)), FieldElement::zero(fd_));
  const FieldElement lead_inv = divisor.leading().inverse();
  for (int k = qdeg; k >= 0; --k) {
    const FieldElement q = rem[k + dd] * lead_inv;
    quot[k] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) rem[k + j] -= q * divisor.coeffs_[j];
  }
  return {Polynomial(fd_, std::move(quot)), Polynomial(fd_, std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

// Integer polynomial, lowest degree first.
using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

mpq_class eval(const QPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly remainder(QPoly a, const QPoly& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const mpq_class q = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= q * b[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

std::vector<QPoly> sturm_sequence(const QPoly& p) {
  std::vector<QPoly> seq{p};
  QPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(mpq_class(static_cast<long>(k)) * p[k]);
  trim(d);
  if (d.empty()) return seq;
  seq.push_back(d);
  while (true) {
    QPoly r = remainder(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  return seq;
}

int sign_changes(const std::vector<QPoly>& seq, const mpq_class& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = sgn(eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Integer roots of a square-free monic integer polynomial.
std::vector<mpz_class> integer_roots(const ZPoly& g) {
  QPoly q(g.begin(), g.end());
  const auto seq = sturm_sequence(q);
  mpz_class bound = 0;
  for (const auto& c : g) bound = std::max(bound, mpz_class(abs(c)));
  bound += 1;
  std::vector<mpz_class> out;
  // Endpoints are half-integers: a monic integer polynomial has no such roots.
  std::function<void(const mpz_class&, const mpz_class&)> isolate =
      [&](const mpz_class& lo, const mpz_class& hi) {
        // Interval (lo - 1/2, hi + 1/2) holds the integers lo..hi.
        const mpq_class a = mpq_class(lo) - mpq_class(1, 2);
        const mpq_class b = mpq_class(hi) + mpq_class(1, 2);
        if (sign_changes(seq, a) - sign_changes(seq, b) == 0) return;
        if (lo == hi) {
          if (sgn(eval(q, mpq_class(lo))) == 0) out.push_back(lo);
          return;
        }
        mpz_class mid = lo + (hi - lo) / 2;
        isolate(lo, mid);
        isolate(mid + 1, hi);
      };
  isolate(-bound, bound);
  return out;
}

std::vector<FieldElement> rational_roots(const Polynomial& p) {
  const Polynomial sf = p.degree() > 0 ? p.divmod(gcd(p, p.derivative())).quotient.monic() : p.monic();
  const int n = sf.degree();
  if (n <= 0) return {};
  mpz_class lcm_den = 1;
  for (const auto& c : sf.coefficients()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.rational().get_den_mpz_t());
  }
  // h = lcm * sf has integer coefficients and leading coefficient lcm.
  ZPoly g(static_cast<std::size_t>(n + 1));
  mpz_class power = 1;  // lcm^(n-1-k), built from the top down
  for (int k = n - 1; k >= 0; --k) {
    const mpq_class hk = sf.coefficients()[k].rational() * lcm_den;
    g[k] = hk.get_num() * power;
    power *= lcm_den;
  }
  g[n] = 1;
  std::vector<FieldElement> out;
  for (const auto& y : integer_roots(g)) out.emplace_back(mpq_class(y, lcm_den));
  return out;
}

}  // namespace

std::vector<FieldElement> roots_in_field(const Polynomial& p) {
  if (p.is_zero()) throw FieldError("the zero polynomial has every element as a root");
  std::vector<FieldElement> out;
  if (p.field().is_rationals()) {
    out = rational_roots(p);
  } else {
    const std::uint64_t q = p.field().characteristic();
    for (std::uint64_t r = 0; r < q; ++r) {
      const FieldElement x(p.field(), static_cast<long>(r));
      if (p(x).is_zero()) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tdpair
