#ifndef NILORB_POLY_HPP
#define NILORB_POLY_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "nilorb/fields.hpp"

namespace nilorb {

/// Dense univariate polynomial over F, coefficients low degree first,
/// trailing zeros stripped.
template <class F>
class Poly {
 public:
  using Elem = typename F::Elem;

  explicit Poly(F field) : field_(std::move(field)) {}
  Poly(F field, std::vector<Elem> coeffs)
      : field_(std::move(field)), c_(std::move(coeffs)) {
    strip();
  }

  static Poly zero(const F& field) { return Poly(field); }
  static Poly constant(const F& field, Elem v) {
    return Poly(field, {std::move(v)});
  }
  /// X^k
  static Poly monomial(const F& field, long k, Elem v) {
    std::vector<Elem> c(static_cast<std::size_t>(k), field.zero());
    c.push_back(std::move(v));
    return Poly(field, std::move(c));
  }

  const F& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }

  Elem coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return field_.zero();
    return c_[static_cast<std::size_t>(i)];
  }

  /// Largest v with X^v dividing the polynomial; nullopt for 0 ("infinite").
  std::optional<long> valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!field_.is_zero(c_[i])) return static_cast<long>(i);
    return std::nullopt;
  }

  Poly operator+(const Poly& o) const {
    std::vector<Elem> out(std::max(c_.size(), o.c_.size()), field_.zero());
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = field_.add(coeff(static_cast<long>(i)),
                          o.coeff(static_cast<long>(i)));
    return Poly(field_, std::move(out));
  }

  Poly operator-(const Poly& o) const {
    std::vector<Elem> out(std::max(c_.size(), o.c_.size()), field_.zero());
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = field_.sub(coeff(static_cast<long>(i)),
                          o.coeff(static_cast<long>(i)));
    return Poly(field_, std::move(out));
  }

  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return zero(field_);
    std::vector<Elem> out(c_.size() + o.c_.size() - 1, field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j)
        out[i + j] = field_.add(out[i + j], field_.mul(c_[i], o.c_[j]));
    return Poly(field_, std::move(out));
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }

 private:
  void strip() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  F field_;
  std::vector<Elem> c_;
};

/// Element of S = F[X]/(X^n): a polynomial truncated at degree n.
/// Canonical form strips trailing zeros so equality is structural.
template <class F>
class TruncPoly {
 public:
  using Elem = typename F::Elem;

  TruncPoly(F field, long n) : field_(std::move(field)), n_(check_n(n)) {}
  TruncPoly(F field, long n, std::vector<Elem> coeffs)
      : field_(std::move(field)), n_(check_n(n)), c_(std::move(coeffs)) {
    if (static_cast<long>(c_.size()) > n_)
      throw std::invalid_argument("coefficient sequence longer than modulus degree");
    strip();
  }

  static TruncPoly zero(const F& field, long n) { return TruncPoly(field, n); }
  static TruncPoly one(const F& field, long n) {
    return TruncPoly(field, n, {field.one()});
  }
  static TruncPoly monomial(const F& field, long n, long k, Elem v) {
    if (k >= n) return zero(field, n);
    std::vector<Elem> c(static_cast<std::size_t>(k), field.zero());
    c.push_back(std::move(v));
    return TruncPoly(field, n, std::move(c));
  }
  /// Reduce an untruncated polynomial mod X^n.
  static TruncPoly reduce(const Poly<F>& p, long n) {
    std::vector<Elem> c = p.coeffs();
    if (static_cast<long>(c.size()) > n) c.resize(static_cast<std::size_t>(n));
    return TruncPoly(p.field(), n, std::move(c));
  }

  const F& field() const { return field_; }
  long modulus_degree() const { return n_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  Elem coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return field_.zero();
    return c_[static_cast<std::size_t>(i)];
  }
  Elem constant_term() const { return coeff(0); }

  Poly<F> lift() const { return Poly<F>(field_, c_); }

  std::optional<long> valuation() const { return lift().valuation(); }

  TruncPoly operator+(const TruncPoly& o) const {
    require_same(o);
    return reduce(lift() + o.lift(), n_);
  }
  TruncPoly operator-(const TruncPoly& o) const {
    require_same(o);
    return reduce(lift() - o.lift(), n_);
  }
  TruncPoly operator*(const TruncPoly& o) const {
    require_same(o);
    return reduce(lift() * o.lift(), n_);
  }

  bool operator==(const TruncPoly& o) const {
    return n_ == o.n_ && c_ == o.c_;
  }

  bool is_invertible() const { return !field_.is_zero(constant_term()); }

  /// Multiplicative inverse in S, by back-substitution degree by degree.
  /// Throws std::domain_error when the constant term vanishes.
  TruncPoly inverse() const {
    if (!is_invertible())
      throw std::domain_error("not invertible in F[X]/(X^n): zero constant term");
    std::vector<Elem> inv(static_cast<std::size_t>(n_), field_.zero());
    Elem c0inv = field_.inv(constant_term());
    inv[0] = c0inv;
    for (long k = 1; k < n_; ++k) {
      // coefficient of X^k in f * inv must be 0
      Elem acc = field_.zero();
      for (long i = 1; i <= k; ++i)
        acc = field_.add(acc, field_.mul(coeff(i), inv[static_cast<std::size_t>(k - i)]));
      inv[static_cast<std::size_t>(k)] = field_.neg(field_.mul(c0inv, acc));
    }
    return TruncPoly(field_, n_, std::move(inv));
  }

 private:
  static long check_n(long n) {
    if (n < 1) throw std::invalid_argument("modulus degree must be positive");
    return n;
  }
  void require_same(const TruncPoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("mismatched modulus degrees");
  }
  void strip() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  F field_;
  long n_;
  std::vector<Elem> c_;
};

}  // namespace nilorb

#endif
