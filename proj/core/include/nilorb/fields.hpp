#ifndef NILORB_FIELDS_HPP
#define NILORB_FIELDS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nilorb {

/// Prime field F_p with p a machine-word prime. Elements are canonical
/// residues in [0, p).
class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
  }

  std::uint64_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  bool is_zero(Elem a) const { return a == 0; }

  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<Elem>(r);
  }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(
        static_cast<unsigned __int128>(a) * b % p_);
  }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_p");
    // extended Euclid on (a, p)
    std::int64_t t = 0, newt = 1;
    std::uint64_t r = p_, newr = a;
    while (newr != 0) {
      std::uint64_t q = r / newr;
      std::int64_t tt = t - static_cast<std::int64_t>(q) * newt;
      t = newt;
      newt = tt;
      std::uint64_t rr = r - q * newr;
      r = newr;
      newr = rr;
    }
    return t < 0 ? static_cast<Elem>(t + static_cast<std::int64_t>(p_))
                 : static_cast<Elem>(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool eq(Elem a, Elem b) const { return a == b; }

  std::string to_string(Elem a) const { return std::to_string(a); }
  Elem parse(const std::string& s) const {
    return from_int(std::stoll(s));
  }

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t p_;
};

/// The rationals with arbitrary-precision normalized fractions.
class RationalField {
 public:
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return a == 0; }

  Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }

  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  std::string to_string(const Elem& a) const { return a.get_str(); }
  Elem parse(const std::string& s) const {
    Elem e;
    if (e.set_str(s, 10) != 0)
      throw std::invalid_argument("bad rational literal '" + s + "'");
    e.canonicalize();
    return e;
  }

  bool operator==(const RationalField&) const = default;

 private:
  static const Elem& inv_guard(const Elem& b) {
    if (b == 0) throw std::domain_error("division by zero");
    return b;
  }
};

/// Runtime field descriptor. ComplexFloat64 is admitted only by the
/// special-u demonstration path; every exact-arithmetic entry point
/// rejects it.
struct FieldSpec {
  enum class Kind { Rationals, Prime, ComplexFloat64 };
  Kind kind = Kind::Rationals;
  std::uint64_t p = 0;

  static FieldSpec rationals() { return {Kind::Rationals, 0}; }
  static FieldSpec prime(std::uint64_t p) {
    if (!PrimeField::is_prime(p)) throw std::invalid_argument("p is not prime");
    return {Kind::Prime, p};
  }
  static FieldSpec complex64() { return {Kind::ComplexFloat64, 0}; }

  /// "Q" | "Fp:<prime>" | "C64"
  static FieldSpec parse(const std::string& s) {
    if (s == "Q") return rationals();
    if (s == "C64") return complex64();
    if (s.rfind("Fp:", 0) == 0) {
      std::uint64_t p = std::stoull(s.substr(3));
      return prime(p);
    }
    throw std::invalid_argument("bad field spec '" + s + "' (want Q, Fp:<p>, C64)");
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::Rationals: return "Q";
      case Kind::Prime: return "Fp:" + std::to_string(p);
      case Kind::ComplexFloat64: return "C64";
    }
    return "?";
  }

  bool operator==(const FieldSpec&) const = default;
};

}  // namespace nilorb

#endif
