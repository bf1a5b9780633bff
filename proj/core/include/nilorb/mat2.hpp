#ifndef NILORB_MAT2_HPP
#define NILORB_MAT2_HPP

#include <array>

#include "nilorb/poly.hpp"

namespace nilorb {

/// 2x2 matrix over S = F[X]/(X^n); the model of C(B) for B of Jordan
/// type (n,n).
template <class F>
class Mat2Trunc {
 public:
  using Entry = TruncPoly<F>;

  Mat2Trunc(Entry a, Entry b, Entry c, Entry d)
      : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    long n = e_[0].modulus_degree();
    for (const auto& x : e_) {
      if (x.modulus_degree() != n)
        throw std::invalid_argument("entries disagree on modulus degree");
    }
  }

  static Mat2Trunc zero(const F& field, long n) {
    Entry z = Entry::zero(field, n);
    return Mat2Trunc(z, z, z, z);
  }
  static Mat2Trunc identity(const F& field, long n) {
    Entry z = Entry::zero(field, n);
    Entry o = Entry::one(field, n);
    return Mat2Trunc(o, z, z, o);
  }

  const Entry& a() const { return e_[0]; }
  const Entry& b() const { return e_[1]; }
  const Entry& c() const { return e_[2]; }
  const Entry& d() const { return e_[3]; }

  const F& field() const { return e_[0].field(); }
  long modulus_degree() const { return e_[0].modulus_degree(); }

  Mat2Trunc operator+(const Mat2Trunc& o) const {
    return Mat2Trunc(e_[0] + o.e_[0], e_[1] + o.e_[1], e_[2] + o.e_[2],
                     e_[3] + o.e_[3]);
  }
  Mat2Trunc operator*(const Mat2Trunc& o) const {
    return Mat2Trunc(e_[0] * o.e_[0] + e_[1] * o.e_[2],
                     e_[0] * o.e_[1] + e_[1] * o.e_[3],
                     e_[2] * o.e_[0] + e_[3] * o.e_[2],
                     e_[2] * o.e_[1] + e_[3] * o.e_[3]);
  }

  bool operator==(const Mat2Trunc& o) const { return e_ == o.e_; }

  bool is_zero() const {
    return e_[0].is_zero() && e_[1].is_zero() && e_[2].is_zero() &&
           e_[3].is_zero();
  }

  /// Determinant of the constant-term 2x2 matrix is nonzero and the
  /// inverse exists in M2(S) exactly then.
  bool is_invertible() const {
    const F& k = field();
    auto det0 = k.sub(k.mul(e_[0].constant_term(), e_[3].constant_term()),
                      k.mul(e_[1].constant_term(), e_[2].constant_term()));
    return !k.is_zero(det0);
  }

  Mat2Trunc inverse() const {
    Entry det = e_[0] * e_[3] - e_[1] * e_[2];
    Entry dinv = det.inverse();  // throws when not invertible
    const F& k = field();
    long n = modulus_degree();
    auto negate = [&](const Entry& x) {
      return Entry::zero(k, n) - x;
    };
    return Mat2Trunc(e_[3] * dinv, negate(e_[1]) * dinv, negate(e_[2]) * dinv,
                     e_[0] * dinv);
  }

 private:
  std::array<Entry, 4> e_;
};

/// M^k in M2(S); M^0 is the identity.
template <class F>
Mat2Trunc<F> mat2_pow(const Mat2Trunc<F>& m, long k) {
  if (k < 0) throw std::invalid_argument("negative matrix power");
  Mat2Trunc<F> acc = Mat2Trunc<F>::identity(m.field(), m.modulus_degree());
  Mat2Trunc<F> base = m;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

}  // namespace nilorb

#endif
