#ifndef NILORB_DENSE_HPP
#define NILORB_DENSE_HPP

#include <vector>

#include "nilorb/mat2.hpp"

namespace nilorb {

/// Dense square matrix over F, row major.
template <class F>
class DenseMat {
 public:
  using Elem = typename F::Elem;

  DenseMat(F field, long dim)
      : field_(std::move(field)),
        dim_(dim),
        data_(static_cast<std::size_t>(dim * dim), field_.zero()) {}

  static DenseMat identity(const F& field, long dim) {
    DenseMat m(field, dim);
    for (long i = 0; i < dim; ++i) m.at(i, i) = field.one();
    return m;
  }

  long dim() const { return dim_; }
  const F& field() const { return field_; }

  Elem& at(long i, long j) {
    return data_[static_cast<std::size_t>(i * dim_ + j)];
  }
  const Elem& at(long i, long j) const {
    return data_[static_cast<std::size_t>(i * dim_ + j)];
  }

  DenseMat operator*(const DenseMat& o) const {
    DenseMat out(field_, dim_);
    for (long i = 0; i < dim_; ++i)
      for (long k = 0; k < dim_; ++k) {
        if (field_.is_zero(at(i, k))) continue;
        for (long j = 0; j < dim_; ++j)
          out.at(i, j) =
              field_.add(out.at(i, j), field_.mul(at(i, k), o.at(k, j)));
      }
    return out;
  }

  DenseMat operator+(const DenseMat& o) const {
    DenseMat out(field_, dim_);
    for (std::size_t i = 0; i < data_.size(); ++i)
      out.data_[i] = field_.add(data_[i], o.data_[i]);
    return out;
  }

  bool operator==(const DenseMat& o) const {
    return dim_ == o.dim_ && data_ == o.data_;
  }

 private:
  F field_;
  long dim_;
  std::vector<Elem> data_;
};

/// The 2n x 2n matrix [[a(J_n), b(J_n)], [c(J_n), d(J_n)]] where f(J_n)
/// is the upper-triangular Toeplitz matrix carrying f's coefficients on
/// the superdiagonals.
template <class F>
DenseMat<F> embed_dense(const Mat2Trunc<F>& m) {
  long n = m.modulus_degree();
  DenseMat<F> out(m.field(), 2 * n);
  const TruncPoly<F>* entries[2][2] = {{&m.a(), &m.b()}, {&m.c(), &m.d()}};
  for (long bi = 0; bi < 2; ++bi)
    for (long bj = 0; bj < 2; ++bj) {
      const TruncPoly<F>& f = *entries[bi][bj];
      for (long i = 0; i < n; ++i)
        for (long j = i; j < n; ++j)
          out.at(bi * n + i, bj * n + j) = f.coeff(j - i);
    }
  return out;
}

/// Exact rank by Gaussian elimination over the coefficient field.
template <class F>
long rank_dense(DenseMat<F> m) {
  const F& k = m.field();
  long dim = m.dim();
  long rank = 0;
  for (long col = 0; col < dim && rank < dim; ++col) {
    long pivot = -1;
    for (long row = rank; row < dim; ++row) {
      if (!k.is_zero(m.at(row, col))) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (long j = col; j < dim; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    auto pinv = k.inv(m.at(rank, col));
    for (long row = rank + 1; row < dim; ++row) {
      if (k.is_zero(m.at(row, col))) continue;
      auto factor = k.mul(m.at(row, col), pinv);
      for (long j = col; j < dim; ++j)
        m.at(row, j) = k.sub(m.at(row, j), k.mul(factor, m.at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

}  // namespace nilorb

#endif
