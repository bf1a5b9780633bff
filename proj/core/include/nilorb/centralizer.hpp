#ifndef NILORB_CENTRALIZER_HPP
#define NILORB_CENTRALIZER_HPP

#include <vector>

#include "nilorb/dense.hpp"
#include "nilorb/partition.hpp"

namespace nilorb {

/// Element of C(B) for B of Jordan type (n,n), modeled as a 2x2 matrix
/// [[a(X), b(X)], [c(X), d(X)]] over S = F[X]/(X^n).
template <class F>
class CentralizerElement {
 public:
  CentralizerElement(long n, Mat2Trunc<F> mat) : mat_(std::move(mat)) {
    if (mat_.modulus_degree() != n)
      throw std::invalid_argument("matrix modulus degree does not match n");
  }

  long n() const { return mat_.modulus_degree(); }
  const Mat2Trunc<F>& mat() const { return mat_; }
  const F& field() const { return mat_.field(); }

  bool operator==(const CentralizerElement& o) const { return mat_ == o.mat_; }

 private:
  Mat2Trunc<F> mat_;
};

template <class F>
CentralizerElement<F> make_element(const F& field, long n,
                                   const std::vector<typename F::Elem>& a,
                                   const std::vector<typename F::Elem>& b,
                                   const std::vector<typename F::Elem>& c,
                                   const std::vector<typename F::Elem>& d) {
  for (const auto* seq : {&a, &b, &c, &d}) {
    if (static_cast<long>(seq->size()) > n)
      throw std::invalid_argument("coefficient sequence longer than n");
  }
  return CentralizerElement<F>(
      n, Mat2Trunc<F>(TruncPoly<F>(field, n, a), TruncPoly<F>(field, n, b),
                      TruncPoly<F>(field, n, c), TruncPoly<F>(field, n, d)));
}

/// B itself: diag(X, X) in the polynomial model.
template <class F>
CentralizerElement<F> jordan_pair_b(const F& field, long n) {
  auto x = TruncPoly<F>::monomial(field, n, 1, field.one());
  auto z = TruncPoly<F>::zero(field, n);
  return CentralizerElement<F>(n, Mat2Trunc<F>(x, z, z, x));
}

/// A is nilpotent iff its constant-term block A_0 is, i.e. tr A_0 = 0
/// and det A_0 = 0.
template <class F>
bool is_nilpotent(const CentralizerElement<F>& e) {
  const F& k = e.field();
  auto a0 = e.mat().a().constant_term();
  auto b0 = e.mat().b().constant_term();
  auto c0 = e.mat().c().constant_term();
  auto d0 = e.mat().d().constant_term();
  return k.is_zero(k.add(a0, d0)) &&
         k.is_zero(k.sub(k.mul(a0, d0), k.mul(b0, c0)));
}

/// A = B^z * C with z maximal and C nilpotent.
template <class F>
struct BzDecomposition {
  long z;
  CentralizerElement<F> cofactor;
};

/// Decompose a non-zero nilpotent element as B^z * C, z maximal with C
/// nilpotent. z' is the smallest block index with A_{z'} != 0; when that
/// block is not nilpotent the maximal shift is z'-1.
template <class F>
BzDecomposition<F> bz_decompose(const CentralizerElement<F>& e) {
  if (e.mat().is_zero()) throw std::invalid_argument("bz_decompose of zero element");
  if (!is_nilpotent(e)) throw std::invalid_argument("bz_decompose of non-nilpotent element");
  const F& k = e.field();
  long n = e.n();
  long zprime = n;
  for (const TruncPoly<F>* f : {&e.mat().a(), &e.mat().b(), &e.mat().c(), &e.mat().d()}) {
    auto v = f->valuation();
    if (v && *v < zprime) zprime = *v;
  }
  auto block = [&](long i) {
    return std::array<typename F::Elem, 4>{
        e.mat().a().coeff(i), e.mat().b().coeff(i), e.mat().c().coeff(i),
        e.mat().d().coeff(i)};
  };
  auto nilpotent2 = [&](const std::array<typename F::Elem, 4>& m) {
    return k.is_zero(k.add(m[0], m[3])) &&
           k.is_zero(k.sub(k.mul(m[0], m[3]), k.mul(m[1], m[2])));
  };
  long z = nilpotent2(block(zprime)) ? zprime : zprime - 1;
  auto shift = [&](const TruncPoly<F>& f) {
    std::vector<typename F::Elem> c;
    for (long i = z; i < n; ++i) c.push_back(f.coeff(i));
    return TruncPoly<F>(k, n, std::move(c));
  };
  Mat2Trunc<F> cof(shift(e.mat().a()), shift(e.mat().b()), shift(e.mat().c()),
                   shift(e.mat().d()));
  return {z, CentralizerElement<F>(n, std::move(cof))};
}

/// Rank profile rank(A^0), rank(A^1), ... down to 0, computed exactly.
/// Powers stay in M2(S); only the rank step embeds into M_{2n}(F).
template <class F>
std::vector<long> rank_profile(const CentralizerElement<F>& e) {
  if (!is_nilpotent(e))
    throw std::invalid_argument("rank profile of non-nilpotent element");
  long n = e.n();
  std::vector<long> ranks{2 * n};
  Mat2Trunc<F> power = e.mat();
  for (long k = 1; k <= 2 * n + 1; ++k) {
    long r = power.is_zero() ? 0 : rank_dense(embed_dense(power));
    ranks.push_back(r);
    if (r == 0) return ranks;
    power = power * e.mat();
  }
  throw std::logic_error("rank profile did not reach 0: element is not nilpotent");
}

/// Jordan type of a nilpotent element, a partition of 2n.
template <class F>
Partition jordan_type(const CentralizerElement<F>& e) {
  return from_rank_profile(rank_profile(e));
}

/// s_0 = 0, s_1 = 1, s_{k+1} = d s_k + c s_{k-1}, in the untruncated
/// ring so the determinant identities stay exact.
template <class F>
std::vector<Poly<F>> s_sequence(const Poly<F>& c, const Poly<F>& d, long K) {
  if (K < 1) throw std::invalid_argument("s_sequence needs K >= 1");
  std::vector<Poly<F>> s;
  s.push_back(Poly<F>::zero(c.field()));
  s.push_back(Poly<F>::constant(c.field(), c.field().one()));
  for (long k = 1; k < K; ++k)
    s.push_back(d * s[static_cast<std::size_t>(k)] +
                c * s[static_cast<std::size_t>(k - 1)]);
  return s;
}

}  // namespace nilorb

#endif
