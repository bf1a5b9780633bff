#ifndef NILORB_WITNESS_HPP
#define NILORB_WITNESS_HPP

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "nilorb/centralizer.hpp"
#include "nilorb/enumerator.hpp"

namespace nilorb {

// ---------------------------------------------------------------------------
// h-sequence: h_0 = 0, h_1 = 1, h_k = h_{k-1} + u h_{k-2}
// ---------------------------------------------------------------------------

template <class F>
std::vector<typename F::Elem> h_sequence(const F& field, typename F::Elem u,
                                         long K) {
  std::vector<typename F::Elem> h{field.zero(), field.one()};
  for (long k = 2; k <= K; ++k)
    h.push_back(field.add(h[k - 1], field.mul(u, h[k - 2])));
  h.resize(static_cast<std::size_t>(K) + 1, field.zero());
  if (K == 0) h = {field.zero()};
  return h;
}

inline std::vector<std::complex<double>> h_sequence_complex(
    std::complex<double> u, long K) {
  std::vector<std::complex<double>> h{0.0, 1.0};
  for (long k = 2; k <= K; ++k) h.push_back(h[k - 1] + u * h[k - 2]);
  if (K == 0) h = {0.0};
  h.resize(static_cast<std::size_t>(K) + 1);
  return h;
}

/// h_j as a polynomial in u with integer coefficients, low degree first.
std::vector<mpz_class> h_polynomial(long j);

/// Formal derivative sequence: h'_k = h'_{k-1} + h_{k-2} + u h'_{k-2}.
template <class F>
std::vector<typename F::Elem> h_derivative_sequence(const F& field,
                                                    typename F::Elem u,
                                                    long K) {
  auto h = h_sequence(field, u, K);
  std::vector<typename F::Elem> d{field.zero(), field.zero()};
  for (long k = 2; k <= K; ++k)
    d.push_back(field.add(d[k - 1], field.add(h[k - 2], field.mul(u, d[k - 2]))));
  d.resize(static_cast<std::size_t>(K) + 1, field.zero());
  return d;
}

/// A non-zero u with h_j(u) = 0, h_k(u) != 0 for 1 <= k <= alpha-1,
/// k != j, and h_j'(u) != 0.
template <class F>
std::optional<typename F::Elem> check_special_u(const F& field,
                                                typename F::Elem u, long j,
                                                long alpha) {
  if (field.is_zero(u)) return std::nullopt;
  auto h = h_sequence(field, u, alpha - 1 > j ? alpha - 1 : j);
  if (!field.is_zero(h[static_cast<std::size_t>(j)])) return std::nullopt;
  for (long k = 1; k <= alpha - 1; ++k)
    if (k != j && field.is_zero(h[static_cast<std::size_t>(k)]))
      return std::nullopt;
  auto d = h_derivative_sequence(field, u, j);
  if (field.is_zero(d[static_cast<std::size_t>(j)])) return std::nullopt;
  return u;
}

/// Rational candidates come from the rational root test on h_j; "none"
/// means no rational special u exists for this (j, alpha).
std::optional<mpq_class> find_special_u(const RationalField& field, long j,
                                        long alpha);

/// Over F_p every non-zero u is scanned.
std::optional<PrimeField::Elem> find_special_u(const PrimeField& field, long j,
                                               long alpha);

/// u_j = -1 / (4 cos^2(pi / j)); the characteristic-0 demonstration value.
double special_u_complex(long j);

// ---------------------------------------------------------------------------
// Witness recipes
// ---------------------------------------------------------------------------

enum class RecipeShape { Case1, Case1Degenerate, Diagonal, Case21 };

std::string to_string(RecipeShape s);

/// Renderable summary of the recipe a witness was built from.
struct RecipeInfo {
  RecipeShape shape;
  long z = 0, l = 0, m = 0;
  std::vector<std::string> p_coeffs, q_coeffs;  // low degree first
};

template <class F>
struct Witness {
  CentralizerElement<F> element;
  Partition partition;
  RecipeInfo recipe;
};

class WitnessNotFound : public std::runtime_error {
 public:
  WitnessNotFound(std::string what, std::vector<RecipeInfo> attempted)
      : std::runtime_error(std::move(what)), attempted_(std::move(attempted)) {}
  const std::vector<RecipeInfo>& attempted() const { return attempted_; }

 private:
  std::vector<RecipeInfo> attempted_;
};

namespace detail {

template <class F>
std::vector<std::string> render_coeffs(const F& field, const Poly<F>& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(field.to_string(c));
  return out;
}

/// [[0, X^z], [X^{z+l} p, X^{z+m} q]] and friends, truncated mod X^n.
template <class F>
CentralizerElement<F> instantiate(const F& field, long n, RecipeShape shape,
                                  long z, long l, long m, const Poly<F>& p,
                                  const Poly<F>& q) {
  auto zero = TruncPoly<F>::zero(field, n);
  auto mono = [&](long k) { return TruncPoly<F>::monomial(field, n, k, field.one()); };
  switch (shape) {
    case RecipeShape::Case1:
      return CentralizerElement<F>(
          n, Mat2Trunc<F>(zero, mono(z),
                          TruncPoly<F>::reduce(Poly<F>::monomial(field, z + l, field.one()) * p, n),
                          TruncPoly<F>::reduce(Poly<F>::monomial(field, z + m, field.one()) * q, n)));
    case RecipeShape::Case1Degenerate:
      return CentralizerElement<F>(
          n, Mat2Trunc<F>(zero, mono(z), zero,
                          TruncPoly<F>::reduce(Poly<F>::monomial(field, z + m, field.one()) * q, n)));
    case RecipeShape::Diagonal:
      return CentralizerElement<F>(n, Mat2Trunc<F>(mono(z + 1), zero, zero, mono(z + m)));
    case RecipeShape::Case21:
      return CentralizerElement<F>(n, Mat2Trunc<F>(mono(z + 1), zero, zero, mono(z + 1)));
  }
  throw std::logic_error("bad recipe shape");
}

template <class F>
RecipeInfo describe(const F& field, RecipeShape shape, long z, long l, long m,
                    const Poly<F>& p, const Poly<F>& q) {
  RecipeInfo info{shape, z, l, m, {}, {}};
  if (shape == RecipeShape::Case1) {
    info.p_coeffs = render_coeffs(field, p);
    info.q_coeffs = render_coeffs(field, q);
  } else if (shape == RecipeShape::Case1Degenerate) {
    info.q_coeffs = render_coeffs(field, q);
  }
  return info;
}

/// Candidate (p, q) pairs for the fallback search: constant terms first,
/// then degree-1 coefficients, in a fixed order.
template <class F>
std::vector<typename F::Elem> search_units(const F& field, long limit);

inline std::vector<PrimeField::Elem> search_units_impl(const PrimeField& f,
                                                       long limit) {
  std::vector<PrimeField::Elem> out;
  for (std::uint64_t v = 1; v < f.modulus() && static_cast<long>(out.size()) < limit; ++v)
    out.push_back(v);
  return out;
}

inline std::vector<mpq_class> search_units_impl(const RationalField&, long limit) {
  std::vector<mpq_class> out;
  for (long v = 1; static_cast<long>(out.size()) < limit; ++v) {
    out.push_back(mpq_class(v));
    if (static_cast<long>(out.size()) < limit) out.push_back(mpq_class(-v));
  }
  return out;
}

}  // namespace detail

/// Build a verified witness: an element of N(B) whose Jordan type equals
/// target.partition. The default p = q = 1 instantiation is tried first
/// per provenance tuple; a bounded deterministic coefficient search runs
/// on failure. P8/P9 tuples use p = X^t + u with u from find_special_u;
/// absence of such u over the field is reported via WitnessNotFound.
template <class F>
Witness<F> build_witness(const F& field, long n, const OrbitClass& target) {
  std::vector<RecipeInfo> attempted;
  const Poly<F> one = Poly<F>::constant(field, field.one());
  const Poly<F> zero = Poly<F>::zero(field);

  auto try_recipe = [&](RecipeShape shape, long z, long l, long m,
                        const Poly<F>& p,
                        const Poly<F>& q) -> std::optional<Witness<F>> {
    auto elem = detail::instantiate(field, n, shape, z, l, m, p, q);
    auto info = detail::describe(field, shape, z, l, m, p, q);
    if (!is_nilpotent(elem)) {
      attempted.push_back(info);
      return std::nullopt;
    }
    Partition jt = jordan_type(elem);
    if (jt == target.partition) return Witness<F>{elem, jt, info};
    attempted.push_back(info);
    return std::nullopt;
  };

  for (const CaseParams& cp : target.provenance) {
    switch (cp.id) {
      case CaseId::P1: {
        long s = *cp.s;
        if (s % 2 == 0) {
          if (auto w = try_recipe(RecipeShape::Case21, s / 2 - 1, 0, 0, zero, zero))
            return *w;
        } else if (s <= 2 * n - 3) {
          if (auto w = try_recipe(RecipeShape::Case1, (s - 1) / 2, 1, 1, one, one))
            return *w;
        }
        if (s >= n) {
          // p = q = 0: [[0, X^{s-n}], [0, 0]] realizes [2n]^s
          if (auto w = try_recipe(RecipeShape::Case1Degenerate, s - n, 0, 1, zero, zero))
            return *w;
        }
        break;
      }
      case CaseId::P2: {
        if (*cp.l == n - *cp.z) {
          if (auto w = try_recipe(RecipeShape::Case1Degenerate, *cp.z, 0, *cp.m, zero, one))
            return *w;
        } else if (auto w = try_recipe(RecipeShape::Case1, *cp.z, *cp.l, *cp.m, one, one)) {
          return *w;
        }
        break;
      }
      case CaseId::P3:
      case CaseId::P4:
      case CaseId::P6:
      case CaseId::P7: {
        if (auto w = try_recipe(RecipeShape::Case1, *cp.z, *cp.l, *cp.m, one, one))
          return *w;
        break;
      }
      case CaseId::P5: {
        if (auto w = try_recipe(RecipeShape::Diagonal, *cp.z, 0, *cp.m, zero, zero))
          return *w;
        break;
      }
      case CaseId::P8:
      case CaseId::P9: {
        long z = *cp.z, m = *cp.m, t = *cp.t;
        long alpha = ceil_div(n + m, m + z);
        long j = cp.id == CaseId::P8 ? alpha - 2 : alpha - 1;
        if (j < 3) break;
        auto u = find_special_u(field, j, alpha);
        if (!u) {
          attempted.push_back(detail::describe(field, RecipeShape::Case1, z,
                                               2 * m, m, zero, one));
          break;
        }
        Poly<F> p = Poly<F>::monomial(field, t, field.one()) +
                    Poly<F>::constant(field, *u);
        if (auto w = try_recipe(RecipeShape::Case1, z, 2 * m, m, p, one))
          return *w;
        break;
      }
    }
  }

  // Deterministic fallback: low-degree p, q with non-zero constant terms
  // over Case1 tuples, budget 10^4 candidates.
  constexpr long kBudget = 10000;
  long tried = 0;
  auto units = detail::search_units_impl(field, 32);
  for (const CaseParams& cp : target.provenance) {
    if (!(cp.id >= CaseId::P2 && cp.id <= CaseId::P7) || !cp.l || !cp.m) continue;
    if (*cp.l >= n - *cp.z) continue;
    for (int deg = 0; deg <= 1 && tried < kBudget; ++deg) {
      for (const auto& p0 : units) {
        for (const auto& q0 : units) {
          std::vector<typename F::Elem> lin{field.zero()};
          if (deg == 1)
            for (const auto& u : units) lin.push_back(u);
          for (const auto& p1 : lin) {
            for (const auto& q1 : lin) {
              if (++tried > kBudget) goto search_done;
              Poly<F> p(field, {p0, p1});
              Poly<F> q(field, {q0, q1});
              if (auto w = try_recipe(RecipeShape::Case1, *cp.z, *cp.l, *cp.m, p, q))
                return *w;
            }
          }
        }
      }
    }
  }
search_done:
  throw WitnessNotFound("no witness found for partition " +
                            target.partition.to_exponent_string() +
                            " within the search budget",
                        std::move(attempted));
}

}  // namespace nilorb

#endif
