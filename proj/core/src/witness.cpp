#include "nilorb/witness.hpp"

#include <algorithm>
#include <numbers>

namespace nilorb {

std::string to_string(RecipeShape s) {
  switch (s) {
    case RecipeShape::Case1: return "case1";
    case RecipeShape::Case1Degenerate: return "case1_degenerate";
    case RecipeShape::Diagonal: return "diagonal";
    case RecipeShape::Case21: return "case21";
  }
  return "?";
}

std::vector<mpz_class> h_polynomial(long j) {
  if (j < 0) throw std::invalid_argument("h_polynomial needs j >= 0");
  // h_k as integer polynomials in u via the recursion
  std::vector<mpz_class> prev{};         // h_0 = 0
  std::vector<mpz_class> cur{mpz_class(1)};  // h_1 = 1
  if (j == 0) return prev;
  for (long k = 2; k <= j; ++k) {
    std::vector<mpz_class> next(std::max(cur.size(), prev.size() + 1), mpz_class(0));
    for (std::size_t i = 0; i < cur.size(); ++i) next[i] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i + 1] += prev[i];
    while (!next.empty() && next.back() == 0) next.pop_back();
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

void check_special_u_args(long j, long alpha) {
  if (j < 3) throw std::invalid_argument("find_special_u needs j >= 3");
  if (j > alpha - 1)
    throw std::invalid_argument("find_special_u needs j <= alpha - 1");
}

std::vector<mpz_class> divisors(const mpz_class& v) {
  mpz_class a = abs(v);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      out.push_back(d);
      if (d * d != a) out.push_back(a / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<mpq_class> find_special_u(const RationalField& field, long j,
                                        long alpha) {
  check_special_u_args(j, alpha);
  // rational root test on h_j: candidates +-a/b, a | constant term,
  // b | leading coefficient (the constant term of h_j is 1)
  auto hj = h_polynomial(j);
  if (hj.empty()) return std::nullopt;
  for (const mpz_class& num : divisors(hj.front()))
    for (const mpz_class& den : divisors(hj.back()))
      for (int sign : {1, -1}) {
        mpq_class u(sign * num, den);
        u.canonicalize();
        if (auto ok = check_special_u(field, u, j, alpha)) return *ok;
      }
  return std::nullopt;
}

std::optional<PrimeField::Elem> find_special_u(const PrimeField& field, long j,
                                               long alpha) {
  check_special_u_args(j, alpha);
  for (PrimeField::Elem u = 1; u < field.modulus(); ++u)
    if (auto ok = check_special_u(field, u, j, alpha)) return *ok;
  return std::nullopt;
}

double special_u_complex(long j) {
  if (j < 3) throw std::invalid_argument("special_u_complex needs j >= 3");
  double c = std::cos(std::numbers::pi / static_cast<double>(j));
  return -1.0 / (4.0 * c * c);
}

}  // namespace nilorb
