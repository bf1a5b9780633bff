#ifndef NILORB_ORACLE_HPP
#define NILORB_ORACLE_HPP

#include <cstdint>
#include <random>
#include <set>
#include <thread>
#include <vector>

#include "nilorb/centralizer.hpp"
#include "nilorb/enumerator.hpp"
#include "nilorb/witness.hpp"

namespace nilorb {

struct OracleBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerificationReport {
  long n = 0;
  std::uint64_t p = 0;
  bool exhaustive = true;
  long samples = 0;
  std::uint64_t seed = 0;
  std::set<Partition> observed;
  std::set<Partition> enumerated_guaranteed;
  std::set<Partition> enumerated_field_dependent;
  std::set<Partition> extras;              // observed \ enumerated
  std::set<Partition> missing_guaranteed;  // guaranteed \ observed
  /// P8/P9-only classes with their witness resolution over F_p.
  std::vector<std::pair<Partition, bool>> field_dependent_resolution;

  bool clean() const { return extras.empty() && missing_guaranteed.empty(); }
};

namespace detail {

/// All nilpotent 2x2 constant blocks (a0, b0, c0, d0): trace 0, det 0.
inline std::vector<std::array<std::uint64_t, 4>> nilpotent_blocks(
    const PrimeField& f) {
  std::vector<std::array<std::uint64_t, 4>> out;
  for (std::uint64_t a0 = 0; a0 < f.modulus(); ++a0) {
    std::uint64_t d0 = f.neg(a0);
    for (std::uint64_t b0 = 0; b0 < f.modulus(); ++b0)
      for (std::uint64_t c0 = 0; c0 < f.modulus(); ++c0)
        if (f.eq(f.mul(a0, d0), f.mul(b0, c0))) out.push_back({a0, b0, c0, d0});
  }
  return out;
}

/// Decode index into the 4(n-1) higher coefficients, order a1..a_{n-1},
/// b1.., c1.., d1.., low degree first.
inline CentralizerElement<PrimeField> decode(
    const PrimeField& f, long n, const std::array<std::uint64_t, 4>& block,
    std::uint64_t index) {
  std::vector<std::uint64_t> coeffs[4];
  for (int e = 0; e < 4; ++e) {
    coeffs[e].assign(static_cast<std::size_t>(n), 0);
    coeffs[e][0] = block[static_cast<std::size_t>(e)];
  }
  for (int e = 0; e < 4; ++e)
    for (long i = 1; i < n; ++i) {
      coeffs[e][static_cast<std::size_t>(i)] = index % f.modulus();
      index /= f.modulus();
    }
  return make_element(f, n, coeffs[0], coeffs[1], coeffs[2], coeffs[3]);
}

}  // namespace detail

/// Jordan types of every nilpotent element of N(B) over F_p, by direct
/// scan of all p^{4n} coefficient tuples (nilpotency is a pre-filter on
/// constant terms, so only p^2 * p^{4(n-1)} elements reach the rank
/// computation).
inline std::set<Partition> exhaustive_types(long n, std::uint64_t p,
                                            int threads = 1,
                                            double budget = double(1ull << 30)) {
  PrimeField f(p);
  double total = std::pow(static_cast<double>(p), 4.0 * static_cast<double>(n));
  if (total > budget)
    throw OracleBudgetError(
        "exhaustive scan of p^{4n} candidates exceeds the budget; "
        "use sampling mode");
  auto blocks = detail::nilpotent_blocks(f);
  std::uint64_t inner = 1;
  for (long i = 0; i < 4 * (n - 1); ++i) inner *= p;

  if (threads < 1) threads = 1;
  std::vector<std::set<Partition>> results(static_cast<std::size_t>(threads));
  auto work = [&](int shard) {
    for (std::size_t bi = 0; bi < blocks.size(); ++bi)
      for (std::uint64_t idx = static_cast<std::uint64_t>(shard); idx < inner;
           idx += static_cast<std::uint64_t>(threads)) {
        auto e = detail::decode(f, n, blocks[bi], idx);
        if (e.mat().is_zero()) {
          results[static_cast<std::size_t>(shard)].insert(
              almost_rectangular(2 * n, 2 * n));
          continue;
        }
        results[static_cast<std::size_t>(shard)].insert(jordan_type(e));
      }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  std::set<Partition> out;
  for (auto& r : results) out.merge(r);
  return out;
}

/// Deterministic sampled variant; result is a subset of the exhaustive set.
inline std::set<Partition> sample_types(long n, std::uint64_t p, long count,
                                        std::uint64_t seed) {
  PrimeField f(p);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  std::set<Partition> out;
  for (long it = 0; it < count; ++it) {
    std::vector<std::uint64_t> c[4];
    for (auto& v : c) {
      v.resize(static_cast<std::size_t>(n));
      for (auto& x : v) x = dist(rng);
    }
    // nilpotency pre-filter on the constant block
    auto a0 = c[0][0], b0 = c[1][0], c0 = c[2][0], d0 = c[3][0];
    if (!f.is_zero(f.add(a0, d0)) || !f.eq(f.mul(a0, d0), f.mul(b0, c0)))
      continue;
    auto e = make_element(f, n, c[0], c[1], c[2], c[3]);
    if (e.mat().is_zero()) {
      out.insert(almost_rectangular(2 * n, 2 * n));
      continue;
    }
    out.insert(jordan_type(e));
  }
  return out;
}

struct OracleMode {
  bool exhaustive = true;
  long samples = 0;
  std::uint64_t seed = 0;
  int threads = 1;
  double budget = double(1ull << 30);
};

/// Compare observed Jordan types against the enumerator over F_p.
inline VerificationReport cross_check(long n, std::uint64_t p,
                                      const OracleMode& mode = {}) {
  VerificationReport rep;
  rep.n = n;
  rep.p = p;
  rep.exhaustive = mode.exhaustive;
  rep.samples = mode.samples;
  rep.seed = mode.seed;
  rep.observed = mode.exhaustive
                     ? exhaustive_types(n, p, mode.threads, mode.budget)
                     : sample_types(n, p, mode.samples, mode.seed);

  auto enumerated = enumerate_orbits(n, FieldMode::finite(p));
  std::set<Partition> all;
  for (const auto& oc : enumerated) {
    all.insert(oc.partition);
    if (oc.guaranteed)
      rep.enumerated_guaranteed.insert(oc.partition);
    else
      rep.enumerated_field_dependent.insert(oc.partition);
  }
  for (const auto& part : rep.observed)
    if (!all.contains(part)) rep.extras.insert(part);
  for (const auto& part : rep.enumerated_guaranteed)
    if (!rep.observed.contains(part)) rep.missing_guaranteed.insert(part);

  PrimeField f(p);
  for (const auto& oc : enumerated) {
    if (oc.guaranteed) continue;
    bool resolved = true;
    try {
      build_witness(f, n, oc);
    } catch (const WitnessNotFound&) {
      resolved = false;
    }
    rep.field_dependent_resolution.emplace_back(oc.partition, resolved);
  }
  return rep;
}

}  // namespace nilorb

#endif
