#include "nilorb/enumerator.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nilorb {

std::string to_string(CaseId id) {
  return "P" + std::to_string(static_cast<int>(id) + 1);
}

CaseId parse_case_id(const std::string& s) {
  if (s.size() == 2 && s[0] == 'P' && s[1] >= '1' && s[1] <= '9')
    return static_cast<CaseId>(s[1] - '1');
  throw std::invalid_argument("unknown case id '" + s + "'");
}

long ceil_div(long a, long b) {
  if (b <= 0) throw std::invalid_argument("ceil_div needs a positive divisor");
  long q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

GreekValues greek(long n, long z, long l, long m) {
  if (n < 1 || z < 0 || z > n - 1 || m <= 0 || l <= 0 || l >= n - z + 1)
    throw std::invalid_argument("greek: parameters out of range");
  GreekValues g{};
  g.alpha_caption = ceil_div(n + z, l + 2 * z);
  g.beta_caption = g.alpha_caption * (l + 2 * z) - (n + z);
  g.alpha_12 = ceil_div(n + m, z + m);
  g.beta_12 = g.alpha_12 * (z + m) - (n + m);
  if (z + l - m > 0) {
    g.gamma_12 = ceil_div(n - m, z + l - m);
    g.delta_12 = g.gamma_12 * (z + l - m) - (n - m);
  } else {
    g.gamma_12 = 0;
    g.delta_12 = 0;
  }
  return g;
}

namespace {

// A partition assembled from almost-rectangular groups [N]^k and
// explicit (part^exponent) runs. Returns nullopt when the tuple is
// infeasible (a group would need a non-positive part, or the total
// misses 2n).
class Assembler {
 public:
  explicit Assembler(long target) : target_(target) {}

  Assembler& group(long N, long k) {
    if (!ok_) return *this;
    if (k < 0) {
      ok_ = false;
      return *this;
    }
    if (k == 0) return *this;  // [N]^0 contributes nothing
    if (N < k) {
      ok_ = false;
      return *this;
    }
    long q = N / k, r = N % k;
    for (long i = 0; i < r; ++i) parts_.push_back(q + 1);
    for (long i = r; i < k; ++i) parts_.push_back(q);
    return *this;
  }

  Assembler& run(long part, long count) {
    if (!ok_) return *this;
    if (count < 0) {
      ok_ = false;
      return *this;
    }
    if (count == 0) return *this;
    if (part <= 0) {
      ok_ = false;
      return *this;
    }
    for (long i = 0; i < count; ++i) parts_.push_back(part);
    return *this;
  }

  std::optional<Partition> finish() {
    if (!ok_) return std::nullopt;
    Partition p(std::move(parts_));
    if (p.sum() != target_) return std::nullopt;
    return p;
  }

 private:
  long target_;
  bool ok_ = true;
  std::vector<long> parts_;
};

using Row = std::vector<std::pair<Partition, CaseParams>>;

void emit(Row& out, std::optional<Partition> p, CaseParams params) {
  if (p) out.emplace_back(std::move(*p), std::move(params));
}

Row row_p1(long n) {
  Row out;
  for (long s = 1; s <= 2 * n; ++s) {
    CaseParams cp{CaseId::P1};
    cp.s = s;
    emit(out, Assembler(2 * n).group(2 * n, s).finish(), cp);
  }
  return out;
}

Row row_p2(long n) {
  Row out;
  for (long z = 0; z <= n - 1; ++z) {
    // first branch: 0 < 2m <= l < n-z with the ceiling gap condition
    for (long m = 1; 2 * m < n - z; ++m) {
      for (long l = 2 * m; l < n - z; ++l) {
        if (ceil_div(n + m, m + z) < ceil_div(n - m, l - m + z) + 1) continue;
        CaseParams cp{CaseId::P2};
        cp.z = z;
        cp.m = m;
        cp.l = l;
        emit(out,
             Assembler(2 * n).group(n + m, m + z).group(n - m, l - m + z).finish(),
             cp);
      }
    }
    // second branch: l = n-z, 0 < m < n-z
    for (long m = 1; m < n - z; ++m) {
      long l = n - z;
      CaseParams cp{CaseId::P2};
      cp.z = z;
      cp.m = m;
      cp.l = l;
      emit(out,
           Assembler(2 * n).group(n + m, m + z).group(n - m, l - m + z).finish(),
           cp);
    }
  }
  return out;
}

Row row_p3(long n) {
  Row out;
  for (long z = 0; z <= n - 1; ++z)
    for (long m = 1; m < n - z; ++m)
      for (long l = m; l < n - z && l < 2 * m; ++l) {
        long alpha = ceil_div(n + z, l + 2 * z);
        if (!(n + l - m > alpha * (l + 2 * z))) continue;
        long ap = l - m + (2 * m - l) * alpha;
        CaseParams cp{CaseId::P3};
        cp.z = z;
        cp.m = m;
        cp.l = l;
        cp.alpha = alpha;
        cp.shift = ap;
        emit(out,
             Assembler(2 * n).group(n + ap, m + z).group(n - ap, l - m + z).finish(),
             cp);
      }
  return out;
}

Row row_p4(long n) {
  Row out;
  for (long z = 0; z <= n - 1; ++z)
    for (long m = 1; m < n - z; ++m)
      for (long l = m; l < n - z && l < 2 * m; ++l) {
        long alpha = ceil_div(n + z, l + 2 * z);
        long a = alpha * (l + 2 * z);
        if (!(n + m + 2 * z <= a && a < n + l + z)) continue;
        long app = m - (2 * m - l) * alpha;
        CaseParams cp{CaseId::P4};
        cp.z = z;
        cp.m = m;
        cp.l = l;
        cp.alpha = alpha;
        cp.shift = app;
        emit(out,
             Assembler(2 * n).group(n + app, l - m + z).group(n - app, m + z).finish(),
             cp);
      }
  return out;
}

Row row_p5(long n) {
  Row out;
  for (long z = 0; z <= n - 1; ++z)
    for (long m = 2; m <= n - z; ++m) {
      CaseParams cp{CaseId::P5};
      cp.z = z;
      cp.m = m;
      emit(out, Assembler(2 * n).group(n, z + 1).group(n, m + z).finish(), cp);
    }
  return out;
}

Row row_p6(long n) {
  Row out;
  auto push = [&](long n_, long z, long m, long l) {
    long alpha = ceil_div(n_ + z, l + 2 * z);
    long beta = alpha * (l + 2 * z) - (n_ + z);
    CaseParams cp{CaseId::P6};
    cp.z = z;
    cp.m = m;
    cp.l = l;
    cp.alpha = alpha;
    cp.beta = beta;
    emit(out,
         Assembler(2 * n_)
             .run(2 * alpha, l - beta)
             .run(2 * alpha - 1, 2 * z)
             .run(2 * alpha - 2, beta)
             .finish(),
         cp);
  };
  for (long z = 0; z <= n - 1; ++z) {
    // first branch: 0 < m <= l < n-z, l < 2m, max{l-m-z,0} <= beta < min{m+z,l}
    for (long m = 1; m < n - z; ++m)
      for (long l = m; l < n - z && l < 2 * m; ++l) {
        long alpha = ceil_div(n + z, l + 2 * z);
        long beta = alpha * (l + 2 * z) - (n + z);
        if (beta < std::max(l - m - z, 0L)) continue;
        if (beta >= std::min(m + z, l)) continue;
        push(n, z, m, l);
      }
    // second branch: 0 <= beta < l < m <= n-z
    for (long l = 1; l < n - z; ++l)
      for (long m = l + 1; m <= n - z; ++m) {
        long alpha = ceil_div(n + z, l + 2 * z);
        long beta = alpha * (l + 2 * z) - (n + z);
        if (beta >= l) continue;
        push(n, z, m, l);
      }
  }
  return out;
}

Row row_p7(long n) {
  Row out;
  for (long z = 0; z <= n - 1; ++z)
    for (long m = 1; m < n - z; ++m)
      for (long l = m; l < n - z && l < 2 * m; ++l) {
        long alpha = ceil_div(n + z, l + 2 * z);
        long beta = alpha * (l + 2 * z) - (n + z);
        if (beta < std::max(m + z, l)) continue;
        if (beta >= std::min(2 * l - m + z, l + 2 * z)) continue;
        CaseParams cp{CaseId::P7};
        cp.z = z;
        cp.m = m;
        cp.l = l;
        cp.alpha = alpha;
        cp.beta = beta;
        emit(out,
             Assembler(2 * n)
                 .run(2 * alpha - 1, 2 * l - m + z - beta)
                 .run(2 * alpha - 2, 2 * m - l + 2 * z)
                 .run(2 * alpha - 3, beta - m - z)
                 .finish(),
             cp);
      }
  return out;
}

Row row_p8(long n) {
  Row out;
  for (long z = 0; z <= n - 1; ++z)
    for (long m = 1; 2 * m < n - z; ++m) {
      long a1 = ceil_div(n + m + 2 * z, m + z);
      long a2 = ceil_div(n + m, m + z);
      if (a1 != a2 || a2 < 5) continue;
      long tmax = std::min(m, m - n + ceil_div(n - m, m + z) * (m + z));
      for (long t = 1; t <= tmax; ++t) {
        long gp = m - ceil_div(n - z, m + z) * t;
        CaseParams cp{CaseId::P8};
        cp.z = z;
        cp.m = m;
        cp.t = t;
        cp.alpha = a2;
        cp.shift = gp;
        emit(out,
             Assembler(2 * n).group(n + gp, m + z - t).group(n - gp, m + z + t).finish(),
             cp);
      }
    }
  return out;
}

Row row_p9(long n) {
  Row out;
  for (long z = 0; z <= n - 1; ++z)
    for (long m = 1; 2 * m < n - z; ++m) {
      if (ceil_div(n - m, m + z) > ceil_div(n - z, m + z)) continue;
      long alpha = ceil_div(n + m, m + z);
      if (alpha < 4) continue;
      long a = alpha * (m + z);
      // n+z+t <= alpha(m+z) <= n+2m+z-t bounds t on both sides
      long tmax = std::min(a - n - z, n + 2 * m + z - a);
      for (long t = 1; t <= tmax; ++t) {
        long gpp = m + ceil_div(n - m - 2 * z, m + z) * t;
        CaseParams cp{CaseId::P9};
        cp.z = z;
        cp.m = m;
        cp.t = t;
        cp.alpha = alpha;
        cp.shift = gpp;
        emit(out,
             Assembler(2 * n).group(n + gpp, m + z + t).group(n - gpp, m + z - t).finish(),
             cp);
      }
    }
  return out;
}

}  // namespace

std::vector<std::pair<Partition, CaseParams>> case_partitions(CaseId id, long n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  switch (id) {
    case CaseId::P1: return row_p1(n);
    case CaseId::P2: return row_p2(n);
    case CaseId::P3: return row_p3(n);
    case CaseId::P4: return row_p4(n);
    case CaseId::P5: return row_p5(n);
    case CaseId::P6: return row_p6(n);
    case CaseId::P7: return row_p7(n);
    case CaseId::P8: return row_p8(n);
    case CaseId::P9: return row_p9(n);
  }
  throw std::invalid_argument("unknown case id");
}

namespace {

std::optional<long> key_field(const CaseParams& c, int i) {
  switch (i) {
    case 0: return c.z;
    case 1: return c.m;
    case 2: return c.l;
    case 3: return c.s;
    default: return c.t;
  }
}

bool params_less(const CaseParams& a, const CaseParams& b) {
  if (a.id != b.id) return a.id < b.id;
  for (int i = 0; i < 5; ++i) {
    auto x = key_field(a, i), y = key_field(b, i);
    if (x != y) return x < y;
  }
  return false;
}

}  // namespace

std::vector<OrbitClass> enumerate_orbits(long n, const FieldMode& mode) {
  std::vector<CaseId> cases = {CaseId::P1, CaseId::P2, CaseId::P3,
                               CaseId::P4, CaseId::P5, CaseId::P6,
                               CaseId::P7};
  if (mode.kind != FieldMode::Kind::GuaranteedOnly) {
    cases.push_back(CaseId::P8);
    cases.push_back(CaseId::P9);
  }
  std::map<Partition, OrbitClass, std::greater<Partition>> merged;
  for (CaseId id : cases)
    for (auto& [part, params] : case_partitions(id, n)) {
      auto it = merged.find(part);
      if (it == merged.end()) {
        OrbitClass oc;
        oc.partition = part;
        it = merged.emplace(part, std::move(oc)).first;
      }
      it->second.provenance.push_back(params);
    }
  std::vector<OrbitClass> out;
  out.reserve(merged.size());
  for (auto& [part, oc] : merged) {
    std::sort(oc.provenance.begin(), oc.provenance.end(), params_less);
    oc.guaranteed = std::any_of(oc.provenance.begin(), oc.provenance.end(),
                                [](const CaseParams& c) { return is_guaranteed_case(c.id); });
    oc.field_dependent = !oc.guaranteed;
    out.push_back(std::move(oc));
  }
  return out;
}

}  // namespace nilorb
