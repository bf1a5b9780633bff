#ifndef NILORB_ENUMERATOR_HPP
#define NILORB_ENUMERATOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilorb/partition.hpp"

namespace nilorb {

enum class CaseId { P1, P2, P3, P4, P5, P6, P7, P8, P9 };

std::string to_string(CaseId id);
CaseId parse_case_id(const std::string& s);
inline bool is_guaranteed_case(CaseId id) { return id <= CaseId::P7; }

/// One parameter tuple of a Table row, with the derived quantities that
/// row uses. Fields are set only where the row has them.
struct CaseParams {
  CaseId id;
  std::optional<long> z, m, l, s, t;
  std::optional<long> alpha, beta;  // alpha = ceil((n+z)/(l+2z)) family
  std::optional<long> shift;        // alpha'/alpha'' (P3/P4), gamma'/gamma'' (P8/P9)

  bool operator==(const CaseParams&) const = default;
};

/// A partition with the case tuples that produce it.
struct OrbitClass {
  Partition partition;
  std::vector<CaseParams> provenance;
  bool guaranteed = false;       // some tuple is P1..P7
  bool field_dependent = false;  // only P8/P9 tuples
};

/// Which rows to apply and how to read the field-dependent ones.
struct FieldMode {
  enum class Kind { ClosedChar0, GuaranteedOnly, Finite };
  Kind kind = Kind::ClosedChar0;
  std::uint64_t p = 0;

  static FieldMode closed_char0() { return {Kind::ClosedChar0, 0}; }
  static FieldMode guaranteed_only() { return {Kind::GuaranteedOnly, 0}; }
  static FieldMode finite(std::uint64_t p) { return {Kind::Finite, p}; }
};

/// Ceiling quantities shared by the rank analyses.
struct GreekValues {
  long alpha_caption, beta_caption;  // from (n, z, l)
  long alpha_12, beta_12;            // from (n, z, m)
  long gamma_12, delta_12;           // from (n, z, l, m)
};

/// ceil(a/b) for b > 0, exact for negative a.
long ceil_div(long a, long b);

GreekValues greek(long n, long z, long l, long m);

/// All (partition, params) pairs of one Table row at size parameter n.
std::vector<std::pair<Partition, CaseParams>> case_partitions(CaseId id, long n);

/// Union of the applicable rows, merged by partition.
std::vector<OrbitClass> enumerate_orbits(long n, const FieldMode& mode);

}  // namespace nilorb

#endif
