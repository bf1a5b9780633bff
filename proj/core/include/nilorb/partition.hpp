#ifndef NILORB_PARTITION_HPP
#define NILORB_PARTITION_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilorb {

/// Integer partition, parts stored largest first. The empty partition
/// represents 0. Constructors normalize: zeros dropped, parts sorted
/// descending. Negative parts are rejected.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<long> parts);
  explicit Partition(std::vector<long> parts);

  const std::vector<long>& parts() const { return parts_; }
  long sum() const;
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  long operator[](std::size_t i) const { return parts_[i]; }

  /// "5,3,3,3"
  std::string to_string() const;
  /// "(5,3^3)"
  std::string to_exponent_string() const;

  /// Accepts both "5,3,3,3" and "(5,3^3)" forms.
  static Partition parse(const std::string& text);

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<long> parts_;
};

/// The unique partition of N into k parts differing by at most 1.
/// Throws std::invalid_argument unless 1 <= k <= N.
Partition almost_rectangular(long N, long k);

/// Transpose of the Young diagram; an involution.
Partition conjugate(const Partition& p);

/// Dominance order: every prefix sum of p >= the one of q.
/// Throws std::invalid_argument when p and q partition different integers.
bool dominates(const Partition& p, const Partition& q);

/// Recover a partition from the rank profile of a nilpotent matrix,
/// i.e. ranks[k] = rank(A^k) with ranks ending in 0. The difference
/// sequence must be non-increasing (it is the conjugate partition);
/// otherwise the profile is not realizable and we throw.
Partition from_rank_profile(const std::vector<long>& ranks);

/// Rank profile of the Jordan matrix of p: ranks[k] = sum_i max(p_i - k, 0).
std::vector<long> jordan_rank_profile(const Partition& p);

}  // namespace nilorb

#endif
