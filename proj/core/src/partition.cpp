#include "nilorb/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace nilorb {

namespace {

std::vector<long> normalized(std::vector<long> v) {
  for (long x : v) {
    if (x < 0) throw std::invalid_argument("partition part is negative");
  }
  std::erase(v, 0L);
  std::sort(v.begin(), v.end(), std::greater<long>());
  return v;
}

}  // namespace

Partition::Partition(std::initializer_list<long> parts)
    : parts_(normalized(std::vector<long>(parts))) {}

Partition::Partition(std::vector<long> parts)
    : parts_(normalized(std::move(parts))) {}

long Partition::sum() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

std::string Partition::to_exponent_string() const {
  std::ostringstream os;
  os << '(';
  std::size_t i = 0;
  bool first = true;
  while (i < parts_.size()) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (!first) os << ',';
    first = false;
    os << parts_[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  os << ')';
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw std::invalid_argument("unbalanced '(' in partition");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<long> parts;
  if (s.empty()) return Partition{};
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty entry in partition");
    long part, count = 1;
    auto caret = tok.find('^');
    try {
      if (caret == std::string::npos) {
        part = std::stol(tok);
      } else {
        part = std::stol(tok.substr(0, caret));
        count = std::stol(tok.substr(caret + 1));
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse partition entry '" + tok + "'");
    }
    if (part <= 0 || count <= 0)
      throw std::invalid_argument("partition entries must be positive");
    for (long c = 0; c < count; ++c) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

Partition almost_rectangular(long N, long k) {
  if (k < 1 || k > N)
    throw std::invalid_argument("almost_rectangular requires 1 <= k <= N");
  long q = N / k, r = N % k;
  std::vector<long> parts;
  parts.reserve(static_cast<std::size_t>(k));
  for (long i = 0; i < r; ++i) parts.push_back(q + 1);
  for (long i = r; i < k; ++i) parts.push_back(q);
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& p) {
  std::vector<long> out;
  if (p.empty()) return Partition{};
  out.reserve(static_cast<std::size_t>(p[0]));
  for (long j = 1; j <= p[0]; ++j) {
    long count = 0;
    for (long part : p.parts())
      if (part >= j) ++count;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

bool dominates(const Partition& p, const Partition& q) {
  if (p.sum() != q.sum())
    throw std::invalid_argument("dominance needs partitions of the same integer");
  long sp = 0, sq = 0;
  std::size_t len = std::max(p.size(), q.size());
  for (std::size_t i = 0; i < len; ++i) {
    sp += i < p.size() ? p[i] : 0;
    sq += i < q.size() ? q[i] : 0;
    if (sp < sq) return false;
  }
  return true;
}

Partition from_rank_profile(const std::vector<long>& ranks) {
  if (ranks.empty() || ranks.back() != 0)
    throw std::invalid_argument("rank profile must end in 0");
  std::vector<long> diffs;
  for (std::size_t k = 0; k + 1 < ranks.size(); ++k) {
    long d = ranks[k] - ranks[k + 1];
    if (d < 0) throw std::invalid_argument("rank profile must be non-increasing");
    diffs.push_back(d);
  }
  for (std::size_t k = 0; k + 1 < diffs.size(); ++k) {
    if (diffs[k] < diffs[k + 1])
      throw std::invalid_argument(
          "rank profile not realizable by a nilpotent matrix "
          "(increasing difference sequence)");
  }
  return conjugate(Partition(std::move(diffs)));
}

std::vector<long> jordan_rank_profile(const Partition& p) {
  std::vector<long> ranks;
  long k = 0;
  for (;;) {
    long r = 0;
    for (long part : p.parts()) r += std::max(part - k, 0L);
    ranks.push_back(r);
    if (r == 0) break;
    ++k;
  }
  return ranks;
}

}  // namespace nilorb
