#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sd/errors.hpp"

namespace sd {

/// Signed adjustment of face counts, index -> increment.
using CensusDelta = std::map<std::uint64_t, std::int64_t>;

/// Face counts of a dissection: entry k counts the pieces with k boundary
/// circuits.  Sparse and normalized, zero counts are never stored.
/// Counts are capped at 2^63-1 and all arithmetic is checked; indices above
/// 2^32 are rejected (no consistent census can reach them).
class Census {
 public:
  using Entries = std::map<std::uint64_t, std::uint64_t>;

  Census() = default;

  /// Dense counts a1, a2, ...; zeros are dropped.
  static Census from_counts(std::span<const std::uint64_t> dense);
  static Census from_counts(std::initializer_list<std::uint64_t> dense);
  static Census from_entries(const Entries& entries);

  /// Text form "a1,a2,...", e.g. "8,1".  Rejects negatives and non-integers.
  static Census parse(std::string_view text);

  const Entries& entries() const { return entries_; }
  std::uint64_t count(std::uint64_t k) const;
  std::uint64_t max_index() const;  // 0 when empty
  bool empty() const { return entries_.empty(); }

  /// Total number of pieces, checked.
  std::uint64_t total_faces() const;

  /// Sum of (2-k)*a_k over all entries; signed, may be negative.
  std::int64_t euler_sum() const;

  Census add(std::uint64_t k, std::uint64_t delta) const;
  Census sub(std::uint64_t k, std::uint64_t delta) const;
  Census apply(const CensusDelta& delta) const;

  std::vector<std::uint64_t> to_counts() const;
  std::string to_text() const;

  friend bool operator==(const Census&, const Census&) = default;
  friend bool operator<(const Census& a, const Census& b) { return a.entries_ < b.entries_; }

 private:
  Entries entries_;
};

std::ostream& operator<<(std::ostream& os, const Census& census);

enum class InfeasibleReason { EViolation, PViolation };

char reason_letter(InfeasibleReason reason);  // 'E' or 'P'

class NotFeasibleError : public Error {
 public:
  NotFeasibleError(InfeasibleReason reason, const std::string& what)
      : Error(errc::not_feasible, what), reason_(reason) {}
  InfeasibleReason reason() const { return reason_; }

 private:
  InfeasibleReason reason_;
};

struct Feasible {
  std::uint64_t n = 0;  // half the number of triple points
};
struct Infeasible {
  InfeasibleReason reason = InfeasibleReason::EViolation;
};

using FeasibilityVerdict = std::variant<Feasible, Infeasible>;

/// A census is realizable iff euler_sum - 2 is a non-negative multiple of 6
/// (which fixes n) and, when n = 0, the total face count is odd.
FeasibilityVerdict check_feasibility(const Census& census);

inline bool is_feasible(const FeasibilityVerdict& v) { return std::holds_alternative<Feasible>(v); }

/// n of a feasible census; throws NotFeasibleError otherwise.
std::uint64_t require_feasible(const Census& census);

}  // namespace sd
