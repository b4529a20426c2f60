#include "sd/census.hpp"

#include <charconv>
#include <limits>

namespace sd {

namespace {

constexpr std::uint64_t kMaxCount = std::uint64_t{1} << 63;  // exclusive bound, 2^63-1 allowed
constexpr std::uint64_t kMaxIndex = std::uint64_t{1} << 32;

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b)
    throw Error(errc::overflow, "census: face count sum overflows");
  return a + b;
}

void validate_entry(std::uint64_t k, std::uint64_t count) {
  if (k == 0) throw Error(errc::invalid_parameter, "census: index must be positive");
  if (k > kMaxIndex) throw Error(errc::invalid_parameter, "census: index too large");
  if (count >= kMaxCount) throw Error(errc::overflow, "census: count exceeds 2^63-1");
}

}  // namespace

Census Census::from_counts(std::span<const std::uint64_t> dense) {
  Entries e;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) e[i + 1] = dense[i];
  }
  return from_entries(e);
}

Census Census::from_counts(std::initializer_list<std::uint64_t> dense) {
  return from_counts(std::span<const std::uint64_t>(dense.begin(), dense.size()));
}

Census Census::from_entries(const Entries& entries) {
  Census c;
  std::uint64_t total = 0;
  for (const auto& [k, count] : entries) {
    if (count == 0) continue;
    validate_entry(k, count);
    total = checked_add(total, count);
    c.entries_[k] = count;
  }
  return c;
}

Census Census::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) throw Error(errc::parse_error, "census: empty input");

  std::vector<std::uint64_t> dense;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    std::string_view token =
        trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (token.empty()) throw Error(errc::parse_error, "census: empty entry");
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range)
      throw Error(errc::parse_error, "census: count out of range: '" + std::string(token) + "'");
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw Error(errc::parse_error, "census: not a non-negative integer: '" + std::string(token) + "'");
    dense.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return from_counts(dense);
}

std::uint64_t Census::count(std::uint64_t k) const {
  const auto it = entries_.find(k);
  return it == entries_.end() ? 0 : it->second;
}

std::uint64_t Census::max_index() const {
  return entries_.empty() ? 0 : entries_.rbegin()->first;
}

std::uint64_t Census::total_faces() const {
  std::uint64_t total = 0;
  for (const auto& [k, count] : entries_) total = checked_add(total, count);
  return total;
}

std::int64_t Census::euler_sum() const {
  // indices <= 2^32 and total count <= 2^64 keep every partial sum well
  // inside the 128-bit range
  __int128 acc = 0;
  for (const auto& [k, count] : entries_) {
    acc += (__int128{2} - __int128(k)) * __int128(count);
  }
  if (acc > std::numeric_limits<std::int64_t>::max() || acc < std::numeric_limits<std::int64_t>::min())
    throw Error(errc::overflow, "census: euler sum exceeds 64 bits");
  return static_cast<std::int64_t>(acc);
}

Census Census::add(std::uint64_t k, std::uint64_t delta) const {
  if (k == 0) throw Error(errc::invalid_parameter, "census: index must be positive");
  Entries e = entries_;
  const std::uint64_t cur = count(k);
  e[k] = checked_add(cur, delta);
  return from_entries(e);
}

Census Census::sub(std::uint64_t k, std::uint64_t delta) const {
  if (k == 0) throw Error(errc::invalid_parameter, "census: index must be positive");
  const std::uint64_t cur = count(k);
  if (cur < delta)
    throw Error(errc::negative_count,
                "census: count a_" + std::to_string(k) + " would drop below zero");
  Entries e = entries_;
  e[k] = cur - delta;
  return from_entries(e);
}

Census Census::apply(const CensusDelta& delta) const {
  Census out = *this;
  for (const auto& [k, d] : delta) {
    if (d >= 0)
      out = out.add(k, static_cast<std::uint64_t>(d));
    else
      out = out.sub(k, static_cast<std::uint64_t>(-(d + 1)) + 1);
  }
  return out;
}

std::vector<std::uint64_t> Census::to_counts() const {
  std::vector<std::uint64_t> dense(max_index(), 0);
  for (const auto& [k, count] : entries_) dense[k - 1] = count;
  return dense;
}

std::string Census::to_text() const {
  if (entries_.empty()) return "0";
  std::string out;
  const auto dense = to_counts();
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(dense[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Census& census) {
  return os << census.to_text();
}

char reason_letter(InfeasibleReason reason) {
  return reason == InfeasibleReason::EViolation ? 'E' : 'P';
}

FeasibilityVerdict check_feasibility(const Census& census) {
  const std::int64_t es = census.euler_sum();
  if (es < 2 || (es - 2) % 6 != 0) return Infeasible{InfeasibleReason::EViolation};
  const std::uint64_t n = static_cast<std::uint64_t>((es - 2) / 6);
  if (n == 0 && census.total_faces() % 2 == 0) return Infeasible{InfeasibleReason::PViolation};
  return Feasible{n};
}

std::uint64_t require_feasible(const Census& census) {
  const FeasibilityVerdict v = check_feasibility(census);
  if (const auto* inf = std::get_if<Infeasible>(&v)) {
    throw NotFeasibleError(inf->reason, std::string("census '") + census.to_text() +
                                            "' violates restriction (" +
                                            reason_letter(inf->reason) + ")");
  }
  return std::get<Feasible>(v).n;
}

}  // namespace sd
