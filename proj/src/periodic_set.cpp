#include "chainorder/periodic_set.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chainorder {

IndexRange::IndexRange(std::int64_t lo_, std::int64_t hi_) : lo(lo_), hi(hi_) {
  if (lo < 1 || hi < lo || hi > lo + 1)
    throw std::invalid_argument("IndexRange: need 1 <= lo <= hi <= lo + 1, got {" +
                                std::to_string(lo) + "," + std::to_string(hi) + "}");
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

EventuallyPeriodicSet::EventuallyPeriodicSet(std::vector<bool> prefix, std::vector<bool> pattern)
    : prefix_(std::move(prefix)), pattern_(std::move(pattern)) {
  if (pattern_.empty()) throw std::invalid_argument("EventuallyPeriodicSet: empty pattern");
  normalize();
}

void EventuallyPeriodicSet::normalize() {
  // shortest period
  const std::size_t m = pattern_.size();
  for (std::size_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < m && ok; ++i) ok = pattern_[i] == pattern_[i - d];
    if (ok) {
      pattern_.resize(d);
      break;
    }
  }
  // absorb prefix elements that already follow the periodic continuation
  while (!prefix_.empty() && prefix_.back() == pattern_.back()) {
    std::rotate(pattern_.rbegin(), pattern_.rbegin() + 1, pattern_.rend());
    prefix_.pop_back();
  }
}

EventuallyPeriodicSet EventuallyPeriodicSet::empty() { return {{}, {false}}; }
EventuallyPeriodicSet EventuallyPeriodicSet::all() { return {{}, {true}}; }

EventuallyPeriodicSet EventuallyPeriodicSet::cofinite_from(std::uint64_t start) {
  return {std::vector<bool>(start, false), {true}};
}

EventuallyPeriodicSet EventuallyPeriodicSet::residue_class(std::uint64_t modulus,
                                                           std::uint64_t residue) {
  if (modulus == 0) throw std::invalid_argument("residue_class: zero modulus");
  std::vector<bool> pattern(modulus, false);
  pattern[residue % modulus] = true;
  return {{}, std::move(pattern)};
}

EventuallyPeriodicSet EventuallyPeriodicSet::finite(const std::vector<std::uint64_t>& members) {
  std::uint64_t top = 0;
  for (auto m : members) top = std::max(top, m + 1);
  std::vector<bool> prefix(top, false);
  for (auto m : members) prefix[m] = true;
  return {std::move(prefix), {false}};
}

bool EventuallyPeriodicSet::contains(std::uint64_t n) const {
  if (n < prefix_.size()) return prefix_[n];
  return pattern_[(n - prefix_.size()) % pattern_.size()];
}

EventuallyPeriodicSet EventuallyPeriodicSet::complement() const {
  std::vector<bool> p(prefix_.size()), q(pattern_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = !prefix_[i];
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = !pattern_[i];
  return {std::move(p), std::move(q)};
}

namespace {

template <class Op>
EventuallyPeriodicSet combine(const EventuallyPeriodicSet& a, const EventuallyPeriodicSet& b,
                              Op op) {
  const std::size_t pre = std::max(a.prefix().size(), b.prefix().size());
  const std::size_t per = std::lcm(a.period(), b.period());
  std::vector<bool> prefix(pre), pattern(per);
  for (std::size_t n = 0; n < pre; ++n) prefix[n] = op(a.contains(n), b.contains(n));
  for (std::size_t i = 0; i < per; ++i) pattern[i] = op(a.contains(pre + i), b.contains(pre + i));
  return {std::move(prefix), std::move(pattern)};
}

}  // namespace

EventuallyPeriodicSet EventuallyPeriodicSet::unite(const EventuallyPeriodicSet& o) const {
  return combine(*this, o, [](bool x, bool y) { return x || y; });
}

EventuallyPeriodicSet EventuallyPeriodicSet::intersect(const EventuallyPeriodicSet& o) const {
  return combine(*this, o, [](bool x, bool y) { return x && y; });
}

bool EventuallyPeriodicSet::is_subset_of(const EventuallyPeriodicSet& o) const {
  return intersect(o.complement()) == empty();
}

EventuallyPeriodicSet EventuallyPeriodicSet::shifted_down(std::uint64_t k) const {
  const std::size_t pre = prefix_.size() > k ? prefix_.size() - k : 0;
  std::vector<bool> prefix(pre), pattern(pattern_.size());
  for (std::size_t n = 0; n < pre; ++n) prefix[n] = contains(n + k);
  for (std::size_t i = 0; i < pattern.size(); ++i) pattern[i] = contains(pre + k + i);
  return {std::move(prefix), std::move(pattern)};
}

EventuallyPeriodicSet EventuallyPeriodicSet::with(std::uint64_t n, bool member) const {
  const std::size_t pre = std::max<std::size_t>(prefix_.size(), n + 1);
  std::vector<bool> prefix(pre), pattern(pattern_.size());
  for (std::size_t j = 0; j < pre; ++j) prefix[j] = contains(j);
  for (std::size_t i = 0; i < pattern.size(); ++i) pattern[i] = contains(pre + i);
  prefix[n] = member;
  return {std::move(prefix), std::move(pattern)};
}

bool EventuallyPeriodicSet::is_finite() const {
  return pattern_.size() == 1 && !pattern_[0];
}

bool EventuallyPeriodicSet::is_cofinite() const {
  return pattern_.size() == 1 && pattern_[0];
}

std::optional<std::uint64_t> EventuallyPeriodicSet::stable_from() const {
  if (pattern_.size() != 1) return std::nullopt;
  return prefix_.size();  // normalized: last prefix bit differs from the tail
}

std::string EventuallyPeriodicSet::bits() const {
  std::string s;
  for (bool b : prefix_) s += b ? '1' : '0';
  s += '/';
  for (bool b : pattern_) s += b ? '1' : '0';
  return s;
}

EventuallyPeriodicSet EventuallyPeriodicSet::parse_bits(const std::string& text) {
  const auto to_bits = [&](const std::string& s) {
    std::vector<bool> v;
    for (char c : s) {
      if (c != '0' && c != '1')
        throw std::invalid_argument("EventuallyPeriodicSet: bad bit string '" + text + "'");
      v.push_back(c == '1');
    }
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return {to_bits(text), {false}};
  auto pattern = to_bits(text.substr(slash + 1));
  if (pattern.empty()) throw std::invalid_argument("EventuallyPeriodicSet: empty pattern");
  return {to_bits(text.substr(0, slash)), std::move(pattern)};
}

}  // namespace chainorder
