#include "chainorder/orientation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace chainorder {

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

Parity parse_parity(const std::string& text) {
  if (text == "even") return Parity::Even;
  if (text == "odd") return Parity::Odd;
  throw std::invalid_argument("parity must be even or odd, got '" + text + "'");
}

BinaryWord parse_word(const std::string& text) {
  BinaryWord w;
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("not a binary word: '" + text + "'");
    w.push_back(c == '1');
  }
  return w;
}

std::string to_string(const BinaryWord& w) {
  std::string s;
  for (bool b : w) s += b ? '1' : '0';
  return s;
}

BinaryWord flip(std::uint64_t n, const BinaryWord& w) {
  if (n >= w.size())
    throw std::invalid_argument("flip: index " + std::to_string(n) + " out of range for length " +
                                std::to_string(w.size()));
  BinaryWord out = w;
  for (std::size_t k = n; k < out.size(); ++k) out[k] = !out[k];
  return out;
}

bool in_A_n(std::uint64_t n, const BinaryWord& w) {
  if (w.size() < n) throw std::invalid_argument("in_A_n: word shorter than n");
  if (n == 0) return true;
  for (std::uint64_t k = 0; k + 1 < n; ++k)
    if (w[k]) return false;
  return w[n - 1];
}

BinaryWord apply_composition(const Composition& c, BinaryWord w) {
  for (auto it = c.rbegin(); it != c.rend(); ++it) w = flip(*it, w);
  return w;
}

std::vector<BinaryWord> cylinder(const BinaryWord& prefix, std::uint64_t depth) {
  if (depth < prefix.size()) throw std::invalid_argument("cylinder: depth below prefix length");
  const std::uint64_t free = depth - prefix.size();
  if (free > 24) throw std::invalid_argument("cylinder: too many words");
  std::vector<BinaryWord> out;
  for (std::uint64_t m = 0; m < (1ULL << free); ++m) {
    BinaryWord w = prefix;
    for (std::uint64_t j = 0; j < free; ++j) w.push_back((m >> j) & 1);
    out.push_back(std::move(w));
  }
  return out;
}

Composition decompose_on_cylinder(std::uint64_t n, const BinaryWord& s) {
  if (s.size() != n) throw std::invalid_argument("decompose_on_cylinder: |s| must equal n");
  // flips g_1 < ... < g_m turn s into 0^(n-1) 1: flip where the difference changes
  Composition g;
  bool prev = false;
  for (std::uint64_t k = 0; k < n; ++k) {
    const bool d = s[k] != (k + 1 == n);
    if (d != prev) g.push_back(k);
    prev = d;
  }
  Composition c = g;
  c.push_back(n);
  c.insert(c.end(), g.rbegin(), g.rend());
  return c;
}

Parity composition_parity(const Composition& c) {
  return c.size() % 2 == 0 ? Parity::Even : Parity::Odd;
}

namespace {

bool extends(const BinaryWord& w, const BinaryWord& prefix) {
  return w.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), w.begin());
}

// Flips commute, so an index set of size m is searched once, as a sorted list.
std::vector<ReachResult> search(const BinaryWord& s, const BinaryWord& target, Parity parity,
                                std::uint64_t len, std::uint64_t max_size) {
  for (std::uint64_t size = parity == Parity::Even ? 0 : 1; size <= max_size; size += 2) {
    if (size > len + 1) break;
    // combinations of {0..len}, lexicographic
    std::vector<bool> pick(len + 1, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      Composition c;
      for (std::uint64_t i = 0; i <= len; ++i)
        if (pick[i]) c.push_back(i);
      // on prefixes of length len, index len only touches the tail
      BinaryWord t = target;
      t.push_back(false);
      BinaryWord src = apply_composition(c, t);
      src.pop_back();
      if (extends(src, s)) return {{c, src, target}};
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return {};
}

}  // namespace

std::vector<ReachResult> reach_with_parity(const BinaryWord& s, const BinaryWord& target,
                                           Parity parity, std::uint64_t depth) {
  const std::uint64_t len = std::max(s.size(), target.size());
  if (depth < len + 2)
    throw std::invalid_argument("reach_with_parity: depth must be >= max(|s|, |target|) + 2");
  const std::uint64_t bound = 2 * (target.size() + 2);
  std::vector<BinaryWord> targets{target};
  if (target.size() < len) targets = cylinder(target, len);
  std::vector<ReachResult> out;
  for (const auto& t : targets) {
    auto r = search(s, t, parity, len, bound);
    if (r.empty())
      throw std::runtime_error("reach_with_parity: search bound " + std::to_string(bound) +
                               " exceeded for target " + to_string(t));
    out.push_back(std::move(r.front()));
  }
  return out;
}

bool maps_cylinder_onto(const Composition& c, const BinaryWord& source, const BinaryWord& image,
                        std::uint64_t depth) {
  if (source.size() != image.size()) return false;
  std::set<BinaryWord> seen;
  for (const auto& w : cylinder(source, depth)) {
    BinaryWord v = apply_composition(c, w);
    if (!extends(v, image)) return false;
    seen.insert(std::move(v));
  }
  return seen.size() == (1ULL << (depth - image.size()));
}

bool agrees_with_flip(const Composition& c, std::uint64_t n, const BinaryWord& s,
                      std::uint64_t depth) {
  for (const auto& w : cylinder(s, depth))
    if (apply_composition(c, w) != flip(n, w)) return false;
  return true;
}

}  // namespace chainorder
