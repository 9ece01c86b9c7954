#include "chainorder/ultrafilter.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chainorder {

namespace {

std::uint64_t parse_u64(const std::string& s, const std::string& whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("ultrafilter tower: bad number '" + s + "' in '" + whole + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

}  // namespace

SimulatedUltrafilter::SimulatedUltrafilter(std::vector<std::uint64_t> moduli,
                                           std::vector<std::uint64_t> residues)
    : moduli_(std::move(moduli)), residues_(std::move(residues)) {
  if (moduli_.empty() || moduli_.size() != residues_.size() || moduli_[0] != 1 ||
      residues_[0] != 0)
    throw std::invalid_argument("ultrafilter tower must start with modulus 1, residue 0");
  for (std::size_t i = 1; i < moduli_.size(); ++i) {
    if (moduli_[i] == 0 || moduli_[i] % moduli_[i - 1] != 0)
      throw std::invalid_argument("ultrafilter tower: moduli must form a divisor chain");
    if (residues_[i] >= moduli_[i] || residues_[i] % moduli_[i - 1] != residues_[i - 1])
      throw std::invalid_argument("ultrafilter tower: incompatible residue " +
                                  std::to_string(residues_[i]) + " at modulus " +
                                  std::to_string(moduli_[i]));
  }
}

SimulatedUltrafilter SimulatedUltrafilter::powers_of_two(unsigned k, std::uint64_t residue) {
  if (k > 62) throw std::invalid_argument("powers_of_two: k too large");
  std::vector<std::uint64_t> m{1}, r{0};
  for (unsigned j = 1; j <= k; ++j) {
    m.push_back(std::uint64_t{1} << j);
    r.push_back(residue % m.back());
  }
  return {std::move(m), std::move(r)};
}

SimulatedUltrafilter SimulatedUltrafilter::factorial(unsigned k, std::uint64_t residue) {
  if (k > 20) throw std::invalid_argument("factorial: k too large");
  std::vector<std::uint64_t> m{1}, r{0};
  std::uint64_t f = 1;
  for (unsigned j = 2; j <= k; ++j) {
    f *= j;
    m.push_back(f);
    r.push_back(residue % f);
  }
  return {std::move(m), std::move(r)};
}

SimulatedUltrafilter SimulatedUltrafilter::parse(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() == 3 && (parts[0] == "pow2" || parts[0] == "fact")) {
    const auto k = static_cast<unsigned>(parse_u64(parts[1], text));
    const auto r = parse_u64(parts[2], text);
    return parts[0] == "pow2" ? powers_of_two(k, r) : factorial(k, r);
  }
  std::vector<std::uint64_t> m{1}, r{0};
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (item.size() < 4 || item[0] != 'r' || eq == std::string::npos)
      throw std::invalid_argument("ultrafilter tower: expected rM=R, got '" + item + "'");
    const auto mod = parse_u64(item.substr(1, eq - 1), text);
    const auto res = parse_u64(item.substr(eq + 1), text);
    if (mod == 1) {
      if (res != 0) throw std::invalid_argument("ultrafilter tower: r1 must be 0");
      continue;
    }
    m.push_back(mod);
    r.push_back(res);
  }
  return {std::move(m), std::move(r)};
}

SimulatedUltrafilter SimulatedUltrafilter::extended_to(std::uint64_t period) const {
  if (moduli_.back() % period == 0) return *this;
  auto m = moduli_;
  auto r = residues_;
  m.push_back(std::lcm(m.back(), period));
  r.push_back(r.back());
  return {std::move(m), std::move(r)};
}

SimulatedUltrafilter::Decision SimulatedUltrafilter::decide(const EventuallyPeriodicSet& s) const {
  const std::uint64_t m = s.period();
  std::uint64_t modulus = 0, residue = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (moduli_[i] % m == 0) {
      modulus = moduli_[i];
      residue = residues_[i];
      break;
    }
  }
  bool extended = false;
  if (modulus == 0) {
    const auto ext = extended_to(m);
    modulus = ext.moduli_.back();
    residue = ext.residues_.back();
    extended = true;
  }
  // progression member n = residue + j*modulus with n >= prefix length
  const std::uint64_t p = s.prefix().size();
  const std::uint64_t phase = ((residue % m) + m - (p % m)) % m;
  return {s.pattern()[phase], extended, modulus};
}

std::string SimulatedUltrafilter::str() const {
  std::string out;
  for (std::size_t i = 1; i < moduli_.size(); ++i) {
    if (!out.empty()) out += ',';
    out += "r" + std::to_string(moduli_[i]) + "=" + std::to_string(residues_[i]);
  }
  return out.empty() ? "r1=0" : out;
}

FilterAxiomReport filter_axiom_check(const SimulatedUltrafilter& u, const EventuallyPeriodicSet& s,
                                     const EventuallyPeriodicSet& t) {
  FilterAxiomReport rep;
  const bool in_s = u.decides(s), in_t = u.decides(t);
  const auto st = s.intersect(t);
  if (in_s && in_t && !u.decides(st)) rep.finite_intersection = false;
  if (u.decides(st) && !(in_s && in_t)) rep.upward_closure = false;
  const auto sut = s.unite(t);
  if ((in_s || in_t) && !u.decides(sut)) rep.upward_closure = false;
  if (s.is_subset_of(t) && in_s && !in_t) rep.upward_closure = false;
  if (u.decides(s.complement()) == in_s) rep.complement_dichotomy = false;
  if (u.decides(t.complement()) == in_t) rep.complement_dichotomy = false;
  for (const auto& x : {s, t}) {
    const auto tail = EventuallyPeriodicSet::cofinite_from(x.prefix().size() + x.period());
    if (!u.decides(tail)) rep.cofinite_membership = false;
    if (x.is_cofinite() && !u.decides(x)) rep.cofinite_membership = false;
    if (x.is_finite() && u.decides(x)) rep.cofinite_membership = false;
  }
  return rep;
}

EventuallyPeriodicSet random_periodic_set(std::mt19937_64& rng, unsigned max_prefix,
                                          unsigned max_period) {
  std::uniform_int_distribution<unsigned> plen(0, max_prefix), per(1, max_period);
  std::bernoulli_distribution bit(0.5);
  std::vector<bool> prefix(plen(rng)), pattern(per(rng));
  for (std::size_t i = 0; i < prefix.size(); ++i) prefix[i] = bit(rng);
  for (std::size_t i = 0; i < pattern.size(); ++i) pattern[i] = bit(rng);
  return {std::move(prefix), std::move(pattern)};
}

}  // namespace chainorder
