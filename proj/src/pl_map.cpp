#include "chainorder/pl_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace chainorder {

namespace {

bool in_unit(const Rational& t) { return Rational(0) <= t && t <= Rational(1); }

void sort_unique(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

PLMap::PLMap(std::vector<Rational> breakpoints, std::vector<Rational> values)
    : breaks_(std::move(breakpoints)), values_(std::move(values)) {
  if (breaks_.size() < 2 || breaks_.size() != values_.size())
    throw std::invalid_argument("PLMap: need at least two breakpoints and one value each");
  if (breaks_.front() != Rational(0) || breaks_.back() != Rational(1))
    throw std::invalid_argument("PLMap: breakpoints must start at 0 and end at 1");
  for (std::size_t i = 1; i < breaks_.size(); ++i)
    if (!(breaks_[i - 1] < breaks_[i]))
      throw std::invalid_argument("PLMap: breakpoints must be strictly increasing");
  for (const auto& v : values_)
    if (!in_unit(v)) throw std::invalid_argument("PLMap: value " + v.str() + " outside [0,1]");
}

PLMap PLMap::tent() { return PLMap({0, Rational(1, 2), 1}, {0, 1, 0}); }
PLMap PLMap::identity() { return PLMap({0, 1}, {0, 1}); }

std::size_t PLMap::segment_of(const Rational& t) const {
  // first breakpoint strictly greater than t, minus one, clamped to the last segment
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
  std::size_t j = static_cast<std::size_t>(it - breaks_.begin());
  if (j == 0) j = 1;
  if (j >= breaks_.size()) j = breaks_.size() - 1;
  return j - 1;
}

Rational PLMap::eval(const Rational& t) const {
  if (!in_unit(t)) throw std::domain_error("PLMap::eval: t = " + t.str() + " outside [0,1]");
  const std::size_t j = segment_of(t);
  const Rational& a = breaks_[j];
  const Rational& b = breaks_[j + 1];
  return values_[j] + (values_[j + 1] - values_[j]) * (t - a) / (b - a);
}

std::vector<Rational> PLMap::preimages(const Rational& y) const {
  std::vector<Rational> out;
  for (std::size_t j = 0; j + 1 < breaks_.size(); ++j) {
    const Rational& u = values_[j];
    const Rational& v = values_[j + 1];
    if (u == v) {
      if (u == y)
        throw std::domain_error("PLMap::preimages: segment [" + breaks_[j].str() + "," +
                                breaks_[j + 1].str() + "] is constant at " + y.str());
      continue;
    }
    if (y < min(u, v) || y > max(u, v)) continue;
    out.push_back(breaks_[j] + (breaks_[j + 1] - breaks_[j]) * (y - u) / (v - u));
  }
  sort_unique(out);
  return out;
}

Rational PLMap::lipschitz() const {
  Rational best(0);
  for (std::size_t j = 0; j + 1 < breaks_.size(); ++j) {
    Rational slope = ((values_[j + 1] - values_[j]) / (breaks_[j + 1] - breaks_[j])).abs();
    if (slope > best) best = slope;
  }
  return best;
}

PLMap compose(const PLMap& f, const PLMap& g) {
  std::vector<Rational> pts = g.breakpoints();
  // points where g crosses a breakpoint of f; constant segments of g sitting
  // on such a breakpoint add nothing new
  for (const auto& b : f.breakpoints()) {
    const auto& gb = g.breakpoints();
    const auto& gv = g.values();
    for (std::size_t j = 0; j + 1 < gb.size(); ++j) {
      const Rational& u = gv[j];
      const Rational& v = gv[j + 1];
      if (u == v || b < min(u, v) || b > max(u, v)) continue;
      pts.push_back(gb[j] + (gb[j + 1] - gb[j]) * (b - u) / (v - u));
    }
  }
  sort_unique(pts);
  std::vector<Rational> vals;
  vals.reserve(pts.size());
  for (const auto& t : pts) vals.push_back(f.eval(g.eval(t)));
  return PLMap(std::move(pts), std::move(vals));
}

std::vector<Rational> iterated_preimage_set(const PLMap& f, const Rational& seed, unsigned i) {
  std::vector<Rational> level{seed};
  for (unsigned step = 0; step < i; ++step) {
    std::vector<Rational> next;
    for (const auto& y : level) {
      auto pre = f.preimages(y);
      next.insert(next.end(), pre.begin(), pre.end());
    }
    sort_unique(next);
    level = std::move(next);
  }
  return level;
}

}  // namespace chainorder
