#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "catalog_model.hpp"
#include "chainorder/catalog.hpp"

namespace chainorder {

namespace {

using detail::t_strand_param;
using detail::t_sweep_end;

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

// 2/pi > 7/11, so x(s) = 2/(pi s) > (7/11)/s
Rational x_lower(const Rational& s) { return Rational(7, 11) / s; }

// Lower bound on the distance between a point at height offset h above the
// graph of sin(1/x) and the graph itself, when both lie in x >= x_lo / 2.
Rational offset_gap(const Rational& h, const Rational& x_lo) {
  return h / (Rational(1) + Rational(4) / (x_lo * x_lo));
}

// Largest strand parameter visited by T3 on [r1, r2].
Rational t_max_strand(const Rational& r1, const Rational& r2) {
  const std::int64_t j_hi = (Rational(1) / r1).floor().get_si();
  const std::int64_t j_lo = (Rational(1) / r2).floor().get_si();
  Rational best(3);
  for (std::int64_t j = j_lo; j <= j_hi + 1; ++j) best = max(best, t_sweep_end(j));
  return best;
}

Rational gap_outside(const Rational& v, const Rational& lo, const Rational& hi,
                     const std::string& what) {
  if (lo <= v && v <= hi) fail("no separating arc: " + what + " lies between x and y");
  return v < lo ? lo - v : v - hi;
}

// S2 outer arc: (0,1) down to (0,-1), left to (-1,-1), up to (-1,1).
Rational outer_param(const CatalogPoint& p) {
  if (p.kind == PointKind::Limit) return Rational(1) - p.param;
  if (p.kind == PointKind::Bottom) return Rational(2) - p.param;
  return Rational(4) + p.param;
}

std::array<Rational, 2> outer_xy(const CatalogPoint& p) {
  if (p.kind == PointKind::Limit) return {Rational(0), p.param};
  if (p.kind == PointKind::Bottom) return {p.param, Rational(-1)};
  return {Rational(-1), p.param};
}

// Chebyshev distance (a lower bound for the Euclidean one) from q to the
// outer-arc portion u in [u1, u2].
Rational outer_distance(const std::array<Rational, 2>& q, const Rational& u1, const Rational& u2) {
  struct Seg { Rational a, b; int kind; };  // param range and segment kind
  const Seg segs[3] = {{0, 2, 0}, {2, 3, 1}, {3, 5, 2}};
  std::optional<Rational> best;
  for (const auto& s : segs) {
    const Rational lo = max(s.a, u1), hi = min(s.b, u2);
    if (hi < lo) continue;
    Rational dx, dy;
    const auto clamp_gap = [](const Rational& v, Rational a, Rational b) {
      if (b < a) std::swap(a, b);
      return v < a ? a - v : (v > b ? v - b : Rational(0));
    };
    if (s.kind == 0) {  // x = 0, y = 1 - u
      dx = q[0].abs();
      dy = clamp_gap(q[1], Rational(1) - lo, Rational(1) - hi);
    } else if (s.kind == 1) {  // y = -1, x = 2 - u
      dx = clamp_gap(q[0], Rational(2) - lo, Rational(2) - hi);
      dy = (q[1] + Rational(1)).abs();
    } else {  // x = -1, y = u - 4
      dx = (q[0] + Rational(1)).abs();
      dy = clamp_gap(q[1], lo - Rational(4), hi - Rational(4));
    }
    const Rational d = max(dx, dy);
    if (!best || d < *best) best = d;
  }
  return *best;
}

// Distance from a sine-strand arc s in [s1, s2] to a point off it.
Rational sine_arc_gap(const Rational& s1, const Rational& s2, const CatalogPoint& z) {
  switch (z.kind) {
    case PointKind::Sine: {
      const Rational g = gap_outside(z.param, s1, s2, z.str());
      const Rational near = z.param < s1 ? s1 : s2;
      return Rational(7, 11) * g / (z.param * near);
    }
    case PointKind::Limit:
    case PointKind::Bottom:
    case PointKind::Left: return x_lower(s2);
    case PointKind::T3: {
      const Rational sz = t_strand_param(z.param);
      if (sz > Rational(2) * s2) return x_lower(s2) / Rational(2);
      return offset_gap(z.param / Rational(4), x_lower(s2));
    }
    default: fail("point " + z.str() + " is not in the space");
  }
}

Rational t3_arc_gap(const Rational& r1, const Rational& r2, const CatalogPoint& z) {
  const Rational smax = t_max_strand(r1, r2);
  switch (z.kind) {
    case PointKind::Limit: return x_lower(smax);
    case PointKind::Sine:
      if (z.param > Rational(2) * smax) return x_lower(smax) / Rational(2);
      return offset_gap(r1 / Rational(4), x_lower(smax));
    case PointKind::T3: {
      const Rational g = gap_outside(z.param, r1, r2, z.str());
      const Rational s_all = max(smax, t_strand_param(z.param));
      return offset_gap(g / Rational(4), x_lower(s_all));
    }
    default: fail("point " + z.str() + " is not in T");
  }
}

Rational s3_x(const CatalogPoint& p) {
  switch (p.kind) {
    case PointKind::Interval: return Rational(1, p.index);
    case PointKind::Oscillation: return p.param;
    default: return Rational(0);
  }
}

}  // namespace

SeparationData separation_data(SpaceId space, const CatalogPoint& x, const CatalogPoint& y,
                               const CatalogPoint& z) {
  const std::string cx = component_of(space, x), cy = component_of(space, y);
  const std::string cz = component_of(space, z);
  if (cx != cy) fail("x and y lie in different arc components (" + cx + ", " + cy + ")");
  const Rational a = min(x.param, y.param), b = max(x.param, y.param);
  std::string m;
  Rational d;
  switch (space) {
    case SpaceId::Arc:
      m = "arc[" + a.str() + "," + b.str() + "]";
      d = gap_outside(z.param, a, b, z.str());
      break;
    case SpaceId::S1:
    case SpaceId::S2:
    case SpaceId::T:
      if (x.kind == PointKind::Sine) {
        m = "sine[" + a.str() + "," + b.str() + "]";
        d = sine_arc_gap(a, b, z);
      } else if (x.kind == PointKind::T3) {
        m = "t3[" + a.str() + "," + b.str() + "]";
        d = t3_arc_gap(a, b, z);
      } else if (space == SpaceId::S2) {
        const Rational u1 = min(outer_param(x), outer_param(y)),
                       u2 = max(outer_param(x), outer_param(y));
        m = "outer[" + u1.str() + "," + u2.str() + "]";
        if (z.kind == PointKind::Sine) {
          d = x_lower(z.param);
        } else {
          gap_outside(outer_param(z), u1, u2, z.str());
          d = outer_distance(outer_xy(z), u1, u2);
        }
      } else {
        m = "limit[" + a.str() + "," + b.str() + "]";
        if (z.kind == PointKind::Limit) d = gap_outside(z.param, a, b, z.str());
        else if (z.kind == PointKind::Sine) d = x_lower(z.param);
        else d = x_lower(t_strand_param(z.param));
      }
      break;
    case SpaceId::S3: {
      if (x.kind == PointKind::Interval) {
        m = cx + "[" + a.str() + "," + b.str() + "]";
        if (cz == cx) d = gap_outside(z.param, a, b, z.str());
        else d = (s3_x(z) - Rational(1, x.index)).abs();
      } else if (x.kind == PointKind::Oscillation) {
        m = cx + "[" + a.str() + "," + b.str() + "]";
        d = gap_outside(s3_x(z), a, b, z.str());
      } else {
        m = "origin";
        d = s3_x(z);
      }
      break;
    }
  }
  if (!(d > Rational(0))) fail("no positive separation for " + z.str());
  return {m, d, d / Rational(2)};
}

// ---------------------------------------------------------------- validator

namespace {

struct Sample {
  CatalogPoint point;
  std::vector<std::array<double, 2>> plane;  // plane points this sample stands for
};

double sine_x(double s) { return 2.0 / (M_PI * s); }

// The strand point sitting at key value `key` of the given piece, with the
// plane points of the space it represents inside its link.
Sample sample_at(SpaceId space, const std::string& piece, const Rational& key, std::uint64_t n,
                 const std::string& variant) {
  const double k = key.to_double();
  switch (space) {
    case SpaceId::Arc: return {CatalogPoint::arc(key), {{k, 0}}};
    case SpaceId::S1:
    case SpaceId::S2:
    case SpaceId::T: {
      const bool top = space == SpaceId::S2 || variant == "D" || variant == "E";
      const std::int64_t cut = space == SpaceId::T ? (variant == "D" ? 4 * n + 3 : 4 * n + 1)
                                                   : (top ? 4 * n + 1 : 4 * n + 3);
      if (piece == "walk") return {CatalogPoint::sine(key), {{sine_x(k), std::sin(M_PI * k / 2)}}};
      if (piece == "slab")
        return {CatalogPoint::limit(key), {{0, k}, {sine_x(static_cast<double>(cut)), k}}};
      if (piece == "bottom") return {CatalogPoint::bottom(key), {{k, -1}}};
      if (piece == "left") return {CatalogPoint::left(key), {{-1, k}}};
      // core: invert the path length
      std::int64_t j = 1;
      while (detail::t_path_before(j + 1) < key) ++j;
      const Rational span = (t_sweep_end(j + 1) - t_sweep_end(j)).abs();
      const Rational lambda = (key - detail::t_path_before(j)) / span;
      const Rational r = Rational(1, j) - lambda / Rational(j * (j + 1));
      const double s = t_strand_param(r).to_double();
      return {CatalogPoint::t3(r), {{sine_x(s), std::sin(M_PI * s / 2) + r.to_double() / 4}}};
    }
    case SpaceId::S3: {
      const Rational delta = detail::s3_delta(n);
      if (piece.rfind("slabI", 0) == 0) {
        const std::int64_t i = std::stoll(piece.substr(5));
        const double xi = 1.0 / static_cast<double>(i), dd = delta.to_double();
        return {CatalogPoint::interval(i, key), {{xi - dd, k}, {xi + dd, k}}};
      }
      if (piece.rfind("walkA", 0) == 0) {
        const std::int64_t i = std::stoll(piece.substr(5));
        return {CatalogPoint::oscillation(i, key), {{k, detail::s3_height(i, k)}}};
      }
      // tail: vertical strip; heights there never exceed x
      CatalogPoint p = CatalogPoint::origin();
      if (key > Rational(0)) {
        const std::int64_t j = (Rational(1) / key).floor().get_si();
        p = key == Rational(1, j) ? CatalogPoint::interval(j, 0) : CatalogPoint::oscillation(j, key);
      }
      return {p, {{k, 0}, {k, k}}};
    }
  }
  return {CatalogPoint::origin(), {}};
}

}  // namespace

ValidationReport validate_level(SpaceId space, const std::string& variant, std::uint64_t n,
                                unsigned samples_per_link) {
  ValidationReport rep;
  const auto seq = family(space, variant);
  const auto level = seq.level(n);
  // the geometry follows the unreversed layout; reversal only renumbers
  std::string base = variant;
  bool rev = false;
  if ((space == SpaceId::Arc || space == SpaceId::S2) && variant == "reversed") base = "standard", rev = true;
  if (space == SpaceId::S1 && (variant == "E" || variant == "E'")) base = variant == "E" ? "D" : "D'", rev = true;
  if (space == SpaceId::T && variant == "E") base = "C", rev = true;
  const auto model = detail::make_model(space, base);
  const auto layout = model->layout(n);
  const double mesh = level.mesh_bound.to_double();

  std::int64_t offset = 0;
  for (const auto& piece : layout.pieces) {
    const std::int64_t kp = piece.links;
    const std::int64_t stride = std::max<std::int64_t>(1, kp / 256);
    IndexRange prev{1, 1};
    bool has_prev = false;
    for (std::int64_t l = 1; l <= kp; l += stride) {
      const double ulo = std::max(0.0, (static_cast<double>(l) - 1.25) / static_cast<double>(kp));
      const double uhi = std::min(1.0, (static_cast<double>(l) + 0.25) / static_cast<double>(kp));
      std::vector<std::array<double, 2>> pts;
      for (unsigned t = 0; t < samples_per_link; ++t) {
        const double u = ulo + (uhi - ulo) * (t + 0.5) / samples_per_link;
        const Rational ur = Rational::from_double(u);
        const Rational lam = piece.ascending ? ur : Rational(1) - ur;
        const Rational key = piece.lo + lam * (piece.hi - piece.lo);
        Sample s = sample_at(space, piece.id, key, n, base);
        ++rep.samples;
        IndexRange r = level.index(s.point);
        if (rev) r = reverse_range(r, level.k);
        const std::int64_t want = offset + l;
        if (!r.contains(want)) {
          rep.ok = false;
          rep.problems.push_back(piece.id + ": " + s.point.str() + " misses link " +
                                 std::to_string(want));
        }
        if (has_prev && (r.lo < prev.lo || r.hi < prev.hi || r.lo > prev.hi + 1)) {
          rep.ok = false;
          rep.problems.push_back(piece.id + ": non-monotone step at " + s.point.str());
        }
        prev = r;
        has_prev = true;
        pts.insert(pts.end(), s.plane.begin(), s.plane.end());
      }
      if (stride > 1) has_prev = false;
      double diam = 0;
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
          diam = std::max(diam, std::hypot(pts[i][0] - pts[j][0], pts[i][1] - pts[j][1]));
      rep.max_sampled_diameter = std::max(rep.max_sampled_diameter, diam);
      if (diam > mesh + 1e-12) {
        rep.ok = false;
        rep.problems.push_back(piece.id + ": link " + std::to_string(offset + l) +
                               " sampled diameter " + std::to_string(diam) + " exceeds mesh " +
                               std::to_string(mesh));
      }
    }
    offset += kp;
  }
  if (offset != level.k) {
    rep.ok = false;
    rep.problems.push_back("piece link counts do not add up to k");
  }
  return rep;
}

// ---------------------------------------------------------------- S2 patterns

int s2_pattern(Relation left_bottom_vs_top, Relation sine7_vs_sine3) {
  const bool lt = left_bottom_vs_top == Relation::LT;
  const bool gt = sine7_vs_sine3 == Relation::GT;
  if (lt && gt) return 1;
  if (lt) return 2;
  if (gt) return 3;
  return 4;
}

std::vector<S2Arrangement> s2_admissible_arrangements() {
  // ends: 0 = the piece's low end, 1 = its high end
  //   walk: s = 3 | s_n     slab: y = -1 | y = 1
  //   bottom: x = -1 | x = 0    left: y = -1 | y = 1
  const std::vector<std::string> ids{"walk", "slab", "bottom", "left"};
  using End = std::pair<std::string, int>;
  const std::vector<std::pair<End, End>> joins{
      {{"walk", 1}, {"slab", 1}}, {{"walk", 1}, {"slab", 0}},
      {{"slab", 0}, {"bottom", 1}}, {{"bottom", 0}, {"left", 0}}};
  const auto joined = [&](const End& a, const End& b) {
    for (const auto& [p, q] : joins)
      if ((p == a && q == b) || (p == b && q == a)) return true;
    return false;
  };
  std::vector<S2Arrangement> out;
  std::vector<int> perm{0, 1, 2, 3};
  do {
    for (int mask = 0; mask < 16; ++mask) {
      std::vector<std::string> order;
      std::vector<bool> asc;
      for (int i : perm) {
        order.push_back(ids[i]);
        asc.push_back((mask >> i) & 1);
      }
      bool ok = true;
      std::vector<std::pair<End, End>> used;
      for (std::size_t i = 0; i + 1 < order.size() && ok; ++i) {
        const End out_end{order[i], asc[i] ? 1 : 0};
        const End in_end{order[i + 1], asc[i + 1] ? 0 : 1};
        ok = joined(out_end, in_end);
      }
      if (!ok) continue;
      // the outer arc is connected at slab-bottom and bottom-left, and the
      // walk must meet the slab: every one of these joins is a consecutive pair
      const auto pos = [&](const std::string& id) {
        return std::find(order.begin(), order.end(), id) - order.begin();
      };
      const auto adjacent = [&](const std::string& a, const std::string& b) {
        return std::abs(pos(a) - pos(b)) == 1;
      };
      if (!adjacent("slab", "bottom") || !adjacent("bottom", "left") || !adjacent("walk", "slab"))
        continue;
      const bool left_asc = asc[pos("left")], walk_asc = asc[pos("walk")];
      const Relation left_rel = left_asc ? Relation::LT : Relation::GT;
      const Relation sine_rel = walk_asc ? Relation::GT : Relation::LT;
      out.push_back({order, asc, s2_pattern(left_rel, sine_rel)});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<CatalogEntry> catalog_list() {
  return {
      {SpaceId::Arc, "the arc [0,1]", variants(SpaceId::Arc), {"arc:1/4 vs arc:3/4"}},
      {SpaceId::S1, "Warsaw sine curve: sin(1/x) on (0, 2/(3 pi)] with its limit interval",
       variants(SpaceId::S1), {"limit:1 vs limit:-1", "sine:7 vs sine:3"}},
      {SpaceId::S2, "S1 with [-1,0]x{-1} and {-1}x[-1,1] attached", variants(SpaceId::S2),
       {"left:-1 vs left:1", "sine:7 vs sine:3"}},
      {SpaceId::S3, "intervals I_n = {1/n}x[0,1/n] joined by oscillating arcs A_n, plus (0,0)",
       variants(SpaceId::S3), {"I<i>:0 vs I<i>:1/i"}},
      {SpaceId::T, "S1 with its limit interval replaced by a winding ray T3",
       variants(SpaceId::T), {"t3:1/2 vs limit:0 vs sine:5"}},
  };
}

}  // namespace chainorder
