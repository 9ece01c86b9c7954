#include "chainorder/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "catalog_model.hpp"

namespace chainorder {
namespace detail {

Key exact_key(Rational r) { return {r, r}; }

Key enclose(double value, double radius) {
  return {Rational::from_double(value - radius), Rational::from_double(value + radius)};
}

std::int64_t checked_links(const mpz_class& k) {
  if (k < 1 || mpz_sizeinbase(k.get_mpz_t(), 2) > 62)
    throw std::overflow_error("chain level has too many links for 64-bit indices");
  return k.get_si();
}

std::int64_t pow2_links(std::uint64_t n) {
  if (n > 62) throw std::overflow_error("chain level has too many links for 64-bit indices");
  return std::int64_t{1} << n;
}

Key sine_height(const Rational& s) {
  if (s.is_integer()) {
    const long m = mpz_class(s.numerator() % 4 + 4).get_si() % 4;
    static const int table[4] = {0, 1, 0, -1};
    return exact_key(Rational(table[m]));
  }
  if ((s * Rational(3)).is_integer()) {
    // angle = pi m / 6
    const long m = mpz_class((s * Rational(3)).numerator() % 12 + 12).get_si() % 12;
    if (m == 1 || m == 5) return exact_key(Rational(1, 2));
    if (m == 7 || m == 11) return exact_key(Rational(-1, 2));
  }
  // s.to_double() carries relative error ~1e-16; the angle error stays far
  // below the radius for the parameter sizes used here
  return enclose(std::sin(M_PI * s.to_double() / 2.0), 1e-9);
}

Rational t_sweep_end(std::int64_t j) { return j % 2 == 1 ? Rational(3) : Rational(4 * j + 1); }

Rational t_path_before(std::int64_t j) {
  Rational total(0);
  for (std::int64_t m = 1; m < j; ++m) total += (t_sweep_end(m + 1) - t_sweep_end(m)).abs();
  return total;
}

namespace {

std::int64_t sweep_of(const Rational& r) {
  return (Rational(1) / r).floor().get_si();
}

}  // namespace

Rational t_strand_param(const Rational& r) {
  const std::int64_t j = sweep_of(r);
  const Rational lambda = (Rational(1, j) - r) * Rational(j * (j + 1));
  return t_sweep_end(j) + lambda * (t_sweep_end(j + 1) - t_sweep_end(j));
}

Rational t_path_length(const Rational& r) {
  const std::int64_t j = sweep_of(r);
  const Rational lambda = (Rational(1, j) - r) * Rational(j * (j + 1));
  return t_path_before(j) + lambda * (t_sweep_end(j + 1) - t_sweep_end(j)).abs();
}

Rational s3_delta(std::uint64_t n) {
  return Rational(1, static_cast<long>(4 * n * (n + 1)));
}

double s3_height(std::int64_t i, double x) {
  const double a = 1.0 / static_cast<double>(i + 1), b = 1.0 / static_cast<double>(i);
  return std::fabs(x * std::sin(1.0 / ((x - a) * (b - x))));
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

Rational pow2_inv(std::uint64_t n) { return Rational::power_of_two(-static_cast<long>(n)); }
Rational half_pow(std::uint64_t n) { return Rational(3) * pow2_inv(n + 1); }  // 3/2^(n+1)

// ---------------------------------------------------------------- arc

class ArcModel : public Model {
 public:
  Layout layout(std::uint64_t n) const override {
    return {{{"arc", pow2_links(n), 0, 1, true}}, half_pow(n)};
  }
  Placement locate(const CatalogPoint& p, std::uint64_t) const override {
    require(p.kind == PointKind::Arc, "arc: point " + p.str() + " is not on the arc");
    return {"arc", exact_key(p.param)};
  }
  std::uint64_t settle_level(const CatalogPoint&) const override { return 1; }
  Rational link_bound(const std::string&, std::uint64_t n) const override { return half_pow(n); }
  SpaceId space() const override { return SpaceId::Arc; }
};

// ---------------------------------------------------------------- S1, S2

// Walk the sine strand from s = 3 to s_n, then cover the rest (the
// accumulation region) by horizontal slabs keyed by height.
class SineModel : public Model {
 public:
  SineModel(SpaceId space, bool top_first) : space_(space), top_(top_first) {}

  std::int64_t cut(std::uint64_t n) const { return top_ ? 4 * n + 1 : 4 * n + 3; }

  Layout layout(std::uint64_t n) const override {
    const std::int64_t s = cut(n);
    Layout out;
    out.pieces.push_back({"walk", checked_links(mpz_class(s - 3) * pow2_links(n)), 3, s, true});
    out.pieces.push_back({"slab", pow2_links(n + 1), -1, 1, !top_});
    if (space_ == SpaceId::S2) {
      out.pieces.push_back({"bottom", pow2_links(n), -1, 0, false});
      out.pieces.push_back({"left", pow2_links(n + 1), -1, 1, true});
    }
    out.mesh = Rational(3) * pow2_inv(n) + Rational(1, s);
    return out;
  }

  Placement locate(const CatalogPoint& p, std::uint64_t n) const override {
    switch (p.kind) {
      case PointKind::Sine:
        if (p.param <= Rational(cut(n))) return {"walk", exact_key(p.param)};
        return {"slab", sine_height(p.param)};
      case PointKind::Limit: return {"slab", exact_key(p.param)};
      case PointKind::Bottom:
        if (space_ == SpaceId::S2) return {"bottom", exact_key(p.param)};
        break;
      case PointKind::Left:
        if (space_ == SpaceId::S2) return {"left", exact_key(p.param)};
        break;
      default: break;
    }
    throw std::invalid_argument(to_string(space_) + ": point " + p.str() + " is not in the space");
  }

  std::uint64_t settle_level(const CatalogPoint& p) const override {
    if (p.kind != PointKind::Sine) return 1;
    std::uint64_t n = 1;
    while (Rational(cut(n)) < p.param) ++n;
    return n;
  }

  Rational link_bound(const std::string&, std::uint64_t n) const override { return half_pow(n); }
  SpaceId space() const override { return space_; }

 private:
  SpaceId space_;
  bool top_;
};

// ---------------------------------------------------------------- S3

class ForestModel : public Model {
 public:
  ForestModel(std::vector<bool> prefix, bool strict) : bits_(std::move(prefix)), strict_(strict) {}

  bool bit(std::int64_t i) const {
    const auto idx = static_cast<std::size_t>(i - 1);
    return idx < bits_.size() ? bits_[idx] : false;
  }

  void check_level(std::uint64_t n) const {
    if (n < 1) throw std::invalid_argument("S3: levels start at 1");
    if (strict_ && n > bits_.size())
      throw std::invalid_argument("S3: prefix of length " + std::to_string(bits_.size()) +
                                  " is too short for level " + std::to_string(n));
  }

  // M_i bounds |g'| for g(x) = 1/((x-a)(b-x)) on the trimmed core
  static Rational slope_bound(std::int64_t i, const Rational& delta) {
    const Rational a(1, i + 1), b(1, i);
    const Rational w = b - a;
    return w / (delta * delta * (w - delta) * (w - delta));
  }

  static Rational walk_bound(std::int64_t i, std::uint64_t n) {
    const Rational b(1, i);
    return Rational(1) /
           (Rational(static_cast<long>(2 * n)) * (Rational(2) + b * slope_bound(i, s3_delta(n))));
  }

  static std::int64_t walk_links(std::int64_t i, std::uint64_t n) {
    const Rational delta = s3_delta(n);
    const Rational range = Rational(1, i) - Rational(1, i + 1) - Rational(2) * delta;
    // smallest power of two k with 3 range / (2k) <= walk_bound
    const Rational need = Rational(3) * range / (Rational(2) * walk_bound(i, n));
    const mpz_class c = need.ceil();
    std::uint64_t e = 0;
    while (mpz_class(1) << e < c) ++e;
    return pow2_links(e);
  }

  Layout layout(std::uint64_t n) const override {
    check_level(n);
    const Rational delta = s3_delta(n);
    const auto nn = static_cast<std::int64_t>(n);
    Layout out;
    for (std::int64_t i = 1; i <= nn; ++i) {
      out.pieces.push_back({"slabI" + std::to_string(i), 4 * nn, 0, Rational(1, i), !bit(i)});
      if (i < nn)
        out.pieces.push_back({"walkA" + std::to_string(i), walk_links(i, n),
                              Rational(1, i + 1) + delta, Rational(1, i) - delta, false});
    }
    const Rational tail_hi = Rational(1, nn) - delta;
    out.pieces.push_back(
        {"tail", checked_links((Rational(3) * tail_hi / delta).ceil()), 0, tail_hi, false});
    out.mesh = Rational(1, nn) - delta / Rational(2);
    return out;
  }

  static Key height_key(std::int64_t i, const Rational& x, const Rational& cap) {
    Key k = enclose(s3_height(i, x.to_double()), 1e-8);
    k.lo = max(Rational(0), min(k.lo, cap));
    k.hi = max(Rational(0), min(k.hi, cap));
    return k;
  }

  Placement locate(const CatalogPoint& p, std::uint64_t n) const override {
    check_level(n);
    const Rational delta = s3_delta(n);
    const auto nn = static_cast<std::int64_t>(n);
    switch (p.kind) {
      case PointKind::Interval:
        if (p.index <= nn) return {"slabI" + std::to_string(p.index), exact_key(p.param)};
        return {"tail", exact_key(Rational(1, p.index))};
      case PointKind::Oscillation: {
        const std::int64_t i = p.index;
        const Rational a(1, i + 1), b(1, i);
        if (i <= nn && p.param >= b - delta)
          return {"slabI" + std::to_string(i), height_key(i, p.param, b)};
        if (i + 1 <= nn && p.param <= a + delta)
          return {"slabI" + std::to_string(i + 1), height_key(i, p.param, a)};
        if (i < nn) return {"walkA" + std::to_string(i), exact_key(p.param)};
        return {"tail", exact_key(p.param)};
      }
      case PointKind::Origin: return {"tail", exact_key(Rational(0))};
      default: break;
    }
    throw std::invalid_argument("S3: point " + p.str() + " is not in the space");
  }

  std::uint64_t settle_level(const CatalogPoint& p) const override {
    switch (p.kind) {
      case PointKind::Interval: return static_cast<std::uint64_t>(p.index);
      case PointKind::Oscillation: {
        const Rational gap =
            min(p.param - Rational(1, p.index + 1), Rational(1, p.index) - p.param);
        auto n = static_cast<std::uint64_t>(p.index + 1);
        while (!(s3_delta(n) < gap)) ++n;
        return n;
      }
      default: return 1;
    }
  }

  Rational link_bound(const std::string& piece, std::uint64_t n) const override {
    if (piece == "tail") return s3_delta(n) / Rational(2);
    const std::int64_t i = std::stoll(piece.substr(5));
    if (piece.rfind("slabI", 0) == 0) return Rational(3, 8 * i * static_cast<long>(n));
    return walk_bound(i, n);
  }

  SpaceId space() const override { return SpaceId::S3; }

 private:
  std::vector<bool> bits_;
  bool strict_;
};

// ---------------------------------------------------------------- T

// T3 sweeps back and forth along the sine strand at height offset r/4. The
// core piece follows T3 by path length down to r = 1/cut; the rest of T3 is
// placed by its shadow on S1.
class TModel : public Model {
 public:
  explicit TModel(bool variant_d) : d_(variant_d) {}

  std::int64_t cut(std::uint64_t n) const { return d_ ? 2 * n + 2 : 2 * n + 1; }
  std::int64_t strand_cut(std::uint64_t n) const { return d_ ? 4 * n + 3 : 4 * n + 1; }

  Layout layout(std::uint64_t n) const override {
    const std::int64_t c = cut(n), s = strand_cut(n);
    const Rational core_len = t_path_before(c);
    Layout out;
    out.pieces.push_back(
        {"core", checked_links(core_len.numerator() * pow2_links(n)), 0, core_len, true});
    Piece slab{"slab", pow2_links(n + 1), -1, 1, false};
    if (d_) {
      out.pieces.push_back(slab);
      out.pieces.push_back(
          {"walk", checked_links(mpz_class(s - 3) * pow2_links(n)), 3, s, false});
    } else {
      out.pieces.push_back(
          {"walk", checked_links(mpz_class(s - 3) * pow2_links(n)), 3, s, true});
      out.pieces.push_back(slab);
    }
    out.mesh = Rational(3) * pow2_inv(n) + Rational(1, s) + Rational(1, 2 * c);
    return out;
  }

  Placement locate(const CatalogPoint& p, std::uint64_t n) const override {
    const Rational s_cut(strand_cut(n));
    switch (p.kind) {
      case PointKind::Limit: return {"slab", exact_key(p.param)};
      case PointKind::Sine:
        if (p.param <= s_cut) return {"walk", exact_key(p.param)};
        return {"slab", sine_height(p.param)};
      case PointKind::T3: {
        if (p.param >= Rational(1, cut(n))) return {"core", exact_key(t_path_length(p.param))};
        const Rational s = t_strand_param(p.param);
        if (s <= s_cut) return {"walk", exact_key(s)};
        Key k = sine_height(s);
        const Rational lift = p.param / Rational(4);
        k.lo = min(Rational(1), k.lo + lift);
        k.hi = min(Rational(1), k.hi + lift);
        return {"slab", k};
      }
      default: break;
    }
    throw std::invalid_argument("T: point " + p.str() + " is not in the space");
  }

  std::uint64_t settle_level(const CatalogPoint& p) const override {
    std::uint64_t n = 1;
    if (p.kind == PointKind::Sine)
      while (Rational(strand_cut(n)) < p.param) ++n;
    if (p.kind == PointKind::T3)
      while (p.param < Rational(1, cut(n))) ++n;
    return n;
  }

  Rational link_bound(const std::string&, std::uint64_t n) const override { return half_pow(n); }
  SpaceId space() const override { return SpaceId::T; }

 private:
  bool d_;
};

// ---------------------------------------------------------------- generic

struct BuiltLevel {
  Layout layout;
  std::map<std::string, std::pair<std::size_t, std::int64_t>> where;  // id -> (position, offset)
  std::int64_t total = 0;
};

BuiltLevel build(const Model& m, std::uint64_t n) {
  BuiltLevel b{m.layout(n), {}, 0};
  for (std::size_t i = 0; i < b.layout.pieces.size(); ++i) {
    const auto& p = b.layout.pieces[i];
    b.where[p.id] = {i, b.total};
    b.total += p.links;
  }
  return b;
}

IndexRange local_range(const Piece& p, const Rational& key) {
  const Rational k = max(p.lo, min(p.hi, key));
  Rational u = (k - p.lo) / (p.hi - p.lo);
  if (!p.ascending) u = Rational(1) - u;
  return IntervalChain(p.links).index_of(u);
}

IndexRange place(const Model& m, const BuiltLevel& b, const CatalogPoint& pt, std::uint64_t n) {
  const Placement pl = m.locate(pt, n);
  const auto it = b.where.find(pl.piece);
  if (it == b.where.end())
    throw std::logic_error("model placed " + pt.str() + " in missing piece " + pl.piece);
  const Piece& piece = b.layout.pieces[it->second.first];
  const IndexRange lo = local_range(piece, pl.key.lo);
  const IndexRange hi = local_range(piece, pl.key.hi);
  if (!(lo == hi))
    throw UncertainPlacement("cannot certify the link of " + pt.str() + " at level " +
                             std::to_string(n));
  const std::int64_t off = it->second.second;
  return IndexRange(off + lo.lo, off + lo.hi);
}

std::optional<OrderCertificate> certify(const Model& m, const ChainSequence<CatalogPoint>& seq,
                                        const CatalogPoint& x, const CatalogPoint& y) {
  if (x == y) {
    return OrderCertificate{EventuallyPeriodicSet::all(), EventuallyPeriodicSet::all(), 1,
                            "identical points"};
  }
  const std::uint64_t n0 = std::max(m.settle_level(x), m.settle_level(y));
  const Placement px = m.locate(x, n0), py = m.locate(y, n0);
  std::uint64_t threshold = n0;
  LevelRelation tail;
  std::string basis;
  if (px.piece != py.piece) {
    const auto b = build(m, n0);
    tail = b.where.at(px.piece).first < b.where.at(py.piece).first ? LevelRelation::LEOnly
                                                                    : LevelRelation::GEOnly;
    basis = "pieces " + px.piece + " / " + py.piece + " fixed from level " + std::to_string(n0);
  } else {
    const bool x_first = px.key.hi < py.key.lo;
    if (!x_first && !(py.key.hi < px.key.lo)) return std::nullopt;
    const Rational gap = x_first ? py.key.lo - px.key.hi : px.key.lo - py.key.hi;
    const std::uint64_t cap = n0 + 256;
    while (!(gap > Rational(2) * m.link_bound(px.piece, threshold))) {
      if (++threshold > cap) return std::nullopt;
    }
    const bool asc = build(m, n0).layout.pieces[build(m, n0).where.at(px.piece).first].ascending;
    tail = (x_first == asc) ? LevelRelation::LEOnly : LevelRelation::GEOnly;
    basis = "key gap " + gap.str() + " exceeds twice the link length in " + px.piece +
            " from level " + std::to_string(threshold);
  }
  std::vector<LevelRelation> head;
  for (std::uint64_t n = 1; n < threshold; ++n) {
    const auto d = seq.level(n);
    head.push_back(level_relation(d.index(x), d.index(y)));
  }
  return stabilized_certificate(head, tail, threshold, basis);
}

}  // namespace

std::shared_ptr<const Model> make_model(SpaceId space, const std::string& variant) {
  switch (space) {
    case SpaceId::Arc: return std::make_shared<ArcModel>();
    case SpaceId::S1: return std::make_shared<SineModel>(SpaceId::S1, variant == "D" || variant == "E");
    case SpaceId::S2: return std::make_shared<SineModel>(SpaceId::S2, true);
    case SpaceId::T: return std::make_shared<TModel>(variant == "D");
    case SpaceId::S3: {
      std::vector<bool> bits;
      for (char c : variant) {
        require(c == '0' || c == '1', "S3: variant must be a binary word, got '" + variant + "'");
        bits.push_back(c == '1');
      }
      return std::make_shared<ForestModel>(std::move(bits), false);
    }
  }
  throw std::invalid_argument("unknown space");
}

ChainSequence<CatalogPoint> sequence_from_model(std::shared_ptr<const Model> model,
                                                std::string name) {
  auto seq = std::make_shared<ChainSequence<CatalogPoint>>();
  seq->name = std::move(name);
  seq->level = [model](std::uint64_t n) {
    auto b = std::make_shared<const BuiltLevel>(build(*model, n));
    ChainLevel<CatalogPoint> d;
    d.level = n;
    d.k = b->total;
    d.mesh_bound = b->layout.mesh;
    d.index_of = [model, b, n](const CatalogPoint& p) { return place(*model, *b, p, n); };
    return d;
  };
  ChainSequence<CatalogPoint> out = *seq;
  out.certify = [model, seq](const CatalogPoint& x, const CatalogPoint& y) {
    return certify(*model, *seq, x, y);
  };
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------- public API

namespace {

using detail::make_model;
using detail::sequence_from_model;

bool is_reversal(SpaceId space, const std::string& v) {
  switch (space) {
    case SpaceId::Arc:
    case SpaceId::S2: return v == "reversed";
    case SpaceId::S1: return v == "E" || v == "E'";
    case SpaceId::T: return v == "E";
    case SpaceId::S3: return false;
  }
  return false;
}

void check_variant(SpaceId space, const std::string& v) {
  if (space == SpaceId::S3) {
    if (v.empty()) throw std::invalid_argument("S3: variant must be a nonempty binary word");
    return;
  }
  const auto vs = variants(space);
  if (std::find(vs.begin(), vs.end(), v) == vs.end())
    throw std::invalid_argument("unknown variant '" + v + "' for space " + to_string(space));
}

}  // namespace

std::string to_string(SpaceId s) {
  switch (s) {
    case SpaceId::Arc: return "arc";
    case SpaceId::S1: return "s1";
    case SpaceId::S2: return "s2";
    case SpaceId::S3: return "s3";
    case SpaceId::T: return "t";
  }
  return "?";
}

SpaceId parse_space(const std::string& text) {
  for (auto s : {SpaceId::Arc, SpaceId::S1, SpaceId::S2, SpaceId::S3, SpaceId::T})
    if (text == to_string(s)) return s;
  throw std::invalid_argument("unknown space '" + text + "' (expected arc, s1, s2, s3, t)");
}

std::vector<std::string> variants(SpaceId space) {
  switch (space) {
    case SpaceId::Arc:
    case SpaceId::S2: return {"standard", "reversed"};
    case SpaceId::S1: return {"D", "D'", "E", "E'"};
    case SpaceId::T: return {"D", "E"};
    case SpaceId::S3: return {"<binary word>"};
  }
  return {};
}

ChainSequence<CatalogPoint> family(SpaceId space, const std::string& variant) {
  check_variant(space, variant);
  const std::string name = to_string(space) + "/" + variant;
  if (!is_reversal(space, variant)) return sequence_from_model(make_model(space, variant), name);
  std::string base = "standard";
  if (space == SpaceId::S1) base = variant == "E" ? "D" : "D'";
  if (space == SpaceId::T) base = "C";
  return reversed(sequence_from_model(make_model(space, base), name), name);
}

ChainLevel<CatalogPoint> arc_chain_family(const std::string& variant, std::uint64_t n) {
  return family(SpaceId::Arc, variant).level(n);
}
ChainLevel<CatalogPoint> s1_chain_family(const std::string& variant, std::uint64_t n) {
  return family(SpaceId::S1, variant).level(n);
}
ChainLevel<CatalogPoint> s2_chain_family(const std::string& variant, std::uint64_t n) {
  return family(SpaceId::S2, variant).level(n);
}
ChainLevel<CatalogPoint> t_chain_family(const std::string& variant, std::uint64_t n) {
  return family(SpaceId::T, variant).level(n);
}

ChainLevel<CatalogPoint> s3_chain_family(const std::vector<bool>& prefix, std::uint64_t n) {
  if (n < 1 || n > prefix.size())
    throw std::invalid_argument("S3: prefix of length " + std::to_string(prefix.size()) +
                                " is too short for level " + std::to_string(n));
  std::string word;
  for (bool b : prefix) word += b ? '1' : '0';
  return family(SpaceId::S3, word).level(n);
}

CatalogPoint CatalogPoint::parse(const std::string& text) {
  if (text == "origin") return origin();
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0)
    throw std::invalid_argument("bad point '" + text + "' (expected kind:value)");
  const std::string head = text.substr(0, colon);
  const Rational v = Rational::parse(text.substr(colon + 1));
  CatalogPoint p;
  if (head == "arc") p = arc(v);
  else if (head == "sine") p = sine(v);
  else if (head == "limit") p = limit(v);
  else if (head == "bottom") p = bottom(v);
  else if (head == "left") p = left(v);
  else if (head == "t3") p = t3(v);
  else if ((head[0] == 'I' || head[0] == 'A') && head.size() > 1 &&
           head.find_first_not_of("0123456789", 1) == std::string::npos) {
    const std::int64_t i = std::stoll(head.substr(1));
    p = head[0] == 'I' ? interval(i, v) : oscillation(i, v);
  } else {
    throw std::invalid_argument("unknown point kind '" + head + "'");
  }
  const Rational zero(0), one(1);
  bool ok = true;
  switch (p.kind) {
    case PointKind::Arc: ok = zero <= v && v <= one; break;
    case PointKind::Sine: ok = Rational(3) <= v; break;
    case PointKind::Limit:
    case PointKind::Left: ok = -one <= v && v <= one; break;
    case PointKind::Bottom: ok = -one < v && v < zero; break;
    case PointKind::Interval: ok = p.index >= 1 && zero <= v && v <= Rational(1, p.index); break;
    case PointKind::Oscillation:
      ok = p.index >= 1 && Rational(1, p.index + 1) < v && v < Rational(1, p.index);
      break;
    case PointKind::T3: ok = zero < v && v <= one; break;
    case PointKind::Origin: break;
  }
  if (!ok) throw std::invalid_argument("point '" + text + "' outside its strand's domain");
  return p;
}

std::string CatalogPoint::str() const {
  const std::string v = param.is_integer() ? param.numerator().get_str() : param.str();
  switch (kind) {
    case PointKind::Arc: return "arc:" + v;
    case PointKind::Sine: return "sine:" + v;
    case PointKind::Limit: return "limit:" + v;
    case PointKind::Bottom: return "bottom:" + v;
    case PointKind::Left: return "left:" + v;
    case PointKind::Interval: return "I" + std::to_string(index) + ":" + v;
    case PointKind::Oscillation: return "A" + std::to_string(index) + ":" + v;
    case PointKind::Origin: return "origin";
    case PointKind::T3: return "t3:" + v;
  }
  return "?";
}

std::string component_of(SpaceId space, const CatalogPoint& p) {
  const auto bad = [&]() -> std::string {
    throw std::invalid_argument(to_string(space) + ": point " + p.str() + " is not in the space");
  };
  switch (space) {
    case SpaceId::Arc: return p.kind == PointKind::Arc ? "arc" : bad();
    case SpaceId::S1:
      if (p.kind == PointKind::Sine) return "sine";
      return p.kind == PointKind::Limit ? "limit" : bad();
    case SpaceId::S2:
      if (p.kind == PointKind::Sine) return "sine";
      if (p.kind == PointKind::Limit || p.kind == PointKind::Bottom || p.kind == PointKind::Left)
        return "outer";
      return bad();
    case SpaceId::S3:
      if (p.kind == PointKind::Interval) return "I" + std::to_string(p.index);
      if (p.kind == PointKind::Oscillation) return "A" + std::to_string(p.index);
      return p.kind == PointKind::Origin ? "origin" : bad();
    case SpaceId::T:
      if (p.kind == PointKind::Limit) return "T1";
      if (p.kind == PointKind::Sine) return "T2";
      return p.kind == PointKind::T3 ? "T3" : bad();
  }
  return bad();
}

std::vector<CatalogPoint> witness_points(SpaceId space) {
  using P = CatalogPoint;
  switch (space) {
    case SpaceId::Arc:
      return {P::arc(0), P::arc(Rational(1, 4)), P::arc(Rational(1, 2)), P::arc(Rational(3, 4)),
              P::arc(1)};
    case SpaceId::S1: return {P::limit(1), P::limit(-1), P::sine(7), P::sine(3)};
    case SpaceId::S2: return {P::left(-1), P::left(1), P::sine(7), P::sine(3)};
    case SpaceId::S3: {
      std::vector<P> out;
      for (std::int64_t i = 1; i <= 6; ++i) {
        out.push_back(P::interval(i, 0));
        out.push_back(P::interval(i, Rational(1, i)));
      }
      return out;
    }
    case SpaceId::T: return {P::limit(0), P::sine(5), P::t3(Rational(1, 2))};
  }
  return {};
}

std::vector<CatalogPoint> sample_points(SpaceId space) {
  using P = CatalogPoint;
  auto out = witness_points(space);
  switch (space) {
    case SpaceId::Arc:
      out.clear();
      for (int i = 0; i <= 24; ++i) out.push_back(P::arc(Rational(i, 24)));
      break;
    case SpaceId::S1:
      for (auto p : {P::sine(5), P::sine(9), P::sine(10), P::sine(Rational(11, 2)), P::limit(0),
                     P::limit(Rational(1, 2)), P::limit(Rational(-1, 2))})
        out.push_back(p);
      break;
    case SpaceId::S2:
      for (auto p : {P::limit(1), P::limit(0), P::limit(-1), P::bottom(Rational(-1, 2)),
                     P::bottom(Rational(-1, 4)), P::left(0), P::sine(5), P::sine(10)})
        out.push_back(p);
      break;
    case SpaceId::S3:
      for (auto p : {P::oscillation(1, Rational(3, 4)), P::oscillation(2, Rational(5, 12)),
                     P::oscillation(3, Rational(7, 24)), P::origin(),
                     P::interval(3, Rational(1, 6)), P::interval(8, Rational(1, 16))})
        out.push_back(p);
      break;
    case SpaceId::T:
      for (auto p : {P::limit(1), P::limit(Rational(-1, 2)), P::sine(3), P::sine(9), P::t3(1),
                     P::t3(Rational(1, 3)), P::t3(Rational(1, 5)), P::t3(Rational(2, 7))})
        out.push_back(p);
      break;
  }
  return out;
}

}  // namespace chainorder
