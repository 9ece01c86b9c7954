#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "chainorder/chains.hpp"
#include "chainorder/rational.hpp"

namespace chainorder {

/// Strands of the catalog spaces.
///   Arc          t in [0,1]
///   Sine         s >= 3, the point (2/(pi s), sin(pi s / 2)) of sin(1/x)
///   Limit        y in [-1,1], the point (0, y)
///   Bottom       x in (-1,0), the point (x, -1)                (S2)
///   Left         y in [-1,1], the point (-1, y)                (S2)
///   Interval     I_i: y in [0, 1/i], the point (1/i, y)        (S3)
///   Oscillation  A_i: x in (1/(i+1), 1/i)                      (S3)
///   Origin       (0,0)                                         (S3)
///   T3           r in (0,1], the ray winding onto S1           (T)
enum class PointKind { Arc, Sine, Limit, Bottom, Left, Interval, Oscillation, Origin, T3 };

struct CatalogPoint {
  PointKind kind = PointKind::Arc;
  std::int64_t index = 0;  // i for Interval / Oscillation
  Rational param;

  static CatalogPoint arc(Rational t) { return {PointKind::Arc, 0, std::move(t)}; }
  static CatalogPoint sine(Rational s) { return {PointKind::Sine, 0, std::move(s)}; }
  static CatalogPoint limit(Rational y) { return {PointKind::Limit, 0, std::move(y)}; }
  static CatalogPoint bottom(Rational x) { return {PointKind::Bottom, 0, std::move(x)}; }
  static CatalogPoint left(Rational y) { return {PointKind::Left, 0, std::move(y)}; }
  static CatalogPoint interval(std::int64_t i, Rational y) { return {PointKind::Interval, i, std::move(y)}; }
  static CatalogPoint oscillation(std::int64_t i, Rational x) {
    return {PointKind::Oscillation, i, std::move(x)};
  }
  static CatalogPoint origin() { return {PointKind::Origin, 0, Rational(0)}; }
  static CatalogPoint t3(Rational r) { return {PointKind::T3, 0, std::move(r)}; }

  /// "arc:1/4", "sine:7", "limit:-1", "bottom:-1/2", "left:1", "I3:1/3",
  /// "A2:5/12", "origin", "t3:1/2". Throws std::invalid_argument.
  static CatalogPoint parse(const std::string& text);
  std::string str() const;

  friend bool operator==(const CatalogPoint&, const CatalogPoint&) = default;
};

/// A placement needed a link index that the certified enclosure of an
/// irrational key could not decide.
class UncertainPlacement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SpaceId { Arc, S1, S2, S3, T };
std::string to_string(SpaceId s);
SpaceId parse_space(const std::string& text);

/// Family selectors. Arc, S2: "standard" | "reversed". S1: "D" | "D'" | "E" | "E'".
/// T: "D" | "E". S3: a binary word such as "011010" (zero tail beyond it).
ChainSequence<CatalogPoint> family(SpaceId space, const std::string& variant);
std::vector<std::string> variants(SpaceId space);

ChainLevel<CatalogPoint> arc_chain_family(const std::string& variant, std::uint64_t n);
ChainLevel<CatalogPoint> s1_chain_family(const std::string& variant, std::uint64_t n);
ChainLevel<CatalogPoint> s2_chain_family(const std::string& variant, std::uint64_t n);
/// Throws std::invalid_argument when n exceeds the prefix length.
ChainLevel<CatalogPoint> s3_chain_family(const std::vector<bool>& prefix, std::uint64_t n);
ChainLevel<CatalogPoint> t_chain_family(const std::string& variant, std::uint64_t n);

/// Arc component name, e.g. "limit", "sine", "outer", "I3", "A2", "origin", "T1".
/// Throws std::invalid_argument for points not in the space.
std::string component_of(SpaceId space, const CatalogPoint& p);

/// Points used by the witness inequalities and sample grids.
std::vector<CatalogPoint> witness_points(SpaceId space);
/// A broader sample with points from every strand.
std::vector<CatalogPoint> sample_points(SpaceId space);

struct SeparationData {
  std::string continuum;  // description of the arc M between x and y
  Rational distance_lower;  // rational lower bound on d(z, M)
  Rational threshold_mesh;  // distance_lower / 2
};

/// Separation data: x, y in one arc component, z off the arc between
/// them. Throws std::invalid_argument when no such arc separates z.
SeparationData separation_data(SpaceId space, const CatalogPoint& x, const CatalogPoint& y,
                               const CatalogPoint& z);

/// Best-effort geometric check of one level (double precision sampling).
struct ValidationReport {
  bool ok = true;
  std::vector<std::string> problems;
  std::uint64_t samples = 0;
  double max_sampled_diameter = 0;
};
ValidationReport validate_level(SpaceId space, const std::string& variant, std::uint64_t n,
                                unsigned samples_per_link = 8);

/// Arrangements of the S2 pieces (walk, slab, bottom, left) under the
/// attachment rules, with the witness pattern (1..4) each induces.
struct S2Arrangement {
  std::vector<std::string> order;  // piece ids in chain order
  std::vector<bool> ascending;     // orientation per piece, same order
  int pattern;
};
std::vector<S2Arrangement> s2_admissible_arrangements();
/// Pattern number (1..4) of an S2 order given the two witness relations.
int s2_pattern(Relation left_bottom_vs_top, Relation sine7_vs_sine3);

struct CatalogEntry {
  SpaceId space;
  std::string description;
  std::vector<std::string> variants;
  std::vector<std::string> witnesses;
};
std::vector<CatalogEntry> catalog_list();

}  // namespace chainorder
