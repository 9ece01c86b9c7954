#pragma once

// Piece layouts shared by the catalog families and the geometric validator.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "chainorder/catalog.hpp"

namespace chainorder::detail {

/// Enclosure of a strand key; lo == hi when exact.
struct Key {
  Rational lo;
  Rational hi;
};

Key exact_key(Rational r);
Key enclose(double value, double radius);

/// A run of consecutive links covering one key interval with a canonical
/// interval chain.
struct Piece {
  std::string id;
  std::int64_t links;
  Rational lo;
  Rational hi;
  bool ascending;
};

struct Layout {
  std::vector<Piece> pieces;
  Rational mesh;
};

struct Placement {
  std::string piece;
  Key key;
};

/// One chain family described piece by piece. A model promises that from
/// settle_level(p) on the piece of p never changes, that piece order is the
/// same at every level, and that link_bound is non-increasing in n.
class Model {
 public:
  virtual ~Model() = default;
  virtual Layout layout(std::uint64_t n) const = 0;
  virtual Placement locate(const CatalogPoint& p, std::uint64_t n) const = 0;
  virtual std::uint64_t settle_level(const CatalogPoint& p) const = 0;
  /// Upper bound on one link's length in key units.
  virtual Rational link_bound(const std::string& piece, std::uint64_t n) const = 0;
  virtual SpaceId space() const = 0;
};

std::shared_ptr<const Model> make_model(SpaceId space, const std::string& variant);
ChainSequence<CatalogPoint> sequence_from_model(std::shared_ptr<const Model> model,
                                                std::string name);

/// sin(pi s / 2), exact when it is rational and easy to recognize.
Key sine_height(const Rational& s);
/// 2^n as int64, throwing std::overflow_error past 2^62.
std::int64_t pow2_links(std::uint64_t n);
std::int64_t checked_links(const mpz_class& k);

// space T helpers
Rational t_sweep_end(std::int64_t j);
Rational t_path_before(std::int64_t j);
Rational t_strand_param(const Rational& r);
Rational t_path_length(const Rational& r);

// space S3 helpers
Rational s3_delta(std::uint64_t n);
double s3_height(std::int64_t i, double x);

}  // namespace chainorder::detail
