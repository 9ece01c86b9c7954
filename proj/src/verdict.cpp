#include "chainorder/verdict.hpp"

#include <algorithm>
#include <stdexcept>

namespace chainorder {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::LT: return "LT";
    case Relation::EQ: return "EQ";
    case Relation::GT: return "GT";
  }
  return "?";
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Stabilized: return "Stabilized";
    case VerdictKind::UltrafilterDependent: return "UltrafilterDependent";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "?";
}

Relation flip(Relation r) {
  return r == Relation::LT ? Relation::GT : (r == Relation::GT ? Relation::LT : Relation::EQ);
}

ComparisonVerdict verdict_from_certificate(const OrderCertificate& cert,
                                           const SimulatedUltrafilter& u, std::uint64_t depth) {
  if (cert.le.unite(cert.ge) != EventuallyPeriodicSet::all())
    throw std::logic_error("certificate index sets do not cover N");
  ComparisonVerdict v;
  v.depth = depth;
  v.le_set = cert.le;
  v.ge_set = cert.ge;
  v.basis = cert.basis;

  const auto tame = [](const EventuallyPeriodicSet& s) { return s.is_finite() || s.is_cofinite(); };
  if (tame(cert.le) && tame(cert.ge)) {
    v.kind = VerdictKind::Stabilized;
    const bool le = cert.le.is_cofinite(), ge = cert.ge.is_cofinite();
    v.relation = le && ge ? Relation::EQ : (le ? Relation::LT : Relation::GT);
    std::uint64_t t = std::max(*cert.le.stable_from(), *cert.ge.stable_from());
    if (cert.threshold) t = std::max(t, *cert.threshold);
    v.threshold = t;
    return v;
  }
  v.kind = VerdictKind::UltrafilterDependent;
  const auto dle = u.decide(cert.le), dge = u.decide(cert.ge);
  v.tower_extended = dle.extended || dge.extended;
  v.relation = dle.member && dge.member ? Relation::EQ
                                        : (dle.member ? Relation::LT : Relation::GT);
  return v;
}

ComparisonVerdict unknown_verdict(std::uint64_t depth, std::string basis) {
  ComparisonVerdict v;
  v.depth = depth;
  v.basis = std::move(basis);
  return v;
}

}  // namespace chainorder
