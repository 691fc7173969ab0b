#pragma once

#include <vector>

#include "ocat/omega_cat.hpp"

namespace ocat {

// Dimension-preserving total assignment of cells between two categories.
// Globularity/functoriality are not enforced here; they are what
// verify_functor_iso certifies (faulty maps must be expressible).
class CellMap {
 public:
  CellMap(OmegaCat source, OmegaCat target, std::vector<std::vector<CellRef>> images);

  const OmegaCat& source() const { return source_; }
  const OmegaCat& target() const { return target_; }

  CellRef apply(CellRef c) const;  // wrappers: unwrap, map, re-lift

  static CellMap identityMap(const OmegaCat& x);
  // g after f: this = f, then g.
  CellMap then(const CellMap& g) const;

 private:
  OmegaCat source_;
  OmegaCat target_;
  std::vector<std::vector<CellRef>> images_;
};

// Pullback of f and g over their common target: cells are pairs (u, v) with
// f(u) = g(v), tagged (tag u, tag v), structure componentwise.
OmegaCat pullback(const CellMap& f, const CellMap& g);
// Pair components of a pullback cell tag.
std::pair<Tag, Tag> pullback_components(const Tag& pairTag);

}  // namespace ocat
