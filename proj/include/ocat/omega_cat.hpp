#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ocat/error.hpp"
#include "ocat/tag.hpp"

namespace ocat {

// Handle to a cell of one OmegaCat. For dim <= truncation it points at
// registry slot (dim, idx); for dim > truncation it denotes the formal
// identity wrapper i^(dim-N) of the registered cell (N, idx).
struct CellRef {
  int dim = -1;
  int idx = -1;
  bool valid() const { return dim >= 0 && idx >= 0; }
  friend bool operator==(const CellRef&, const CellRef&) = default;
  friend auto operator<=>(const CellRef&, const CellRef&) = default;
};

class OmegaCat;

// Composition strategy. Receives equal-dimension registered cells
// (level < dim <= truncation) already known to be level-composable in the
// paper orientation (s_level(lhs) == t_level(rhs), i.e. "lhs after rhs").
// Returns the registered composite, or nullopt when the composite is not in
// the registry -- a closure violation reported upstream.
using Composer = std::function<std::optional<CellRef>(const OmegaCat&, int level, CellRef lhs,
                                                      CellRef rhs)>;

enum class ComposeStatus { ok, dimension_mismatch, not_composable, closure_miss };

struct ComposeOutcome {
  ComposeStatus status = ComposeStatus::ok;
  CellRef cell;
  bool ok() const { return status == ComposeStatus::ok; }
};

// Finite truncated strict globular omega-category: per-dimension cell
// registries with source/target/identity links and a composition strategy.
// Immutable after construction; handles are cheap value copies.
class OmegaCat {
 public:
  OmegaCat();  // empty category, truncation 0

  int truncation() const;
  int size(int dim) const;  // registered cells at dim (0 outside [0, truncation])
  CellRef cell(int dim, int idx) const;
  std::optional<CellRef> find(int dim, const Tag& tag) const;
  const Tag& tag(CellRef c) const;  // wrappers report their base tag
  bool registered(CellRef c) const;
  bool contains(CellRef c) const;
  bool sameCategory(const OmegaCat& other) const { return impl_ == other.impl_; }

  CellRef src(CellRef c) const;
  CellRef tgt(CellRef c) const;
  // s_n / t_n by iterating src/tgt; n == dim(c) returns c itself.
  CellRef srcAt(CellRef c, int n) const;
  CellRef tgtAt(CellRef c, int n) const;
  // The n-boundary (s_n x, t_n x); requires n < dim(x).
  std::pair<CellRef, CellRef> boundary(CellRef c, int n) const;

  CellRef identity(CellRef c) const;
  CellRef lift(CellRef c, int dim) const;   // i^(dim - dim(c))
  bool isIdentity(CellRef c) const;         // dim >= 1; wrappers always are
  bool isIdentityLiftOf(CellRef c, CellRef base) const;

  bool composable(int level, CellRef lhs, CellRef rhs) const;
  // lhs o_level rhs in the paper orientation ("lhs after rhs").
  ComposeOutcome tryCompose(int level, CellRef lhs, CellRef rhs) const;
  CellRef compose(int level, CellRef lhs, CellRef rhs) const;  // throws on failure
  // Same, but identity-absorption is not short-circuited: the strategy is
  // always consulted for registered equal-dimension pairs. Used by the axiom
  // checker so corrupted unit rows cannot hide behind the kernel shortcut.
  ComposeOutcome tryComposeRaw(int level, CellRef lhs, CellRef rhs) const;

  // (identity, non-identity) cell counts at dim.
  std::pair<int, int> cellCounts(int dim) const;

 private:
  friend class OmegaCatBuilder;
  struct CellRecord {
    Tag tag;
    int src = -1;
    int tgt = -1;
    int id = -1;  // index at dim+1 of the identity cell, -1 above cutoff
  };
  struct Impl {
    int truncation = 0;
    std::vector<std::vector<CellRecord>> cells;
    std::vector<std::unordered_map<Tag, int, TagHash>> index;
    Composer composer;
    mutable std::unordered_map<std::uint64_t, std::int64_t> memo;
  };
  explicit OmegaCat(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  const CellRecord& rec(CellRef c) const;
  ComposeOutcome composeImpl(int level, CellRef lhs, CellRef rhs, bool allowShortcut) const;
  std::shared_ptr<Impl> impl_;
};

// Accumulates cells, then sorts every dimension by tag (canonical registry
// order), remaps links, and validates identity totality below truncation.
class OmegaCatBuilder {
 public:
  explicit OmegaCatBuilder(int truncation);
  int addCell(int dim, Tag tag);                          // dim 0
  int addCell(int dim, Tag tag, int srcIdx, int tgtIdx);  // dim >= 1
  void setIdentity(int dim, int cellIdx, int idIdx);
  int size(int dim) const;
  // perm_out, when given, receives the old-index -> new-index permutation.
  OmegaCat build(Composer composer, std::vector<std::vector<int>>* perm_out = nullptr);

 private:
  int truncation_;
  std::vector<std::vector<OmegaCat::CellRecord>> cells_;
  bool built_ = false;
};

// --- omega-core constructions -------------------------------------------

OmegaCat terminal_cat(int truncation = 0);

// X^op: src/tgt swapped and compositions reversed at every dimension;
// tags and registry order are untouched (dual is an involution on the nose).
OmegaCat dual(const OmegaCat& x);

// hom(X, x, y): n-cells are the (n+1)-cells x ~> y of X, shifted down.
OmegaCat hom(const OmegaCat& x, CellRef a, CellRef b);

// Rebuild with tags mapped per dimension (must stay injective per dim).
OmegaCat retag(const OmegaCat& x, const std::function<Tag(int dim, const Tag&)>& fn);

}  // namespace ocat
