#include "ocat/cell_map.hpp"

#include <algorithm>

namespace ocat {

CellMap::CellMap(OmegaCat source, OmegaCat target, std::vector<std::vector<CellRef>> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source_.truncation() + 1)
    fail(Errc::invalid_argument, "CellMap: one image table per registered dimension");
  for (int d = 0; d <= source_.truncation(); ++d) {
    if (static_cast<int>(images_[d].size()) != source_.size(d))
      fail(Errc::invalid_argument, "CellMap: image table must be total at dim " + std::to_string(d));
    for (const CellRef& c : images_[d]) {
      if (c.dim != d || !target_.contains(c))
        fail(Errc::invalid_argument, "CellMap: image must be a target cell of equal dimension");
    }
  }
}

CellRef CellMap::apply(CellRef c) const {
  if (!source_.contains(c)) fail(Errc::unknown_cell, "CellMap: cell not in source");
  if (c.dim > source_.truncation()) {
    CellRef base{source_.truncation(), c.idx};
    return target_.lift(apply(base), c.dim);
  }
  return images_[c.dim][c.idx];
}

CellMap CellMap::identityMap(const OmegaCat& x) {
  std::vector<std::vector<CellRef>> images(x.truncation() + 1);
  for (int d = 0; d <= x.truncation(); ++d)
    for (int i = 0; i < x.size(d); ++i) images[d].push_back(CellRef{d, i});
  return CellMap(x, x, std::move(images));
}

CellMap CellMap::then(const CellMap& g) const {
  if (!target_.sameCategory(g.source()))
    fail(Errc::target_mismatch, "CellMap::then: middle categories differ");
  std::vector<std::vector<CellRef>> images(source_.truncation() + 1);
  for (int d = 0; d <= source_.truncation(); ++d)
    for (int i = 0; i < source_.size(d); ++i) images[d].push_back(g.apply(images_[d][i]));
  return CellMap(source_, g.target(), std::move(images));
}

OmegaCat pullback(const CellMap& f, const CellMap& g) {
  if (!f.target().sameCategory(g.target()))
    fail(Errc::target_mismatch, "pullback: maps must share their target");
  const OmegaCat& A = f.source();
  const OmegaCat& B = g.source();
  int trunc = std::max(A.truncation(), B.truncation());
  OmegaCatBuilder builder(trunc);
  // (A idx, B idx) -> builder idx per dim; components may be wrappers when one
  // side is truncated lower.
  auto sideCount = [&](const OmegaCat& c, int d) {
    return c.size(std::min(d, c.truncation()));
  };
  std::vector<std::vector<std::vector<int>>> slot(trunc + 1);
  auto pairTag = [&](int d, int i, int j) {
    return Tag::list({A.tag(CellRef{d, i}), B.tag(CellRef{d, j})});
  };
  for (int d = 0; d <= trunc; ++d) {
    slot[d].assign(sideCount(A, d), std::vector<int>(sideCount(B, d), -1));
    for (int i = 0; i < sideCount(A, d); ++i) {
      for (int j = 0; j < sideCount(B, d); ++j) {
        CellRef u{d, i}, v{d, j};
        if (f.apply(u) != g.apply(v)) continue;
        if (d == 0) {
          slot[d][i][j] = builder.addCell(0, pairTag(d, i, j));
        } else {
          CellRef su = A.src(u), tu = A.tgt(u);
          CellRef sv = B.src(v), tv = B.tgt(v);
          int s = slot[d - 1][su.idx][sv.idx];
          int t = slot[d - 1][tu.idx][tv.idx];
          if (s < 0 || t < 0) fail(Errc::invalid_argument, "pullback: boundary pair missing");
          slot[d][i][j] = builder.addCell(d, pairTag(d, i, j), s, t);
        }
      }
    }
  }
  for (int d = 0; d < trunc; ++d)
    for (int i = 0; i < sideCount(A, d); ++i)
      for (int j = 0; j < sideCount(B, d); ++j) {
        if (slot[d][i][j] < 0) continue;
        CellRef iu = A.identity(CellRef{d, i});
        CellRef iv = B.identity(CellRef{d, j});
        builder.setIdentity(d, slot[d][i][j], slot[d + 1][iu.idx][iv.idx]);
      }
  OmegaCat lhsCat = A, rhsCat = B;
  return builder.build([lhsCat, rhsCat](const OmegaCat& self, int level, CellRef lhs,
                                        CellRef rhs) -> std::optional<CellRef> {
    auto [la, lb] = pullback_components(self.tag(lhs));
    auto [ra, rb] = pullback_components(self.tag(rhs));
    int d = lhs.dim;
    auto liftFind = [d](const OmegaCat& c, const Tag& t) {
      int reg = std::min(d, c.truncation());
      auto cellAt = c.find(reg, t);
      if (!cellAt) fail(Errc::unknown_cell, "pullback: component vanished");
      return CellRef{d, cellAt->idx};
    };
    ComposeOutcome ca = lhsCat.tryCompose(level, liftFind(lhsCat, la), liftFind(lhsCat, ra));
    ComposeOutcome cb = rhsCat.tryCompose(level, liftFind(rhsCat, lb), liftFind(rhsCat, rb));
    if (!ca.ok() || !cb.ok()) return std::nullopt;
    return self.find(d, Tag::list({lhsCat.tag(ca.cell), rhsCat.tag(cb.cell)}));
  });
}

std::pair<Tag, Tag> pullback_components(const Tag& pairTag) {
  if (pairTag.kind() != Tag::Kind::List || pairTag.items().size() != 2)
    fail(Errc::invalid_argument, "pullback_components: not a pair tag");
  return {pairTag.items()[0], pairTag.items()[1]};
}

}  // namespace ocat
