#include "ocat/omega_cat.hpp"

#include <algorithm>
#include <numeric>

namespace ocat {

namespace {

std::uint64_t memo_key(int level, int dim, int lhs, int rhs) {
  return (static_cast<std::uint64_t>(level) << 56) | (static_cast<std::uint64_t>(dim) << 48) |
         (static_cast<std::uint64_t>(static_cast<std::uint32_t>(lhs)) << 24) |
         static_cast<std::uint64_t>(static_cast<std::uint32_t>(rhs));
}

}  // namespace

OmegaCat::OmegaCat() {
  auto impl = std::make_shared<Impl>();
  impl->truncation = 0;
  impl->cells.resize(1);
  impl->index.resize(1);
  impl->composer = [](const OmegaCat&, int, CellRef, CellRef) -> std::optional<CellRef> {
    return std::nullopt;
  };
  impl_ = std::move(impl);
}

int OmegaCat::truncation() const { return impl_->truncation; }

int OmegaCat::size(int dim) const {
  if (dim < 0 || dim > impl_->truncation) return 0;
  return static_cast<int>(impl_->cells[dim].size());
}

CellRef OmegaCat::cell(int dim, int idx) const {
  if (idx < 0 || idx >= size(dim)) fail(Errc::unknown_cell, "no cell at requested slot");
  return CellRef{dim, idx};
}

std::optional<CellRef> OmegaCat::find(int dim, const Tag& tag) const {
  if (dim < 0 || dim > impl_->truncation) return std::nullopt;
  auto it = impl_->index[dim].find(tag);
  if (it == impl_->index[dim].end()) return std::nullopt;
  return CellRef{dim, it->second};
}

const OmegaCat::CellRecord& OmegaCat::rec(CellRef c) const {
  int d = std::min(c.dim, impl_->truncation);
  if (c.dim < 0 || c.idx < 0 || d < 0 || c.idx >= static_cast<int>(impl_->cells[d].size()))
    fail(Errc::unknown_cell, "invalid cell handle");
  return impl_->cells[d][c.idx];
}

const Tag& OmegaCat::tag(CellRef c) const { return rec(c).tag; }

bool OmegaCat::registered(CellRef c) const { return contains(c) && c.dim <= impl_->truncation; }

bool OmegaCat::contains(CellRef c) const {
  if (!c.valid()) return false;
  int d = std::min(c.dim, impl_->truncation);
  return c.idx < static_cast<int>(impl_->cells[d].size());
}

CellRef OmegaCat::src(CellRef c) const {
  if (c.dim <= 0) fail(Errc::dimension_out_of_range, "src of a 0-cell");
  if (c.dim > impl_->truncation) return CellRef{c.dim - 1, c.idx};  // wrapper unfolds
  return CellRef{c.dim - 1, rec(c).src};
}

CellRef OmegaCat::tgt(CellRef c) const {
  if (c.dim <= 0) fail(Errc::dimension_out_of_range, "tgt of a 0-cell");
  if (c.dim > impl_->truncation) return CellRef{c.dim - 1, c.idx};
  return CellRef{c.dim - 1, rec(c).tgt};
}

CellRef OmegaCat::srcAt(CellRef c, int n) const {
  if (n < 0 || n > c.dim) fail(Errc::dimension_out_of_range, "srcAt: bad boundary dimension");
  while (c.dim > n) c = src(c);
  return c;
}

CellRef OmegaCat::tgtAt(CellRef c, int n) const {
  if (n < 0 || n > c.dim) fail(Errc::dimension_out_of_range, "tgtAt: bad boundary dimension");
  while (c.dim > n) c = tgt(c);
  return c;
}

std::pair<CellRef, CellRef> OmegaCat::boundary(CellRef c, int n) const {
  if (!contains(c)) fail(Errc::unknown_cell, "boundary: cell not in category");
  if (n < 0 || n >= c.dim) fail(Errc::dimension_out_of_range, "boundary: need n < dim");
  return {srcAt(c, n), tgtAt(c, n)};
}

CellRef OmegaCat::identity(CellRef c) const {
  if (!contains(c)) fail(Errc::unknown_cell, "identity: cell not in category");
  if (c.dim >= impl_->truncation) return CellRef{c.dim + 1, c.idx};
  int id = rec(c).id;
  if (id < 0) fail(Errc::unknown_cell, "identity: missing identity link");
  return CellRef{c.dim + 1, id};
}

CellRef OmegaCat::lift(CellRef c, int dim) const {
  if (dim < c.dim) fail(Errc::dimension_mismatch, "lift: cannot lower a cell");
  while (c.dim < dim) c = identity(c);
  return c;
}

bool OmegaCat::isIdentity(CellRef c) const {
  if (c.dim <= 0) return false;
  if (c.dim > impl_->truncation) return true;
  return identity(src(c)) == c;
}

bool OmegaCat::isIdentityLiftOf(CellRef c, CellRef base) const {
  return c.dim >= base.dim && lift(base, c.dim) == c;
}

bool OmegaCat::composable(int level, CellRef lhs, CellRef rhs) const {
  if (!contains(lhs) || !contains(rhs)) return false;
  int k = std::max(lhs.dim, rhs.dim);
  if (level < 0 || level >= k) return false;
  return srcAt(lhs, level) == tgtAt(rhs, level);
}

ComposeOutcome OmegaCat::composeImpl(int level, CellRef lhs, CellRef rhs,
                                     bool allowShortcut) const {
  if (!contains(lhs) || !contains(rhs)) fail(Errc::unknown_cell, "compose: cell not in category");
  int k = std::max(lhs.dim, rhs.dim);
  if (level < 0 || level >= k) return {ComposeStatus::dimension_mismatch, {}};
  CellRef l = lift(lhs, k);
  CellRef r = lift(rhs, k);
  if (srcAt(l, level) != tgtAt(r, level)) return {ComposeStatus::not_composable, {}};
  // Identity absorption: x o i(s_n x) = x and i(t_n x) o x = x.
  if (allowShortcut) {
    if (rhs.dim < k || isIdentityLiftOf(r, srcAt(l, level))) return {ComposeStatus::ok, l};
    if (lhs.dim < k || isIdentityLiftOf(l, tgtAt(r, level))) return {ComposeStatus::ok, r};
  }
  int n = impl_->truncation;
  if (k > n) {
    // Both factors are formal wrappers; compose the registered bases.
    CellRef bl{n, l.idx}, br{n, r.idx};
    if (level >= n) {
      // Composing formal identities at or above the truncation.
      return l.idx == r.idx ? ComposeOutcome{ComposeStatus::ok, l}
                            : ComposeOutcome{ComposeStatus::not_composable, {}};
    }
    ComposeOutcome base = composeImpl(level, bl, br, allowShortcut);
    if (!base.ok()) return base;
    return {ComposeStatus::ok, CellRef{k, base.cell.idx}};
  }
  std::uint64_t key = memo_key(level, k, l.idx, r.idx);
  auto it = impl_->memo.find(key);
  if (it != impl_->memo.end()) {
    if (it->second < 0) return {ComposeStatus::closure_miss, {}};
    return {ComposeStatus::ok, CellRef{k, static_cast<int>(it->second)}};
  }
  std::optional<CellRef> out = impl_->composer(*this, level, l, r);
  impl_->memo.emplace(key, out ? out->idx : -1);
  if (!out) return {ComposeStatus::closure_miss, {}};
  return {ComposeStatus::ok, *out};
}

ComposeOutcome OmegaCat::tryCompose(int level, CellRef lhs, CellRef rhs) const {
  return composeImpl(level, lhs, rhs, true);
}

ComposeOutcome OmegaCat::tryComposeRaw(int level, CellRef lhs, CellRef rhs) const {
  return composeImpl(level, lhs, rhs, false);
}

CellRef OmegaCat::compose(int level, CellRef lhs, CellRef rhs) const {
  ComposeOutcome out = tryCompose(level, lhs, rhs);
  switch (out.status) {
    case ComposeStatus::ok:
      return out.cell;
    case ComposeStatus::dimension_mismatch:
      fail(Errc::dimension_mismatch, "compose: level " + std::to_string(level) +
                                         " not below any factor dimension");
    case ComposeStatus::not_composable:
      fail(Errc::not_composable, "compose: boundaries do not match at level " +
                                     std::to_string(level) + " for " + tag(lhs).str() + " after " +
                                     tag(rhs).str());
    case ComposeStatus::closure_miss:
      fail(Errc::closure_violation,
           "compose: composite missing from registry for " + tag(lhs).str() + " o_" +
               std::to_string(level) + " " + tag(rhs).str());
  }
  fail(Errc::invalid_argument, "compose: unreachable");
}

std::pair<int, int> OmegaCat::cellCounts(int dim) const {
  int ids = 0, other = 0;
  for (int i = 0; i < size(dim); ++i) {
    if (dim >= 1 && isIdentity(CellRef{dim, i}))
      ++ids;
    else
      ++other;
  }
  return {ids, other};
}

// --- builder ---------------------------------------------------------------

OmegaCatBuilder::OmegaCatBuilder(int truncation) : truncation_(truncation) {
  if (truncation < 0) fail(Errc::invalid_argument, "builder: negative truncation");
  cells_.resize(truncation + 1);
}

int OmegaCatBuilder::addCell(int dim, Tag tag) {
  if (dim != 0) fail(Errc::invalid_argument, "builder: boundary-free cells only at dim 0");
  cells_[0].push_back({std::move(tag), -1, -1, -1});
  return static_cast<int>(cells_[0].size()) - 1;
}

int OmegaCatBuilder::addCell(int dim, Tag tag, int srcIdx, int tgtIdx) {
  if (dim < 1 || dim > truncation_) fail(Errc::invalid_argument, "builder: dim out of range");
  if (srcIdx < 0 || tgtIdx < 0 || srcIdx >= size(dim - 1) || tgtIdx >= size(dim - 1))
    fail(Errc::invalid_argument, "builder: dangling boundary index");
  cells_[dim].push_back({std::move(tag), srcIdx, tgtIdx, -1});
  return static_cast<int>(cells_[dim].size()) - 1;
}

void OmegaCatBuilder::setIdentity(int dim, int cellIdx, int idIdx) {
  if (dim < 0 || dim >= truncation_) fail(Errc::invalid_argument, "builder: identity dim range");
  if (cellIdx < 0 || cellIdx >= size(dim) || idIdx < 0 || idIdx >= size(dim + 1))
    fail(Errc::invalid_argument, "builder: identity link out of range");
  cells_[dim][cellIdx].id = idIdx;
}

int OmegaCatBuilder::size(int dim) const {
  if (dim < 0 || dim > truncation_) return 0;
  return static_cast<int>(cells_[dim].size());
}

OmegaCat OmegaCatBuilder::build(Composer composer, std::vector<std::vector<int>>* perm_out) {
  if (built_) fail(Errc::invalid_argument, "builder: build() called twice");
  built_ = true;
  auto impl = std::make_shared<OmegaCat::Impl>();
  impl->truncation = truncation_;
  impl->cells.resize(truncation_ + 1);
  impl->index.resize(truncation_ + 1);
  impl->composer = std::move(composer);

  std::vector<std::vector<int>> perm(truncation_ + 1);
  for (int d = 0; d <= truncation_; ++d) {
    int n = size(d);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return cells_[d][a].tag < cells_[d][b].tag; });
    perm[d].assign(n, -1);
    for (int pos = 0; pos < n; ++pos) perm[d][order[pos]] = pos;
    impl->cells[d].reserve(n);
    for (int pos = 0; pos < n; ++pos) {
      OmegaCat::CellRecord r = cells_[d][order[pos]];
      if (d >= 1) {
        r.src = perm[d - 1][r.src];
        r.tgt = perm[d - 1][r.tgt];
      }
      impl->cells[d].push_back(std::move(r));
    }
    for (int pos = 0; pos < n; ++pos) {
      auto [it, fresh] = impl->index[d].emplace(impl->cells[d][pos].tag, pos);
      if (!fresh)
        fail(Errc::invalid_argument,
             "builder: duplicate tag at dim " + std::to_string(d) + ": " +
                 impl->cells[d][pos].tag.str());
    }
  }
  // Remap identity links, then require them below the truncation.
  for (int d = 0; d < truncation_; ++d) {
    int n = size(d);
    for (int old = 0; old < n; ++old) {
      int link = cells_[d][old].id;
      if (link < 0)
        fail(Errc::invalid_argument, "builder: missing identity link at dim " + std::to_string(d) +
                                         " for " + cells_[d][old].tag.str());
      impl->cells[d][perm[d][old]].id = perm[d + 1][link];
    }
  }
  if (perm_out) *perm_out = std::move(perm);
  return OmegaCat(std::move(impl));
}

// --- standard constructions -------------------------------------------------

OmegaCat terminal_cat(int truncation) {
  OmegaCatBuilder b(truncation);
  b.addCell(0, Tag::atom("pt"));
  for (int d = 1; d <= truncation; ++d) b.addCell(d, Tag::atom("pt"), 0, 0);
  for (int d = 0; d < truncation; ++d) b.setIdentity(d, 0, 0);
  return b.build([](const OmegaCat&, int, CellRef lhs, CellRef) -> std::optional<CellRef> {
    return lhs;
  });
}

OmegaCat dual(const OmegaCat& x) {
  OmegaCatBuilder b(x.truncation());
  for (int d = 0; d <= x.truncation(); ++d) {
    for (int i = 0; i < x.size(d); ++i) {
      CellRef c{d, i};
      if (d == 0)
        b.addCell(0, x.tag(c));
      else
        b.addCell(d, x.tag(c), x.tgt(c).idx, x.src(c).idx);
    }
  }
  for (int d = 0; d < x.truncation(); ++d)
    for (int i = 0; i < x.size(d); ++i) b.setIdentity(d, i, x.identity(CellRef{d, i}).idx);
  OmegaCat base = x;
  // Tags are untouched and the builder sorts by tag, so indices line up with
  // the original registry and compositions delegate with the factors swapped.
  return b.build([base](const OmegaCat& self, int level, CellRef lhs,
                        CellRef rhs) -> std::optional<CellRef> {
    ComposeOutcome out = base.tryCompose(level, rhs, lhs);
    if (!out.ok()) return std::nullopt;
    return self.find(out.cell.dim, base.tag(out.cell));
  });
}

OmegaCat hom(const OmegaCat& x, CellRef a, CellRef b) {
  if (!x.registered(a) || !x.registered(b) || a.dim != 0 || b.dim != 0)
    fail(Errc::unknown_cell, "hom: endpoints must be registered 0-cells");
  int n = x.truncation();
  if (n == 0) {
    // Cells above the truncation are formal identities on the objects.
    OmegaCatBuilder empty(0);
    if (a == b) empty.addCell(0, x.tag(a));
    return empty.build(
        [](const OmegaCat&, int, CellRef lhs, CellRef) -> std::optional<CellRef> { return lhs; });
  }
  OmegaCatBuilder builder(n - 1);
  // maps[d]: inner X index at dim d+1 -> hom index at dim d
  std::vector<std::unordered_map<int, int>> toHom(n);
  std::vector<std::vector<int>> toX(n);
  for (int d = 0; d < n; ++d) {
    for (int i = 0; i < x.size(d + 1); ++i) {
      CellRef c{d + 1, i};
      if (x.srcAt(c, 0) != a || x.tgtAt(c, 0) != b) continue;
      int idx;
      if (d == 0)
        idx = builder.addCell(0, x.tag(c));
      else
        idx = builder.addCell(d, x.tag(c), toHom[d - 1].at(x.src(c).idx),
                              toHom[d - 1].at(x.tgt(c).idx));
      toHom[d].emplace(i, idx);
      toX[d].push_back(i);
    }
  }
  for (int d = 0; d + 1 < n; ++d)
    for (auto [xi, hi] : toHom[d]) builder.setIdentity(d, hi, toHom[d + 1].at(x.identity(CellRef{d + 1, xi}).idx));
  std::vector<std::vector<int>> perm;
  OmegaCat base = x;
  auto store = std::make_shared<std::vector<std::vector<int>>>();  // hom idx -> X idx, post-sort
  OmegaCat out = builder.build(
      [base, store](const OmegaCat& self, int level, CellRef lhs,
                    CellRef rhs) -> std::optional<CellRef> {
        CellRef il{lhs.dim + 1, (*store)[lhs.dim][lhs.idx]};
        CellRef ir{rhs.dim + 1, (*store)[rhs.dim][rhs.idx]};
        ComposeOutcome o = base.tryCompose(level + 1, il, ir);
        if (!o.ok()) return std::nullopt;
        return self.find(lhs.dim, base.tag(o.cell));
      },
      &perm);
  store->resize(n);
  for (int d = 0; d < n; ++d) {
    (*store)[d].resize(toX[d].size());
    for (int old = 0; old < static_cast<int>(toX[d].size()); ++old)
      (*store)[d][perm[d][old]] = toX[d][old];
  }
  return out;
}

OmegaCat retag(const OmegaCat& x, const std::function<Tag(int dim, const Tag&)>& fn) {
  OmegaCatBuilder b(x.truncation());
  for (int d = 0; d <= x.truncation(); ++d) {
    for (int i = 0; i < x.size(d); ++i) {
      CellRef c{d, i};
      if (d == 0)
        b.addCell(0, fn(0, x.tag(c)));
      else
        b.addCell(d, fn(d, x.tag(c)), x.src(c).idx, x.tgt(c).idx);
    }
  }
  for (int d = 0; d < x.truncation(); ++d)
    for (int i = 0; i < x.size(d); ++i) b.setIdentity(d, i, x.identity(CellRef{d, i}).idx);
  std::vector<std::vector<int>> perm;
  auto toOld = std::make_shared<std::vector<std::vector<int>>>();
  OmegaCat base = x;
  auto fwd = std::make_shared<std::vector<std::vector<int>>>();  // old -> new
  OmegaCat out = b.build(
      [base, toOld, fwd](const OmegaCat&, int level, CellRef lhs,
                         CellRef rhs) -> std::optional<CellRef> {
        CellRef il{lhs.dim, (*toOld)[lhs.dim][lhs.idx]};
        CellRef ir{rhs.dim, (*toOld)[rhs.dim][rhs.idx]};
        ComposeOutcome o = base.tryCompose(level, il, ir);
        if (!o.ok()) return std::nullopt;
        return CellRef{o.cell.dim, (*fwd)[o.cell.dim][o.cell.idx]};
      },
      &perm);
  toOld->resize(x.truncation() + 1);
  fwd->assign(perm.begin(), perm.end());
  for (int d = 0; d <= x.truncation(); ++d) {
    (*toOld)[d].resize(x.size(d));
    for (int old = 0; old < x.size(d); ++old) (*toOld)[d][perm[d][old]] = old;
  }
  return out;
}

}  // namespace ocat
