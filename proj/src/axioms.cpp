#include "ocat/axioms.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <vector>

namespace ocat {

namespace {

struct PairTable {
  // k-cells composable at level n, paper orientation: (lhs, rhs), s_n(lhs) = t_n(rhs).
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> byS;  // s_n boundary idx -> k-cells
  std::vector<std::vector<int>> byT;
};

PairTable pair_table(const OmegaCat& x, int n, int k) {
  PairTable t;
  t.byS.resize(x.size(n));
  t.byT.resize(x.size(n));
  for (int i = 0; i < x.size(k); ++i) {
    CellRef c{k, i};
    t.byS[x.srcAt(c, n).idx].push_back(i);
    t.byT[x.tgtAt(c, n).idx].push_back(i);
  }
  for (int r = 0; r < x.size(k); ++r) {
    int key = x.tgtAt(CellRef{k, r}, n).idx;
    for (int l : t.byS[key]) t.pairs.emplace_back(l, r);
  }
  return t;
}

std::string lvl(int n) { return "o_" + std::to_string(n); }

}  // namespace

Report check_axioms(const OmegaCat& x, const AxiomOptions& opts) {
  Report report;
  report.check = "axioms";
  int maxDim = opts.maxDim < 0 ? x.truncation() : std::min(opts.maxDim, x.truncation());

  for (int d = 0; d <= maxDim; ++d) report.bump("cells.dim" + std::to_string(d), x.size(d));

  // Globularity: ss = st and ts = tt.
  for (int d = 2; d <= maxDim; ++d) {
    for (int i = 0; i < x.size(d); ++i) {
      CellRef c{d, i};
      CellRef s = x.src(c), t = x.tgt(c);
      if (x.src(s) != x.src(t) || x.tgt(s) != x.tgt(t))
        report.add("globularity", {x.tag(c)}, "ss!=st or ts!=tt at dim " + std::to_string(d));
      report.bump("checked.globularity");
    }
  }

  // Identity boundaries: s(ix) = t(ix) = x.
  for (int d = 0; d < maxDim; ++d) {
    for (int i = 0; i < x.size(d); ++i) {
      CellRef c{d, i};
      CellRef ic = x.identity(c);
      if (x.src(ic) != c || x.tgt(ic) != c)
        report.add("identity-boundary", {x.tag(c)}, "s(ix) or t(ix) differs from x");
      report.bump("checked.identity");
    }
  }

  // Pair tables for all (level, dim).
  std::vector<std::vector<PairTable>> tables(maxDim + 1);
  std::int64_t stCount = 0, assocCount = 0, interCount = 0;
  for (int k = 1; k <= maxDim; ++k) {
    tables[k].resize(k);
    for (int n = 0; n < k; ++n) {
      tables[k][n] = pair_table(x, n, k);
      stCount += static_cast<std::int64_t>(tables[k][n].pairs.size());
    }
  }
  for (int k = 1; k <= maxDim; ++k)
    for (int n = 0; n < k; ++n)
      for (auto [l, r] : tables[k][n].pairs)
        assocCount += static_cast<std::int64_t>(tables[k][n].byS[x.tgtAt(CellRef{k, l}, n).idx].size());
  for (int d = 2; d <= maxDim; ++d) {
    for (int k = 1; k < d; ++k) {
      for (int n = 0; n < k; ++n) {
        const PairTable& pk = tables[d][k];
        std::vector<std::int64_t> bucket(x.size(n), 0);
        for (auto& [xx, zz] : pk.pairs) ++bucket[x.srcAt(CellRef{d, xx}, n).idx];
        for (auto& [yy, ww] : pk.pairs) interCount += bucket[x.tgtAt(CellRef{d, yy}, n).idx];
      }
    }
  }
  std::int64_t total = stCount + assocCount + interCount;
  bool sampled = total > opts.exhaustiveLimit;
  report.bump("tuples.sourcetarget", stCount);
  report.bump("tuples.associativity", assocCount);
  report.bump("tuples.interchange", interCount);
  report.bump("mode.sampled", sampled ? 1 : 0);
  std::mt19937_64 rng(opts.seed);

  auto composeOrWitness = [&](int n, CellRef l, CellRef r) -> std::optional<CellRef> {
    ComposeOutcome out = x.tryCompose(n, l, r);
    if (out.status == ComposeStatus::closure_miss) {
      report.add("composite-missing", {x.tag(l), x.tag(r)}, lvl(n) + " result not registered");
      return std::nullopt;
    }
    if (!out.ok()) {
      report.add("composite-undefined", {x.tag(l), x.tag(r)}, lvl(n));
      return std::nullopt;
    }
    return out.cell;
  };

  // Source-target axioms on composable pairs.
  auto checkST = [&](int n, int k, int li, int ri) {
    CellRef l{k, li}, r{k, ri};
    auto z = composeOrWitness(n, l, r);
    if (!z) return;
    for (int j = 0; j < k; ++j) {
      CellRef sj = x.srcAt(*z, j), tj = x.tgtAt(*z, j);
      if (j <= n) {
        if (sj != x.srcAt(r, j) || tj != x.tgtAt(l, j)) {
          report.add("source-target", {x.tag(l), x.tag(r), x.tag(*z)},
                     lvl(n) + " boundary at dim " + std::to_string(j));
          return;
        }
      } else {
        auto sz = x.tryCompose(n, x.srcAt(l, j), x.srcAt(r, j));
        auto tz = x.tryCompose(n, x.tgtAt(l, j), x.tgtAt(r, j));
        if (!sz.ok() || !tz.ok() || sz.cell != sj || tz.cell != tj) {
          report.add("source-target", {x.tag(l), x.tag(r), x.tag(*z)},
                     lvl(n) + " composite boundary at dim " + std::to_string(j));
          return;
        }
      }
    }
    report.bump("checked.sourcetarget");
  };

  // Unit laws, with the raw strategy so table corruption cannot hide.
  auto checkUnits = [&]() {
    for (int k = 1; k <= maxDim; ++k) {
      for (int i = 0; i < x.size(k); ++i) {
        CellRef c{k, i};
        for (int n = 0; n < k; ++n) {
          CellRef su = x.lift(x.srcAt(c, n), k);
          CellRef tu = x.lift(x.tgtAt(c, n), k);
          ComposeOutcome right = x.tryComposeRaw(n, c, su);
          ComposeOutcome left = x.tryComposeRaw(n, tu, c);
          if (!right.ok() || right.cell != c)
            report.add("unit-right", {x.tag(c)}, "x " + lvl(n) + " i(s_n x) != x");
          if (!left.ok() || left.cell != c)
            report.add("unit-left", {x.tag(c)}, "i(t_n x) " + lvl(n) + " x != x");
          report.bump("checked.units", 2);
        }
      }
    }
  };

  auto checkAssoc = [&](int n, int k, int fi, int li, int ri) {
    CellRef f{k, fi}, l{k, li}, r{k, ri};
    auto lr = composeOrWitness(n, l, r);
    auto fl = composeOrWitness(n, f, l);
    if (!lr || !fl) return;
    auto a = composeOrWitness(n, f, *lr);
    auto b = composeOrWitness(n, *fl, r);
    if (!a || !b) return;
    if (*a != *b)
      report.add("associativity", {x.tag(f), x.tag(l), x.tag(r)},
                 "f " + lvl(n) + " (l " + lvl(n) + " r) differs from (f l) r");
    report.bump("checked.associativity");
  };

  auto checkInterchange = [&](int n, int k, int d, int xi, int zi, int yi, int wi) {
    CellRef cx{d, xi}, cz{d, zi}, cy{d, yi}, cw{d, wi};
    auto xy = composeOrWitness(n, cx, cy);
    auto zw = composeOrWitness(n, cz, cw);
    auto xz = composeOrWitness(k, cx, cz);
    auto yw = composeOrWitness(k, cy, cw);
    if (!xy || !zw || !xz || !yw) return;
    auto a = composeOrWitness(k, *xy, *zw);
    auto b = composeOrWitness(n, *xz, *yw);
    if (!a || !b) return;
    if (*a != *b)
      report.add("interchange", {x.tag(cx), x.tag(cy), x.tag(cz), x.tag(cw)},
                 "(" + lvl(n) + "," + lvl(k) + ") middle-four exchange");
    report.bump("checked.interchange");
  };

  checkUnits();

  if (!sampled) {
    for (int k = 1; k <= maxDim; ++k)
      for (int n = 0; n < k; ++n)
        for (auto [l, r] : tables[k][n].pairs) checkST(n, k, l, r);
    for (int k = 1; k <= maxDim; ++k)
      for (int n = 0; n < k; ++n)
        for (auto [l, r] : tables[k][n].pairs)
          for (int f : tables[k][n].byS[x.tgtAt(CellRef{k, l}, n).idx]) checkAssoc(n, k, f, l, r);
    for (int d = 2; d <= maxDim; ++d)
      for (int k = 1; k < d; ++k)
        for (int n = 0; n < k; ++n) {
          const PairTable& pk = tables[d][k];
          std::vector<std::vector<int>> pairsByS(x.size(n));
          for (int p = 0; p < static_cast<int>(pk.pairs.size()); ++p)
            pairsByS[x.srcAt(CellRef{d, pk.pairs[p].first}, n).idx].push_back(p);
          for (auto& [yy, ww] : pk.pairs)
            for (int p : pairsByS[x.tgtAt(CellRef{d, yy}, n).idx])
              checkInterchange(n, k, d, pk.pairs[p].first, pk.pairs[p].second, yy, ww);
        }
  } else {
    // Deterministic seeded sampling of `budget` tuples per family.
    std::vector<std::pair<int, int>> levels;  // (n, k) with pairs
    for (int k = 1; k <= maxDim; ++k)
      for (int n = 0; n < k; ++n)
        if (!tables[k][n].pairs.empty()) levels.emplace_back(n, k);
    if (!levels.empty()) {
      for (std::int64_t s = 0; s < opts.budget; ++s) {
        auto [n, k] = levels[rng() % levels.size()];
        const auto& pr = tables[k][n].pairs[rng() % tables[k][n].pairs.size()];
        checkST(n, k, pr.first, pr.second);
      }
      for (std::int64_t s = 0; s < opts.budget; ++s) {
        auto [n, k] = levels[rng() % levels.size()];
        const auto& pr = tables[k][n].pairs[rng() % tables[k][n].pairs.size()];
        const auto& ext = tables[k][n].byS[x.tgtAt(CellRef{k, pr.first}, n).idx];
        if (ext.empty()) continue;
        checkAssoc(n, k, ext[rng() % ext.size()], pr.first, pr.second);
      }
    }
    std::vector<std::array<int, 2>> interLevels;
    std::vector<int> interDims;
    for (int d = 2; d <= maxDim; ++d)
      for (int k = 1; k < d; ++k)
        for (int n = 0; n < k; ++n)
          if (!tables[d][k].pairs.empty()) {
            interLevels.push_back({n, k});
            interDims.push_back(d);
          }
    if (!interLevels.empty()) {
      for (std::int64_t s = 0; s < opts.budget; ++s) {
        std::size_t pick = rng() % interLevels.size();
        int n = interLevels[pick][0], k = interLevels[pick][1], d = interDims[pick];
        const PairTable& pk = tables[d][k];
        const auto& yw = pk.pairs[rng() % pk.pairs.size()];
        // Draw a compatible (x, z): s_n(x) = t_n(y).
        int want = x.tgtAt(CellRef{d, yw.first}, n).idx;
        const auto& cand = pk.pairs[rng() % pk.pairs.size()];
        if (x.srcAt(CellRef{d, cand.first}, n).idx != want) continue;
        checkInterchange(n, k, d, cand.first, cand.second, yw.first, yw.second);
      }
    }
  }

  return report;
}

}  // namespace ocat
