#pragma once

#include <cstdint>

#include "ocat/omega_cat.hpp"
#include "ocat/report.hpp"

namespace ocat {

struct AxiomOptions {
  int maxDim = -1;                           // -1: up to the truncation
  std::int64_t exhaustiveLimit = 1'000'000;  // tuple count above which sampling kicks in
  std::int64_t budget = 100'000;             // sampled tuples per family
  std::uint64_t seed = 0;
};

// Exhaustive (or budget-sampled) verification of the strict omega-category
// axioms: globularity, identity boundaries, source-target axioms of
// composites, unit laws, associativity, and interchange. Violations are
// listed with witness tuples.
Report check_axioms(const OmegaCat& x, const AxiomOptions& opts = {});

}  // namespace ocat
