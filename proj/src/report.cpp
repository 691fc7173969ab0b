#include "ocat/report.hpp"

#include "ocat/error.hpp"

namespace ocat {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::unknown_cell: return "unknown-cell";
    case Errc::dimension_out_of_range: return "dimension-out-of-range";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::not_composable: return "not-composable";
    case Errc::closure_violation: return "closure-violation";
    case Errc::target_mismatch: return "target-mismatch";
    case Errc::action_mismatch: return "action-mismatch";
    case Errc::budget_exceeded: return "budget-exceeded";
    case Errc::schema_violation: return "schema-violation";
    case Errc::invalid_argument: return "invalid-argument";
  }
  return "error";
}

void Report::add(std::string rule, std::vector<Tag> cells, std::string detail) {
  if (witnesses.size() >= kMaxWitnesses) {
    ++suppressed;
    return;
  }
  witnesses.push_back(Witness{std::move(rule), std::move(cells), std::move(detail)});
}

void Report::merge(const Report& other) {
  for (const auto& w : other.witnesses) {
    if (witnesses.size() >= kMaxWitnesses) {
      ++suppressed;
    } else {
      witnesses.push_back(w);
    }
  }
  suppressed += other.suppressed;
  for (const auto& [k, v] : other.counts) counts[k] += v;
}

std::string Report::summary() const {
  std::string out = check.empty() ? std::string("report") : check;
  out += ok() ? ": ok" : ": " + std::to_string(witnesses.size() + suppressed) + " violation(s)";
  for (std::size_t i = 0; i < witnesses.size() && i < 5; ++i) {
    const Witness& w = witnesses[i];
    out += "\n  [" + w.rule + "]";
    for (const Tag& t : w.cells) out += " " + t.str();
    if (!w.detail.empty()) out += " -- " + w.detail;
  }
  if (witnesses.size() > 5) out += "\n  ...";
  return out;
}

}  // namespace ocat
