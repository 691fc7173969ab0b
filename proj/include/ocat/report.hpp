#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ocat/tag.hpp"

namespace ocat {

struct Witness {
  std::string rule;        // which law or clause failed
  std::vector<Tag> cells;  // the offending tuple, in order
  std::string detail;
};

// Outcome of a verification sweep. Violations are report content, not faults;
// an empty witness list is the certificate.
struct Report {
  std::string check;
  std::vector<Witness> witnesses;
  std::map<std::string, std::int64_t> counts;
  std::int64_t suppressed = 0;  // violations found beyond the storage cap

  static constexpr std::size_t kMaxWitnesses = 200;

  bool ok() const { return witnesses.empty() && suppressed == 0; }
  void add(std::string rule, std::vector<Tag> cells, std::string detail = {});
  void bump(const std::string& key, std::int64_t n = 1) { counts[key] += n; }
  void merge(const Report& other);
  std::string summary() const;
};

}  // namespace ocat
