#ifndef BSG_REPORT_HPP
#define BSG_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace bsg {

// Outcome of the validate_* family: empty means every invariant holds.
struct ValidationReport {
  std::vector<std::string> issues;

  bool ok() const noexcept { return issues.empty(); }
  explicit operator bool() const noexcept { return ok(); }

  void add(std::string issue) { issues.push_back(std::move(issue)); }
  void append(const ValidationReport& other) {
    issues.insert(issues.end(), other.issues.begin(), other.issues.end());
  }
};

}  // namespace bsg

#endif  // BSG_REPORT_HPP
