#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace leech {

struct Violation {
  std::string check;    // which axiom or identity failed
  int element = -1;     // monoid element involved, -1 when not applicable
  std::string witness;  // coordinates or context pinpointing the failure
};

class ValidationReport {
public:
  bool passed() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }

  void fail(std::string check, int element, std::string witness) {
    violations_.push_back({std::move(check), element, std::move(witness)});
  }

  void merge(const ValidationReport& other) {
    violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
  }

  std::string summary() const {
    if (passed()) return "ok";
    std::ostringstream os;
    os << violations_.size() << " violation(s):";
    for (const auto& v : violations_) {
      os << "\n  [" << v.check << "]";
      if (v.element >= 0) os << " at element " << v.element;
      if (!v.witness.empty()) os << ": " << v.witness;
    }
    return os.str();
  }

private:
  std::vector<Violation> violations_;
};

}  // namespace leech
