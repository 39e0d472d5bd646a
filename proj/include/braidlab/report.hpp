#pragma once

#include <string>
#include <vector>

namespace braidlab {

/// One verification suite: a named batch of (check, instance) pairs.
/// Failures keep their instance descriptors; passes are only counted.
struct Suite {
  std::string name;
  size_t checked = 0;
  std::vector<std::pair<std::string, std::string>> failures;  // (check, instance)

  void record(const std::string& check, const std::string& instance, bool ok) {
    checked++;
    if (!ok) failures.push_back({check, instance});
  }
  bool ok() const { return failures.empty(); }
};

}  // namespace braidlab
