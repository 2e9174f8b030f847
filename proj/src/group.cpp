#include "ploi/group.hpp"

#include <unordered_set>

namespace ploi {

GroupSpec::GroupSpec(std::vector<PLMap> generators, std::string label) : label_(std::move(label)) {
  std::unordered_set<PLMap> seen;
  for (auto& g : generators) {
    if (g.is_identity() || !seen.insert(g).second) continue;
    generators_.push_back(std::move(g));
  }
}

std::string GroupSpec::letter_name(int letter) {
  return (letter > 0 ? "a" : "A") + std::to_string(letter > 0 ? letter : -letter);
}

}  // namespace ploi
