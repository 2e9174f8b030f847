#pragma once

#include <string>
#include <vector>

#include "ploi/plmap.hpp"

namespace ploi {

// A finitely generated subgroup of PL_0(I), described by its generators.
// Identities and repeated generators are dropped on construction, so an
// empty generator list stands for the trivial group.
class GroupSpec {
 public:
  GroupSpec() = default;
  GroupSpec(std::vector<PLMap> generators, std::string label = {});

  const std::vector<PLMap>& generators() const { return generators_; }
  const std::string& label() const { return label_; }
  bool is_trivial() const { return generators_.empty(); }
  std::size_t size() const { return generators_.size(); }

  // "a1", "a2", ... for generators; "A1", ... for their inverses.
  static std::string letter_name(int letter);

 private:
  std::vector<PLMap> generators_;
  std::string label_;
};

}  // namespace ploi
