#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eqvb/gl2.hpp"

namespace eqvb {

/// Inclusive label ranges, parsed from "n=0..8,m=-6..6". GL2 x GL2 grids
/// also read n2 and m2, defaulting to the ranges of n and m.
class LabelGrid {
 public:
  LabelGrid() = default;
  static LabelGrid parse(std::string_view text);

  void set(const std::string& key, int lo, int hi);
  bool empty() const { return ranges_.empty(); }

  /// Labels in lexicographic order. An empty grid gives no labels; a grid
  /// missing n or m throws InvalidArgument.
  std::vector<RepLabel> labels(GroupKind group) const;

 private:
  std::map<std::string, std::pair<int, int>> ranges_;
};

}  // namespace eqvb
