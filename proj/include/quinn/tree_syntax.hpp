#pragma once

// Text form of roottrees:
//   leaf  = label
//   fork  = ( tree tree ):label
// A label is an object name, `?name` for a free label, or a bare name that
// starts with a lowercase letter and is not an object (also free). Repeating a
// free name ties those positions to the same label.
// Example: `( A ( A A ):x ):1`.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quinn/roottree.hpp"

namespace quinn {

struct TreePattern {
  Shape shape;
  std::vector<std::optional<ObjectId>> fixed;  // preorder
  std::vector<std::string> variables;          // preorder; empty where fixed

  bool is_ground() const;
};

TreePattern parse_pattern(const FusionCategory& cat, std::string_view text);
/// Throws ParseError on syntax errors, unknown objects or free labels, and
/// Error naming the offending node when the tree is not admissible.
RootTree parse_tree(const FusionCategory& cat, std::string_view text);

/// Admissible completions of a pattern, tied variables respected.
std::vector<RootTree> enumerate_pattern(const FusionCategory& cat, const TreePattern& pattern);

/// A pattern whose every label is free (`?n0`, `?n1`, ... in preorder).
TreePattern free_pattern(const Shape& shape);

std::string print_tree(const FusionCategory& cat, const RootTree& tree);
std::string print_pattern(const FusionCategory& cat, const TreePattern& pattern);
/// `4 * ( A ( A A ):1 ):1 + 3 * ...`, or `0`.
std::string print_state(const FusionCategory& cat, const StateVector& state);
/// `c * [ lower | upper ] + ...`, or `0`.
std::string print_split(const FusionCategory& cat, const SplitState& state);

}  // namespace quinn
