#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "quinn/fusion_category.hpp"
#include "quinn/roottree.hpp"
#include "quinn/tree_syntax.hpp"

namespace testing {

inline std::string fixture(const std::string& name) { return std::string(QUINN_FIXTURES) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture(name), std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Non-blank, non-comment lines of a fixture.
inline std::vector<std::string> fixture_lines(const std::string& name) {
  std::istringstream in(read_fixture(name));
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

inline quinn::FusionCategory load(const std::string& name) {
  return quinn::parse_category(read_fixture(name));
}

inline quinn::StateVector tree_state(const quinn::FusionCategory& cat, const std::string& text) {
  return quinn::StateVector::basis(cat.field(), quinn::parse_tree(cat, text));
}

/// sum of coeff * tree over the given (coeff, tree text) pairs
inline quinn::StateVector combo(const quinn::FusionCategory& cat,
                                const std::vector<std::pair<std::int64_t, std::string>>& terms) {
  quinn::StateVector out = tree_state(cat, terms.front().second).scaled(cat.field().zero());
  for (const auto& [c, t] : terms) out = out.plus(tree_state(cat, t).scaled(cat.field().of(c)));
  return quinn::normalize(out);
}

}  // namespace testing
