#include "quinn/tree_syntax.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace quinn {

namespace {

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
}

class TreeParser {
 public:
  TreeParser(const FusionCategory& cat, std::string_view text) : cat_(cat), text_(text) {}

  TreePattern parse() {
    std::vector<bool> flags;
    TreePattern p;
    node(flags, p);
    skip_ws();
    if (pos_ < text_.size()) error("trailing input after tree");
    p.shape = Shape::from_preorder(std::move(flags));
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }

  void label(TreePattern& p) {
    skip_ws();
    const bool explicit_var = pos_ < text_.size() && text_[pos_] == '?';
    if (explicit_var) ++pos_;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
    if (start == pos_) error("expected a label");
    const std::string name(text_.substr(start, pos_ - start));
    if (!explicit_var) {
      if (auto id = cat_.find(name)) {
        p.fixed.push_back(id);
        p.variables.emplace_back();
        return;
      }
      if (!std::islower(static_cast<unsigned char>(name[0]))) {
        pos_ = start;
        error("unknown object '" + name + "'");
      }
    }
    p.fixed.push_back(std::nullopt);
    p.variables.push_back(name);
  }

  void node(std::vector<bool>& flags, TreePattern& p) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      const std::size_t self = flags.size();
      flags.push_back(false);
      p.fixed.emplace_back();
      p.variables.emplace_back();
      node(flags, p);
      node(flags, p);
      expect(')');
      expect(':');
      // The fork label is parsed after its children but stored at its
      // preorder slot.
      TreePattern tmp;
      label(tmp);
      p.fixed[self] = tmp.fixed[0];
      p.variables[self] = tmp.variables[0];
      return;
    }
    flags.push_back(true);
    label(p);
  }

  const FusionCategory& cat_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_node(const FusionCategory& cat, const Shape& s, std::size_t i,
                const std::vector<std::string>& names, std::ostringstream& os) {
  if (s.is_leaf(i)) {
    os << names[i];
    return;
  }
  os << "( ";
  print_node(cat, s, s.left_child(i), names, os);
  os << ' ';
  print_node(cat, s, s.right_child(i), names, os);
  os << " ):" << names[i];
}

std::string print_with(const FusionCategory& cat, const Shape& s,
                       const std::vector<std::string>& names) {
  if (s.empty()) return "()";
  std::ostringstream os;
  print_node(cat, s, 0, names, os);
  return os.str();
}

std::vector<std::string> label_names(const FusionCategory& cat, const Labels& labels) {
  std::vector<std::string> names;
  names.reserve(labels.size());
  for (ObjectId l : labels) names.push_back(cat.name(l));
  return names;
}

}  // namespace

bool TreePattern::is_ground() const {
  for (const auto& f : fixed) {
    if (!f) return false;
  }
  return true;
}

TreePattern parse_pattern(const FusionCategory& cat, std::string_view text) {
  return TreeParser(cat, text).parse();
}

RootTree parse_tree(const FusionCategory& cat, std::string_view text) {
  TreePattern p = parse_pattern(cat, text);
  if (!p.is_ground()) {
    for (std::size_t i = 0; i < p.fixed.size(); ++i) {
      if (!p.fixed[i]) {
        throw ParseError("free label '" + p.variables[i] + "' in a concrete tree", 1, 1);
      }
    }
  }
  RootTree tree{p.shape, {}};
  for (const auto& f : p.fixed) tree.labels.push_back(*f);
  if (tree.root_label() != kUnit) throw Error("root must be labeled " + cat.name(kUnit));
  if (auto bad = first_inadmissible_node(cat, tree)) {
    throw Error("inadmissible node @" + bad->str() + " in " + print_tree(cat, tree));
  }
  return tree;
}

std::vector<RootTree> enumerate_pattern(const FusionCategory& cat, const TreePattern& pattern) {
  auto all = enumerate_admissible(cat, pattern.shape, pattern.fixed);
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < pattern.variables.size(); ++i) {
    if (!pattern.fixed[i]) groups[pattern.variables[i]].push_back(i);
  }
  std::vector<RootTree> out;
  for (auto& t : all) {
    bool ok = true;
    for (const auto& [name, idx] : groups) {
      for (std::size_t k = 1; k < idx.size() && ok; ++k) {
        ok = t.labels[idx[k]] == t.labels[idx[0]];
      }
    }
    if (ok) out.push_back(std::move(t));
  }
  return out;
}

TreePattern free_pattern(const Shape& shape) {
  TreePattern p{shape, std::vector<std::optional<ObjectId>>(shape.size()), {}};
  for (std::size_t i = 0; i < shape.size(); ++i) p.variables.push_back("n" + std::to_string(i));
  return p;
}

std::string print_tree(const FusionCategory& cat, const RootTree& tree) {
  return print_with(cat, tree.shape, label_names(cat, tree.labels));
}

std::string print_pattern(const FusionCategory& cat, const TreePattern& pattern) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < pattern.fixed.size(); ++i) {
    names.push_back(pattern.fixed[i] ? cat.name(*pattern.fixed[i]) : "?" + pattern.variables[i]);
  }
  return print_with(cat, pattern.shape, names);
}

std::string print_state(const FusionCategory& cat, const StateVector& state) {
  const StateVector n = normalize(state);
  if (n.terms().empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : n.terms()) {
    if (!first) os << " + ";
    first = false;
    os << t.coeff.value << " * " << print_with(cat, n.shape(), label_names(cat, t.labels));
  }
  return os.str();
}

std::string print_split(const FusionCategory& cat, const SplitState& state) {
  const SplitState n = state.normalized();
  if (n.terms().empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : n.terms()) {
    if (!first) os << " + ";
    first = false;
    os << t.coeff.value << " * [ " << print_with(cat, n.lower_shape(), label_names(cat, t.lower))
       << " | " << print_with(cat, n.upper_shape(), label_names(cat, t.upper)) << " ]";
  }
  return os.str();
}

}  // namespace quinn
