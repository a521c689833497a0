#include "quinn/move_script.hpp"

#include <cctype>
#include <sstream>

#include "quinn/ambialgebra.hpp"
#include "quinn/tree_syntax.hpp"

namespace quinn {

namespace {

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

std::string at(const NodePath& p) { return "@" + p.str(); }

AlgebraElement trace_element(const FusionCategory& cat, const TraceUnitMove& m) {
  switch (m.source) {
    case TraceUnitMove::Source::TraceUnit:
      return trace_unit_solve(cat);
    case TraceUnitMove::Source::Unit:
      return unit_e(cat);
    case TraceUnitMove::Source::Explicit:
      break;
  }
  if (m.element.coeffs.size() != cat.size()) throw Error("trace element has the wrong length");
  return m.element;
}

ScriptState step(const FusionCategory& cat, const Move& move, ScriptState state) {
  if (auto* split = std::get_if<SplitState>(&state)) {
    if (const auto* g = std::get_if<GlueMove>(&move)) return glue(cat, *split, g->pairing);
    throw Error("only glue may follow a split");
  }
  const StateVector& s = std::get<StateVector>(state);
  return std::visit(
      Overloaded{
          [&](const AssocMove& m) -> ScriptState { return assoc(cat, s, m.path, m.direction); },
          [&](const InsertUnitMove& m) -> ScriptState {
            return insert_unit_leaf(s, m.path, m.side);
          },
          [&](const RemoveUnitMove& m) -> ScriptState { return remove_unit_leaf(s, m.path); },
          [&](const TraceUnitMove& m) -> ScriptState {
            return attach_trace_unit(cat, s, m.path, trace_element(cat, m));
          },
          [&](const SplitMove& m) -> ScriptState { return split_at(s, m.path); },
          [&](const GlueMove&) -> ScriptState { throw Error("glue without a preceding split"); },
          [&](const FormMove& m) -> ScriptState { return apply_form(cat, s, m.path); },
          [&](const CoformMove& m) -> ScriptState {
            return apply_coform(cat, s, m.path, m.object);
          },
          [&](const NormalizeMove&) -> ScriptState { return normalize(s); },
      },
      move);
}

StateVector run(const FusionCategory& cat, const MoveScript& script, const StateVector& start,
                std::vector<TraceStep>* trace) {
  if (!(start.shape() == script.input_shape)) {
    throw Error("start tree does not have the script's input shape");
  }
  ScriptState state = start;
  for (std::size_t i = 0; i < script.moves.size(); ++i) {
    try {
      state = step(cat, script.moves[i], std::move(state));
    } catch (const ScriptError&) {
      throw;
    } catch (const Error& e) {
      throw ScriptError(i, print_move(cat, script.moves[i]) + ": " + e.what());
    }
    if (trace) trace->push_back({i, print_move(cat, script.moves[i]), state});
  }
  if (std::holds_alternative<SplitState>(state)) {
    throw ScriptError(script.moves.empty() ? 0 : script.moves.size() - 1,
                      "script ends between split and glue");
  }
  return normalize(std::get<StateVector>(state));
}

void require_node(const Shape& shape, const NodePath& p, bool internal, const char* what) {
  auto i = shape.find(p);
  if (!i || shape.is_leaf(*i) == internal) {
    throw Error(std::string("descriptor: ") + at(p) + " is not " + what);
  }
}

}  // namespace

StateVector evaluate(const FusionCategory& cat, const MoveScript& script, const StateVector& start) {
  return run(cat, script, start, nullptr);
}

StateVector evaluate_traced(const FusionCategory& cat, const MoveScript& script,
                            const StateVector& start, std::vector<TraceStep>& trace) {
  return run(cat, script, start, &trace);
}

Shape shape_check(const FusionCategory& cat, const MoveScript& script) {
  // The moves compute the output shape and check paths before they look at
  // any term, so an empty state runs the script on shapes alone.
  return run(cat, script, StateVector(cat.field(), script.input_shape), nullptr).shape();
}

VertexDescriptor example_vertex_descriptor() {
  const Shape l = Shape::leaf();
  return {Shape::fork(l, Shape::fork(Shape::fork(l, l), l)), NodePath("R")};
}

BubbleDescriptor example_bubble_descriptor() {
  const Shape l = Shape::leaf();
  return {Shape::fork(l, l), NodePath("L")};
}

BubbleDescriptor nested_bubble_descriptor() {
  const Shape l = Shape::leaf();
  return {Shape::fork(Shape::fork(l, l), l), NodePath("LL")};
}

MoveScript new_sequence(const VertexDescriptor& site) {
  const NodePath& p = site.vertex;
  require_node(site.shape, p, true, "an internal node");
  require_node(site.shape, p.left(), true, "an internal node");
  const auto P = [&](std::string_view tail) { return p + NodePath(tail); };
  MoveScript s{"newseq", site.shape, {}};
  s.moves = {
      InsertUnitMove{P("LR"), Side::Right},
      TraceUnitMove{P("LRR"), TraceUnitMove::Source::TraceUnit, {}},
      AssocMove{P("LR"), AssocDirection::Left},
      AssocMove{P("L"), AssocDirection::Left},
      AssocMove{p, AssocDirection::Right},
      SplitMove{P("R")},
      GlueMove{{P("LRR"), NodePath("L")}},
      RemoveUnitMove{P("R")},
      AssocMove{P("RR"), AssocDirection::Left},
      FormMove{P("RRL")},
      RemoveUnitMove{P("RRL")},
  };
  return s;
}

MoveScript vertex_pass(const VertexDescriptor& site) {
  require_node(site.shape, site.vertex, true, "an internal node");
  require_node(site.shape, site.vertex.left(), true, "an internal node");
  return {"vertexpass", site.shape, {AssocMove{site.vertex, AssocDirection::Right}}};
}

MoveScript bubble_relation(const BubbleDescriptor& site) {
  const NodePath& b = site.leaf;
  require_node(site.shape, b, false, "a leaf");
  const auto B = [&](std::string_view tail) { return b + NodePath(tail); };
  MoveScript s{"bubble", site.shape, {}};
  s.moves = {
      InsertUnitMove{b, Side::Right},
      TraceUnitMove{B("R"), TraceUnitMove::Source::TraceUnit, {}},
      AssocMove{b, AssocDirection::Left},
      SplitMove{B("L")},
      GlueMove{{B("R"), NodePath("R")}},
      RemoveUnitMove{B("L")},
      AssocMove{b, AssocDirection::Right},
      FormMove{B("R")},
      RemoveUnitMove{B("R")},
  };
  return s;
}

MoveScript identity_script(const Shape& shape) { return {"identity", shape, {}}; }

RelationReport check_relation(const FusionCategory& cat, const MoveScript& a, const MoveScript& b,
                              const std::optional<std::vector<RootTree>>& start_domain) {
  if (!(a.input_shape == b.input_shape)) throw Error("scripts have different input shapes");
  const Shape out_a = shape_check(cat, a);
  const Shape out_b = shape_check(cat, b);
  if (!(out_a == out_b)) throw Error("scripts have different output shapes");
  const std::vector<RootTree> starts =
      start_domain ? *start_domain : enumerate_admissible(cat, a.input_shape);
  RelationReport report;
  for (const RootTree& t : starts) {
    if (!(t.shape == a.input_shape)) throw Error("start tree does not have the input shape");
    const StateVector in = StateVector::basis(cat.field(), t);
    RelationRow row{t, evaluate(cat, a, in), evaluate(cat, b, in)};
    if (!(row.output_a == row.output_b) && report.equal) {
      report.equal = false;
      report.first_counterexample = report.rows.size();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string print_move(const FusionCategory& cat, const Move& move) {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&](const AssocMove& m) {
                   os << "assoc " << (m.direction == AssocDirection::Left ? 'L' : 'R') << ' '
                      << at(m.path);
                 },
                 [&](const InsertUnitMove& m) {
                   os << "unit+ " << at(m.path) << ' ' << (m.side == Side::Left ? 'L' : 'R');
                 },
                 [&](const RemoveUnitMove& m) { os << "unit- " << at(m.path); },
                 [&](const TraceUnitMove& m) {
                   os << "trace " << at(m.path) << " with ";
                   if (m.source == TraceUnitMove::Source::TraceUnit) {
                     os << 'c';
                   } else if (m.source == TraceUnitMove::Source::Unit) {
                     os << 'e';
                   } else {
                     os << print_element(cat, m.element);
                   }
                 },
                 [&](const SplitMove& m) { os << "split " << at(m.path); },
                 [&](const GlueMove& m) {
                   os << "glue " << at(m.pairing.lower_leaf);
                   if (m.pairing.upper_leaf) os << ' ' << at(*m.pairing.upper_leaf);
                 },
                 [&](const FormMove& m) { os << "form " << at(m.path); },
                 [&](const CoformMove& m) {
                   os << "coform " << at(m.path) << ' ' << cat.name(m.object);
                 },
                 [&](const NormalizeMove&) { os << "norm"; },
             },
             move);
  return os.str();
}

std::string print_script(const FusionCategory& cat, const MoveScript& script) {
  std::ostringstream os;
  if (!script.name.empty()) os << "name " << script.name << '\n';
  os << "input " << print_pattern(cat, free_pattern(script.input_shape)) << '\n';
  for (const Move& m : script.moves) os << print_move(cat, m) << '\n';
  return os.str();
}

namespace {

class ScriptParser {
 public:
  ScriptParser(const FusionCategory& cat, std::string_view text) : cat_(cat), text_(text) {}

  MoveScript parse() {
    MoveScript script;
    bool have_input = false;
    std::size_t begin = 0;
    while (begin <= text_.size()) {
      std::size_t end = text_.find('\n', begin);
      if (end == std::string_view::npos) end = text_.size();
      ++line_;
      std::string_view raw = text_.substr(begin, end - begin);
      if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      words_.clear();
      split_words(raw);
      begin = end + 1;
      if (words_.empty()) continue;
      const std::string& op = words_[0].text;
      if (op == "name") {
        arity(2, 2);
        script.name = words_[1].text;
      } else if (op == "input") {
        if (have_input) fail(0, "duplicate input line");
        if (words_.size() < 2) fail(0, "input needs a tree pattern");
        const std::size_t off = words_[1].column - 1;
        try {
          script.input_shape = parse_pattern(cat_, raw.substr(off)).shape;
        } catch (const ParseError& e) {
          throw ParseError(e.what(), line_, off + e.column());
        }
        have_input = true;
      } else {
        if (!have_input) fail(0, "moves before the input line");
        script.moves.push_back(move());
      }
      if (end == text_.size()) break;
    }
    if (!have_input) throw ParseError("script has no input line", line_ ? line_ : 1, 1);
    return script;
  }

 private:
  struct Word {
    std::string text;
    std::size_t column;
  };

  void split_words(std::string_view raw) {
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i >= raw.size()) break;
      const std::size_t s = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      words_.push_back({std::string(raw.substr(s, i - s)), s + 1});
    }
  }

  [[noreturn]] void fail(std::size_t word, const std::string& msg) const {
    throw ParseError(msg, line_, word < words_.size() ? words_[word].column : 1);
  }

  void arity(std::size_t lo, std::size_t hi) const {
    if (words_.size() < lo) fail(0, "'" + words_[0].text + "' is missing an operand");
    if (words_.size() > hi) fail(hi, "unexpected operand");
  }

  NodePath path(std::size_t w) const {
    const std::string& t = words_[w].text;
    if (t.empty() || t[0] != '@') fail(w, "expected a path like @LR");
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (t[i] != 'L' && t[i] != 'R') fail(w, "path steps must be L or R");
    }
    return NodePath(std::string_view(t).substr(1));
  }

  char side(std::size_t w) const {
    const std::string& t = words_[w].text;
    if (t != "L" && t != "R") fail(w, "expected L or R");
    return t[0];
  }

  Move move() const {
    const std::string& op = words_[0].text;
    if (op == "assoc") {
      arity(3, 3);
      const char d = side(1);
      return AssocMove{path(2), d == 'L' ? AssocDirection::Left : AssocDirection::Right};
    }
    if (op == "unit+") {
      arity(3, 3);
      return InsertUnitMove{path(1), side(2) == 'L' ? Side::Left : Side::Right};
    }
    if (op == "unit-") {
      arity(2, 2);
      return RemoveUnitMove{path(1)};
    }
    if (op == "trace") {
      if (words_.size() < 4 || words_[2].text != "with") fail(0, "expected 'trace @P with c'");
      TraceUnitMove m{path(1), TraceUnitMove::Source::TraceUnit, {}};
      if (words_.size() == 4 && words_[3].text == "c") return m;
      if (words_.size() == 4 && words_[3].text == "e") {
        m.source = TraceUnitMove::Source::Unit;
        return m;
      }
      std::string expr;
      for (std::size_t i = 3; i < words_.size(); ++i) expr += words_[i].text + " ";
      try {
        m.element = parse_element(cat_, expr);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_, words_[3].column);
      }
      m.source = TraceUnitMove::Source::Explicit;
      return m;
    }
    if (op == "split") {
      arity(2, 2);
      return SplitMove{path(1)};
    }
    if (op == "glue") {
      arity(2, 3);
      GlueMove g{{path(1), std::nullopt}};
      if (words_.size() == 3) g.pairing.upper_leaf = path(2);
      return g;
    }
    if (op == "form") {
      arity(2, 2);
      return FormMove{path(1)};
    }
    if (op == "coform") {
      arity(3, 3);
      auto id = cat_.find(words_[2].text);
      if (!id) fail(2, "unknown object '" + words_[2].text + "'");
      return CoformMove{path(1), *id};
    }
    if (op == "norm") {
      arity(1, 1);
      return NormalizeMove{};
    }
    fail(0, "unknown move '" + op + "'");
  }

  const FusionCategory& cat_;
  std::string_view text_;
  std::size_t line_ = 0;
  std::vector<Word> words_;
};

}  // namespace

MoveScript parse_script(const FusionCategory& cat, std::string_view text) {
  return ScriptParser(cat, text).parse();
}

std::optional<MoveScript> builtin_script(std::string_view name) {
  if (name == "newseq") return new_sequence(example_vertex_descriptor());
  if (name == "vertexpass") return vertex_pass(example_vertex_descriptor());
  if (name == "bubble") return bubble_relation(example_bubble_descriptor());
  return std::nullopt;
}

}  // namespace quinn
