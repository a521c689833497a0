#pragma once

// Scripts of primitive roottree moves and their evaluation to linear maps.
//
// Script text, one move per line (`#` starts a comment):
//   name <identifier>
//   input <tree pattern>
//   assoc L|R @<path>
//   unit+ @<path> L|R
//   unit- @<path>
//   trace @<path> with c|e|<element>
//   split @<path>
//   glue @<lower leaf> [@<upper leaf>]
//   form @<path>
//   coform @<path> <object>
//   norm
// A path is a string over {L, R}; `@` alone is the root.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "quinn/algebra_element.hpp"
#include "quinn/fusion_category.hpp"
#include "quinn/roottree.hpp"

namespace quinn {

struct AssocMove {
  NodePath path;
  AssocDirection direction;
  friend bool operator==(const AssocMove&, const AssocMove&) = default;
};
struct InsertUnitMove {
  NodePath path;
  Side side;
  friend bool operator==(const InsertUnitMove&, const InsertUnitMove&) = default;
};
struct RemoveUnitMove {
  NodePath path;
  friend bool operator==(const RemoveUnitMove&, const RemoveUnitMove&) = default;
};
struct TraceUnitMove {
  enum class Source { TraceUnit, Unit, Explicit };
  NodePath path;
  Source source = Source::TraceUnit;
  AlgebraElement element;  // used when source == Explicit
  friend bool operator==(const TraceUnitMove&, const TraceUnitMove&) = default;
};
struct SplitMove {
  NodePath path;
  friend bool operator==(const SplitMove&, const SplitMove&) = default;
};
struct GlueMove {
  BoundaryPairing pairing;
  friend bool operator==(const GlueMove&, const GlueMove&) = default;
};
struct FormMove {
  NodePath path;
  friend bool operator==(const FormMove&, const FormMove&) = default;
};
struct CoformMove {
  NodePath path;
  ObjectId object;
  friend bool operator==(const CoformMove&, const CoformMove&) = default;
};
struct NormalizeMove {
  friend bool operator==(const NormalizeMove&, const NormalizeMove&) = default;
};

using Move = std::variant<AssocMove, InsertUnitMove, RemoveUnitMove, TraceUnitMove, SplitMove,
                          GlueMove, FormMove, CoformMove, NormalizeMove>;

struct MoveScript {
  std::string name;
  Shape input_shape;
  std::vector<Move> moves;

  friend bool operator==(const MoveScript&, const MoveScript&) = default;
};

/// Error raised while evaluating or checking a script; carries the 0-based
/// index of the failing move.
class ScriptError : public Error {
 public:
  ScriptError(std::size_t move_index, const std::string& msg)
      : Error("move " + std::to_string(move_index + 1) + ": " + msg), index_(move_index) {}
  std::size_t move_index() const { return index_; }

 private:
  std::size_t index_;
};

using ScriptState = std::variant<StateVector, SplitState>;

struct TraceStep {
  std::size_t move_index;
  std::string move_text;
  ScriptState state;
};

StateVector evaluate(const FusionCategory& cat, const MoveScript& script, const StateVector& start);
/// Same as evaluate, recording the state after every move.
StateVector evaluate_traced(const FusionCategory& cat, const MoveScript& script,
                            const StateVector& start, std::vector<TraceStep>& trace);

/// Runs the script on shapes alone; returns the output shape or throws ScriptError.
Shape shape_check(const FusionCategory& cat, const MoveScript& script);

/// A vertex site: the node a of a subtree a -> ((c d):e b).
struct VertexDescriptor {
  Shape shape;
  NodePath vertex;
};
/// A leaf b where a circle is created and absorbed again.
struct BubbleDescriptor {
  Shape shape;
  NodePath leaf;
};

/// ( ?g ( ( ?c ?d ):?e ?b ):?a ):1 with the vertex at R.
VertexDescriptor example_vertex_descriptor();
/// ( ?b ?g ):1 with the bubble at L.
BubbleDescriptor example_bubble_descriptor();
/// ( ( ?b ?h ):?k ?g ):1 with the bubble at LL.
BubbleDescriptor nested_bubble_descriptor();

/// Trace unit beside d, carry the circle's r-bar end over to b, split b off
/// on the unit channel, glue it back beside r, then close the circle with the
/// form. Maps ((c d):e b):a to combinations of (c (d b):x):a.
MoveScript new_sequence(const VertexDescriptor& site);
/// The single associativity move ((c d) b) -> (c (d b)).
MoveScript vertex_pass(const VertexDescriptor& site);
/// Create a circle beside b with the trace unit, split and reglue it, then
/// absorb it with the form.
MoveScript bubble_relation(const BubbleDescriptor& site);
MoveScript identity_script(const Shape& shape);

struct RelationRow {
  RootTree start;
  StateVector output_a;
  StateVector output_b;
};

struct RelationReport {
  bool equal = true;
  std::vector<RelationRow> rows;
  std::optional<std::size_t> first_counterexample;
};

/// Evaluates both scripts on every start tree (default: every admissible
/// labeling of the shared input shape). Throws Error on a shape mismatch.
RelationReport check_relation(const FusionCategory& cat, const MoveScript& a, const MoveScript& b,
                              const std::optional<std::vector<RootTree>>& start_domain = {});

std::string print_move(const FusionCategory& cat, const Move& move);
std::string print_script(const FusionCategory& cat, const MoveScript& script);
MoveScript parse_script(const FusionCategory& cat, std::string_view text);

/// `newseq`, `vertexpass`, `bubble` (default sites) or nullopt.
std::optional<MoveScript> builtin_script(std::string_view name);

}  // namespace quinn
