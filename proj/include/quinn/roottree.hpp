#pragma once

// Labeled roottrees, state vectors and the primitive rewriting moves.
//
// Trees are stored flat in preorder: a node is followed by its left subtree
// and then its right subtree. Every term of a StateVector shares one Shape;
// only the labels differ. Terms are ordered lexicographically by their
// preorder label sequence.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quinn/algebra_element.hpp"
#include "quinn/fusion_category.hpp"

namespace quinn {

enum class Side { Left, Right };

/// Sequence of L/R steps from the root. The root is the empty path.
class NodePath {
 public:
  NodePath() = default;
  /// Accepts a string over {L, R}; throws Error otherwise.
  explicit NodePath(std::string_view steps);

  const std::string& str() const { return steps_; }
  bool is_root() const { return steps_.empty(); }
  std::size_t depth() const { return steps_.size(); }
  NodePath child(Side s) const;
  NodePath left() const { return child(Side::Left); }
  NodePath right() const { return child(Side::Right); }
  NodePath operator+(const NodePath& tail) const;

  friend auto operator<=>(const NodePath&, const NodePath&) = default;

 private:
  std::string steps_;
};

/// Shape of a full binary tree; may be empty (no nodes at all).
class Shape {
 public:
  Shape() = default;
  static Shape leaf();
  static Shape fork(const Shape& left, const Shape& right);
  /// Preorder leaf flags; throws Error unless they describe one full binary tree.
  static Shape from_preorder(std::vector<bool> leaf_flags);

  bool empty() const { return leaf_.empty(); }
  std::size_t size() const { return leaf_.size(); }
  bool is_leaf(std::size_t i) const { return leaf_[i]; }
  std::size_t leaf_count() const;
  /// One past the last preorder index of the subtree rooted at i.
  std::size_t subtree_end(std::size_t i) const;
  std::size_t left_child(std::size_t i) const { return i + 1; }
  std::size_t right_child(std::size_t i) const { return subtree_end(i + 1); }

  std::optional<std::size_t> find(const NodePath& path) const;
  /// Throws Error when the path leaves the tree.
  std::size_t index(const NodePath& path) const;
  NodePath path_of(std::size_t index) const;

  const std::vector<bool>& preorder() const { return leaf_; }

  friend auto operator<=>(const Shape&, const Shape&) = default;

 private:
  std::vector<bool> leaf_;
};

using Labels = std::vector<ObjectId>;

struct RootTree {
  Shape shape;
  Labels labels;  // preorder, same length as shape

  ObjectId root_label() const { return labels.front(); }
  ObjectId label(const NodePath& path) const { return labels[shape.index(path)]; }

  friend auto operator<=>(const RootTree&, const RootTree&) = default;
};

/// Every internal node (a; b, c) has n(b,c,a) = 1. Does not look at the root.
bool is_admissible_labeling(const FusionCategory& cat, const Shape& shape, const Labels& labels);
/// Admissible and root labeled with the unit.
bool is_admissible(const FusionCategory& cat, const RootTree& tree);
/// Name of the first inadmissible node, or nullopt.
std::optional<NodePath> first_inadmissible_node(const FusionCategory& cat, const RootTree& tree);

/// A formal Z_p-linear combination of roottrees of one shape.
class StateVector {
 public:
  struct Term {
    Labels labels;
    Scalar coeff;
  };

  StateVector(PrimeField field, Shape shape) : field_(field), shape_(std::move(shape)) {}
  static StateVector basis(PrimeField field, const RootTree& tree);

  const PrimeField& field() const { return field_; }
  const Shape& shape() const { return shape_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const;

  /// Appends without combining; call normalize() afterwards.
  void add(Labels labels, Scalar coeff);
  RootTree tree(const Term& t) const { return {shape_, t.labels}; }
  /// Coefficient of a labeling (summed over duplicate raw terms).
  Scalar coefficient(const Labels& labels) const;

  StateVector scaled(Scalar s) const;
  StateVector plus(const StateVector& other) const;

  bool is_normal() const;

  /// Equal as normalized vectors.
  friend bool operator==(const StateVector& x, const StateVector& y);

 private:
  PrimeField field_;
  Shape shape_;
  std::vector<Term> terms_;
};

/// Combines like terms, drops zeros and sorts by preorder labels.
StateVector normalize(const StateVector& state);

/// A formal combination of disjoint pairs of roottrees: an element of the
/// tensor product of two state modules. Produced by split_at, consumed by glue.
class SplitState {
 public:
  struct Term {
    Labels lower;
    Labels upper;
    Scalar coeff;
  };

  SplitState(PrimeField field, Shape lower, Shape upper)
      : field_(field), lower_(std::move(lower)), upper_(std::move(upper)) {}

  const PrimeField& field() const { return field_; }
  const Shape& lower_shape() const { return lower_; }
  const Shape& upper_shape() const { return upper_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(Labels lower, Labels upper, Scalar coeff);
  SplitState normalized() const;

  /// Marginal on the lower factor (sum over upper labelings).
  StateVector lower_part() const;
  StateVector upper_part() const;

  friend bool operator==(const SplitState& x, const SplitState& y);

 private:
  PrimeField field_;
  Shape lower_;
  Shape upper_;
  std::vector<Term> terms_;
};

enum class AssocDirection {
  Left,   // (x (y z)) -> ((x y) z)
  Right,  // ((x y) z) -> (x (y z))
};

/// How the upper fragment of a split is grafted back onto the lower tree.
/// Without `upper_leaf` the fragment replaces the unit leaf at `lower_leaf`.
/// With it, the fragment becomes a sibling of `lower_leaf` so that the paired
/// boundary points (dual labels) end up adjacent.
struct BoundaryPairing {
  NodePath lower_leaf;
  std::optional<NodePath> upper_leaf;

  friend bool operator==(const BoundaryPairing&, const BoundaryPairing&) = default;
};

/// All admissible roottrees of `shape` agreeing with `fixed` where it is set,
/// in lexicographic preorder-label order. A mismatched `fixed` size is an error.
std::vector<RootTree> enumerate_admissible(const FusionCategory& cat, const Shape& shape,
                                           const std::vector<std::optional<ObjectId>>& fixed);
std::vector<RootTree> enumerate_admissible(const FusionCategory& cat, const Shape& shape);

StateVector assoc(const FusionCategory& cat, const StateVector& state, const NodePath& path,
                  AssocDirection direction);
StateVector insert_unit_leaf(const StateVector& state, const NodePath& path, Side side);
StateVector remove_unit_leaf(const StateVector& state, const NodePath& path);
StateVector attach_trace_unit(const FusionCategory& cat, const StateVector& state,
                              const NodePath& leaf_path, const AlgebraElement& element);
SplitState split_at(const StateVector& state, const NodePath& edge_path);
/// Throws Error when paired boundary labels are not dual to each other.
StateVector glue(const FusionCategory& cat, const SplitState& split,
                 const BoundaryPairing& pairing);
StateVector glue(const FusionCategory& cat, const StateVector& lower, const StateVector& upper,
                 const BoundaryPairing& pairing);
/// Tensor product of two state vectors as a SplitState.
SplitState tensor(const StateVector& lower, const StateVector& upper);
/// Places both fragments under a fresh unit root: (lower upper):1, or
/// (upper lower):1 when `swap` is set.
StateVector join(const SplitState& split, bool swap);
StateVector apply_form(const FusionCategory& cat, const StateVector& state,
                       const NodePath& fork_path);
StateVector apply_coform(const FusionCategory& cat, const StateVector& state,
                         const NodePath& leaf_path, ObjectId object);

}  // namespace quinn
