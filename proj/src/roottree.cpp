#include "quinn/roottree.hpp"

#include <algorithm>
#include <map>

namespace quinn {

// ---------------------------------------------------------------- paths

NodePath::NodePath(std::string_view steps) : steps_(steps) {
  for (char c : steps_) {
    if (c != 'L' && c != 'R') throw Error("bad node path '" + steps_ + "'");
  }
}

NodePath NodePath::child(Side s) const {
  NodePath p = *this;
  p.steps_.push_back(s == Side::Left ? 'L' : 'R');
  return p;
}

NodePath NodePath::operator+(const NodePath& tail) const {
  NodePath p = *this;
  p.steps_ += tail.steps_;
  return p;
}

// ---------------------------------------------------------------- shapes

Shape Shape::leaf() {
  Shape s;
  s.leaf_ = {true};
  return s;
}

Shape Shape::fork(const Shape& left, const Shape& right) {
  if (left.empty() || right.empty()) throw Error("fork of an empty shape");
  Shape s;
  s.leaf_.reserve(1 + left.size() + right.size());
  s.leaf_.push_back(false);
  s.leaf_.insert(s.leaf_.end(), left.leaf_.begin(), left.leaf_.end());
  s.leaf_.insert(s.leaf_.end(), right.leaf_.begin(), right.leaf_.end());
  return s;
}

Shape Shape::from_preorder(std::vector<bool> leaf_flags) {
  // A preorder sequence is one full binary tree iff the count of open slots
  // reaches zero exactly at the end.
  std::size_t open = 1;
  for (std::size_t i = 0; i < leaf_flags.size(); ++i) {
    if (open == 0) throw Error("preorder describes more than one tree");
    open = leaf_flags[i] ? open - 1 : open + 1;
  }
  if (!leaf_flags.empty() && open != 0) throw Error("preorder is incomplete");
  Shape s;
  s.leaf_ = std::move(leaf_flags);
  return s;
}

std::size_t Shape::leaf_count() const {
  return static_cast<std::size_t>(std::count(leaf_.begin(), leaf_.end(), true));
}

std::size_t Shape::subtree_end(std::size_t i) const {
  std::size_t open = 1;
  while (open > 0) {
    open = leaf_[i] ? open - 1 : open + 1;
    ++i;
  }
  return i;
}

std::optional<std::size_t> Shape::find(const NodePath& path) const {
  if (empty()) return std::nullopt;
  std::size_t i = 0;
  for (char step : path.str()) {
    if (leaf_[i]) return std::nullopt;
    i = (step == 'L') ? left_child(i) : right_child(i);
  }
  return i;
}

std::size_t Shape::index(const NodePath& path) const {
  auto i = find(path);
  if (!i) throw Error("path @" + path.str() + " does not address a node");
  return *i;
}

NodePath Shape::path_of(std::size_t target) const {
  NodePath path;
  std::size_t i = 0;
  while (i != target) {
    if (leaf_[i] || target >= subtree_end(i)) throw Error("node index out of range");
    const std::size_t r = right_child(i);
    if (target < r) {
      path = path.left();
      i = left_child(i);
    } else {
      path = path.right();
      i = r;
    }
  }
  return path;
}

// ---------------------------------------------------------------- admissibility

bool is_admissible_labeling(const FusionCategory& cat, const Shape& shape, const Labels& labels) {
  if (labels.size() != shape.size()) return false;
  for (ObjectId l : labels) {
    if (!cat.valid(l)) return false;
  }
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (shape.is_leaf(i)) continue;
    if (!cat.n(labels[shape.left_child(i)], labels[shape.right_child(i)], labels[i])) return false;
  }
  return true;
}

bool is_admissible(const FusionCategory& cat, const RootTree& tree) {
  return !tree.shape.empty() && tree.labels.size() == tree.shape.size() &&
         tree.root_label() == kUnit && is_admissible_labeling(cat, tree.shape, tree.labels);
}

std::optional<NodePath> first_inadmissible_node(const FusionCategory& cat, const RootTree& tree) {
  if (tree.shape.empty()) return std::nullopt;
  if (tree.root_label() != kUnit) return NodePath{};
  for (std::size_t i = 0; i < tree.shape.size(); ++i) {
    if (tree.shape.is_leaf(i)) continue;
    const auto& l = tree.labels;
    if (!cat.n(l[tree.shape.left_child(i)], l[tree.shape.right_child(i)], l[i])) {
      return tree.shape.path_of(i);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- state vectors

StateVector StateVector::basis(PrimeField field, const RootTree& tree) {
  StateVector v(field, tree.shape);
  v.add(tree.labels, field.one());
  return v;
}

bool StateVector::is_zero() const { return normalize(*this).terms().empty(); }

void StateVector::add(Labels labels, Scalar coeff) {
  if (labels.size() != shape_.size()) throw Error("term does not match the state's shape");
  terms_.push_back({std::move(labels), coeff});
}

Scalar StateVector::coefficient(const Labels& labels) const {
  Scalar s = field_.zero();
  for (const auto& t : terms_) {
    if (t.labels == labels) s = field_.add(s, t.coeff);
  }
  return s;
}

StateVector StateVector::scaled(Scalar s) const {
  StateVector out(field_, shape_);
  for (const auto& t : terms_) out.add(t.labels, field_.mul(t.coeff, s));
  return normalize(out);
}

StateVector StateVector::plus(const StateVector& other) const {
  if (!(shape_ == other.shape_)) throw Error("adding state vectors of different shapes");
  StateVector out = *this;
  for (const auto& t : other.terms_) out.add(t.labels, t.coeff);
  return normalize(out);
}

bool StateVector::is_normal() const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff.is_zero()) return false;
    if (i > 0 && !(terms_[i - 1].labels < terms_[i].labels)) return false;
  }
  return true;
}

bool operator==(const StateVector& x, const StateVector& y) {
  if (!(x.field_ == y.field_)) return false;
  const StateVector nx = normalize(x);
  const StateVector ny = normalize(y);
  if (nx.terms_.empty() && ny.terms_.empty()) return true;
  if (!(x.shape_ == y.shape_) || nx.terms_.size() != ny.terms_.size()) return false;
  for (std::size_t i = 0; i < nx.terms_.size(); ++i) {
    if (nx.terms_[i].labels != ny.terms_[i].labels || nx.terms_[i].coeff != ny.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

StateVector normalize(const StateVector& state) {
  const PrimeField& f = state.field();
  std::map<Labels, Scalar> acc;
  for (const auto& t : state.terms()) {
    auto [it, inserted] = acc.try_emplace(t.labels, t.coeff);
    if (!inserted) it->second = f.add(it->second, t.coeff);
  }
  StateVector out(f, state.shape());
  for (auto& [labels, coeff] : acc) {
    if (!coeff.is_zero()) out.add(labels, coeff);
  }
  return out;
}

void SplitState::add(Labels lower, Labels upper, Scalar coeff) {
  if (lower.size() != lower_.size() || upper.size() != upper_.size()) {
    throw Error("term does not match the split shapes");
  }
  terms_.push_back({std::move(lower), std::move(upper), coeff});
}

SplitState SplitState::normalized() const {
  std::map<std::pair<Labels, Labels>, Scalar> acc;
  for (const auto& t : terms_) {
    auto [it, inserted] = acc.try_emplace({t.lower, t.upper}, t.coeff);
    if (!inserted) it->second = field_.add(it->second, t.coeff);
  }
  SplitState out(field_, lower_, upper_);
  for (auto& [key, coeff] : acc) {
    if (!coeff.is_zero()) out.add(key.first, key.second, coeff);
  }
  return out;
}

StateVector SplitState::lower_part() const {
  StateVector v(field_, lower_);
  for (const auto& t : terms_) v.add(t.lower, t.coeff);
  return normalize(v);
}

StateVector SplitState::upper_part() const {
  StateVector v(field_, upper_);
  for (const auto& t : terms_) v.add(t.upper, t.coeff);
  return normalize(v);
}

bool operator==(const SplitState& x, const SplitState& y) {
  const SplitState nx = x.normalized();
  const SplitState ny = y.normalized();
  if (!(nx.field_ == ny.field_)) return false;
  if (nx.terms_.empty() && ny.terms_.empty()) return true;
  if (!(nx.lower_ == ny.lower_) || !(nx.upper_ == ny.upper_)) return false;
  if (nx.terms_.size() != ny.terms_.size()) return false;
  for (std::size_t i = 0; i < nx.terms_.size(); ++i) {
    const auto& a = nx.terms_[i];
    const auto& b = ny.terms_[i];
    if (a.lower != b.lower || a.upper != b.upper || a.coeff != b.coeff) return false;
  }
  return true;
}

// ---------------------------------------------------------------- enumeration

std::vector<RootTree> enumerate_admissible(const FusionCategory& cat, const Shape& shape,
                                           const std::vector<std::optional<ObjectId>>& fixed) {
  if (fixed.size() != shape.size()) throw Error("partial labeling does not match the shape");
  std::vector<RootTree> out;
  if (shape.empty()) return out;
  for (const auto& f : fixed) {
    if (f && !cat.valid(*f)) throw Error("fixed label is not an object");
  }
  if (fixed[0] && *fixed[0] != kUnit) return out;

  const std::size_t n = shape.size();
  std::vector<std::size_t> free;
  Labels labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = fixed[i].value_or(kUnit);
    if (!fixed[i]) free.push_back(i);
  }
  // Odometer over the free positions, last one fastest: lexicographic order.
  const auto k = static_cast<std::uint16_t>(cat.size());
  while (true) {
    if (labels[0] == kUnit && is_admissible_labeling(cat, shape, labels)) {
      out.push_back({shape, labels});
    }
    std::size_t j = free.size();
    while (j > 0) {
      ObjectId& slot = labels[free[j - 1]];
      if (slot.value + 1 < k) {
        ++slot.value;
        break;
      }
      slot = kUnit;
      --j;
    }
    if (j == 0) return out;
  }
}

std::vector<RootTree> enumerate_admissible(const FusionCategory& cat, const Shape& shape) {
  return enumerate_admissible(cat, shape, std::vector<std::optional<ObjectId>>(shape.size()));
}

// ---------------------------------------------------------------- moves

namespace {

void append(std::vector<bool>& out, const Shape& s, std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) out.push_back(s.is_leaf(i));
}

void append(Labels& out, const Labels& l, std::size_t begin, std::size_t end) {
  out.insert(out.end(), l.begin() + static_cast<std::ptrdiff_t>(begin),
             l.begin() + static_cast<std::ptrdiff_t>(end));
}

std::string at(const NodePath& p) { return "@" + p.str(); }

}  // namespace

StateVector assoc(const FusionCategory& cat, const StateVector& state, const NodePath& path,
                  AssocDirection direction) {
  const Shape& s = state.shape();
  const std::size_t i = s.index(path);
  const PrimeField& f = cat.field();
  std::vector<bool> flags;
  append(flags, s, 0, i);

  if (direction == AssocDirection::Left) {
    // (x (y z)_f)_d -> ((x y)_e z)_d
    if (s.is_leaf(i) || s.is_leaf(s.right_child(i))) {
      throw Error("assoc L " + at(path) + ": node is not of the form (x (y z))");
    }
    const std::size_t xs = i + 1, xe = s.subtree_end(xs);
    const std::size_t j = xe;
    const std::size_t ys = j + 1, ye = s.subtree_end(ys);
    const std::size_t zs = ye, ze = s.subtree_end(zs);
    flags.push_back(false);
    flags.push_back(false);
    append(flags, s, xs, xe);
    append(flags, s, ys, ye);
    append(flags, s, zs, ze);
    append(flags, s, ze, s.size());
    StateVector out(f, Shape::from_preorder(std::move(flags)));
    for (const auto& t : state.terms()) {
      const auto& l = t.labels;
      const ObjectId x = l[xs], y = l[ys], z = l[zs], d = l[i], fch = l[j];
      for (ObjectId e : cat.left_channels(x, y, z, d)) {
        const Scalar c = f.mul(t.coeff, cat.f_entry(x, y, z, d, e, fch));
        if (c.is_zero()) continue;
        Labels nl;
        nl.reserve(l.size());
        append(nl, l, 0, i);
        nl.push_back(d);
        nl.push_back(e);
        append(nl, l, xs, xe);
        append(nl, l, ys, ye);
        append(nl, l, zs, ze);
        append(nl, l, ze, l.size());
        out.add(std::move(nl), c);
      }
    }
    return normalize(out);
  }

  // ((x y)_e z)_d -> (x (y z)_f)_d
  if (s.is_leaf(i) || s.is_leaf(i + 1)) {
    throw Error("assoc R " + at(path) + ": node is not of the form ((x y) z)");
  }
  const std::size_t j = i + 1;
  const std::size_t xs = j + 1, xe = s.subtree_end(xs);
  const std::size_t ys = xe, ye = s.subtree_end(ys);
  const std::size_t zs = ye, ze = s.subtree_end(zs);
  flags.push_back(false);
  append(flags, s, xs, xe);
  flags.push_back(false);
  append(flags, s, ys, ye);
  append(flags, s, zs, ze);
  append(flags, s, ze, s.size());
  StateVector out(f, Shape::from_preorder(std::move(flags)));
  for (const auto& t : state.terms()) {
    const auto& l = t.labels;
    const ObjectId x = l[xs], y = l[ys], z = l[zs], d = l[i], e = l[j];
    for (ObjectId fch : cat.right_channels(x, y, z, d)) {
      const Scalar c = f.mul(t.coeff, cat.f_inverse_entry(x, y, z, d, fch, e));
      if (c.is_zero()) continue;
      Labels nl;
      nl.reserve(l.size());
      append(nl, l, 0, i);
      nl.push_back(d);
      append(nl, l, xs, xe);
      nl.push_back(fch);
      append(nl, l, ys, ye);
      append(nl, l, zs, ze);
      append(nl, l, ze, l.size());
      out.add(std::move(nl), c);
    }
  }
  return normalize(out);
}

StateVector insert_unit_leaf(const StateVector& state, const NodePath& path, Side side) {
  const Shape& s = state.shape();
  if (s.empty()) throw Error("unit+ " + at(path) + ": empty shape");
  const std::size_t i = s.index(path);
  const std::size_t e = s.subtree_end(i);
  std::vector<bool> flags;
  append(flags, s, 0, i);
  flags.push_back(false);
  if (side == Side::Left) flags.push_back(true);
  append(flags, s, i, e);
  if (side == Side::Right) flags.push_back(true);
  append(flags, s, e, s.size());
  StateVector out(state.field(), Shape::from_preorder(std::move(flags)));
  for (const auto& t : state.terms()) {
    const auto& l = t.labels;
    Labels nl;
    append(nl, l, 0, i);
    nl.push_back(l[i]);
    if (side == Side::Left) nl.push_back(kUnit);
    append(nl, l, i, e);
    if (side == Side::Right) nl.push_back(kUnit);
    append(nl, l, e, l.size());
    out.add(std::move(nl), t.coeff);
  }
  return normalize(out);
}

StateVector remove_unit_leaf(const StateVector& state, const NodePath& path) {
  const Shape& s = state.shape();
  if (path.is_root()) throw Error("unit- @: cannot remove the root");
  const std::size_t i = s.index(path);
  if (!s.is_leaf(i)) throw Error("unit- " + at(path) + ": not a leaf");
  for (const auto& t : state.terms()) {
    if (t.labels[i] != kUnit) throw Error("unit- " + at(path) + ": leaf is not labeled 1");
  }
  const std::string parent_steps = path.str().substr(0, path.depth() - 1);
  const std::size_t p = s.index(NodePath(parent_steps));
  const std::size_t sib = (path.str().back() == 'L') ? s.right_child(p) : s.left_child(p);
  const std::size_t sib_end = s.subtree_end(sib);
  const std::size_t p_end = s.subtree_end(p);
  std::vector<bool> flags;
  append(flags, s, 0, p);
  append(flags, s, sib, sib_end);
  append(flags, s, p_end, s.size());
  StateVector out(state.field(), Shape::from_preorder(std::move(flags)));
  for (const auto& t : state.terms()) {
    const auto& l = t.labels;
    Labels nl;
    append(nl, l, 0, p);
    append(nl, l, sib, sib_end);
    append(nl, l, p_end, l.size());
    out.add(std::move(nl), t.coeff);
  }
  return normalize(out);
}

StateVector attach_trace_unit(const FusionCategory& cat, const StateVector& state,
                              const NodePath& leaf_path, const AlgebraElement& element) {
  const Shape& s = state.shape();
  const std::size_t i = s.index(leaf_path);
  if (!s.is_leaf(i)) throw Error("trace " + at(leaf_path) + ": not a leaf");
  if (element.coeffs.size() != cat.size()) throw Error("algebra element has wrong size");
  const PrimeField& f = cat.field();
  std::vector<bool> flags;
  append(flags, s, 0, i);
  flags.push_back(false);
  flags.push_back(true);
  flags.push_back(true);
  append(flags, s, i + 1, s.size());
  StateVector out(f, Shape::from_preorder(std::move(flags)));
  for (const auto& t : state.terms()) {
    const auto& l = t.labels;
    for (ObjectId a : cat.objects()) {
      const Scalar c = f.mul(t.coeff, element[a]);
      if (c.is_zero() || !cat.n(a, cat.dual(a), l[i])) continue;
      Labels nl;
      append(nl, l, 0, i);
      nl.push_back(l[i]);
      nl.push_back(a);
      nl.push_back(cat.dual(a));
      append(nl, l, i + 1, l.size());
      out.add(std::move(nl), c);
    }
  }
  return normalize(out);
}

SplitState split_at(const StateVector& state, const NodePath& edge_path) {
  const Shape& s = state.shape();
  if (edge_path.is_root()) throw Error("split @: the root has no edge above it");
  const std::size_t i = s.index(edge_path);
  const std::size_t e = s.subtree_end(i);
  std::vector<bool> lower_flags;
  append(lower_flags, s, 0, i);
  lower_flags.push_back(true);
  append(lower_flags, s, e, s.size());
  std::vector<bool> upper_flags;
  append(upper_flags, s, i, e);
  SplitState out(state.field(), Shape::from_preorder(std::move(lower_flags)),
                 Shape::from_preorder(std::move(upper_flags)));
  for (const auto& t : state.terms()) {
    const auto& l = t.labels;
    if (l[i] != kUnit) continue;
    Labels lower;
    append(lower, l, 0, i);
    lower.push_back(kUnit);
    append(lower, l, e, l.size());
    Labels upper;
    append(upper, l, i, e);
    out.add(std::move(lower), std::move(upper), t.coeff);
  }
  return out.normalized();
}

SplitState tensor(const StateVector& lower, const StateVector& upper) {
  if (!(lower.field() == upper.field())) throw Error("tensor of vectors over different fields");
  const PrimeField& f = lower.field();
  SplitState out(f, lower.shape(), upper.shape());
  for (const auto& a : lower.terms()) {
    for (const auto& b : upper.terms()) out.add(a.labels, b.labels, f.mul(a.coeff, b.coeff));
  }
  return out.normalized();
}

StateVector glue(const FusionCategory& cat, const SplitState& split,
                 const BoundaryPairing& pairing) {
  const Shape& lo = split.lower_shape();
  const Shape& up = split.upper_shape();
  const PrimeField& f = split.field();
  const std::size_t li = lo.index(pairing.lower_leaf);
  if (!lo.is_leaf(li)) throw Error("glue " + at(pairing.lower_leaf) + ": not a leaf");
  const std::size_t le = li + 1;

  if (!pairing.upper_leaf) {
    // Graft the fragment in place of the unit leaf left behind by a split.
    std::vector<bool> flags;
    append(flags, lo, 0, li);
    append(flags, up, 0, up.size());
    append(flags, lo, le, lo.size());
    StateVector out(f, Shape::from_preorder(std::move(flags)));
    for (const auto& t : split.terms()) {
      if (t.lower[li] != kUnit) {
        throw Error("glue " + at(pairing.lower_leaf) + ": graft site is not labeled 1");
      }
      Labels nl;
      append(nl, t.lower, 0, li);
      append(nl, t.upper, 0, t.upper.size());
      append(nl, t.lower, le, t.lower.size());
      out.add(std::move(nl), t.coeff);
    }
    return normalize(out);
  }

  const std::size_t ui = up.index(*pairing.upper_leaf);
  if (!up.is_leaf(ui)) throw Error("glue: upper " + at(*pairing.upper_leaf) + " is not a leaf");
  const auto& steps = pairing.upper_leaf->str();
  const bool leftmost = steps.find('R') == std::string::npos;
  const bool rightmost = steps.find('L') == std::string::npos;
  if (!leftmost && !rightmost) {
    throw Error("glue: upper " + at(*pairing.upper_leaf) +
                " is not an outer leaf of the fragment");
  }
  // Leftmost boundary point sits right of its partner, rightmost sits left.
  const bool upper_on_right = leftmost;
  std::vector<bool> flags;
  append(flags, lo, 0, li);
  flags.push_back(false);
  if (upper_on_right) {
    flags.push_back(true);
    append(flags, up, 0, up.size());
  } else {
    append(flags, up, 0, up.size());
    flags.push_back(true);
  }
  append(flags, lo, le, lo.size());
  StateVector out(f, Shape::from_preorder(std::move(flags)));
  for (const auto& t : split.terms()) {
    if (t.lower[li] != cat.dual(t.upper[ui])) {
      throw Error("glue: label mismatch in pairing (" + cat.name(t.lower[li]) + " against " +
                  cat.name(t.upper[ui]) + ")");
    }
    if (t.upper[0] != kUnit) throw Error("glue: fragment root is not labeled 1");
    Labels nl;
    append(nl, t.lower, 0, li);
    nl.push_back(t.lower[li]);
    if (upper_on_right) {
      nl.push_back(t.lower[li]);
      append(nl, t.upper, 0, t.upper.size());
    } else {
      append(nl, t.upper, 0, t.upper.size());
      nl.push_back(t.lower[li]);
    }
    append(nl, t.lower, le, t.lower.size());
    out.add(std::move(nl), t.coeff);
  }
  return normalize(out);
}

StateVector glue(const FusionCategory& cat, const StateVector& lower, const StateVector& upper,
                 const BoundaryPairing& pairing) {
  return glue(cat, tensor(lower, upper), pairing);
}

StateVector join(const SplitState& split, bool swap) {
  const Shape& a = swap ? split.upper_shape() : split.lower_shape();
  const Shape& b = swap ? split.lower_shape() : split.upper_shape();
  StateVector out(split.field(), Shape::fork(a, b));
  for (const auto& t : split.terms()) {
    Labels nl{kUnit};
    const Labels& la = swap ? t.upper : t.lower;
    const Labels& lb = swap ? t.lower : t.upper;
    if (la[0] != kUnit || lb[0] != kUnit) throw Error("join: fragment root is not labeled 1");
    append(nl, la, 0, la.size());
    append(nl, lb, 0, lb.size());
    out.add(std::move(nl), t.coeff);
  }
  return normalize(out);
}

StateVector apply_form(const FusionCategory& cat, const StateVector& state,
                       const NodePath& fork_path) {
  const Shape& s = state.shape();
  const std::size_t i = s.index(fork_path);
  if (s.is_leaf(i) || !s.is_leaf(i + 1) || !s.is_leaf(i + 2)) {
    throw Error("form " + at(fork_path) + ": children are not leaves");
  }
  const PrimeField& f = cat.field();
  std::vector<bool> flags;
  append(flags, s, 0, i);
  flags.push_back(true);
  append(flags, s, i + 3, s.size());
  StateVector out(f, Shape::from_preorder(std::move(flags)));
  for (const auto& t : state.terms()) {
    const auto& l = t.labels;
    // Only a unit-labeled fork survives the form.
    if (l[i] != kUnit) continue;
    if (l[i + 2] != cat.dual(l[i + 1])) {
      throw Error("form " + at(fork_path) + ": leaves " + cat.name(l[i + 1]) + "," +
                  cat.name(l[i + 2]) + " are not dual");
    }
    Labels nl;
    append(nl, l, 0, i);
    nl.push_back(kUnit);
    append(nl, l, i + 3, l.size());
    out.add(std::move(nl), f.mul(t.coeff, cat.form_scalar(l[i + 1])));
  }
  return normalize(out);
}

StateVector apply_coform(const FusionCategory& cat, const StateVector& state,
                         const NodePath& leaf_path, ObjectId object) {
  const Shape& s = state.shape();
  const std::size_t i = s.index(leaf_path);
  if (!s.is_leaf(i)) throw Error("coform " + at(leaf_path) + ": not a leaf");
  const PrimeField& f = cat.field();
  const Scalar k = cat.coform_scalar(object);
  std::vector<bool> flags;
  append(flags, s, 0, i);
  flags.push_back(false);
  flags.push_back(true);
  flags.push_back(true);
  append(flags, s, i + 1, s.size());
  StateVector out(f, Shape::from_preorder(std::move(flags)));
  for (const auto& t : state.terms()) {
    const auto& l = t.labels;
    if (l[i] != kUnit) throw Error("coform " + at(leaf_path) + ": leaf is not labeled 1");
    Labels nl;
    append(nl, l, 0, i);
    nl.push_back(kUnit);
    nl.push_back(object);
    nl.push_back(cat.dual(object));
    append(nl, l, i + 1, l.size());
    out.add(std::move(nl), f.mul(t.coeff, k));
  }
  return normalize(out);
}

}  // namespace quinn
