#pragma once

// Brute-force reference for the primitive moves. Trees are nested values,
// the basis is generated recursively, F inverses are found by exhaustive
// search, and every matrix entry is decided by comparing an input tree with
// an output tree directly. Nothing here calls the roottree move functions.

#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "quinn/fusion_category.hpp"
#include "quinn/roottree.hpp"

namespace oracle {

using quinn::FusionCategory;
using quinn::ObjectId;
using quinn::Scalar;

struct Tree {
  int label = 0;
  std::vector<Tree> kids;  // empty or two

  bool leaf() const { return kids.empty(); }
  friend bool operator==(const Tree&, const Tree&) = default;
};

inline Tree skeleton(const quinn::Shape& s, std::size_t i = 0) {
  if (s.is_leaf(i)) return {};
  return {0, {skeleton(s, s.left_child(i)), skeleton(s, s.right_child(i))}};
}

inline void flatten(const Tree& t, std::vector<bool>& flags, quinn::Labels& labels) {
  flags.push_back(t.leaf());
  labels.push_back(ObjectId{static_cast<std::uint16_t>(t.label)});
  for (const auto& k : t.kids) flatten(k, flags, labels);
}

inline quinn::RootTree to_root_tree(const Tree& t) {
  std::vector<bool> flags;
  quinn::Labels labels;
  flatten(t, flags, labels);
  return {quinn::Shape::from_preorder(std::move(flags)), std::move(labels)};
}

inline bool fuses(const FusionCategory& cat, int a, int b, int c) {
  return cat.n(ObjectId{static_cast<std::uint16_t>(a)}, ObjectId{static_cast<std::uint16_t>(b)},
               ObjectId{static_cast<std::uint16_t>(c)}) != 0;
}

inline int dual(const FusionCategory& cat, int a) {
  return cat.dual(ObjectId{static_cast<std::uint16_t>(a)}).value;
}

/// Every labeling of the skeleton that is admissible below the root.
inline std::vector<Tree> labelings(const FusionCategory& cat, const Tree& sk) {
  const int n = static_cast<int>(cat.size());
  std::vector<Tree> out;
  if (sk.leaf()) {
    for (int a = 0; a < n; ++a) out.push_back({a, {}});
    return out;
  }
  const auto ls = labelings(cat, sk.kids[0]);
  const auto rs = labelings(cat, sk.kids[1]);
  for (const auto& l : ls) {
    for (const auto& r : rs) {
      for (int a = 0; a < n; ++a) {
        if (fuses(cat, l.label, r.label, a)) out.push_back({a, {l, r}});
      }
    }
  }
  return out;
}

inline std::vector<Tree> basis(const FusionCategory& cat, const quinn::Shape& s) {
  std::vector<Tree> out;
  for (auto& t : labelings(cat, skeleton(s))) {
    if (t.label == 0) out.push_back(std::move(t));
  }
  return out;
}

inline const Tree& at(const Tree& t, const std::string& path) {
  const Tree* cur = &t;
  for (char c : path) cur = &cur->kids[c == 'L' ? 0 : 1];
  return *cur;
}

inline Tree& at_mut(Tree& t, const std::string& path) {
  Tree* cur = &t;
  for (char c : path) cur = &cur->kids[c == 'L' ? 0 : 1];
  return *cur;
}

/// The tree with the subtree at `path` replaced by a hole, as text.
inline void context_text(const Tree& t, const std::string& path, std::size_t depth,
                         std::ostringstream& os) {
  if (depth == path.size()) {
    os << '#';
    return;
  }
  os << '(' << t.label;
  for (std::size_t k = 0; k < 2; ++k) {
    os << ' ';
    const bool on_path = (path[depth] == 'L') == (k == 0);
    if (on_path) {
      context_text(t.kids[k], path, depth + 1, os);
    } else {
      std::vector<bool> f;
      quinn::Labels l;
      flatten(t.kids[k], f, l);
      for (std::size_t i = 0; i < f.size(); ++i) os << (f[i] ? 'l' : 'n') << l[i].value;
    }
  }
  os << ')';
}

inline std::string context(const Tree& t, const std::string& path) {
  std::ostringstream os;
  context_text(t, path, 0, os);
  return os.str();
}

/// Scalar weight of a local rewrite from subtree u to subtree v (0 if unrelated).
using Kernel = std::function<Scalar(const Tree& u, const Tree& v)>;

using Entries = std::map<std::pair<quinn::Labels, quinn::Labels>, std::uint32_t>;

/// Matrix entries of a move acting on the subtree at `path`, between the
/// bases of two shapes. Inputs failing `accepts` are left out.
inline Entries local_matrix(const FusionCategory& cat, const quinn::Shape& in_shape,
                            const quinn::Shape& out_shape, const std::string& path,
                            const Kernel& kernel,
                            const std::function<bool(const Tree&)>& accepts = {}) {
  const auto ins = basis(cat, in_shape);
  const auto outs = basis(cat, out_shape);
  std::multimap<std::string, const Tree*> by_context;
  for (const auto& v : outs) by_context.emplace(context(v, path), &v);
  Entries m;
  for (const auto& u : ins) {
    if (accepts && !accepts(u)) continue;
    const auto [lo, hi] = by_context.equal_range(context(u, path));
    for (auto it = lo; it != hi; ++it) {
      const Scalar s = kernel(at(u, path), at(*it->second, path));
      if (!s.is_zero()) m[{to_root_tree(u).labels, to_root_tree(*it->second).labels}] = s.value;
    }
  }
  return m;
}

/// F(x,y,z;d) as a dense table with its brute-force inverse.
class Associator {
 public:
  explicit Associator(const FusionCategory& cat) : cat_(cat) {}

  std::vector<int> lefts(int x, int y, int z, int d) const {
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(cat_.size()); ++e) {
      if (fuses(cat_, x, y, e) && fuses(cat_, e, z, d)) out.push_back(e);
    }
    return out;
  }
  std::vector<int> rights(int x, int y, int z, int d) const {
    std::vector<int> out;
    for (int f = 0; f < static_cast<int>(cat_.size()); ++f) {
      if (fuses(cat_, y, z, f) && fuses(cat_, x, f, d)) out.push_back(f);
    }
    return out;
  }

  Scalar f(int x, int y, int z, int d, int e, int fch) const {
    return cat_.f_entry(id(x), id(y), id(z), id(d), id(e), id(fch));
  }

  /// G[f][e] with sum_f F[e][f] G[f][e'] = delta(e, e').
  Scalar g(int x, int y, int z, int d, int fch, int e) {
    const auto key = std::array<int, 4>{x, y, z, d};
    auto it = inverse_.find(key);
    if (it == inverse_.end()) it = inverse_.emplace(key, search(x, y, z, d)).first;
    const auto es = lefts(x, y, z, d);
    const auto fs = rights(x, y, z, d);
    std::size_t ei = 0, fi = 0;
    while (es[ei] != e) ++ei;
    while (fs[fi] != fch) ++fi;
    return it->second[fi * es.size() + ei];
  }

 private:
  static ObjectId id(int a) { return ObjectId{static_cast<std::uint16_t>(a)}; }

  std::vector<Scalar> search(int x, int y, int z, int d) const {
    const auto es = lefts(x, y, z, d);
    const auto fs = rights(x, y, z, d);
    const std::size_t k = es.size();
    const std::uint32_t p = cat_.prime();
    std::vector<Scalar> g(k * k);
    std::size_t total = 1;
    for (std::size_t i = 0; i < k * k; ++i) total *= p;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (auto& s : g) {
        s = Scalar{static_cast<std::uint32_t>(c % p)};
        c /= p;
      }
      bool ok = true;
      for (std::size_t r = 0; r < k && ok; ++r) {
        for (std::size_t col = 0; col < k && ok; ++col) {
          std::uint64_t acc = 0;
          for (std::size_t m = 0; m < k; ++m) {
            acc += std::uint64_t{f(x, y, z, d, es[r], fs[m]).value} * g[m * k + col].value;
          }
          ok = acc % p == (r == col ? 1u : 0u);
        }
      }
      if (ok) return g;
    }
    throw quinn::Error("oracle: singular F block");
  }

  const FusionCategory& cat_;
  std::map<std::array<int, 4>, std::vector<Scalar>> inverse_;
};

/// Entries of the implementation's map, fed the oracle's basis.
inline Entries implementation_matrix(
    const FusionCategory& cat, const quinn::Shape& in_shape,
    const std::function<quinn::StateVector(const quinn::StateVector&)>& move,
    const std::function<bool(const Tree&)>& accepts = {}) {
  Entries m;
  for (const auto& u : basis(cat, in_shape)) {
    if (accepts && !accepts(u)) continue;
    const quinn::RootTree t = to_root_tree(u);
    const auto out = move(quinn::StateVector::basis(cat.field(), t));
    for (const auto& term : out.terms()) m[{t.labels, term.labels}] = term.coeff.value;
  }
  return m;
}

/// All full binary shapes with exactly n leaves.
inline std::vector<quinn::Shape> shapes_with_leaves(std::size_t n) {
  if (n == 1) return {quinn::Shape::leaf()};
  std::vector<quinn::Shape> out;
  for (std::size_t k = 1; k < n; ++k) {
    for (const auto& l : shapes_with_leaves(k)) {
      for (const auto& r : shapes_with_leaves(n - k)) out.push_back(quinn::Shape::fork(l, r));
    }
  }
  return out;
}

inline std::vector<std::string> node_paths(const Tree& sk, const std::string& prefix = "") {
  std::vector<std::string> out{prefix};
  if (!sk.leaf()) {
    for (auto& p : node_paths(sk.kids[0], prefix + "L")) out.push_back(std::move(p));
    for (auto& p : node_paths(sk.kids[1], prefix + "R")) out.push_back(std::move(p));
  }
  return out;
}

struct SweepResult {
  std::size_t shapes = 0;
  std::size_t moves = 0;
  std::size_t mismatches = 0;
  std::string first_mismatch;
};

/// Compares every primitive at every applicable site of every shape with
/// 1..max_leaves leaves against the oracle.
inline SweepResult sweep(const FusionCategory& cat, std::size_t max_leaves) {
  using quinn::AssocDirection;
  using quinn::NodePath;
  using quinn::Shape;
  using quinn::Side;
  using quinn::StateVector;
  SweepResult res;
  Associator F(cat);
  const quinn::PrimeField& fld = cat.field();
  const int n_obj = static_cast<int>(cat.size());

  quinn::AlgebraElement element = quinn::AlgebraElement::zero(cat);
  for (int a = 0; a < n_obj; ++a) element.coeffs[a] = fld.of(2 * a + 1);

  const auto compare = [&](const std::string& what, const Entries& want, const Entries& got) {
    ++res.moves;
    if (want != got) {
      if (res.mismatches++ == 0) res.first_mismatch = what;
    }
  };
  const auto shape_of = [](const Tree& t) { return to_root_tree(t).shape; };
  const auto is_unit_at = [](const std::string& p) {
    return [p](const Tree& u) { return at(u, p).label == 0; };
  };

  for (std::size_t leaves = 1; leaves <= max_leaves; ++leaves) {
    for (const Shape& shape : shapes_with_leaves(leaves)) {
      ++res.shapes;
      const Tree sk = skeleton(shape);
      const std::string name = std::to_string(res.shapes);
      for (const std::string& p : node_paths(sk)) {
        const Tree& node = at(sk, p);
        const NodePath np(p);
        const std::string site = "shape " + name + " @" + p;

        // assoc R: ((x y)_e z)_d -> (x (y z)_f)_d
        if (!node.leaf() && !node.kids[0].leaf()) {
          Tree out = sk;
          Tree& o = at_mut(out, p);
          o = {0, {node.kids[0].kids[0], {0, {node.kids[0].kids[1], node.kids[1]}}}};
          const Kernel k = [&](const Tree& u, const Tree& v) {
            const Tree& x = u.kids[0].kids[0];
            const Tree& y = u.kids[0].kids[1];
            const Tree& z = u.kids[1];
            if (!(v.kids[0] == x && v.kids[1].kids[0] == y && v.kids[1].kids[1] == z &&
                  v.label == u.label)) {
              return Scalar{0};
            }
            return F.g(x.label, y.label, z.label, u.label, v.kids[1].label, u.kids[0].label);
          };
          compare("assoc R " + site, local_matrix(cat, shape, shape_of(out), p, k),
                  implementation_matrix(cat, shape, [&](const StateVector& s) {
                    return quinn::assoc(cat, s, np, AssocDirection::Right);
                  }));
        }
        // assoc L: (x (y z)_f)_d -> ((x y)_e z)_d
        if (!node.leaf() && !node.kids[1].leaf()) {
          Tree out = sk;
          Tree& o = at_mut(out, p);
          o = {0, {{0, {node.kids[0], node.kids[1].kids[0]}}, node.kids[1].kids[1]}};
          const Kernel k = [&](const Tree& u, const Tree& v) {
            const Tree& x = u.kids[0];
            const Tree& y = u.kids[1].kids[0];
            const Tree& z = u.kids[1].kids[1];
            if (!(v.kids[0].kids[0] == x && v.kids[0].kids[1] == y && v.kids[1] == z &&
                  v.label == u.label)) {
              return Scalar{0};
            }
            return F.f(x.label, y.label, z.label, u.label, v.kids[0].label, u.kids[1].label);
          };
          compare("assoc L " + site, local_matrix(cat, shape, shape_of(out), p, k),
                  implementation_matrix(cat, shape, [&](const StateVector& s) {
                    return quinn::assoc(cat, s, np, AssocDirection::Left);
                  }));
        }
        // unit+ on either side
        for (Side side : {Side::Left, Side::Right}) {
          Tree out = sk;
          Tree& o = at_mut(out, p);
          o = side == Side::Left ? Tree{0, {Tree{}, node}} : Tree{0, {node, Tree{}}};
          const Kernel k = [&, side](const Tree& u, const Tree& v) {
            const Tree& kept = v.kids[side == Side::Left ? 1 : 0];
            const Tree& unit = v.kids[side == Side::Left ? 0 : 1];
            const bool match = kept == u && unit.leaf() && unit.label == 0 && v.label == u.label;
            return match ? fld.one() : fld.zero();
          };
          compare(std::string("unit+ ") + (side == Side::Left ? "L " : "R ") + site,
                  local_matrix(cat, shape, shape_of(out), p, k),
                  implementation_matrix(cat, shape, [&](const StateVector& s) {
                    return quinn::insert_unit_leaf(s, np, side);
                  }));
        }
        if (node.leaf()) {
          // unit- at a leaf: the parent fork collapses onto the sibling.
          if (!p.empty()) {
            const std::string parent = p.substr(0, p.size() - 1);
            const bool is_left = p.back() == 'L';
            const Tree& par = at(sk, parent);
            Tree out = sk;
            Tree& o = at_mut(out, parent);
            o = par.kids[is_left ? 1 : 0];
            const Kernel k = [&, is_left](const Tree& u, const Tree& v) {
              const Tree& unit = u.kids[is_left ? 0 : 1];
              const Tree& kept = u.kids[is_left ? 1 : 0];
              return unit.label == 0 && kept == v && kept.label == u.label ? fld.one() : fld.zero();
            };
            compare("unit- " + site, local_matrix(cat, shape, shape_of(out), parent, k, is_unit_at(p)),
                    implementation_matrix(
                        cat, shape, [&](const StateVector& s) { return quinn::remove_unit_leaf(s, np); },
                        is_unit_at(p)));
          }
          // trace with a generic element: leaf b -> (a abar)_b, weight element[a]
          Tree grown = sk;
          at_mut(grown, p) = Tree{0, {Tree{}, Tree{}}};
          const Kernel tk = [&](const Tree& u, const Tree& v) {
            const int a = v.kids[0].label;
            const bool match = v.label == u.label && v.kids[1].label == dual(cat, a);
            return match ? element.coeffs[a] : fld.zero();
          };
          compare("trace " + site, local_matrix(cat, shape, shape_of(grown), p, tk),
                  implementation_matrix(cat, shape, [&](const StateVector& s) {
                    return quinn::attach_trace_unit(cat, s, np, element);
                  }));
          // coform at a unit leaf, one object at a time
          for (int a = 0; a < n_obj; ++a) {
            const ObjectId oa{static_cast<std::uint16_t>(a)};
            const Kernel ck = [&, a](const Tree& u, const Tree& v) {
              const bool match = u.label == 0 && v.label == 0 && v.kids[0].label == a &&
                                 v.kids[1].label == dual(cat, a);
              return match ? cat.coform_scalar(oa) : fld.zero();
            };
            compare("coform " + site, local_matrix(cat, shape, shape_of(grown), p, ck, is_unit_at(p)),
                    implementation_matrix(
                        cat, shape,
                        [&](const StateVector& s) { return quinn::apply_coform(cat, s, np, oa); },
                        is_unit_at(p)));
          }
        }
        // form on a fork of two leaves
        if (!node.leaf() && node.kids[0].leaf() && node.kids[1].leaf()) {
          Tree out = sk;
          at_mut(out, p) = Tree{};
          const Kernel k = [&](const Tree& u, const Tree& v) {
            const bool match = u.label == 0 && v.label == 0 &&
                               u.kids[1].label == dual(cat, u.kids[0].label);
            return match ? cat.form_scalar(ObjectId{static_cast<std::uint16_t>(u.kids[0].label)})
                         : fld.zero();
          };
          compare("form " + site, local_matrix(cat, shape, shape_of(out), p, k),
                  implementation_matrix(cat, shape, [&](const StateVector& s) {
                    return quinn::apply_form(cat, s, np);
                  }));
        }
        // split then glue back: the projection onto a unit label at the edge
        if (!p.empty()) {
          const Kernel k = [&](const Tree& u, const Tree& v) {
            return u == v && u.label == 0 ? fld.one() : fld.zero();
          };
          compare("split+glue " + site, local_matrix(cat, shape, shape, p, k),
                  implementation_matrix(cat, shape, [&](const StateVector& s) {
                    return quinn::glue(cat, quinn::split_at(s, np), {np, std::nullopt});
                  }));
        }
      }
    }
  }
  return res;
}

struct PentagonResult {
  std::size_t equations = 0;
  std::size_t failures = 0;
};

/// Both ways of rebracketing (a (b (c d)_g)_h)_x into (((a b)_k c)_e d)_x
/// must give the same coefficient:
///   F(a,b,g;x)[k][h] F(k,c,d;x)[e][g]
///     = sum_m F(b,c,d;h)[m][g] F(a,m,d;x)[e][h] F(a,b,c;e)[k][m]
/// Every label runs over every object; only admissible end trees count.
inline PentagonResult pentagon(const FusionCategory& cat) {
  Associator F(cat);
  const int n = static_cast<int>(cat.size());
  const std::uint32_t p = cat.prime();
  PentagonResult res;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int x = 0; x < n; ++x)
            for (int g = 0; g < n; ++g)
              for (int h = 0; h < n; ++h) {
                if (!(fuses(cat, c, d, g) && fuses(cat, b, g, h) && fuses(cat, a, h, x))) continue;
                for (int k = 0; k < n; ++k)
                  for (int e = 0; e < n; ++e) {
                    if (!(fuses(cat, a, b, k) && fuses(cat, k, c, e) && fuses(cat, e, d, x))) continue;
                    const std::uint64_t lhs =
                        std::uint64_t{F.f(a, b, g, x, k, h).value} * F.f(k, c, d, x, e, g).value % p;
                    std::uint64_t rhs = 0;
                    for (int m = 0; m < n; ++m) {
                      rhs += std::uint64_t{F.f(b, c, d, h, m, g).value} * F.f(a, m, d, x, e, h).value %
                             p * F.f(a, b, c, e, k, m).value;
                      rhs %= p;
                    }
                    ++res.equations;
                    if (lhs != rhs) ++res.failures;
                  }
              }
  return res;
}

}  // namespace oracle
