#include "quinn/ambialgebra.hpp"

#include <cctype>
#include <sstream>

namespace quinn {

StructureScalars structure_scalars(const FusionCategory& cat) {
  const PrimeField& f = cat.field();
  StructureScalars out;
  for (ObjectId a : cat.objects()) {
    if (pairing_scalar(cat, a) != f.one()) {
      throw Error("degenerate pairing at object " + cat.name(a));
    }
    const ObjectId abar = cat.dual(a);
    StructureScalars::PerObject s;
    // Product: the assoc over the unit root is trivial; the second assoc
    // contributes its unit-channel entry, the form contributes lambda.
    s.m_factor = f.mul(cat.f_inverse_entry(a, abar, a, a, kUnit, kUnit), cat.form_scalar(abar));
    // Coproduct: coform, then the assoc that opens the unit channel.
    s.delta_factor = f.mul(cat.coform_scalar(abar), cat.f_entry(a, abar, a, a, kUnit, kUnit));
    s.e_coeff = f.try_inv(s.m_factor);
    if (s.e_coeff) {
      if (auto k = f.try_inv(f.mul(s.m_factor, s.delta_factor))) {
        s.c_coeff = f.mul(*s.e_coeff, *k);
      }
    }
    out.per_object.push_back(s);
  }
  return out;
}

AlgebraElement unit_e(const FusionCategory& cat) {
  const auto scalars = structure_scalars(cat);
  AlgebraElement e = AlgebraElement::zero(cat);
  for (ObjectId a : cat.objects()) {
    if (!scalars[a].e_coeff) {
      throw Error("product factor vanishes at object " + cat.name(a) + "; no unit");
    }
    e[a] = *scalars[a].e_coeff;
  }
  return e;
}

AlgebraElement trace_unit_solve(const FusionCategory& cat) {
  const auto scalars = structure_scalars(cat);
  AlgebraElement c = AlgebraElement::zero(cat);
  for (ObjectId a : cat.objects()) {
    if (!scalars[a].e_coeff) {
      throw Error("product factor vanishes at object " + cat.name(a) + "; no unit");
    }
    if (!scalars[a].c_coeff) {
      throw Error("m Psi Delta vanishes at object " + cat.name(a) + "; not special");
    }
    c[a] = *scalars[a].c_coeff;
  }
  return c;
}

AlgebraElement trace_unit_general(const FusionCategory& cat) {
  const PrimeField& f = cat.field();
  const auto scalars = structure_scalars(cat);
  AlgebraElement c = AlgebraElement::zero(cat);
  for (ObjectId a : cat.objects()) {
    if (!scalars[a].c_coeff) {
      throw Error("m Psi Delta vanishes at object " + cat.name(a) + "; not special");
    }
    // Lambda: 1 -> abar (x) a, Phi: abar (x) a -> a (x) abar, lambda: a (x) abar -> 1.
    const Scalar loop = f.mul(cat.form_scalar(a), cat.coform_scalar(cat.dual(a)));
    c[a] = f.mul(loop, loop);
  }
  return c;
}

AlgebraElement multiply(const FusionCategory& cat, const AlgebraElement& x,
                        const AlgebraElement& y) {
  const PrimeField& f = cat.field();
  const auto scalars = structure_scalars(cat);
  AlgebraElement out = AlgebraElement::zero(cat);
  for (ObjectId a : cat.objects()) out[a] = f.mul(scalars[a].m_factor, f.mul(x[a], y[a]));
  return out;
}

std::vector<std::vector<Scalar>> comultiply(const FusionCategory& cat, const AlgebraElement& x) {
  const PrimeField& f = cat.field();
  const auto scalars = structure_scalars(cat);
  std::vector<std::vector<Scalar>> out(cat.size(), std::vector<Scalar>(cat.size()));
  for (ObjectId a : cat.objects()) out[a.value][a.value] = f.mul(scalars[a].delta_factor, x[a]);
  return out;
}

AlgebraElement m_psi_delta(const FusionCategory& cat, const AlgebraElement& x) {
  const PrimeField& f = cat.field();
  const auto scalars = structure_scalars(cat);
  AlgebraElement out = AlgebraElement::zero(cat);
  for (ObjectId a : cat.objects()) {
    // Psi only exchanges the two equal factors I_a (x) I_a.
    out[a] = f.mul(f.mul(scalars[a].m_factor, scalars[a].delta_factor), x[a]);
  }
  return out;
}

StateVector fork_state(const FusionCategory& cat, const AlgebraElement& x) {
  StateVector v(cat.field(), Shape::fork(Shape::leaf(), Shape::leaf()));
  for (ObjectId a : cat.objects()) {
    if (!x[a].is_zero()) v.add({kUnit, a, cat.dual(a)}, x[a]);
  }
  return normalize(v);
}

AlgebraElement element_of(const FusionCategory& cat, const StateVector& state) {
  if (!(state.shape() == Shape::fork(Shape::leaf(), Shape::leaf()))) {
    throw Error("state is not on a two-leaf fork");
  }
  AlgebraElement x = AlgebraElement::zero(cat);
  const StateVector normal = normalize(state);
  for (const auto& t : normal.terms()) {
    if (t.labels[0] != kUnit || t.labels[2] != cat.dual(t.labels[1])) {
      throw Error("fork term is not a dual pair under the unit");
    }
    x[t.labels[1]] = t.coeff;
  }
  return x;
}

namespace {

StateVector product_composite(const FusionCategory& cat, const StateVector& joined) {
  // ( (a abar):1 (b bbar):1 ):1
  StateVector s = assoc(cat, joined, NodePath(""), AssocDirection::Left);
  // ( ( (a abar):1 b ):b bbar ):1
  s = assoc(cat, s, NodePath("L"), AssocDirection::Right);
  // ( ( a (abar b):v ):b bbar ):1
  s = apply_form(cat, s, NodePath("LR"));
  return remove_unit_leaf(s, NodePath("LR"));
}

}  // namespace

AlgebraElement replay_product(const FusionCategory& cat, const AlgebraElement& x,
                              const AlgebraElement& y) {
  const StateVector joined = join(tensor(fork_state(cat, x), fork_state(cat, y)), false);
  return element_of(cat, product_composite(cat, joined));
}

SplitState replay_coproduct(const FusionCategory& cat, const AlgebraElement& x) {
  const StateVector start = fork_state(cat, x);
  StateVector s = insert_unit_leaf(start, NodePath("L"), Side::Right);
  // ( (a 1):a abar ):1, then the coform at the unit leaf over every object.
  StateVector opened(cat.field(),
                     Shape::fork(Shape::fork(Shape::leaf(), Shape::fork(Shape::leaf(), Shape::leaf())),
                                 Shape::leaf()));
  for (ObjectId b : cat.objects()) opened = opened.plus(apply_coform(cat, s, NodePath("LR"), b));
  // ( (a (b bbar):1):a abar ):1 -> ( ((a b):u bbar):a abar ):1
  s = assoc(cat, opened, NodePath("L"), AssocDirection::Left);
  // -> ( (a b):u (bbar abar):w ):1
  s = assoc(cat, s, NodePath(""), AssocDirection::Right);
  return split_at(s, NodePath("L"));
}

AlgebraElement replay_m_psi_delta(const FusionCategory& cat, const AlgebraElement& x) {
  const SplitState delta = replay_coproduct(cat, x);
  // Psi: exchange the fragments. The lower fragment still carries the unit
  // leaf left by the split: ( (a abar):1 ( 1 (a abar):1 ):1 ):1.
  StateVector swapped = join(delta, true);
  swapped = remove_unit_leaf(swapped, NodePath("RL"));
  return element_of(cat, product_composite(cat, swapped));
}

std::string print_element(const FusionCategory& cat, const AlgebraElement& x) {
  std::ostringstream os;
  bool first = true;
  for (ObjectId a : cat.objects()) {
    if (x[a].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (x[a].value != 1) os << x[a].value;
    os << (a == kUnit ? std::string("I") : cat.name(a));
  }
  return first ? "0" : os.str();
}

AlgebraElement parse_element(const FusionCategory& cat, std::string_view text) {
  const PrimeField& f = cat.field();
  AlgebraElement x = AlgebraElement::zero(cat);
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') compact.push_back(c);
  }
  if (compact == "0") return x;
  std::size_t pos = 0;
  std::size_t column = 1;
  while (true) {
    const std::size_t end = std::min(compact.find('+', pos), compact.size());
    const std::string term = compact.substr(pos, end - pos);
    std::size_t digits = 0;
    while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) {
      ++digits;
    }
    const std::string name = term.substr(digits);
    if (name.empty()) throw ParseError("term '" + term + "' names no fork", 1, column);
    const std::int64_t coeff = digits ? std::stoll(term.substr(0, digits)) : 1;
    ObjectId a;
    if (name == "I") {
      a = kUnit;
    } else if (auto id = cat.find(name); id && *id != kUnit) {
      a = *id;
    } else {
      throw ParseError("unknown fork '" + name + "'", 1, column);
    }
    x[a] = f.add(x[a], f.of(coeff));
    if (end >= compact.size()) break;
    pos = end + 1;
    column += term.size() + 1;
  }
  return x;
}

}  // namespace quinn
