#pragma once

// The ambialgebra on two-leaf forks (a, dual a) under a unit root.
//
// In the dual-paired fork basis I_a the product, coproduct and swap are
// diagonal per object:
//   m(I_a (x) I_b) = delta_ab * m_factor(a) * I_a
//   Delta(I_a)     = delta_factor(a) * I_a (x) I_a
//   Psi swaps tensor factors and carries no scalar.
// The roottree composites that produce these scalars are available as
// replay_* functions and are used to cross-check them.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quinn/algebra_element.hpp"
#include "quinn/fusion_category.hpp"
#include "quinn/roottree.hpp"

namespace quinn {

struct StructureScalars {
  struct PerObject {
    Scalar m_factor;
    Scalar delta_factor;
    std::optional<Scalar> e_coeff;  // absent when m_factor is zero
    std::optional<Scalar> c_coeff;  // absent when m_factor * delta_factor is zero
  };
  std::vector<PerObject> per_object;  // indexed by object id

  const PerObject& operator[](ObjectId a) const { return per_object.at(a.value); }
};

/// Throws Error when the form/coform pairing is degenerate at some object.
StructureScalars structure_scalars(const FusionCategory& cat);

/// e with m(e (x) x) = x. Throws Error naming an object with m_factor = 0.
AlgebraElement unit_e(const FusionCategory& cat);
/// c with m Psi Delta (c) = e. Throws Error naming an object where the
/// composite vanishes (the ambialgebra is not special there).
AlgebraElement trace_unit_solve(const FusionCategory& cat);
/// c_a = (lambda Phi Lambda)_a^2, Phi the factor-free swap of the dual pair.
AlgebraElement trace_unit_general(const FusionCategory& cat);

AlgebraElement multiply(const FusionCategory& cat, const AlgebraElement& x,
                        const AlgebraElement& y);
/// Coefficients of Delta(x) on I_a (x) I_b, indexed [a][b].
std::vector<std::vector<Scalar>> comultiply(const FusionCategory& cat, const AlgebraElement& x);
AlgebraElement m_psi_delta(const FusionCategory& cat, const AlgebraElement& x);

/// The element as a state vector on the fork ( ? ? ):1.
StateVector fork_state(const FusionCategory& cat, const AlgebraElement& x);
/// Inverse of fork_state; throws if the state is not on a two-leaf fork.
AlgebraElement element_of(const FusionCategory& cat, const StateVector& state);

/// Product composite on ( (a abar):1 (b bbar):1 ):1: assoc, assoc, form, unit-.
AlgebraElement replay_product(const FusionCategory& cat, const AlgebraElement& x,
                              const AlgebraElement& y);
/// Coproduct composite: unit+, coform (summed over objects), assoc, assoc,
/// split at the unit edge.
SplitState replay_coproduct(const FusionCategory& cat, const AlgebraElement& x);
/// m Psi Delta assembled from the two composites above.
AlgebraElement replay_m_psi_delta(const FusionCategory& cat, const AlgebraElement& x);

/// `I + 4A`: I is the unit fork, other forks by object name; `0` if empty.
std::string print_element(const FusionCategory& cat, const AlgebraElement& x);
AlgebraElement parse_element(const FusionCategory& cat, std::string_view text);

}  // namespace quinn
