#pragma once

#include <vector>

#include "quinn/fusion_category.hpp"

namespace quinn {

/// sum_a coeffs[a] * (fork (a, dual a) under root 1). Indexed by object id.
struct AlgebraElement {
  std::vector<Scalar> coeffs;

  static AlgebraElement zero(const FusionCategory& cat) {
    return AlgebraElement{std::vector<Scalar>(cat.size())};
  }
  Scalar operator[](ObjectId a) const { return coeffs.at(a.value); }
  Scalar& operator[](ObjectId a) { return coeffs.at(a.value); }

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

}  // namespace quinn
