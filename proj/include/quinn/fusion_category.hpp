#pragma once

// Multiplicity-free semisimple tensor categories over a prime field.
//
// An F-block F(a,b,c;d) has rows indexed by the admissible channels e of the
// left-bracketed tree ((a b)_e c)_d and columns by the channels f of the
// right-bracketed tree (a (b c)_f)_d. It rewrites a right tree with channel f
// as sum_e F[e][f] * (left tree with channel e); the inverse block goes back.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quinn/field.hpp"

namespace quinn {

struct ObjectId {
  std::uint16_t value = 0;
  friend constexpr auto operator<=>(ObjectId, ObjectId) = default;
};

/// The unit object always has id 0.
inline constexpr ObjectId kUnit{0};

struct SimpleObject {
  ObjectId id;
  std::string name;
  ObjectId dual;
};

struct FBlock {
  std::vector<ObjectId> left_channels;   // rows
  std::vector<ObjectId> right_channels;  // columns
  Matrix matrix;
  std::optional<Matrix> inverse;         // absent when singular
};

class FusionCategory;

/// Name-based construction. The first object declared is the unit.
class CategoryBuilder {
 public:
  explicit CategoryBuilder(std::uint32_t prime) : prime_(prime) {}

  CategoryBuilder& object(std::string name, std::string dual);
  CategoryBuilder& fuse(std::string a, std::string b, std::vector<std::string> outcomes);
  CategoryBuilder& f_block(std::string a, std::string b, std::string c, std::string d,
                           std::vector<std::vector<std::int64_t>> rows);
  CategoryBuilder& coform(std::string a, std::int64_t value);
  CategoryBuilder& prime(std::uint32_t p) {
    prime_ = p;
    return *this;
  }

  /// Throws Error on malformed data (unknown names, block shape mismatches,
  /// missing blocks larger than 1x1). Axiom violations are left to validate().
  FusionCategory build() const;

 private:
  struct BlockSpec {
    std::array<std::string, 4> key;
    std::vector<std::vector<std::int64_t>> rows;
  };
  std::uint32_t prime_;
  std::vector<std::pair<std::string, std::string>> objects_;
  std::vector<std::pair<std::array<std::string, 2>, std::vector<std::string>>> fusions_;
  std::vector<BlockSpec> blocks_;
  std::vector<std::pair<std::string, std::int64_t>> coforms_;
};

class FusionCategory {
 public:
  const PrimeField& field() const { return field_; }
  std::uint32_t prime() const { return field_.prime(); }

  std::size_t size() const { return objects_.size(); }
  std::vector<ObjectId> objects() const;
  const SimpleObject& object(ObjectId id) const;
  const std::string& name(ObjectId id) const { return object(id).name; }
  ObjectId dual(ObjectId id) const { return object(id).dual; }
  std::optional<ObjectId> find(std::string_view name) const;
  /// Throws Error for an unknown name.
  ObjectId id_of(std::string_view name) const;
  bool valid(ObjectId id) const { return id.value < objects_.size(); }

  /// Fusion multiplicity n(a,b,c) in {0,1}.
  int n(ObjectId a, ObjectId b, ObjectId c) const {
    return fusion_[(a.value * size() + b.value) * size() + c.value];
  }
  /// {c : n(a,b,c) = 1} in id order; throws on an unknown id.
  std::vector<ObjectId> fuse(ObjectId a, ObjectId b) const;

  std::vector<ObjectId> left_channels(ObjectId a, ObjectId b, ObjectId c, ObjectId d) const;
  std::vector<ObjectId> right_channels(ObjectId a, ObjectId b, ObjectId c, ObjectId d) const;

  /// Throws Error("inadmissible triple") when (a,b,c) cannot reach d.
  const FBlock& f_block(ObjectId a, ObjectId b, ObjectId c, ObjectId d) const;
  const FBlock* find_block(ObjectId a, ObjectId b, ObjectId c, ObjectId d) const;
  /// F[e][f], zero when any index is inadmissible.
  Scalar f_entry(ObjectId a, ObjectId b, ObjectId c, ObjectId d, ObjectId e, ObjectId f) const;
  /// F^{-1}[f][e], zero when inadmissible; throws if the block is singular.
  Scalar f_inverse_entry(ObjectId a, ObjectId b, ObjectId c, ObjectId d, ObjectId f,
                         ObjectId e) const;

  /// lambda_a : a (x) dual(a) -> 1. Always 1: normalization lives in the coform.
  Scalar form_scalar(ObjectId a) const;
  /// Lambda_a : 1 -> a (x) dual(a).
  Scalar coform_scalar(ObjectId a) const;

  const std::map<std::array<ObjectId, 4>, FBlock>& blocks() const { return blocks_; }

  friend bool operator==(const FusionCategory& x, const FusionCategory& y);

 private:
  friend class CategoryBuilder;
  explicit FusionCategory(PrimeField f) : field_(f) {}

  PrimeField field_;
  std::vector<SimpleObject> objects_;
  std::vector<std::uint8_t> fusion_;
  std::map<std::array<ObjectId, 4>, FBlock> blocks_;
  std::vector<Scalar> coform_;
};

/// Two objects {1, A} over Z_5 with A (x) A = 1 + A.
FusionCategory builtin_c5();
/// The one-object category {1}.
FusionCategory builtin_trivial(std::uint32_t prime = 5);

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::string witness;  // first failing tuple, empty on success
  std::string detail;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;

  bool all_passed() const;
  const AxiomCheck* find(std::string_view name) const;
};

/// Checks unit laws, duality, fusion associativity, block invertibility,
/// triangle convention, pentagon (brute force) and pairing nondegeneracy.
ValidationReport validate(const FusionCategory& cat);

/// Scalar of the zigzag a -> a (x) (abar (x) a) -> (a (x) abar) (x) a -> a.
Scalar pairing_scalar(const FusionCategory& cat, ObjectId a);

/// Line-oriented category file (`prime 5`, `object A dual=A`,
/// `fuse A A -> 1 A`, `F A A A @ A = [[2,4],[3,3]]`, `coform A = 3`).
/// Entries are reduced modulo the prime; `prime_override` replaces the file's prime.
FusionCategory parse_category(std::string_view text,
                              std::optional<std::uint32_t> prime_override = std::nullopt);
std::string print_category(const FusionCategory& cat);

}  // namespace quinn
