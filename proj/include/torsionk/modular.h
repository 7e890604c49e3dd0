#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "torsionk/matrix.h"

namespace torsionk {

/// Vector over Z/d with every coordinate reduced into [0, d).
class ZdVector {
 public:
  ZdVector() = default;
  ZdVector(Integer modulus, std::vector<Integer> coords);

  static ZdVector zeros(Integer modulus, std::size_t n);

  const Integer& modulus() const { return modulus_; }
  std::size_t size() const { return coords_.size(); }
  const std::vector<Integer>& coords() const { return coords_; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const;

  bool operator==(const ZdVector& other) const = default;
  std::string to_string() const;

 private:
  Integer modulus_ = 1;
  std::vector<Integer> coords_;
};

/// Where a FinAbGroup lives: the subquotient <generators> + <relations> / <relations>
/// of the ambient module (Z/modulus)^n. Columns of `generators` are the lifts of
/// the abstract generators, in invariant-factor order.
struct GroupEmbedding {
  Integer modulus;
  IntMatrix generators;
  IntMatrix relations;
};

/// Finite abelian group in invariant-factor form: Z/k_0 + Z/k_1 + ..., k_i >= 2, k_i | k_{i+1}.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  explicit FinAbGroup(std::vector<Integer> invariant_factors);
  FinAbGroup(std::vector<Integer> invariant_factors, GroupEmbedding embedding);

  const std::vector<Integer>& invariant_factors() const { return factors_; }
  std::size_t num_generators() const { return factors_.size(); }
  Integer order() const;
  bool is_trivial() const { return factors_.empty(); }

  bool has_embedding() const { return embedding_.has_value(); }
  const GroupEmbedding& embedding() const;

  /// Coordinates of an ambient element, each reduced mod its invariant factor.
  /// Empty optional when `x` does not lie in the group.
  std::optional<std::vector<Integer>> coordinates(const ZdVector& x) const;

  /// Ambient lift of the element with the given coordinates.
  ZdVector element(std::span<const Integer> coords) const;

  bool same_structure(const FinAbGroup& other) const { return factors_ == other.factors_; }
  std::string to_string() const;

 private:
  std::vector<Integer> factors_;
  std::optional<GroupEmbedding> embedding_;
};

/// Normalizes Z^a / im(relations) into invariant-factor form. `generators`
/// (n x a) maps the a presentation generators into (Z/modulus)^n and
/// `ambient_relations` is recorded as the subgroup divided out there.
/// The presented group must be finite.
FinAbGroup present_group(const Integer& modulus, const IntMatrix& generators, const IntMatrix& relations,
                         const IntMatrix& ambient_relations);

/// Direct sum, with no embedding.
FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);

/// A x == b (mod d). Returns the canonical solution (free directions zero) or nothing.
std::optional<ZdVector> solve_mod(const IntMatrix& a, std::span<const Integer> b, const Integer& d);
std::optional<ZdVector> solve_mod(const IntMatrix& a, const ZdVector& b);

/// {x in (Z/d)^c : A x == 0}, with generator lifts.
FinAbGroup kernel_mod(const IntMatrix& a, const Integer& d);

/// (Z/d)^n / column span of `relations` (n rows).
FinAbGroup quotient_group(std::size_t ambient_rank, const Integer& d, const IntMatrix& relations);

/// sub / <columns of image>. Every column of `image` must lie in `sub`.
FinAbGroup quotient_by(const FinAbGroup& sub, const IntMatrix& image);

/// x -> multiplier * x from Z/source to Z/target. Moduli of 1 denote the zero group.
class CoefficientMap {
 public:
  CoefficientMap(Integer source_modulus, Integer target_modulus, Integer multiplier);

  const Integer& source_modulus() const { return source_; }
  const Integer& target_modulus() const { return target_; }
  const Integer& multiplier() const { return multiplier_; }

  Integer apply(const Integer& x) const;
  ZdVector apply(const ZdVector& v) const;

  /// `next` after `this`.
  CoefficientMap then(const CoefficientMap& next) const;
  bool is_zero() const;
  bool operator==(const CoefficientMap& other) const = default;

 private:
  Integer source_;
  Integer target_;
  Integer multiplier_;
};

CoefficientMap coefficient_map(const Integer& source_modulus, const Integer& target_modulus,
                               const Integer& multiplier);

// The four-term sequence 0 -> (Z/d)_m -> Z/d -> Z/d -> (Z/d)/m(Z/d) -> 0, with
// (Z/d)_m identified with Z/g via k -> k*(d/g) and the cokernel with Z/g by reduction.
CoefficientMap torsion_inclusion(const Integer& d, const Integer& m);
CoefficientMap multiplication_by(const Integer& d, const Integer& m);
CoefficientMap cotorsion_projection(const Integer& d, const Integer& m);

}  // namespace torsionk
