#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torsionk/complex.h"
#include "torsionk/matrix.h"
#include "torsionk/modular.h"

namespace torsionk {

/// sum_v coeff(v) x_v = rhs over Z/d. Coefficients are (variable index, residue)
/// pairs in ascending index order after validation.
struct Constraint {
  std::string name;  // optional
  std::vector<std::pair<std::size_t, Integer>> coeffs;
  Integer rhs;
};

/// M x = b over Z/d.
class LinearConstraintSystem {
 public:
  /// Reduces residues, sorts coefficients and rejects zero coefficients,
  /// repeated variables, unused variables and empty systems.
  LinearConstraintSystem(Integer d, std::vector<std::string> variables, std::vector<Constraint> constraints);

  const Integer& modulus() const { return d_; }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  std::size_t num_variables() const { return variables_.size(); }
  std::size_t num_constraints() const { return constraints_.size(); }
  std::optional<std::size_t> variable_index(const std::string& name) const;

  /// True when every constraint carries a name.
  bool constraints_named() const;
  std::string constraint_label(std::size_t k) const;

  /// r x c coefficient matrix with entries in [0, d).
  IntMatrix matrix() const;
  ZdVector rhs() const;

 private:
  Integer d_;
  std::vector<std::string> variables_;
  std::vector<Constraint> constraints_;
};

struct HyperEdge {
  std::string name;
  std::vector<std::pair<std::size_t, Integer>> weights;  // vertex -> epsilon_e(v)
};

struct Hypergraph {
  Integer modulus;
  std::vector<std::string> vertices;
  std::vector<HyperEdge> edges;
};

struct HypergraphData {
  Hypergraph hypergraph;
  ZdVector tau;  // indexed by edge
};

HypergraphData hypergraph_of(const LinearConstraintSystem& lcs);

/// c x r: column e is the sum of epsilon_e(v) [v], reduced mod d.
IntMatrix hypergraph_boundary(const Hypergraph& h, const Integer& d);

std::optional<ZdVector> scalar_solution(const LinearConstraintSystem& lcs);

struct ClassicalValue {
  std::int64_t satisfied = 0;
  std::int64_t constraints = 0;
  ZdVector maximizer;  // lexicographically least among maximizers

  bool perfect() const { return satisfied == constraints; }
  /// Reduced fraction, e.g. "5/6" or "1".
  std::string to_string() const;
};

/// Exhaustive search over (Z/d)^c. Throws std::length_error when d^c > limit.
ClassicalValue classical_value(const LinearConstraintSystem& lcs, std::int64_t limit = 10'000'000);

/// One 0-cell, a loop per vertex and a 2-cell per edge with word prod v^eps(v)
/// in ascending vertex order, exponents lifted to [1, d).
CW2Complex canonical_realization(const Hypergraph& h, const Integer& d);

/// How a complex realizes a system: 1-cell j carries variable_of_cell[j] and
/// 2-cell k carries constraint_of_cell[k].
struct RealizationMap {
  std::vector<std::size_t> variable_of_cell;
  std::vector<std::size_t> constraint_of_cell;

  /// A cochain on variables (or constraints) moved onto the cells of the complex.
  ZdVector one_cochain(const ZdVector& on_variables) const;
  ZdVector two_cochain(const ZdVector& on_constraints) const;
};

/// Matches 1-cells to variables by name and 2-cells to constraints by name
/// (when every constraint is named) or by position, then checks that the
/// cellular boundary d2 agrees with the hypergraph boundary mod d. Throws
/// std::invalid_argument on any mismatch.
RealizationMap check_realization(const CW2Complex& x, const LinearConstraintSystem& lcs);

}  // namespace torsionk
