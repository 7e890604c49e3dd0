#pragma once

#include <string>
#include <vector>

#include "torsionk/complex.h"
#include "torsionk/lcs.h"
#include "torsionk/operators.h"

namespace torsionk {

/// A Mermin-type system over Z/2 with its torus realization and Pauli solution.
struct Fixture {
  std::string name;
  LinearConstraintSystem lcs;
  CW2Complex torus;
  OperatorSolution solution;
};

/// mermin_square, mermin_star or mermin_refined; '-' and '_' are interchangeable.
/// Throws std::out_of_range for other names.
Fixture builtin_fixture(const std::string& name);

std::vector<std::string> builtin_fixture_names();

}  // namespace torsionk
