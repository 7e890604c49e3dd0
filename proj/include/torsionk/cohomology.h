#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "torsionk/complex.h"
#include "torsionk/modular.h"

namespace torsionk {

/// H^degree(X, Z/k) for degree 1 or 2, with cocycle generator lifts over the
/// cells of that degree. H^1 = ker delta^1 / im delta^0, H^2 = C^2 / im delta^1.
/// k = 1 gives the zero group.
FinAbGroup cohomology(const CW2Complex& x, const Integer& k, int degree);

struct CohomologyClass {
  int degree = 0;
  Integer modulus;
  ZdVector representative;
  FinAbGroup group;
  std::vector<Integer> coordinates;

  bool is_zero() const;
  std::string to_string() const;
};

/// The class of a cocycle. Throws std::invalid_argument when a degree-1 cochain
/// is not a cocycle or the cochain has the wrong length.
CohomologyClass class_of(const CW2Complex& x, const Integer& k, int degree, const ZdVector& cochain);

/// Change of coefficients, recomputing coordinates in the target group.
CohomologyClass push_class(const CW2Complex& x, const CohomologyClass& cls, const CoefficientMap& map);

/// Exhaustive enumeration of cocycles and coboundaries. Only for
/// k^(cells in degree and degree - 1) <= limit; throws std::length_error otherwise.
FinAbGroup brute_force_cohomology(const CW2Complex& x, const Integer& k, int degree,
                                  std::int64_t limit = 1'000'000);

enum class Pi1Status {
  kTrivial,                // presentation collapses to no generators
  kAbelianizationTrivial,  // H_1 = 0, pi_1 undecided
  kNontrivial,             // H_1 != 0, so pi_1 != 1
};

std::string to_string(Pi1Status status);

struct Pi1Presentation {
  std::vector<std::string> generators;
  std::vector<std::vector<WordLetter>> relators;
  FinAbGroup abelianization_torsion;
  std::size_t abelianization_free_rank = 0;
  bool abelianization_trivial = false;
  Pi1Status status = Pi1Status::kNontrivial;
};

/// Generators are the 1-cells outside a breadth-first spanning tree grown from
/// the lexicographically first 0-cell; relators are the attaching words with
/// tree edges deleted and adjacent powers merged.
Pi1Presentation pi1_presentation(const CW2Complex& x);

}  // namespace torsionk
