#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torsionk/cohomology.h"
#include "torsionk/complex.h"
#include "torsionk/lcs.h"
#include "torsionk/modular.h"
#include "torsionk/operators.h"

namespace torsionk {

struct SpectrumId {
  enum class Kind { kKMuD, kCdm, kKoSym, kCReal };

  Kind kind = Kind::kKMuD;
  Integer d = 2;
  Integer m = 1;

  static SpectrumId kmud(const Integer& d);
  static SpectrumId cdm(const Integer& d, const Integer& m);
  static SpectrumId kosym();
  /// The real variant C_R(2, m).
  static SpectrumId creal(const Integer& m);

  std::string to_string() const;
};

/// Either an exact group or an extension 0 -> A -> G -> B -> 0 that is not resolved.
struct HomotopyGroupResult {
  bool exact = true;
  FinAbGroup group;                         // exact case
  Integer order = 1;
  std::vector<Integer> subquotient_factors;  // unresolved case: orders of A and B
  std::vector<FinAbGroup> candidates;        // unresolved case

  std::string to_string() const;
};

/// Throws std::out_of_range for a degree the spectrum does not cover.
HomotopyGroupResult homotopy_group(const SpectrumId& s, long long r);

struct CdmGroup {
  Integer g;
  FinAbGroup h1_piece;  // H^1(X, Z/g)
  FinAbGroup h2_piece;  // H^2(X, Z/g)
  /// Present when d | m (split) or g = 1 (zero).
  std::optional<FinAbGroup> total;
  Integer order;

  bool exact() const { return total.has_value(); }
  std::string to_string() const;
};

CdmGroup cdm_group(const CW2Complex& x, const Integer& d, const Integer& m);

struct CdmClass {
  Integer d, m, g;
  CohomologyClass h1;  // in H^1(X, Z/g)
  CohomologyClass h2;  // in H^2(X, Z/d)

  /// "(a,b,...;c,...)": h1 coordinates, then h2 coordinates.
  std::string notation() const;
};

/// Raised when class_of_solution gets a solution that fails verification.
class UnverifiedSolution : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// h2 = [tau] in H^2(X, Z/d); h1 = [pi_m o det c] in H^1(X, Z/g). `m` must equal the
/// dimension of the solution. Throws UnverifiedSolution, or std::invalid_argument
/// when X does not realize the system.
CdmClass class_of_solution(const CW2Complex& x, const LinearConstraintSystem& lcs, const OperatorSolution& t,
                           const Integer& m);

struct Premise {
  std::string statement;
  bool holds = false;
  bool machine_checked = false;
};

struct Certificate {
  std::string id;  // "a", "b" or "c"
  std::string conclusion;
  std::vector<Premise> premises;
};

/// The no-go and collapse statements whose premises hold for (X, L, m).
std::vector<Certificate> certificates(const CW2Complex& x, const LinearConstraintSystem& lcs, const Integer& m);

}  // namespace torsionk
