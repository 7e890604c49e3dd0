#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "torsionk/lcs.h"
#include "torsionk/modular.h"

namespace torsionk {

/// i^phase X(x) Z(z) for p = 2 (phase mod 4), omega^phase X(x) Z(z) for odd
/// prime p (phase mod p), omega = exp(2 pi i / p). Z X = omega X Z on each site.
class PauliElement {
 public:
  PauliElement(int p, std::int64_t phase, std::vector<std::int64_t> x, std::vector<std::int64_t> z);

  static PauliElement identity(int p, std::size_t n);
  /// Qubit label such as "XIY"; site 0 is the leftmost tensor factor.
  static PauliElement from_label(const std::string& label);

  int p() const { return p_; }
  std::size_t n() const { return x_.size(); }
  std::int64_t phase() const { return phase_; }
  std::int64_t phase_modulus() const { return p_ == 2 ? 4 : p_; }
  const std::vector<std::int64_t>& x() const { return x_; }
  const std::vector<std::int64_t>& z() const { return z_; }
  bool is_identity() const;
  std::size_t dimension() const;

  bool operator==(const PauliElement&) const = default;
  std::string to_string() const;

 private:
  int p_;
  std::int64_t phase_;
  std::vector<std::int64_t> x_, z_;
};

PauliElement pauli_mul(const PauliElement& a, const PauliElement& b);
PauliElement pauli_pow(const PauliElement& a, std::int64_t e);
/// a^d is the identity with trivial phase.
bool pauli_order_divides(const PauliElement& a, std::int64_t d);
bool pauli_commute(const PauliElement& a, const PauliElement& b);
/// Tensor with `extra` identity sites.
PauliElement pauli_pad(const PauliElement& a, std::size_t extra);

using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kRootSnapTolerance = 1e-6;
inline constexpr std::size_t kMaxDenseDimension = 1024;

class DenseUnitary {
 public:
  /// Throws std::invalid_argument unless square and unitary within `tolerance`.
  explicit DenseUnitary(ComplexMatrix m, double tolerance = kDefaultTolerance);

  const ComplexMatrix& matrix() const { return m_; }
  std::size_t dimension() const { return static_cast<std::size_t>(m_.rows()); }
  double tolerance() const { return tolerance_; }

 private:
  ComplexMatrix m_;
  double tolerance_;
};

/// Dense rendering, guarded by p^n <= 1024.
DenseUnitary to_matrix(const PauliElement& a);

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

/// Assignment of operators to variables, all Pauli over P_n(p) or all dense of dimension m.
class OperatorSolution {
 public:
  enum class Kind { kPauli, kUnitary };

  static OperatorSolution pauli(int p, std::size_t n, std::map<std::string, PauliElement> assignment);
  static OperatorSolution unitary(std::size_t m, std::map<std::string, DenseUnitary> assignment);

  Kind kind() const { return kind_; }
  int p() const { return p_; }
  std::size_t n() const { return n_; }
  /// Matrix size m (p^n for Pauli targets).
  std::size_t dimension() const;
  const std::map<std::string, PauliElement>& pauli_assignment() const { return pauli_; }
  const std::map<std::string, DenseUnitary>& unitary_assignment() const { return dense_; }
  std::vector<std::string> variables() const;

  /// The same solution as dense matrices.
  OperatorSolution to_dense() const;

 private:
  OperatorSolution() = default;

  Kind kind_ = Kind::kPauli;
  int p_ = 2;
  std::size_t n_ = 0;
  std::size_t m_ = 1;
  std::map<std::string, PauliElement> pauli_;
  std::map<std::string, DenseUnitary> dense_;
};

struct TorsionVerdict {
  std::string variable;
  bool pass = false;
};

struct CommutationVerdict {
  std::string first, second;
  bool pass = false;
};

struct ConstraintVerdict {
  std::string constraint;
  bool pass = false;
  /// Product of the factors in ascending variable order, for Pauli targets.
  std::optional<PauliElement> product;
  /// Dense targets: distance from omega^b I.
  double residual = 0;
};

struct VerificationReport {
  std::vector<TorsionVerdict> torsion;
  std::vector<CommutationVerdict> commutation;
  std::vector<ConstraintVerdict> constraints;

  bool torsion_pass() const;
  bool commutation_pass() const;
  bool constraints_pass() const;
  bool pass() const { return torsion_pass() && commutation_pass() && constraints_pass(); }
  std::vector<std::string> failing_constraints() const;
};

/// Checks d-torsion, commutation of co-occurring variables, and each
/// A_1^{M_k1} ... A_c^{M_kc} = omega^{b_k} I. Throws std::invalid_argument when
/// the assignment is not exactly the variable set, or a Pauli target has p != d.
VerificationReport verify_solution(const LinearConstraintSystem& lcs, const OperatorSolution& t);

/// T -> T (x) I on `extra` more sites.
OperatorSolution stabilize(const OperatorSolution& t, std::size_t extra);

/// c(v) = log_omega det T(v) in Z/d, omega = exp(2 pi i / d). Throws
/// std::domain_error when a determinant is not a d-th root of unity and
/// std::logic_error when M c != m b (mod d).
ZdVector det_cochain(const OperatorSolution& t, const LinearConstraintSystem& lcs);

/// A_i = omega^{x_i} as 1x1 unitaries.
OperatorSolution scalar_solution_to_operator(const LinearConstraintSystem& lcs, const ZdVector& x);

}  // namespace torsionk
