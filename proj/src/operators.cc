#include "torsionk/operators.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace torsionk {
namespace {

std::int64_t reduce(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

std::complex<double> root_of_unity(std::int64_t k, std::int64_t d) {
  const double angle = 2 * std::numbers::pi * static_cast<double>(reduce(k, d)) / static_cast<double>(d);
  return std::polar(1.0, angle);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

ComplexMatrix matrix_pow(const ComplexMatrix& a, std::int64_t e) {
  ComplexMatrix result = ComplexMatrix::Identity(a.rows(), a.cols());
  ComplexMatrix base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

void require_same_shape(const PauliElement& a, const PauliElement& b) {
  if (a.p() != b.p() || a.n() != b.n()) throw std::invalid_argument("Pauli elements of different shape");
}

}  // namespace

PauliElement::PauliElement(int p, std::int64_t phase, std::vector<std::int64_t> x, std::vector<std::int64_t> z)
    : p_(p), phase_(0), x_(std::move(x)), z_(std::move(z)) {
  if (!is_prime(p_)) throw std::invalid_argument("Pauli group needs a prime p, got " + std::to_string(p_));
  if (x_.size() != z_.size()) throw std::invalid_argument("x and z vectors differ in length");
  phase_ = reduce(phase, phase_modulus());
  for (auto& v : x_) v = reduce(v, p_);
  for (auto& v : z_) v = reduce(v, p_);
}

PauliElement PauliElement::identity(int p, std::size_t n) {
  return PauliElement(p, 0, std::vector<std::int64_t>(n, 0), std::vector<std::int64_t>(n, 0));
}

PauliElement PauliElement::from_label(const std::string& label) {
  std::vector<std::int64_t> x, z;
  std::int64_t phase = 0;
  for (char c : label) {
    switch (c) {
      case 'I':
        x.push_back(0), z.push_back(0);
        break;
      case 'X':
        x.push_back(1), z.push_back(0);
        break;
      case 'Z':
        x.push_back(0), z.push_back(1);
        break;
      case 'Y':  // Y = i X Z
        x.push_back(1), z.push_back(1);
        ++phase;
        break;
      default:
        throw std::invalid_argument("bad Pauli label '" + label + "'");
    }
  }
  return PauliElement(2, phase, std::move(x), std::move(z));
}

bool PauliElement::is_identity() const {
  return phase_ == 0 && std::all_of(x_.begin(), x_.end(), [](auto v) { return v == 0; }) &&
         std::all_of(z_.begin(), z_.end(), [](auto v) { return v == 0; });
}

std::size_t PauliElement::dimension() const {
  std::size_t dim = 1;
  for (std::size_t i = 0; i < n(); ++i) {
    if (dim > kMaxDenseDimension) return kMaxDenseDimension + 1;
    dim *= static_cast<std::size_t>(p_);
  }
  return dim;
}

std::string PauliElement::to_string() const {
  std::ostringstream out;
  out << (p_ == 2 ? "i^" : "w^") << phase_ << " X(";
  for (std::size_t i = 0; i < n(); ++i) out << (i ? "," : "") << x_[i];
  out << ") Z(";
  for (std::size_t i = 0; i < n(); ++i) out << (i ? "," : "") << z_[i];
  out << ")";
  return out.str();
}

PauliElement pauli_mul(const PauliElement& a, const PauliElement& b) {
  require_same_shape(a, b);
  const int p = a.p();
  // X(x1)Z(z1) X(x2)Z(z2) = omega^{z1.x2} X(x1+x2) Z(z1+z2); omega = i^2 for p = 2
  std::int64_t twist = 0;
  std::vector<std::int64_t> x(a.n()), z(a.n());
  for (std::size_t j = 0; j < a.n(); ++j) {
    twist += a.z()[j] * b.x()[j];
    x[j] = a.x()[j] + b.x()[j];
    z[j] = a.z()[j] + b.z()[j];
  }
  return PauliElement(p, a.phase() + b.phase() + (p == 2 ? 2 : 1) * twist, std::move(x), std::move(z));
}

PauliElement pauli_pow(const PauliElement& a, std::int64_t e) {
  if (e < 0) throw std::invalid_argument("negative Pauli power");
  PauliElement result = PauliElement::identity(a.p(), a.n());
  PauliElement base = a;
  while (e > 0) {
    if (e & 1) result = pauli_mul(result, base);
    base = pauli_mul(base, base);
    e >>= 1;
  }
  return result;
}

bool pauli_order_divides(const PauliElement& a, std::int64_t d) { return d >= 1 && pauli_pow(a, d).is_identity(); }

bool pauli_commute(const PauliElement& a, const PauliElement& b) { return pauli_mul(a, b) == pauli_mul(b, a); }

PauliElement pauli_pad(const PauliElement& a, std::size_t extra) {
  auto x = a.x();
  auto z = a.z();
  x.resize(x.size() + extra, 0);
  z.resize(z.size() + extra, 0);
  return PauliElement(a.p(), a.phase(), std::move(x), std::move(z));
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return INFINITY;
  if (a.size() == 0) return 0;
  return (a - b).cwiseAbs().maxCoeff();
}

DenseUnitary::DenseUnitary(ComplexMatrix m, double tolerance) : m_(std::move(m)), tolerance_(tolerance) {
  if (m_.rows() == 0 || m_.rows() != m_.cols()) throw std::invalid_argument("unitary must be a nonempty square matrix");
  const ComplexMatrix gram = m_.adjoint() * m_;
  if (max_abs_difference(gram, ComplexMatrix::Identity(m_.rows(), m_.cols())) > tolerance_) {
    throw std::invalid_argument("matrix is not unitary within tolerance");
  }
}

DenseUnitary to_matrix(const PauliElement& a) {
  if (a.dimension() > kMaxDenseDimension) throw std::length_error("Pauli element too large to render densely");
  const int p = a.p();
  ComplexMatrix shift = ComplexMatrix::Zero(p, p);
  ComplexMatrix clock = ComplexMatrix::Zero(p, p);
  for (int j = 0; j < p; ++j) {
    shift((j + 1) % p, j) = 1;
    clock(j, j) = root_of_unity(j, p);
  }
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (std::size_t j = 0; j < a.n(); ++j) out = kron(out, matrix_pow(shift, a.x()[j]) * matrix_pow(clock, a.z()[j]));
  out *= root_of_unity(a.phase(), a.phase_modulus());
  return DenseUnitary(std::move(out));
}

OperatorSolution OperatorSolution::pauli(int p, std::size_t n, std::map<std::string, PauliElement> assignment) {
  for (const auto& [name, a] : assignment) {
    if (a.p() != p || a.n() != n) {
      throw std::invalid_argument("operator for '" + name + "' is not in the Pauli group of the target");
    }
  }
  OperatorSolution t;
  t.kind_ = Kind::kPauli;
  t.p_ = p;
  t.n_ = n;
  t.m_ = PauliElement::identity(p, n).dimension();
  t.pauli_ = std::move(assignment);
  return t;
}

OperatorSolution OperatorSolution::unitary(std::size_t m, std::map<std::string, DenseUnitary> assignment) {
  if (m == 0) throw std::invalid_argument("unitary dimension must be positive");
  for (const auto& [name, a] : assignment) {
    if (a.dimension() != m) {
      throw std::invalid_argument("operator for '" + name + "' has dimension " + std::to_string(a.dimension()) +
                                  ", target is " + std::to_string(m));
    }
  }
  OperatorSolution t;
  t.kind_ = Kind::kUnitary;
  t.m_ = m;
  t.dense_ = std::move(assignment);
  return t;
}

std::size_t OperatorSolution::dimension() const { return m_; }

std::vector<std::string> OperatorSolution::variables() const {
  std::vector<std::string> out;
  if (kind_ == Kind::kPauli) {
    for (const auto& [name, a] : pauli_) out.push_back(name);
  } else {
    for (const auto& [name, a] : dense_) out.push_back(name);
  }
  return out;
}

OperatorSolution OperatorSolution::to_dense() const {
  if (kind_ == Kind::kUnitary) return *this;
  std::map<std::string, DenseUnitary> dense;
  for (const auto& [name, a] : pauli_) dense.emplace(name, to_matrix(a));
  return unitary(m_, std::move(dense));
}

bool VerificationReport::torsion_pass() const {
  return std::all_of(torsion.begin(), torsion.end(), [](const auto& v) { return v.pass; });
}

bool VerificationReport::commutation_pass() const {
  return std::all_of(commutation.begin(), commutation.end(), [](const auto& v) { return v.pass; });
}

bool VerificationReport::constraints_pass() const {
  return std::all_of(constraints.begin(), constraints.end(), [](const auto& v) { return v.pass; });
}

std::vector<std::string> VerificationReport::failing_constraints() const {
  std::vector<std::string> out;
  for (const auto& c : constraints) {
    if (!c.pass) out.push_back(c.constraint);
  }
  return out;
}

VerificationReport verify_solution(const LinearConstraintSystem& lcs, const OperatorSolution& t) {
  const std::vector<std::string> assigned = t.variables();
  for (const auto& v : lcs.variables()) {
    if (!std::binary_search(assigned.begin(), assigned.end(), v)) {
      throw std::invalid_argument("no operator assigned to variable '" + v + "'");
    }
  }
  for (const auto& v : assigned) {
    if (!lcs.variable_index(v)) throw std::invalid_argument("operator assigned to unknown variable '" + v + "'");
  }
  const std::int64_t d = to_int64(lcs.modulus());
  const bool exact = t.kind() == OperatorSolution::Kind::kPauli;
  if (exact && t.p() != d) {
    throw std::invalid_argument("Pauli target over p = " + std::to_string(t.p()) + " cannot solve a system over Z/" +
                                std::to_string(d));
  }

  const auto& vars = lcs.variables();
  auto pauli = [&](std::size_t v) -> const PauliElement& { return t.pauli_assignment().at(vars[v]); };
  auto dense = [&](std::size_t v) -> const ComplexMatrix& { return t.unitary_assignment().at(vars[v]).matrix(); };
  const std::size_t m = t.dimension();
  const ComplexMatrix eye = exact ? ComplexMatrix() : ComplexMatrix::Identity(m, m);
  const double tol = kDefaultTolerance;

  VerificationReport report;
  for (std::size_t v = 0; v < vars.size(); ++v) {
    const bool ok = exact ? pauli_order_divides(pauli(v), d) : max_abs_difference(matrix_pow(dense(v), d), eye) <= tol;
    report.torsion.push_back({vars[v], ok});
  }

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& c : lcs.constraints()) {
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
      for (std::size_t j = i + 1; j < c.coeffs.size(); ++j) pairs.emplace(c.coeffs[i].first, c.coeffs[j].first);
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> failed_pairs;
  for (const auto& [i, j] : pairs) {
    const bool ok = exact ? pauli_commute(pauli(i), pauli(j))
                          : max_abs_difference(dense(i) * dense(j), dense(j) * dense(i)) <= tol;
    if (!ok) failed_pairs.emplace(i, j);
    report.commutation.push_back({vars[i], vars[j], ok});
  }

  for (std::size_t k = 0; k < lcs.num_constraints(); ++k) {
    const Constraint& c = lcs.constraints()[k];
    const std::int64_t b = to_int64(c.rhs);
    bool row_commutes = true;
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
      for (std::size_t j = i + 1; j < c.coeffs.size(); ++j) {
        if (failed_pairs.count({c.coeffs[i].first, c.coeffs[j].first})) row_commutes = false;
      }
    }
    ConstraintVerdict verdict{lcs.constraint_label(k), false, std::nullopt, 0};
    if (exact) {
      PauliElement forward = PauliElement::identity(t.p(), t.n());
      PauliElement backward = forward;
      for (const auto& [v, a] : c.coeffs) forward = pauli_mul(forward, pauli_pow(pauli(v), to_int64(a)));
      for (auto it = c.coeffs.rbegin(); it != c.coeffs.rend(); ++it) {
        backward = pauli_mul(backward, pauli_pow(pauli(it->first), to_int64(it->second)));
      }
      if (row_commutes && forward != backward) throw std::logic_error("commuting factors gave order-dependent product");
      const PauliElement target(t.p(), t.p() == 2 ? 2 * b : b, std::vector<std::int64_t>(t.n(), 0),
                                std::vector<std::int64_t>(t.n(), 0));
      verdict.pass = forward == target;
      verdict.product = forward;
    } else {
      ComplexMatrix forward = eye, backward = eye;
      for (const auto& [v, a] : c.coeffs) forward = forward * matrix_pow(dense(v), to_int64(a));
      for (auto it = c.coeffs.rbegin(); it != c.coeffs.rend(); ++it) {
        backward = backward * matrix_pow(dense(it->first), to_int64(it->second));
      }
      if (row_commutes && max_abs_difference(forward, backward) > tol) {
        throw std::logic_error("commuting factors gave order-dependent product");
      }
      verdict.residual = max_abs_difference(forward, root_of_unity(b, d) * eye);
      verdict.pass = verdict.residual <= tol;
    }
    report.constraints.push_back(std::move(verdict));
  }
  return report;
}

OperatorSolution stabilize(const OperatorSolution& t, std::size_t extra) {
  if (t.kind() != OperatorSolution::Kind::kPauli) throw std::invalid_argument("only Pauli solutions can be stabilized");
  std::map<std::string, PauliElement> padded;
  for (const auto& [name, a] : t.pauli_assignment()) padded.emplace(name, pauli_pad(a, extra));
  return OperatorSolution::pauli(t.p(), t.n() + extra, std::move(padded));
}

ZdVector det_cochain(const OperatorSolution& t, const LinearConstraintSystem& lcs) {
  const std::int64_t d = to_int64(lcs.modulus());
  std::vector<Integer> c;
  for (const auto& name : lcs.variables()) {
    if (t.kind() == OperatorSolution::Kind::kPauli) {
      const PauliElement& a = t.pauli_assignment().at(name);
      if (a.p() != d) throw std::invalid_argument("Pauli target does not match the modulus");
      if (a.p() != 2) {
        // omega^{a p^n} = 1, X is an even permutation and det Z = omega^{p(p-1)/2} = 1.
        c.push_back(0);
        continue;
      }
      // det(i^a (x) M_j) = i^{a 2^n} prod det(M_j)^{2^{n-1}}, det X = det Z = -1, det XZ = 1.
      const std::size_t n = a.n();
      std::int64_t flips = 0;
      for (std::size_t j = 0; j < n; ++j) flips += a.x()[j] != a.z()[j];
      const std::int64_t scalar = n == 0 ? 1 : n == 1 ? 2 : 0;    // 2^n mod 4
      const std::int64_t per_site = n == 1 ? 1 : 0;               // 2^{n-1} mod 2
      const std::int64_t log_i = reduce(a.phase() * scalar + 2 * per_site * flips, 4);
      if (log_i % 2 != 0) throw std::domain_error("determinant of '" + name + "' is not a square root of unity");
      c.push_back(log_i / 2);
    } else {
      const std::complex<double> det = t.unitary_assignment().at(name).matrix().determinant();
      const double turns = std::arg(det) / (2 * std::numbers::pi);
      const auto k = static_cast<std::int64_t>(std::llround(turns * static_cast<double>(d)));
      if (std::abs(det - root_of_unity(k, d)) > kRootSnapTolerance) {
        throw std::domain_error("determinant of '" + name + "' is not a d-th root of unity");
      }
      c.push_back(reduce(k, d));
    }
  }
  ZdVector out(lcs.modulus(), std::move(c));
  const auto delta = lcs.matrix().apply(out.coords());
  const Integer m = t.dimension();
  for (std::size_t k = 0; k < lcs.num_constraints(); ++k) {
    if (mod(delta[k] - m * lcs.constraints()[k].rhs, lcs.modulus()) != 0) {
      throw std::logic_error("det cochain violates delta c = m tau at constraint '" + lcs.constraint_label(k) + "'");
    }
  }
  return out;
}

OperatorSolution scalar_solution_to_operator(const LinearConstraintSystem& lcs, const ZdVector& x) {
  if (x.size() != lcs.num_variables() || x.modulus() != lcs.modulus()) {
    throw std::invalid_argument("scalar assignment does not match the system");
  }
  const std::int64_t d = to_int64(lcs.modulus());
  std::map<std::string, DenseUnitary> assignment;
  for (std::size_t v = 0; v < x.size(); ++v) {
    ComplexMatrix a(1, 1);
    a(0, 0) = root_of_unity(to_int64(x[v]), d);
    assignment.emplace(lcs.variables()[v], DenseUnitary(std::move(a)));
  }
  return OperatorSolution::unitary(1, std::move(assignment));
}

}  // namespace torsionk
