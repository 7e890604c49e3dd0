#include "torsionk/modular.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "torsionk/smith.h"

namespace torsionk {
namespace {

void require_modulus(const Integer& d) {
  if (d < 1) throw std::invalid_argument("modulus must be at least 1, got " + d.str());
}

IntMatrix diagonal_of(const std::vector<Integer>& entries) {
  return IntMatrix::diagonal(entries.size(), entries.size(), entries);
}

}  // namespace

// ---------------------------------------------------------------- ZdVector

ZdVector::ZdVector(Integer modulus, std::vector<Integer> coords)
    : modulus_(std::move(modulus)), coords_(std::move(coords)) {
  require_modulus(modulus_);
  for (auto& c : coords_) c = mod(c, modulus_);
}

ZdVector ZdVector::zeros(Integer modulus, std::size_t n) {
  return ZdVector(std::move(modulus), std::vector<Integer>(n));
}

bool ZdVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

std::string ZdVector::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) out << (i ? ", " : "") << coords_[i];
  out << ") mod " << modulus_;
  return out.str();
}

// ---------------------------------------------------------------- FinAbGroup

FinAbGroup::FinAbGroup(std::vector<Integer> invariant_factors) : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw std::invalid_argument("invariant factor below 2: " + factors_[i].str());
    if (i > 0 && factors_[i] % factors_[i - 1] != 0) {
      throw std::invalid_argument("invariant factors must form a divisibility chain");
    }
  }
}

FinAbGroup::FinAbGroup(std::vector<Integer> invariant_factors, GroupEmbedding embedding)
    : FinAbGroup(std::move(invariant_factors)) {
  if (embedding.generators.cols() != factors_.size()) {
    throw std::invalid_argument("embedding must lift every generator");
  }
  if (embedding.relations.rows() != embedding.generators.rows()) {
    throw std::invalid_argument("embedding generators and relations live in different modules");
  }
  embedding_ = std::move(embedding);
}

Integer FinAbGroup::order() const {
  Integer n = 1;
  for (const auto& k : factors_) n *= k;
  return n;
}

const GroupEmbedding& FinAbGroup::embedding() const {
  if (!embedding_) throw std::logic_error("group has no ambient embedding");
  return *embedding_;
}

std::optional<std::vector<Integer>> FinAbGroup::coordinates(const ZdVector& x) const {
  const GroupEmbedding& emb = embedding();
  if (x.size() != emb.generators.rows()) throw std::invalid_argument("element lives in a different module");
  auto sol = solve_mod(emb.generators.hcat(emb.relations), x.coords(), emb.modulus);
  if (!sol) return std::nullopt;
  std::vector<Integer> coords(factors_.size());
  for (std::size_t j = 0; j < factors_.size(); ++j) coords[j] = mod((*sol)[j], factors_[j]);
  return coords;
}

ZdVector FinAbGroup::element(std::span<const Integer> coords) const {
  const GroupEmbedding& emb = embedding();
  if (coords.size() != factors_.size()) throw std::invalid_argument("coordinate count mismatch");
  return ZdVector(emb.modulus, emb.generators.apply(coords));
}

std::string FinAbGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < factors_.size(); ++i) out << (i ? " + " : "") << "Z/" << factors_[i];
  return out.str();
}

FinAbGroup present_group(const Integer& modulus, const IntMatrix& generators, const IntMatrix& relations,
                         const IntMatrix& ambient_relations) {
  const std::size_t a = relations.rows();
  if (generators.cols() != a) throw std::invalid_argument("presentation: generator count mismatch");
  const SmithDecomposition snf = smith_normal_form(relations);
  const IntMatrix lifted = generators * snf.u;

  std::vector<Integer> factors;
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < a; ++j) {
    Integer s = j < std::min(relations.rows(), relations.cols()) ? snf.s(j, j) : Integer(0);
    if (s == 0) throw std::logic_error("presented group is infinite");
    if (s == 1) continue;
    factors.push_back(s);
    kept.push_back(j);
  }
  GroupEmbedding emb{modulus, lifted.select_columns(kept).reduced(modulus), ambient_relations};
  return FinAbGroup(std::move(factors), std::move(emb));
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<Integer> orders = a.invariant_factors();
  orders.insert(orders.end(), b.invariant_factors().begin(), b.invariant_factors().end());
  const SmithDecomposition snf = smith_normal_form(diagonal_of(orders));
  std::vector<Integer> factors;
  for (const auto& s : snf.diagonal()) {
    if (s != 1) factors.push_back(s);
  }
  return FinAbGroup(std::move(factors));
}

// ---------------------------------------------------------------- solving

std::optional<ZdVector> solve_mod(const IntMatrix& a, std::span<const Integer> b, const Integer& d) {
  require_modulus(d);
  if (b.size() != a.rows()) {
    throw std::invalid_argument("solve_mod: right-hand side has " + std::to_string(b.size()) +
                                " entries, matrix has " + std::to_string(a.rows()) + " rows");
  }
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  if (r == 0) return ZdVector::zeros(d, c);

  // A x + d y = b over Z, via the Smith form of [A | d I].
  IntMatrix scaled_identity = IntMatrix::identity(r);
  for (std::size_t i = 0; i < r; ++i) scaled_identity(i, i) = d;
  const SmithDecomposition snf = smith_normal_form(a.hcat(scaled_identity));

  const std::vector<Integer> y = snf.u_inv.apply(b);
  std::vector<Integer> w(c + r);
  for (std::size_t i = 0; i < r; ++i) {
    const Integer& s = snf.s(i, i);
    if (y[i] % s != 0) return std::nullopt;
    w[i] = y[i] / s;
  }
  const std::vector<Integer> full = snf.v_inv.apply(w);
  return ZdVector(d, std::vector<Integer>(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(c)));
}

std::optional<ZdVector> solve_mod(const IntMatrix& a, const ZdVector& b) {
  return solve_mod(a, b.coords(), b.modulus());
}

FinAbGroup kernel_mod(const IntMatrix& a, const Integer& d) {
  require_modulus(d);
  const std::size_t c = a.cols();
  const SmithDecomposition snf = smith_normal_form(a);

  IntMatrix gens(c, c);
  std::vector<Integer> orders(c);
  for (std::size_t i = 0; i < c; ++i) {
    Integer scale = 1;
    orders[i] = d;
    if (i < snf.rank) {
      orders[i] = gcd(snf.s(i, i), d);
      scale = d / orders[i];
    }
    for (std::size_t r = 0; r < c; ++r) gens(r, i) = snf.v_inv(r, i) * scale;
  }
  return present_group(d, gens, diagonal_of(orders), IntMatrix(c, 0));
}

FinAbGroup quotient_group(std::size_t ambient_rank, const Integer& d, const IntMatrix& relations) {
  require_modulus(d);
  if (relations.rows() != ambient_rank) {
    throw std::invalid_argument("quotient_group: relations must have one row per ambient coordinate");
  }
  IntMatrix scaled_identity = IntMatrix::identity(ambient_rank);
  for (std::size_t i = 0; i < ambient_rank; ++i) scaled_identity(i, i) = d;
  return present_group(d, IntMatrix::identity(ambient_rank), relations.hcat(scaled_identity), relations);
}

FinAbGroup quotient_by(const FinAbGroup& sub, const IntMatrix& image) {
  const GroupEmbedding& emb = sub.embedding();
  const std::size_t a = sub.num_generators();
  if (image.rows() != emb.generators.rows()) throw std::invalid_argument("quotient_by: module mismatch");

  IntMatrix rel(a, a + image.cols());
  for (std::size_t i = 0; i < a; ++i) rel(i, i) = sub.invariant_factors()[i];
  for (std::size_t j = 0; j < image.cols(); ++j) {
    auto coords = sub.coordinates(ZdVector(emb.modulus, image.column(j)));
    if (!coords) throw std::invalid_argument("quotient_by: image column " + std::to_string(j) + " not in subgroup");
    for (std::size_t i = 0; i < a; ++i) rel(i, a + j) = (*coords)[i];
  }
  return present_group(emb.modulus, emb.generators, rel, emb.relations.hcat(image));
}

// ---------------------------------------------------------------- coefficient maps

CoefficientMap::CoefficientMap(Integer source_modulus, Integer target_modulus, Integer multiplier)
    : source_(std::move(source_modulus)), target_(std::move(target_modulus)) {
  require_modulus(source_);
  require_modulus(target_);
  if ((multiplier * source_) % target_ != 0) {
    throw std::invalid_argument("x -> " + multiplier.str() + "x is not well defined from Z/" + source_.str() +
                                " to Z/" + target_.str());
  }
  multiplier_ = mod(multiplier, target_);
}

Integer CoefficientMap::apply(const Integer& x) const { return mod(multiplier_ * x, target_); }

ZdVector CoefficientMap::apply(const ZdVector& v) const {
  if (v.modulus() != source_) {
    throw std::invalid_argument("coefficient map expects modulus " + source_.str() + ", got " + v.modulus().str());
  }
  std::vector<Integer> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = multiplier_ * v[i];
  return ZdVector(target_, std::move(out));
}

CoefficientMap CoefficientMap::then(const CoefficientMap& next) const {
  if (next.source_ != target_) throw std::invalid_argument("coefficient maps do not compose");
  return CoefficientMap(source_, next.target_, multiplier_ * next.multiplier_);
}

bool CoefficientMap::is_zero() const { return multiplier_ == 0; }

CoefficientMap coefficient_map(const Integer& source_modulus, const Integer& target_modulus,
                               const Integer& multiplier) {
  return CoefficientMap(source_modulus, target_modulus, multiplier);
}

CoefficientMap torsion_inclusion(const Integer& d, const Integer& m) {
  const Integer g = gcd(d, m);
  return CoefficientMap(g, d, d / g);
}

CoefficientMap multiplication_by(const Integer& d, const Integer& m) { return CoefficientMap(d, d, m); }

CoefficientMap cotorsion_projection(const Integer& d, const Integer& m) {
  return CoefficientMap(d, gcd(d, m), 1);
}

}  // namespace torsionk
