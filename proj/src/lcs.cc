#include "torsionk/lcs.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace torsionk {

LinearConstraintSystem::LinearConstraintSystem(Integer d, std::vector<std::string> variables,
                                               std::vector<Constraint> constraints)
    : d_(std::move(d)), variables_(std::move(variables)), constraints_(std::move(constraints)) {
  if (d_ < 2) throw std::invalid_argument("modulus must be at least 2");
  if (variables_.empty()) throw std::invalid_argument("system has no variables");
  if (constraints_.empty()) throw std::invalid_argument("system has no constraints");
  std::set<std::string> names;
  for (const auto& v : variables_) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    if (!names.insert(v).second) throw std::invalid_argument("duplicate variable '" + v + "'");
  }
  std::set<std::string> constraint_names;
  std::vector<bool> used(variables_.size(), false);
  for (std::size_t k = 0; k < constraints_.size(); ++k) {
    Constraint& c = constraints_[k];
    if (!c.name.empty() && !constraint_names.insert(c.name).second) {
      throw std::invalid_argument("duplicate constraint name '" + c.name + "'");
    }
    if (c.coeffs.empty()) throw std::invalid_argument("constraint " + std::to_string(k + 1) + " has no terms");
    std::sort(c.coeffs.begin(), c.coeffs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
      auto& [var, coeff] = c.coeffs[i];
      if (var >= variables_.size()) throw std::invalid_argument("constraint refers to an unknown variable");
      if (i > 0 && c.coeffs[i - 1].first == var) {
        throw std::invalid_argument("variable '" + variables_[var] + "' repeated in a constraint");
      }
      coeff = mod(coeff, d_);
      if (coeff == 0) throw std::invalid_argument("coefficient of '" + variables_[var] + "' is zero mod d");
      used[var] = true;
    }
    c.rhs = mod(c.rhs, d_);
  }
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (!used[i]) throw std::invalid_argument("variable '" + variables_[i] + "' appears in no constraint");
  }
}

std::optional<std::size_t> LinearConstraintSystem::variable_index(const std::string& name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - variables_.begin());
}

bool LinearConstraintSystem::constraints_named() const {
  return std::all_of(constraints_.begin(), constraints_.end(), [](const Constraint& c) { return !c.name.empty(); });
}

std::string LinearConstraintSystem::constraint_label(std::size_t k) const {
  return constraints_named() ? constraints_[k].name : "r" + std::to_string(k + 1);
}

IntMatrix LinearConstraintSystem::matrix() const {
  IntMatrix m(constraints_.size(), variables_.size());
  for (std::size_t k = 0; k < constraints_.size(); ++k) {
    for (const auto& [var, coeff] : constraints_[k].coeffs) m(k, var) = coeff;
  }
  return m;
}

ZdVector LinearConstraintSystem::rhs() const {
  std::vector<Integer> b;
  for (const auto& c : constraints_) b.push_back(c.rhs);
  return ZdVector(d_, std::move(b));
}

HypergraphData hypergraph_of(const LinearConstraintSystem& lcs) {
  Hypergraph h{lcs.modulus(), lcs.variables(), {}};
  for (std::size_t k = 0; k < lcs.num_constraints(); ++k) {
    h.edges.push_back({lcs.constraint_label(k), lcs.constraints()[k].coeffs});
  }
  return {std::move(h), lcs.rhs()};
}

IntMatrix hypergraph_boundary(const Hypergraph& h, const Integer& d) {
  IntMatrix out(h.vertices.size(), h.edges.size());
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    for (const auto& [v, eps] : h.edges[e].weights) out(v, e) = mod(out(v, e) + eps, d);
  }
  return out;
}

std::optional<ZdVector> scalar_solution(const LinearConstraintSystem& lcs) {
  return solve_mod(lcs.matrix(), lcs.rhs());
}

std::string ClassicalValue::to_string() const {
  std::int64_t g = std::max<std::int64_t>(1, std::gcd(satisfied, constraints));
  if (satisfied == constraints) return "1";
  return std::to_string(satisfied / g) + "/" + std::to_string(constraints / g);
}

ClassicalValue classical_value(const LinearConstraintSystem& lcs, std::int64_t limit) {
  const std::int64_t d = to_int64(lcs.modulus());
  const std::size_t c = lcs.num_variables();
  std::int64_t total = 1;
  for (std::size_t i = 0; i < c; ++i) {
    if (total > limit / d) throw std::length_error("classical value search space exceeds the limit");
    total *= d;
  }

  struct Row {
    std::vector<std::pair<std::size_t, std::int64_t>> terms;
    std::int64_t rhs;
  };
  std::vector<Row> rows;
  for (const auto& con : lcs.constraints()) {
    Row row{{}, to_int64(con.rhs)};
    for (const auto& [v, a] : con.coeffs) row.terms.emplace_back(v, to_int64(a));
    rows.push_back(std::move(row));
  }

  const auto r = static_cast<std::int64_t>(rows.size());
  std::vector<std::int64_t> x(c, 0), best_x(c, 0);
  std::int64_t best = -1;
  for (std::int64_t step = 0; step < total; ++step) {
    std::int64_t sat = 0;
    for (const Row& row : rows) {
      std::int64_t s = 0;
      for (const auto& [v, a] : row.terms) s += a * x[v];
      if (s % d == row.rhs) ++sat;
    }
    if (sat > best) {
      best = sat;
      best_x = x;
      if (best == r) break;
    }
    for (std::size_t i = c; i-- > 0;) {
      if (++x[i] < d) break;
      x[i] = 0;
    }
  }
  return ClassicalValue{best, r, ZdVector(lcs.modulus(), std::vector<Integer>(best_x.begin(), best_x.end()))};
}

CW2Complex canonical_realization(const Hypergraph& h, const Integer& d) {
  std::vector<OneCell> loops;
  for (const auto& v : h.vertices) loops.push_back({v, "o", "o"});
  std::vector<TwoCell> disks;
  for (const HyperEdge& e : h.edges) {
    auto weights = e.weights;
    std::sort(weights.begin(), weights.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    TwoCell cell{e.name, {}};
    for (const auto& [v, eps] : weights) {
      const Integer lifted = mod(eps, d);
      if (lifted == 0) throw std::invalid_argument("hyperedge weight is zero mod d");
      cell.word.push_back({h.vertices[v], to_int64(lifted)});
    }
    disks.push_back(std::move(cell));
  }
  CW2Complex x({"o"}, std::move(loops), std::move(disks));
  if (chain_data(x).d2.reduced(d) != hypergraph_boundary(h, d)) {
    throw std::logic_error("canonical realization does not reproduce the hypergraph boundary");
  }
  return x;
}

ZdVector RealizationMap::one_cochain(const ZdVector& on_variables) const {
  std::vector<Integer> out;
  for (std::size_t v : variable_of_cell) out.push_back(on_variables[v]);
  return ZdVector(on_variables.modulus(), std::move(out));
}

ZdVector RealizationMap::two_cochain(const ZdVector& on_constraints) const {
  std::vector<Integer> out;
  for (std::size_t k : constraint_of_cell) out.push_back(on_constraints[k]);
  return ZdVector(on_constraints.modulus(), std::move(out));
}

RealizationMap check_realization(const CW2Complex& x, const LinearConstraintSystem& lcs) {
  if (x.count(1) != lcs.num_variables()) {
    throw std::invalid_argument("realization has " + std::to_string(x.count(1)) + " 1-cells for " +
                                std::to_string(lcs.num_variables()) + " variables");
  }
  if (x.count(2) != lcs.num_constraints()) {
    throw std::invalid_argument("realization has " + std::to_string(x.count(2)) + " 2-cells for " +
                                std::to_string(lcs.num_constraints()) + " constraints");
  }
  RealizationMap map;
  for (const OneCell& e : x.one_cells()) {
    auto v = lcs.variable_index(e.name);
    if (!v) throw std::invalid_argument("1-cell '" + e.name + "' is not a variable");
    map.variable_of_cell.push_back(*v);
  }
  if (lcs.constraints_named()) {
    std::map<std::string, std::size_t> by_name;
    for (std::size_t k = 0; k < lcs.num_constraints(); ++k) by_name[lcs.constraints()[k].name] = k;
    for (const TwoCell& f : x.two_cells()) {
      auto it = by_name.find(f.name);
      if (it == by_name.end()) throw std::invalid_argument("2-cell '" + f.name + "' is not a constraint");
      map.constraint_of_cell.push_back(it->second);
    }
  } else {
    for (std::size_t k = 0; k < x.count(2); ++k) map.constraint_of_cell.push_back(k);
  }

  const Integer& d = lcs.modulus();
  const IntMatrix cellular = chain_data(x).d2;
  const IntMatrix expected = hypergraph_boundary(hypergraph_of(lcs).hypergraph, d);
  for (std::size_t j = 0; j < x.count(1); ++j) {
    for (std::size_t k = 0; k < x.count(2); ++k) {
      if (mod(cellular(j, k), d) != expected(map.variable_of_cell[j], map.constraint_of_cell[k])) {
        throw std::invalid_argument("boundary of 2-cell '" + x.two_cells()[k].name + "' disagrees with constraint '" +
                                    lcs.constraint_label(map.constraint_of_cell[k]) + "' at variable '" +
                                    x.one_cells()[j].name + "'");
      }
    }
  }
  return map;
}

}  // namespace torsionk
