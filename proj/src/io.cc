#include "torsionk/io.h"

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <set>

namespace torsionk {
namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

void require_object(const Json& j, const std::string& where, std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) fail(where, "expected an object");
  std::set<std::string> known;
  for (const char* k : required) {
    if (!j.contains(k)) fail(where, std::string("missing \"") + k + "\"");
    known.insert(k);
  }
  for (const char* k : optional) known.insert(k);
  known.insert("torsionk_schema");
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) fail(where, "unknown key \"" + key + "\"");
  }
  if (j.contains("torsionk_schema") && j["torsionk_schema"] != kSchemaVersion) {
    fail(where, "unsupported torsionk_schema " + j["torsionk_schema"].dump());
  }
}

std::int64_t get_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer, got " + j.dump());
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > std::numeric_limits<std::int64_t>::max()) {
    fail(where, "integer out of range");
  }
  return j.get<std::int64_t>();
}

std::string get_string(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string, got " + j.dump());
  return j.get<std::string>();
}

const Json& get_array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::vector<std::string> get_names(const Json& j, const std::string& where) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < get_array(j, where).size(); ++i) {
    out.push_back(get_string(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::int64_t> get_ints(const Json& j, const std::string& where) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < get_array(j, where).size(); ++i) {
    out.push_back(get_int(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

double get_double(const Json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number, got " + j.dump());
  return j.get<double>();
}

Json pauli_json(const PauliElement& a) {
  return Json{{"phase", a.phase()}, {"x", a.x()}, {"z", a.z()}};
}

Json matrix_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json integer_json(const Integer& a) {
  if (a >= std::numeric_limits<std::int64_t>::min() && a <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(a));
  }
  return Json(a.str());
}

Json integer_json(const std::vector<Integer>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(integer_json(x));
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

LinearConstraintSystem lcs_from_json(const Json& j) {
  require_object(j, "lcs", {"d", "variables", "constraints"});
  const std::int64_t d = get_int(j["d"], "lcs.d");
  if (d < 2) fail("lcs.d", "modulus must be at least 2");
  const std::vector<std::string> variables = get_names(j["variables"], "lcs.variables");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < variables.size(); ++i) index.emplace(variables[i], i);

  std::vector<Constraint> constraints;
  const Json& rows = get_array(j["constraints"], "lcs.constraints");
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::string where = "lcs.constraints[" + std::to_string(k) + "]";
    const Json& row = rows[k];
    require_object(row, where, {"coeffs", "rhs"}, {"name"});
    Constraint c;
    if (row.contains("name")) c.name = get_string(row["name"], where + ".name");
    if (!row["coeffs"].is_object()) fail(where + ".coeffs", "expected an object");
    for (const auto& [var, value] : row["coeffs"].items()) {
      const std::string at = where + ".coeffs." + var;
      const auto it = index.find(var);
      if (it == index.end()) fail(at, "unknown variable");
      const std::int64_t a = get_int(value, at);
      if (a < 0 || a >= d) fail(at, "residue must lie in [0, d)");
      if (a == 0) fail(at, "coefficient is 0 mod d");
      c.coeffs.emplace_back(it->second, a);
    }
    const std::int64_t rhs = get_int(row["rhs"], where + ".rhs");
    if (rhs < 0 || rhs >= d) fail(where + ".rhs", "residue must lie in [0, d)");
    c.rhs = rhs;
    constraints.push_back(std::move(c));
  }
  try {
    return LinearConstraintSystem(d, variables, std::move(constraints));
  } catch (const std::invalid_argument& e) {
    fail("lcs", e.what());
  }
}

Json to_json(const LinearConstraintSystem& lcs) {
  Json constraints = Json::array();
  for (const auto& c : lcs.constraints()) {
    Json coeffs = Json::object();
    for (const auto& [v, a] : c.coeffs) coeffs[lcs.variables()[v]] = integer_json(a);
    Json row{{"coeffs", coeffs}, {"rhs", integer_json(c.rhs)}};
    if (!c.name.empty()) row["name"] = c.name;
    constraints.push_back(std::move(row));
  }
  return Json{{"torsionk_schema", kSchemaVersion},
              {"d", integer_json(lcs.modulus())},
              {"variables", lcs.variables()},
              {"constraints", constraints}};
}

CW2Complex complex_from_json(const Json& j) {
  require_object(j, "complex", {"zero_cells", "one_cells", "two_cells"});
  const std::vector<std::string> zero = get_names(j["zero_cells"], "complex.zero_cells");
  std::vector<OneCell> one;
  const Json& ones = get_array(j["one_cells"], "complex.one_cells");
  for (std::size_t i = 0; i < ones.size(); ++i) {
    const std::string where = "complex.one_cells[" + std::to_string(i) + "]";
    require_object(ones[i], where, {"name", "source", "target"});
    one.push_back({get_string(ones[i]["name"], where + ".name"), get_string(ones[i]["source"], where + ".source"),
                   get_string(ones[i]["target"], where + ".target")});
  }
  std::vector<TwoCell> two;
  const Json& twos = get_array(j["two_cells"], "complex.two_cells");
  for (std::size_t i = 0; i < twos.size(); ++i) {
    const std::string where = "complex.two_cells[" + std::to_string(i) + "]";
    require_object(twos[i], where, {"name", "word"});
    TwoCell cell{get_string(twos[i]["name"], where + ".name"), {}};
    const Json& word = get_array(twos[i]["word"], where + ".word");
    for (std::size_t k = 0; k < word.size(); ++k) {
      const std::string at = where + ".word[" + std::to_string(k) + "]";
      if (!word[k].is_array() || word[k].size() != 2) fail(at, "expected [cell, exponent]");
      cell.word.push_back({get_string(word[k][0], at), get_int(word[k][1], at)});
    }
    two.push_back(std::move(cell));
  }
  try {
    return CW2Complex(zero, std::move(one), std::move(two));
  } catch (const std::invalid_argument& e) {
    fail("complex", e.what());
  }
}

Json to_json(const CW2Complex& x) {
  Json one = Json::array();
  for (const auto& e : x.one_cells()) one.push_back({{"name", e.name}, {"source", e.source}, {"target", e.target}});
  Json two = Json::array();
  for (const auto& f : x.two_cells()) {
    Json word = Json::array();
    for (const auto& l : f.word) word.push_back(Json::array({l.cell, l.exponent}));
    two.push_back({{"name", f.name}, {"word", word}});
  }
  return Json{{"torsionk_schema", kSchemaVersion}, {"zero_cells", x.zero_cells()}, {"one_cells", one}, {"two_cells", two}};
}

OperatorSolution solution_from_json(const Json& j) {
  require_object(j, "solution", {"target", "assignment"});
  const Json& target = j["target"];
  if (!target.is_object() || !target.contains("kind")) fail("solution.target", "missing \"kind\"");
  const std::string kind = get_string(target["kind"], "solution.target.kind");
  const Json& assignment = j["assignment"];
  if (!assignment.is_object()) fail("solution.assignment", "expected an object");

  try {
    if (kind == "pauli") {
      require_object(target, "solution.target", {"kind", "p", "n"});
      const std::int64_t p = get_int(target["p"], "solution.target.p");
      const std::int64_t n = get_int(target["n"], "solution.target.n");
      if (p < 2 || p > std::numeric_limits<int>::max()) fail("solution.target.p", "out of range");
      if (n < 0) fail("solution.target.n", "must be non-negative");
      std::map<std::string, PauliElement> ops;
      for (const auto& [var, value] : assignment.items()) {
        const std::string where = "solution.assignment." + var;
        if (value.is_object() && value.contains("matrix")) fail(where, "matrix entry in a pauli target");
        require_object(value, where, {"phase", "x", "z"});
        ops.emplace(var, PauliElement(static_cast<int>(p), get_int(value["phase"], where + ".phase"),
                                      get_ints(value["x"], where + ".x"), get_ints(value["z"], where + ".z")));
      }
      return OperatorSolution::pauli(static_cast<int>(p), static_cast<std::size_t>(n), std::move(ops));
    }
    if (kind == "unitary") {
      require_object(target, "solution.target", {"kind", "m"});
      const std::int64_t m = get_int(target["m"], "solution.target.m");
      if (m < 1) fail("solution.target.m", "must be positive");
      std::map<std::string, DenseUnitary> ops;
      for (const auto& [var, value] : assignment.items()) {
        const std::string where = "solution.assignment." + var;
        require_object(value, where, {"matrix"});
        const Json& rows = get_array(value["matrix"], where + ".matrix");
        ComplexMatrix a(static_cast<Eigen::Index>(rows.size()), rows.empty() ? 0 : static_cast<Eigen::Index>(rows[0].size()));
        for (std::size_t r = 0; r < rows.size(); ++r) {
          const Json& row = get_array(rows[r], where + ".matrix");
          if (static_cast<Eigen::Index>(row.size()) != a.cols()) fail(where + ".matrix", "ragged rows");
          for (std::size_t c = 0; c < row.size(); ++c) {
            if (!row[c].is_array() || row[c].size() != 2) fail(where + ".matrix", "expected [re, im] entries");
            a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = {get_double(row[c][0], where + ".matrix"),
                                                                              get_double(row[c][1], where + ".matrix")};
          }
        }
        ops.emplace(var, DenseUnitary(std::move(a)));
      }
      return OperatorSolution::unitary(static_cast<std::size_t>(m), std::move(ops));
    }
  } catch (const std::invalid_argument& e) {
    throw IncompatibleInput(std::string("solution: ") + e.what());
  }
  fail("solution.target.kind", "expected \"pauli\" or \"unitary\"");
}

Json to_json(const PauliElement& a) { return pauli_json(a); }

Json to_json(const OperatorSolution& t) {
  Json target;
  Json assignment = Json::object();
  if (t.kind() == OperatorSolution::Kind::kPauli) {
    target = {{"kind", "pauli"}, {"p", t.p()}, {"n", t.n()}};
    for (const auto& [var, a] : t.pauli_assignment()) assignment[var] = pauli_json(a);
  } else {
    target = {{"kind", "unitary"}, {"m", t.dimension()}};
    for (const auto& [var, a] : t.unitary_assignment()) assignment[var] = {{"matrix", matrix_json(a.matrix())}};
  }
  return Json{{"torsionk_schema", kSchemaVersion}, {"target", target}, {"assignment", assignment}};
}

}  // namespace torsionk
