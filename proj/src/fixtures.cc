#include "torsionk/fixtures.h"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace torsionk {
namespace {

struct Face {
  std::string name;
  std::vector<WordLetter> word;
  int rhs;
};

// Constraint k has the variables of face k with coefficient 1 and the face's rhs.
Fixture assemble(std::string name, const std::vector<std::string>& vertices, const std::vector<OneCell>& edges,
                 const std::vector<Face>& faces) {
  std::vector<std::string> variables;
  for (const auto& e : edges) variables.push_back(e.name);
  std::vector<Constraint> constraints;
  std::vector<TwoCell> cells;
  for (const Face& f : faces) {
    Constraint c{f.name, {}, f.rhs};
    for (const WordLetter& l : f.word) {
      const auto v = static_cast<std::size_t>(std::find(variables.begin(), variables.end(), l.cell) - variables.begin());
      c.coeffs.emplace_back(v, 1);
    }
    constraints.push_back(std::move(c));
    cells.push_back({f.name, f.word});
  }
  std::map<std::string, PauliElement> assignment;
  for (const auto& v : variables) assignment.emplace(v, PauliElement::from_label(v));
  const std::size_t qubits = variables.front().size();
  return Fixture{std::move(name), LinearConstraintSystem(2, variables, std::move(constraints)),
                 CW2Complex(vertices, edges, std::move(cells)), OperatorSolution::pauli(2, qubits, std::move(assignment))};
}

Fixture mermin_square() {
  const std::vector<OneCell> edges = {
      {"XI", "O", "O"}, {"IX", "O", "P"}, {"XX", "O", "P"}, {"IZ", "Q", "O"}, {"ZI", "O", "O"},
      {"ZZ", "O", "Q"}, {"XZ", "O", "Q"}, {"ZX", "O", "P"}, {"YY", "P", "Q"},
  };
  const std::vector<Face> faces = {
      {"row1", {{"XI", -1}, {"IX", 1}, {"XX", -1}}, 0},
      {"row2", {{"ZZ", 1}, {"IZ", 1}, {"ZI", 1}}, 0},
      {"row3", {{"XZ", 1}, {"YY", -1}, {"ZX", -1}}, 0},
      {"col1", {{"XI", 1}, {"IZ", -1}, {"XZ", -1}}, 0},
      {"col2", {{"ZX", 1}, {"IX", -1}, {"ZI", -1}}, 0},
      {"col3", {{"XX", 1}, {"YY", 1}, {"ZZ", -1}}, 1},
  };
  return assemble("mermin_square", {"O", "P", "Q"}, edges, faces);
}

std::vector<OneCell> star_edges() {
  return {
      {"IXI", "O", "O"}, {"IYI", "O", "O"}, {"XII", "O", "D"}, {"YII", "O", "B"}, {"IIX", "O", "C"},
      {"IIY", "O", "A"}, {"XXX", "D", "C"}, {"XYY", "A", "D"}, {"YXY", "A", "B"}, {"YYX", "B", "C"},
  };
}

Fixture mermin_star() {
  const std::vector<Face> faces = {
      {"bottom", {{"IXI", 1}, {"YII", 1}, {"YXY", -1}, {"IIY", -1}}, 0},
      {"right", {{"IYI", 1}, {"IIX", 1}, {"YYX", -1}, {"YII", -1}}, 0},
      {"top", {{"IXI", -1}, {"XII", 1}, {"XXX", 1}, {"IIX", -1}}, 0},
      {"left", {{"IYI", -1}, {"IIY", 1}, {"XYY", 1}, {"XII", -1}}, 0},
      {"horizontal", {{"YXY", 1}, {"YYX", 1}, {"XXX", -1}, {"XYY", -1}}, 1},
  };
  return assemble("mermin_star", {"O", "A", "B", "C", "D"}, star_edges(), faces);
}

Fixture mermin_refined() {
  auto edges = star_edges();
  edges.insert(edges.end(), {{"ZZI", "D", "B"},
                             {"XYI", "O", "D"},
                             {"YXI", "O", "B"},
                             {"XXI", "O", "D"},
                             {"YYI", "O", "B"}});
  const std::vector<Face> faces = {
      {"F1", {{"YXY", 1}, {"ZZI", -1}, {"XYY", -1}}, 0},
      {"F2", {{"YYX", 1}, {"XXX", -1}, {"ZZI", 1}}, 1},
      {"F3", {{"YXI", 1}, {"YXY", -1}, {"IIY", -1}}, 0},
      {"F4", {{"IXI", 1}, {"YII", 1}, {"YXI", -1}}, 0},
      {"F5", {{"IYI", 1}, {"YYI", 1}, {"YII", -1}}, 0},
      {"F6", {{"IIX", 1}, {"YYX", -1}, {"YYI", -1}}, 0},
      {"F7", {{"IXI", -1}, {"XII", 1}, {"XXI", -1}}, 0},
      {"F8", {{"XXI", 1}, {"XXX", 1}, {"IIX", -1}}, 0},
      {"F9", {{"IYI", -1}, {"XYI", 1}, {"XII", -1}}, 0},
      {"F10", {{"IIY", 1}, {"XYY", 1}, {"XYI", -1}}, 0},
  };
  return assemble("mermin_refined", {"O", "A", "B", "C", "D"}, edges, faces);
}

}  // namespace

Fixture builtin_fixture(const std::string& name) {
  std::string key = name;
  std::replace(key.begin(), key.end(), '-', '_');
  if (key == "mermin_square") return mermin_square();
  if (key == "mermin_star") return mermin_star();
  if (key == "mermin_refined") return mermin_refined();
  throw std::out_of_range("unknown builtin '" + name + "'");
}

std::vector<std::string> builtin_fixture_names() { return {"mermin_square", "mermin_star", "mermin_refined"}; }

}  // namespace torsionk
