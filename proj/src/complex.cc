#include "torsionk/complex.h"

#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace torsionk {
namespace {

template <typename T, typename NameOf>
std::optional<std::size_t> find_by_name(const std::vector<T>& cells, const std::string& name, NameOf name_of) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (name_of(cells[i]) == name) return i;
  }
  return std::nullopt;
}

void require_unique(const std::vector<std::string>& names, const char* what) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw std::invalid_argument(std::string("empty ") + what + " name");
    if (!seen.insert(n).second) throw std::invalid_argument(std::string("duplicate ") + what + " '" + n + "'");
  }
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

}  // namespace

CW2Complex::CW2Complex(std::vector<std::string> zero_cells, std::vector<OneCell> one_cells,
                       std::vector<TwoCell> two_cells)
    : zero_cells_(std::move(zero_cells)), one_cells_(std::move(one_cells)), two_cells_(std::move(two_cells)) {
  if (zero_cells_.empty()) throw std::invalid_argument("complex needs at least one 0-cell");
  require_unique(zero_cells_, "0-cell");
  std::vector<std::string> names;
  for (const auto& e : one_cells_) names.push_back(e.name);
  require_unique(names, "1-cell");
  names.clear();
  for (const auto& f : two_cells_) names.push_back(f.name);
  require_unique(names, "2-cell");

  std::unordered_map<std::string, std::size_t> vertex;
  for (std::size_t i = 0; i < zero_cells_.size(); ++i) vertex[zero_cells_[i]] = i;
  std::unordered_map<std::string, std::size_t> edge;
  std::vector<std::size_t> parent(zero_cells_.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < one_cells_.size(); ++i) {
    const OneCell& e = one_cells_[i];
    if (!vertex.count(e.source) || !vertex.count(e.target)) {
      throw std::invalid_argument("1-cell '" + e.name + "' has an unknown endpoint");
    }
    edge[e.name] = i;
    parent[find_root(parent, vertex[e.source])] = find_root(parent, vertex[e.target]);
  }
  for (std::size_t i = 0; i < zero_cells_.size(); ++i) {
    if (find_root(parent, i) != find_root(parent, 0)) throw std::invalid_argument("complex is not connected");
  }

  for (const TwoCell& f : two_cells_) {
    std::optional<std::string> start;
    std::string at;
    for (const WordLetter& letter : f.word) {
      auto it = edge.find(letter.cell);
      if (it == edge.end()) {
        throw std::invalid_argument("2-cell '" + f.name + "' uses unknown 1-cell '" + letter.cell + "'");
      }
      if (letter.exponent == 0) throw std::invalid_argument("2-cell '" + f.name + "' has a zero exponent");
      const OneCell& e = one_cells_[it->second];
      const std::string& from = letter.exponent > 0 ? e.source : e.target;
      const std::string& to = letter.exponent > 0 ? e.target : e.source;
      if (!start) {
        start = from;
      } else if (at != from) {
        throw std::invalid_argument("attaching word of '" + f.name + "' is not an edge path at '" + letter.cell + "'");
      }
      if ((letter.exponent > 1 || letter.exponent < -1) && e.source != e.target) {
        throw std::invalid_argument("2-cell '" + f.name + "' repeats non-loop 1-cell '" + letter.cell + "'");
      }
      at = to;
    }
    if (start && at != *start) throw std::invalid_argument("attaching word of '" + f.name + "' is not closed");
  }
}

std::size_t CW2Complex::count(int dim) const {
  switch (dim) {
    case 0:
      return zero_cells_.size();
    case 1:
      return one_cells_.size();
    case 2:
      return two_cells_.size();
    default:
      return 0;
  }
}

std::optional<std::size_t> CW2Complex::zero_cell_index(const std::string& name) const {
  return find_by_name(zero_cells_, name, [](const std::string& s) { return s; });
}

std::optional<std::size_t> CW2Complex::one_cell_index(const std::string& name) const {
  return find_by_name(one_cells_, name, [](const OneCell& c) { return c.name; });
}

std::optional<std::size_t> CW2Complex::two_cell_index(const std::string& name) const {
  return find_by_name(two_cells_, name, [](const TwoCell& c) { return c.name; });
}

std::int64_t CW2Complex::euler_characteristic() const {
  return static_cast<std::int64_t>(count(0)) - static_cast<std::int64_t>(count(1)) +
         static_cast<std::int64_t>(count(2));
}

ChainData chain_data(const CW2Complex& x) {
  ChainData out{IntMatrix(x.count(0), x.count(1)), IntMatrix(x.count(1), x.count(2))};
  for (std::size_t j = 0; j < x.count(1); ++j) {
    const OneCell& e = x.one_cells()[j];
    out.d1(*x.zero_cell_index(e.target), j) += 1;
    out.d1(*x.zero_cell_index(e.source), j) -= 1;
  }
  for (std::size_t k = 0; k < x.count(2); ++k) {
    for (const WordLetter& letter : x.two_cells()[k].word) {
      out.d2(*x.one_cell_index(letter.cell), k) += letter.exponent;
    }
  }
  if (!(out.d1 * out.d2).is_zero()) throw std::logic_error("cellular boundary does not square to zero");
  return out;
}

IntMatrix coboundary(const CW2Complex& x, int degree) {
  const ChainData chains = chain_data(x);
  if (degree == 0) return chains.d1.transpose();
  if (degree == 1) return chains.d2.transpose();
  throw std::invalid_argument("coboundary degree must be 0 or 1");
}

namespace standard_complexes {

CW2Complex torus() {
  return CW2Complex({"o"}, {{"x", "o", "o"}, {"z", "o", "o"}},
                    {{"t", {{"x", 1}, {"z", 1}, {"x", -1}, {"z", -1}}}});
}

CW2Complex sphere() { return CW2Complex({"o"}, {}, {{"s", {}}}); }

CW2Complex wedge_of_circles(std::size_t circles) {
  std::vector<OneCell> loops;
  for (std::size_t i = 0; i < circles; ++i) loops.push_back({"a" + std::to_string(i + 1), "o", "o"});
  return CW2Complex({"o"}, std::move(loops), {});
}

CW2Complex projective_plane() { return CW2Complex({"o"}, {{"a", "o", "o"}}, {{"f", {{"a", 2}}}}); }

CW2Complex klein_bottle() {
  return CW2Complex({"o"}, {{"a", "o", "o"}, {"b", "o", "o"}},
                    {{"k", {{"a", 1}, {"b", 1}, {"a", -1}, {"b", 1}}}});
}

CW2Complex point() { return CW2Complex({"o"}, {}, {}); }

}  // namespace standard_complexes

}  // namespace torsionk
