#include "torsionk/cohomology.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "torsionk/smith.h"

namespace torsionk {
namespace {

void require_degree(int degree) {
  if (degree != 1 && degree != 2) throw std::invalid_argument("cohomology degree must be 1 or 2");
}

// ---- exhaustive enumeration helpers (no Smith forms involved)

using SmallVec = std::vector<std::int64_t>;

std::int64_t checked_power(std::int64_t base, std::size_t exp, std::int64_t limit) {
  std::int64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

SmallVec decode(std::int64_t code, std::int64_t k, std::size_t n) {
  SmallVec v(n);
  for (std::size_t i = n; i > 0; --i) {
    v[i - 1] = code % k;
    code /= k;
  }
  return v;
}

std::int64_t encode(const SmallVec& v, std::int64_t k) {
  std::int64_t code = 0;
  for (auto x : v) code = code * k + x;
  return code;
}

SmallVec apply_mod(const IntMatrix& a, const SmallVec& x, std::int64_t k) {
  SmallVec out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (x[j] != 0) s = (s + static_cast<std::int64_t>(mod(a(i, j), k)) * x[j]) % k;
    }
    out[i] = s;
  }
  return out;
}

std::map<std::int64_t, int> factorize(std::int64_t n) {
  std::map<std::int64_t, int> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

// Invariant factors of a group of order `order` from t -> |{g : t g = 0}|.
std::vector<Integer> factors_from_torsion_counts(std::int64_t order,
                                                 const std::function<std::int64_t(std::int64_t)>& killed_by) {
  std::vector<std::vector<std::int64_t>> parts;
  for (auto [p, e] : factorize(order)) {
    std::vector<int> log_count(static_cast<std::size_t>(e) + 2, 0);
    std::int64_t pj = 1;
    for (int j = 1; j <= e + 1; ++j) {
      pj *= p;
      std::int64_t c = killed_by(pj);
      while (c > 1) {
        c /= p;
        ++log_count[static_cast<std::size_t>(j)];
      }
    }
    std::vector<std::int64_t> orders;
    std::int64_t pk = 1;
    for (int j = 1; j <= e; ++j) {
      pk *= p;
      const int exactly = 2 * log_count[j] - log_count[j - 1] - log_count[j + 1];
      for (int i = 0; i < exactly; ++i) orders.push_back(pk);
    }
    std::sort(orders.rbegin(), orders.rend());
    parts.push_back(std::move(orders));
  }
  std::size_t count = 0;
  for (const auto& p : parts) count = std::max(count, p.size());
  std::vector<std::int64_t> factors(count, 1);
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.size(); ++i) factors[i] *= p[i];
  }
  std::sort(factors.begin(), factors.end());
  return {factors.begin(), factors.end()};
}

// ---- pi_1 simplification

using Letter = std::pair<std::size_t, int>;  // (generator, +-1)
using Word = std::vector<Letter>;

Word free_reduce(const Word& w) {
  Word out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().first == l.first && out.back().second == -l.second) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  // cyclic reduction
  std::size_t lo = 0, hi = out.size();
  while (hi - lo >= 2 && out[lo].first == out[hi - 1].first && out[lo].second == -out[hi - 1].second) {
    ++lo;
    --hi;
  }
  return Word(out.begin() + static_cast<std::ptrdiff_t>(lo), out.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word inverse(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.emplace_back(it->first, -it->second);
  return out;
}

// Tietze elimination: a generator occurring exactly once in some relator is
// expressed by the rest of that relator and substituted away. Returns true
// when no generators survive.
bool collapses_to_trivial(std::size_t num_generators, std::vector<Word> relators) {
  constexpr std::size_t kMaxLetters = 200000;
  std::vector<bool> alive(num_generators, true);
  std::size_t remaining = num_generators;
  for (auto& r : relators) r = free_reduce(r);

  bool progress = true;
  while (remaining > 0 && progress) {
    progress = false;
    for (std::size_t ri = 0; ri < relators.size() && !progress; ++ri) {
      const Word& r = relators[ri];
      std::map<std::size_t, int> occurrences;
      for (const Letter& l : r) ++occurrences[l.first];
      for (auto [gen, count] : occurrences) {
        if (count != 1) continue;
        // rotate so the generator comes first: g^e w = 1  =>  g = (w^-1)^e
        auto pos = static_cast<std::size_t>(
            std::find_if(r.begin(), r.end(), [g = gen](const Letter& l) { return l.first == g; }) - r.begin());
        const int e = r[pos].second;
        Word rest(r.begin() + static_cast<std::ptrdiff_t>(pos) + 1, r.end());
        rest.insert(rest.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
        const Word replacement = e == 1 ? inverse(rest) : rest;
        const Word replacement_inv = inverse(replacement);

        std::vector<Word> next;
        std::size_t letters = 0;
        for (std::size_t rj = 0; rj < relators.size(); ++rj) {
          if (rj == ri) continue;
          Word w;
          for (const Letter& l : relators[rj]) {
            if (l.first == gen) {
              const Word& sub = l.second == 1 ? replacement : replacement_inv;
              w.insert(w.end(), sub.begin(), sub.end());
            } else {
              w.push_back(l);
            }
          }
          w = free_reduce(w);
          letters += w.size();
          if (!w.empty()) next.push_back(std::move(w));
        }
        if (letters > kMaxLetters) return false;
        relators = std::move(next);
        alive[gen] = false;
        --remaining;
        progress = true;
        break;
      }
    }
  }
  return remaining == 0;
}

}  // namespace

FinAbGroup cohomology(const CW2Complex& x, const Integer& k, int degree) {
  require_degree(degree);
  if (k < 1) throw std::invalid_argument("coefficient modulus must be positive");
  const std::size_t n = x.count(degree);
  if (k == 1) return FinAbGroup({}, GroupEmbedding{1, IntMatrix(n, 0), IntMatrix(n, 0)});
  if (degree == 2) return quotient_group(n, k, coboundary(x, 1));
  const FinAbGroup cocycles = kernel_mod(coboundary(x, 1), k);
  return quotient_by(cocycles, coboundary(x, 0));
}

bool CohomologyClass::is_zero() const {
  return std::all_of(coordinates.begin(), coordinates.end(), [](const Integer& c) { return c == 0; });
}

std::string CohomologyClass::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < coordinates.size(); ++i) out << (i ? "," : "") << coordinates[i];
  out << ") in H^" << degree << "(X; Z/" << modulus << ") = " << group.to_string();
  return out.str();
}

CohomologyClass class_of(const CW2Complex& x, const Integer& k, int degree, const ZdVector& cochain) {
  require_degree(degree);
  if (cochain.modulus() != k) throw std::invalid_argument("cochain modulus differs from coefficient modulus");
  if (cochain.size() != x.count(degree)) {
    throw std::invalid_argument("cochain has " + std::to_string(cochain.size()) + " entries, expected " +
                                std::to_string(x.count(degree)));
  }
  FinAbGroup group = cohomology(x, k, degree);
  auto coords = group.coordinates(cochain);
  if (!coords) throw std::invalid_argument("degree-1 cochain is not a cocycle");
  return CohomologyClass{degree, k, cochain, std::move(group), std::move(*coords)};
}

CohomologyClass push_class(const CW2Complex& x, const CohomologyClass& cls, const CoefficientMap& map) {
  if (map.source_modulus() != cls.modulus) throw std::invalid_argument("coefficient map source modulus mismatch");
  return class_of(x, map.target_modulus(), cls.degree, map.apply(cls.representative));
}

FinAbGroup brute_force_cohomology(const CW2Complex& x, const Integer& k_big, int degree, std::int64_t limit) {
  require_degree(degree);
  if (k_big < 2) throw std::invalid_argument("brute force needs modulus >= 2");
  const std::int64_t k = to_int64(k_big);
  const std::size_t n = x.count(degree);
  const std::size_t n_below = x.count(degree - 1);
  if (checked_power(k, n + n_below, limit) > limit) {
    throw std::length_error("brute-force cohomology exceeds the enumeration limit");
  }
  const std::int64_t total = checked_power(k, n, limit);
  const std::int64_t below = checked_power(k, n_below, limit);
  const IntMatrix delta_below = coboundary(x, degree - 1);

  std::vector<char> is_boundary(static_cast<std::size_t>(total), 0);
  std::int64_t boundaries = 0;
  for (std::int64_t code = 0; code < below; ++code) {
    const auto b = encode(apply_mod(delta_below, decode(code, k, n_below), k), k);
    if (!is_boundary[static_cast<std::size_t>(b)]) {
      is_boundary[static_cast<std::size_t>(b)] = 1;
      ++boundaries;
    }
  }

  std::vector<SmallVec> cocycles;
  const IntMatrix delta_up = degree == 1 ? coboundary(x, 1) : IntMatrix(0, n);
  for (std::int64_t code = 0; code < total; ++code) {
    SmallVec v = decode(code, k, n);
    const SmallVec dv = apply_mod(delta_up, v, k);
    if (std::all_of(dv.begin(), dv.end(), [](auto c) { return c == 0; })) cocycles.push_back(std::move(v));
  }

  const std::int64_t order = static_cast<std::int64_t>(cocycles.size()) / boundaries;
  return FinAbGroup(factors_from_torsion_counts(order, [&](std::int64_t t) {
    std::int64_t hits = 0;
    SmallVec w(n);
    for (const auto& z : cocycles) {
      for (std::size_t i = 0; i < n; ++i) w[i] = (t % k) * z[i] % k;
      if (is_boundary[static_cast<std::size_t>(encode(w, k))]) ++hits;
    }
    return hits / boundaries;
  }));
}

std::string to_string(Pi1Status status) {
  switch (status) {
    case Pi1Status::kTrivial:
      return "trivial";
    case Pi1Status::kAbelianizationTrivial:
      return "abelianization_trivial";
    case Pi1Status::kNontrivial:
      return "nontrivial";
  }
  return "unknown";
}

Pi1Presentation pi1_presentation(const CW2Complex& x) {
  // Breadth-first spanning tree from the lexicographically first 0-cell.
  const auto& vertices = x.zero_cells();
  const std::size_t root =
      static_cast<std::size_t>(std::min_element(vertices.begin(), vertices.end()) - vertices.begin());
  std::vector<bool> reached(vertices.size(), false);
  std::vector<bool> in_tree(x.count(1), false);
  std::deque<std::size_t> queue{root};
  reached[root] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < x.count(1); ++j) {
      const OneCell& e = x.one_cells()[j];
      const std::size_t s = *x.zero_cell_index(e.source);
      const std::size_t t = *x.zero_cell_index(e.target);
      std::size_t other;
      if (s == v && !reached[t]) {
        other = t;
      } else if (t == v && !reached[s]) {
        other = s;
      } else {
        continue;
      }
      reached[other] = true;
      in_tree[j] = true;
      queue.push_back(other);
    }
  }

  Pi1Presentation out;
  std::map<std::string, std::size_t> generator_index;
  for (std::size_t j = 0; j < x.count(1); ++j) {
    if (in_tree[j]) continue;
    generator_index[x.one_cells()[j].name] = out.generators.size();
    out.generators.push_back(x.one_cells()[j].name);
  }

  std::vector<Word> expanded;
  IntMatrix relation_matrix(out.generators.size(), x.count(2));
  for (std::size_t k = 0; k < x.count(2); ++k) {
    std::vector<WordLetter> relator;
    Word letters;
    for (const WordLetter& l : x.two_cells()[k].word) {
      auto it = generator_index.find(l.cell);
      if (it == generator_index.end()) continue;
      relation_matrix(it->second, k) += l.exponent;
      if (!relator.empty() && relator.back().cell == l.cell) {
        relator.back().exponent += l.exponent;
        if (relator.back().exponent == 0) relator.pop_back();
      } else {
        relator.push_back(l);
      }
      const int sign = l.exponent > 0 ? 1 : -1;
      for (std::int64_t i = 0; i < (l.exponent > 0 ? l.exponent : -l.exponent); ++i) {
        letters.emplace_back(it->second, sign);
      }
    }
    out.relators.push_back(std::move(relator));
    expanded.push_back(std::move(letters));
  }

  const SmithDecomposition snf = smith_normal_form(relation_matrix);
  std::vector<Integer> torsion;
  for (std::size_t i = 0; i < snf.rank; ++i) {
    if (snf.s(i, i) != 1) torsion.push_back(snf.s(i, i));
  }
  out.abelianization_torsion = FinAbGroup(std::move(torsion));
  out.abelianization_free_rank = out.generators.size() - snf.rank;
  out.abelianization_trivial = out.abelianization_free_rank == 0 && out.abelianization_torsion.is_trivial();

  if (collapses_to_trivial(out.generators.size(), std::move(expanded))) {
    out.status = Pi1Status::kTrivial;
  } else if (out.abelianization_trivial) {
    out.status = Pi1Status::kAbelianizationTrivial;
  } else {
    out.status = Pi1Status::kNontrivial;
  }
  return out;
}

}  // namespace torsionk
