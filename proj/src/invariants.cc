#include "torsionk/invariants.h"

#include <sstream>
#include <stdexcept>

namespace torsionk {
namespace {

void require_modulus(const Integer& d) {
  if (d < 2) throw std::invalid_argument("d must be at least 2");
}

void require_multiplier(const Integer& m) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
}

HomotopyGroupResult exact(FinAbGroup g) {
  HomotopyGroupResult out;
  out.order = g.order();
  out.group = std::move(g);
  return out;
}

HomotopyGroupResult cyclic(const Integer& k) { return exact(k == 1 ? FinAbGroup() : FinAbGroup({k})); }

[[noreturn]] void unsupported(const SpectrumId& s, long long r) {
  throw std::out_of_range("degree " + std::to_string(r) + " is not supported for " + s.to_string());
}

std::string join(const std::vector<Integer>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  return out.str();
}

}  // namespace

SpectrumId SpectrumId::kmud(const Integer& d) {
  require_modulus(d);
  return {Kind::kKMuD, d, 1};
}

SpectrumId SpectrumId::cdm(const Integer& d, const Integer& m) {
  require_modulus(d);
  require_multiplier(m);
  return {Kind::kCdm, d, m};
}

SpectrumId SpectrumId::kosym() { return {Kind::kKoSym, 2, 1}; }

SpectrumId SpectrumId::creal(const Integer& m) {
  require_multiplier(m);
  return {Kind::kCReal, 2, m};
}

std::string SpectrumId::to_string() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::kKMuD:
      out << "kmu_" << d;
      break;
    case Kind::kCdm:
      out << "C(" << d << "," << m << ")";
      break;
    case Kind::kKoSym:
      out << "ko_sym";
      break;
    case Kind::kCReal:
      out << "C_R(2," << m << ")";
      break;
  }
  return out.str();
}

std::string HomotopyGroupResult::to_string() const {
  if (exact) return group.to_string();
  std::ostringstream out;
  out << "order " << order << ", extension of Z/" << subquotient_factors.at(1) << " by Z/" << subquotient_factors.at(0)
      << " unresolved: ";
  for (std::size_t i = 0; i < candidates.size(); ++i) out << (i ? " or " : "") << candidates[i].to_string();
  return out.str();
}

HomotopyGroupResult homotopy_group(const SpectrumId& s, long long r) {
  switch (s.kind) {
    case SpectrumId::Kind::kKMuD:
      if (r < 0 || r > 2) unsupported(s, r);
      return cyclic(r == 1 ? s.d : Integer(1));
    case SpectrumId::Kind::kCdm: {
      if (r < 0 || r > 2) unsupported(s, r);
      if (r == 0) return exact(FinAbGroup());
      IntMatrix times_m(1, 1);
      times_m(0, 0) = s.m;
      // pi_1 = coker(x m), pi_2 = ker(x m) on Z/d
      return exact(r == 1 ? quotient_group(1, s.d, times_m) : kernel_mod(times_m, s.d));
    }
    case SpectrumId::Kind::kKoSym: {
      if (r < 0) unsupported(s, r);
      const long long k = r / 8;
      switch (r % 8) {
        case 1:
        case 2:
          return cyclic(2);
        case 3:
          return cyclic(Integer(1) << (4 * k + 3));
        case 7:
          return cyclic(Integer(1) << (4 * k + 4));
        default:
          return cyclic(1);
      }
    }
    case SpectrumId::Kind::kCReal: {
      if (r != 1 && r != 2) unsupported(s, r);
      if (s.m % 2 != 0) return cyclic(1);
      if (r == 1) return cyclic(2);
      HomotopyGroupResult out;
      out.exact = false;
      out.order = 4;
      out.subquotient_factors = {2, 2};
      out.candidates = {FinAbGroup({4}), FinAbGroup({2, 2})};
      return out;
    }
  }
  unsupported(s, r);
}

std::string CdmGroup::to_string() const {
  std::ostringstream out;
  if (total) {
    out << total->to_string();
  } else {
    out << "extension of H^1 piece " << h1_piece.to_string() << " by H^2 piece " << h2_piece.to_string()
        << " (unresolved), order " << order;
  }
  return out.str();
}

CdmGroup cdm_group(const CW2Complex& x, const Integer& d, const Integer& m) {
  require_modulus(d);
  require_multiplier(m);
  CdmGroup out;
  out.g = gcd(d, m);
  out.h1_piece = cohomology(x, out.g, 1);
  out.h2_piece = cohomology(x, out.g, 2);
  out.order = out.h1_piece.order() * out.h2_piece.order();
  if (out.g == 1) {
    out.total = FinAbGroup();
  } else if (m % d == 0) {
    out.total = direct_sum(out.h1_piece, out.h2_piece);
  }
  return out;
}

std::string CdmClass::notation() const { return "(" + join(h1.coordinates) + ";" + join(h2.coordinates) + ")"; }

CdmClass class_of_solution(const CW2Complex& x, const LinearConstraintSystem& lcs, const OperatorSolution& t,
                           const Integer& m) {
  if (m != t.dimension()) {
    throw std::invalid_argument("m = " + m.str() + " but the solution has dimension " + std::to_string(t.dimension()));
  }
  const VerificationReport report = verify_solution(lcs, t);
  if (!report.pass()) throw UnverifiedSolution("operator solution fails verification");
  const RealizationMap cells = check_realization(x, lcs);
  const Integer& d = lcs.modulus();
  const Integer g = gcd(d, m);
  const ZdVector c = det_cochain(t, lcs);
  return CdmClass{d, m, g, class_of(x, g, 1, cotorsion_projection(d, m).apply(cells.one_cochain(c))),
                  class_of(x, d, 2, cells.two_cochain(lcs.rhs()))};
}

std::vector<Certificate> certificates(const CW2Complex& x, const LinearConstraintSystem& lcs, const Integer& m) {
  require_multiplier(m);
  const Integer& d = lcs.modulus();
  const Integer g = gcd(d, m);

  Premise realizes{"X realizes the hypergraph of the system (cellular boundary agrees mod d)", true, true};
  std::optional<RealizationMap> cells;
  try {
    cells = check_realization(x, lcs);
  } catch (const std::invalid_argument&) {
    realizes.holds = false;
  }

  std::vector<Certificate> candidates;
  candidates.push_back({"a",
                        "any operator solution over U(" + m.str() + ") implies a scalar solution",
                        {realizes, {"H^2(X, Z/" + g.str() + ") = 0", cohomology(x, g, 2).is_trivial(), true}}});
  candidates.push_back({"b",
                        "C(" + d.str() + "," + m.str() + ")(X) = 0, so certificate (a) applies",
                        {realizes, {"gcd(d, m) = 1", g == 1, true}}});
  Premise tau_nonzero{"[tau] != 0 in H^2(X, Z/" + d.str() + ")", false, true};
  if (cells) tau_nonzero.holds = !class_of(x, d, 2, cells->two_cochain(lcs.rhs())).is_zero();
  candidates.push_back(
      {"c",
       "no operator solution over U(m') exists for any m' >= 1",
       {realizes,
        {"pi_1(X) presentation collapses to the trivial group", pi1_presentation(x).status == Pi1Status::kTrivial, true},
        tau_nonzero}});

  std::vector<Certificate> out;
  for (auto& c : candidates) {
    bool all = true;
    for (const auto& p : c.premises) all = all && p.holds;
    if (all) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace torsionk
