#include "cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "torsionk/fixtures.h"
#include "torsionk/invariants.h"
#include "torsionk/io.h"

namespace torsionk::cli {
namespace {

constexpr std::string_view kBuiltinPrefix = "builtin:";
constexpr std::int64_t kClassicalLimit = 10'000'000;

struct Outcome {
  int exit = kExitOk;
  Json result;
  std::string summary;
};

Json read_document(const std::string& source) {
  std::ifstream in(source);
  if (!in) throw ParseError("cannot open '" + source + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_json(text.str());
  } catch (const ParseError& e) {
    throw ParseError(source + ": " + e.what());
  }
}

Fixture fixture_named(const std::string& name) {
  try {
    return builtin_fixture(name);
  } catch (const std::out_of_range&) {
    std::string known;
    for (const auto& n : builtin_fixture_names()) known += (known.empty() ? "" : ", ") + n;
    throw ParseError("unknown builtin '" + name + "' (known: " + known + ")");
  }
}

std::optional<Fixture> builtin_source(const std::string& source) {
  if (!source.starts_with(kBuiltinPrefix)) return std::nullopt;
  return fixture_named(source.substr(kBuiltinPrefix.size()));
}

LinearConstraintSystem load_lcs(const std::string& source) {
  if (auto f = builtin_source(source)) return f->lcs;
  return lcs_from_json(read_document(source));
}

CW2Complex load_complex(const std::string& source) {
  if (auto f = builtin_source(source)) return f->torus;
  return complex_from_json(read_document(source));
}

OperatorSolution load_solution(const std::string& source) {
  if (auto f = builtin_source(source)) return f->solution;
  return solution_from_json(read_document(source));
}

std::string join(const std::vector<Integer>& xs, const char* sep = ",") {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? sep : "") << xs[i];
  return out.str();
}

Json group_json(const FinAbGroup& g) {
  return Json{{"invariant_factors", integer_json(g.invariant_factors())},
              {"order", integer_json(g.order())},
              {"name", g.to_string()}};
}

Json class_json(const CohomologyClass& c) {
  return Json{{"degree", c.degree},
              {"modulus", integer_json(c.modulus)},
              {"group", group_json(c.group)},
              {"coordinates", integer_json(c.coordinates)},
              {"representative", integer_json(c.representative.coords())},
              {"zero", c.is_zero()}};
}

Outcome analyze(const std::string& source) {
  const LinearConstraintSystem lcs = load_lcs(source);
  Outcome o;
  Json& r = o.result;
  r["d"] = integer_json(lcs.modulus());
  r["variables"] = lcs.variables();
  r["num_constraints"] = lcs.num_constraints();

  const auto witness = scalar_solution(lcs);
  r["contextual"] = !witness.has_value();
  r["scalar_solution"] = witness ? integer_json(witness->coords()) : Json(nullptr);

  std::ostringstream s;
  s << (witness ? "scalar solution (" + join(witness->coords()) + ")" : std::string("contextual: no scalar solution"));

  const Integer space = boost::multiprecision::pow(lcs.modulus(), static_cast<unsigned>(lcs.num_variables()));
  Json cv{{"search_space", integer_json(space)}, {"limit", kClassicalLimit}};
  if (space <= kClassicalLimit) {
    const ClassicalValue v = classical_value(lcs, kClassicalLimit);
    cv["computed"] = true;
    cv["value"] = v.to_string();
    cv["satisfied"] = v.satisfied;
    cv["constraints"] = v.constraints;
    cv["maximizer"] = integer_json(v.maximizer.coords());
    s << "; classical value " << v.to_string() << " at (" << join(v.maximizer.coords()) << ")";
  } else {
    cv["computed"] = false;
    s << "; classical value not computed (search space " << space << " > " << kClassicalLimit << ")";
  }
  r["classical_value"] = cv;

  const CW2Complex x = canonical_realization(hypergraph_of(lcs).hypergraph, lcs.modulus());
  const RealizationMap cells = check_realization(x, lcs);
  const CohomologyClass tau = class_of(x, lcs.modulus(), 2, cells.two_cochain(lcs.rhs()));
  Json t = class_json(tau);
  t["realization"] = "canonical";
  r["tau_class"] = t;
  s << "; [tau] = (" << join(tau.coordinates) << ") in " << tau.group.to_string() << " on the canonical realization";
  o.summary = s.str();
  return o;
}

Json target_json(const OperatorSolution& t) {
  Json j{{"dimension", t.dimension()}};
  if (t.kind() == OperatorSolution::Kind::kPauli) {
    j["kind"] = "pauli";
    j["p"] = t.p();
    j["n"] = t.n();
  } else {
    j["kind"] = "unitary";
  }
  return j;
}

Json report_json(const VerificationReport& rep) {
  Json torsion = Json::array();
  for (const auto& v : rep.torsion) torsion.push_back({{"variable", v.variable}, {"pass", v.pass}});
  Json commutation = Json::array();
  for (const auto& v : rep.commutation) {
    commutation.push_back({{"pair", Json::array({v.first, v.second})}, {"pass", v.pass}});
  }
  Json constraints = Json::array();
  for (const auto& v : rep.constraints) {
    Json row{{"constraint", v.constraint}, {"pass", v.pass}};
    if (v.product) {
      row["product"] = to_json(*v.product);
    } else {
      row["residual"] = v.residual;
    }
    constraints.push_back(std::move(row));
  }
  return Json{{"pass", rep.pass()},
              {"torsion_pass", rep.torsion_pass()},
              {"commutation_pass", rep.commutation_pass()},
              {"constraints_pass", rep.constraints_pass()},
              {"torsion", torsion},
              {"commutation", commutation},
              {"constraints", constraints},
              {"failing_constraints", rep.failing_constraints()}};
}

std::string failing_summary(const VerificationReport& rep) {
  std::ostringstream s;
  s << "verification failed:";
  if (!rep.torsion_pass()) s << " torsion";
  if (!rep.commutation_pass()) s << " commutation";
  const auto bad = rep.failing_constraints();
  if (!bad.empty()) {
    s << " constraints";
    for (const auto& c : bad) s << " " << c;
  }
  return s.str();
}

Outcome verify(const std::string& lcs_source, const std::string& solution_source) {
  const LinearConstraintSystem lcs = load_lcs(lcs_source);
  const OperatorSolution t = load_solution(solution_source);
  const VerificationReport rep = verify_solution(lcs, t);
  Outcome o;
  o.result = report_json(rep);
  o.result["target"] = target_json(t);
  o.exit = rep.pass() ? kExitOk : kExitFailure;
  o.summary = rep.pass() ? "operator solution verified (" + std::to_string(rep.constraints.size()) + " constraints)"
                         : failing_summary(rep);
  return o;
}

Outcome cohomology_cmd(const std::string& source, std::int64_t k, int degree) {
  const CW2Complex x = load_complex(source);
  const FinAbGroup g = cohomology(x, k, degree);
  Outcome o;
  o.result = group_json(g);
  o.result["coefficient"] = k;
  o.result["degree"] = degree;
  std::vector<std::string> cells;
  if (degree == 1) {
    for (const auto& e : x.one_cells()) cells.push_back(e.name);
  } else {
    for (const auto& f : x.two_cells()) cells.push_back(f.name);
  }
  o.result["cells"] = cells;
  Json generators = Json::array();
  for (std::size_t i = 0; i < g.num_generators(); ++i) {
    std::vector<Integer> e(g.num_generators(), 0);
    e[i] = 1;
    generators.push_back(integer_json(g.element(e).coords()));
  }
  o.result["generators"] = generators;
  o.summary = "H^" + std::to_string(degree) + "(X, Z/" + std::to_string(k) + ") = " + g.to_string() +
              ", invariant factors [" + join(g.invariant_factors()) + "]";
  return o;
}

Outcome class_cmd(const std::string& lcs_source, const std::string& solution_source,
                  const std::optional<std::string>& realization, const std::optional<std::int64_t>& m_opt) {
  const LinearConstraintSystem lcs = load_lcs(lcs_source);
  const OperatorSolution t = load_solution(solution_source);
  const CW2Complex x = realization ? load_complex(*realization)
                                   : canonical_realization(hypergraph_of(lcs).hypergraph, lcs.modulus());
  const Integer m = m_opt ? Integer(*m_opt) : Integer(t.dimension());
  if (m != t.dimension()) {
    throw IncompatibleInput("--m " + m.str() + " does not match the solution dimension " +
                            std::to_string(t.dimension()));
  }
  Outcome o;
  const VerificationReport rep = verify_solution(lcs, t);
  if (!rep.pass()) {
    o.exit = kExitFailure;
    o.result = Json{{"verified", false}, {"verification", report_json(rep)}};
    o.summary = "no class: " + failing_summary(rep);
    return o;
  }
  const CdmClass cls = class_of_solution(x, lcs, t, m);
  o.result = Json{{"verified", true},
                  {"realization", realization ? "file" : "canonical"},
                  {"d", integer_json(cls.d)},
                  {"m", integer_json(cls.m)},
                  {"g", integer_json(cls.g)},
                  {"notation", cls.notation()},
                  {"h1", class_json(cls.h1)},
                  {"h2", class_json(cls.h2)},
                  {"h2_zero", cls.h2.is_zero()}};
  o.summary = "class " + cls.notation() + " in C(" + cls.d.str() + "," + cls.m.str() + ")(X); h2 " +
              (cls.h2.is_zero() ? "= 0" : "!= 0");
  return o;
}

Outcome homotopy_cmd(const std::string& spectrum, const std::optional<std::int64_t>& d,
                     const std::optional<std::int64_t>& m, long long r) {
  auto need = [&](const std::optional<std::int64_t>& v, const char* flag) {
    if (!v) throw CLI::RequiredError(std::string("--") + flag + " (needed by --spectrum " + spectrum + ")");
    return Integer(*v);
  };
  SpectrumId s;
  try {
    if (spectrum == "kmud") {
      s = SpectrumId::kmud(need(d, "d"));
    } else if (spectrum == "cdm") {
      s = SpectrumId::cdm(need(d, "d"), need(m, "m"));
    } else if (spectrum == "kosym") {
      s = SpectrumId::kosym();
    } else {
      s = SpectrumId::creal(need(m, "m"));
    }
  } catch (const std::invalid_argument& e) {
    throw IncompatibleInput(e.what());
  }
  HomotopyGroupResult h;
  try {
    h = homotopy_group(s, r);
  } catch (const std::out_of_range& e) {
    throw IncompatibleInput(e.what());
  }
  Outcome o;
  o.result = Json{{"spectrum", s.to_string()}, {"degree", r}, {"exact", h.exact}, {"order", integer_json(h.order)}};
  if (h.exact) {
    o.result["group"] = group_json(h.group);
  } else {
    o.result["subquotient_factors"] = integer_json(h.subquotient_factors);
    Json candidates = Json::array();
    for (const auto& c : h.candidates) candidates.push_back(group_json(c));
    o.result["candidates"] = candidates;
  }
  o.summary = "pi_" + std::to_string(r) + " " + s.to_string() + " = " + h.to_string();
  return o;
}

/// Returns the emitted documents keyed by kind.
std::map<std::string, Json> builtin_documents(const Fixture& f, const std::string& emit) {
  std::map<std::string, Json> docs;
  if (emit == "lcs" || emit == "all") docs["lcs"] = to_json(f.lcs);
  if (emit == "solution" || emit == "all") docs["solution"] = to_json(f.solution);
  if (emit == "realization" || emit == "all") docs["realization"] = to_json(f.torus);
  return docs;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw ParseError("write failed for '" + path.string() + "'");
}

Json report(const std::vector<std::string>& args, const std::string& command, const Outcome& o) {
  return Json{{"torsionk_schema", kSchemaVersion},
              {"command", {{"name", command}, {"args", args}}},
              {"result", o.result},
              {"summary", o.summary},
              {"exit_status", o.exit}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear constraint systems over Z/d: solvability, operator solutions and cohomological invariants",
               "torsionk"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Report format: json or text (the human summary)")
      ->check(CLI::IsMember({"json", "text"}));

  std::function<Outcome()> action;
  std::string command;
  // builtin writes raw documents to stdout when no --out-dir is given
  std::optional<std::string> raw_output;

  auto* an = app.add_subcommand("analyze", "Scalar solvability, classical value and the class of tau");
  std::string lcs_file;
  an->add_option("lcs", lcs_file, "LCS JSON file or builtin:<name>")->required();
  an->callback([&] { command = "analyze"; action = [&] { return analyze(lcs_file); }; });

  auto* ve = app.add_subcommand("verify", "Check an operator solution exactly");
  std::string solution_file;
  ve->add_option("lcs", lcs_file, "LCS JSON file or builtin:<name>")->required();
  ve->add_option("--solution", solution_file, "Solution JSON file or builtin:<name>")->required();
  ve->callback([&] { command = "verify"; action = [&] { return verify(lcs_file, solution_file); }; });

  auto* co = app.add_subcommand("cohomology", "Cellular cohomology with Z/k coefficients");
  std::string cw_file;
  std::int64_t coeff = 2;
  int degree = 1;
  co->add_option("cw", cw_file, "CW complex JSON file or builtin:<name>")->required();
  co->add_option("--coeff", coeff, "Coefficient modulus k >= 2")->required()->check(CLI::Range(std::int64_t{2}, INT64_MAX));
  co->add_option("--deg", degree, "Degree, 1 or 2")->required()->check(CLI::IsMember({1, 2}));
  co->callback([&] { command = "cohomology"; action = [&] { return cohomology_cmd(cw_file, coeff, degree); }; });

  auto* cl = app.add_subcommand("class", "The C(d,m) class of a verified operator solution");
  std::optional<std::string> realization;
  std::optional<std::int64_t> m_opt;
  cl->add_option("lcs", lcs_file, "LCS JSON file or builtin:<name>")->required();
  cl->add_option("--solution", solution_file, "Solution JSON file or builtin:<name>")->required();
  cl->add_option("--realization", realization, "CW complex realizing the system (default: canonical)");
  cl->add_option("--m", m_opt, "Matrix size m (default: the solution dimension)");
  cl->callback([&] {
    command = "class";
    action = [&] { return class_cmd(lcs_file, solution_file, realization, m_opt); };
  });

  auto* ho = app.add_subcommand("homotopy", "Homotopy groups of the supported spectra");
  std::string spectrum;
  std::optional<std::int64_t> d_opt;
  long long r = 0;
  ho->add_option("--spectrum", spectrum, "kmud, cdm, kosym or creal")
      ->required()
      ->check(CLI::IsMember({"kmud", "cdm", "kosym", "creal"}));
  ho->add_option("--d", d_opt, "Modulus d");
  ho->add_option("--m", m_opt, "Multiplier m");
  ho->add_option("--r", r, "Degree")->required();
  ho->callback([&] { command = "homotopy"; action = [&] { return homotopy_cmd(spectrum, d_opt, m_opt, r); }; });

  auto* bu = app.add_subcommand("builtin", "Emit a shipped Mermin-type fixture");
  std::string name;
  std::string emit = "all";
  std::optional<std::string> out_dir;
  bu->add_option("name", name, "mermin-square, mermin-star or mermin-refined")->required();
  bu->add_option("--emit", emit, "lcs, solution, realization or all")
      ->check(CLI::IsMember({"lcs", "solution", "realization", "all"}));
  bu->add_option("--out-dir", out_dir, "Write <name>.<kind>.json files here instead of stdout");
  bu->callback([&] {
    command = "builtin";
    action = [&] {
      const Fixture f = fixture_named(name);
      const auto docs = builtin_documents(f, emit);
      Outcome o;
      if (!out_dir) {
        Json doc = docs.size() == 1 ? docs.begin()->second : Json(docs);
        doc["torsionk_schema"] = kSchemaVersion;
        raw_output = dump_canonical(doc);
        return o;
      }
      std::filesystem::create_directories(*out_dir);
      Json files = Json::object();
      for (const auto& [kind, doc] : docs) {
        const auto path = std::filesystem::path(*out_dir) / (f.name + "." + kind + ".json");
        write_file(path, dump_canonical(doc));
        files[kind] = path.string();
      }
      o.result = Json{{"fixture", f.name}, {"files", files}};
      o.summary = "wrote " + std::to_string(docs.size()) + " file(s) for " + f.name;
      return o;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // prints help to `out`, or the error and a usage hint to `err`
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Outcome o = action();
    if (raw_output) {
      out << *raw_output;
    } else if (format == "text") {
      out << o.summary << "\n";
    } else {
      out << dump_canonical(report(args, command, o));
    }
    return o.exit;
  } catch (const ParseError& e) {
    err << "torsionk: error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    err << "torsionk: usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IncompatibleInput& e) {
    err << "torsionk: unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::invalid_argument& e) {
    err << "torsionk: unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::length_error& e) {
    err << "torsionk: unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::exception& e) {
    err << "torsionk: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace torsionk::cli
