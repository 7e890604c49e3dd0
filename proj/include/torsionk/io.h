#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "torsionk/complex.h"
#include "torsionk/lcs.h"
#include "torsionk/operators.h"

namespace torsionk {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Malformed or schema-violating input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input whose parameters do not fit together, e.g. an operator of
/// the wrong dimension for its target or a non-prime Pauli modulus.
class IncompatibleInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Schema: {"d", "variables", "constraints": [{"coeffs": {var: int}, "rhs", "name"?}]}.
/// Residues must already lie in [0, d); zero coefficients are rejected.
LinearConstraintSystem lcs_from_json(const Json& j);
Json to_json(const LinearConstraintSystem& lcs);

/// Schema: {"zero_cells", "one_cells": [{"name", "source", "target"}],
/// "two_cells": [{"name", "word": [[cell, exponent], ...]}]}.
CW2Complex complex_from_json(const Json& j);
Json to_json(const CW2Complex& x);

/// Shape errors raise ParseError, operator construction errors IncompatibleInput.
/// Schema: {"target": {"kind": "pauli", "p", "n"} | {"kind": "unitary", "m"},
/// "assignment": {var: {"phase", "x", "z"} | {"matrix": [[[re, im], ...], ...]}}}.
OperatorSolution solution_from_json(const Json& j);
Json to_json(const OperatorSolution& t);

Json to_json(const PauliElement& a);

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json integer_json(const Integer& a);
Json integer_json(const std::vector<Integer>& xs);

/// Parses text, throwing ParseError on malformed JSON.
Json parse_json(const std::string& text);

/// Canonical rendering: sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const Json& j);

}  // namespace torsionk
