#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qqkit/coefficient.hpp"
#include "qqkit/quiver.hpp"
#include "qqkit/ymonomial.hpp"

namespace qq {

// JSON documents. Readers reject unknown fields and malformed values with
// ValidationError; writers emit compact canonical output.

// {"q1": 2, "x(1,2)": 1}
std::string monomial_to_json(const Monomial& m);
Monomial monomial_from_json(std::string_view text);

// {"unit": {...}, "int": n, "den": d, "factors": [{"arg": {...}, "pow": e}],
//  "poly": [{"m": {...}, "c": "p/q"}]}; "den" and "poly" appear only when needed.
std::string coefficient_to_json(const Coefficient& c);
Coefficient coefficient_from_json(std::string_view text);

// {"name": ..., "nodes": [{"id": "1", "d": 2}], "edges": [{"from": "1", "to": "2", "mu": 0}]}
// where mu is an exponent of mu or a monomial object.
std::string quiver_to_json(const Quiver& q);
Quiver quiver_from_json(std::string_view text);
// Built-in name or inline JSON object.
Quiver resolve_quiver(std::string_view spec);

// {"terms": [{"ym": [{"node", "arg", "exp"}], "coeff": {...}, "depth": d, "qdeg": k}],
//  "edges": [{"from": i, "to": j, "label": {"node", "arg"}}]}
std::string character_to_json(const Character& ch, int indent = -1);
Character character_from_json(std::string_view text);

// {"terms": [{"ym": [...], "coeff": n}]}
std::string classical_to_json(const ClassicalCharacter& ch, int indent = -1);
ClassicalCharacter classical_from_json(std::string_view text);

// {"x(1,2)": "x*q1"} or {"x(1,2)": {"x": 1, "q1": 1}}
Substitution substitution_from_json(std::string_view text);
std::string substitution_to_json(const Substitution& s);

// {"1": 2, "2": 0}
std::vector<std::pair<std::string, int>> weights_from_json(std::string_view text);

// Exact structural identity, used for round-trip checks.
bool identical(const Character& a, const Character& b);

}  // namespace qq
