#pragma once

// JSON forms of the library's values:
//   Steenrod element   {"terms": [[5], [4,1]]}
//   presentation       {"generators": [{"name":"a","degree":1,"trunc":3}], "dim": 2}
//   class element      [[2,0], [0,2]]            (exponent vectors)
//   SW vector          {"dimension":4, "numbers":[{"partition":[4],"value":1}, ...]}
//   classification     {"dimension":4, "monomials":[[2,2]]}

#include "steencob/charclass.hpp"
#include "steencob/cobordism.hpp"
#include "steencob/steenrod.hpp"

#include <json.hpp>

namespace steencob {

using json = nlohmann::json;

json to_json(const SteenrodElement& e);
SteenrodElement steenrod_from_json(const json& j);

json to_json(const AlgebraPresentation& ring);
AlgebraPresentation presentation_from_json(const json& j);

json to_json(const ClassElement& x);
ClassElement class_from_json(const json& j, const AlgebraPresentation& ring);

// One array per generator: [Sq^0 g, Sq^1 g, ..., Sq^{deg g} g].
json to_json(const SqRuleSet& rules);
SqRuleSet rules_from_json(const json& j, const AlgebraPresentation& ring);

// {"label", "presentation", "rules", "euler", "dimension", "fundamental"}
json to_json(const ConnectedModel& m);
// Imports a user-supplied model; the Poincare duality check applies.
ConnectedModel connected_from_json(const json& j);

// Array indexed by degree, each entry a class element.
json to_json(const TotalClass& t);

json to_json(const SWVector& v);
json to_json(const ClassExpression& e);

}  // namespace steencob
