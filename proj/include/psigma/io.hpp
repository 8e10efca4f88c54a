#pragma once

#include "psigma/hypertree.hpp"
#include "psigma/integer_matrix.hpp"
#include "psigma/ring.hpp"
#include "psigma/spectral.hpp"
#include "psigma/stabilizer.hpp"

#include "json.hpp"

#include <string>

namespace psigma {

using Json = nlohmann::ordered_json;

/// {"n": 4, "edges": [[1,2],[2,3,4]]}
Json to_json(const Hypertree& t);
/// Validates; throws HypertreeError or std::invalid_argument on malformed input.
Hypertree hypertree_from_json(const Json& j);

/// {"I": [4,5], "j": 1}
Json to_json(const Generator& g);
Generator generator_from_json(const Json& j);

/// {"rows": r, "cols": c, "entries": [[i, j, "v"], ...]}
Json to_json(const IntegerMatrix& m);
IntegerMatrix matrix_from_json(const Json& j);

/// {"text": "...", "terms": [{"coefficient": "1", "monomial": [[2,1],[1,3]]}, ...]}
Json to_json(const RingElement& x);

/// {"n": n, "entries": [{"p":..,"q":..,"rank":..,"torsion":[...]}]}; only nonzero groups.
Json e1_to_json(const E1Page& page);
Json to_json(const E2Page& page);

/// Grid with q growing upwards and p to the right, as E-pages are usually drawn.
/// Cells hold ranks; torsion is appended as "+Z/d".
std::string e1_grid(const E1Page& page);
std::string e2_grid(const E2Page& page);

} // namespace psigma
