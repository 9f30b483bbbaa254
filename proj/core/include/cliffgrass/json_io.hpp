#pragma once

#include <json.hpp>

#include "cliffgrass/cohomology.hpp"
#include "cliffgrass/even_clifford.hpp"
#include "cliffgrass/gauss_complex.hpp"
#include "cliffgrass/matrix.hpp"
#include "cliffgrass/octonion.hpp"

namespace cliffgrass::io {

/// Insertion-ordered JSON keeps emitted reports in schema order and makes
/// output byte-deterministic.
using Json = nlohmann::ordered_json;

/// {"rows": R, "cols": C, "entries": ["p/q", ...]} row-major. Round trips
/// bit exactly.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// Entries as {"re": "p/q", "im": "p/q"}.
Json complex_matrix_to_json(const ComplexMatrix& m);

/// Eight "p/q" strings in the order (1, i, j, k, e, f, g, h).
Json octonion_to_json(const Octonion& o);
Octonion octonion_from_json(const Json& j);

/// {"kind": ..., "n": ..., "blocks": [["p/q", ...], ...]}.
Json model_to_json(const clifford::TangentModel& t);
clifford::TangentModel model_from_json(const Json& j);

/// [{"subset": [1, 2], "coeff": "p/q"}, ...] in canonical subset order.
Json element_to_json(const clifford::EvenCliffordElement& e);
clifford::EvenCliffordElement element_from_json(const Json& j, std::size_t rank);

/// {"<degree>": coefficient, ...} with numeric-order keys.
Json poincare_to_json(const cohomology::PoincarePolynomial& p);

}  // namespace cliffgrass::io
