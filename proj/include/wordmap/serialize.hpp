#pragma once

#include "json.hpp"

#include "wordmap/certify.hpp"
#include "wordmap/witness.hpp"

namespace wordmap {

using Json = nlohmann::ordered_json;

// Rationals are strings "p/q" (or "p"); malformed input throws Error(Syntax).
Json to_json(const Rat& v);
Rat rat_from_json(const Json& j);

/// [{"el": e_lambda, "em": e_mu, "c": "p/q"}, ...] in increasing exponent order.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

/// Array of coefficients, constant term first.
Json to_json(const TPoly& p);
TPoly tpoly_from_json(const Json& j);
Json to_json(const QPoly& p);
QPoly qpoly_from_json(const Json& j);

/// {"alpha": TPoly, "beta": TPoly}
Json to_json(const AssocPolys& ap);
AssocPolys assoc_from_json(const Json& j);

Json to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

Json to_json(const GaussRat& z);
Json to_json(const GMat& m);
Json to_json(const Witness& w);

}  // namespace wordmap
