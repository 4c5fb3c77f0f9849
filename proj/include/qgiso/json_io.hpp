#pragma once

#include <json.hpp>

#include "qgiso/graph.hpp"
#include "qgiso/mfunction.hpp"
#include "qgiso/poly.hpp"
#include "qgiso/secular.hpp"
#include "qgiso/spectrum.hpp"

namespace qg {

using Json = nlohmann::ordered_json;

/// Integers that fit in int64 become JSON numbers, larger ones decimal strings.
Json to_json(const Integer& x);
Json to_json(const IntPoly& p);
/// "p/q" or "p".
Json to_json(const Rational& q);
Json to_json(const MetricGraph& g);
/// {"unit", "denom", "coeffs"}
Json to_json(const SecularPolynomial& p);
Json to_json(const SpectrumReport& r);
/// {"vertex", "unit", "q": {"i,j": c}, "discarded": [...]}, i the z-power, j the w-power.
Json to_json(const MSignature& s);
Json to_json(const MRational& m);

}  // namespace qg
