#pragma once

#include <nlohmann/json.hpp>

#include "omn/element.hpp"
#include "omn/entropy.hpp"
#include "omn/group_actions.hpp"
#include "omn/int_matrix.hpp"
#include "omn/ktheory.hpp"
#include "omn/piecewise.hpp"
#include "omn/rieffel.hpp"
#include "omn/shift_rep.hpp"
#include "omn/solenoid.hpp"

namespace omn {

using Json = nlohmann::json;

/// Accepts "p/q", "p" or a JSON integer.
Rational rational_from_json(const Json& j);

/// Array of {"mu":[..],"k":..,"nu":[..],"re":"p/q","im":"p/q"}; "re" and "im" default to 1 and 0.
Json to_json(const Element& x);
Element element_from_json(const Json& j, const AlgebraParams& params);

/// A single term object; the coefficient is ignored.
Json to_json(const Monomial& mon);
Monomial monomial_from_json(const Json& j, const AlgebraParams& params);

/// {"breakpoints":["p/q",..],"pieces":[[coeffs ascending],..],"backend":"exact"|"numeric"}.
Json to_json(const PiecewiseFunction& f);
/// Requires backend "exact" (or absent).
PiecewiseFunction function_from_json(const Json& j);
/// Requires backend "numeric"; pieces are rational polynomials.
NumericFunction numeric_function_from_json(const Json& j);

Json to_json(const FGAbelianGroup& g);
Json to_json(const KGroups& k);
Json to_json(const IntMatrix& m);
Json to_json(const SymmetricFixedPointReport& r);
Json to_json(const GeneratorWord& w);
Json to_json(const WitnessReport& r);
Json to_json(const RelationReport& r);
Json to_json(const SolenoidPeriodicPoint& x);
Json to_json(const SolenoidRepReport& r);
Json to_json(const EntropyTable& t);
Json to_json(const ConditionReport& r);
Json to_json(const SquareReport& r);

}  // namespace omn
