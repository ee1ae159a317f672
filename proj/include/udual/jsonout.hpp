#pragma once

#include <json.hpp>

#include "udual/bruhat.hpp"
#include "udual/charform.hpp"
#include "udual/decompose.hpp"
#include "udual/jl.hpp"
#include "udual/ring.hpp"
#include "udual/unitary.hpp"

// Machine output. Rationals are exact strings, arrays follow the canonical
// orders, so documents are stable across runs.

namespace udual {

nlohmann::json toJson(const Rational& q);
nlohmann::json toJson(const ExactComplex& z);
nlohmann::json toJson(const Dparam& p);
nlohmann::json toJson(const LanglandsDatum& a);
nlohmann::json toJson(const RingElem& r);
nlohmann::json toJson(const UnitaryFactor& f);
nlohmann::json toJson(const UnitaryRep& r, bool alphaInNuUnits = false);
nlohmann::json toJson(const FormalPoly& p);
nlohmann::json toJson(const IdentityReport& rep);
nlohmann::json toJson(const Decomposition& d);
nlohmann::json toJson(const ReducibilityReport& r);
nlohmann::json toJson(const CartanChar& c);
nlohmann::json toJson(const SignedUnitary& s);
nlohmann::json toJson(const PrimalityReport& r);

}  // namespace udual
