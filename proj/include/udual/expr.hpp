#pragma once

#include <stdexcept>
#include <string>

#include "udual/bruhat.hpp"
#include "udual/ring.hpp"
#include "udual/unitary.hpp"

namespace udual {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// twist every monomial / datum element by nu^s
LanglandsDatum twistDatum(const LanglandsDatum& a, const ExactComplex& s);
RingElem twistRing(const RingElem& r, const ExactComplex& s);

ExactComplex parseComplex(const std::string& text);

Dparam parseDparam(const std::string& text);

// a product of (possibly nu-twisted) parameter atoms, read as a Langlands
// datum
LanglandsDatum parseDatumProduct(const std::string& text);

// ringexpr := ["-"] product { ("+"|"-") product }
// product  := [int] atom { "x" atom }
// atom     := dparam | u(...) | pi(...) | "nu^" num "*" atom
// u/pi atoms denote the lambda-expansion of the corresponding class and are
// only accepted where that expansion exists (never at rank-1 real or
// wall-adjacent quaternionic bases).
RingElem parseRingExpr(const std::string& text, bool alphaInNuUnits = false);

// a product of u/pi atoms (nu-twists allowed). strict demands a genuine
// unitary representation: centered bases and alpha in (0, 1/2).
UnitaryRep parseUnitaryProduct(const std::string& text, bool strict, bool alphaInNuUnits = false);

// "((3,1),(2,0))"
CartanChar parseCartanCharText(const std::string& text);

// canonical rendering; alphaInNuUnits converts complementary-series
// parameters from the internal nu_delta normalization on output
std::string printUnitary(const UnitaryRep& r, bool alphaInNuUnits = false);

}  // namespace udual
