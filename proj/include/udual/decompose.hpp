#pragma once

#include <optional>
#include <string>
#include <vector>

#include "udual/ring.hpp"

namespace udual {

// The label of the unique irreducible quotient of a standard module; labels
// and data are in canonical bijection, so equality is datum equality.
struct IrrLabel {
    LanglandsDatum datum;
    bool operator==(const IrrLabel& o) const { return datum == o.datum; }
};

// Reducibility of a two-factor standard module lambda(p1, p2). Reducible
// results carry the full composition series in the mixed form
//   lambda((p1,p2)) = Lg((p1,p2)) + sum of the listed lambda-monomials,
// and are produced only for the configurations whose series the theory pins
// down explicitly; everything else is an honest Unknown.
struct Decomposition {
    enum class Verdict { Irreducible, Reducible, Unknown };
    Verdict verdict = Verdict::Unknown;
    std::optional<IrrLabel> quotient;          // Lg((p1,p2)); absent when undecided
    std::vector<LanglandsDatum> constituents;  // non-Lg lambda terms, multiplicity 1 each
    std::string certificate;                   // why the verdict is known
};

Decomposition pairDecompose(const Dparam& p1, const Dparam& p2);

// the lambda-expansion of Lg((p1,p2)) implied by a Reducible decomposition
RingElem lgExpansion(const Dparam& p1, const Dparam& p2, const Decomposition& d);

}  // namespace udual
