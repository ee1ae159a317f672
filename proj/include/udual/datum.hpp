#pragma once

#include <vector>

#include "udual/dparam.hpp"

namespace udual {

// A multiset over D: the parameter of a standard representation lambda(a)
// and, through Lg, of an irreducible. Elements are kept in canonical order so
// equality is multiset equality.
struct LanglandsDatum {
    Algebra alg = Algebra::Real;
    std::vector<Dparam> elems;  // sorted by the canonical Dparam order

    LanglandsDatum() = default;
    LanglandsDatum(Algebra a, std::vector<Dparam> es);

    bool empty() const { return elems.empty(); }
    size_t size() const { return elems.size(); }

    bool operator==(const LanglandsDatum& o) const { return alg == o.alg && elems == o.elems; }
    bool operator!=(const LanglandsDatum& o) const { return !(*this == o); }
    bool operator<(const LanglandsDatum& o) const;

    // multiset sum
    LanglandsDatum operator+(const LanglandsDatum& o) const;
};

int degree(const LanglandsDatum& a);

// the wall symbol over R denotes this length-2 datum (an irreducible
// principal series, not a square-integrable class)
LanglandsDatum limitDatum(const LimitOfDiscreteSeries& l);

// permutation of the multiset with nonincreasing exponent, ties broken by the
// canonical Dparam order
std::vector<Dparam> standardSort(const LanglandsDatum& a);

SupportMultiset supportOf(const LanglandsDatum& a);

// every a in M(D) with support omega: all tilings of the support by supports
// of single parameters, respecting the integrality constraints. Over R each
// singleton carries both sign characters; over C omega is a couple and the
// tilings are the integrally-linked matchings between the two halves.
// Exhaustive, duplicate-free, canonically sorted.
std::vector<LanglandsDatum> enumerateData(const SupportMultiset& omega);

std::string render(const LanglandsDatum& a);

}  // namespace udual
