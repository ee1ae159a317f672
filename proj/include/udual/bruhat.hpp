#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "udual/datum.hpp"

namespace udual {

// A character of the (unique, connected) Cartan subgroup of GL(n,H): an
// n-tuple of ordered pairs (lambda_i, mu_i) with lambda_i - mu_i a nonzero
// rational integer. Two characters give the same irreducible iff they agree
// up to the Weyl action {+-1}^n x S_n; the canonical form sorts each pair
// descending and then the pairs descending.
struct CartanChar {
    std::vector<std::pair<ExactComplex, ExactComplex>> pairs;

    CartanChar() = default;
    explicit CartanChar(std::vector<std::pair<ExactComplex, ExactComplex>> ps);  // validates, canonicalizes

    size_t rank() const { return pairs.size(); }
    // flattened coordinates nu_1..nu_2n = lambda_1, mu_1, ..., lambda_n, mu_n
    ExactComplex nu(int k) const;  // 1-based

    bool operator==(const CartanChar& o) const { return pairs == o.pairs; }
    bool operator<(const CartanChar& o) const;
};

CartanChar toCartanChar(const LanglandsDatum& a);  // quaternionic data only
LanglandsDatum toDatum(const CartanChar& c);

std::vector<ExactComplex> supportOfChar(const CartanChar& c);  // sorted descending

bool isRegular(const std::vector<ExactComplex>& omega);

enum class RootKind { ImaginaryCompact, Complex };

struct IntegralRoot {
    int k = 0, l = 0;  // 1-based positions, nu_k - nu_l > 0
    RootKind kind = RootKind::Complex;
    bool simple = false;
};

// the positive integral roots e_k - e_l (nu_k - nu_l a positive integer),
// with simplicity within the integral subsystem and the imaginary/complex
// classification
std::vector<IntegralRoot> integralRoots(const CartanChar& c);

struct ReducibilityReport {
    enum class Verdict { Irreducible, Reducible, Unknown } verdict = Verdict::Unknown;
    std::optional<std::pair<int, int>> witness;  // positions of a witnessing simple complex root
};

// Exact for regular support: the standard module lambda(a) is reducible iff
// some simple positive integral complex root has its pair-mate condition
// satisfied. At singular support: Irreducible when even the necessary
// condition (some positive integral complex root, not necessarily simple,
// satisfying the condition) fails, Irreducible for the translated wall pair
// {(x+1,x),(x,x-1)}-shape, Unknown otherwise.
ReducibilityReport reducibilityWitness(const CartanChar& c);

// all characters obtained by exchanging the two coordinates of a witnessing
// simple complex root, re-canonicalized; regular support required
std::vector<CartanChar> elementaryOps(const CartanChar& c);

struct OrderIdeal {
    std::vector<CartanChar> nodes;             // nodes[0] is the top
    std::vector<std::pair<int, int>> edges;    // (lower, upper) index pairs, lower obtained from upper
};

OrderIdeal orderIdeal(const CartanChar& c);

// length of the longest chain of elementary operations below c
int chainLength(const CartanChar& c);

std::string render(const CartanChar& c);

}  // namespace udual
