#pragma once

#include <map>
#include <string>
#include <vector>

#include "udual/ring.hpp"

namespace udual {

// A coherent-family symbol: an ORDERED pair of parameters. Above the wall it
// resolves to a square-integrable class, at the wall to the degenerate value,
// below the wall it has no resolution and only formal identities may use it.
struct CoherentVar {
    ExactComplex x, y;
    bool operator==(const CoherentVar& o) const { return x == o.x && y == o.y; }
    bool operator<(const CoherentVar& o) const {
        if (int c = cmp(x, o.x); c != 0) return c < 0;
        return cmp(y, o.y) < 0;
    }
};

enum class WallClass { Above, Wall, Below };
WallClass wallClass(const CoherentVar& v);

// Integer polynomials in free commuting coherent symbols.
class FormalPoly {
  public:
    using Monomial = std::vector<CoherentVar>;  // sorted

    FormalPoly() = default;
    static FormalPoly variable(const CoherentVar& v);
    static FormalPoly one();

    bool isZero() const { return terms_.empty(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }
    void addTerm(Monomial m, const Int& c);

    FormalPoly operator+(const FormalPoly& o) const;
    FormalPoly operator-(const FormalPoly& o) const;
    FormalPoly operator*(const FormalPoly& o) const;
    bool operator==(const FormalPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const FormalPoly& o) const { return !(*this == o); }

  private:
    std::map<Monomial, Int> terms_;
};

std::string render(const FormalPoly& p);

enum class EvalMode { Formal, Evaluated };

// Grid of coherent symbols whose signed expansion carries the character of a
// length-n ladder quotient: entry (i,j), 1-based, sits at
// (x + (n-1)/2 - i + 1, y + (n-1)/2 - j + 1).
struct SpehMatrix {
    Algebra alg = Algebra::Complex;
    ExactComplex x, y;
    int n = 1;
};

// validates x - y integral; over R/H also x - y >= 0
SpehMatrix buildSpehMatrix(Algebra alg, const ExactComplex& x, const ExactComplex& y, int n);

CoherentVar entryAt(const SpehMatrix& m, int i, int j);

// thrown when an evaluation meets a below-wall symbol
struct WallCrossingError : std::domain_error {
    explicit WallCrossingError(const std::string& what) : std::domain_error(what) {}
};

// resolution of one symbol (Evaluated mode); throws WallCrossingError below
// the wall over R/H
RingElem resolveEntry(Algebra alg, const CoherentVar& v);

inline constexpr int kDefaultDetCap = 6;

// plain signed permutation expansions; cap bounds n (n! terms)
FormalPoly detFormal(const SpehMatrix& m, int cap = kDefaultDetCap);
RingElem detEvaluated(const SpehMatrix& m, int cap = kDefaultDetCap);

// the ladder-quotient character u(., n) as a determinant; the diagonal
// monomial carries coefficient +1 in every algebra
RingElem spehExpandEvaluated(Algebra alg, const ExactComplex& x, const ExactComplex& y, int n,
                             int cap = kDefaultDetCap);
FormalPoly spehExpandFormal(Algebra alg, const ExactComplex& x, const ExactComplex& y, int n,
                            int cap = kDefaultDetCap);

struct IdentityReport {
    bool holds = false;
    std::string lhs, rhs;  // canonical renderings of the two compared sides
    std::string note;      // what was checked (mode, extra wall bookkeeping)
};

// The ends-of-complementary-series identities, all instances of the
// Desnanot-Jacobi condensation shape on the (n+1)-sized grid:
//   "14.3" over C, "14.5" over R, "14.7" over H   (params x, y, n)
//   "14.6" over R at y = x-1 (formal only)
//   "14.9"/"14.10" over H at y = x-1 (formal + wall-quotient bookkeeping;
//   the evaluated mode is refused since below-wall symbols occur)
IdentityReport lewisCarrollCheck(const std::string& id, const ExactComplex& x, const ExactComplex& y,
                                 int n, EvalMode mode);

struct PrimalityReport {
    bool factorizationFound = false;
    std::vector<Dparam> leftVariables;  // a factorizing side, when found
    int partitionsChecked = 0;
};

// brute-force search for a two-factor homogeneous factorization over
// variable partitions (sound at regular support, where the expansion is
// multilinear); n capped at 3 for the ladder form
PrimalityReport primalityProbe(Algebra alg, const ExactComplex& x, const ExactComplex& y, int n);
PrimalityReport primalityProbeOn(const RingElem& expansion);

}  // namespace udual
