#pragma once

#include <gmpxx.h>

#include <string>

namespace udual {

using Int = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool isInteger(const Rational& q) { return q.get_den() == 1; }

// floor(q) as an integer
Int floorOf(const Rational& q);

// "p" or "p/q", optional leading sign; throws std::invalid_argument on junk
Rational parseRational(const std::string& s);

std::string render(const Rational& q);

// A complex number with exact rational real and imaginary parts. This is the
// scalar domain for every parameter in the engine: all shifts in the theory
// are by integers and halves, so Gaussian rationals are closed under
// everything we do and equality stays decidable.
struct ExactComplex {
    Rational re, im;

    ExactComplex() : re(0), im(0) {}
    ExactComplex(Rational r) : re(std::move(r)), im(0) {}
    ExactComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    ExactComplex(long r) : re(rat(r)), im(0) {}

    bool operator==(const ExactComplex& o) const { return re == o.re && im == o.im; }
    bool operator!=(const ExactComplex& o) const { return !(*this == o); }

    ExactComplex operator+(const ExactComplex& o) const { return {re + o.re, im + o.im}; }
    ExactComplex operator-(const ExactComplex& o) const { return {re - o.re, im - o.im}; }
    ExactComplex operator-() const { return {-re, -im}; }
    ExactComplex& operator+=(const ExactComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }

    ExactComplex scaled(const Rational& c) const { return {c * re, c * im}; }

    bool isReal() const { return im == 0; }
};

// lexicographic by (re, im); returns <0, 0, >0
int cmp(const ExactComplex& a, const ExactComplex& b);
inline bool lexLess(const ExactComplex& a, const ExactComplex& b) { return cmp(a, b) < 0; }

// z is a rational integer (im = 0, denominator 1)
bool isRationalInteger(const ExactComplex& z);

std::string render(const ExactComplex& z);

}  // namespace udual
