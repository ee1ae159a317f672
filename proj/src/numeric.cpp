#include "udual/numeric.hpp"

#include <stdexcept>

namespace udual {

Int floorOf(const Rational& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
}

Rational parseRational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::string t = s;
    bool neg = false;
    size_t pos = 0;
    if (t[pos] == '+' || t[pos] == '-') {
        neg = t[pos] == '-';
        ++pos;
    }
    auto slash = t.find('/', pos);
    std::string numStr = t.substr(pos, slash == std::string::npos ? std::string::npos : slash - pos);
    std::string denStr = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (numStr.empty() || denStr.empty()) throw std::invalid_argument("malformed rational '" + s + "'");
    for (char c : numStr)
        if (!isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("malformed rational '" + s + "'");
    for (char c : denStr)
        if (!isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("malformed rational '" + s + "'");
    Rational q{Int(numStr), Int(denStr)};
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    q.canonicalize();
    if (neg) q = -q;
    return q;
}

std::string render(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

int cmp(const ExactComplex& a, const ExactComplex& b) {
    int c = ::cmp(a.re, b.re);
    if (c != 0) return c;
    return ::cmp(a.im, b.im);
}

bool isRationalInteger(const ExactComplex& z) { return z.im == 0 && isInteger(z.re); }

std::string render(const ExactComplex& z) {
    if (z.im == 0) return render(z.re);
    std::string s = render(z.re);
    if (z.im > 0)
        s += "+" + render(z.im) + "i";
    else
        s += "-" + render(Rational(-z.im)) + "i";
    return s;
}

}  // namespace udual
