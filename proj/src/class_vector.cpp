#include "nilcone/class_vector.hpp"

#include <numeric>

namespace nilcone {

long long ClassVector::gcd() const {
    return std::gcd(rank < 0 ? -rank : rank, degree < 0 ? -degree : degree);
}

std::string ClassVector::str() const {
    return "(" + std::to_string(rank) + "," + std::to_string(degree) + ")";
}

Slope Slope::of(long long num, long long den) {
    if (den == 0)
        return infinity();
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Slope(num, den);
}

std::strong_ordering Slope::operator<=>(const Slope& o) const {
    if (is_infinite() || o.is_infinite()) {
        if (is_infinite() && o.is_infinite())
            return std::strong_ordering::equal;
        return is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    // denominators positive, values small: cross-multiplication is exact
    return num_ * o.den_ <=> o.num_ * den_;
}

std::string Slope::str() const {
    if (is_infinite())
        return "inf";
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Slope slope(const ClassVector& a) {
    if (!a.in_positive_cone())
        throw InvalidClass("slope: " + a.str() + " is not in Z+");
    return Slope::of(a.degree, a.rank);
}

long long euler_form(const ClassVector& a, const ClassVector& b, long long genus) {
    return (1 - genus) * a.rank * b.rank + (a.rank * b.degree - b.rank * a.degree);
}

UnimodularMatrix::UnimodularMatrix(long long a_, long long b_, long long c_, long long d_)
    : a(a_), b(b_), c(c_), d(d_) {
    if (a * d - b * c != 1)
        throw InvalidClass("UnimodularMatrix: determinant must be 1");
}

} // namespace nilcone
