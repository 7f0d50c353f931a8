#pragma once

#include <compare>
#include <string>

#include "nilcone/errors.hpp"

namespace nilcone {

/// Class (r,d) of a coherent sheaf.  The positive cone Z+ is
/// { r>0 } union { r=0, d>0 }; rank-0 entries with d=0 are admitted only in
/// Jordan types (ZeroOrClass).
struct ClassVector {
    long long rank = 0;
    long long degree = 0;

    bool in_positive_cone() const {
        return rank > 0 || (rank == 0 && degree > 0);
    }
    bool is_torsion() const { return rank == 0; }
    bool is_zero() const { return rank == 0 && degree == 0; }

    long long gcd() const;

    ClassVector operator+(const ClassVector& o) const {
        return {rank + o.rank, degree + o.degree};
    }
    ClassVector operator-(const ClassVector& o) const {
        return {rank - o.rank, degree - o.degree};
    }
    bool operator==(const ClassVector&) const = default;
    auto operator<=>(const ClassVector&) const = default;

    std::string str() const;
};

/// Exact slope d/r, with +infinity for torsion classes.  Stored in lowest
/// terms with positive denominator; den == 0 encodes +infinity.
class Slope {
public:
    static Slope infinity() { return Slope(1, 0); }
    static Slope of(long long num, long long den);

    bool is_infinite() const { return den_ == 0; }
    long long num() const { return num_; }
    long long den() const { return den_; }

    bool operator==(const Slope&) const = default;
    std::strong_ordering operator<=>(const Slope& o) const;

    std::string str() const; // "p/q", "p" for integers, "inf"

private:
    Slope(long long n, long long d) : num_(n), den_(d) {}
    long long num_;
    long long den_;
};

/// Slope of a class in Z+.  Throws InvalidClass outside the cone.
Slope slope(const ClassVector& a);

/// Euler form <alpha,beta> = (1-g) r1 r2 + (r1 d2 - r2 d1).
long long euler_form(const ClassVector& a, const ClassVector& b, long long genus);

/// Element of SL2(Z), acting on column vectors (r,d)^T.
struct UnimodularMatrix {
    long long a, b, c, d; // [[a,b],[c,d]], ad - bc = 1

    UnimodularMatrix(long long a_, long long b_, long long c_, long long d_);

    ClassVector apply(const ClassVector& v) const {
        return {a * v.rank + b * v.degree, c * v.rank + d * v.degree};
    }
};

} // namespace nilcone
