#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nilcone/class_vector.hpp"

namespace nilcone {

/// Harder-Narasimhan type: a nonempty sequence of classes in Z+ with
/// strictly decreasing slopes.  At most one factor is torsion, and slope
/// order forces it to be the first.
class HNType {
public:
    explicit HNType(std::vector<ClassVector> factors);

    const std::vector<ClassVector>& factors() const { return factors_; }
    std::size_t length() const { return factors_.size(); }
    ClassVector total() const;
    bool torsion_free() const;

    bool operator==(const HNType&) const = default;
    auto operator<=>(const HNType&) const = default;

    std::string str() const;

private:
    std::vector<ClassVector> factors_;
};

/// Convex lattice path of an HN type: partial sums of the factors taken in
/// increasing-slope order, from the origin to (r,d).  Only the final segment
/// may be vertical (torsion factor).
struct ConvexPath {
    std::vector<std::pair<long long, long long>> vertices;
};

ConvexPath convex_path(const HNType& h);

/// Codimension of the HN stratum: sum_{j<i} (r_i d_j - r_j d_i).
/// Each summand is a positive integer; 0 iff a single factor.
long long stratum_codim(const HNType& h);

/// All HN types of class alpha with stratum codimension <= max_codim, in
/// canonical order (codim, then lexicographic on the factor sequence).
/// `threads` > 1 parallelizes over the first-factor choice; the output
/// order does not depend on it.
std::vector<HNType> enumerate_hn(const ClassVector& alpha, long long max_codim,
                                 unsigned threads = 1);

/// Path comparison: the height of a's path is <= the height of b's path
/// everywhere on [0,r], the final vertical (torsion) segment replaced by its
/// left limit.  Throws TotalMismatch.
bool path_below(const HNType& a, const HNType& b);

/// Closure order on HN strata: a <= b iff b's stratum lies in the closure of
/// a's, i.e. path_below(b, a).  The dense stratum ((alpha)) is the minimum.
bool stratum_leq(const HNType& a, const HNType& b);

/// The unique codimension-one HN stratum, when it exists.
/// genus 1: the Bezout type ((r1,d1),(r-r1,d-d1)) with r d1 - r1 d = 1 and
/// 0 <= r1 < r, present iff gcd(r,d) = 1 and r >= 1.
/// genus >= 2: ((0,1),(1,d-1)), present iff r = 1.
/// Throws InvalidGenus for genus <= 0.
std::optional<HNType> codim_one_stratum(const ClassVector& alpha, long long genus);

/// Transport of an HN type by gamma in SL2(Z) (column action on each
/// factor).  Absent when an image leaves Z+ or the slopes stop decreasing.
std::optional<HNType> sl2_transport(const UnimodularMatrix& gamma, const HNType& h);

} // namespace nilcone
