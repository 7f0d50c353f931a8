#pragma once

#include "nilcone/hn.hpp"
#include "nilcone/partition.hpp"

namespace nilcone {

/// Label of an irreducible component of the global nilpotent cone: an HN
/// type together with one partition of gcd(alpha_i) per factor.
struct ComponentLabel {
    HNType hn;
    MultiPartition lambda;

    ComponentLabel(HNType h, MultiPartition l);

    bool operator==(const ComponentLabel&) const = default;

    std::string str() const;
};

/// All component labels over the strata of codimension <= max_codim, in
/// canonical order: stratum order from enumerate_hn, then the product of the
/// per-factor partition orders with the first factor most significant.
std::vector<ComponentLabel> enumerate_components(const ClassVector& alpha,
                                                 long long max_codim,
                                                 unsigned threads = 1);

/// Closure order on components: a <= b iff b's stratum is strictly inside
/// the closure of a's, or the strata agree and b.lambda_i is dominated by
/// a.lambda_i for every i.  Throws TotalMismatch.
bool component_leq(const ComponentLabel& a, const ComponentLabel& b);

} // namespace nilcone
