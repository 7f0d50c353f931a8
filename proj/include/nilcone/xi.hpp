#pragma once

#include <utility>
#include <vector>

#include "nilcone/hn.hpp"
#include "nilcone/partition.hpp"

namespace nilcone {

/// Finite multiset of partitions with positive multiplicities; records the
/// isomorphism type of a semistable (or torsion) sheaf at distinct points.
/// Weight = sum of mult * |lambda|.
class XiFunction {
public:
    XiFunction() = default;
    explicit XiFunction(std::vector<std::pair<Partition, int>> entries);

    /// The regular xi attached to a partition: (j) carries the multiplicity
    /// of j among the parts.
    static XiFunction regular_from(const Partition& lambda);

    const std::vector<std::pair<Partition, int>>& entries() const { return entries_; }
    long long weight() const;

    /// Number of support points counted with multiplicity, sum of xi(lambda).
    long long count() const;

    /// True iff every supported partition has length 1.
    bool regular() const;

    /// Inverse of regular_from.  Throws InvalidPartition when not regular.
    Partition to_partition() const;

    bool operator==(const XiFunction&) const = default;
    auto operator<=>(const XiFunction&) const = default;

    std::string str() const;

private:
    std::vector<std::pair<Partition, int>> entries_; // sorted by (weight, lex)
};

using XiTuple = std::vector<XiFunction>;

/// All xi of weight delta (delta >= 0), deterministic order.
std::vector<XiFunction> enumerate_xi_functions(int delta);

/// Codimension of the nilpotent locus inside End: sum of xi(lambda) l(lambda),
/// the number of indecomposable summands.
long long nilpotent_codim_in_end(const XiFunction& xi);

/// e(xi) = sum of xi(lambda) endo_dim(lambda), the automorphism dimension.
long long automorphism_dim(const XiFunction& xi);

/// Dimension of the semistable xi-stratum: count(xi) - e(xi).
long long dim_ss_stratum(const XiFunction& xi);

/// Dimension of the HN xi-stratum: sum_i dim_ss(xi_i) - stratum_codim(h).
/// Throws IncompatibleXi unless the tuple matches h factorwise, with
/// weight(xi_i) = gcd(alpha_i).
long long dim_hn_stratum(const HNType& h, const XiTuple& xi);

/// Dimension of the Springer-style fiber over the stratum:
/// stratum_codim(h) + sum_i (e(xi_i) - sum xi_i(lambda) l(lambda)).
long long dim_fiber(const HNType& h, const XiTuple& xi);

/// Dimension of the nilpotent-cone stratum:
/// sum_i sum_lambda xi_i(lambda)(1 - l(lambda)); always <= 0, zero exactly
/// when every xi_i is regular.
long long dim_nilcone_stratum(const HNType& h, const XiTuple& xi);

} // namespace nilcone
