#pragma once

#include <compare>
#include <string>
#include <vector>

#include "nilcone/errors.hpp"

namespace nilcone {

/// Integer partition: a nonincreasing sequence of positive parts.  The empty
/// partition (weight 0) is allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;

    /// Multiplicity of `part` among the parts.
    int multiplicity(int part) const;

    /// Canonical rendering, e.g. "(2,1)"; the empty partition is "()".
    std::string str() const;

    bool operator==(const Partition&) const = default;
    // Lexicographic on the part sequences.  Restricted to fixed weight this
    // is a linear extension of dominance with (1^d) first and (d) last.
    std::strong_ordering operator<=>(const Partition& o) const;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

using MultiPartition = std::vector<Partition>;

std::string multipartition_str(const MultiPartition& mp);

/// nu <= lambda in the dominance order (prefix sums, zero-padded).
/// Throws WeightMismatch when |nu| != |lambda|.
bool dominance_leq(const Partition& nu, const Partition& lambda);

/// All partitions of d, in the canonical order (ascending lexicographic).
std::vector<Partition> partitions_of(int d);

/// p(d), computed by enumeration.
std::size_t partition_count(int d);

} // namespace nilcone
