#pragma once

#include "nilcone/components.hpp"
#include "nilcone/int_matrix.hpp"

namespace nilcone {

/// Characteristic-cycle multiplicity block of a single HN stratum: the
/// Kronecker product of the Kostka matrices of the factor gcds, indexed by
/// multipartitions in the canonical product order.
struct CCBlock {
    HNType hn;
    std::vector<MultiPartition> labels;
    IntegerMatrix matrix;
};

CCBlock cc_block(const HNType& h);

/// The determined part of the global CC matrix, truncated at
/// max_codim.  Diagonal (same-stratum) blocks are known; a cross-stratum
/// entry is known-zero when the column stratum is not below the row stratum
/// in the closure order, and explicitly unknown otherwise.
class TruncatedCCMatrix {
public:
    enum class Kind { Known, Unknown };

    TruncatedCCMatrix(std::vector<ComponentLabel> components, std::vector<CCBlock> blocks);

    std::size_t size() const { return components_.size(); }
    const std::vector<ComponentLabel>& components() const { return components_; }
    const std::vector<CCBlock>& blocks() const { return blocks_; }

    Kind kind(std::size_t i, std::size_t j) const;
    /// Value of a known entry; throws UnknownEntries on an unknown one.
    Int entry(std::size_t i, std::size_t j) const;

    bool has_unknowns() const;

private:
    std::vector<ComponentLabel> components_;
    std::vector<CCBlock> blocks_;
    std::vector<std::size_t> block_of_;  // component index -> block index
    std::vector<std::size_t> offset_in_; // component index -> index inside block
};

TruncatedCCMatrix cc_truncated(const ClassVector& alpha, long long max_codim,
                               unsigned threads = 1);

/// Exact inverse of the known block-diagonal part (blockwise inverse Kostka
/// Kronecker products).  Unless block_diagonal_mode is set, throws
/// UnknownEntries when the truncation has any unknown entries.
IntegerMatrix invert_known_part(const TruncatedCCMatrix& m,
                                bool block_diagonal_mode = false);

} // namespace nilcone
