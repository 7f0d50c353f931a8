#include "nilcone/ccmap.hpp"

#include "nilcone/kostka.hpp"

namespace nilcone {

CCBlock cc_block(const HNType& h) {
    std::vector<std::vector<Int>> entries{{Int(1)}};
    std::vector<MultiPartition> labels{{}};
    for (const auto& f : h.factors()) {
        int delta = static_cast<int>(f.gcd());
        IntegerMatrix km = kostka_matrix(delta);
        entries = kronecker_entries(entries, km.rows());
        auto ps = partitions_of(delta);
        std::vector<MultiPartition> next;
        next.reserve(labels.size() * ps.size());
        for (const auto& prefix : labels)
            for (const auto& p : ps) {
                MultiPartition mp = prefix;
                mp.push_back(p);
                next.push_back(std::move(mp));
            }
        labels = std::move(next);
    }
    std::vector<std::string> names;
    names.reserve(labels.size());
    for (const auto& mp : labels)
        names.push_back(multipartition_str(mp));
    return CCBlock{h, std::move(labels), IntegerMatrix(std::move(names), std::move(entries))};
}

TruncatedCCMatrix::TruncatedCCMatrix(std::vector<ComponentLabel> components,
                                     std::vector<CCBlock> blocks)
    : components_(std::move(components)), blocks_(std::move(blocks)) {
    std::size_t c = 0;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        for (std::size_t k = 0; k < blocks_[b].labels.size(); ++k, ++c) {
            if (c >= components_.size() || components_[c].hn != blocks_[b].hn ||
                components_[c].lambda != blocks_[b].labels[k])
                throw InvalidHNType("block labels do not match the component list");
            block_of_.push_back(b);
            offset_in_.push_back(k);
        }
    }
    if (c != components_.size())
        throw InvalidHNType("block sizes do not cover the component list");
}

TruncatedCCMatrix::Kind TruncatedCCMatrix::kind(std::size_t i, std::size_t j) const {
    if (block_of_[i] == block_of_[j])
        return Kind::Known;
    const HNType& row = blocks_[block_of_[i]].hn;
    const HNType& col = blocks_[block_of_[j]].hn;
    // Support-order zero pattern: the entry can be nonzero only when the row
    // stratum lies in the closure of the column stratum; those entries are
    // not determined by the block construction.
    return stratum_leq(col, row) ? Kind::Unknown : Kind::Known;
}

Int TruncatedCCMatrix::entry(std::size_t i, std::size_t j) const {
    if (kind(i, j) == Kind::Unknown)
        throw UnknownEntries("entry (" + components_[i].str() + ", " +
                             components_[j].str() + ") is not determined");
    if (block_of_[i] != block_of_[j])
        return 0;
    return blocks_[block_of_[i]].matrix.at(offset_in_[i], offset_in_[j]);
}

bool TruncatedCCMatrix::has_unknowns() const {
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            if (kind(i, j) == Kind::Unknown)
                return true;
    return false;
}

TruncatedCCMatrix cc_truncated(const ClassVector& alpha, long long max_codim,
                               unsigned threads) {
    std::vector<CCBlock> blocks;
    for (const auto& h : enumerate_hn(alpha, max_codim, threads))
        blocks.push_back(cc_block(h));
    return TruncatedCCMatrix(enumerate_components(alpha, max_codim, threads),
                             std::move(blocks));
}

IntegerMatrix invert_known_part(const TruncatedCCMatrix& m, bool block_diagonal_mode) {
    if (!block_diagonal_mode && m.has_unknowns())
        throw UnknownEntries("truncation has undetermined cross-stratum entries; "
                             "use block-diagonal mode");
    std::size_t n = m.size();
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& c : m.components())
        labels.push_back(c.str());
    std::vector<std::vector<Int>> rows(n, std::vector<Int>(n, Int(0)));
    std::size_t off = 0;
    for (const auto& b : m.blocks()) {
        IntegerMatrix inv = invert_unitriangular(b.matrix);
        std::size_t k = inv.size();
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                rows[off + i][off + j] = inv.at(i, j);
        off += k;
    }
    return IntegerMatrix(std::move(labels), std::move(rows));
}

} // namespace nilcone
