#pragma once

#include <functional>

#include "nilcone/components.hpp"

namespace nilcone {

/// Jordan type (alpha-partition): entries alpha_1..alpha_s in ZeroOrClass
/// with sum k * alpha_k = alpha and alpha_s nonzero.  Interior (0,0) entries
/// are allowed.
struct JordanType {
    std::vector<ClassVector> entries;

    bool operator==(const JordanType&) const = default;
    auto operator<=>(const JordanType&) const = default;

    std::string str() const;
};

/// Validate entries against the ambient class.  Throws NegativeRank (entry
/// outside ZeroOrClass), TrailingZero, MassMismatch.
JordanType jordan_validate(std::vector<ClassVector> entries, const ClassVector& alpha);

/// Jordan type of the generic nilpotent Higgs pair on the torsion stratum of
/// lambda: alpha_k = (0, multiplicity of k in lambda).
JordanType torsion_jordan(const Partition& lambda);

/// One row of the rank 2-3 dictionary: a guarded symbolic rule.  The guards
/// key on the shape of the HN type (factor ranks), parity or divisibility of
/// degrees, and the multipartition; the table is data so tests can audit
/// every row independently.
struct DictRule {
    int rank;
    std::string name;
    std::function<bool(const HNType&, const MultiPartition&)> applies;
    std::function<JordanType(const HNType&, const MultiPartition&)> to_jordan;
    std::function<bool(const JordanType&, const ClassVector&)> inverse_applies;
    std::function<ComponentLabel(const JordanType&, const ClassVector&)> from_jordan;
};

/// The 4 rank-2 and 11 rank-3 dictionary rows.
const std::vector<DictRule>& dictionary_rules();

/// Jordan type of the generic point of the component.  Ranks 0 and 1 use the
/// closed-form rules (torsion multiplicities, and the rank-1 splice with the
/// first degree fixed by the mass identity); ranks 2 and 3 use the rule
/// table and require a torsion-free HN type.  The output always passes
/// jordan_validate against the total class.
/// Throws UnsupportedRank (rank > 3), UnsupportedMixedType (rank 2-3 with a
/// torsion factor).
JordanType hn_to_jordan(const ComponentLabel& c);

/// Inverse dictionary.  Throws NotInDictionary for a valid Jordan type
/// outside the supported image, UnsupportedRank for rank > 3, plus the
/// jordan_validate errors.
ComponentLabel jordan_to_hn(const JordanType& j, const ClassVector& alpha);

/// Torsion suffix (alpha_{r+1},...,alpha_s) past the last positive-rank
/// entry; empty iff the generic Higgs sheaf is a bundle.
std::vector<ClassVector> generic_torsion_part(const JordanType& j);

} // namespace nilcone
