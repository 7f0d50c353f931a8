#include "nilcone/components.hpp"

namespace nilcone {

ComponentLabel::ComponentLabel(HNType h, MultiPartition l)
    : hn(std::move(h)), lambda(std::move(l)) {
    if (lambda.size() != hn.length())
        throw InvalidHNType("component label needs one partition per HN factor");
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (lambda[i].weight() != hn.factors()[i].gcd())
            throw WeightMismatch("factor " + hn.factors()[i].str() +
                                 " needs a partition of " +
                                 std::to_string(hn.factors()[i].gcd()) + ", got " +
                                 lambda[i].str());
}

std::string ComponentLabel::str() const {
    return hn.str() + " " + multipartition_str(lambda);
}

std::vector<ComponentLabel> enumerate_components(const ClassVector& alpha,
                                                 long long max_codim,
                                                 unsigned threads) {
    std::vector<ComponentLabel> out;
    for (const auto& h : enumerate_hn(alpha, max_codim, threads)) {
        std::vector<std::vector<Partition>> choices;
        for (const auto& f : h.factors())
            choices.push_back(partitions_of(static_cast<int>(f.gcd())));
        // odometer over the product, first factor most significant
        std::vector<std::size_t> idx(choices.size(), 0);
        while (true) {
            MultiPartition mp;
            mp.reserve(choices.size());
            for (std::size_t i = 0; i < choices.size(); ++i)
                mp.push_back(choices[i][idx[i]]);
            out.emplace_back(h, std::move(mp));
            std::size_t i = choices.size();
            while (i > 0 && ++idx[i - 1] == choices[i - 1].size())
                idx[--i] = 0;
            if (i == 0)
                break;
        }
    }
    return out;
}

bool component_leq(const ComponentLabel& a, const ComponentLabel& b) {
    if (a.hn.total() != b.hn.total())
        throw TotalMismatch("component_leq: totals " + a.hn.total().str() + " vs " +
                            b.hn.total().str());
    if (a.hn == b.hn) {
        for (std::size_t i = 0; i < a.lambda.size(); ++i)
            if (!dominance_leq(b.lambda[i], a.lambda[i]))
                return false;
        return true;
    }
    return stratum_leq(a.hn, b.hn);
}

} // namespace nilcone
