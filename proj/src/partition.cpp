#include "nilcone/partition.hpp"

#include <algorithm>
#include <numeric>

namespace nilcone {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw InvalidPartition("parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidPartition("parts must be nonincreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    if (parts_.empty())
        return Partition();
    out.resize(static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j)
            ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

int Partition::multiplicity(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    s += ')';
    return s;
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    return std::lexicographical_compare_three_way(
        parts_.begin(), parts_.end(), o.parts_.begin(), o.parts_.end());
}

std::string multipartition_str(const MultiPartition& mp) {
    std::string s = "(";
    for (std::size_t i = 0; i < mp.size(); ++i) {
        if (i)
            s += ',';
        s += mp[i].str();
    }
    s += ')';
    return s;
}

bool dominance_leq(const Partition& nu, const Partition& lambda) {
    if (nu.weight() != lambda.weight())
        throw WeightMismatch("dominance_leq: |nu|=" + std::to_string(nu.weight()) +
                             " vs |lambda|=" + std::to_string(lambda.weight()));
    long long snu = 0, sla = 0;
    std::size_t n = std::max(nu.parts().size(), lambda.parts().size());
    for (std::size_t i = 0; i < n; ++i) {
        snu += i < nu.parts().size() ? nu.parts()[i] : 0;
        sla += i < lambda.parts().size() ? lambda.parts()[i] : 0;
        if (snu > sla)
            return false;
    }
    return true;
}

namespace {

void gen(int rest, int max_part, std::vector<int>& acc, std::vector<Partition>& out) {
    if (rest == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen(rest - p, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int d) {
    if (d < 0)
        throw InvalidPartition("negative weight");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen(d, d == 0 ? 1 : d, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t partition_count(int d) {
    return partitions_of(d).size();
}

} // namespace nilcone
