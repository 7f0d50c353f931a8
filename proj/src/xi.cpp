#include "nilcone/xi.hpp"

#include <algorithm>

#include "nilcone/kostka.hpp"

namespace nilcone {

namespace {

bool xi_key_less(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight())
        return a.weight() < b.weight();
    return a < b;
}

} // namespace

XiFunction::XiFunction(std::vector<std::pair<Partition, int>> entries)
    : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const auto& x, const auto& y) { return xi_key_less(x.first, y.first); });
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].second <= 0)
            throw InvalidPartition("xi multiplicities must be positive");
        if (entries_[i].first.empty())
            throw InvalidPartition("xi support cannot contain the empty partition");
        if (i && entries_[i - 1].first == entries_[i].first)
            throw InvalidPartition("duplicate partition in xi support");
    }
}

XiFunction XiFunction::regular_from(const Partition& lambda) {
    std::vector<std::pair<Partition, int>> entries;
    for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
        int part = lambda.parts()[i];
        if (i && part == lambda.parts()[i - 1])
            ++entries.back().second;
        else
            entries.emplace_back(Partition({part}), 1);
    }
    return XiFunction(std::move(entries));
}

long long XiFunction::weight() const {
    long long w = 0;
    for (const auto& [p, m] : entries_)
        w += static_cast<long long>(m) * p.weight();
    return w;
}

long long XiFunction::count() const {
    long long c = 0;
    for (const auto& [p, m] : entries_)
        c += m;
    return c;
}

bool XiFunction::regular() const {
    for (const auto& [p, m] : entries_)
        if (p.length() != 1)
            return false;
    return true;
}

Partition XiFunction::to_partition() const {
    if (!regular())
        throw InvalidPartition("xi is not regular: " + str());
    std::vector<int> parts;
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
        parts.insert(parts.end(), it->second, it->first.parts()[0]);
    return Partition(std::move(parts));
}

std::string XiFunction::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            s += ',';
        s += entries_[i].first.str() + ":" + std::to_string(entries_[i].second);
    }
    s += '}';
    return s;
}

std::vector<XiFunction> enumerate_xi_functions(int delta) {
    if (delta < 0)
        throw InvalidPartition("xi weight must be nonnegative");
    // All partitions of weight 1..delta, in the xi key order; a xi function
    // is a nondecreasing multiset of them with total weight delta.
    std::vector<Partition> pool;
    for (int w = 1; w <= delta; ++w)
        for (const auto& p : partitions_of(w))
            pool.push_back(p);
    std::vector<XiFunction> out;
    std::vector<std::pair<Partition, int>> acc;
    auto rec = [&](auto&& self, std::size_t from, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(acc);
            return;
        }
        for (std::size_t i = from; i < pool.size(); ++i) {
            int w = pool[i].weight();
            if (w > remaining)
                continue;
            acc.emplace_back(pool[i], 1);
            for (int m = 1; m * w <= remaining; ++m) {
                acc.back().second = m;
                self(self, i + 1, remaining - m * w);
            }
            acc.pop_back();
        }
    };
    rec(rec, 0, delta);
    std::sort(out.begin(), out.end());
    return out;
}

long long nilpotent_codim_in_end(const XiFunction& xi) {
    long long acc = 0;
    for (const auto& [p, m] : xi.entries())
        acc += static_cast<long long>(m) * p.length();
    return acc;
}

long long automorphism_dim(const XiFunction& xi) {
    long long acc = 0;
    for (const auto& [p, m] : xi.entries())
        acc += static_cast<long long>(m) * endo_dim(p);
    return acc;
}

long long dim_ss_stratum(const XiFunction& xi) {
    return xi.count() - automorphism_dim(xi);
}

namespace {

void check_compatible(const HNType& h, const XiTuple& xi) {
    if (xi.size() != h.length())
        throw IncompatibleXi("xi tuple length " + std::to_string(xi.size()) +
                             " vs " + std::to_string(h.length()) + " HN factors");
    for (std::size_t i = 0; i < xi.size(); ++i)
        if (xi[i].weight() != h.factors()[i].gcd())
            throw IncompatibleXi("factor " + h.factors()[i].str() + " needs weight " +
                                 std::to_string(h.factors()[i].gcd()) + ", got " +
                                 std::to_string(xi[i].weight()));
}

} // namespace

long long dim_hn_stratum(const HNType& h, const XiTuple& xi) {
    check_compatible(h, xi);
    long long acc = -stratum_codim(h);
    for (const auto& x : xi)
        acc += dim_ss_stratum(x);
    return acc;
}

long long dim_fiber(const HNType& h, const XiTuple& xi) {
    check_compatible(h, xi);
    long long acc = stratum_codim(h);
    for (const auto& x : xi)
        acc += automorphism_dim(x) - nilpotent_codim_in_end(x);
    return acc;
}

long long dim_nilcone_stratum(const HNType& h, const XiTuple& xi) {
    check_compatible(h, xi);
    long long acc = 0;
    for (const auto& x : xi)
        for (const auto& [p, m] : x.entries())
            acc += static_cast<long long>(m) * (1 - p.length());
    return acc;
}

} // namespace nilcone
