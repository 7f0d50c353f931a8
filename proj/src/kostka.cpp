#include "nilcone/kostka.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace nilcone {

namespace {

// Enumerate the shapes obtained from `mu` by adding a horizontal strip of
// `strip` cells while staying inside `bound`.  Shapes are padded to the
// length of `bound`.
void add_strips(const std::vector<int>& mu, const std::vector<int>& bound, int strip,
                std::size_t row, int placed, std::vector<int>& acc,
                const std::function<void(const std::vector<int>&)>& emit) {
    if (row == bound.size()) {
        if (placed == strip)
            emit(acc);
        return;
    }
    // Strip condition: the new length of row r may not exceed the old length
    // of row r-1 (no two added cells share a column).
    int hi = std::min(bound[row], row == 0 ? bound[0] : mu[row - 1]);
    for (int len = mu[row]; len <= hi && placed + (len - mu[row]) <= strip; ++len) {
        acc[row] = len;
        add_strips(mu, bound, strip, row + 1, placed + (len - mu[row]), acc, emit);
    }
    acc[row] = mu[row];
}

} // namespace

Int kostka(const Partition& lambda, const Partition& nu) {
    if (lambda.weight() != nu.weight())
        throw WeightMismatch("kostka: |lambda|=" + std::to_string(lambda.weight()) +
                             " vs |nu|=" + std::to_string(nu.weight()));
    if (lambda.weight() == 0)
        return 1;

    std::vector<int> bound = lambda.parts();
    std::vector<int> start(bound.size(), 0);
    std::map<std::vector<int>, Int> layer{{start, 1}};
    for (int strip : nu.parts()) {
        std::map<std::vector<int>, Int> next;
        for (const auto& [mu, count] : layer) {
            std::vector<int> acc = mu;
            add_strips(mu, bound, strip, 0, 0, acc,
                       [&](const std::vector<int>& shape) { next[shape] += count; });
        }
        layer = std::move(next);
    }
    auto it = layer.find(bound);
    return it == layer.end() ? Int(0) : it->second;
}

IntegerMatrix kostka_matrix(int d) {
    if (d < 1)
        throw InvalidPartition("kostka_matrix requires d >= 1");
    auto ps = partitions_of(d);
    std::vector<std::string> labels;
    labels.reserve(ps.size());
    for (const auto& p : ps)
        labels.push_back(p.str());
    std::vector<std::vector<Int>> rows(ps.size(), std::vector<Int>(ps.size()));
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = 0; j < ps.size(); ++j)
            rows[i][j] = kostka(ps[i], ps[j]);
    return IntegerMatrix(std::move(labels), std::move(rows));
}

long long endo_dim(const Partition& lambda) {
    long long acc = 0;
    for (int a : lambda.parts())
        for (int b : lambda.parts())
            acc += std::min(a, b);
    return acc;
}

} // namespace nilcone
