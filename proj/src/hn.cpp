#include "nilcone/hn.hpp"

#include <algorithm>
#include <future>

namespace nilcone {

HNType::HNType(std::vector<ClassVector> factors) : factors_(std::move(factors)) {
    if (factors_.empty())
        throw InvalidHNType("HN type needs at least one factor");
    for (const auto& f : factors_)
        if (!f.in_positive_cone())
            throw InvalidClass("HN factor " + f.str() + " is not in Z+");
    for (std::size_t i = 1; i < factors_.size(); ++i)
        if (!(slope(factors_[i - 1]) > slope(factors_[i])))
            throw InvalidHNType("slopes must strictly decrease: " + str());
}

ClassVector HNType::total() const {
    ClassVector t{0, 0};
    for (const auto& f : factors_)
        t = t + f;
    return t;
}

bool HNType::torsion_free() const {
    for (const auto& f : factors_)
        if (f.is_torsion())
            return false;
    return true;
}

std::string HNType::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i)
            s += ',';
        s += factors_[i].str();
    }
    s += ')';
    return s;
}

ConvexPath convex_path(const HNType& h) {
    ConvexPath p;
    long long x = 0, y = 0;
    p.vertices.emplace_back(x, y);
    for (auto it = h.factors().rbegin(); it != h.factors().rend(); ++it) {
        x += it->rank;
        y += it->degree;
        p.vertices.emplace_back(x, y);
    }
    return p;
}

long long stratum_codim(const HNType& h) {
    const auto& f = h.factors();
    long long acc = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            acc += f[i].rank * f[j].degree - f[j].rank * f[i].degree;
    return acc;
}

namespace {

long long floor_div(long long a, long long b) {
    // b > 0
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

long long ceil_div(long long a, long long b) {
    return floor_div(a + b - 1, b);
}

// Enumerate slope-decreasing decompositions of `rest` with factor slopes
// below `bound` and total pairwise codimension within `budget`.  Appending a
// factor beta charges det(beta, remainder) = R d1 - r1 D, which is exactly
// beta's contribution against everything that follows; the budget split is
// therefore exact.
void search(const ClassVector& rest, const std::optional<Slope>& bound, long long budget,
            bool first, std::vector<ClassVector>& prefix, std::vector<HNType>& out) {
    if (rest.in_positive_cone() && (!bound || slope(rest) < *bound)) {
        prefix.push_back(rest);
        out.emplace_back(prefix);
        prefix.pop_back();
    }
    const long long R = rest.rank, D = rest.degree;
    if (R < 1)
        return; // a torsion remainder cannot split (equal infinite slopes)
    for (long long r1 = first ? 0 : 1; r1 < R; ++r1) {
        long long lo = ceil_div(1 + r1 * D, R);
        long long hi = floor_div(budget + r1 * D, R);
        for (long long d1 = lo; d1 <= hi; ++d1) {
            ClassVector beta{r1, d1};
            if (!beta.in_positive_cone())
                continue;
            Slope mu = slope(beta);
            if (bound && !(mu < *bound))
                continue;
            long long cost = R * d1 - r1 * D;
            prefix.push_back(beta);
            search(rest - beta, mu, budget - cost, false, prefix, out);
            prefix.pop_back();
        }
    }
}

void canonical_sort(std::vector<HNType>& v) {
    std::sort(v.begin(), v.end(), [](const HNType& a, const HNType& b) {
        long long ca = stratum_codim(a), cb = stratum_codim(b);
        if (ca != cb)
            return ca < cb;
        return a.factors() < b.factors();
    });
}

} // namespace

std::vector<HNType> enumerate_hn(const ClassVector& alpha, long long max_codim,
                                 unsigned threads) {
    if (!alpha.in_positive_cone())
        throw InvalidClass("enumerate_hn: " + alpha.str() + " is not in Z+");
    if (max_codim < 0)
        throw InvalidClass("enumerate_hn: negative max_codim");

    std::vector<HNType> out;
    if (threads <= 1 || alpha.rank < 1) {
        std::vector<ClassVector> prefix;
        search(alpha, std::nullopt, max_codim, true, prefix, out);
    } else {
        // Parallel over the first-factor choice; canonical order is restored
        // by the final sort, so scheduling cannot change the result.
        out.emplace_back(std::vector<ClassVector>{alpha});
        std::vector<ClassVector> firsts;
        const long long R = alpha.rank, D = alpha.degree;
        for (long long r1 = 0; r1 < R; ++r1) {
            long long lo = ceil_div(1 + r1 * D, R);
            long long hi = floor_div(max_codim + r1 * D, R);
            for (long long d1 = lo; d1 <= hi; ++d1)
                if (ClassVector{r1, d1}.in_positive_cone())
                    firsts.push_back({r1, d1});
        }
        std::vector<std::future<std::vector<HNType>>> futures;
        std::size_t chunk = (firsts.size() + threads - 1) / threads;
        for (std::size_t begin = 0; begin < firsts.size(); begin += chunk) {
            std::size_t end = std::min(begin + chunk, firsts.size());
            futures.push_back(std::async(std::launch::async, [=, &firsts]() {
                std::vector<HNType> local;
                for (std::size_t k = begin; k < end; ++k) {
                    const ClassVector& beta = firsts[k];
                    long long cost = R * beta.degree - beta.rank * D;
                    std::vector<ClassVector> prefix{beta};
                    search(alpha - beta, slope(beta), max_codim - cost, false, prefix,
                           local);
                }
                return local;
            }));
        }
        for (auto& f : futures) {
            auto part = f.get();
            out.insert(out.end(), part.begin(), part.end());
        }
    }
    canonical_sort(out);
    return out;
}

namespace {

// Piecewise-linear height of the path, with the final vertical (torsion)
// segment removed; defined on [0, r].
struct Height {
    std::vector<std::pair<long long, long long>> verts;

    explicit Height(const HNType& h) {
        long long x = 0, y = 0;
        verts.emplace_back(x, y);
        for (auto it = h.factors().rbegin(); it != h.factors().rend(); ++it) {
            if (it->is_torsion())
                break; // torsion is first in the HN type, last on the path
            x += it->rank;
            y += it->degree;
            verts.emplace_back(x, y);
        }
    }

    // value at integer x as an exact fraction (num, den), den > 0
    std::pair<long long, long long> at(long long x) const {
        for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
            auto [x0, y0] = verts[i];
            auto [x1, y1] = verts[i + 1];
            if (x0 <= x && x <= x1)
                return {y0 * (x1 - x0) + (x - x0) * (y1 - y0), x1 - x0};
        }
        return {verts.back().second, 1}; // x == r == 0 (pure torsion class)
    }
};

} // namespace

bool path_below(const HNType& a, const HNType& b) {
    if (a.total() != b.total())
        throw TotalMismatch("path_below: totals " + a.total().str() + " vs " +
                            b.total().str());
    Height ha(a), hb(b);
    std::vector<long long> grid;
    for (const auto& [x, y] : ha.verts)
        grid.push_back(x);
    for (const auto& [x, y] : hb.verts)
        grid.push_back(x);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    for (long long x : grid) {
        auto [na, da] = ha.at(x);
        auto [nb, db] = hb.at(x);
        if (na * db > nb * da)
            return false;
    }
    return true;
}

bool stratum_leq(const HNType& a, const HNType& b) {
    return path_below(b, a);
}

std::optional<HNType> codim_one_stratum(const ClassVector& alpha, long long genus) {
    if (genus <= 0)
        throw InvalidGenus("genus must be 1 or >= 2");
    if (!alpha.in_positive_cone())
        throw InvalidClass("codim_one_stratum: " + alpha.str() + " is not in Z+");
    const long long r = alpha.rank, d = alpha.degree;
    if (genus >= 2) {
        if (r != 1)
            return std::nullopt;
        return HNType({{0, 1}, {1, d - 1}});
    }
    if (r < 1 || alpha.gcd() != 1)
        return std::nullopt;
    // Bezout: r d1 - r1 d = 1 with 0 <= r1 < r.
    long long old_r = r, old_d = d;
    long long x = 1, y = 0, x1 = 0, y1 = 1;
    while (old_d != 0) {
        long long q = old_r / old_d;
        std::swap(old_r -= q * old_d, old_d);
        std::swap(x -= q * x1, x1);
        std::swap(y -= q * y1, y1);
    }
    // old_r = +-1 = r x + d y
    long long d1 = x * old_r, r1 = -y * old_r; // r d1 - r1 d = old_r^2 = 1
    long long r1n = ((r1 % r) + r) % r;
    long long k = (r1n - r1) / r;
    d1 += k * d;
    r1 = r1n;
    return HNType({{r1, d1}, {r - r1, d - d1}});
}

std::optional<HNType> sl2_transport(const UnimodularMatrix& gamma, const HNType& h) {
    std::vector<ClassVector> out;
    out.reserve(h.length());
    for (const auto& f : h.factors()) {
        ClassVector g = gamma.apply(f);
        if (!g.in_positive_cone())
            return std::nullopt;
        out.push_back(g);
    }
    for (std::size_t i = 1; i < out.size(); ++i)
        if (!(slope(out[i - 1]) > slope(out[i])))
            return std::nullopt;
    return HNType(std::move(out));
}

} // namespace nilcone
