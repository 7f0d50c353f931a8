#include "nilcone/jordan.hpp"

#include <numeric>

namespace nilcone {

std::string JordanType::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i)
            s += ',';
        s += entries[i].str();
    }
    s += ')';
    return s;
}

JordanType jordan_validate(std::vector<ClassVector> entries, const ClassVector& alpha) {
    if (entries.empty())
        throw MassMismatch("empty Jordan type for " + alpha.str());
    ClassVector mass{0, 0};
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const ClassVector& e = entries[k];
        if (e.rank < 0 || (e.rank == 0 && e.degree < 0))
            throw NegativeRank("entry " + e.str() + " is not in ZeroOrClass");
        mass = mass + ClassVector{static_cast<long long>(k + 1) * e.rank,
                                  static_cast<long long>(k + 1) * e.degree};
    }
    if (entries.back().is_zero())
        throw TrailingZero("final entry of a Jordan type must be nonzero");
    if (mass != alpha)
        throw MassMismatch("sum k*alpha_k = " + mass.str() + " but alpha = " +
                           alpha.str());
    return JordanType{std::move(entries)};
}

JordanType torsion_jordan(const Partition& lambda) {
    if (lambda.empty())
        throw InvalidPartition("torsion_jordan needs a nonempty partition");
    int top = lambda.parts().front();
    std::vector<ClassVector> entries;
    for (int k = 1; k <= top; ++k)
        entries.push_back({0, lambda.multiplicity(k)});
    return jordan_validate(std::move(entries), {0, lambda.weight()});
}

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

std::vector<long long> ranks_of(const HNType& h) {
    std::vector<long long> r;
    for (const auto& f : h.factors())
        r.push_back(f.rank);
    return r;
}

bool torsion_entries_from(const JordanType& j, std::size_t from) {
    for (std::size_t i = from; i < j.entries.size(); ++i)
        if (j.entries[i].rank != 0)
            return false;
    return true;
}

JordanType check(std::vector<ClassVector> entries, const ClassVector& alpha) {
    return jordan_validate(std::move(entries), alpha);
}

std::vector<DictRule> build_rules() {
    std::vector<DictRule> rules;

    // ----- rank 2, alpha = (2,d), torsion-free HN types -----

    rules.push_back({2, "R2-1",
        [](const HNType& h, const MultiPartition& l) {
            return ranks_of(h) == std::vector<long long>{2} &&
                   h.factors()[0].degree % 2 != 0 && l[0] == P({1});
        },
        [](const HNType& h, const MultiPartition&) {
            return check({h.factors()[0]}, h.total());
        },
        [](const JordanType& j, const ClassVector& a) {
            return a.rank == 2 && j.entries.size() == 1 && j.entries[0].rank == 2 &&
                   j.entries[0].degree % 2 != 0;
        },
        [](const JordanType& j, const ClassVector&) {
            return ComponentLabel(HNType({j.entries[0]}), {P({1})});
        }});

    rules.push_back({2, "R2-2",
        [](const HNType& h, const MultiPartition& l) {
            return ranks_of(h) == std::vector<long long>{2} &&
                   h.factors()[0].degree % 2 == 0 && l[0] == P({2});
        },
        [](const HNType& h, const MultiPartition&) {
            return check({{0, 0}, {1, h.factors()[0].degree / 2}}, h.total());
        },
        [](const JordanType& j, const ClassVector& a) {
            return a.rank == 2 && j.entries.size() == 2 && j.entries[0].is_zero() &&
                   j.entries[1].rank == 1;
        },
        [](const JordanType& j, const ClassVector&) {
            return ComponentLabel(HNType({{2, 2 * j.entries[1].degree}}), {P({2})});
        }});

    rules.push_back({2, "R2-3",
        [](const HNType& h, const MultiPartition& l) {
            return ranks_of(h) == std::vector<long long>{2} &&
                   h.factors()[0].degree % 2 == 0 && l[0] == P({1, 1});
        },
        [](const HNType& h, const MultiPartition&) {
            return check({h.factors()[0]}, h.total());
        },
        [](const JordanType& j, const ClassVector& a) {
            return a.rank == 2 && j.entries.size() == 1 && j.entries[0].rank == 2 &&
                   j.entries[0].degree % 2 == 0;
        },
        [](const JordanType& j, const ClassVector&) {
            return ComponentLabel(HNType({j.entries[0]}), {P({1, 1})});
        }});

    rules.push_back({2, "R2-4",
        [](const HNType& h, const MultiPartition&) {
            return ranks_of(h) == std::vector<long long>{1, 1};
        },
        [](const HNType& h, const MultiPartition&) {
            long long d1 = h.factors()[0].degree, d2 = h.factors()[1].degree;
            return check({{0, d1 - d2}, {1, d2}}, h.total());
        },
        [](const JordanType& j, const ClassVector& a) {
            return a.rank == 2 && j.entries.size() == 2 && j.entries[0].rank == 0 &&
                   j.entries[0].degree > 0 && j.entries[1].rank == 1;
        },
        [](const JordanType& j, const ClassVector&) {
            long long t = j.entries[0].degree, b = j.entries[1].degree;
            return ComponentLabel(HNType({{1, t + b}, {1, b}}), {P({1}), P({1})});
        }});

    // ----- rank 3, alpha = (3,d), torsion-free HN types -----

    rules.push_back({3, "R3-1",
        [](const HNType& h, const MultiPartition& l) {
            return ranks_of(h) == std::vector<long long>{3} &&
                   h.factors()[0].degree % 3 != 0 && l[0] == P({1});
        },
        [](const HNType& h, const MultiPartition&) {
            return check({h.factors()[0]}, h.total());
        },
        [](const JordanType& j, const ClassVector& a) {
            return a.rank == 3 && j.entries.size() == 1 && j.entries[0].rank == 3 &&
                   j.entries[0].degree % 3 != 0;
        },
        [](const JordanType& j, const ClassVector&) {
            return ComponentLabel(HNType({j.entries[0]}), {P({1})});
        }});

    rules.push_back({3, "R3-2",
        [](const HNType& h, const MultiPartition& l) {
            return ranks_of(h) == std::vector<long long>{3} &&
                   h.factors()[0].degree % 3 == 0 && l[0] == P({3});
        },
        [](const HNType& h, const MultiPartition&) {
            return check({{0, 0}, {0, 0}, {1, h.factors()[0].degree / 3}}, h.total());
        },
        [](const JordanType& j, const ClassVector& a) {
            return a.rank == 3 && j.entries.size() == 3 && j.entries[0].is_zero() &&
                   j.entries[1].is_zero() && j.entries[2].rank == 1;
        },
        [](const JordanType& j, const ClassVector&) {
            return ComponentLabel(HNType({{3, 3 * j.entries[2].degree}}), {P({3})});
        }});

    rules.push_back({3, "R3-3",
        [](const HNType& h, const MultiPartition& l) {
            return ranks_of(h) == std::vector<long long>{3} &&
                   h.factors()[0].degree % 3 == 0 && l[0] == P({2, 1});
        },
        [](const HNType& h, const MultiPartition&) {
            long long e = h.factors()[0].degree / 3;
            return check({{1, e}, {1, e}}, h.total());
        },
        [](const JordanType& j, const ClassVector& a) {
            return a.rank == 3 && j.entries.size() == 2 && j.entries[0].rank == 1 &&
                   j.entries[1].rank == 1 && j.entries[0].degree == j.entries[1].degree;
        },
        [](const JordanType& j, const ClassVector&) {
            return ComponentLabel(HNType({{3, 3 * j.entries[0].degree}}), {P({2, 1})});
        }});

    rules.push_back({3, "R3-4",
        [](const HNType& h, const MultiPartition& l) {
            return ranks_of(h) == std::vector<long long>{3} &&
                   h.factors()[0].degree % 3 == 0 && l[0] == P({1, 1, 1});
        },
        [](const HNType& h, const MultiPartition&) {
            return check({h.factors()[0]}, h.total());
        },
        [](const JordanType& j, const ClassVector& a) {
            return a.rank == 3 && j.entries.size() == 1 && j.entries[0].rank == 3 &&
                   j.entries[0].degree % 3 == 0;
        },
        [](const JordanType& j, const ClassVector&) {
            return ComponentLabel(HNType({j.entries[0]}), {P({1, 1, 1})});
        }});

    rules.push_back({3, "R3-5",
        [](const HNType& h, const MultiPartition& l) {
            return ranks_of(h) == std::vector<long long>{1, 2} &&
                   h.factors()[1].degree % 2 != 0 && l[1] == P({1});
        },
        [](const HNType& h, const MultiPartition&) {
            long long d1 = h.factors()[0].degree, d2 = h.factors()[1].degree;
            return check({{1, d2 - d1}, {1, d1}}, h.total());
        },
        [](const JordanType& j, const ClassVector& a) {
            return a.rank == 3 && j.entries.size() == 2 && j.entries[0].rank == 1 &&
                   j.entries[1].rank == 1 &&
                   j.entries[0].degree < j.entries[1].degree &&
                   (j.entries[0].degree + j.entries[1].degree) % 2 != 0;
        },
        [](const JordanType& j, const ClassVector&) {
            long long a = j.entries[0].degree, b = j.entries[1].degree;
            return ComponentLabel(HNType({{1, b}, {2, a + b}}), {P({1}), P({1})});
        }});

    rules.push_back({3, "R3-6",
        [](const HNType& h, const MultiPartition& l) {
            return ranks_of(h) == std::vector<long long>{2, 1} &&
                   h.factors()[0].degree % 2 != 0 && l[0] == P({1});
        },
        [](const HNType& h, const MultiPartition&) {
            long long d1 = h.factors()[0].degree, d2 = h.factors()[1].degree;
            return check({{1, d1 - d2}, {1, d2}}, h.total());
        },
        [](const JordanType& j, const ClassVector& a) {
            return a.rank == 3 && j.entries.size() == 2 && j.entries[0].rank == 1 &&
                   j.entries[1].rank == 1 &&
                   j.entries[0].degree > j.entries[1].degree &&
                   (j.entries[0].degree + j.entries[1].degree) % 2 != 0;
        },
        [](const JordanType& j, const ClassVector&) {
            long long a = j.entries[0].degree, b = j.entries[1].degree;
            return ComponentLabel(HNType({{2, a + b}, {1, b}}), {P({1}), P({1})});
        }});

    rules.push_back({3, "R3-7",
        [](const HNType& h, const MultiPartition& l) {
            return ranks_of(h) == std::vector<long long>{1, 2} &&
                   h.factors()[1].degree % 2 == 0 && l[1] == P({2});
        },
        [](const HNType& h, const MultiPartition&) {
            long long d1 = h.factors()[0].degree, d2 = h.factors()[1].degree;
            return check({{0, d1 - d2 / 2}, {0, 0}, {1, d2 / 2}}, h.total());
        },
        [](const JordanType& j, const ClassVector& a) {
            return a.rank == 3 && j.entries.size() == 3 && j.entries[0].rank == 0 &&
                   j.entries[0].degree > 0 && j.entries[1].is_zero() &&
                   j.entries[2].rank == 1;
        },
        [](const JordanType& j, const ClassVector&) {
            long long x = j.entries[0].degree, y = j.entries[2].degree;
            return ComponentLabel(HNType({{1, x + y}, {2, 2 * y}}), {P({1}), P({2})});
        }});

    rules.push_back({3, "R3-8",
        [](const HNType& h, const MultiPartition& l) {
            return ranks_of(h) == std::vector<long long>{1, 2} &&
                   h.factors()[1].degree % 2 == 0 && l[1] == P({1, 1});
        },
        [](const HNType& h, const MultiPartition&) {
            long long d1 = h.factors()[0].degree, d2 = h.factors()[1].degree;
            return check({{1, d2 - d1}, {1, d1}}, h.total());
        },
        [](const JordanType& j, const ClassVector& a) {
            return a.rank == 3 && j.entries.size() == 2 && j.entries[0].rank == 1 &&
                   j.entries[1].rank == 1 &&
                   j.entries[0].degree < j.entries[1].degree &&
                   (j.entries[0].degree + j.entries[1].degree) % 2 == 0;
        },
        [](const JordanType& j, const ClassVector&) {
            long long a = j.entries[0].degree, b = j.entries[1].degree;
            return ComponentLabel(HNType({{1, b}, {2, a + b}}), {P({1}), P({1, 1})});
        }});

    rules.push_back({3, "R3-9",
        [](const HNType& h, const MultiPartition& l) {
            return ranks_of(h) == std::vector<long long>{2, 1} &&
                   h.factors()[0].degree % 2 == 0 && l[0] == P({2});
        },
        [](const HNType& h, const MultiPartition&) {
            long long d1 = h.factors()[0].degree, d2 = h.factors()[1].degree;
            return check({{0, 0}, {0, d1 / 2 - d2}, {1, d2}}, h.total());
        },
        [](const JordanType& j, const ClassVector& a) {
            return a.rank == 3 && j.entries.size() == 3 && j.entries[0].is_zero() &&
                   j.entries[1].rank == 0 && j.entries[1].degree > 0 &&
                   j.entries[2].rank == 1;
        },
        [](const JordanType& j, const ClassVector&) {
            long long x = j.entries[1].degree, y = j.entries[2].degree;
            return ComponentLabel(HNType({{2, 2 * x + 2 * y}, {1, y}}),
                                  {P({2}), P({1})});
        }});

    rules.push_back({3, "R3-10",
        [](const HNType& h, const MultiPartition& l) {
            return ranks_of(h) == std::vector<long long>{2, 1} &&
                   h.factors()[0].degree % 2 == 0 && l[0] == P({1, 1});
        },
        [](const HNType& h, const MultiPartition&) {
            long long d1 = h.factors()[0].degree, d2 = h.factors()[1].degree;
            return check({{1, d1 - d2}, {1, d2}}, h.total());
        },
        [](const JordanType& j, const ClassVector& a) {
            return a.rank == 3 && j.entries.size() == 2 && j.entries[0].rank == 1 &&
                   j.entries[1].rank == 1 &&
                   j.entries[0].degree > j.entries[1].degree &&
                   (j.entries[0].degree + j.entries[1].degree) % 2 == 0;
        },
        [](const JordanType& j, const ClassVector&) {
            long long a = j.entries[0].degree, b = j.entries[1].degree;
            return ComponentLabel(HNType({{2, a + b}, {1, b}}), {P({1, 1}), P({1})});
        }});

    rules.push_back({3, "R3-11",
        [](const HNType& h, const MultiPartition&) {
            return ranks_of(h) == std::vector<long long>{1, 1, 1};
        },
        [](const HNType& h, const MultiPartition&) {
            long long d1 = h.factors()[0].degree, d2 = h.factors()[1].degree,
                      d3 = h.factors()[2].degree;
            return check({{0, d1 - d2}, {0, d2 - d3}, {1, d3}}, h.total());
        },
        [](const JordanType& j, const ClassVector& a) {
            return a.rank == 3 && j.entries.size() == 3 && j.entries[0].rank == 0 &&
                   j.entries[0].degree > 0 && j.entries[1].rank == 0 &&
                   j.entries[1].degree > 0 && j.entries[2].rank == 1;
        },
        [](const JordanType& j, const ClassVector&) {
            long long x = j.entries[0].degree, y = j.entries[1].degree,
                      z = j.entries[2].degree;
            return ComponentLabel(HNType({{1, x + y + z}, {1, y + z}, {1, z}}),
                                  {P({1}), P({1}), P({1})});
        }});

    return rules;
}

} // namespace

const std::vector<DictRule>& dictionary_rules() {
    static const std::vector<DictRule> rules = build_rules();
    return rules;
}

JordanType hn_to_jordan(const ComponentLabel& c) {
    const ClassVector alpha = c.hn.total();
    const long long r = alpha.rank;
    if (r > 3)
        throw UnsupportedRank("dictionary covers rank <= 3, got " + alpha.str());

    if (r == 0)
        return torsion_jordan(c.lambda[0]);

    if (r == 1) {
        if (c.hn.length() == 1)
            return jordan_validate({c.hn.factors()[0]}, alpha);
        // h = ((0,d1),(1,d2)); splice the torsion multiplicities after a
        // line-bundle head whose degree the mass identity determines.
        const Partition& lam = c.lambda[0];
        long long d2 = c.hn.factors()[1].degree;
        long long msum = lam.length();
        std::vector<ClassVector> entries{{1, d2 - msum}};
        for (int k = 1; k <= lam.parts().front(); ++k)
            entries.push_back({0, lam.multiplicity(k)});
        return jordan_validate(std::move(entries), alpha);
    }

    if (!c.hn.torsion_free())
        throw UnsupportedMixedType("rank 2-3 dictionary needs a torsion-free HN type: " +
                                   c.hn.str());
    for (const auto& rule : dictionary_rules())
        if (rule.rank == r && rule.applies(c.hn, c.lambda))
            return rule.to_jordan(c.hn, c.lambda);
    throw NotInDictionary("no rule matches " + c.str());
}

ComponentLabel jordan_to_hn(const JordanType& j, const ClassVector& alpha) {
    jordan_validate(j.entries, alpha);
    const long long r = alpha.rank;
    if (r > 3)
        throw UnsupportedRank("dictionary covers rank <= 3, got " + alpha.str());

    if (r == 0) {
        std::vector<int> parts;
        for (std::size_t k = j.entries.size(); k > 0; --k)
            parts.insert(parts.end(), j.entries[k - 1].degree, static_cast<int>(k));
        return ComponentLabel(HNType({alpha}), {Partition(std::move(parts))});
    }

    if (r == 1) {
        if (j.entries[0].rank != 1 || !torsion_entries_from(j, 1))
            throw NotInDictionary("rank-1 types have a line-bundle head: " + j.str());
        if (j.entries.size() == 1)
            return ComponentLabel(HNType({j.entries[0]}), {Partition({1})});
        std::vector<int> parts;
        long long msum = 0;
        for (std::size_t k = j.entries.size(); k > 1; --k) {
            parts.insert(parts.end(), j.entries[k - 1].degree, static_cast<int>(k - 1));
            msum += j.entries[k - 1].degree;
        }
        Partition lam(std::move(parts));
        return ComponentLabel(
            HNType({{0, lam.weight()}, {1, j.entries[0].degree + msum}}),
            {lam, Partition({1})});
    }

    for (const auto& rule : dictionary_rules())
        if (rule.rank == r && rule.inverse_applies(j, alpha))
            return rule.from_jordan(j, alpha);
    throw NotInDictionary("no rule matches " + j.str() + " for " + alpha.str());
}

std::vector<ClassVector> generic_torsion_part(const JordanType& j) {
    std::size_t r = 0;
    for (std::size_t k = 0; k < j.entries.size(); ++k)
        if (j.entries[k].rank > 0)
            r = k + 1;
    return {j.entries.begin() + r, j.entries.end()};
}

} // namespace nilcone
