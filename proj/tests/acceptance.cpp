// Acceptance harness: one line per criterion, PASS or FAIL, nonzero exit if
// any criterion fails.  argv[1] is the path to the CLI binary (criterion 9).

#include <array>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <numeric>

#include "nilcone/jordan.hpp"
#include "nilcone/kostka.hpp"
#include "nilcone/serialize.hpp"
#include "nilcone/xi.hpp"
#include "oracles.hpp"

using namespace nilcone;

namespace {

int failures = 0;

void report(int n, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what;
    if (!ok && !detail.empty())
        std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok)
        ++failures;
}

template <typename F>
void criterion(int n, const std::string& what, F&& body) {
    try {
        std::string detail;
        bool ok = body(detail);
        report(n, what, ok, detail);
    } catch (const std::exception& e) {
        report(n, what, false, std::string("exception: ") + e.what());
    }
}

bool c1_kostka(std::string& detail) {
    for (int d = 1; d <= 8; ++d) {
        IntegerMatrix m = kostka_matrix(d);
        if (!m.is_lower_unitriangular()) {
            detail = "not unitriangular at d=" + std::to_string(d);
            return false;
        }
        if (!m.multiply(invert_unitriangular(m)).is_identity()) {
            detail = "inverse failed at d=" + std::to_string(d);
            return false;
        }
        auto ps = partitions_of(d);
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = 0; j < ps.size(); ++j)
                if (m.at(i, j) != oracle::ssyt_count(ps[i], ps[j])) {
                    detail = "oracle mismatch at d=" + std::to_string(d) + " (" +
                             ps[i].str() + "," + ps[j].str() + ")";
                    return false;
                }
    }
    return true;
}

bool c2_cc_blocks(std::string& detail) {
    for (long long r = 0; r <= 3; ++r)
        for (long long d = -4; d <= 4; ++d) {
            if (!ClassVector{r, d}.in_positive_cone())
                continue;
            for (const auto& h : enumerate_hn({r, d}, 4)) {
                CCBlock b = cc_block(h);
                if (!b.matrix.is_lower_unitriangular()) {
                    detail = "block of " + h.str() + " not unitriangular";
                    return false;
                }
                for (std::size_t i = 0; i < b.matrix.size(); ++i)
                    for (std::size_t j = 0; j < b.matrix.size(); ++j) {
                        Int prod = 1;
                        for (std::size_t f = 0; f < h.length(); ++f)
                            prod *= kostka(b.labels[i][f], b.labels[j][f]);
                        if (b.matrix.at(i, j) != prod) {
                            detail = "entry mismatch in block of " + h.str();
                            return false;
                        }
                    }
            }
        }
    return true;
}

bool c3_hn_oracle(std::string& detail) {
    for (long long r = 1; r <= 4; ++r)
        for (long long d = -6; d <= 6; ++d) {
            auto oracle6 = oracle::hn_search({r, d}, 6);
            for (long long c = 0; c <= 6; ++c) {
                std::vector<HNType> expect;
                for (const auto& h : oracle6)
                    if (stratum_codim(h) <= c)
                        expect.push_back(h);
                auto got = enumerate_hn({r, d}, c);
                if (c == 0 &&
                    got != std::vector<HNType>{HNType({{r, d}})}) {
                    detail = "codim-0 set wrong for " + ClassVector{r, d}.str();
                    return false;
                }
                std::sort(got.begin(), got.end());
                if (got != expect) {
                    detail = "mismatch for " + ClassVector{r, d}.str() +
                             " at codim " + std::to_string(c);
                    return false;
                }
            }
        }
    return true;
}

bool c4_codim_one(std::string& detail) {
    for (long long r = 1; r <= 6; ++r)
        for (long long d = -12; d <= 12; ++d) {
            ClassVector a{r, d};
            auto h = codim_one_stratum(a, 1);
            bool coprime = std::gcd(r, d < 0 ? -d : d) == 1;
            if (h.has_value() != coprime) {
                detail = "existence wrong for " + a.str();
                return false;
            }
            if (h) {
                const auto& f = h->factors();
                if (stratum_codim(*h) != 1 || h->total() != a ||
                    f.size() != 2 || r * f[0].degree - f[0].rank * d != 1 ||
                    f[0].rank < 0 || f[0].rank >= r) {
                    detail = "Bezout recipe violated for " + a.str();
                    return false;
                }
            }
            auto g2 = codim_one_stratum(a, 2);
            if (r == 1) {
                if (g2 != HNType({{0, 1}, {1, d - 1}})) {
                    detail = "genus-2 value wrong for " + a.str();
                    return false;
                }
            } else if (g2.has_value()) {
                detail = "genus-2 stratum should be absent for " + a.str();
                return false;
            }
        }
    return true;
}

bool c5_component_counts(std::string& detail) {
    for (int d = 1; d <= 10; ++d)
        if (enumerate_components({0, d}, 0).size() != partition_count(d)) {
            detail = "torsion count wrong at d=" + std::to_string(d);
            return false;
        }
    for (long long r = 1; r <= 3; ++r)
        for (long long d = -4; d <= 4; ++d) {
            auto comps = enumerate_components({r, d}, 4);
            std::map<std::string, std::size_t> per;
            for (const auto& c : comps)
                ++per[c.hn.str()];
            for (const auto& h : enumerate_hn({r, d}, 4)) {
                std::size_t prod = 1;
                for (const auto& f : h.factors())
                    prod *= partition_count(static_cast<int>(f.gcd()));
                if (per[h.str()] != prod) {
                    detail = "per-stratum count wrong at " + h.str();
                    return false;
                }
            }
        }
    return true;
}

bool c6_dimensions(std::string& detail) {
    std::mt19937 rng(987654321);
    std::vector<HNType> pool;
    for (long long r = 0; r <= 3; ++r)
        for (long long d = -5; d <= 5; ++d) {
            if (!ClassVector{r, d}.in_positive_cone())
                continue;
            for (auto& h : enumerate_hn({r, d}, 5)) {
                bool small = true;
                for (const auto& f : h.factors())
                    small = small && f.gcd() <= 5;
                if (small)
                    pool.push_back(std::move(h));
            }
        }
    for (int trial = 0; trial < 1000; ++trial) {
        const HNType& h = pool[rng() % pool.size()];
        XiTuple xi;
        bool allRegular = true;
        for (const auto& f : h.factors()) {
            auto choices = enumerate_xi_functions(static_cast<int>(f.gcd()));
            xi.push_back(choices[rng() % choices.size()]);
            allRegular = allRegular && xi.back().regular();
        }
        long long n = dim_nilcone_stratum(h, xi);
        if (n > 0 || (n == 0) != allRegular) {
            detail = "nonpositivity/regularity failed at " + h.str();
            return false;
        }
        if (dim_hn_stratum(h, xi) + dim_fiber(h, xi) != n) {
            detail = "consistency identity failed at " + h.str();
            return false;
        }
    }
    return true;
}

bool c7_dictionary(std::string& detail) {
    std::vector<ComponentLabel> domain;
    for (int d = 1; d <= 8; ++d)
        for (const auto& p : partitions_of(d))
            domain.emplace_back(HNType({{0, d}}), MultiPartition{p});
    for (long long d = -8; d <= 8; ++d) {
        domain.emplace_back(HNType({{1, d}}), MultiPartition{Partition({1})});
        for (long long t = 1; t <= 8; ++t)
            for (const auto& p : partitions_of(static_cast<int>(t)))
                domain.emplace_back(HNType({{0, t}, {1, d}}),
                                    MultiPartition{p, Partition({1})});
    }
    for (long long r = 2; r <= 3; ++r)
        for (long long d = -8; d <= 8; ++d)
            for (const auto& h : enumerate_hn({r, d}, 8)) {
                if (!h.torsion_free())
                    continue;
                bool small = true;
                for (const auto& f : h.factors())
                    small = small && f.degree >= -8 && f.degree <= 8;
                if (!small)
                    continue;
                std::vector<std::vector<Partition>> choices;
                for (const auto& f : h.factors())
                    choices.push_back(partitions_of(static_cast<int>(f.gcd())));
                std::vector<std::size_t> idx(choices.size(), 0);
                while (true) {
                    MultiPartition mp;
                    for (std::size_t i = 0; i < choices.size(); ++i)
                        mp.push_back(choices[i][idx[i]]);
                    domain.emplace_back(h, std::move(mp));
                    std::size_t i = choices.size();
                    while (i > 0 && ++idx[i - 1] == choices[i - 1].size())
                        idx[--i] = 0;
                    if (i == 0)
                        break;
                }
            }

    // spot golden rows straight from the tables
    struct Row {
        ComponentLabel c;
        JordanType j;
    };
    std::vector<Row> golden;
    golden.push_back({ComponentLabel(HNType({{2, 6}}), {Partition({2})}),
                      JordanType{{{0, 0}, {1, 3}}}});
    golden.push_back({ComponentLabel(HNType({{1, 4}, {2, 6}}),
                                     {Partition({1}), Partition({2})}),
                      JordanType{{{0, 1}, {0, 0}, {1, 3}}}});
    golden.push_back(
        {ComponentLabel(HNType({{3, 3}}), {Partition({2, 1})}),
         JordanType{{{1, 1}, {1, 1}}}});
    for (const auto& g : golden)
        if (hn_to_jordan(g.c) != g.j) {
            detail = "golden row failed at " + g.c.str();
            return false;
        }

    std::set<std::pair<ClassVector, JordanType>> seen;
    for (const auto& c : domain) {
        ClassVector alpha = c.hn.total();
        JordanType j = hn_to_jordan(c);
        jordan_validate(j.entries, alpha); // throws on mass violation
        if (!seen.emplace(alpha, j).second) {
            detail = "not injective at " + c.str();
            return false;
        }
        ComponentLabel back = jordan_to_hn(j, alpha);
        if (!(back.hn == c.hn && back.lambda == c.lambda)) {
            detail = "round trip failed at " + c.str();
            return false;
        }
    }
    return true;
}

bool c8_orders(std::string& detail) {
    for (long long r = 1; r <= 3; ++r)
        for (long long d = -4; d <= 4; ++d) {
            auto strata = enumerate_hn({r, d}, 5);
            for (const auto& x : strata)
                for (const auto& y : strata) {
                    bool xy = stratum_leq(x, y), yx = stratum_leq(y, x);
                    if (x == y && !xy) {
                        detail = "not reflexive";
                        return false;
                    }
                    if (xy && yx && !(x == y)) {
                        detail = "not antisymmetric";
                        return false;
                    }
                    if (!xy)
                        continue;
                    for (const auto& z : strata)
                        if (stratum_leq(y, z) && !stratum_leq(x, z)) {
                            detail = "not transitive";
                            return false;
                        }
                }
        }
    for (long long d = -3; d <= 3; ++d) {
        auto comps = enumerate_components({2, d}, 4);
        for (const auto& x : comps)
            for (const auto& y : comps) {
                bool xy = component_leq(x, y), yx = component_leq(y, x);
                if (x == y && !xy) {
                    detail = "components not reflexive";
                    return false;
                }
                if (xy && yx && !(x == y)) {
                    detail = "components not antisymmetric";
                    return false;
                }
                if (!xy)
                    continue;
                for (const auto& z : comps)
                    if (component_leq(y, z) && !component_leq(x, z)) {
                        detail = "components not transitive";
                        return false;
                    }
            }
    }
    std::vector<UnimodularMatrix> gammas{{1, 0, 1, 1}, {1, 0, -1, 1}, {2, 1, 1, 1}};
    for (long long r = 1; r <= 3; ++r)
        for (long long d = -3; d <= 3; ++d) {
            auto strata = enumerate_hn({r, d}, 5);
            for (const auto& g : gammas)
                for (const auto& a : strata) {
                    auto ta = sl2_transport(g, a);
                    if (!ta)
                        continue;
                    if (stratum_codim(*ta) != stratum_codim(a)) {
                        detail = "codim not preserved at " + a.str();
                        return false;
                    }
                    for (const auto& b : strata) {
                        auto tb = sl2_transport(g, b);
                        if (tb && stratum_leq(a, b) != stratum_leq(*ta, *tb)) {
                            detail = "order not preserved at " + a.str() + "," + b.str();
                            return false;
                        }
                    }
                }
        }
    return true;
}

std::string run_cli(const std::string& cmd, int& status) {
    std::array<char, 4096> buf;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    status = pclose(pipe);
    return out;
}

bool c9_cli(const std::string& cli, std::string& detail) {
    std::vector<std::string> cmds = {
        " components --alpha 0,5 --max-codim 0 --format json",
        " kostka --degree 2 --format csv",
        " dict --to-hn --jordan \"[[0,0],[1,3]]\" --alpha 2,6 --format json",
    };
    for (const auto& c : cmds) {
        int s1 = 0, s2 = 0, s3 = 0;
        std::string a = run_cli(cli + c, s1);
        std::string b = run_cli(cli + c, s2);
        std::string t = run_cli(cli + c + " --threads 4", s3);
        if (s1 != 0 || s2 != 0 || s3 != 0) {
            detail = "nonzero exit for" + c;
            return false;
        }
        if (a != b || a != t) {
            detail = "output not byte-identical for" + c;
            return false;
        }
        if (a.empty()) {
            detail = "empty output for" + c;
            return false;
        }
    }
    int s = 0;
    json comps = parse_json(run_cli(cli + cmds[0], s));
    if (!comps.is_array() || comps.size() != 7) {
        detail = "expected 7 components for (0,5)";
        return false;
    }
    std::string kcsv = run_cli(cli + cmds[1], s);
    if (kcsv != "(1,1),(2)\n1,0\n1,1\n") {
        detail = "kostka csv mismatch";
        return false;
    }
    json dict = parse_json(run_cli(cli + cmds[2], s));
    if (dict["hn"].dump() != "[[2,6]]" || dict["lambda"].dump() != "[[2]]") {
        detail = "dict output mismatch";
        return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];

    criterion(1, "Kostka suite (d <= 8, SSYT oracle, exact inverse)", c1_kostka);
    criterion(2, "CC blocks equal entrywise Kostka products", c2_cc_blocks);
    criterion(3, "HN enumeration matches the exhaustive oracle", c3_hn_oracle);
    criterion(4, "codimension-one law (Bezout / genus >= 2)", c4_codim_one);
    criterion(5, "component counts (p(d) and per-stratum products)", c5_component_counts);
    criterion(6, "dimension identities on random (h, xi)", c6_dimensions);
    criterion(7, "dictionary golden tables, mass check, round trip", c7_dictionary);
    criterion(8, "order axioms and SL2 invariance", c8_orders);
    criterion(9, "CLI reproducibility (bytes, runs, thread counts)",
              [&](std::string& d) { return c9_cli(cli, d); });

    return failures == 0 ? 0 : 1;
}
