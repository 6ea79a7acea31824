#pragma once

// Brute-force finite group machinery for the exhaustive lemma checks:
// abelian group types, Cayley tables, subgroup enumeration by closure.

#include <bitset>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "oracles.hpp"

namespace groups {

using i64 = std::int64_t;
using Mask = std::bitset<128>;

struct Cayley
{
    std::vector<std::vector<int>> mul;
    std::vector<int> inv;
    int identity = 0;
    int size() const { return static_cast<int>(mul.size()); }
};

/* All abelian groups of order <= n, each once, as lists of prime-power cyclic orders. */
inline std::vector<std::vector<i64>> abelian_types_up_to(i64 n)
{
    std::vector<std::vector<i64>> out;
    /* partitions of each p-exponent; combine over primes */
    std::vector<std::vector<i64>> cur{ {} };
    std::vector<i64> orders{ 1 };
    for (i64 p = 2; p <= n; ++p) {
        bool prime = true;
        for (i64 q = 2; q * q <= p; ++q)
            if (p % q == 0)
                prime = false;
        if (!prime)
            continue;
        std::vector<std::vector<i64>> next;
        std::vector<i64> next_orders;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            /* nonincreasing lists of p-powers with product * orders[i] <= n */
            std::vector<std::pair<std::vector<i64>, i64>> stack{ { {}, orders[i] } };
            while (!stack.empty()) {
                auto [lst, ord] = stack.back();
                stack.pop_back();
                std::vector<i64> full = cur[i];
                full.insert(full.end(), lst.begin(), lst.end());
                next.push_back(full);
                next_orders.push_back(ord);
                i64 cap = lst.empty() ? n : lst.back();
                for (i64 q = p; q <= cap && ord * q <= n; q *= p) {
                    auto l2 = lst;
                    l2.push_back(q);
                    stack.push_back({ l2, ord * q });
                }
            }
        }
        cur = std::move(next);
        orders = std::move(next_orders);
    }
    for (auto & c : cur)
        if (!c.empty())
            out.push_back(c);
    out.push_back({}); /* trivial group */
    return out;
}

inline Cayley abelian_table(oracle::AbGroup const & g)
{
    int n = static_cast<int>(g.order());
    Cayley t;
    t.mul.assign(n, std::vector<int>(n));
    t.inv.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            t.mul[a][b] = static_cast<int>(g.add(a, b));
        t.inv[a] = static_cast<int>(g.scale(a, -1));
    }
    t.identity = 0;
    return t;
}

/* H x| Z/2 with the flip acting by inversion; element (h, s) has index 2h + s. */
inline Cayley dihedral_table(oracle::AbGroup const & h)
{
    int m = static_cast<int>(h.order());
    int n = 2 * m;
    Cayley t;
    t.mul.assign(n, std::vector<int>(n));
    t.inv.assign(n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int h1 = x / 2, s1 = x % 2, h2 = y / 2, s2 = y % 2;
            i64 h2t = s1 ? h.scale(h2, -1) : h2;
            t.mul[x][y] = static_cast<int>(2 * h.add(h1, h2t) + ((s1 + s2) % 2));
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (t.mul[x][y] == 0)
                t.inv[x] = y;
    t.identity = 0;
    return t;
}

struct Sub
{
    Mask members;
    std::vector<int> gens;
};

inline Mask closure(Cayley const & t, std::vector<int> const & gens)
{
    Mask in;
    std::vector<int> list{ t.identity };
    in.set(t.identity);
    for (std::size_t k = 0; k < list.size(); ++k)
        for (int s : gens) {
            int y = t.mul[list[k]][s];
            if (!in.test(y)) {
                in.set(y);
                list.push_back(y);
            }
        }
    return in;
}

/* Every subgroup, reached by adding one generator at a time. */
inline std::vector<Sub> subgroups(Cayley const & t)
{
    struct Less
    {
        bool operator()(Mask const & a, Mask const & b) const
        {
            for (int i = 127; i >= 0; --i)
                if (a[i] != b[i])
                    return b[i];
            return false;
        }
    };
    std::set<Mask, Less> seen;
    std::vector<Sub> out;
    Sub triv{ closure(t, {}), {} };
    seen.insert(triv.members);
    out.push_back(triv);
    for (std::size_t q = 0; q < out.size(); ++q) {
        Sub cur = out[q];
        for (int x = 0; x < t.size(); ++x) {
            if (cur.members.test(x))
                continue;
            auto g = cur.gens;
            g.push_back(x);
            Mask m = closure(t, g);
            if (seen.insert(m).second)
                out.push_back({ m, g });
        }
    }
    return out;
}

inline bool is_normal_with_abelian_quotient(Cayley const & t, Mask const & h0)
{
    int n = t.size();
    for (int x = 0; x < n; ++x)
        for (int h = 0; h < n; ++h)
            if (h0.test(h) && !h0.test(t.mul[t.mul[x][h]][t.inv[x]]))
                return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int comm = t.mul[t.mul[x][y]][t.inv[t.mul[y][x]]];
            if (!h0.test(comm))
                return false;
        }
    return true;
}

} // namespace groups
