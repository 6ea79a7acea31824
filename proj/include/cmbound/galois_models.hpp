#pragma once

/*
 * Finite group models of the Galois groups that show up around ring class
 * fields: finite abelian groups given by cyclic factors, their subgroups
 * and quotients, generalized dihedral extensions H x| Z/2 with the flip
 * acting by inversion, and the annihilator arithmetic built on top.
 *
 * No number field arithmetic happens here. Galois groups are represented
 * by abstract finite groups with the same lattice of subgroups.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "arith.hpp"
#include "error.hpp"
#include "quadform.hpp"

namespace cmbound {

using IntMatrix = std::vector<std::vector<i64>>;

/*
 * Invariant factors (d1 | d2 | ..., all > 1) of a finite abelian group
 * given as a product of cyclic groups of the listed orders.
 */
inline std::vector<i64> invariant_factors(std::vector<i64> const & cyclic_orders)
{
    std::map<i64, std::vector<i64>> by_prime; /* prime -> list of prime powers */
    for (i64 m : cyclic_orders) {
        if (m < 1)
            throw invalid_argument("cyclic order must be positive");
        for (auto const & pp : factor(m)) {
            i64 q = 1;
            for (int i = 0; i < pp.e; ++i)
                q *= pp.p;
            by_prime[pp.p].push_back(q);
        }
    }
    std::size_t rank = 0;
    for (auto & [p, v] : by_prime) {
        std::sort(v.begin(), v.end(), std::greater<>());
        rank = std::max(rank, v.size());
    }
    std::vector<i64> out(rank, 1);
    for (auto const & [p, v] : by_prime)
        for (std::size_t i = 0; i < v.size(); ++i)
            out[rank - 1 - i] *= v[i];
    return out;
}

/*
 * Diagonal of a Smith-type diagonalization of an integer matrix (rows =
 * generators of Z^n, columns = relations). Returns the n diagonal entries,
 * zero where the row has no relation left.
 */
inline std::vector<i64> smith_diagonal(IntMatrix m)
{
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::vector<i64> diag;
    auto abs64 = [](i64 x) { return x < 0 ? -x : x; };

    for (std::size_t t = 0; t < rows; ++t) {
        for (;;) {
            /* pivot: smallest nonzero entry in the remaining block */
            std::size_t pr = rows, pc = cols;
            i64 best = 0;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (m[i][j] != 0 && (best == 0 || abs64(m[i][j]) < best)) {
                        best = abs64(m[i][j]);
                        pr = i;
                        pc = j;
                    }
            if (best == 0) {
                diag.push_back(0);
                break;
            }
            std::swap(m[t], m[pr]);
            if (pc != t)
                for (auto & row : m)
                    std::swap(row[t], row[pc]);

            bool clean = true;
            i64 piv = m[t][t];
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0)
                    continue;
                i64 q = m[i][t] / piv;
                for (std::size_t j = t; j < cols; ++j)
                    m[i][j] -= q * m[t][j];
                if (m[i][t] != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0)
                    continue;
                i64 q = m[t][j] / piv;
                for (std::size_t i = t; i < rows; ++i)
                    m[i][j] -= q * m[i][t];
                if (m[t][j] != 0)
                    clean = false;
            }
            if (clean) {
                diag.push_back(abs64(piv));
                break;
            }
        }
        if (diag.back() == 0) {
            /* remaining rows are all free */
            while (diag.size() < rows)
                diag.push_back(0);
            break;
        }
    }
    return diag;
}

/* Finite abelian group Z/m_1 x ... x Z/m_k. Elements are residue tuples. */
class FinAbGroup
{
    std::vector<i64> moduli_;
    std::vector<i64> invariants_;
    i64 order_ = 1;

  public:
    using element = std::vector<i64>;

    FinAbGroup() = default;

    explicit FinAbGroup(std::vector<i64> cyclic_orders)
        : moduli_(std::move(cyclic_orders))
    {
        for (i64 m : moduli_) {
            if (m < 1)
                throw invalid_argument("cyclic order must be positive");
            order_ *= m;
        }
        invariants_ = invariant_factors(moduli_);
    }

    std::vector<i64> const & moduli() const noexcept { return moduli_; }
    std::size_t rank() const noexcept { return moduli_.size(); }

    /* Canonical d1 | d2 | ... ; empty for the trivial group. */
    std::vector<i64> const & elementary_divisors() const noexcept { return invariants_; }
    i64 order() const noexcept { return order_; }
    i64 exponent() const noexcept { return invariants_.empty() ? 1 : invariants_.back(); }

    bool is_isomorphic(FinAbGroup const & o) const { return invariants_ == o.invariants_; }

    element zero() const { return element(moduli_.size(), 0); }

    element add(element const & x, element const & y) const
    {
        element z(moduli_.size());
        for (std::size_t i = 0; i < z.size(); ++i)
            z[i] = mod_floor(x[i] + y[i], moduli_[i]);
        return z;
    }

    element neg(element const & x) const
    {
        element z(moduli_.size());
        for (std::size_t i = 0; i < z.size(); ++i)
            z[i] = mod_floor(-x[i], moduli_[i]);
        return z;
    }

    element scale(element const & x, i64 n) const
    {
        element z(moduli_.size());
        for (std::size_t i = 0; i < z.size(); ++i)
            z[i] = mod_floor(static_cast<i64>((static_cast<i128>(x[i]) * n) % moduli_[i]), moduli_[i]);
        return z;
    }

    element normalize(element x) const
    {
        if (x.size() != moduli_.size())
            throw invalid_argument("element has wrong rank");
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] = mod_floor(x[i], moduli_[i]);
        return x;
    }

    /* mixed-radix index in [0, order) */
    i64 index(element const & x) const
    {
        i64 idx = 0;
        for (std::size_t i = 0; i < moduli_.size(); ++i)
            idx = idx * moduli_[i] + mod_floor(x[i], moduli_[i]);
        return idx;
    }

    element at(i64 idx) const
    {
        element x(moduli_.size());
        for (std::size_t i = moduli_.size(); i-- > 0;) {
            x[i] = idx % moduli_[i];
            idx /= moduli_[i];
        }
        return x;
    }

    i64 element_order(element const & x) const
    {
        i64 o = 1;
        for (std::size_t i = 0; i < x.size(); ++i)
            o = std::lcm(o, moduli_[i] / std::gcd(mod_floor(x[i], moduli_[i]), moduli_[i]));
        return o;
    }
};

/* A subgroup of a FinAbGroup, stored as generators plus its sorted element indices. */
class Subgroup
{
    std::vector<FinAbGroup::element> gens_;
    std::vector<i64> members_;

  public:
    Subgroup() = default;
    Subgroup(std::vector<FinAbGroup::element> gens, std::vector<i64> members)
        : gens_(std::move(gens))
        , members_(std::move(members))
    {
    }

    std::vector<FinAbGroup::element> const & generators() const noexcept { return gens_; }
    std::vector<i64> const & members() const noexcept { return members_; }
    i64 order() const noexcept { return static_cast<i64>(members_.size()); }
    bool contains_index(i64 idx) const { return std::binary_search(members_.begin(), members_.end(), idx); }

    bool operator==(Subgroup const & o) const { return members_ == o.members_; }
};

inline Subgroup subgroup_generated(FinAbGroup const & g, std::vector<FinAbGroup::element> gens)
{
    for (auto & x : gens)
        x = g.normalize(x);
    std::set<i64> seen{ g.index(g.zero()) };
    std::vector<FinAbGroup::element> frontier{ g.zero() };
    while (!frontier.empty()) {
        std::vector<FinAbGroup::element> next;
        for (auto const & x : frontier)
            for (auto const & s : gens) {
                auto y = g.add(x, s);
                if (seen.insert(g.index(y)).second)
                    next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    return { std::move(gens), { seen.begin(), seen.end() } };
}

/* Validates that the given elements form a subgroup; throws otherwise. */
inline Subgroup subgroup_from_elements(FinAbGroup const & g, std::vector<FinAbGroup::element> const & elems)
{
    std::set<i64> idx;
    for (auto const & x : elems)
        idx.insert(g.index(g.normalize(x)));
    if (!idx.count(g.index(g.zero())))
        throw invalid_argument("subset does not contain the identity");
    for (i64 i : idx)
        for (i64 j : idx)
            if (!idx.count(g.index(g.add(g.at(i), g.at(j)))))
                throw invalid_argument("subset is not closed under the group law");
    /* minimal-ish generating set: add elements not yet generated */
    std::vector<FinAbGroup::element> gens;
    Subgroup cur = subgroup_generated(g, {});
    for (i64 i : idx) {
        if (cur.contains_index(i))
            continue;
        gens.push_back(g.at(i));
        cur = subgroup_generated(g, gens);
    }
    return cur;
}

inline Subgroup subgroup_sum(FinAbGroup const & g, Subgroup const & a, Subgroup const & b)
{
    auto gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return subgroup_generated(g, gens);
}

inline Subgroup subgroup_intersection(FinAbGroup const & g, Subgroup const & a, Subgroup const & b)
{
    std::vector<FinAbGroup::element> common;
    for (i64 i : a.members())
        if (b.contains_index(i))
            common.push_back(g.at(i));
    return subgroup_from_elements(g, common);
}

/* Columns of the relation matrix presenting the ambient group itself. */
inline void append_ambient_relations(FinAbGroup const & g, IntMatrix & m, std::size_t row_offset)
{
    for (std::size_t i = 0; i < g.rank(); ++i) {
        for (auto & row : m)
            row.push_back(0);
        m[row_offset + i].back() = g.moduli()[i];
    }
}

inline void append_element_column(FinAbGroup::element const & x, IntMatrix & m, std::size_t row_offset)
{
    for (auto & row : m)
        row.push_back(0);
    for (std::size_t i = 0; i < x.size(); ++i)
        m[row_offset + i].back() = x[i];
}

inline FinAbGroup group_from_smith(IntMatrix const & m)
{
    std::vector<i64> cyc;
    for (i64 d : smith_diagonal(m)) {
        if (d == 0)
            throw invalid_argument("presentation defines an infinite group");
        if (d > 1)
            cyc.push_back(d);
    }
    return FinAbGroup(invariant_factors(cyc));
}

/* G / H, computed from the presentation Z^k / (moduli, generators of H). */
inline FinAbGroup quotient(FinAbGroup const & g, Subgroup const & h)
{
    IntMatrix m(g.rank());
    append_ambient_relations(g, m, 0);
    for (auto const & x : h.generators())
        append_element_column(x, m, 0);
    if (g.rank() == 0)
        return FinAbGroup{};
    return group_from_smith(m);
}

/*
 * Cokernel of Psi: G0 -> G0/H1 x G0/H2, g -> (g H1, g H2), computed from the
 * presentation Z^(2k) / (relations of both quotients, Psi(basis)).
 * It is isomorphic to G0/(H1 H2); the two sides use different presentations.
 */
inline FinAbGroup cokernel_of_restriction(FinAbGroup const & g0, Subgroup const & h1, Subgroup const & h2)
{
    auto check = [&](Subgroup const & h) {
        for (auto const & x : h.generators())
            if (x.size() != g0.rank())
                throw invalid_argument("subgroup generator has wrong rank");
        for (i64 i : h.members())
            if (i < 0 || i >= g0.order())
                throw invalid_argument("subgroup element outside the ambient group");
    };
    check(h1);
    check(h2);
    std::size_t k = g0.rank();
    if (k == 0)
        return FinAbGroup{};
    IntMatrix m(2 * k);
    append_ambient_relations(g0, m, 0);
    append_ambient_relations(g0, m, k);
    for (auto const & x : h1.generators())
        append_element_column(x, m, 0);
    for (auto const & x : h2.generators())
        append_element_column(x, m, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (auto & row : m)
            row.push_back(0);
        m[i].back() = 1;
        m[k + i].back() = 1;
    }
    return group_from_smith(m);
}

/* Named subgroups of one ambient group, closed under the sums and
 * intersections requested through it. */
class SubgroupLattice
{
    FinAbGroup ambient_;
    std::map<std::string, Subgroup> named_;

  public:
    explicit SubgroupLattice(FinAbGroup ambient)
        : ambient_(std::move(ambient))
    {
        named_["0"] = subgroup_generated(ambient_, {});
        std::vector<FinAbGroup::element> basis;
        for (std::size_t i = 0; i < ambient_.rank(); ++i) {
            auto e = ambient_.zero();
            e[i] = 1;
            basis.push_back(e);
        }
        named_["G"] = subgroup_generated(ambient_, basis);
    }

    FinAbGroup const & ambient() const noexcept { return ambient_; }

    Subgroup const & add(std::string const & name, Subgroup s)
    {
        return named_[name] = std::move(s);
    }

    Subgroup const & get(std::string const & name) const
    {
        auto it = named_.find(name);
        if (it == named_.end())
            throw invalid_argument("no subgroup named " + name);
        return it->second;
    }

    Subgroup const & sum(std::string const & a, std::string const & b, std::string const & name)
    {
        return add(name, subgroup_sum(ambient_, get(a), get(b)));
    }

    Subgroup const & intersection(std::string const & a, std::string const & b, std::string const & name)
    {
        return add(name, subgroup_intersection(ambient_, get(a), get(b)));
    }

    /* inclusion a <= b */
    bool includes(std::string const & a, std::string const & b) const
    {
        auto const & sa = get(a);
        auto const & sb = get(b);
        return std::all_of(sa.members().begin(), sa.members().end(),
                           [&](i64 i) { return sb.contains_index(i); });
    }

    FinAbGroup quotient(std::string const & name) const { return cmbound::quotient(ambient_, get(name)); }
};

/*
 * Generalized dihedral group H x| Z/2, the flip acting on H by inversion.
 * Element (h, s) has index 2 * index(h) + s; H is the index-2 subgroup s = 0.
 */
class GenDihedralGroup
{
    FinAbGroup base_;

  public:
    struct element
    {
        FinAbGroup::element h;
        int flip = 0;
        bool operator==(element const &) const = default;
    };

    explicit GenDihedralGroup(FinAbGroup base)
        : base_(std::move(base))
    {
    }

    FinAbGroup const & base() const noexcept { return base_; }
    i64 order() const noexcept { return 2 * base_.order(); }

    element identity() const { return { base_.zero(), 0 }; }

    /* (h1, s1)(h2, s2) = (h1 + (-1)^s1 h2, s1 + s2) */
    element mul(element const & x, element const & y) const
    {
        auto h2 = x.flip ? base_.neg(y.h) : y.h;
        return { base_.add(x.h, h2), x.flip ^ y.flip };
    }

    element inv(element const & x) const
    {
        if (x.flip)
            return x;
        return { base_.neg(x.h), 0 };
    }

    i64 index(element const & x) const { return 2 * base_.index(x.h) + x.flip; }
    element at(i64 idx) const { return { base_.at(idx / 2), static_cast<int>(idx % 2) }; }

    /* Cayley table by index */
    std::vector<std::vector<i64>> table() const
    {
        i64 n = order();
        std::vector<element> elems;
        for (i64 i = 0; i < n; ++i)
            elems.push_back(at(i));
        std::vector<std::vector<i64>> t(static_cast<std::size_t>(n), std::vector<i64>(static_cast<std::size_t>(n)));
        for (i64 i = 0; i < n; ++i)
            for (i64 j = 0; j < n; ++j)
                t[i][j] = index(mul(elems[i], elems[j]));
        return t;
    }

    bool is_abelian() const
    {
        auto t = table();
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (t[i][j] != t[j][i])
                    return false;
        return true;
    }
};

inline GenDihedralGroup gen_dihedral(FinAbGroup const & h)
{
    return GenDihedralGroup(h);
}

/*
 * e(H / (H cap H0)) for a normal subgroup H0 of gen_dihedral(H) with
 * abelian quotient, given as a set of element indices. Throws when H0 is
 * not a normal subgroup or G/H0 is not abelian.
 */
inline i64 dihedral_quotient_exponent(FinAbGroup const & h, std::vector<i64> const & h0_indices)
{
    GenDihedralGroup g(h);
    i64 n = g.order();
    std::vector<char> in_h0(static_cast<std::size_t>(n), 0);
    for (i64 i : h0_indices) {
        if (i < 0 || i >= n)
            throw invalid_argument("H0 element index out of range");
        in_h0[i] = 1;
    }
    auto t = g.table();
    if (!in_h0[g.index(g.identity())])
        throw invalid_argument("H0 does not contain the identity");
    for (i64 i = 0; i < n; ++i) {
        if (!in_h0[i])
            continue;
        for (i64 j = 0; j < n; ++j)
            if (in_h0[j] && !in_h0[t[i][j]])
                throw invalid_argument("H0 is not closed under multiplication");
    }
    std::vector<i64> inv(static_cast<std::size_t>(n));
    for (i64 i = 0; i < n; ++i)
        inv[i] = g.index(g.inv(g.at(i)));
    for (i64 x = 0; x < n; ++x)
        for (i64 i = 0; i < n; ++i)
            if (in_h0[i] && !in_h0[t[t[x][i]][inv[x]]])
                throw invalid_argument("H0 is not normal");
    /* G/H0 abelian iff every commutator lies in H0 */
    for (i64 x = 0; x < n; ++x)
        for (i64 y = 0; y < n; ++y)
            if (!in_h0[t[t[x][y]][inv[t[y][x]]]])
                throw invalid_argument("G/H0 is not abelian");

    i64 e = 1;
    for (i64 hi = 0; hi < h.order(); ++hi) {
        auto x = h.at(hi);
        i64 k = 1;
        auto acc = x;
        while (!in_h0[g.index({ acc, 0 })]) {
            acc = h.add(acc, x);
            ++k;
        }
        e = std::lcm(e, k);
    }
    return e;
}

/*
 * Annihilator from the intersection theorem:
 *   exponent_term * lcm_{i != j} [K : K_i][K_j : k].
 */
inline i64 theorem1_annihilator(std::vector<i64> const & deg_k_over_ki, std::vector<i64> const & deg_kj_over_base,
                                i64 exponent_term)
{
    std::size_t r = deg_k_over_ki.size();
    if (r < 2)
        throw invalid_argument("need at least two fields");
    if (deg_kj_over_base.size() != r)
        throw invalid_argument("degree lists must have equal length");
    if (exponent_term < 1)
        throw invalid_argument("exponent term must be positive");
    i64 l = 1;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            if (i == j)
                continue;
            if (deg_k_over_ki[i] < 1 || deg_kj_over_base[j] < 1)
                throw invalid_argument("degrees must be positive");
            l = std::lcm(l, deg_k_over_ki[i] * deg_kj_over_base[j]);
        }
    }
    return exponent_term * l;
}

/*
 * CM composite setting: K is the compositum of r quadratic extensions of
 * the totally real base, so [K : K_i] = 2^(r-1), [K_j : F] = 2 and the
 * exponent term is 1, giving 2^r. The generalized dihedral structure
 * contributes one more factor 2.
 */
inline i64 corollary2_annihilator(int r)
{
    if (r < 2)
        throw invalid_argument("corollary2_annihilator: r must be >= 2");
    if (r > 60)
        throw invalid_argument("corollary2_annihilator: r too large for 64-bit result");
    std::vector<i64> deg_k_over_ki(static_cast<std::size_t>(r), i64{ 1 } << (r - 1));
    std::vector<i64> deg_kj(static_cast<std::size_t>(r), 2);
    return 2 * theorem1_annihilator(deg_k_over_ki, deg_kj, 1);
}

/* Gal(K[O]/Q) modeled as Pic(O) x| Z/2. */
inline GenDihedralGroup ring_class_galois_model(Discriminant const & d)
{
    auto cg = class_group(d);
    return gen_dihedral(FinAbGroup(cg.elementary_divisors));
}

/*
 * All subgroups of a finite group given by its Cayley table (identity at
 * index `identity`). Meant for exhaustive checks on small groups.
 */
inline std::vector<std::vector<char>> all_subgroups(std::vector<std::vector<i64>> const & table, i64 identity)
{
    std::size_t n = table.size();
    auto closure = [&](std::vector<i64> const & gens) {
        std::vector<char> in(n, 0);
        std::vector<i64> list{ identity };
        in[identity] = 1;
        for (std::size_t k = 0; k < list.size(); ++k)
            for (i64 s : gens) {
                i64 y = table[list[k]][s];
                if (!in[y]) {
                    in[y] = 1;
                    list.push_back(y);
                }
            }
        return in;
    };
    std::set<std::vector<char>> seen;
    std::vector<std::pair<std::vector<char>, std::vector<i64>>> queue;
    auto triv = closure({});
    seen.insert(triv);
    queue.push_back({ triv, {} });
    for (std::size_t q = 0; q < queue.size(); ++q) {
        auto const cur = queue[q];
        for (std::size_t x = 0; x < n; ++x) {
            if (cur.first[x])
                continue;
            auto gens = cur.second;
            gens.push_back(static_cast<i64>(x));
            auto s = closure(gens);
            if (seen.insert(s).second)
                queue.push_back({ std::move(s), std::move(gens) });
        }
    }
    std::vector<std::vector<char>> out;
    out.reserve(queue.size());
    for (auto & e : queue)
        out.push_back(std::move(e.first));
    return out;
}

} // namespace cmbound
