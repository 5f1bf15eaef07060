#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gradex {

struct GroupValidationError : std::invalid_argument {
    std::vector<std::string> violations;
    explicit GroupValidationError(std::vector<std::string> v)
        : std::invalid_argument(v.empty() ? "invalid group" : v.front()),
          violations(std::move(v)) {}
};

/// A finite group as a validated Cayley table. Elements are indices
/// 0..order-1; the table stores products table[a*n + b] = a*b.
class FiniteGroup {
public:
    using Ptr = std::shared_ptr<const FiniteGroup>;

    static Ptr cyclic(int k) {
        check_positive(k);
        std::vector<int> t(static_cast<std::size_t>(k) * k);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) t[a * k + b] = (a + b) % k;
        return finish(std::move(t), "C" + std::to_string(k));
    }

    /// Dihedral group of order 2k: indices 0..k-1 are rotations r^i,
    /// k..2k-1 are reflections s*r^i. dihedral(2) is the Klein four-group.
    static Ptr dihedral(int k) {
        check_positive(k);
        int n = 2 * k;
        std::vector<int> t(static_cast<std::size_t>(n) * n);
        auto idx = [k](bool refl, int rot) { return (refl ? k : 0) + ((rot % k) + k) % k; };
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                bool ar = a >= k, br = b >= k;
                int ai = a % k, bi = b % k;
                // (s^e r^i)(s^f r^j) = s^(e+f) r^(±i+j)
                t[a * n + b] = idx(ar != br, br ? -ai + bi : ai + bi);
            }
        return finish(std::move(t), "D" + std::to_string(k));
    }

    /// Symmetric group on k letters; elements are the permutations of
    /// {0..k-1} in lexicographic order, product = composition a∘b
    /// (apply b first).
    static Ptr symmetric(int k) {
        check_positive(k);
        std::vector<std::vector<int>> perms;
        std::vector<int> p(k);
        std::iota(p.begin(), p.end(), 0);
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        int n = static_cast<int>(perms.size());
        auto find = [&](const std::vector<int>& q) {
            return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) -
                                    perms.begin());
        };
        std::vector<int> t(static_cast<std::size_t>(n) * n);
        std::vector<int> comp(k);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                for (int x = 0; x < k; ++x) comp[x] = perms[a][perms[b][x]];
                t[a * n + b] = find(comp);
            }
        return finish(std::move(t), "S" + std::to_string(k));
    }

    /// Validates an arbitrary Cayley table; collects every violated axiom.
    static Ptr from_table(const std::vector<std::vector<int>>& table) {
        int n = static_cast<int>(table.size());
        std::vector<std::string> bad;
        if (n == 0) bad.push_back("NoIdentity: empty table");
        std::vector<int> flat;
        flat.reserve(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(table[i].size()) != n) {
                bad.push_back("NotLatinSquare: row " + std::to_string(i) + " has wrong length");
                continue;
            }
            for (int j = 0; j < n; ++j) {
                if (table[i][j] < 0 || table[i][j] >= n)
                    bad.push_back("NotLatinSquare: entry out of range at (" + std::to_string(i) +
                                  "," + std::to_string(j) + ")");
                flat.push_back(table[i][j]);
            }
        }
        if (!bad.empty()) throw GroupValidationError(std::move(bad));
        for (int i = 0; i < n; ++i) {
            std::set<int> row, col;
            for (int j = 0; j < n; ++j) {
                row.insert(flat[i * n + j]);
                col.insert(flat[j * n + i]);
            }
            if (static_cast<int>(row.size()) != n)
                bad.push_back("NotLatinSquare: row " + std::to_string(i) + " repeats an entry");
            if (static_cast<int>(col.size()) != n)
                bad.push_back("NotLatinSquare: column " + std::to_string(i) + " repeats an entry");
        }
        int identity = -1;
        for (int e = 0; e < n; ++e) {
            bool ok = true;
            for (int a = 0; a < n; ++a)
                if (flat[e * n + a] != a || flat[a * n + e] != a) {
                    ok = false;
                    break;
                }
            if (ok) {
                identity = e;
                break;
            }
        }
        if (identity < 0) bad.push_back("NoIdentity: no two-sided identity element");
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (flat[flat[a * n + b] * n + c] != flat[a * n + flat[b * n + c]]) {
                        bad.push_back("NotAssociative: (" + std::to_string(a) + "," +
                                      std::to_string(b) + "," + std::to_string(c) + ")");
                        if (bad.size() > 16) {
                            throw GroupValidationError(std::move(bad));
                        }
                    }
        if (!bad.empty()) throw GroupValidationError(std::move(bad));
        return Ptr(new FiniteGroup(std::move(flat), n, identity, "table"));
    }

    int order() const { return n_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    const std::string& name() const { return name_; }
    const std::vector<int>& table() const { return table_; }

    int element_order(int a) const {
        int x = a, k = 1;
        while (x != identity_) {
            x = mul(x, a);
            ++k;
        }
        return k;
    }

    bool is_abelian() const {
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    /// Group exponent: lcm of element orders.
    long exponent() const {
        long e = 1;
        for (int a = 0; a < n_; ++a) e = std::lcm(e, static_cast<long>(element_order(a)));
        return e;
    }

private:
    FiniteGroup(std::vector<int> table, int n, int identity, std::string name)
        : n_(n), identity_(identity), table_(std::move(table)), name_(std::move(name)) {
        inv_.assign(n_, -1);
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                if (mul(a, b) == identity_) inv_[a] = b;
    }

    static void check_positive(int k) {
        if (k < 1) throw std::invalid_argument("group parameter must be >= 1");
    }

    static Ptr finish(std::vector<int> flat, std::string name) {
        int n = 0;
        while (static_cast<std::size_t>(n) * n < flat.size()) ++n;
        return Ptr(new FiniteGroup(std::move(flat), n, 0, std::move(name)));
    }

    int n_;
    int identity_;
    std::vector<int> table_;
    std::vector<int> inv_;
    std::string name_;
};

/// A subgroup as a sorted element-index set; construction verifies closure,
/// identity and inverses.
class Subgroup {
public:
    Subgroup(FiniteGroup::Ptr parent, std::vector<int> elements)
        : parent_(std::move(parent)), elements_(std::move(elements)) {
        std::sort(elements_.begin(), elements_.end());
        elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
        std::set<int> s(elements_.begin(), elements_.end());
        if (!s.count(parent_->identity()))
            throw std::invalid_argument("subgroup does not contain the identity");
        for (int a : elements_) {
            if (!s.count(parent_->inv(a)))
                throw std::invalid_argument("subgroup not closed under inverse");
            for (int b : elements_)
                if (!s.count(parent_->mul(a, b)))
                    throw std::invalid_argument("subgroup not closed under multiplication");
        }
    }

    static Subgroup trivial(FiniteGroup::Ptr g) {
        int e = g->identity();
        return Subgroup(std::move(g), {e});
    }

    static Subgroup whole(FiniteGroup::Ptr g) {
        std::vector<int> all(g->order());
        std::iota(all.begin(), all.end(), 0);
        return Subgroup(std::move(g), std::move(all));
    }

    static Subgroup generated(FiniteGroup::Ptr g, const std::vector<int>& gens) {
        std::set<int> s{g->identity()};
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<int> cur(s.begin(), s.end());
            for (int a : cur)
                for (int x : gens) {
                    if (s.insert(g->mul(a, x)).second) grew = true;
                    if (s.insert(g->mul(x, a)).second) grew = true;
                }
            for (int a : cur)
                for (int b : cur)
                    if (s.insert(g->mul(a, b)).second) grew = true;
        }
        return Subgroup(std::move(g), std::vector<int>(s.begin(), s.end()));
    }

    const FiniteGroup::Ptr& parent() const { return parent_; }
    const std::vector<int>& elements() const { return elements_; }
    int order() const { return static_cast<int>(elements_.size()); }
    int index_in_parent() const { return parent_->order() / order(); }

    bool contains(int a) const {
        return std::binary_search(elements_.begin(), elements_.end(), a);
    }

    /// Position of element a in the sorted element list.
    int position(int a) const {
        auto it = std::lower_bound(elements_.begin(), elements_.end(), a);
        if (it == elements_.end() || *it != a)
            throw std::invalid_argument("element not in subgroup");
        return static_cast<int>(it - elements_.begin());
    }

    /// Right coset Hg as a sorted element list.
    std::vector<int> right_coset(int g) const {
        std::vector<int> c;
        c.reserve(elements_.size());
        for (int h : elements_) c.push_back(parent_->mul(h, g));
        std::sort(c.begin(), c.end());
        return c;
    }

    std::vector<int> left_coset(int g) const {
        std::vector<int> c;
        c.reserve(elements_.size());
        for (int h : elements_) c.push_back(parent_->mul(g, h));
        std::sort(c.begin(), c.end());
        return c;
    }

    bool same_right_coset(int a, int b) const { return contains(parent_->mul(a, parent_->inv(b))); }
    bool same_left_coset(int a, int b) const { return contains(parent_->mul(parent_->inv(a), b)); }

    /// All right cosets, ordered by their minimal element.
    std::vector<std::vector<int>> right_cosets() const {
        std::vector<std::vector<int>> out;
        std::vector<bool> seen(parent_->order(), false);
        for (int g = 0; g < parent_->order(); ++g) {
            if (seen[g]) continue;
            auto c = right_coset(g);
            for (int x : c) seen[x] = true;
            out.push_back(std::move(c));
        }
        return out;
    }

    /// g^{-1} H g (the paper's conjugation convention).
    Subgroup conjugate(int g) const {
        std::vector<int> e;
        int gi = parent_->inv(g);
        for (int h : elements_) e.push_back(parent_->mul(parent_->mul(gi, h), g));
        return Subgroup(parent_, std::move(e));
    }

    bool is_normal() const {
        for (int g = 0; g < parent_->order(); ++g)
            if (conjugate(g).elements() != elements_) return false;
        return true;
    }

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.parent_ == b.parent_ && a.elements_ == b.elements_;
    }

private:
    FiniteGroup::Ptr parent_;
    std::vector<int> elements_;
};

struct NotNormal : std::invalid_argument {
    NotNormal() : std::invalid_argument("subgroup is not normal; quotient undefined") {}
};

struct QuotientGroup {
    FiniteGroup::Ptr group;              // G/H
    std::vector<int> projection;         // element of G -> element of G/H
    std::vector<std::vector<int>> cosets;  // coset elements per quotient element
};

/// Quotient of G by a normal subgroup. Quotient elements are the cosets,
/// ordered by minimal representative; the projection map is returned.
inline QuotientGroup quotient_group(const Subgroup& h) {
    if (!h.is_normal()) throw NotNormal();
    const auto& g = h.parent();
    auto cosets = h.right_cosets();
    int q = static_cast<int>(cosets.size());
    std::vector<int> proj(g->order(), -1);
    for (int i = 0; i < q; ++i)
        for (int x : cosets[i]) proj[x] = i;
    std::vector<std::vector<int>> table(q, std::vector<int>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) table[i][j] = proj[g->mul(cosets[i][0], cosets[j][0])];
    QuotientGroup out;
    out.group = FiniteGroup::from_table(table);
    out.projection = std::move(proj);
    out.cosets = std::move(cosets);
    return out;
}

/// All subgroups of a small group, ordered by (order, elements). Closures of
/// generating sets of size <= 3, which is complete for the desk-scale groups
/// handled here.
inline std::vector<Subgroup> all_subgroups(const FiniteGroup::Ptr& g) {
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> out;
    auto add = [&](Subgroup s) {
        if (seen.insert(s.elements()).second) out.push_back(std::move(s));
    };
    add(Subgroup::trivial(g));
    int n = g->order();
    for (int a = 0; a < n; ++a) add(Subgroup::generated(g, {a}));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) add(Subgroup::generated(g, {a, b}));
    if (n > 7)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) add(Subgroup::generated(g, {a, b, c}));
    std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
        if (x.order() != y.order()) return x.order() < y.order();
        return x.elements() < y.elements();
    });
    return out;
}

}  // namespace gradex
