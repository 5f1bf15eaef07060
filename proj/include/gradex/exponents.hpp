#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "gradex/graded_algebra.hpp"

namespace gradex {

/// One admissible chain entry: a (G-)simple component given as a subspace of
/// A, with the dimension it contributes when it first appears in a chain.
struct ChainUnit {
    int id;
    int weight;
    Subspace<Scalar> space;
};

struct ExponentReport {
    int value = 0;
    std::vector<int> witness_chain;             // unit ids, repetitions allowed
    std::vector<SparseVec> witness_monomial;    // alternating unit element / radical element
};

struct WitnessExtractionFailed : std::runtime_error {
    WitnessExtractionFailed()
        : std::runtime_error("no nonzero basis-element product along the winning chain") {}
};

namespace detail {

inline SparseVec to_sparse(const std::vector<Scalar>& v) {
    SparseVec out;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (!v[i].is_zero()) out.emplace_back(i, v[i]);
    return out;
}

/// Nilpotency index of an arbitrary nil subspace under the algebra product.
inline int nilpotency_of(const GradedAlgebra& a, const Subspace<Scalar>& rad) {
    if (rad.is_zero()) return 1;
    auto mult = a.mult_fn();
    auto power = rad;
    for (int t = 2; t <= static_cast<int>(rad.dim()) + 1; ++t) {
        power = subspace_product<Scalar>(power, rad, mult);
        if (power.is_zero()) return t;
    }
    throw std::invalid_argument("radical subspace is not nilpotent");
}

struct ChainSearcher {
    const GradedAlgebra& a;
    const std::vector<ChainUnit>& units;
    const Subspace<Scalar>& rad;
    int max_len;
    int total_weight;
    int best_value = 0;
    std::vector<int> best_chain;
    std::vector<int> chain;
    std::map<int, int> seen;  // unit id -> multiplicity

    void consider(int value) {
        if (value > best_value) {
            best_value = value;
            best_chain = chain;
        }
    }

    void dfs(const Subspace<Scalar>& current, int value) {
        consider(value);
        if (static_cast<int>(chain.size()) >= max_len) return;
        int unseen = 0;
        for (const auto& u : units)
            if (!seen.count(u.id)) unseen += u.weight;
        if (value + unseen <= best_value) return;  // cannot strictly improve
        auto through = subspace_product<Scalar>(current, rad, a.mult_fn());
        if (through.is_zero()) return;
        for (const auto& u : units) {
            auto next = subspace_product<Scalar>(through, u.space, a.mult_fn());
            if (next.is_zero()) continue;
            chain.push_back(u.id);
            bool fresh = !seen.count(u.id);
            ++seen[u.id];
            dfs(next, value + (fresh ? u.weight : 0));
            if (--seen[u.id] == 0) seen.erase(u.id);
            chain.pop_back();
        }
    }
};

}  // namespace detail

/// Maximum over nonzero chain products S_{i_1} J S_{i_2} ... J S_{i_s} of the
/// total weight of the distinct units appearing. Depth-first with exact
/// subspace pruning; chains are bounded by the nilpotency index of J; units
/// are explored in ascending id, so among equal values the lexicographically
/// smallest chain wins.
inline ExponentReport chain_search(const GradedAlgebra& a, const std::vector<ChainUnit>& units,
                                   const Subspace<Scalar>& rad) {
    ExponentReport report;
    if (units.empty()) return report;  // exponent 0 for empty semisimple part
    detail::ChainSearcher s{a, units, rad, detail::nilpotency_of(a, rad), 0};
    for (const auto& u : units) s.total_weight += u.weight;
    for (const auto& u : units) {
        s.chain.assign(1, u.id);
        s.seen.clear();
        s.seen[u.id] = 1;
        s.dfs(u.space, u.weight);
    }
    report.value = s.best_value;
    report.witness_chain = s.best_chain;
    return report;
}

/// Concrete witness: basis elements z_1 v_1 z_2 ... z_s along the chain with
/// nonzero product, found by depth-first search in basis order. Exists by
/// multilinearity whenever the subspace chain is nonzero.
inline std::vector<SparseVec> extract_chain_witness(const GradedAlgebra& a,
                                                    const std::vector<ChainUnit>& units,
                                                    const Subspace<Scalar>& rad,
                                                    const std::vector<int>& chain) {
    std::map<int, const ChainUnit*> by_id;
    for (const auto& u : units) by_id[u.id] = &u;
    std::vector<std::vector<Scalar>> picks;
    std::vector<std::vector<Scalar>> partial;  // running products

    std::function<bool(std::size_t)> step = [&](std::size_t pos) -> bool {
        if (pos == 2 * chain.size() - 1) return true;
        bool is_unit = pos % 2 == 0;
        const auto& basis =
            is_unit ? by_id.at(chain[pos / 2])->space.basis() : rad.basis();
        for (const auto& vec : basis) {
            std::vector<Scalar> next =
                pos == 0 ? vec : a.mul(partial.back(), vec);
            if (pos > 0 && a.vec_is_zero(next)) continue;
            partial.push_back(std::move(next));
            picks.push_back(vec);
            if (step(pos + 1)) return true;
            picks.pop_back();
            partial.pop_back();
        }
        return false;
    };
    if (chain.empty()) return {};
    if (!step(0)) throw WitnessExtractionFailed();
    std::vector<SparseVec> out;
    for (const auto& v : picks) out.push_back(detail::to_sparse(v));
    return out;
}

/// exp_conj^G(A): chain search over the G-simple components with their full
/// dimensions |H_j| r_j^2.
inline ExponentReport exp_conj_graded(const GradedAlgebra& a) {
    std::vector<ChainUnit> units;
    for (int c = 0; c < a.num_components(); ++c)
        units.push_back({c, a.component(c).dim(), a.component_subspace(c)});
    auto rad = a.radical_subspace();
    auto report = chain_search(a, units, rad);
    if (!report.witness_chain.empty())
        report.witness_monomial = extract_chain_witness(a, units, rad, report.witness_chain);
    return report;
}

/// exp(A_e): ordinary chain search over the nonzero e-blocks (the simple
/// components of A_e) with the degree-e radical.
inline ExponentReport exp_e(const GradedAlgebra& a) {
    auto ep = e_part(a);
    std::vector<ChainUnit> units;
    for (int k = 0; k < static_cast<int>(ep.blocks.size()); ++k)
        units.push_back(
            {k, ep.blocks[k].size * ep.blocks[k].size, a.span_of_ids(ep.blocks[k].basis)});
    auto rad = a.span_of_ids(ep.radical);
    auto report = chain_search(a, units, rad);
    if (!report.witness_chain.empty())
        report.witness_monomial = extract_chain_witness(a, units, rad, report.witness_chain);
    return report;
}

struct UnsupportedSplit : std::runtime_error {
    int component;
    UnsupportedSplit(int c, const std::string& reason)
        : std::runtime_error("component " + std::to_string(c) + ": " + reason), component(c) {}
};

/// Blocks of a user-supplied ungraded decomposition of one component:
/// each block is a list of vectors over the component-local basis.
using ComponentSplit = std::vector<std::vector<std::vector<Scalar>>>;

namespace detail {

/// All homomorphisms H -> <zeta_N>, as exponent vectors over the element
/// positions. For abelian H there are |H| of them exactly when exp(H) | N.
inline std::vector<std::vector<int>> characters_into_roots(const Subgroup& h, unsigned n) {
    const auto& g = h.parent();
    int m = h.order();
    std::vector<std::vector<int>> done;
    struct State {
        std::vector<int> val;  // exponent per position, -1 unknown
    };
    State init;
    init.val.assign(m, -1);
    init.val[h.position(g->identity())] = 0;
    std::vector<State> work{init};
    while (!work.empty()) {
        State st = work.back();
        work.pop_back();
        int x = -1;
        for (int p = 0; p < m; ++p)
            if (st.val[p] < 0) {
                x = h.elements()[p];
                break;
            }
        if (x < 0) {
            done.push_back(st.val);
            continue;
        }
        // minimal power of x landing in the assigned set
        int d = 1, xe = x;
        while (st.val[h.position(xe)] < 0) {
            xe = g->mul(xe, x);
            ++d;
        }
        int target = st.val[h.position(xe)];
        for (int v = 0; v < static_cast<int>(n); ++v) {
            if ((static_cast<long>(d) * v - target) % static_cast<long>(n) != 0) continue;
            State ext = st;
            bool ok = true;
            for (int p = 0; p < m && ok; ++p) {
                if (st.val[p] < 0) continue;
                int y = h.elements()[p], ypow = y;
                for (int s = 1; s < d; ++s) {
                    ypow = g->mul(ypow, x);
                    int q = h.position(ypow);
                    int want = (st.val[p] + s * v) % static_cast<int>(n);
                    if (ext.val[q] >= 0 && ext.val[q] != want) ok = false;
                    ext.val[q] = want;
                }
            }
            if (ok) work.push_back(std::move(ext));
        }
    }
    std::sort(done.begin(), done.end());
    return done;
}

}  // namespace detail

/// Ordinary exponent of the whole algebra: each G-simple component is
/// refined into ungraded simple components, either by enumerating the
/// characters of an abelian H with trivial cocycle, or from a user-supplied
/// block decomposition. Fails loudly when neither path applies.
inline ExponentReport exp_ungraded_full(const GradedAlgebra& a,
                                        const std::map<int, ComponentSplit>& user_splits = {}) {
    std::vector<ChainUnit> units;
    int next_id = 0;
    for (int c = 0; c < a.num_components(); ++c) {
        const auto& comp = a.component(c);
        auto lift = [&](const std::vector<Scalar>& local) {
            std::vector<Scalar> v(a.dim());
            for (int k = 0; k < comp.dim(); ++k) v[a.global_id(c, k)] = local[k];
            return v;
        };
        auto it = user_splits.find(c);
        if (it != user_splits.end()) {
            const auto& split = it->second;
            Subspace<Scalar> total(a.dim());
            int dims = 0;
            std::vector<Subspace<Scalar>> spaces;
            for (const auto& block : split) {
                std::vector<std::vector<Scalar>> vecs;
                for (const auto& local : block) {
                    if (static_cast<int>(local.size()) != comp.dim())
                        throw UnsupportedSplit(c, "split vector has wrong length");
                    vecs.push_back(lift(local));
                }
                auto space = Subspace<Scalar>::span(a.dim(), vecs);
                dims += static_cast<int>(space.dim());
                total = total.sum(space);
                spaces.push_back(std::move(space));
            }
            if (dims != comp.dim() || static_cast<int>(total.dim()) != comp.dim())
                throw UnsupportedSplit(c, "split blocks do not decompose the component");
            for (std::size_t p = 0; p < spaces.size(); ++p)
                for (std::size_t q = 0; q < spaces.size(); ++q) {
                    auto prod = subspace_product<Scalar>(spaces[p], spaces[q], a.mult_fn());
                    if (p == q) {
                        if (!spaces[p].contains(prod))
                            throw UnsupportedSplit(c, "split block is not a subalgebra");
                    } else if (!prod.is_zero()) {
                        throw UnsupportedSplit(c, "split blocks do not annihilate each other");
                    }
                }
            for (auto& space : spaces)
                units.push_back({next_id++, static_cast<int>(space.dim()), std::move(space)});
            continue;
        }
        // character path: trivial cocycle over an abelian H
        bool trivial = true;
        const auto& f = comp.twisted().cocycle();
        for (int p = 0; p < comp.h_order() && trivial; ++p)
            for (int q = 0; q < comp.h_order(); ++q)
                if (f.at(p, q) != comp.field()->one()) {
                    trivial = false;
                    break;
                }
        if (!trivial)
            throw UnsupportedSplit(c, "nontrivial cocycle and no user-supplied decomposition");
        if (!is_abelian_subgroup(comp.subgroup()))
            throw UnsupportedSplit(c, "nonabelian H and no user-supplied decomposition");
        auto chars = detail::characters_into_roots(comp.subgroup(), a.field()->order());
        if (static_cast<int>(chars.size()) != comp.h_order())
            throw UnsupportedSplit(
                c, "Q(zeta_" + std::to_string(a.field()->order()) + ") has too few characters of H (need exp(H) | N)");
        int r = comp.r();
        for (const auto& chi : chars) {
            std::vector<std::vector<Scalar>> vecs;
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) {
                    std::vector<Scalar> local(comp.dim());
                    for (int p = 0; p < comp.h_order(); ++p)
                        local[comp.basis_index(p, i, j)] = a.field()->zeta(-chi[p]);
                    vecs.push_back(lift(local));
                }
            units.push_back({next_id++, r * r, Subspace<Scalar>::span(a.dim(), vecs)});
        }
    }
    auto rad = a.radical_subspace();
    auto report = chain_search(a, units, rad);
    if (!report.witness_chain.empty())
        report.witness_monomial = extract_chain_witness(a, units, rad, report.witness_chain);
    return report;
}

inline bool is_abelian_subgroup(const Subgroup& h) {
    for (int a : h.elements())
        for (int b : h.elements())
            if (h.parent()->mul(a, b) != h.parent()->mul(b, a)) return false;
    return true;
}

}  // namespace gradex
