#pragma once

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "gradex/cocycle.hpp"
#include "gradex/group.hpp"
#include "gradex/linalg.hpp"

namespace gradex {

/// A G-simple algebra in normal form: F^f H tensor M_r(F) for a subgroup
/// H <= G, a 2-cocycle f on H and a grading tuple (g_{k_1},...,g_{k_r}) of
/// elements of G. The basis elements are u_h tensor e_{i,j}, flattened
/// lexicographically by (h, i, j), and
///     deg(u_h tensor e_{i,j}) = g_{k_i}^{-1} h g_{k_j}.
class GSimpleAlgebra {
public:
    GSimpleAlgebra(TwistedGroupAlgebra twisted, std::vector<int> tuple)
        : twisted_(std::move(twisted)), tuple_(std::move(tuple)) {
        if (tuple_.empty()) throw std::invalid_argument("grading tuple must have length >= 1");
        const auto& g = group();
        for (int x : tuple_)
            if (x < 0 || x >= g->order())
                throw std::invalid_argument("grading tuple entry out of range");
        int epos = subgroup().position(g->identity());
        field_ = twisted_.cocycle().at(epos, epos).field();
        epos_ = epos;
    }

    const FiniteGroup::Ptr& group() const { return twisted_.subgroup().parent(); }
    const Subgroup& subgroup() const { return twisted_.subgroup(); }
    const TwistedGroupAlgebra& twisted() const { return twisted_; }
    const CyclotomicField::Ptr& field() const { return field_; }
    int r() const { return static_cast<int>(tuple_.size()); }
    const std::vector<int>& tuple() const { return tuple_; }
    int h_order() const { return subgroup().order(); }
    int dim() const { return h_order() * r() * r(); }
    int identity_position() const { return epos_; }

    int basis_index(int h_pos, int i, int j) const { return (h_pos * r() + i) * r() + j; }
    std::tuple<int, int, int> basis_split(int b) const {
        int rr = r();
        return {b / (rr * rr), (b / rr) % rr, b % rr};
    }

    /// Basis index of the idempotent 1 tensor e_{i,i}.
    int idempotent(int i) const { return basis_index(epos_, i, i); }

    int degree(int b) const {
        auto [h, i, j] = basis_split(b);
        const auto& g = group();
        return g->mul(g->mul(g->inv(tuple_[i]), subgroup().elements()[h]), tuple_[j]);
    }

    /// (u_h e_{i,j})(u_h' e_{k,l}) = delta_{jk} f(h,h') u_{hh'} e_{i,l}.
    std::optional<std::pair<Scalar, int>> mul_basis(int b1, int b2) const {
        auto [h1, i1, j1] = basis_split(b1);
        auto [h2, i2, j2] = basis_split(b2);
        if (j1 != i2) return std::nullopt;
        auto [c, h12] = twisted_.mul_basis(h1, h2);
        return std::make_pair(c, basis_index(h12, i1, j2));
    }

    std::vector<int> component_indices(int g) const {
        std::vector<int> out;
        for (int b = 0; b < dim(); ++b)
            if (degree(b) == g) out.push_back(b);
        return out;
    }

    Subspace<Scalar> component(int g) const {
        std::vector<std::vector<Scalar>> vecs;
        for (int b : component_indices(g)) {
            std::vector<Scalar> v(dim());
            v[b] = field_->one();
            vecs.push_back(std::move(v));
        }
        return Subspace<Scalar>::span(dim(), vecs);
    }

private:
    TwistedGroupAlgebra twisted_;
    std::vector<int> tuple_;
    CyclotomicField::Ptr field_;
    int epos_ = 0;
};

/// The identity component of a G-simple algebra decomposes as a product of
/// matrix blocks M_{t_1} x ... x M_{t_l} with l = [G:H], one block per right
/// H-coset (zero sizes allowed). Blocks are ordered by the minimal element
/// of their coset.
struct EBlockDecomposition {
    std::vector<std::vector<int>> cosets;  // right H-cosets, sorted by min element
    std::vector<int> block_sizes;          // t_i per coset, zeros included
    std::vector<int> block_of_index;       // tuple position -> block id
};

inline EBlockDecomposition e_block_decomposition(const GSimpleAlgebra& b) {
    EBlockDecomposition out;
    out.cosets = b.subgroup().right_cosets();
    out.block_sizes.assign(out.cosets.size(), 0);
    out.block_of_index.assign(b.r(), -1);
    for (int p = 0; p < b.r(); ++p) {
        auto coset = b.subgroup().right_coset(b.tuple()[p]);
        for (std::size_t c = 0; c < out.cosets.size(); ++c)
            if (out.cosets[c] == coset) {
                out.block_of_index[p] = static_cast<int>(c);
                ++out.block_sizes[c];
                break;
            }
    }
    return out;
}

/// Stable reorder of the grading tuple so positions in the same right
/// H-coset are contiguous (blocks along the diagonal). Returns the reordered
/// algebra and the permutation: perm[new_position] = old_position.
inline std::pair<GSimpleAlgebra, std::vector<int>> canonical_reorder(const GSimpleAlgebra& b) {
    auto blocks = e_block_decomposition(b);
    std::vector<int> perm(b.r());
    for (int i = 0; i < b.r(); ++i) perm[i] = i;
    std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) {
        return blocks.block_of_index[x] < blocks.block_of_index[y];
    });
    std::vector<int> tuple(b.r());
    for (int p = 0; p < b.r(); ++p) tuple[p] = b.tuple()[perm[p]];
    return {GSimpleAlgebra(b.twisted(), std::move(tuple)), perm};
}

/// One factor of a graded monomial inside a G-simple component.
struct MonomialFactor {
    int basis;
    Scalar coeff;
};

using GradedMonomial = std::vector<MonomialFactor>;

inline int monomial_degree(const GSimpleAlgebra& b, const GradedMonomial& m) {
    int d = b.group()->identity();
    for (const auto& f : m) d = b.group()->mul(d, b.degree(f.basis));
    return d;
}

/// Exact product of the factor chain; nullopt when the product vanishes.
/// The empty monomial has no value (callers treat it as the neutral word).
inline std::optional<std::pair<Scalar, int>> monomial_value(const GSimpleAlgebra& b,
                                                            const GradedMonomial& m) {
    if (m.empty()) return std::nullopt;
    Scalar coeff = m[0].coeff;
    int basis = m[0].basis;
    for (std::size_t t = 1; t < m.size(); ++t) {
        auto step = b.mul_basis(basis, m[t].basis);
        if (!step) return std::nullopt;
        coeff = coeff * step->first * m[t].coeff;
        basis = step->second;
        if (coeff.is_zero()) return std::nullopt;
    }
    return std::make_pair(coeff, basis);
}

namespace detail {

/// Eulerian circuit on the complete directed graph with loops on r vertices,
/// anchored at `start` with the loop (start,start) forced first. At each
/// vertex, unused edges are taken loop-first then by ascending target.
/// Hierholzer with deterministic splicing.
inline std::vector<int> eulerian_circuit(int r, int start) {
    std::vector<std::vector<bool>> used(r, std::vector<bool>(r, false));
    auto next_edge = [&](int v) -> int {
        if (!used[v][v]) return v;
        for (int w = 0; w < r; ++w)
            if (w != v && !used[v][w]) return w;
        return -1;
    };
    auto walk = [&](int v) {
        std::vector<int> path{v};
        for (int w = next_edge(v); w != -1; w = next_edge(v)) {
            used[v][w] = true;
            path.push_back(w);
            v = w;
        }
        return path;
    };
    std::vector<int> circuit = walk(start);
    bool spliced = true;
    while (spliced) {
        spliced = false;
        for (std::size_t p = 0; p < circuit.size(); ++p) {
            if (next_edge(circuit[p]) == -1) continue;
            auto sub = walk(circuit[p]);
            circuit.insert(circuit.begin() + static_cast<std::ptrdiff_t>(p) + 1, sub.begin() + 1,
                           sub.end());
            spliced = true;
            break;
        }
    }
    return circuit;
}

}  // namespace detail

/// The monomial Z: a nonzero product of all r^2 matrix units 1 tensor e_{i,j}
/// without repetition, starting with e_{k,k} and ending at column k, with
/// value e_{k,k}. Realized as an Eulerian circuit (pairs (i,j) are edges).
/// k is a 0-based row index.
inline GradedMonomial string_monomial(const GSimpleAlgebra& b, int k) {
    if (k < 0 || k >= b.r()) throw std::invalid_argument("string_monomial: k out of range");
    auto circuit = detail::eulerian_circuit(b.r(), k);
    GradedMonomial z;
    const Scalar one = b.field()->one();
    for (std::size_t t = 0; t + 1 < circuit.size(); ++t)
        z.push_back({b.basis_index(b.identity_position(), circuit[t], circuit[t + 1]), one});
    return z;
}

/// The monomial Z-hat: Z with each loop factor 1 tensor e_{i,i} replaced by
/// the interleaved word u_{h_1} e_{i,i} . z . u_{h_2} e_{i,i} . z ... whose
/// prefix products enumerate H (identity first, then ascending element
/// index), plus a correcting right factor lambda u_h e_{k,k} so the total
/// value is exactly 1 tensor e_{k,k}.
inline GradedMonomial enhanced_string_monomial(const GSimpleAlgebra& b, int k) {
    auto z = string_monomial(b, k);
    const auto& h = b.subgroup();
    const auto& g = b.group();
    int m = h.order();
    int epos = b.identity_position();
    const Scalar one = b.field()->one();

    // prefix-product enumeration of H: identity, then ascending index
    std::vector<int> prefix{epos};
    for (int p = 0; p < m; ++p)
        if (p != epos) prefix.push_back(p);
    std::vector<int> steps;  // h_t positions with p_{t-1} h_t = p_t
    for (int t = 0; t < m; ++t) {
        int prev = t == 0 ? epos : prefix[t - 1];
        steps.push_back(
            h.position(g->mul(g->inv(h.elements()[prev]), h.elements()[prefix[t]])));
    }

    GradedMonomial zhat;
    for (const auto& f : z) {
        auto [hp, i, j] = b.basis_split(f.basis);
        if (i == j && hp == epos && m > 1) {
            for (int t = 0; t < m; ++t) {
                zhat.push_back({b.basis_index(steps[t], i, i), one});
                zhat.push_back({b.basis_index(epos, i, i), one});
            }
        } else {
            zhat.push_back(f);
        }
    }

    auto val = monomial_value(b, zhat);
    if (!val) throw std::logic_error("enhanced string monomial evaluated to zero");
    auto [mu, basis] = *val;
    auto [w, i, j] = b.basis_split(basis);
    if (i != k || j != k) throw std::logic_error("enhanced string monomial off its diagonal");
    if (w != epos || mu != one) {
        int winv = h.position(g->inv(h.elements()[w]));
        Scalar lambda = (mu * b.twisted().cocycle().at(w, winv)).inverse();
        zhat.push_back({b.basis_index(winv, k, k), lambda});
    }
    return zhat;
}

enum class PadSide { left, right };

/// Monomials X, E, Y with X E Y . b = b (left) or b . X E Y = b (right),
/// where E starts with 1 tensor e_{1,1} and evaluates to it. Built by
/// expanding the first occurrence of 1 tensor e_{1,1} inside the enhanced
/// string monomial anchored at b's row (left) or column (right).
struct PadMonomials {
    GradedMonomial x, e, y;
};

inline PadMonomials pad_monomial(const GSimpleAlgebra& b, int basis, PadSide side) {
    auto [h, i, j] = b.basis_split(basis);
    int anchor = side == PadSide::left ? i : j;
    auto zhat = enhanced_string_monomial(b, anchor);
    int occurrence = -1;
    int target = b.idempotent(0);
    for (std::size_t t = 0; t < zhat.size(); ++t)
        if (zhat[t].basis == target && zhat[t].coeff == b.field()->one()) {
            occurrence = static_cast<int>(t);
            break;
        }
    if (occurrence < 0) throw std::logic_error("1 tensor e_{1,1} does not occur in Z-hat");
    PadMonomials pad;
    pad.x.assign(zhat.begin(), zhat.begin() + occurrence);
    pad.e = enhanced_string_monomial(b, 0);
    pad.y.assign(zhat.begin() + occurrence + 1, zhat.end());
    return pad;
}

}  // namespace gradex
