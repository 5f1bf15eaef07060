#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradex/gsimple.hpp"

namespace gradex {

/// Peirce label: the unique idempotent 1 (x) e_{i,i} of a component that
/// fixes a radical basis element from one side. nullopt means no idempotent
/// acts (the element sits outside all Peirce corners on that side).
using PeirceLabel = std::optional<std::pair<int, int>>;  // (component, diagonal index)

struct RadicalElement {
    int degree;  // G element index
    PeirceLabel left;
    PeirceLabel right;
};

using SparseVec = std::vector<std::pair<int, Scalar>>;  // (global basis id, coefficient)

/// A finite-dimensional G-graded algebra A = (S_G)_1 x ... x (S_G)_q (+) J
/// presented in Wedderburn-Malcev form: G-simple components in normal form
/// plus a graded radical with explicit structure constants for every product
/// touching the radical. Global basis ids enumerate the component bases
/// first (each ordered lexicographically by (h,i,j)), then the radical.
class GradedAlgebra {
public:
    GradedAlgebra(CyclotomicField::Ptr field, FiniteGroup::Ptr group,
                  std::vector<GSimpleAlgebra> components, std::vector<RadicalElement> radical,
                  std::map<std::pair<int, int>, SparseVec> products)
        : field_(std::move(field)),
          group_(std::move(group)),
          components_(std::move(components)),
          radical_(std::move(radical)),
          products_(std::move(products)) {
        offsets_.push_back(0);
        for (const auto& c : components_) offsets_.push_back(offsets_.back() + c.dim());
        ss_dim_ = offsets_.back();
        dim_ = ss_dim_ + static_cast<int>(radical_.size());
        comp_of_.assign(ss_dim_, 0);
        for (int c = 0, b = 0; c < static_cast<int>(components_.size()); ++c)
            for (int k = 0; k < components_[c].dim(); ++k) comp_of_[b++] = c;
        for (const auto& v : radical_)
            if (v.degree < 0 || v.degree >= group_->order())
                throw std::invalid_argument("radical degree out of range");
        for (const auto& [key, vec] : products_) {
            if (key.first < 0 || key.first >= dim_ || key.second < 0 || key.second >= dim_)
                throw std::invalid_argument("product table id out of range");
            for (const auto& [t, c] : vec) {
                (void)c;
                if (t < 0 || t >= dim_)
                    throw std::invalid_argument("product table target out of range");
            }
        }
    }

    const CyclotomicField::Ptr& field() const { return field_; }
    const FiniteGroup::Ptr& group() const { return group_; }
    int dim() const { return dim_; }
    int semisimple_dim() const { return ss_dim_; }
    int radical_dim() const { return dim_ - ss_dim_; }
    int num_components() const { return static_cast<int>(components_.size()); }
    const GSimpleAlgebra& component(int c) const { return components_[c]; }
    const std::vector<RadicalElement>& radical() const { return radical_; }
    const std::map<std::pair<int, int>, SparseVec>& products() const { return products_; }

    bool is_radical_id(int b) const { return b >= ss_dim_; }
    int component_offset(int c) const { return offsets_[c]; }
    int component_of(int b) const { return comp_of_[b]; }
    int local_of(int b) const { return b - offsets_[comp_of_[b]]; }
    int global_id(int c, int local) const { return offsets_[c] + local; }
    int radical_global(int k) const { return ss_dim_ + k; }

    /// Global id of the idempotent 1 (x) e_{i,i} of component c.
    int idempotent_global(int c, int i) const {
        return global_id(c, components_[c].idempotent(i));
    }

    std::vector<std::pair<int, int>> all_idempotents() const {
        std::vector<std::pair<int, int>> out;
        for (int c = 0; c < num_components(); ++c)
            for (int i = 0; i < components_[c].r(); ++i) out.emplace_back(c, i);
        return out;
    }

    int degree(int b) const {
        if (is_radical_id(b)) return radical_[b - ss_dim_].degree;
        return components_[comp_of_[b]].degree(local_of(b));
    }

    PeirceLabel left_label(int b) const {
        if (is_radical_id(b)) return radical_[b - ss_dim_].left;
        auto [h, i, j] = components_[comp_of_[b]].basis_split(local_of(b));
        (void)h;
        (void)j;
        return std::make_pair(comp_of_[b], i);
    }

    PeirceLabel right_label(int b) const {
        if (is_radical_id(b)) return radical_[b - ss_dim_].right;
        auto [h, i, j] = components_[comp_of_[b]].basis_split(local_of(b));
        (void)h;
        (void)i;
        return std::make_pair(comp_of_[b], j);
    }

    /// Product of two basis elements as a sparse vector. Semisimple products
    /// follow the normal form; components pairwise annihilate; anything
    /// touching the radical comes from the structure-constant table.
    SparseVec mul_basis(int a, int b) const {
        if (!is_radical_id(a) && !is_radical_id(b)) {
            int ca = comp_of_[a], cb = comp_of_[b];
            if (ca != cb) return {};
            auto p = components_[ca].mul_basis(local_of(a), local_of(b));
            if (!p) return {};
            return {{global_id(ca, p->second), p->first}};
        }
        auto it = products_.find({a, b});
        if (it == products_.end()) return {};
        return it->second;
    }

    std::vector<Scalar> unit_vector(int b) const {
        std::vector<Scalar> v(dim_);
        v[b] = field_->one();
        return v;
    }

    std::vector<Scalar> mul(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
        std::vector<Scalar> out(dim_);
        for (int a = 0; a < dim_; ++a) {
            if (x[a].is_zero()) continue;
            for (int b = 0; b < dim_; ++b) {
                if (y[b].is_zero()) continue;
                for (const auto& [t, c] : mul_basis(a, b)) out[t] += x[a] * y[b] * c;
            }
        }
        return out;
    }

    bool vec_is_zero(const std::vector<Scalar>& v) const {
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }

    Subspace<Scalar> span_of_ids(const std::vector<int>& ids) const {
        std::vector<std::vector<Scalar>> vecs;
        for (int b : ids) vecs.push_back(unit_vector(b));
        return Subspace<Scalar>::span(dim_, vecs);
    }

    Subspace<Scalar> component_subspace(int c) const {
        std::vector<int> ids;
        for (int k = 0; k < components_[c].dim(); ++k) ids.push_back(global_id(c, k));
        return span_of_ids(ids);
    }

    Subspace<Scalar> radical_subspace() const {
        std::vector<int> ids;
        for (int k = 0; k < radical_dim(); ++k) ids.push_back(radical_global(k));
        return span_of_ids(ids);
    }

    /// Homogeneous component A_g.
    std::vector<int> degree_ids(int g) const {
        std::vector<int> ids;
        for (int b = 0; b < dim_; ++b)
            if (degree(b) == g) ids.push_back(b);
        return ids;
    }

    std::function<std::vector<Scalar>(const std::vector<Scalar>&, const std::vector<Scalar>&)>
    mult_fn() const {
        return [this](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
            return mul(x, y);
        };
    }

private:
    CyclotomicField::Ptr field_;
    FiniteGroup::Ptr group_;
    std::vector<GSimpleAlgebra> components_;
    std::vector<RadicalElement> radical_;
    std::map<std::pair<int, int>, SparseVec> products_;
    std::vector<int> offsets_;
    std::vector<int> comp_of_;
    int ss_dim_ = 0;
    int dim_ = 0;
};

struct Violation {
    std::string check;
    std::string detail;
};

/// Nilpotency index t with J^t = 0, or nullopt if J is not nilpotent within
/// the dim(J) + 1 bound.
inline std::optional<int> nilpotency_index(const GradedAlgebra& a) {
    auto j = a.radical_subspace();
    if (j.is_zero()) return 1;
    auto power = j;
    auto mult = a.mult_fn();
    for (int t = 2; t <= a.radical_dim() + 1; ++t) {
        power = subspace_product<Scalar>(power, j, mult);
        if (power.is_zero()) return t;
    }
    return std::nullopt;
}

/// Structural validation: grading compatibility, associativity on all basis
/// triples, the radical being a nilpotent ideal, Peirce exactness of the
/// declared labels, and well-formedness of the product table. Every failed
/// check is reported with a witness; nothing passes silently.
inline std::vector<Violation> validate(const GradedAlgebra& a) {
    std::vector<Violation> bad;
    const auto& g = a.group();

    for (const auto& [key, vec] : a.products()) {
        if (!a.is_radical_id(key.first) && !a.is_radical_id(key.second))
            bad.push_back({"product-table", "semisimple-by-semisimple pair (" +
                                                std::to_string(key.first) + "," +
                                                std::to_string(key.second) +
                                                ") must not appear in the table"});
        for (const auto& [t, c] : vec) {
            if (c.is_zero()) continue;
            if (!a.is_radical_id(t))
                bad.push_back({"radical-ideal", "product (" + std::to_string(key.first) + "," +
                                                    std::to_string(key.second) +
                                                    ") escapes the radical into basis id " +
                                                    std::to_string(t)});
        }
    }

    for (int x = 0; x < a.dim(); ++x)
        for (int y = 0; y < a.dim(); ++y) {
            for (const auto& [t, c] : a.mul_basis(x, y)) {
                if (c.is_zero()) continue;
                if (a.degree(t) != g->mul(a.degree(x), a.degree(y)))
                    bad.push_back({"grading", "deg(b" + std::to_string(x) + " * b" +
                                                  std::to_string(y) + ") lands in degree " +
                                                  std::to_string(a.degree(t)) + ", expected " +
                                                  std::to_string(g->mul(a.degree(x), a.degree(y)))});
            }
        }

    auto sparse_to_dense = [&](const SparseVec& v) {
        std::vector<Scalar> d(a.dim());
        for (const auto& [t, c] : v) d[t] += c;
        return d;
    };
    for (int x = 0; x < a.dim() && bad.size() < 64; ++x)
        for (int y = 0; y < a.dim(); ++y)
            for (int z = 0; z < a.dim(); ++z) {
                std::vector<Scalar> lhs(a.dim()), rhs(a.dim());
                for (const auto& [t, c] : a.mul_basis(x, y))
                    for (const auto& [u, d] : a.mul_basis(t, z)) lhs[u] += c * d;
                for (const auto& [t, c] : a.mul_basis(y, z))
                    for (const auto& [u, d] : a.mul_basis(x, t)) rhs[u] += c * d;
                if (lhs != rhs) {
                    bad.push_back({"associativity", "triple (" + std::to_string(x) + "," +
                                                        std::to_string(y) + "," +
                                                        std::to_string(z) + ")"});
                    if (bad.size() >= 64) break;
                }
            }
    (void)sparse_to_dense;

    // Peirce exactness of the declared labels
    auto idems = a.all_idempotents();
    for (int k = 0; k < a.radical_dim(); ++k) {
        int v = a.radical_global(k);
        const auto& elt = a.radical()[k];
        for (const auto& [c, i] : idems) {
            int e = a.idempotent_global(c, i);
            auto lv = a.mul_basis(e, v);
            bool fixes = lv.size() == 1 && lv[0].first == v && lv[0].second == a.field()->one();
            bool kills = lv.empty();
            bool expected_fix = elt.left && *elt.left == std::make_pair(c, i);
            if (expected_fix && !fixes)
                bad.push_back({"peirce", "left idempotent (" + std::to_string(c) + "," +
                                             std::to_string(i) + ") does not fix radical " +
                                             std::to_string(k)});
            if (!expected_fix && !kills)
                bad.push_back({"peirce", "left idempotent (" + std::to_string(c) + "," +
                                             std::to_string(i) + ") does not annihilate radical " +
                                             std::to_string(k)});
            auto rv = a.mul_basis(v, e);
            fixes = rv.size() == 1 && rv[0].first == v && rv[0].second == a.field()->one();
            kills = rv.empty();
            expected_fix = elt.right && *elt.right == std::make_pair(c, i);
            if (expected_fix && !fixes)
                bad.push_back({"peirce", "right idempotent (" + std::to_string(c) + "," +
                                             std::to_string(i) + ") does not fix radical " +
                                             std::to_string(k)});
            if (!expected_fix && !kills)
                bad.push_back({"peirce", "right idempotent (" + std::to_string(c) + "," +
                                             std::to_string(i) +
                                             ") does not annihilate radical " +
                                             std::to_string(k)});
        }
    }

    if (!nilpotency_index(a))
        bad.push_back({"nilpotency", "J^t != 0 for all t <= dim J + 1"});

    return bad;
}

struct MismatchWithDeclaredRadical : std::runtime_error {
    MismatchWithDeclaredRadical()
        : std::runtime_error("trace-form radical differs from the declared radical basis") {}
};

namespace detail {

/// Trace-form radical of the subalgebra spanned by the given global basis
/// ids (Dickson's criterion in characteristic zero: x is radical iff
/// trace(L_{x y}) = 0 for all y). Returns a subspace of the full algebra.
inline Subspace<Scalar> trace_form_radical(const GradedAlgebra& a, const std::vector<int>& ids) {
    int n = static_cast<int>(ids.size());
    std::vector<int> pos(a.dim(), -1);
    for (int k = 0; k < n; ++k) pos[ids[k]] = k;
    // trace of left multiplication by each basis element, inside the view
    std::vector<Scalar> tr(n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            for (const auto& [t, c] : a.mul_basis(ids[k], ids[l]))
                if (t == ids[l]) tr[k] += c;
    Matrix<Scalar> form(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Scalar s;
            for (const auto& [t, c] : a.mul_basis(ids[i], ids[j])) {
                if (pos[t] < 0) throw std::logic_error("subalgebra view is not closed");
                s += c * tr[pos[t]];
            }
            form(i, j) = s;
        }
    auto null_basis = kernel(form, a.field()->one());
    std::vector<std::vector<Scalar>> vecs;
    for (const auto& v : null_basis) {
        std::vector<Scalar> w(a.dim());
        for (int k = 0; k < n; ++k) w[ids[k]] = v[k];
        vecs.push_back(std::move(w));
    }
    return Subspace<Scalar>::span(a.dim(), vecs);
}

}  // namespace detail

/// Independent certification of the declared radical: the kernel of the
/// trace form of left multiplication must coincide with span(radical basis).
inline Subspace<Scalar> radical_oracle(const GradedAlgebra& a, bool enforce = true) {
    std::vector<int> ids(a.dim());
    for (int b = 0; b < a.dim(); ++b) ids[b] = b;
    auto rad = detail::trace_form_radical(a, ids);
    if (enforce && rad != a.radical_subspace()) throw MismatchWithDeclaredRadical();
    return rad;
}

/// One nonzero e-block of one G-simple component, as a simple subalgebra of
/// A_e: basis elements u_{g_{k_i} g_{k_j}^{-1}} (x) e_{i,j} over the block's
/// tuple positions.
struct EBlock {
    int component;
    int block;
    int size;                // t
    std::vector<int> basis;  // global ids, t^2 of them
};

struct EPart {
    std::vector<EBlock> blocks;   // all nonzero blocks, component-major
    std::vector<int> radical;     // global ids of the degree-e radical elements
    std::vector<int> all_basis;   // union, sorted
};

inline EPart e_part(const GradedAlgebra& a) {
    EPart out;
    const auto& g = a.group();
    for (int c = 0; c < a.num_components(); ++c) {
        const auto& comp = a.component(c);
        auto dec = e_block_decomposition(comp);
        for (std::size_t blk = 0; blk < dec.block_sizes.size(); ++blk) {
            if (dec.block_sizes[blk] == 0) continue;
            EBlock b;
            b.component = c;
            b.block = static_cast<int>(blk);
            b.size = dec.block_sizes[blk];
            for (int i = 0; i < comp.r(); ++i) {
                if (dec.block_of_index[i] != static_cast<int>(blk)) continue;
                for (int j = 0; j < comp.r(); ++j) {
                    if (dec.block_of_index[j] != static_cast<int>(blk)) continue;
                    int h = comp.subgroup().position(
                        g->mul(comp.tuple()[i], g->inv(comp.tuple()[j])));
                    b.basis.push_back(a.global_id(c, comp.basis_index(h, i, j)));
                }
            }
            out.blocks.push_back(std::move(b));
        }
    }
    for (int k = 0; k < a.radical_dim(); ++k)
        if (a.radical()[k].degree == g->identity()) out.radical.push_back(a.radical_global(k));
    for (const auto& b : out.blocks)
        out.all_basis.insert(out.all_basis.end(), b.basis.begin(), b.basis.end());
    out.all_basis.insert(out.all_basis.end(), out.radical.begin(), out.radical.end());
    std::sort(out.all_basis.begin(), out.all_basis.end());
    return out;
}

/// Checks that e_part is a Wedderburn-Malcev decomposition of A_e: every
/// listed element is degree e, blocks multiply inside themselves and
/// annihilate each other, and the trace-form radical of A_e equals the span
/// of the degree-e radical elements.
inline std::vector<Violation> validate_e_part(const GradedAlgebra& a, const EPart& ep) {
    std::vector<Violation> bad;
    int e = a.group()->identity();
    for (int b : ep.all_basis)
        if (a.degree(b) != e)
            bad.push_back({"e-part", "basis id " + std::to_string(b) + " has nonidentity degree"});
    for (std::size_t p = 0; p < ep.blocks.size(); ++p)
        for (std::size_t q = 0; q < ep.blocks.size(); ++q) {
            for (int x : ep.blocks[p].basis)
                for (int y : ep.blocks[q].basis) {
                    auto prod = a.mul_basis(x, y);
                    if (p == q) {
                        for (const auto& [t, c] : prod) {
                            (void)c;
                            bool inside = false;
                            for (int z : ep.blocks[p].basis) inside = inside || z == t;
                            if (!inside)
                                bad.push_back({"e-part", "block product escapes its block"});
                        }
                    } else if (!prod.empty()) {
                        bad.push_back({"e-part", "blocks " + std::to_string(p) + " and " +
                                                     std::to_string(q) + " do not annihilate"});
                    }
                }
        }
    auto rad = detail::trace_form_radical(a, ep.all_basis);
    if (rad != a.span_of_ids(ep.radical))
        bad.push_back({"e-part", "trace-form radical of A_e differs from degree-e radical"});
    return bad;
}

}  // namespace gradex
