#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gradex/cyclotomic.hpp"
#include "gradex/group.hpp"
#include "gradex/linalg.hpp"

namespace gradex {

struct CocycleViolation {
    int a, b, c;  // positions in the subgroup's element list
    std::string what;
};

struct CocycleError : std::invalid_argument {
    std::vector<CocycleViolation> violations;
    explicit CocycleError(std::vector<CocycleViolation> v)
        : std::invalid_argument(v.empty() ? "invalid 2-cocycle" : v.front().what),
          violations(std::move(v)) {}
};

/// A normalized 2-cocycle f : H x H -> units of Q(zeta_N). Values are indexed
/// by positions in the subgroup's sorted element list. Construction verifies
/// nonzero values, normalization f(e,a) = f(a,e) = 1 and the cocycle identity
/// f(a,b) f(ab,c) = f(b,c) f(a,bc) over all triples.
class TwoCocycle {
public:
    TwoCocycle(Subgroup h, std::vector<std::vector<Scalar>> values)
        : h_(std::move(h)), values_(std::move(values)) {
        auto bad = check(h_, values_);
        if (!bad.empty()) throw CocycleError(std::move(bad));
    }

    static TwoCocycle trivial(Subgroup h, const CyclotomicField::Ptr& field) {
        int m = h.order();
        std::vector<std::vector<Scalar>> v(m, std::vector<Scalar>(m, field->one()));
        return TwoCocycle(std::move(h), std::move(v));
    }

    /// Coboundary of t : H -> units, (dt)(a,b) = t(a) t(b) / t(ab). t is
    /// rescaled by t(e)^{-1} first so the result is normalized.
    static TwoCocycle coboundary(Subgroup h, std::vector<Scalar> t) {
        int m = h.order();
        if (static_cast<int>(t.size()) != m)
            throw std::invalid_argument("coboundary map has wrong length");
        int epos = h.position(h.parent()->identity());
        Scalar scale = t[epos].inverse();
        for (auto& x : t) x = scale * x;
        std::vector<std::vector<Scalar>> v(m, std::vector<Scalar>(m));
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                int ab = h.position(h.parent()->mul(h.elements()[a], h.elements()[b]));
                v[a][b] = t[a] * t[b] / t[ab];
            }
        return TwoCocycle(std::move(h), std::move(v));
    }

    /// Collects every violated condition without throwing.
    static std::vector<CocycleViolation> check(const Subgroup& h,
                                               const std::vector<std::vector<Scalar>>& values) {
        std::vector<CocycleViolation> bad;
        int m = h.order();
        if (static_cast<int>(values.size()) != m) {
            bad.push_back({-1, -1, -1, "cocycle value table has wrong shape"});
            return bad;
        }
        for (int a = 0; a < m; ++a) {
            if (static_cast<int>(values[a].size()) != m) {
                bad.push_back({a, -1, -1, "cocycle value table has wrong shape"});
                return bad;
            }
            for (int b = 0; b < m; ++b)
                if (values[a][b].is_zero())
                    bad.push_back({a, b, -1,
                                   "cocycle value is zero at (" + std::to_string(a) + "," +
                                       std::to_string(b) + ")"});
        }
        if (!bad.empty()) return bad;
        int epos = h.position(h.parent()->identity());
        const Scalar one = values[epos][epos].field()->one();
        for (int a = 0; a < m; ++a) {
            if (values[epos][a] != one || values[a][epos] != one) {
                bad.push_back({a, -1, -1,
                               "NotNormalized: f(e,a) or f(a,e) != 1 at position " +
                                   std::to_string(a) +
                                   "; divide by the coboundary of t(h)=f(e,e) to normalize"});
            }
        }
        auto pos_mul = [&](int a, int b) {
            return h.position(h.parent()->mul(h.elements()[a], h.elements()[b]));
        };
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                for (int c = 0; c < m; ++c) {
                    Scalar lhs = values[a][b] * values[pos_mul(a, b)][c];
                    Scalar rhs = values[b][c] * values[a][pos_mul(b, c)];
                    if (lhs != rhs)
                        bad.push_back({a, b, c,
                                       "CocycleViolation at triple (" + std::to_string(a) + "," +
                                           std::to_string(b) + "," + std::to_string(c) + ")"});
                }
        return bad;
    }

    const Subgroup& subgroup() const { return h_; }
    int order() const { return h_.order(); }

    /// f evaluated at positions (a, b) in the element list.
    const Scalar& at(int a, int b) const { return values_[a][b]; }
    const std::vector<std::vector<Scalar>>& values() const { return values_; }

private:
    Subgroup h_;
    std::vector<std::vector<Scalar>> values_;
};

/// The twisted group algebra F^f H with basis {u_h} and u_a u_b = f(a,b) u_{ab}.
/// Elements are coefficient vectors over the subgroup's element positions.
class TwistedGroupAlgebra {
public:
    explicit TwistedGroupAlgebra(TwoCocycle f) : f_(std::move(f)) {}

    const TwoCocycle& cocycle() const { return f_; }
    const Subgroup& subgroup() const { return f_.subgroup(); }
    int dim() const { return f_.order(); }

    /// Product of basis elements: (position, position) -> (scalar, position).
    std::pair<Scalar, int> mul_basis(int a, int b) const {
        const auto& h = f_.subgroup();
        int ab = h.position(h.parent()->mul(h.elements()[a], h.elements()[b]));
        return {f_.at(a, b), ab};
    }

    std::vector<Scalar> mul(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
        int m = dim();
        std::vector<Scalar> out(m);
        for (int a = 0; a < m; ++a) {
            if (x[a].is_zero()) continue;
            for (int b = 0; b < m; ++b) {
                if (y[b].is_zero()) continue;
                auto [c, ab] = mul_basis(a, b);
                out[ab] += x[a] * y[b] * c;
            }
        }
        return out;
    }

    /// Dimension of the center, via the kernel of all basis commutator maps.
    int center_dimension(const CyclotomicField::Ptr& field) const {
        int m = dim();
        Matrix<Scalar> sys(static_cast<std::size_t>(m) * m, m);
        for (int h = 0; h < m; ++h)
            for (int b = 0; b < m; ++b) {
                auto [chb, hb] = mul_basis(h, b);
                auto [cbh, bh] = mul_basis(b, h);
                sys(static_cast<std::size_t>(h) * m + hb, b) += chb;
                sys(static_cast<std::size_t>(h) * m + bh, b) -= cbh;
            }
        return static_cast<int>(kernel(sys, field->one()).size());
    }

private:
    TwoCocycle f_;
};

/// The standard nontrivial cocycle class on the Klein four-group: with H
/// enumerated as e, a, b, ab and elements written a^i b^j, the value at
/// (a^i b^j, a^k b^l) is (-1)^(j k). `labels` maps positions 0..3 of the
/// sorted element list to the roles (e, a, b, ab).
inline TwoCocycle klein_cocycle(const Subgroup& h, const CyclotomicField::Ptr& field) {
    if (h.order() != 4) throw std::invalid_argument("klein_cocycle needs |H| = 4");
    const auto& g = h.parent();
    for (int x : h.elements())
        if (x != g->identity() && g->mul(x, x) != g->identity())
            throw std::invalid_argument("klein_cocycle: subgroup is not elementary abelian");
    int e = g->identity();
    std::vector<int> rest;
    for (int x : h.elements())
        if (x != e) rest.push_back(x);
    int a = rest[0], b = rest[1];
    auto ij_of = [&](int x) -> std::pair<int, int> {
        if (x == e) return {0, 0};
        if (x == a) return {1, 0};
        if (x == b) return {0, 1};
        return {1, 1};
    };
    int m = 4;
    std::vector<std::vector<Scalar>> v(m, std::vector<Scalar>(m));
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
            auto [i, j] = ij_of(h.elements()[p]);
            auto [k, l] = ij_of(h.elements()[q]);
            (void)i;
            (void)l;
            v[p][q] = (j * k) % 2 == 0 ? field->one() : -field->one();
        }
    return TwoCocycle(h, std::move(v));
}

}  // namespace gradex
