#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "gradex/gsimple.hpp"

using namespace gradex;

namespace {

GSimpleAlgebra elementary(const FiniteGroup::Ptr& g, std::vector<int> tuple, unsigned n) {
    auto field = CyclotomicField::get(n);
    return GSimpleAlgebra(
        TwistedGroupAlgebra(TwoCocycle::trivial(Subgroup::trivial(g), field)), std::move(tuple));
}

GSimpleAlgebra group_algebra_component(const FiniteGroup::Ptr& g, unsigned n) {
    auto field = CyclotomicField::get(n);
    return GSimpleAlgebra(TwistedGroupAlgebra(TwoCocycle::trivial(Subgroup::whole(g), field)),
                          {g->identity()});
}

GSimpleAlgebra klein_component(std::vector<int> tuple, unsigned n = 4) {
    auto field = CyclotomicField::get(n);
    auto k4 = FiniteGroup::dihedral(2);
    return GSimpleAlgebra(TwistedGroupAlgebra(klein_cocycle(Subgroup::whole(k4), field)),
                          std::move(tuple));
}

void check_string_properties(const GSimpleAlgebra& b, int k) {
    auto z = string_monomial(b, k);
    int r = b.r();
    REQUIRE(static_cast<int>(z.size()) == r * r);
    std::set<std::pair<int, int>> pairs;
    int prev_col = -1;
    for (std::size_t t = 0; t < z.size(); ++t) {
        auto [h, i, j] = b.basis_split(z[t].basis);
        REQUIRE(h == b.identity_position());
        REQUIRE(pairs.emplace(i, j).second);  // no repetitions
        if (t > 0) REQUIRE(i == prev_col);    // Eulerian chaining
        prev_col = j;
    }
    REQUIRE(static_cast<int>(pairs.size()) == r * r);
    auto [h0, i0, j0] = b.basis_split(z.front().basis);
    REQUIRE(i0 == k);
    REQUIRE(j0 == k);
    auto [hl, il, jl] = b.basis_split(z.back().basis);
    REQUIRE(jl == k);
    if (r >= 2) REQUIRE(il != k);
    auto value = monomial_value(b, z);
    REQUIRE(value);
    REQUIRE(value->first == b.field()->one());
    REQUIRE(value->second == b.basis_index(b.identity_position(), k, k));
}

void check_enhanced_properties(const GSimpleAlgebra& b, int k) {
    auto zhat = enhanced_string_monomial(b, k);
    // starts with 1 (x) e_{k,k}
    REQUIRE(zhat.front().basis == b.idempotent(k));
    REQUIRE(zhat.front().coeff == b.field()->one());
    // ends at column k
    auto [hl, il, jl] = b.basis_split(zhat.back().basis);
    REQUIRE(jl == k);
    // total value exactly 1 (x) e_{k,k}
    auto value = monomial_value(b, zhat);
    REQUIRE(value);
    REQUIRE(value->first == b.field()->one());
    REQUIRE(value->second == b.idempotent(k));
    // every idempotent appears
    for (int i = 0; i < b.r(); ++i) {
        bool found = false;
        for (const auto& f : zhat)
            if (f.basis == b.idempotent(i) && f.coeff == b.field()->one()) found = true;
        REQUIRE(found);
    }
    // coset condition: the prefix degrees at occurrences of 1 (x) e_{i,i}
    // fill a full left coset of g_{k_i}^{-1} H g_{k_i}
    const auto& g = b.group();
    for (int i = 0; i < b.r(); ++i) {
        std::set<int> degrees;
        int run = g->identity();
        for (const auto& f : zhat) {
            if (f.basis == b.idempotent(i) && f.coeff == b.field()->one()) degrees.insert(run);
            run = g->mul(run, b.degree(f.basis));
        }
        REQUIRE_FALSE(degrees.empty());
        int base = *degrees.begin();
        std::set<int> coset;
        for (int h : b.subgroup().elements()) {
            int conj = g->mul(g->mul(g->inv(b.tuple()[i]), h), b.tuple()[i]);
            coset.insert(g->mul(base, conj));
        }
        REQUIRE(degrees == coset);
    }
}

}  // namespace

TEST_CASE("degrees and components in normal form") {
    auto c2 = FiniteGroup::cyclic(2);
    auto b = elementary(c2, {0, 1}, 2);  // M_2 with tuple (e, g)
    REQUIRE(b.dim() == 4);
    // deg(1 (x) e_{1,2}) = e^{-1} e g = g
    REQUIRE(b.degree(b.basis_index(0, 0, 1)) == 1);
    REQUIRE(b.component_indices(0) ==
            std::vector<int>{b.basis_index(0, 0, 0), b.basis_index(0, 1, 1)});
    REQUIRE(b.component(0).dim() == 2);
    REQUIRE(b.component(1).dim() == 2);

    // idempotents and the identity are homogeneous of degree e
    for (int i = 0; i < b.r(); ++i) REQUIRE(b.degree(b.idempotent(i)) == 0);

    auto fc2 = group_algebra_component(c2, 2);  // H = G = C2, r = 1
    REQUIRE(fc2.dim() == 2);
    auto two = GSimpleAlgebra(fc2.twisted(), {0, 0});  // H = G = C2, r = 2, tuple (e,e)
    REQUIRE(two.component(0).dim() == 4);
    std::vector<int> expect;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) expect.push_back(two.basis_index(0, i, j));
    std::sort(expect.begin(), expect.end());
    REQUIRE(two.component_indices(0) == expect);
    // total dimension splits over the degrees
    int total = 0;
    for (int g = 0; g < 2; ++g) total += static_cast<int>(two.component_indices(g).size());
    REQUIRE(total == two.dim());
}

TEST_CASE("grading compatibility and associativity of the basis product") {
    auto s3 = FiniteGroup::symmetric(3);
    auto field = CyclotomicField::get(6);
    Subgroup a3(s3, {0, 3, 4});
    GSimpleAlgebra b(TwistedGroupAlgebra(TwoCocycle::trivial(a3, field)), {0, 2});
    for (int x = 0; x < b.dim(); ++x)
        for (int y = 0; y < b.dim(); ++y) {
            auto p = b.mul_basis(x, y);
            if (p) REQUIRE(b.degree(p->second) == s3->mul(b.degree(x), b.degree(y)));
        }

    auto kb = klein_component({0, 1});
    for (int x = 0; x < kb.dim(); ++x)
        for (int y = 0; y < kb.dim(); ++y)
            for (int z = 0; z < kb.dim(); ++z) {
                auto lhs_xy = kb.mul_basis(x, y);
                std::optional<std::pair<Scalar, int>> lhs;
                if (lhs_xy) {
                    auto q = kb.mul_basis(lhs_xy->second, z);
                    if (q) lhs = std::make_pair(lhs_xy->first * q->first, q->second);
                }
                auto rhs_yz = kb.mul_basis(y, z);
                std::optional<std::pair<Scalar, int>> rhs;
                if (rhs_yz) {
                    auto q = kb.mul_basis(x, rhs_yz->second);
                    if (q) rhs = std::make_pair(rhs_yz->first * q->first, q->second);
                }
                REQUIRE(lhs.has_value() == rhs.has_value());
                if (lhs) {
                    REQUIRE(lhs->first == rhs->first);
                    REQUIRE(lhs->second == rhs->second);
                }
            }
}

TEST_CASE("canonical reorder groups cosets contiguously") {
    auto c2 = FiniteGroup::cyclic(2);
    auto b = elementary(c2, {1, 0, 1}, 2);  // (g, e, g)
    auto [sorted, perm] = canonical_reorder(b);
    REQUIRE(sorted.tuple() == std::vector<int>{0, 1, 1});
    REQUIRE(perm == std::vector<int>{1, 0, 2});

    auto already = elementary(c2, {0, 1, 1}, 2);
    REQUIRE(canonical_reorder(already).second == std::vector<int>{0, 1, 2});

    auto whole = group_algebra_component(c2, 2);
    auto single = GSimpleAlgebra(whole.twisted(), {0, 1, 1});  // H = G: one coset
    REQUIRE(canonical_reorder(single).second == std::vector<int>{0, 1, 2});

    // after reordering, the e-component support is block-diagonal
    auto blocks = e_block_decomposition(sorted);
    for (int idx : sorted.component_indices(0)) {
        auto [h, i, j] = sorted.basis_split(idx);
        REQUIRE(blocks.block_of_index[i] == blocks.block_of_index[j]);
    }
}

TEST_CASE("e-block decomposition shapes") {
    auto c2 = FiniteGroup::cyclic(2);
    auto b = elementary(c2, {0, 1}, 2);
    auto d = e_block_decomposition(b);
    REQUIRE(d.block_sizes == std::vector<int>{1, 1});

    auto whole = group_algebra_component(c2, 2);
    auto full = GSimpleAlgebra(whole.twisted(), {0, 0});
    REQUIRE(e_block_decomposition(full).block_sizes == std::vector<int>{2});

    auto c3 = FiniteGroup::cyclic(3);
    auto b3 = elementary(c3, {0, 0, 1}, 3);
    REQUIRE(e_block_decomposition(b3).block_sizes == std::vector<int>{2, 1, 0});

    // dim(B_e) = sum of t_i^2, against direct enumeration
    const GSimpleAlgebra* algs[] = {&b, &full, &b3};
    for (const auto* alg : algs) {
        auto dec = e_block_decomposition(*alg);
        int sumsq = 0;
        for (int t : dec.block_sizes) sumsq += t * t;
        REQUIRE(static_cast<int>(alg->component_indices(alg->group()->identity()).size()) ==
                sumsq);
    }
}

TEST_CASE("string monomial examples") {
    auto c1 = FiniteGroup::cyclic(1);
    auto b1 = elementary(c1, {0}, 1);
    auto z1 = string_monomial(b1, 0);
    REQUIRE(z1.size() == 1);
    REQUIRE(z1[0].basis == b1.basis_index(0, 0, 0));

    auto c2 = FiniteGroup::cyclic(2);
    auto b2 = elementary(c2, {0, 1}, 2);
    auto z2 = string_monomial(b2, 0);
    // deterministic circuit: e11, e12, e22, e21
    REQUIRE(z2.size() == 4);
    REQUIRE(b2.basis_split(z2[0].basis) == std::make_tuple(0, 0, 0));
    REQUIRE(b2.basis_split(z2[1].basis) == std::make_tuple(0, 0, 1));
    REQUIRE(b2.basis_split(z2[2].basis) == std::make_tuple(0, 1, 1));
    REQUIRE(b2.basis_split(z2[3].basis) == std::make_tuple(0, 1, 0));

    auto c3 = FiniteGroup::cyclic(3);
    auto b3 = elementary(c3, {0, 1, 2}, 3);
    auto z3 = string_monomial(b3, 1);
    REQUIRE(z3.size() == 9);
    auto v3 = monomial_value(b3, z3);
    REQUIRE(v3);
    REQUIRE(v3->second == b3.basis_index(0, 1, 1));

    for (int r = 1; r <= 5; ++r) {
        auto b = elementary(c2, std::vector<int>(static_cast<std::size_t>(r), 0), 2);
        for (int k = 0; k < r; ++k) check_string_properties(b, k);
    }
}

TEST_CASE("enhanced string monomials") {
    // H trivial: Z-hat = Z, no tail needed
    auto c2 = FiniteGroup::cyclic(2);
    auto b2 = elementary(c2, {0, 1}, 2);
    auto z = string_monomial(b2, 0);
    auto zh = enhanced_string_monomial(b2, 0);
    REQUIRE(zh.size() == z.size());
    for (std::size_t t = 0; t < z.size(); ++t) REQUIRE(zh[t].basis == z[t].basis);

    // H = G = C2, r = 1: u_e . z . u_g . z plus correcting tail
    auto fc2 = group_algebra_component(c2, 2);
    auto zh2 = enhanced_string_monomial(fc2, 0);
    REQUIRE(zh2.size() == 5);
    REQUIRE(zh2[0].basis == fc2.basis_index(0, 0, 0));
    REQUIRE(zh2[1].basis == fc2.basis_index(0, 0, 0));
    REQUIRE(zh2[2].basis == fc2.basis_index(1, 0, 0));
    REQUIRE(zh2[3].basis == fc2.basis_index(0, 0, 0));
    REQUIRE(zh2[4].basis == fc2.basis_index(1, 0, 0));
    check_enhanced_properties(fc2, 0);

    // Klein cocycle component with r = 2: lambda absorbs the cocycle product
    auto kb = klein_component({0, 1});
    for (int k = 0; k < 2; ++k) check_enhanced_properties(kb, k);

    auto s3 = FiniteGroup::symmetric(3);
    auto field = CyclotomicField::get(6);
    Subgroup a3(s3, {0, 3, 4});
    GSimpleAlgebra ba3(TwistedGroupAlgebra(TwoCocycle::trivial(a3, field)), {0, 2, 2});
    for (int k = 0; k < 3; ++k) check_enhanced_properties(ba3, k);
}

TEST_CASE("pad monomials fix semisimple elements") {
    // r = 1, H trivial: X, Y empty and E is the single idempotent
    auto c1 = FiniteGroup::cyclic(1);
    auto b1 = elementary(c1, {0}, 1);
    auto pad1 = pad_monomial(b1, b1.basis_index(0, 0, 0), PadSide::left);
    REQUIRE(pad1.x.empty());
    REQUIRE(pad1.y.empty());
    REQUIRE(pad1.e.size() == 1);
    REQUIRE(pad1.e[0].basis == b1.idempotent(0));

    auto check_pad = [](const GSimpleAlgebra& b, int basis, PadSide side) {
        auto pad = pad_monomial(b, basis, side);
        REQUIRE(pad.e.front().basis == b.idempotent(0));
        auto ev = monomial_value(b, pad.e);
        REQUIRE(ev);
        REQUIRE(ev->first == b.field()->one());
        REQUIRE(ev->second == b.idempotent(0));
        GradedMonomial whole;
        if (side == PadSide::right) whole.push_back({basis, b.field()->one()});
        whole.insert(whole.end(), pad.x.begin(), pad.x.end());
        whole.insert(whole.end(), pad.e.begin(), pad.e.end());
        whole.insert(whole.end(), pad.y.begin(), pad.y.end());
        if (side == PadSide::left) whole.push_back({basis, b.field()->one()});
        auto v = monomial_value(b, whole);
        REQUIRE(v);
        REQUIRE(v->first == b.field()->one());
        REQUIRE(v->second == basis);
    };

    auto c2 = FiniteGroup::cyclic(2);
    auto b2 = elementary(c2, {0, 1}, 2);
    check_pad(b2, b2.basis_index(0, 0, 1), PadSide::left);  // 1 (x) e_{1,2}
    check_pad(b2, b2.basis_index(0, 0, 1), PadSide::right);

    auto fc2 = group_algebra_component(c2, 2);
    auto wide = GSimpleAlgebra(fc2.twisted(), {0, 0});
    check_pad(wide, wide.basis_index(1, 1, 0), PadSide::right);  // u_g (x) e_{2,1}
    check_pad(wide, wide.basis_index(1, 1, 0), PadSide::left);

    auto kb = klein_component({0, 1});
    int cases[] = {kb.basis_index(1, 0, 1), kb.basis_index(3, 1, 1)};
    for (int basis : cases) {
        check_pad(kb, basis, PadSide::left);
        check_pad(kb, basis, PadSide::right);
    }
}
