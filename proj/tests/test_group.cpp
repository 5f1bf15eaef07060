#include <catch2/catch_amalgamated.hpp>

#include "gradex/group.hpp"

using namespace gradex;

TEST_CASE("cyclic group tables") {
    auto c2 = FiniteGroup::cyclic(2);
    REQUIRE(c2->order() == 2);
    REQUIRE(c2->table() == std::vector<int>{0, 1, 1, 0});
    REQUIRE(c2->identity() == 0);

    auto c1 = FiniteGroup::cyclic(1);
    REQUIRE(c1->order() == 1);
}

TEST_CASE("symmetric group of degree 3") {
    auto s3 = FiniteGroup::symmetric(3);
    REQUIRE(s3->order() == 6);
    REQUIRE_FALSE(s3->is_abelian());
    REQUIRE(s3->exponent() == 6);
    // round trip through table validation
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) t[a][b] = s3->mul(a, b);
    auto copy = FiniteGroup::from_table(t);
    REQUIRE(copy->order() == 6);
}

TEST_CASE("corrupt tables are rejected with named axioms") {
    // row repeats an entry
    std::vector<std::vector<int>> bad{{0, 1}, {1, 1}};
    try {
        FiniteGroup::from_table(bad);
        FAIL("expected GroupValidationError");
    } catch (const GroupValidationError& e) {
        bool latin = false;
        for (const auto& v : e.violations)
            if (v.find("NotLatinSquare") != std::string::npos) latin = true;
        REQUIRE(latin);
    }

    // latin square without identity (and nonassociative): off-diagonal shift
    std::vector<std::vector<int>> noid{{1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
    try {
        FiniteGroup::from_table(noid);
        FAIL("expected GroupValidationError");
    } catch (const GroupValidationError& e) {
        REQUIRE_FALSE(e.violations.empty());
    }
}

TEST_CASE("S3 subgroup, cosets and conjugation") {
    auto s3 = FiniteGroup::symmetric(3);
    // lex-ordered permutations: 0=012, 1=021, 2=102, 3=120, 4=201, 5=210
    Subgroup h(s3, {0, 2});  // {e, (12)}
    REQUIRE(h.order() == 2);
    REQUIRE(h.index_in_parent() == 3);

    auto cosets = h.right_cosets();
    REQUIRE(cosets.size() == 3);
    std::size_t total = 0;
    for (const auto& c : cosets) {
        REQUIRE(c.size() == 2);
        total += c.size();
    }
    REQUIRE(total == 6);

    // conjugate by (123) = lex index 3; g^{-1} H g = {e, (13)} = {0, 5}
    auto conj = h.conjugate(3);
    REQUIRE(conj.elements() == std::vector<int>{0, 5});
    REQUIRE(conj.order() == h.order());
    // double conjugation by g then g^{-1} gives H back
    REQUIRE(conj.conjugate(s3->inv(3)).elements() == h.elements());
}

TEST_CASE("coset equality criterion") {
    auto s3 = FiniteGroup::symmetric(3);
    Subgroup h(s3, {0, 2});
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            bool same = h.right_coset(a) == h.right_coset(b);
            REQUIRE(same == h.same_right_coset(a, b));
        }
}

TEST_CASE("quotients") {
    auto c4 = FiniteGroup::cyclic(4);
    Subgroup h(c4, {0, 2});
    REQUIRE(h.is_normal());
    auto q = quotient_group(h);
    REQUIRE(q.group->order() == 2);
    REQUIRE(q.projection == std::vector<int>{0, 1, 0, 1});

    auto s3 = FiniteGroup::symmetric(3);
    Subgroup notnormal(s3, {0, 2});
    REQUIRE_FALSE(notnormal.is_normal());
    REQUIRE_THROWS_AS(quotient_group(notnormal), NotNormal);

    // A3 is normal in S3 and S3/A3 = C2. A3 = {e,(123),(132)} = {0,3,4}
    Subgroup a3(s3, {0, 3, 4});
    REQUIRE(a3.is_normal());
    REQUIRE(quotient_group(a3).group->order() == 2);
}

TEST_CASE("dihedral(2) is the Klein four-group") {
    auto k4 = FiniteGroup::dihedral(2);
    REQUIRE(k4->order() == 4);
    REQUIRE(k4->is_abelian());
    for (int a = 1; a < 4; ++a) REQUIRE(k4->element_order(a) == 2);
}

TEST_CASE("subgroup enumeration and Lagrange") {
    auto s3 = FiniteGroup::symmetric(3);
    auto subs = all_subgroups(s3);
    REQUIRE(subs.size() == 6);  // 1, three C2, A3, S3
    for (const auto& h : subs) REQUIRE(h.index_in_parent() * h.order() == s3->order());

    auto c6 = FiniteGroup::cyclic(6);
    REQUIRE(all_subgroups(c6).size() == 4);  // 1, C2, C3, C6
}

TEST_CASE("subgroup construction rejects non-subgroups") {
    auto c4 = FiniteGroup::cyclic(4);
    REQUIRE_THROWS(Subgroup(c4, {0, 1}));   // not closed
    REQUIRE_THROWS(Subgroup(c4, {1, 3}));   // no identity
}
