#include "doctest.h"

#include <tuple>

#include "oracles.hpp"
#include "toric/errors.hpp"
#include "toric/weyl.hpp"

using namespace toric;

TEST_CASE("group enumeration matches classified orders") {
    const std::vector<std::pair<Type, int>> cases = {
        {Type::A, 1}, {Type::A, 2}, {Type::A, 3}, {Type::A, 4}, {Type::A, 5},
        {Type::B, 2}, {Type::B, 3}, {Type::C, 3}, {Type::D, 4},
        {Type::G, 2}, {Type::F, 4},
    };
    for (auto [t, n] : cases) {
        RootSystem rs = build_root_system(t, n);
        WeylGroup w = enumerate_group(rs);
        CHECK(w.size() == classified_group_order(t, n));
        // Round-trip a few elements through the packed representation.
        for (i64 i = 0; i < w.size(); i += std::max<i64>(1, w.size() / 7))
            CHECK(w.index_of(w.element(i)) == i);
    }
}

TEST_CASE("E6 order cross-checked against the degree product") {
    RootSystem rs = build_root_system(Type::E, 6);
    WeylGroup w = enumerate_group(rs);
    CHECK(w.size() == 2 * 5 * 6 * 8 * 9 * 12);
}

TEST_CASE("enumeration budget refuses E7 by default") {
    RootSystem rs = build_root_system(Type::E, 7);
    CHECK_THROWS_AS(enumerate_group(rs), BudgetError);

    GroupBudget tiny;
    tiny.max_bytes = 1024;
    RootSystem a3 = build_root_system(Type::A, 3);
    CHECK_THROWS_AS(enumerate_group(a3, tiny), BudgetError);
}

TEST_CASE("conjugacy class counts and basic structure") {
    const std::vector<std::tuple<Type, int, int>> cases = {
        {Type::A, 2, 3}, {Type::A, 3, 5}, {Type::A, 4, 7}, {Type::A, 5, 11},
        {Type::B, 2, 5}, {Type::G, 2, 6}, {Type::F, 4, 25},
    };
    for (auto [t, n, k] : cases) {
        RootSystem rs = build_root_system(t, n);
        WeylGroup w = enumerate_group(rs);
        ConjugacyClasses cc = conjugacy_classes(w, rs);
        CHECK(cc.count() == k);
        CHECK(cc.representatives[0].is_identity());
        CHECK(cc.sizes[0] == 1);

        i64 total = 0;
        for (int c = 0; c < cc.count(); ++c) {
            total += cc.sizes[c];
            CHECK(w.size() % cc.sizes[c] == 0); // class size divides group order
            CHECK(cc.class_of(w, cc.representatives[c]) == c);
        }
        CHECK(total == w.size());

        // Labels must be unique.
        for (int a = 0; a < cc.count(); ++a)
            for (int b = a + 1; b < cc.count(); ++b) CHECK(cc.labels[a] != cc.labels[b]);

        // Conjugating a representative by a generator stays in its class.
        for (const auto& s : simple_reflections(rs))
            for (int c = 0; c < cc.count(); ++c)
                CHECK(cc.class_of(w, s.mul(cc.representatives[c]).mul(s)) == c);
    }
}

TEST_CASE("orbit structure on roots") {
    RootSystem a2 = build_root_system(Type::A, 2);
    auto refl = simple_reflections(a2);

    auto orbits_id = orbits_on_roots(IntMatrix::identity(2), a2);
    CHECK(orbits_id.size() == 6);

    // Coxeter element: two orbits of size three.
    IntMatrix cox = refl[0].mul(refl[1]);
    auto orbits_cox = orbits_on_roots(cox, a2);
    REQUIRE(orbits_cox.size() == 2);
    CHECK(orbits_cox[0].size() == 3);
    CHECK(orbits_cox[1].size() == 3);
    CHECK(element_order(cox) == 3);

    // A single reflection: three orbits of size two.
    auto orbits_r = orbits_on_roots(refl[0], a2);
    REQUIRE(orbits_r.size() == 3);
    for (const auto& o : orbits_r) CHECK(o.size() == 2);

    // Orbits start at their lexicographically smallest member.
    for (const auto& orbit : orbits_cox)
        for (size_t i = 1; i < orbit.size(); ++i)
            CHECK(a2.root(orbit[0]) < a2.root(orbit[i]));

    CHECK(fixed_line_count(refl[0], a2) == 1);
    CHECK(fixed_line_count(IntMatrix::identity(2), a2) == 3);
    CHECK(line_cycle_type(cox, a2) == std::vector<int>{3});
}

TEST_CASE("orbit partition covers the roots exactly once for every F4 class") {
    RootSystem f4 = build_root_system(Type::F, 4);
    WeylGroup w = enumerate_group(f4);
    ConjugacyClasses cc = conjugacy_classes(w, f4);
    for (int c = 0; c < cc.count(); ++c) {
        auto orbits = orbits_on_roots(cc.representatives[c], f4);
        std::vector<int> hit(2 * f4.positive_count(), 0);
        size_t total = 0;
        for (const auto& o : orbits) {
            total += o.size();
            for (int idx : o) hit[idx]++;
        }
        REQUIRE(total == hit.size());
        for (int h : hit) REQUIRE(h == 1);
        // Orbit size divides the element order.
        i64 ord = element_order(cc.representatives[c]);
        for (const auto& o : orbits) REQUIRE(ord % o.size() == 0);
    }
}
