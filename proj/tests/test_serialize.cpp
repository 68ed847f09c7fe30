#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "toric/characters.hpp"
#include "toric/cohomology.hpp"
#include "toric/errors.hpp"
#include "toric/serialize.hpp"

using namespace toric;

namespace {

struct GroupData {
    RootSystem rs;
    WeylGroup w;
    ConjugacyClasses cc;
};

GroupData load_group(Type t, int n) {
    GroupData d{build_root_system(t, n), {}, {}};
    d.w = enumerate_group(d.rs);
    d.cc = conjugacy_classes(d.w, d.rs);
    return d;
}

RootSystem a2ex() {
    return custom_system(2, {{1, 0}, {2, 1}, {1, 2}, {0, 1}});
}

// Independent cover computation: all strict containments, minus the ones
// with an intermediate node.
std::set<std::pair<int, int>> brute_covers(const FixedPoset& p) {
    std::set<std::pair<int, int>> out;
    const int n = p.node_count();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!p.nodes[i].orbit_set.proper_subset_of(p.nodes[j].orbit_set)) continue;
            bool direct = true;
            for (int k = 0; k < n && direct; ++k)
                direct = !(p.nodes[i].orbit_set.proper_subset_of(p.nodes[k].orbit_set) &&
                           p.nodes[k].orbit_set.proper_subset_of(p.nodes[j].orbit_set));
            if (direct) out.insert({i, j});
        }
    return out;
}

std::filesystem::path fresh_dir(const std::string& stem) {
    auto dir = std::filesystem::temp_directory_path() / stem;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("poincare renderers emit the pinned formats") {
    RootSystem rs = a2ex();
    CohomologyOptions opts;
    EquivariantTable t = custom_identity_table(rs, opts);
    REQUIRE(t.class_count() == 1);

    CHECK(render_poincare_text(t) == "12t^2 + 6t + 1\n");
    CHECK(render_poincare_csv(t) == "label,size,c0,c1,c2\n\"identity\",1,1,6,12\n");

    auto doc = nlohmann::json::parse(render_poincare_json(t));
    CHECK(doc["system"] == "custom2");
    CHECK(doc["classes"].size() == 1);
    CHECK(doc["classes"][0]["label"] == "identity");
    CHECK(doc["classes"][0]["size"] == 1);
    CHECK(doc["classes"][0]["poincare"] == nlohmann::json({1, 6, 12}));

    std::string tex = render_poincare_latex(t);
    CHECK(tex.find("\\begin{tabular}") != std::string::npos);
    CHECK(tex.find("12") != std::string::npos);

    GroupData g2 = load_group(Type::G, 2);
    EquivariantTable full = equivariant_table(g2.rs, g2.w, g2.cc);
    std::string text = render_poincare_text(full);
    // One labeled line per class, identity first.
    CHECK(std::count(text.begin(), text.end(), '\n') == full.class_count());
    CHECK(text.find(full.labels[0] + ": 19t^2 + 8t + 1\n") == 0);
}

TEST_CASE("decomposition table renders with exact multiplicities") {
    GroupData g2 = load_group(Type::G, 2);
    CharacterTable chars = dixon_table(g2.w, g2.cc, g2.rs);
    apply_phi_names(chars, g2.cc);
    EquivariantTable coh = equivariant_table(g2.rs, g2.w, g2.cc);
    DecompositionTable dt = decompose_cohomology(coh, chars);

    REQUIRE(dt.multiplicities.size() == 3); // degrees 0..2
    auto col = [&](const std::string& name) {
        for (size_t r = 0; r < dt.names.size(); ++r)
            if (dt.names[r] == name) return static_cast<int>(r);
        REQUIRE(false);
        return -1;
    };
    const std::vector<std::pair<std::string, std::vector<i64>>> expected = {
        {"phi1^0", {1, 2, 2}}, {"phi1^6", {0, 0, 1}},   {"phi1,1^3", {0, 0, 1}},
        {"phi1,2^3", {0, 0, 1}}, {"phi2^1", {0, 1, 3}}, {"phi2^2", {0, 2, 4}},
    };
    for (const auto& [name, column] : expected)
        for (int k = 0; k <= 2; ++k) CHECK(dt.multiplicities[k][col(name)] == column[k]);

    std::string csv = render_decomposition_csv(dt);
    CHECK(csv.find("\"phi1,1^3\"") != std::string::npos);
    CHECK(csv.rfind("degree,", 0) == 0);

    std::string tex = render_decomposition_latex(dt);
    // Six irreducibles fit one block of ten columns.
    CHECK(std::count(tex.begin(), tex.end(), '&') > 0);
    size_t blocks = 0;
    for (size_t at = tex.find("\\begin{tabular}"); at != std::string::npos;
         at = tex.find("\\begin{tabular}", at + 1))
        ++blocks;
    CHECK(blocks == 1);

    auto doc = nlohmann::json::parse(render_decomposition_json(dt));
    CHECK(doc["decomposition"]["irreducibles"].size() == 6);
    CHECK(doc["decomposition"]["multiplicities"].size() == 3);
    CHECK(doc["classes"].size() == g2.cc.count());
}

TEST_CASE("f4 decomposition latex splits into ten-column blocks") {
    GroupData f4 = load_group(Type::F, 4);
    CharacterTable chars = dixon_table(f4.w, f4.cc, f4.rs);
    apply_phi_names(chars, f4.cc);
    EquivariantTable coh = equivariant_table(f4.rs, f4.w, f4.cc);
    DecompositionTable dt = decompose_cohomology(coh, chars);

    std::string tex = render_decomposition_latex(dt);
    size_t blocks = 0;
    for (size_t at = tex.find("\\begin{tabular}"); at != std::string::npos;
         at = tex.find("\\begin{tabular}", at + 1))
        ++blocks;
    CHECK(blocks == 3); // 25 columns -> 10 + 10 + 5
    CHECK(tex.find("\\varphi_{16}^{5}") != std::string::npos);
}

TEST_CASE("poset json export round trips and validates") {
    GroupData g2 = load_group(Type::G, 2);
    FixedPoset p = fixed_poset(g2.rs, IntMatrix::identity(2));
    compute_mobius(p);

    std::string text = poset_to_json(p, "G2", g2.cc.labels[0], true);
    FixedPoset back = poset_from_json(text);
    REQUIRE(back.node_count() == p.node_count());
    CHECK(back.ambient == p.ambient);
    CHECK(back.saturated == p.saturated);
    CHECK(back.mobius_ready);
    CHECK(back.orbits == p.orbits);
    for (int i = 0; i < p.node_count(); ++i) {
        CHECK(back.nodes[i].module.basis == p.nodes[i].module.basis);
        CHECK(back.nodes[i].rank == p.nodes[i].rank);
        CHECK(back.nodes[i].mobius == p.nodes[i].mobius);
        CHECK(back.nodes[i].orbit_set == p.nodes[i].orbit_set);
    }

    // Cover relations in the export match a brute transitive reduction.
    auto doc = nlohmann::json::parse(text);
    std::set<std::pair<int, int>> covers;
    for (const auto& edge : doc["covers"])
        covers.insert({edge[0].get<int>(), edge[1].get<int>()});
    CHECK(covers == brute_covers(p));

    RootSystem a2 = build_root_system(Type::A, 2);
    FixedPoset small = fixed_poset(a2, IntMatrix::identity(2));
    compute_mobius(small);
    auto small_doc = nlohmann::json::parse(poset_to_json(small, "A2", "id", true));
    CHECK(small_doc["covers"].size() == 6); // bottom under three lines under top

    CHECK_THROWS_AS(poset_from_json("this is not json"), SchemaError);
    CHECK_THROWS_AS(poset_from_json("{}"), SchemaError);

    nlohmann::json bad = doc;
    bad["nodes"][2]["orbits"].push_back(999); // orbit index out of range
    CHECK_THROWS_AS(poset_from_json(bad.dump()), SchemaError);

    nlohmann::json ragged = doc;
    ragged["nodes"][3]["basis"][0].push_back(7);
    CHECK_THROWS_AS(poset_from_json(ragged.dump()), SchemaError);
}

TEST_CASE("poset summary text groups by rank") {
    RootSystem rs = a2ex();
    FixedPoset p = fixed_poset(rs, IntMatrix::identity(2));
    compute_mobius(p);
    CHECK(render_poset_summary(p) ==
          "nodes: 9\n"
          "rank 0: nodes 1, mobius sum 1\n"
          "rank 1: nodes 4, mobius sum -4\n"
          "rank 2: nodes 4, mobius sum 3\n");
}

TEST_CASE("poset cache hits, misses, and rejects tampering") {
    auto dir = fresh_dir("toric_cache_test");
    PosetCache cache{dir.string()};

    std::string key = cache_key("G2", "toric", "some-class");
    CHECK(key.size() == 16);
    CHECK(key != cache_key("G2", "toric", "other-class"));
    CHECK(key != cache_key("G2", "hyperplane", "some-class"));
    CHECK(!cache.load(key).has_value());

    GroupData g2 = load_group(Type::G, 2);
    FixedPoset p = fixed_poset(g2.rs, IntMatrix::identity(2));
    compute_mobius(p);
    cache.store(key, p, "G2", "some-class");

    auto hit = cache.load(key);
    REQUIRE(hit.has_value());
    CHECK(hit->node_count() == p.node_count());
    for (int i = 0; i < p.node_count(); ++i) {
        CHECK(hit->nodes[i].module.basis == p.nodes[i].module.basis);
        CHECK(hit->nodes[i].mobius == p.nodes[i].mobius);
    }

    // Tampering with any stored mobius value below the top is caught.
    auto path = cache.path_for(key);
    nlohmann::json doc;
    {
        std::ifstream in(path);
        in >> doc;
    }
    doc["nodes"][1]["mobius"] = static_cast<i64>(doc["nodes"][1]["mobius"]) + 1;
    {
        std::ofstream out(path);
        out << doc;
    }
    CHECK(!cache.load(key).has_value());

    {
        std::ofstream out(path);
        out << "garbage";
    }
    CHECK(!cache.load(key).has_value());

    // A disabled cache loads nothing and stores nothing.
    PosetCache off{""};
    CHECK(!off.load(key).has_value());
    off.store(key, p, "G2", "some-class"); // no effect, no error

    std::filesystem::remove_all(dir);
}

TEST_CASE("cached pipelines agree with the direct ones") {
    auto dir = fresh_dir("toric_cache_pipeline");
    PosetCache cache{dir.string()};
    CohomologyOptions opts;

    GroupData g2 = load_group(Type::G, 2);
    EquivariantTable direct = equivariant_table(g2.rs, g2.w, g2.cc);
    EquivariantTable cold = cached_equivariant_table(g2.rs, g2.w, g2.cc, cache, opts);
    EquivariantTable warm = cached_equivariant_table(g2.rs, g2.w, g2.cc, cache, opts);
    REQUIRE(cold.class_count() == direct.class_count());
    for (int c = 0; c < direct.class_count(); ++c) {
        CHECK(cold.rows[c] == direct.rows[c]);
        CHECK(warm.rows[c] == direct.rows[c]);
    }
    // The warm run found one file per class in the cache.
    size_t files = 0;
    for (auto it = std::filesystem::directory_iterator(dir);
         it != std::filesystem::directory_iterator(); ++it)
        ++files;
    CHECK(files == static_cast<size_t>(g2.cc.count()));

    RootSystem ex = a2ex();
    Polynomial via_cache =
        cached_complement_poincare(ex, IntMatrix::identity(2), "identity", cache, opts);
    CHECK(via_cache == complement_poincare(ex, IntMatrix::identity(2), opts));
    CHECK(cached_complement_poincare(ex, IntMatrix::identity(2), "identity", cache, opts) ==
          via_cache);

    // Empty arrangement: single-node poset survives the cache round trip.
    RootSystem none = custom_system(3, {});
    Polynomial empty_poly =
        cached_complement_poincare(none, IntMatrix::identity(3), "identity", cache, opts);
    CHECK(empty_poly == poly_from({1, 3, 3, 1}));
    CHECK(cached_complement_poincare(none, IntMatrix::identity(3), "identity", cache, opts) ==
          empty_poly);

    std::filesystem::remove_all(dir);
}

TEST_CASE("rendered bytes do not depend on the thread count") {
    for (auto [t, n] : std::vector<std::pair<Type, int>>{{Type::G, 2}, {Type::A, 3}, {Type::B, 3}}) {
        GroupData d = load_group(t, n);
        CohomologyOptions one, many;
        one.threads = 1;
        many.threads = 4;
        PosetCache off{""};
        EquivariantTable t1 = cached_equivariant_table(d.rs, d.w, d.cc, off, one);
        EquivariantTable tn = cached_equivariant_table(d.rs, d.w, d.cc, off, many);
        CHECK(render_poincare_json(t1) == render_poincare_json(tn));
        CHECK(render_poincare_csv(t1) == render_poincare_csv(tn));

        CharacterTable chars = d.rs.type == Type::A ? symmetric_group_table(d.rs, d.w, d.cc)
                                                    : dixon_table(d.w, d.cc, d.rs);
        if (d.rs.type != Type::A) apply_phi_names(chars, d.cc);
        CHECK(render_decomposition_json(decompose_cohomology(t1, chars)) ==
              render_decomposition_json(decompose_cohomology(tn, chars)));
    }

    FixedPoset p1 = fixed_poset(build_root_system(Type::B, 3), IntMatrix::identity(3), {}, 1);
    FixedPoset p4 = fixed_poset(build_root_system(Type::B, 3), IntMatrix::identity(3), {}, 4);
    compute_mobius(p1, 1);
    compute_mobius(p4, 4);
    CHECK(poset_to_json(p1, "B3", "id", true) == poset_to_json(p4, "B3", "id", true));
}
