#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "toric/characters.hpp"
#include "toric/cohomology.hpp"
#include "toric/errors.hpp"

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

int column_by_tag(const CharacterTable& table, const std::string& tag) {
    for (int c = 0; c < table.class_count(); ++c)
        if (table.class_tags[c] == tag) return c;
    REQUIRE(false);
    return -1;
}

int row_by_name(const CharacterTable& table, const std::string& name) {
    for (int r = 0; r < table.irr_count(); ++r)
        if (table.names[r] == name) return r;
    REQUIRE(false);
    return -1;
}

std::multiset<std::vector<i64>> row_set(const CharacterTable& table) {
    return {table.values.begin(), table.values.end()};
}

// Check one table entry through the (name, cycle type) coordinates.
void check_entry(const CharacterTable& t, const std::string& name, const std::string& tag,
                 i64 expected) {
    CHECK(t.values[row_by_name(t, name)][column_by_tag(t, tag)] == expected);
}

std::filesystem::path temp_json(const std::string& stem) {
    return std::filesystem::temp_directory_path() / (stem + ".json");
}

} // namespace

TEST_CASE("symmetric group tables match the classical small tables") {
    GroupData a2 = load_group(Type::A, 2);
    CharacterTable s3 = symmetric_group_table(a2.rs, a2.w, a2.cc);
    REQUIRE(s3.irr_count() == 3);
    for (auto [name, tag, v] : std::vector<std::tuple<std::string, std::string, i64>>{
             {"[3]", "[1,1,1]", 1},   {"[3]", "[2,1]", 1},      {"[3]", "[3]", 1},
             {"[1,1,1]", "[1,1,1]", 1}, {"[1,1,1]", "[2,1]", -1}, {"[1,1,1]", "[3]", 1},
             {"[2,1]", "[1,1,1]", 2}, {"[2,1]", "[2,1]", 0},    {"[2,1]", "[3]", -1}})
        check_entry(s3, name, tag, v);

    GroupData a3 = load_group(Type::A, 3);
    CharacterTable s4 = symmetric_group_table(a3.rs, a3.w, a3.cc);
    REQUIRE(s4.irr_count() == 5);
    const std::vector<std::string> tags4 = {"[1,1,1,1]", "[2,1,1]", "[2,2]", "[3,1]", "[4]"};
    const std::vector<std::pair<std::string, std::vector<i64>>> rows4 = {
        {"[4]", {1, 1, 1, 1, 1}},
        {"[1,1,1,1]", {1, -1, 1, 1, -1}},
        {"[3,1]", {3, 1, -1, 0, -1}},
        {"[2,1,1]", {3, -1, -1, 0, 1}},
        {"[2,2]", {2, 0, 2, -1, 0}},
    };
    for (const auto& [name, vals] : rows4)
        for (size_t c = 0; c < tags4.size(); ++c) check_entry(s4, name, tags4[c], vals[c]);

    GroupData a4 = load_group(Type::A, 4);
    CharacterTable s5 = symmetric_group_table(a4.rs, a4.w, a4.cc);
    REQUIRE(s5.irr_count() == 7);
    const std::vector<std::string> tags5 = {"[1,1,1,1,1]", "[2,1,1,1]", "[2,2,1]",
                                            "[3,1,1]",     "[3,2]",     "[4,1]",
                                            "[5]"};
    const std::vector<std::pair<std::string, std::vector<i64>>> rows5 = {
        {"[5]", {1, 1, 1, 1, 1, 1, 1}},
        {"[1,1,1,1,1]", {1, -1, 1, 1, -1, -1, 1}},
        {"[4,1]", {4, 2, 0, 1, -1, 0, -1}},
        {"[2,1,1,1]", {4, -2, 0, 1, 1, 0, -1}},
        {"[3,2]", {5, 1, 1, -1, 1, -1, 0}},
        {"[2,2,1]", {5, -1, 1, -1, -1, 1, 0}},
        {"[3,1,1]", {6, 0, -2, 0, 0, 0, 1}},
    };
    for (const auto& [name, vals] : rows5)
        for (size_t c = 0; c < tags5.size(); ++c) check_entry(s5, name, tags5[c], vals[c]);
}

TEST_CASE("cycle types recovered from traces match known elements") {
    GroupData a3 = load_group(Type::A, 3);
    CharacterTable s4 = symmetric_group_table(a3.rs, a3.w, a3.cc);
    auto gens = simple_reflections(a3.rs);

    auto tag_of = [&](const IntMatrix& g) {
        return s4.class_tags[a3.cc.class_of(a3.w, g)];
    };
    CHECK(tag_of(IntMatrix::identity(3)) == "[1,1,1,1]");
    CHECK(tag_of(gens[0]) == "[2,1,1]");
    CHECK(tag_of(gens[0].mul(gens[1])) == "[3,1]");
    CHECK(tag_of(gens[0].mul(gens[2])) == "[2,2]");
    CHECK(tag_of(gens[0].mul(gens[1]).mul(gens[2])) == "[4]");
}

TEST_CASE("modular table computation agrees with the combinatorial one") {
    for (int n = 1; n <= 4; ++n) {
        GroupData d = load_group(Type::A, n);
        CharacterTable mn = symmetric_group_table(d.rs, d.w, d.cc);
        CharacterTable dx = dixon_table(d.w, d.cc, d.rs);
        CHECK(dx.class_labels == mn.class_labels);
        CHECK(dx.class_sizes == mn.class_sizes);
        CHECK(row_set(dx) == row_set(mn));
    }
}

TEST_CASE("character tables are exactly orthogonal with the right mass") {
    for (auto [t, n] : std::vector<std::pair<Type, int>>{{Type::A, 2},
                                                         {Type::A, 3},
                                                         {Type::A, 4},
                                                         {Type::A, 5},
                                                         {Type::B, 2},
                                                         {Type::B, 3},
                                                         {Type::G, 2},
                                                         {Type::F, 4}}) {
        GroupData d = load_group(t, n);
        CharacterTable table = dixon_table(d.w, d.cc, d.rs);
        REQUIRE(table.irr_count() == d.cc.count());
        orthogonality_check(table); // throws on any defect

        i64 mass = 0;
        for (int r = 0; r < table.irr_count(); ++r) {
            CHECK(table.values[r][0] > 0);
            mass += table.values[r][0] * table.values[r][0];
            for (int c = 0; c < table.class_count(); ++c)
                CHECK(std::abs(table.values[r][c]) <= table.values[r][0]);
        }
        CHECK(mass == d.w.size());

        // The all-ones row and the determinant row must both be present.
        std::vector<i64> ones(d.cc.count(), 1), dets(d.cc.count());
        for (int c = 0; c < d.cc.count(); ++c) dets[c] = d.cc.char_poly[c].back();
        auto rows = row_set(table);
        CHECK(rows.count(ones) == 1);
        CHECK(rows.count(dets) == 1);
    }
}

TEST_CASE("first symmetric power occurrences") {
    GroupData a2 = load_group(Type::A, 2);
    CharacterTable s3 = symmetric_group_table(a2.rs, a2.w, a2.cc);
    CHECK(first_symmetric_power(s3, a2.cc, row_by_name(s3, "[3]")) == 0);
    CHECK(first_symmetric_power(s3, a2.cc, row_by_name(s3, "[2,1]")) == 1);
    CHECK(first_symmetric_power(s3, a2.cc, row_by_name(s3, "[1,1,1]")) == 3);

    GroupData g2 = load_group(Type::G, 2);
    CharacterTable t = dixon_table(g2.w, g2.cc, g2.rs);
    // The sign character appears first in degree #positive roots.
    std::vector<i64> dets(g2.cc.count());
    for (int c = 0; c < g2.cc.count(); ++c) dets[c] = g2.cc.char_poly[c].back();
    for (int r = 0; r < t.irr_count(); ++r)
        if (t.values[r] == dets) CHECK(first_symmetric_power(t, g2.cc, r) == 6);
}

TEST_CASE("phi names for G2 and F4 cover the classical lists") {
    GroupData g2 = load_group(Type::G, 2);
    CharacterTable tg = dixon_table(g2.w, g2.cc, g2.rs);
    apply_phi_names(tg, g2.cc);
    CHECK(std::multiset<std::string>(tg.names.begin(), tg.names.end()) ==
          std::multiset<std::string>{"phi1^0", "phi1^6", "phi1,1^3", "phi1,2^3", "phi2^1",
                                     "phi2^2"});

    GroupData f4 = load_group(Type::F, 4);
    CharacterTable tf = dixon_table(f4.w, f4.cc, f4.rs);
    apply_phi_names(tf, f4.cc);
    CHECK(std::multiset<std::string>(tf.names.begin(), tf.names.end()) ==
          std::multiset<std::string>{
              "phi1^0",    "phi1^24",   "phi1,1^12", "phi1,2^12", "phi2,1^4",  "phi2,2^4",
              "phi2,1^16", "phi2,2^16", "phi4^1",    "phi4^8",    "phi4^13",   "phi4,1^7",
              "phi4,2^7",  "phi6,1^6",  "phi6,2^6",  "phi8,1^3",  "phi8,2^3",  "phi8,1^9",
              "phi8,2^9",  "phi9^2",    "phi9^10",   "phi9,1^6",  "phi9,2^6",  "phi12^4",
              "phi16^5"});
}

TEST_CASE("decomposition recovers pinned multiplicities and rejects junk") {
    GroupData g2 = load_group(Type::G, 2);
    CharacterTable t = dixon_table(g2.w, g2.cc, g2.rs);

    std::vector<i64> reg(g2.cc.count(), 0);
    reg[0] = g2.w.size();
    std::vector<i64> degrees(t.irr_count());
    for (int r = 0; r < t.irr_count(); ++r) degrees[r] = t.values[r][0];
    CHECK(decompose(t, reg) == degrees);

    std::vector<i64> ones(g2.cc.count(), 1);
    std::vector<i64> m = decompose(t, ones);
    i64 total = 0;
    for (int r = 0; r < t.irr_count(); ++r) {
        total += m[r];
        if (t.values[r] == ones) CHECK(m[r] == 1);
    }
    CHECK(total == 1);

    std::vector<i64> junk(g2.cc.count(), 0);
    junk[0] = 1; // tiny positive spike: fractional multiplicities
    CHECK_THROWS_AS(decompose(t, junk), IntegrityError);

    std::vector<i64> negative(g2.cc.count(), -1); // minus trivial
    CHECK_THROWS_AS(decompose(t, negative), IntegrityError);
}

TEST_CASE("A-type cohomology decomposes as regular plus induced copies") {
    for (int n = 2; n <= 3; ++n) {
        GroupData d = load_group(Type::A, n);
        CharacterTable table = symmetric_group_table(d.rs, d.w, d.cc);
        EquivariantTable coh = equivariant_table(d.rs, d.w, d.cc);

        std::vector<i64> total(d.cc.count());
        for (int c = 0; c < d.cc.count(); ++c) total[c] = coh.rows[c].eval(1);
        CHECK(total == a_type_total_character(d.rs, d.w, d.cc));

        std::vector<i64> reg(d.cc.count(), 0);
        reg[0] = d.w.size();
        std::vector<i64> ind = a_type_induced_character(d.rs, d.w, d.cc);
        std::vector<i64> mr = decompose(table, reg);
        std::vector<i64> mi = decompose(table, ind);
        std::vector<i64> mt = decompose(table, total);
        for (int r = 0; r < table.irr_count(); ++r) CHECK(mt[r] == mr[r] + n * mi[r]);

        // Degree 1 is the reflection character plus the line permutation one.
        std::vector<i64> h1(d.cc.count());
        for (int c = 0; c < d.cc.count(); ++c) h1[c] = coh.rows[c].coeff(1);
        std::vector<i64> lines(d.cc.count());
        for (int c = 0; c < d.cc.count(); ++c)
            lines[c] = fixed_line_count(d.cc.representatives[c], d.rs);
        std::vector<i64> mh = decompose(table, h1);
        std::vector<i64> ml = decompose(table, lines);
        int std_row = row_by_name(table, "[" + std::to_string(n) + ",1]");
        for (int r = 0; r < table.irr_count(); ++r)
            CHECK(mh[r] == ml[r] + (r == std_row ? 1 : 0));
    }
}

TEST_CASE("character table files survive the round trip") {
    GroupData g2 = load_group(Type::G, 2);
    CharacterTable t = dixon_table(g2.w, g2.cc, g2.rs);
    apply_phi_names(t, g2.cc);

    auto path = temp_json("toric_test_g2_table");
    save_table(t, path.string());
    CharacterTable back = load_table(path.string(), g2.cc);
    CHECK(back.names == t.names);
    CHECK(back.values == t.values);
    CHECK(back.class_labels == t.class_labels);

    // Permuting the stored class order must not matter: columns realign.
    nlohmann::json doc;
    {
        std::ifstream in(path);
        in >> doc;
    }
    nlohmann::json shuffled = doc;
    std::vector<int> perm(t.class_count());
    for (int i = 0; i < t.class_count(); ++i) perm[i] = (i + 1) % t.class_count();
    for (int i = 0; i < t.class_count(); ++i) {
        shuffled["classes"][i] = doc["classes"][perm[i]];
        for (int r = 0; r < t.irr_count(); ++r)
            shuffled["irreducibles"][r]["values"][i] =
                doc["irreducibles"][r]["values"][perm[i]];
    }
    auto path2 = temp_json("toric_test_g2_table_shuffled");
    {
        std::ofstream out(path2);
        out << shuffled;
    }
    CharacterTable realigned = load_table(path2.string(), g2.cc);
    CHECK(realigned.values == t.values);

    // A corrupted value breaks orthogonality.
    nlohmann::json bad = doc;
    bad["irreducibles"][2]["values"][1] =
        static_cast<i64>(bad["irreducibles"][2]["values"][1]) + 1;
    auto path3 = temp_json("toric_test_g2_table_bad");
    {
        std::ofstream out(path3);
        out << bad;
    }
    CHECK_THROWS_AS(load_table(path3.string(), g2.cc), OrthogonalityError);

    // An unknown class label cannot be aligned.
    nlohmann::json alien = doc;
    alien["classes"][1]["label"] = "no-such-class";
    auto path4 = temp_json("toric_test_g2_table_alien");
    {
        std::ofstream out(path4);
        out << alien;
    }
    CHECK_THROWS_AS(load_table(path4.string(), g2.cc), ClassAlignmentError);

    CHECK_THROWS_AS(load_table("/nonexistent/nowhere.json", g2.cc), SchemaError);

    std::filesystem::remove(path);
    std::filesystem::remove(path2);
    std::filesystem::remove(path3);
    std::filesystem::remove(path4);
}
