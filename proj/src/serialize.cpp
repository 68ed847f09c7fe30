#include "toric/serialize.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "json.hpp"
#include "toric/checked.hpp"
#include "toric/errors.hpp"

namespace toric {
namespace {

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string latex_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '^': out += "\\textasciicircum{}"; break;
        case '_': out += "\\_"; break;
        case '&': out += "\\&"; break;
        case '%': out += "\\%"; break;
        case '#': out += "\\#"; break;
        default: out += c;
        }
    }
    return out;
}

// phi{d}^{e} and phi{d},{k}^{e} become \varphi_{d}^{e} etc.; anything else
// (partition names) is typeset as a chi subscript.
std::string latex_name(const std::string& name) {
    if (name.rfind("phi", 0) == 0) {
        size_t hat = name.find('^');
        if (hat != std::string::npos)
            return "$\\varphi_{" + name.substr(3, hat - 3) + "}^{" + name.substr(hat + 1) + "}$";
    }
    return "$\\chi_{" + name + "}$";
}

i64 mobius_below(const FixedPoset& p, int idx) {
    i64 sum = 0;
    for (int j = 0; j < p.node_count(); ++j)
        if (j != idx && p.nodes[j].orbit_set.proper_subset_of(p.nodes[idx].orbit_set))
            sum = chk::add(sum, p.nodes[j].mobius);
    return sum;
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

std::string poset_to_json(const FixedPoset& poset, const std::string& system,
                          const std::string& class_label, bool with_covers) {
    nlohmann::json doc;
    doc["system"] = system;
    doc["class"] = class_label;
    doc["variant"] = poset.saturated ? "hyperplane" : "toric";
    doc["ambient"] = poset.ambient;
    doc["mobius_ready"] = poset.mobius_ready;
    doc["orbits"] = poset.orbits;

    doc["nodes"] = nlohmann::json::array();
    for (const PosetNode& node : poset.nodes) {
        nlohmann::json rows = nlohmann::json::array();
        for (int r = 0; r < node.module.basis.rows(); ++r) rows.push_back(node.module.basis.row(r));
        std::vector<int> absorbed;
        for (int o = 0; o < node.orbit_set.size(); ++o)
            if (node.orbit_set.test(o)) absorbed.push_back(o);
        doc["nodes"].push_back({{"basis", std::move(rows)},
                                {"rank", node.rank},
                                {"orbits", std::move(absorbed)},
                                {"mobius", node.mobius}});
    }
    if (with_covers) {
        doc["covers"] = nlohmann::json::array();
        for (auto [lo, hi] : cover_relations(poset))
            doc["covers"].push_back(nlohmann::json::array({lo, hi}));
    }
    return doc.dump(1) + "\n";
}

FixedPoset poset_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("poset text is not JSON: ") + e.what());
    }

    FixedPoset poset;
    try {
        poset.ambient = doc.at("ambient").get<int>();
        poset.saturated = doc.at("variant").get<std::string>() == "hyperplane";
        poset.mobius_ready = doc.at("mobius_ready").get<bool>();
        poset.orbits = doc.at("orbits").get<std::vector<std::vector<int>>>();

        for (const auto& stored : doc.at("nodes")) {
            PosetNode node;
            auto rows = stored.at("basis").get<std::vector<IntVec>>();
            for (const IntVec& row : rows)
                if (static_cast<int>(row.size()) != poset.ambient)
                    throw SchemaError("basis row width disagrees with the ambient rank");
            node.module = canonicalize(rows, poset.ambient);
            if (!rows.empty() &&
                !(node.module.basis == IntMatrix::from_rows(rows, poset.ambient)))
                throw SchemaError("stored basis is not in canonical form");
            node.rank = stored.at("rank").get<int>();
            if (node.rank != node.module.rank())
                throw SchemaError("stored rank disagrees with the basis");
            node.mobius = stored.at("mobius").get<i64>();
            node.orbit_set = OrbitBits(static_cast<int>(poset.orbits.size()));
            for (int o : stored.at("orbits").get<std::vector<int>>()) {
                if (o < 0 || o >= static_cast<int>(poset.orbits.size()))
                    throw SchemaError("orbit index " + std::to_string(o) + " out of range");
                node.orbit_set.set(o);
            }
            poset.nodes.push_back(std::move(node));
        }
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("poset JSON misses fields: ") + e.what());
    }
    if (poset.nodes.empty()) throw SchemaError("poset has no nodes");
    if (poset.nodes[0].rank != 0 || poset.nodes[0].orbit_set.count() != 0)
        throw SchemaError("first node is not the bottom");
    return poset;
}

std::vector<std::pair<int, int>> cover_relations(const FixedPoset& poset) {
    const int n = poset.node_count();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return poset.nodes[x].orbit_set.count() > poset.nodes[y].orbit_set.count();
    });

    std::vector<std::pair<int, int>> covers;
    std::vector<int> accepted;
    for (int j = 0; j < n; ++j) {
        accepted.clear();
        // Scanning candidates largest-first means every non-cover candidate
        // already has an accepted superset by the time it is visited.
        for (int i : order) {
            if (!poset.nodes[i].orbit_set.proper_subset_of(poset.nodes[j].orbit_set)) continue;
            bool dominated = false;
            for (int a : accepted)
                if (poset.nodes[i].orbit_set.proper_subset_of(poset.nodes[a].orbit_set)) {
                    dominated = true;
                    break;
                }
            if (!dominated) {
                accepted.push_back(i);
                covers.push_back({i, j});
            }
        }
    }
    std::sort(covers.begin(), covers.end());
    return covers;
}

DecompositionTable decompose_cohomology(const EquivariantTable& coh, const CharacterTable& chars) {
    if (coh.class_count() != chars.class_count())
        throw ClassAlignmentError("cohomology has " + std::to_string(coh.class_count()) +
                                  " classes, character table has " +
                                  std::to_string(chars.class_count()));
    for (int c = 0; c < coh.class_count(); ++c)
        if (coh.labels[c] != chars.class_labels[c])
            throw ClassAlignmentError("class order mismatch at " + coh.labels[c]);

    DecompositionTable dt;
    dt.cohomology = coh;
    dt.names = chars.names;
    for (int k = 0; k <= coh.ambient; ++k) {
        std::vector<i64> f(coh.class_count());
        for (int c = 0; c < coh.class_count(); ++c) f[c] = coh.rows[c].coeff(k);
        dt.multiplicities.push_back(decompose(chars, f));
    }
    return dt;
}

EquivariantTable custom_identity_table(const RootSystem& rs, const CohomologyOptions& opts) {
    EquivariantTable t;
    t.system = rs.name();
    t.ambient = rs.rank;
    t.labels = {"identity"};
    t.sizes = {1};
    t.rows = {complement_poincare(rs, IntMatrix::identity(rs.rank), opts)};
    return t;
}

std::string render_poincare_text(const EquivariantTable& t) {
    std::string out;
    if (t.class_count() == 1) return to_string(t.rows[0]) + "\n";
    for (int c = 0; c < t.class_count(); ++c)
        out += t.labels[c] + ": " + to_string(t.rows[c]) + "\n";
    return out;
}

std::string render_poincare_json(const EquivariantTable& t) {
    nlohmann::json doc;
    doc["system"] = t.system;
    doc["classes"] = nlohmann::json::array();
    for (int c = 0; c < t.class_count(); ++c)
        doc["classes"].push_back(
            {{"label", t.labels[c]}, {"size", t.sizes[c]}, {"poincare", t.rows[c].c}});
    return doc.dump(1) + "\n";
}

std::string render_poincare_csv(const EquivariantTable& t) {
    std::string out = "label,size";
    for (int k = 0; k <= t.ambient; ++k) out += ",c" + std::to_string(k);
    out += "\n";
    for (int c = 0; c < t.class_count(); ++c) {
        out += csv_quote(t.labels[c]) + "," + std::to_string(t.sizes[c]);
        for (int k = 0; k <= t.ambient; ++k) out += "," + std::to_string(t.rows[c].coeff(k));
        out += "\n";
    }
    return out;
}

std::string render_poincare_latex(const EquivariantTable& t) {
    std::string out = "\\begin{tabular}{l r";
    for (int k = 0; k <= t.ambient; ++k) out += " r";
    out += "}\nclass & size";
    for (int k = 0; k <= t.ambient; ++k) out += " & $t^{" + std::to_string(k) + "}$";
    out += " \\\\\n\\hline\n";
    for (int c = 0; c < t.class_count(); ++c) {
        out += latex_escape(t.labels[c]) + " & " + std::to_string(t.sizes[c]);
        for (int k = 0; k <= t.ambient; ++k) out += " & " + std::to_string(t.rows[c].coeff(k));
        out += " \\\\\n";
    }
    return out + "\\end{tabular}\n";
}

std::string render_decomposition_text(const DecompositionTable& dt) {
    std::string out = "irreducibles:";
    for (const std::string& name : dt.names) out += " " + name;
    out += "\n";
    for (size_t k = 0; k < dt.multiplicities.size(); ++k) {
        out += "H^" + std::to_string(k) + ":";
        for (i64 m : dt.multiplicities[k]) out += " " + std::to_string(m);
        out += "\n";
    }
    return out;
}

std::string render_decomposition_json(const DecompositionTable& dt) {
    nlohmann::json doc = nlohmann::json::parse(render_poincare_json(dt.cohomology));
    doc["decomposition"] = {{"irreducibles", dt.names}, {"multiplicities", dt.multiplicities}};
    return doc.dump(1) + "\n";
}

std::string render_decomposition_csv(const DecompositionTable& dt) {
    std::string out = "degree";
    for (const std::string& name : dt.names) out += "," + csv_quote(name);
    out += "\n";
    for (size_t k = 0; k < dt.multiplicities.size(); ++k) {
        out += "H^" + std::to_string(k);
        for (i64 m : dt.multiplicities[k]) out += "," + std::to_string(m);
        out += "\n";
    }
    return out;
}

std::string render_decomposition_latex(const DecompositionTable& dt) {
    const int total = static_cast<int>(dt.names.size());
    std::string out;
    for (int start = 0; start < total; start += 10) {
        const int stop = std::min(start + 10, total);
        if (start) out += "\n";
        out += "\\begin{tabular}{l|";
        for (int r = start; r < stop; ++r) out += "r";
        out += "}\n";
        for (int r = start; r < stop; ++r) out += " & " + latex_name(dt.names[r]);
        out += " \\\\\n\\hline\n";
        for (size_t k = 0; k < dt.multiplicities.size(); ++k) {
            out += "$H^{" + std::to_string(k) + "}$";
            for (int r = start; r < stop; ++r)
                out += " & " + std::to_string(dt.multiplicities[k][r]);
            out += " \\\\\n";
        }
        out += "\\end{tabular}\n";
    }
    return out;
}

std::string render_poset_summary(const FixedPoset& poset) {
    std::map<int, std::pair<i64, i64>> by_rank; // rank -> (count, mobius sum)
    for (const PosetNode& node : poset.nodes) {
        auto& slot = by_rank[node.rank];
        slot.first += 1;
        slot.second = chk::add(slot.second, node.mobius);
    }
    std::string out = "nodes: " + std::to_string(poset.node_count()) + "\n";
    for (const auto& [rank, slot] : by_rank)
        out += "rank " + std::to_string(rank) + ": nodes " + std::to_string(slot.first) +
               ", mobius sum " + std::to_string(slot.second) + "\n";
    return out;
}

std::string cache_key(const std::string& system, const std::string& variant,
                      const std::string& class_label) {
    std::uint64_t h = fnv1a64("toric-poset-v1|" + system + "|" + variant + "|" + class_label);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string PosetCache::path_for(const std::string& key) const {
    return (std::filesystem::path(dir) / (key + ".json")).string();
}

std::optional<FixedPoset> PosetCache::load(const std::string& key) const {
    if (dir.empty()) return std::nullopt;
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    std::stringstream buffer;
    buffer << in.rdbuf();

    FixedPoset poset;
    try {
        poset = poset_from_json(buffer.str());
    } catch (const SchemaError& e) {
        std::cerr << "cache: discarding " << key << " (" << e.what() << ")\n";
        return std::nullopt;
    }

    // Spot-check the stored Mobius values: the bottom, the top (whose value
    // pins the sum of every other node), and one random interior node.
    auto reject = [&](const char* why) {
        std::cerr << "cache: discarding " << key << " (" << why << ")\n";
        return std::nullopt;
    };
    if (!poset.mobius_ready) return reject("mobius values missing");
    if (poset.nodes[0].mobius != 1) return reject("bottom mobius is not 1");
    const int n = poset.node_count();
    if (n > 1) {
        if (poset.nodes[n - 1].orbit_set.count() != static_cast<int>(poset.orbits.size()))
            return reject("last node is not the top");
        if (poset.nodes[n - 1].mobius != chk::neg(mobius_below(poset, n - 1)))
            return reject("top mobius fails recomputation");
    }
    if (n > 2) {
        std::mt19937_64 rng{std::random_device{}()};
        int idx = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 2));
        if (poset.nodes[idx].mobius != chk::neg(mobius_below(poset, idx)))
            return reject("random node mobius fails recomputation");
    }
    return poset;
}

void PosetCache::store(const std::string& key, const FixedPoset& poset, const std::string& system,
                       const std::string& class_label) const {
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    std::string path = path_for(key);
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw SchemaError("cannot write cache file " + tmp);
        out << poset_to_json(poset, system, class_label, false);
    }
    std::filesystem::rename(tmp, path);
}

Polynomial cached_complement_poincare(const RootSystem& rs, const IntMatrix& g,
                                      const std::string& class_label, const PosetCache& cache,
                                      const CohomologyOptions& opts) {
    std::string key = cache_key(rs.name(), "toric", class_label);
    FixedPoset poset;
    if (auto hit = cache.load(key)) {
        poset = std::move(*hit);
    } else {
        poset = fixed_poset(rs, g, opts.poset_budget, opts.threads);
        compute_mobius(poset, opts.threads);
        cache.store(key, poset, rs.name(), class_label);
    }
    Polynomial p = poincare_from_poset(poset, g, opts.torsion_enumeration_threshold, opts.threads);

    if (p.coeff(0) != 1)
        throw IntegrityError("constant coefficient is " + std::to_string(p.coeff(0)) + " for " +
                             rs.name() + ", expected 1");
    if (all_lines_primitive(rs)) {
        i64 h1 = chk::add(g.trace(), fixed_line_count(g, rs));
        if (p.coeff(1) != h1)
            throw IntegrityError("t coefficient is " + std::to_string(p.coeff(1)) + " for " +
                                 rs.name() + ", trace plus fixed lines gives " + std::to_string(h1));
    }
    return p;
}

EquivariantTable cached_equivariant_table(const RootSystem& rs, const WeylGroup& w,
                                          const ConjugacyClasses& cc,
                                          const PosetCache& cache, const CohomologyOptions& opts) {
    (void)w;
    EquivariantTable table;
    table.system = rs.name();
    table.ambient = rs.rank;
    table.labels = cc.labels;
    table.sizes = cc.sizes;
    for (int c = 0; c < cc.count(); ++c)
        table.rows.push_back(
            cached_complement_poincare(rs, cc.representatives[c], cc.labels[c], cache, opts));

    for (int c = 0; c < cc.count(); ++c)
        for (int k = 0; k <= rs.rank; ++k)
            if (std::abs(table.rows[c].coeff(k)) > table.rows[0].coeff(k))
                throw IntegrityError("class " + cc.labels[c] + " trace exceeds the dimension in " +
                                     rs.name());
    return table;
}

} // namespace toric
