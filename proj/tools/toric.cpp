// Command line front end: Poincare polynomials, decomposition tables, and
// poset reports for root system and custom toric arrangements.
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "toric/characters.hpp"
#include "toric/cohomology.hpp"
#include "toric/errors.hpp"
#include "toric/serialize.hpp"

using namespace toric;

namespace {

struct Options {
    std::string type;
    int rank = 0;
    std::string custom_path;
    std::string format = "text";
    std::string cache_dir;
    std::string char_table_path;
    int threads = 1;
    i64 max_nodes = 0;
    bool large_memory = false;
    bool all_classes = false;
    bool check_tau = false;
    int class_index = 0;
};

RootSystem read_custom(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot read arrangement file " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("arrangement file " + path + " is not JSON: " + e.what());
    }
    int rank;
    std::vector<IntVec> vectors;
    try {
        rank = doc.at("rank").get<int>();
        vectors = doc.at("vectors").get<std::vector<IntVec>>();
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("arrangement file needs {rank, vectors}: " + std::string(e.what()));
    }
    return custom_system(rank, vectors);
}

RootSystem resolve_system(const Options& opt) {
    if (!opt.custom_path.empty()) return read_custom(opt.custom_path);
    if (opt.type.empty()) throw SchemaError("pass --type or --custom");

    std::string s = opt.type;
    char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (letter < 'A' || letter > 'G')
        throw SchemaError("unknown root system type " + s);
    int rank = opt.rank;
    if (s.size() > 1) {
        for (size_t i = 1; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw SchemaError("malformed type " + s + "; use a letter like G2 or --rank");
        int embedded = std::stoi(s.substr(1));
        if (rank != 0 && rank != embedded)
            throw SchemaError("--rank disagrees with the rank in --type " + s);
        rank = embedded;
    }
    if (rank == 0) throw SchemaError("type " + s + " needs --rank");
    return build_root_system(static_cast<Type>(letter - 'A'), rank);
}

CohomologyOptions cohomology_options(const Options& opt) {
    CohomologyOptions c;
    c.threads = opt.threads;
    if (opt.max_nodes > 0)
        c.poset_budget.max_nodes = opt.max_nodes;
    else if (opt.large_memory)
        c.poset_budget.max_nodes = 5000000;
    return c;
}

GroupBudget group_budget(const Options& opt) {
    GroupBudget b;
    if (opt.large_memory) b.max_bytes = i64(1) << 32;
    return b;
}

PosetCache cache_of(const Options& opt) {
    if (!opt.cache_dir.empty()) return {opt.cache_dir};
    const char* env = std::getenv("TORIC_CACHE_DIR");
    return {env ? env : ""};
}

int run_poincare(const Options& opt) {
    RootSystem rs = resolve_system(opt);
    CohomologyOptions copts = cohomology_options(opt);
    PosetCache cache = cache_of(opt);

    EquivariantTable table;
    if (rs.type == Type::Custom) {
        if (opt.all_classes)
            throw SchemaError("custom arrangements have no group action; drop --all-classes");
        table = custom_identity_table(rs, copts);
    } else {
        WeylGroup w = enumerate_group(rs, group_budget(opt));
        ConjugacyClasses cc = conjugacy_classes(w, rs);
        if (opt.all_classes) {
            table = cached_equivariant_table(rs, w, cc, cache, copts);
        } else {
            table.system = rs.name();
            table.ambient = rs.rank;
            table.labels = {cc.labels[0]};
            table.sizes = {cc.sizes[0]};
            table.rows = {cached_complement_poincare(rs, cc.representatives[0], cc.labels[0],
                                                     cache, copts)};
        }
    }

    if (opt.format == "text")
        std::cout << render_poincare_text(table);
    else if (opt.format == "json")
        std::cout << render_poincare_json(table);
    else if (opt.format == "csv")
        std::cout << render_poincare_csv(table);
    else if (opt.format == "latex")
        std::cout << render_poincare_latex(table);
    else
        throw SchemaError("unknown format " + opt.format);
    return 0;
}

int run_table(const Options& opt) {
    RootSystem rs = resolve_system(opt);
    if (rs.type == Type::Custom)
        throw SchemaError("decomposition tables need a Weyl group; use poincare for --custom");
    WeylGroup w = enumerate_group(rs, group_budget(opt));
    ConjugacyClasses cc = conjugacy_classes(w, rs);

    CharacterTable chars;
    if (!opt.char_table_path.empty()) {
        chars = load_table(opt.char_table_path, cc);
    } else if (w.size() > 200000) {
        throw BudgetError(rs.name() + " is too large to solve for characters here; pass a "
                          "precomputed table with --char-table");
    } else if (rs.type == Type::A) {
        chars = symmetric_group_table(rs, w, cc);
    } else {
        chars = dixon_table(w, cc, rs);
        apply_phi_names(chars, cc);
    }

    EquivariantTable coh = cached_equivariant_table(rs, w, cc, cache_of(opt),
                                                    cohomology_options(opt));
    DecompositionTable dt = decompose_cohomology(coh, chars);

    if (opt.format == "text")
        std::cout << render_decomposition_text(dt);
    else if (opt.format == "json")
        std::cout << render_decomposition_json(dt);
    else if (opt.format == "csv")
        std::cout << render_decomposition_csv(dt);
    else if (opt.format == "latex")
        std::cout << render_decomposition_latex(dt);
    else
        throw SchemaError("unknown format " + opt.format);
    return 0;
}

int run_poset(const Options& opt) {
    RootSystem rs = resolve_system(opt);
    CohomologyOptions copts = cohomology_options(opt);

    IntMatrix g = IntMatrix::identity(rs.rank);
    std::string label = "identity";
    if (rs.type != Type::Custom) {
        WeylGroup w = enumerate_group(rs, group_budget(opt));
        ConjugacyClasses cc = conjugacy_classes(w, rs);
        if (opt.class_index < 0 || opt.class_index >= cc.count())
            throw SchemaError("class index out of range; " + rs.name() + " has " +
                              std::to_string(cc.count()) + " classes");
        g = cc.representatives[opt.class_index];
        label = cc.labels[opt.class_index];
    } else if (opt.class_index != 0) {
        throw SchemaError("custom arrangements only have the identity class");
    }

    FixedPoset poset = fixed_poset(rs, g, copts.poset_budget, copts.threads);
    compute_mobius(poset, copts.threads);

    if (opt.format == "text")
        std::cout << render_poset_summary(poset);
    else if (opt.format == "json")
        std::cout << poset_to_json(poset, rs.name(), label, true);
    else
        throw SchemaError("poset reports support text and json only");

    if (opt.check_tau) {
        bool iso = tau_is_isomorphism(rs, g, copts.poset_budget, copts.threads);
        std::cout << (iso ? "tau: isomorphism\n" : "tau: not an isomorphism\n");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohomology of toric arrangement complements for root systems"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool with_custom) {
        sub->add_option("--type", opt.type, "root system, a letter with optional rank (A, G2, F4)");
        sub->add_option("--rank", opt.rank, "rank when --type is a bare letter");
        if (with_custom)
            sub->add_option("--custom", opt.custom_path,
                            "custom arrangement JSON file {rank, vectors}")
                ->excludes("--type");
        sub->add_option("--format", opt.format, "output format: text, json, csv, latex");
        sub->add_option("--threads", opt.threads, "worker thread count")
            ->check(CLI::Range(1, 256));
        sub->add_option("--cache-dir", opt.cache_dir,
                        "poset cache directory (default: $TORIC_CACHE_DIR)");
        sub->add_option("--max-nodes", opt.max_nodes, "poset node budget override");
        sub->add_flag("--large-memory", opt.large_memory,
                      "lift the group and poset budgets for very large systems");
    };

    CLI::App* poincare = app.add_subcommand("poincare", "equivariant Poincare polynomials");
    add_common(poincare, true);
    poincare->add_flag("--all-classes", opt.all_classes,
                       "one polynomial per conjugacy class instead of the identity row");

    CLI::App* table = app.add_subcommand("table", "decomposition into irreducible characters");
    add_common(table, false);
    table->add_option("--char-table", opt.char_table_path,
                      "load the character table from a JSON file instead of computing it");

    CLI::App* poset = app.add_subcommand("poset", "poset of layers and Mobius data");
    add_common(poset, true);
    poset->add_flag("--check-tau", opt.check_tau,
                    "report whether collapsing to the linear arrangement loses nothing");
    poset->add_option("--class-index", opt.class_index, "conjugacy class to fix (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (poincare->parsed()) return run_poincare(opt);
        if (table->parsed()) return run_table(opt);
        return run_poset(opt);
    } catch (const SchemaError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
