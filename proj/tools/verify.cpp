// Command-line driver: select groups and checks, run the verification
// pipeline, print a summary table and emit the JSON report.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <hecke/verify.hpp>

namespace {

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

nlohmann::ordered_json catalog_json() {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const hecke::GroupSpec& g : hecke::catalog()) {
        nlohmann::ordered_json j;
        j["id"] = g.id;
        j["name"] = g.name;
        j["family"] = std::string(1, g.family);
        j["order"] = g.order;
        j["ell"] = g.ell;
        j["center_order"] = g.center_order;
        nlohmann::ordered_json gens = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < g.alphabet.size(); ++i)
            gens.push_back({{"name", g.alphabet.name(static_cast<int>(i))},
                            {"order", g.gen_orders[i]},
                            {"class", std::string(1, g.gen_class[i])}});
        j["generators"] = gens;
        nlohmann::ordered_json rels = nlohmann::ordered_json::array();
        for (const auto& [a, b] : g.relations) rels.push_back(a + " = " + b);
        j["relations"] = rels;
        j["z_words"] = g.z_words;
        j["parabolic_gen"] = g.alphabet.name(g.parabolic_gen);
        nlohmann::ordered_json defs = nlohmann::ordered_json::object();
        for (const auto& [n, d] : g.redundant_defs) defs[n] = d;
        j["redundant_defs"] = defs;
        j["x_words"] = g.x_words;
        nlohmann::ordered_json tree = nlohmann::ordered_json::array();
        for (const auto& e : g.tree)
            tree.push_back({{"from", e.from}, {"to", e.to}, {"label", e.label}});
        j["tree"] = tree;
        j["embedding"] = g.embedding;
        j["expected_det"] = g.expected_det;
        if (g.theta)
            j["theta"] = *g.theta;
        else
            j["theta"] = nullptr;
        j["content_hash"] = hecke::hash_hex(g.content_hash());
        out.push_back(std::move(j));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generic Hecke algebra verification for G4..G15"};

    std::string groupsArg = "all";
    std::string checksArg = "default";
    std::string cacheDir;
    std::string outputPath;
    std::string dumpPath;
    hecke::RunConfig cfg;
    int jobs = 1;
    bool verbose = false;

    if (const char* env = std::getenv("HECKE_CACHE_DIR")) cacheDir = env;

    app.add_option("--groups", groupsArg, "Comma-separated ids (g4,12,...) or 'all'");
    app.add_option("--checks", checksArg,
                   "Comma-separated subset of {factorization,table,relations,gram,det-exact,"
                   "det-modular,cond3,lifting,specialized-block}, or 'all'/'default'");
    app.add_option("--trials", cfg.trials, "Modular determinant trials")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "Random seed");
    app.add_option("--prime", cfg.prime, "Modulus for modular checks");
    app.add_option("--cache-dir", cacheDir, "Model matrix cache directory (env HECKE_CACHE_DIR)");
    app.add_option("--output", outputPath, "Write the JSON report here");
    app.add_option("--jobs", jobs, "Verify up to N groups concurrently")->check(CLI::PositiveNumber);
    app.add_flag("--force-exact", cfg.force_exact,
                 "Allow det-exact outside the small groups (G4, G12)");
    app.add_flag("-v,--verbose", verbose, "Print per-stage details");
    app.add_option("--dump-catalog", dumpPath, "Write the machine-readable catalog and exit")
        ->expected(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    if (!dumpPath.empty()) {
        std::ofstream out(dumpPath);
        if (!out) {
            std::cerr << "cannot write " << dumpPath << "\n";
            return 2;
        }
        out << catalog_json().dump(2) << "\n";
        std::cout << "catalog written to " << dumpPath << "\n";
        return 0;
    }

    std::vector<int> ids;
    try {
        if (groupsArg == "all") {
            ids = hecke::all_group_ids();
        } else {
            for (const std::string& tok : split_list(groupsArg)) ids.push_back(hecke::spec(tok).id);
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    if (ids.empty()) {
        std::cerr << "no groups selected\n";
        return 2;
    }

    if (checksArg == "all") {
        cfg.checks = hecke::RunConfig::known_checks();
    } else if (checksArg != "default") {
        cfg.checks.clear();
        for (const std::string& c : split_list(checksArg)) {
            if (!hecke::RunConfig::known_checks().count(c)) {
                std::cerr << "unknown check '" << c << "'\n";
                return 2;
            }
            cfg.checks.insert(c);
        }
    }
    if (cfg.checks.count("det-exact") && !cfg.checks.count("det-modular") && !cfg.force_exact) {
        for (int id : ids)
            if (!hecke::det_exact_small(id)) {
                std::cerr << "det-exact requested for G" << id
                          << " which exceeds the small-group bound; add det-modular as the "
                             "fallback or pass --force-exact\n";
                return 2;
            }
    }
    cfg.cache_dir = cacheDir;

    const std::vector<hecke::Verdict> verdicts = hecke::run_groups(ids, cfg, jobs);

    std::cout << std::left << std::setw(6) << "group" << std::setw(8) << "pass"
              << "determinant\n";
    bool allPass = true;
    nlohmann::ordered_json report = nlohmann::ordered_json::array();
    for (const hecke::Verdict& v : verdicts) {
        allPass = allPass && v.pass;
        std::string detCol = "-";
        for (const hecke::StageResult& s : v.stages)
            if (s.name == "det-exact" || s.name == "det-modular")
                detCol = s.name + ": " + s.details;
        std::cout << std::left << std::setw(6) << v.group << std::setw(8)
                  << (v.pass ? "ok" : "FAIL") << detCol << "\n";
        if (verbose)
            for (const hecke::StageResult& s : v.stages)
                std::cout << "  " << std::left << std::setw(20) << s.name
                          << (s.pass ? "ok    " : "FAIL  ") << s.details << " ("
                          << s.duration_ms << " ms)\n";
        report.push_back(hecke::to_json(v));
    }

    if (!outputPath.empty()) {
        std::ofstream out(outputPath);
        if (!out) {
            std::cerr << "cannot write " << outputPath << "\n";
            return 2;
        }
        out << report.dump(2) << "\n";
    }
    return allPass ? 0 : 1;
}
