#pragma once

// On-disk cache for the action matrices of a completed model, keyed by the
// content hash of the catalog record so stale files are never reused.

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "action.hpp"

namespace hecke {

inline std::string hash_hex(std::size_t h) {
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

inline std::filesystem::path cache_path(const GroupSpec& g, const std::filesystem::path& dir) {
    return dir / (g.name + "-" + hash_hex(g.content_hash()) + ".mats");
}

inline void save_model(const HeckeModel& mdl, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const GroupSpec& g = *mdl.spec;
    const std::filesystem::path tmp = cache_path(g, dir).string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("save_model: cannot write " + tmp.string());
        out << "hecke-model 1\n" << g.name << " " << hash_hex(g.content_hash()) << "\n";
        out << mdl.mats.size() << " " << mdl.n << "\n";
        for (std::size_t c = 0; c < mdl.mats.size(); ++c) {
            std::size_t nnz = 0;
            for (const auto& row : mdl.mats[c].rows) nnz += row.size();
            out << "col " << c << " " << nnz << "\n";
            for (int i = 0; i < mdl.n; ++i)
                for (const auto& [j, p] : mdl.mats[c].rows[static_cast<std::size_t>(i)])
                    out << i << " " << j << " " << p.to_string() << "\n";
        }
    }
    std::filesystem::rename(tmp, cache_path(g, dir));
}

// Model skeleton with every structural field derived from the catalog record;
// only the matrices come from the file.
inline HeckeModel model_skeleton(const GroupSpec& g) {
    HeckeModel mdl;
    mdl.spec = &spec(g.id);
    mdl.ring = g.ring();
    mdl.pctx = ParabolicContext(mdl.ring, g.coeff_names(g.parabolic_gen));
    mdl.m = g.center_order;
    mdl.e = static_cast<int>(g.parabolic_order());
    mdl.nx = static_cast<int>(g.x_words.size());
    mdl.n = mdl.m * mdl.e * mdl.nx;
    mdl.nletters = static_cast<int>(g.alphabet.size() + g.redundant_defs.size());
    mdl.zletter = mdl.nletters;
    return mdl;
}

inline std::optional<HeckeModel> load_model(const GroupSpec& g, const std::filesystem::path& dir) {
    std::ifstream in(cache_path(g, dir));
    if (!in) return std::nullopt;
    std::string magic, name, hash;
    int version = 0;
    in >> magic >> version >> name >> hash;
    if (magic != "hecke-model" || version != 1 || name != g.name ||
        hash != hash_hex(g.content_hash()))
        return std::nullopt;
    HeckeModel mdl = model_skeleton(g);
    std::size_t ncols = 0;
    int n = 0;
    in >> ncols >> n;
    if (n != mdl.n || ncols != 2 * static_cast<std::size_t>(mdl.nletters + 1)) return std::nullopt;
    mdl.mats.resize(ncols);
    std::string line;
    std::getline(in, line);
    for (std::size_t c = 0; c < ncols; ++c) {
        std::size_t col = 0, nnz = 0;
        std::string kw;
        if (!(in >> kw >> col >> nnz) || kw != "col" || col != c) return std::nullopt;
        std::getline(in, line);
        PolyMatrix& M = mdl.mats[c];
        M.n = n;
        M.rows.assign(static_cast<std::size_t>(n), {});
        for (std::size_t t = 0; t < nnz; ++t) {
            if (!std::getline(in, line)) return std::nullopt;
            std::istringstream ls(line);
            int i = 0, j = 0;
            ls >> i >> j;
            std::string poly;
            std::getline(ls, poly);
            M.rows[static_cast<std::size_t>(i)].push_back({j, LaurentPoly::parse(mdl.ring, poly)});
        }
    }
    return mdl;
}

}  // namespace hecke
