#include "tauseq/fixtures.hpp"

#include "tauseq/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace tauseq {

FdModule module_from_representation(const QuiverPresentation& q, const AlgebraPtr& a,
                                    const std::vector<Eigen::Index>& dims, const std::map<std::string, Mat>& arrows) {
    const auto& k = a->field();
    const auto nv = q.vertices.size();
    if (dims.size() != nv) throw DomainError("dimension vector has the wrong length");
    std::vector<Eigen::Index> offset(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + dims[v];
    const Eigen::Index total = offset[nv];

    std::vector<Mat> arrow_mats;
    for (const auto& arr : q.arrows) {
        const auto rows = dims[static_cast<std::size_t>(arr.target)], cols = dims[static_cast<std::size_t>(arr.source)];
        auto it = arrows.find(arr.name);
        if (it == arrows.end()) {
            arrow_mats.push_back(zeros(k, rows, cols));
            continue;
        }
        if (it->second.rows() != rows || it->second.cols() != cols)
            throw DomainError("arrow " + arr.name + " needs a " + std::to_string(rows) + "x" + std::to_string(cols) +
                              " matrix");
        arrow_mats.push_back(it->second);
    }
    for (const auto& [name, m] : arrows)
        if (q.arrow_index(name) < 0) throw DomainError("unknown arrow '" + name + "'");

    std::vector<Mat> action;
    for (const auto& p : q.path_basis()) {
        Mat act = zeros(k, total, total);
        const auto s = static_cast<std::size_t>(p.source), t = static_cast<std::size_t>(p.target);
        Mat block = identity(k, dims[s]);
        for (int arr : p.arrows) block = arrow_mats[static_cast<std::size_t>(arr)] * block;
        act.block(offset[t], offset[s], dims[t], dims[s]) = block;
        action.push_back(std::move(act));
    }
    return {a, std::move(action)};
}

namespace {

Mat parse_matrix(const PrimeField& k, const std::string& text, Eigen::Index rows, Eigen::Index cols) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad matrix literal '" + text + "'");
    }
    if (!j.is_array()) throw ParseError("matrix literal must be a list of rows");
    if (j.empty()) {
        if (rows != 0 && cols != 0) throw ParseError("empty matrix literal for a nonzero block");
        return zeros(k, rows, cols);
    }
    Mat m = zeros(k, static_cast<Eigen::Index>(j.size()), 0);
    Eigen::Index c = -1;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& row = j[i];
        if (!row.is_array()) throw ParseError("matrix row must be a list");
        if (c < 0) {
            c = static_cast<Eigen::Index>(row.size());
            m = zeros(k, static_cast<Eigen::Index>(j.size()), c);
        }
        if (static_cast<Eigen::Index>(row.size()) != c) throw ParseError("ragged matrix literal");
        for (std::size_t e = 0; e < row.size(); ++e) {
            if (!row[e].is_number_integer()) throw ParseError("matrix entries must be integers");
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(e)) = k(row[e].get<std::int64_t>());
        }
    }
    if (c == 0) return zeros(k, rows, cols);
    return m;
}

}  // namespace

std::vector<NamedModule> parse_fixtures(std::string_view text, const QuiverPresentation& q, const AlgebraPtr& a) {
    struct Block {
        std::string name;
        int line;
        std::vector<Eigen::Index> dims;
        bool has_dims = false;
        std::vector<std::pair<std::string, std::string>> arrows;
    };
    std::vector<Block> blocks;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        auto fail = [&](const std::string& msg) {
            throw ParseError("fixtures line " + std::to_string(lineno) + ": " + msg);
        };
        if (kw == "module") {
            std::string name, extra;
            if (!(ls >> name) || (ls >> extra)) fail("expected 'module <NAME>'");
            for (const auto& b : blocks)
                if (b.name == name) fail("duplicate module '" + name + "'");
            blocks.push_back({name, lineno, {}, false, {}});
        } else if (kw == "dims") {
            if (blocks.empty()) fail("'dims' outside a module block");
            if (blocks.back().has_dims) fail("duplicate 'dims'");
            blocks.back().has_dims = true;
            for (std::string t; ls >> t;) {
                try {
                    std::size_t used = 0;
                    const long v = std::stol(t, &used);
                    if (used != t.size() || v < 0) fail("bad dimension '" + t + "'");
                    blocks.back().dims.push_back(v);
                } catch (const std::logic_error&) {
                    fail("bad dimension '" + t + "'");
                }
            }
        } else if (kw == "arrow") {
            if (blocks.empty()) fail("'arrow' outside a module block");
            std::string name, eq;
            if (!(ls >> name >> eq) || eq != "=") fail("expected 'arrow <name> = [[...]]'");
            std::string rest;
            std::getline(ls, rest);
            for (const auto& [n, m] : blocks.back().arrows)
                if (n == name) fail("duplicate arrow '" + name + "'");
            blocks.back().arrows.emplace_back(name, rest);
        } else {
            fail("unknown keyword '" + kw + "'");
        }
    }

    std::vector<NamedModule> out;
    for (const auto& b : blocks) {
        if (!b.has_dims) throw ParseError("module " + b.name + " has no 'dims' line");
        if (b.dims.size() != q.vertices.size())
            throw ParseError("module " + b.name + ": expected " + std::to_string(q.vertices.size()) + " dimensions");
        std::map<std::string, Mat> arrows;
        for (const auto& [name, lit] : b.arrows) {
            const int ai = q.arrow_index(name);
            if (ai < 0) throw ParseError("module " + b.name + ": unknown arrow '" + name + "'");
            const auto& arr = q.arrows[static_cast<std::size_t>(ai)];
            arrows[name] = parse_matrix(a->field(), lit, b.dims[static_cast<std::size_t>(arr.target)],
                                        b.dims[static_cast<std::size_t>(arr.source)]);
        }
        try {
            out.push_back({b.name, module_from_representation(q, a, b.dims, arrows)});
        } catch (const DomainError& e) {
            throw DomainError("module " + b.name + ": " + e.what());
        }
    }
    return out;
}

std::vector<NamedModule> load_fixtures(const std::string& path, const QuiverPresentation& q, const AlgebraPtr& a) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open fixtures file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_fixtures(ss.str(), q, a);
}

std::vector<NamedModule> standard_catalog(const AlgebraPtr& a, std::vector<NamedModule> fixtures) {
    auto out = std::move(fixtures);
    auto add = [&](const std::string& name, FdModule m) {
        for (const auto& e : out)
            if (e.name == name || is_iso_indecomposable(e.module, m)) return;
        out.push_back({name, std::move(m)});
    };
    for (int v = 0; v < a->num_vertices(); ++v) add("P" + a->vertex_label(v), projective_module(a, v));
    for (int v = 0; v < a->num_vertices(); ++v) add("S" + a->vertex_label(v), simple_module(a, v));
    for (int v = 0; v < a->num_vertices(); ++v) add("I" + a->vertex_label(v), injective_module(a, v));
    return out;
}

}  // namespace tauseq
