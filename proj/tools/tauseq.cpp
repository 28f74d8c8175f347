#include "tauseq/error.hpp"
#include "tauseq/sequences.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace tauseq;
using nlohmann::json;

namespace {

struct Table {
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Output {
    std::vector<Table> tables;
    json data;
};

struct Config {
    std::string algebra;
    std::string fixtures;
    std::string format = "table";
    std::size_t cap = 10000;
    std::uint32_t prime = 0;
};

struct Session {
    QuiverPresentation quiver;
    AlgebraPtr algebra;
    std::unique_ptr<Level> root;
};

Session open_session(const Config& c) {
    if (c.algebra.empty()) throw ParseError("--algebra is required");
    auto [q, a] = load_algebra(c.algebra);
    if (c.prime != 0) {
        if (!is_prime(c.prime)) throw ParseError(std::to_string(c.prime) + " is not prime");
        q.prime = c.prime;
        a = path_algebra(q);
    }
    auto fixtures_path = c.fixtures;
    if (fixtures_path.empty()) {
        // an algebra file may have its modules next to it
        auto sibling = std::filesystem::path(c.algebra).replace_extension(".mod");
        if (std::filesystem::exists(sibling)) fixtures_path = sibling.string();
    }
    std::vector<NamedModule> fixtures;
    if (!fixtures_path.empty()) fixtures = load_fixtures(fixtures_path, q, a);
    auto root = std::make_unique<Level>(a, standard_catalog(a, std::move(fixtures)), 0, c.cap);
    return {std::move(q), std::move(a), std::move(root)};
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    for (auto& s : out) {
        s.erase(0, s.find_first_not_of(" \t"));
        s.erase(s.find_last_not_of(" \t") + 1);
        if (s.empty()) throw ParseError("empty entry in '" + text + "'");
    }
    return out;
}

std::string dims_text(const FdModule& m) {
    std::vector<std::string> d;
    for (auto x : m.dim_vector()) d.push_back(std::to_string(x));
    return "(" + join(d, ",") + ")";
}

FdModule underlying(const SignedObject& x) {
    return x.is_shifted() ? projective_module(x.algebra(), x.shifted) : x.module;
}

json object_json(const Level& l, const SignedObject& x) {
    return {{"name", l.name(x)}, {"dims", underlying(x).dim_vector()}, {"shift", x.is_shifted()}};
}

json module_json(const Level& l, const FdModule& m) {
    return {{"name", l.name(m)}, {"dims", m.dim_vector()}, {"shift", false}};
}

// Entries below the top level are reported by the module they name over the original algebra.
json sequence_json(const Level& root, const Sequence& s) {
    json out = json::array();
    for (const auto& e : s) {
        auto o = object_json(*e.level, e.object);
        const auto base = e.object.is_shifted() ? e.name.substr(0, e.name.size() - 3) : e.name;
        for (const auto& c : root.catalog())
            if (c.name == base) o["dims"] = c.module.dim_vector();
        o["level"] = e.level->depth();
        out.push_back(o);
    }
    return out;
}

std::vector<std::string> object_names(const Level& l, const std::vector<SignedObject>& xs) {
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(l.name(x));
    return out;
}

FdModule resolve_module(const Level& l, const std::string& name) {
    const auto x = l.resolve(name);
    if (x.is_shifted()) throw DomainError(name + " is not a module");
    return x.module;
}

Output cmd_info(const Session& s) {
    const auto& a = s.algebra;
    const auto inv = algebra_invariants(*a);
    Table t{"algebra", {"property", "value"}, {}};
    t.rows.push_back({"field", "F_" + std::to_string(a->field().p())});
    t.rows.push_back({"vertices", std::to_string(a->num_vertices())});
    t.rows.push_back({"arrows", std::to_string(inv.arrows)});
    t.rows.push_back({"dimension", std::to_string(inv.dim)});
    json mods = json::array();
    Table m{"named modules", {"name", "dims", "tau-rigid"}, {}};
    for (const auto& c : s.root->catalog()) {
        const bool rigid = is_tau_rigid(c.module);
        m.rows.push_back({c.name, dims_text(c.module), rigid ? "yes" : "no"});
        mods.push_back({{"name", c.name}, {"dims", c.module.dim_vector()}, {"tau_rigid", rigid}});
    }
    return {{t, m},
            {{"field", a->field().p()},
             {"vertices", a->vertex_labels()},
             {"arrows", inv.arrows},
             {"dimension", inv.dim},
             {"modules", mods}}};
}

Output cmd_tau(const Session& s, const std::string& name) {
    const auto m = resolve_module(*s.root, name);
    const auto t = tau(m);
    std::vector<std::string> parts;
    json summands = json::array();
    for (const auto& x : decompose(t)) {
        for (int i = 0; i < x.multiplicity; ++i) parts.push_back(s.root->name(x.module));
        summands.push_back({{"module", module_json(*s.root, x.module)}, {"multiplicity", x.multiplicity}});
    }
    const auto text = parts.empty() ? std::string("0") : join(parts, " + ");
    return {{{"tau", {"module", "tau", "dims"}, {{name, text, dims_text(t)}}}},
            {{"module", module_json(*s.root, m)}, {"tau", {{"dims", t.dim_vector()}, {"summands", summands}}}}};
}

Output cmd_indec_tau_rigid(const Session& s) {
    const auto& r = s.root->registry();
    Table t{"indecomposable τ-rigid objects", {"id", "name", "dims", "shift"}, {}};
    json out = json::array();
    for (int id = 0; id < r.size(); ++id) {
        t.rows.push_back({std::to_string(id), s.root->name(r[id]), dims_text(underlying(r[id])), r[id].is_shifted() ? "yes" : "no"});
        out.push_back(object_json(*s.root, r[id]));
    }
    return {{t}, {{"objects", out}}};
}

Output cmd_st_pairs(const Session& s, bool ordered, int length) {
    const auto& l = *s.root;
    const int n = l.algebra()->num_vertices();
    if (length == 0) length = n;
    if (length < 1 || length > n) throw DomainError("length must be between 1 and " + std::to_string(n));
    const auto& r = l.registry();
    const auto tuples = ordered ? enumerate_ordered(r, length) : enumerate_unordered(r, length);
    Table t{std::string(ordered ? "ordered" : "unordered") + " support τ-rigid objects of length " + std::to_string(length),
            {"object"},
            {}};
    json out = json::array();
    for (const auto& ids : tuples) {
        const auto xs = r.objects(ids);
        t.rows.push_back({"(" + join(object_names(l, xs), ", ") + ")"});
        json o = json::array();
        for (const auto& x : xs) o.push_back(object_json(l, x));
        out.push_back(o);
    }
    return {{t}, {{"ordered", ordered}, {"length", length}, {"count", tuples.size()}, {"objects", out}}};
}

Output cmd_bongartz(const Session& s, const std::string& name) {
    const auto u = resolve_module(*s.root, name);
    Table t{"Bongartz complement of " + name, {"summand", "dims"}, {}};
    json out = json::array();
    for (const auto& b : bongartz(s.root->registry(), u)) {
        t.rows.push_back({s.root->name(b), dims_text(b)});
        out.push_back(module_json(*s.root, b));
    }
    return {{t}, {{"module", module_json(*s.root, u)}, {"summands", out}}};
}

Output cmd_cobongartz(const Session& s, const std::string& name) {
    const auto u = resolve_module(*s.root, name);
    const auto cb = cobongartz(s.root->registry(), u);
    Table t{"co-Bongartz completion of " + name, {"summand", "dims", "shift"}, {}};
    json out = json::array();
    for (const auto& c : cb.c) {
        t.rows.push_back({s.root->name(c), dims_text(c), "no"});
        out.push_back(module_json(*s.root, c));
    }
    for (int v : cb.q) {
        const auto x = SignedObject::shift(s.algebra, v);
        t.rows.push_back({s.root->name(x), dims_text(underlying(x)), "yes"});
        out.push_back(object_json(*s.root, x));
    }
    return {{t}, {{"module", module_json(*s.root, u)}, {"summands", out}}};
}

Output cmd_correspond(const Session& s, const std::string& name) {
    const auto u = resolve_module(*s.root, name);
    Table t{"Bongartz and co-Bongartz summands of " + name, {"bongartz", "partner"}, {}};
    json out = json::array();
    for (const auto& c : complement_correspondence(s.root->registry(), u)) {
        t.rows.push_back({s.root->name(c.b), s.root->name(c.partner)});
        out.push_back({{"bongartz", module_json(*s.root, c.b)}, {"partner", object_json(*s.root, c.partner)}});
    }
    return {{t}, {{"module", module_json(*s.root, u)}, {"pairs", out}}};
}

Output cmd_reduce(const Session& s, const std::string& text) {
    const auto& l = *s.root;
    const auto u = l.resolve(text);
    const auto& ctx = l.context(u);
    const auto inv = algebra_invariants(*ctx.gamma());
    Table g{"reduction by " + l.name(u), {"idempotents", "dim", "arrows"},
            {{std::to_string(inv.idempotents), std::to_string(inv.dim), std::to_string(inv.arrows)}}};
    Table j{"named modules in J", {"name", "dims"}, {}};
    json members = json::array();
    for (const auto& c : ctx.child().catalog()) {
        j.rows.push_back({c.name, dims_text(c.module)});
        members.push_back({{"name", c.name}, {"dims", c.module.dim_vector()}});
    }
    Table e{"reduction map", {"object", "image"}, {}};
    json images = json::array();
    const auto& r = l.registry();
    for (int id = 0; id < r.size(); ++id) {
        if (!ctx.compatible_with_reducer(r[id])) continue;
        const auto y = ctx.e_map(r[id]).gamma;
        e.rows.push_back({l.name(r[id]), ctx.child().name(y)});
        images.push_back({{"object", object_json(l, r[id])}, {"image", object_json(ctx.child(), y)}});
    }
    return {{g, j, e},
            {{"reducer", object_json(l, u)},
             {"gamma", {{"idempotents", inv.idempotents}, {"dim", inv.dim}, {"arrows", inv.arrows}}},
             {"j", members},
             {"images", images}}};
}

Output cmd_psi(const Session& s, const std::string& text) {
    const auto& l = *s.root;
    std::vector<SignedObject> t;
    for (const auto& n : split_list(text)) t.push_back(l.resolve(n));
    if (!is_support_tau_rigid(t)) throw DomainError("not an ordered support τ-rigid object");
    const auto seq = psi(l, t);
    json o = json::array();
    for (const auto& x : t) o.push_back(object_json(l, x));
    return {{{"signed τ-exceptional sequence", {"sequence"}, {{join(names(seq), ", ")}}}},
            {{"object", o}, {"sequence", sequence_json(l, seq)}}};
}

Output cmd_phi(const Session& s, const std::string& text) {
    const auto& l = *s.root;
    const auto seq = parse_sequence(l, split_list(text));
    const auto t = phi(l, objects(seq));
    json o = json::array();
    for (const auto& x : t) o.push_back(object_json(l, x));
    return {{{"ordered support τ-rigid object", {"object"}, {{join(object_names(l, t), ", ")}}}},
            {{"sequence", sequence_json(l, seq)}, {"object", o}}};
}

Output cmd_count(const Session& s, int length, const std::string& last) {
    const auto& l = *s.root;
    const int n = l.algebra()->num_vertices();
    if (length < 1 || length > n) throw DomainError("length must be between 1 and " + std::to_string(n));
    std::optional<SignedObject> u;
    if (!last.empty()) u = l.resolve(last);
    const auto c = count_sequences(l, length, u);
    Table t{"signed τ-exceptional sequences", {"length", "last", "count"},
            {{std::to_string(length), last.empty() ? "*" : l.name(*u), std::to_string(c)}}};
    json data = {{"length", length}, {"count", c}};
    if (u) data["last"] = object_json(l, *u);
    return {{t}, data};
}

Output bijection_table(const Level& l) {
    const auto& r = l.registry();
    Table t{"ordered support τ-tilting objects and signed τ-exceptional sequences", {"object", "sequence"}, {}};
    json rows = json::array();
    const auto tuples = enumerate_ordered(r, l.algebra()->num_vertices());
    for (const auto& ids : tuples) {
        const auto xs = r.objects(ids);
        const auto seq = psi(l, xs);
        t.rows.push_back({"(" + join(object_names(l, xs), ", ") + ")", "(" + join(names(seq), ", ") + ")"});
        json o = json::array();
        for (const auto& x : xs) o.push_back(object_json(l, x));
        rows.push_back({{"object", o}, {"sequence", sequence_json(l, seq)}});
    }
    return {{t}, {{"unordered", enumerate_unordered(r, l.algebra()->num_vertices()).size()}, {"ordered", tuples.size()}, {"rows", rows}}};
}

Output reduction_table(const Level& l) {
    const auto& r = l.registry();
    const int n = l.algebra()->num_vertices();
    Table j{"reductions", {"U", "J(U)", "idempotents", "dim", "arrows", "sequences ending in U"}, {}};
    json rows = json::array();
    for (int id = 0; id < r.size(); ++id) {
        const auto& ctx = l.context(r[id]);
        std::vector<std::string> members;
        for (const auto& c : ctx.child().catalog()) members.push_back(c.name);
        const auto inv = algebra_invariants(*ctx.gamma());
        const auto c = count_sequences(l, n, r[id]);
        j.rows.push_back({l.name(r[id]), "{" + join(members, ", ") + "}", std::to_string(inv.idempotents),
                          std::to_string(inv.dim), std::to_string(inv.arrows), std::to_string(c)});
        rows.push_back({{"object", object_json(l, r[id])},
                        {"j", members},
                        {"gamma", {{"idempotents", inv.idempotents}, {"dim", inv.dim}, {"arrows", inv.arrows}}},
                        {"count", c}});
    }
    const auto total = count_sequences(l, n);
    Table tot{"total", {"length", "count"}, {{std::to_string(n), std::to_string(total)}}};
    return {{j, tot}, {{"reductions", rows}, {"total", total}}};
}

Output cmd_paper_example(const Session& s, int which) {
    auto out = bijection_table(*s.root);
    if (which != 3) return out;
    auto red = reduction_table(*s.root);
    out.tables.insert(out.tables.begin(), red.tables.begin(), red.tables.end());
    out.data["reductions"] = red.data["reductions"];
    out.data["total"] = red.data["total"];
    return out;
}

void render_table(std::ostream& os, const Table& t) {
    std::vector<std::size_t> width(t.header.size());
    auto cells = [](const std::string& s) {
        // display width: count code points
        std::size_t n = 0;
        for (unsigned char ch : s) n += (ch & 0xC0) != 0x80;
        return n;
    };
    for (std::size_t c = 0; c < t.header.size(); ++c) width[c] = cells(t.header[c]);
    for (const auto& row : t.rows)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], cells(row[c]));
    auto line = [&](const std::vector<std::string>& row) {
        std::string s;
        for (std::size_t c = 0; c < row.size(); ++c) {
            s += row[c];
            if (c + 1 < row.size()) s += std::string(width[c] - cells(row[c]) + 2, ' ');
        }
        os << s << "\n";
    };
    os << t.title << "\n";
    line(t.header);
    std::vector<std::string> rule;
    for (auto w : width) rule.push_back(std::string(w, '-'));
    line(rule);
    for (const auto& row : t.rows) line(row);
}

void render(std::ostream& os, const Output& out, const std::string& format) {
    if (format == "json") {
        os << out.data.dump(2) << "\n";
        return;
    }
    for (std::size_t i = 0; i < out.tables.size(); ++i) {
        const auto& t = out.tables[i];
        if (format == "tsv") {
            os << "# " << t.title << "\n" << join(t.header, "\t") << "\n";
            for (const auto& row : t.rows) os << join(row, "\t") << "\n";
        } else {
            if (i) os << "\n";
            render_table(os, t);
        }
    }
}

int exit_code(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::Parse: return 1;
        case ErrorKind::Domain: return 2;
        case ErrorKind::CapExceeded: return 3;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"τ-tilting invariants of monomial quiver algebras over F_p"};
    app.require_subcommand(1);
    Config cfg;
    app.add_option("--algebra", cfg.algebra, "algebra file")->check(CLI::ExistingFile);
    app.add_option("--fixtures", cfg.fixtures, "named modules file (default: the algebra file with extension .mod)")
        ->check(CLI::ExistingFile);
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"table", "tsv", "json"}));
    app.add_option("--cap", cfg.cap, "enumeration limit")->check(CLI::PositiveNumber);
    app.add_option("--prime", cfg.prime, "override the field characteristic");

    std::string name, object, sequence, last;
    bool ordered = false;
    int length = 0, which = 0;
    auto* info = app.add_subcommand("info", "algebra summary and named modules");
    auto* tau_cmd = app.add_subcommand("tau", "Auslander-Reiten translate of a module");
    tau_cmd->add_option("--module", name)->required();
    auto* rigid = app.add_subcommand("indec-tau-rigid", "indecomposable τ-rigid objects");
    auto* st = app.add_subcommand("st-pairs", "support τ-rigid objects");
    st->add_flag("--ordered", ordered);
    st->add_option("--length", length, "number of summands (default: all)");
    auto* bong = app.add_subcommand("bongartz", "Bongartz complement");
    bong->add_option("--module", name)->required();
    auto* cobong = app.add_subcommand("cobongartz", "co-Bongartz completion");
    cobong->add_option("--module", name)->required();
    auto* corr = app.add_subcommand("correspond", "Bongartz summands with their co-Bongartz partners");
    corr->add_option("--module", name)->required();
    auto* reduce = app.add_subcommand("reduce", "τ-tilting reduction by an indecomposable object");
    reduce->add_option("--object", object)->required();
    auto* psi_cmd = app.add_subcommand("psi", "ordered support τ-rigid object to signed τ-exceptional sequence");
    psi_cmd->add_option("--object", object)->required();
    auto* phi_cmd = app.add_subcommand("phi", "signed τ-exceptional sequence to ordered support τ-rigid object");
    phi_cmd->add_option("--sequence", sequence)->required();
    auto* count = app.add_subcommand("count", "number of signed τ-exceptional sequences");
    count->add_option("--length", length)->required();
    count->add_option("--last", last, "only sequences ending in this object");
    auto* example = app.add_subcommand("paper-example", "tables for the bundled examples");
    example->add_option("which", which)->required()->check(CLI::Range(1, 3));
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (example->parsed() && cfg.algebra.empty()) {
            cfg.algebra = std::string(TAUSEQ_DATA_DIR) + "/ex" + std::to_string(which) + ".alg";
            if (cfg.fixtures.empty()) cfg.fixtures = std::string(TAUSEQ_DATA_DIR) + "/ex" + std::to_string(which) + ".mod";
        }
        const auto s = open_session(cfg);
        Output out;
        if (info->parsed()) out = cmd_info(s);
        else if (tau_cmd->parsed()) out = cmd_tau(s, name);
        else if (rigid->parsed()) out = cmd_indec_tau_rigid(s);
        else if (st->parsed()) out = cmd_st_pairs(s, ordered, length);
        else if (bong->parsed()) out = cmd_bongartz(s, name);
        else if (cobong->parsed()) out = cmd_cobongartz(s, name);
        else if (corr->parsed()) out = cmd_correspond(s, name);
        else if (reduce->parsed()) out = cmd_reduce(s, object);
        else if (psi_cmd->parsed()) out = cmd_psi(s, object);
        else if (phi_cmd->parsed()) out = cmd_phi(s, sequence);
        else if (count->parsed()) out = cmd_count(s, length, last);
        else out = cmd_paper_example(s, which);
        std::ostringstream os;
        render(os, out, cfg.format);
        std::cout << os.str();
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
