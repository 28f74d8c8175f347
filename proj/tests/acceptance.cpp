// Acceptance run: one line per criterion, with its runtime against the limit.

#include "oracles.hpp"

#include "tauseq/error.hpp"
#include "tauseq/sequences.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace tauseq;
using testing::example;

namespace {

struct Checker {
    int checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
};

std::unique_ptr<Level> make_level(int n) {
    const auto& ex = example(n);
    return std::make_unique<Level>(ex.algebra, standard_catalog(ex.algebra, ex.fixtures));
}

std::vector<SignedObject> resolve_all(const Level& l, const std::vector<std::string>& names) {
    std::vector<SignedObject> out;
    for (const auto& s : names) out.push_back(l.resolve(s));
    return out;
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string tok; std::getline(in, tok, ',');) {
        tok.erase(0, tok.find_first_not_of(' '));
        out.push_back(tok);
    }
    return out;
}

std::string bracket(const std::vector<std::string>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
    return "(" + out + ")";
}

void check_table(Checker& c, int n, std::size_t unordered, std::size_t ordered,
                 const std::vector<std::pair<std::string, std::string>>& table) {
    const auto l = make_level(n);
    const auto& r = l->registry();
    const int rank = l->algebra()->num_vertices();
    const auto u = enumerate_unordered(r, rank).size();
    const auto o = enumerate_ordered(r, rank);
    c.expect(u == unordered, "unordered count " + std::to_string(u));
    c.expect(o.size() == ordered, "ordered count " + std::to_string(o.size()));
    std::set<std::pair<std::string, std::string>> computed, expected;
    for (const auto& ids : o) {
        const auto xs = r.objects(ids);
        std::vector<std::string> names;
        for (const auto& x : xs) names.push_back(l->name(x));
        computed.insert({bracket(names), to_string(psi(*l, xs))});
    }
    for (const auto& [t, s] : table) expected.insert({"(" + t + ")", "(" + s + ")"});
    for (const auto& row : expected)
        c.expect(computed.count(row) == 1, "missing row " + row.first + " -> " + row.second);
    c.expect(computed.size() == expected.size(), "row count " + std::to_string(computed.size()));
}

void criterion1(Checker& c) {
    check_table(c, 1, 5, 10,
                {{"P2, P1", "P2, P1"},
                 {"S1, P1", "P2[1], P1"},
                 {"P1, P2", "S1, P2"},
                 {"P1[1], P2", "S1[1], P2"},
                 {"P1, S1", "P1, S1"},
                 {"P2[1], S1", "P1[1], S1"},
                 {"P2, P1[1]", "P2, P1[1]"},
                 {"P2[1], P1[1]", "P2[1], P1[1]"},
                 {"S1, P2[1]", "S1, P2[1]"},
                 {"P1[1], P2[1]", "S1[1], P2[1]"}});
}

void criterion2(Checker& c) {
    c.expect(!is_tau_rigid(example(2)["I1"]), "I1 is τ-rigid");
    for (const char* m : {"S2", "P1", "P2", "S1"}) c.expect(is_tau_rigid(example(2)[m]), std::string(m) + " not τ-rigid");
    check_table(c, 2, 6, 12,
                {{"P1, P2", "S1, P2"},
                 {"S2, P2", "S1[1], P2"},
                 {"P2, P1", "S2, P1"},
                 {"S1, P1", "S2[1], P1"},
                 {"P2, S2", "I1, S2"},
                 {"P1[1], S2", "I1[1], S2"},
                 {"P2[1], S1", "P1[1], S1"},
                 {"P1, S1", "P1, S1"},
                 {"S2, P1[1]", "S2, P1[1]"},
                 {"P2[1], P1[1]", "S2[1], P1[1]"},
                 {"S1, P2[1]", "S1, P2[1]"},
                 {"P1[1], P2[1]", "S1[1], P2[1]"}});
}

void criterion3(Checker& c) {
    const auto l = make_level(3);
    const auto& ex = example(3);
    const auto total = count_sequences(*l, 3);
    c.expect(total == 100, "count_sequences(t = 3) = " + std::to_string(total) + ", expected 100");
    auto last = [&](const std::string& u, std::size_t want) {
        const auto got = count_sequences(*l, 3, l->resolve(u));
        c.expect(got == want, "sequences ending in " + u + " = " + std::to_string(got) + ", expected " + std::to_string(want));
    };
    for (const char* u : {"S2", "S3", "P2", "P1", "M", "S3[1]", "P2[1]", "P1[1]"}) last(u, 10);
    for (const char* u : {"N", "S1"}) last(u, 4);
    last("I2", 12);

    const std::vector<std::pair<std::string, std::set<std::string>>> j_table{
        {"S2", {"P2", "I3", "S1"}}, {"S3", {"S2", "I2", "S1"}}, {"P1", {"S3", "P2", "S2"}},
        {"P2", {"S3", "M", "S1"}},  {"M", {"S3", "P1", "I2"}},  {"N", {"M", "P2"}},
        {"I2", {"P1", "M", "N", "I3", "S2"}}, {"S1", {"I2", "M"}}};
    for (const auto& [u, want] : j_table) {
        const auto x = l->resolve(u);
        std::set<std::string> got;
        for (const auto& f : ex.fixtures)
            if (j_membership(x, f.module)) got.insert(f.name);
        c.expect(got == want, "J(" + u + ") membership");
        const auto inv = algebra_invariants(*l->context(x).gamma());
        AlgebraInvariants expected{2, 3, 1};
        if (u == "N" || u == "S1") expected = {2, 2, 0};
        if (u == "I2") expected = {2, 5, 2};
        c.expect(inv == expected, "Γ invariants for " + u);
    }
    c.expect(to_string(psi(*l, resolve_all(*l, {"M", "I2", "P1"}))) == "(S2[1], S3[1], P1)", "Ψ(M, I2, P1)");
    c.expect(to_string(psi(*l, resolve_all(*l, {"M", "P1", "I2"}))) == "(S2[1], P1, I2)", "Ψ(M, P1, I2)");
}

void criterion4(Checker& c) {
    for (int n = 1; n <= 3; ++n) {
        const auto l = make_level(n);
        const auto& ex = example(n);
        const auto catalog = standard_catalog(ex.algebra, ex.fixtures);
        const auto& r = l->registry();
        const auto tag = "example " + std::to_string(n);
        for (int t = 1; t <= l->algebra()->num_vertices(); ++t) {
            const auto ordered = enumerate_ordered(r, t);
            for (const auto& ids : ordered) {
                const auto back = phi(*l, objects(psi(*l, r.objects(ids))));
                bool same = back.size() == ids.size();
                for (std::size_t i = 0; same && i < ids.size(); ++i) same = is_iso(back[i], r[ids[i]]);
                c.expect(same, tag + ": Φ∘Ψ ≠ id");
            }
            std::size_t valid = 0;
            for (const auto& s : enumerate_sequences(*l, t)) {
                valid += validate_sequence(ex.algebra, catalog, names(s)).ok;
                c.expect(to_string(psi(*l, phi(*l, objects(s)))) == to_string(s), tag + ": Ψ∘Φ ≠ id on " + to_string(s));
            }
            c.expect(valid == ordered.size(), tag + ": " + std::to_string(valid) + " valid sequences vs " +
                                                  std::to_string(ordered.size()) + " ordered objects, t = " + std::to_string(t));
        }
        c.expect(count_sequences(*l, l->algebra()->num_vertices() + 1) == 0, tag + ": a sequence longer than the rank");
    }
}

bool has_projective_summand(const FdModule& m) {
    for (const auto& s : basic_summands(m))
        for (int v = 0; v < m.algebra()->num_vertices(); ++v)
            if (is_iso(s, projective_module(m.algebra(), v))) return true;
    return false;
}

void criterion5(Checker& c) {
    for (int n = 1; n <= 3; ++n) {
        const auto& ex = example(n);
        const auto& a = ex.algebra;
        const auto& k = a->field();
        const auto tag = "example " + std::to_string(n) + ": ";
        const auto l = make_level(n);
        const auto& r = l->registry();

        // rigid-rigid (a), both directions
        for (const auto& x : ex.fixtures)
            for (const auto& u : ex.fixtures)
                c.expect((hom_dim(u.module, tau(x.module)) == 0) ==
                             (hom_K_dim(lift(SignedObject::of(x.module)), lift(SignedObject::of(u.module)), 1) == 0),
                         tag + "rigid-rigid " + x.name + " " + u.name);

        const auto e = enumerate_support_tau_tilting(a);
        for (const auto& ids : e.objects) {
            const auto t = e.registry.objects(ids);
            std::vector<TwoTermComplex> cs;
            for (int id : ids) cs.push_back(e.registry.complex(id));
            const auto u = direct_sum(cs);
            // nokernel, as stated: H^0 τ-tilting iff H^-1 has no projective summand
            const bool tilting = basic_summands(h0(u)).size() == t.size();
            c.expect(tilting == !has_projective_summand(hminus1(u)), tag + "nokernel");

            // exchange (b)-(e) at every mutation step
            for (std::size_t i = 0; i < ids.size(); ++i) {
                std::vector<TwoTermComplex> us;
                for (std::size_t j = 0; j < ids.size(); ++j)
                    if (j != i) us.push_back(cs[j]);
                const auto alpha = min_right_approx_K(us, cs[i]);
                const auto y = try_cone_shift(alpha.map);
                if (!y || y->is_zero() || !is_indecomposable_K(*y) || is_iso_K(*y, cs[i])) continue;
                auto with = us;
                with.push_back(*y);
                c.expect(is_rigid(direct_sum(with)), tag + "exchange (b)");
                bool disjoint = true;
                for (const auto& v : us) disjoint = disjoint && !is_iso_K(v, *y);
                c.expect(disjoint, tag + "exchange (c)");
                auto left = min_left_approx_K(*y, us).kinds;
                auto right = alpha.kinds;
                std::sort(left.begin(), left.end());
                std::sort(right.begin(), right.end());
                c.expect(left == right, tag + "exchange (d)");
                c.expect(is_two_term_silting(with) == is_two_term_silting(cs), tag + "exchange (e)");
            }
        }

        for (const auto& uf : ex.fixtures) {
            if (!is_tau_rigid(uf.module)) continue;
            const auto& um = uf.module;
            const auto tu = tau(um);
            const auto what = tag + uf.name + ": ";

            // two-pairs (a): Gen(U ⊕ B) = ⊥τU
            auto parts = bongartz(r, um);
            const auto bs = parts;
            parts.push_back(um);
            const auto t = direct_sum(a, parts).sum;
            for (const auto& x : ex.fixtures)
                c.expect(in_gen(t, x.module) == (hom_dim(x.module, tu) == 0), what + "two-pairs (a) at " + x.name);
            // two-pairs (b): Ext-projectives of Gen U are add(C ⊕ U)
            const auto cb = cobongartz(r, um);
            for (const auto& x : ex.fixtures) {
                const bool ext_projective = in_gen(um, x.module) && is_tau_rigid(x.module) &&
                                            compatible(SignedObject::of(x.module), SignedObject::of(um));
                bool listed = is_iso(x.module, um);
                for (const auto& m : cb.c) listed = listed || is_iso(m, x.module);
                c.expect(ext_projective == listed, what + "two-pairs (b) at " + x.name);
            }
            // wakamatsu
            for (const auto& x : ex.fixtures)
                c.expect(hom_dim(kernel(min_right_approx(um, x.module).map).source, tu) == 0, what + "wakamatsu at " + x.name);

            for (const auto& rec : complement_correspondence(r, um)) {
                if (!rec.partner.is_shifted()) {
                    // Gen-app: maps from B_i into Gen U factor through B_i -> U'_i
                    for (const auto& v : ex.fixtures) {
                        if (!in_gen(um, v.module)) continue;
                        const auto hb = hom_basis(rec.b, v.module);
                        std::vector<Vec> coords;
                        for (const auto& g : hom_basis(rec.to_u.target, v.module).basis)
                            coords.push_back(hb.coords(Mat(g * rec.to_u.matrix)));
                        c.expect(rank(k, from_columns(k, hb.dim(), coords)) == hb.dim(), what + "Gen-app into " + v.name);
                    }
                }
                // split projectivity in ⊥τU
                for (const auto& y : ex.fixtures) {
                    if (hom_dim(y.module, tu) != 0 || y.module.dim() < rec.b.dim()) continue;
                    const Mat g = testing::generic_map(y.module, rec.b);
                    if (rank(k, g) == rec.b.dim()) c.expect(is_iso(y.module, rec.b), what + "split projectivity");
                }
            }

            if (a->num_vertices() < 2) continue;
            const auto& ctx = l->context(SignedObject::of(um));
            std::vector<std::pair<std::string, FdModule>> images;
            for (const auto& x : ex.fixtures) {
                if (!is_tau_rigid(x.module) || !compatible(SignedObject::of(x.module), SignedObject::of(um))) continue;
                const auto f = torsion_free_quotient(um, x.module).target;
                // pres-ind
                c.expect(f.is_zero() || is_local_endo(f), what + "pres-ind at " + x.name);
                if (f.is_zero()) continue;
                // pres-rig
                const bool ext_projective = in_gen(um, x.module);
                c.expect(ext_projective || is_tau_rigid(ctx.transport(f)), what + "pres-rig at " + x.name);
                if (!ext_projective) images.emplace_back(x.name, f);
            }
            // inclusive
            for (std::size_t i = 0; i < images.size(); ++i)
                for (std::size_t j = 0; j < i; ++j)
                    c.expect(!is_iso(images[i].second, images[j].second), what + "inclusive " + images[i].first + " " + images[j].first);
            // red: f(B_i) are the indecomposable projective Γ-modules
            std::vector<int> hit(static_cast<std::size_t>(ctx.gamma()->num_vertices()));
            for (const auto& b : bs) {
                const auto v = ctx.projective_vertex(torsion_free_quotient(um, b).target);
                c.expect(v.has_value(), what + "red: f(B_i) not projective");
                if (v) ++hit[static_cast<std::size_t>(*v)];
            }
            c.expect(std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; }), what + "red");
        }

        // object-bijection: E-images against an independent enumeration over Γ
        if (a->num_vertices() >= 2)
            for (int u = 0; u < r.size(); ++u) {
                const auto& ctx = l->context(r[u]);
                const auto gamma = enumerate_support_tau_tilting(ctx.gamma());
                std::vector<int> hit(static_cast<std::size_t>(gamma.registry.size()));
                for (int x = 0; x < r.size(); ++x) {
                    if (!ctx.compatible_with_reducer(r[x])) continue;
                    const auto id = gamma.registry.find(ctx.e_map(r[x]).gamma);
                    c.expect(id.has_value(), tag + "object-bijection: image not τ-rigid over Γ");
                    if (id) ++hit[static_cast<std::size_t>(*id)];
                }
                c.expect(std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; }),
                         tag + "object-bijection for " + l->name(r[u]));
            }

        // exceptionality of every entry of every complete sequence
        for (const auto& s : enumerate_sequences(*l, a->num_vertices()))
            for (const auto& entry : s) {
                const auto base = entry.object.is_shifted() ? entry.name.substr(0, entry.name.size() - 3) : entry.name;
                const auto& m = ex[base];
                c.expect(ext1_dim(m, m) == 0, tag + "exceptionality of " + entry.name);
            }
    }
}

std::string run(const std::string& cmd) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return out;
    std::array<char, 4096> buf{};
    for (std::size_t got; (got = fread(buf.data(), 1, buf.size(), p)) > 0;) out.append(buf.data(), got);
    const int status = pclose(p);
    return out + "\nstatus " + std::to_string(status);
}

void criterion6(Checker& c) {
    const std::string data = TAUSEQ_DATA_DIR;
    std::vector<std::string> commands;
    for (int n = 1; n <= 3; ++n) {
        const auto alg = " --algebra " + data + "/ex" + std::to_string(n) + ".alg";
        for (const char* fmt : {"table", "json"}) {
            commands.push_back(std::string("paper-example ") + std::to_string(n) + alg + " --format " + fmt);
            commands.push_back("indec-tau-rigid" + alg + " --format " + fmt);
            commands.push_back("st-pairs --ordered" + alg + " --format " + fmt);
        }
    }
    commands.push_back("psi --algebra " + data + "/ex3.alg --object M,I2,P1 --format json");
    commands.push_back("count --algebra " + data + "/ex3.alg --length 3 --last N");
    std::string first, second;
    for (const auto& cmd : commands) first += run(std::string(TAUSEQ_CLI) + " " + cmd + " 2>&1");
    for (const auto& cmd : commands) second += run(std::string(TAUSEQ_CLI) + " " + cmd + " 2>&1");
    c.expect(!first.empty() && first.find("status 0") != std::string::npos, "CLI did not run");
    c.expect(first == second, "outputs differ between runs");
    // in-process as well: fresh levels give the same transcript
    auto transcript = [] {
        std::string s;
        for (int n = 1; n <= 3; ++n) {
            const auto l = make_level(n);
            for (const auto& seq : enumerate_sequences(*l, l->algebra()->num_vertices())) s += to_string(seq);
        }
        return s;
    };
    c.expect(transcript() == transcript(), "in-process transcripts differ");
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string name;
        double limit;
        std::function<void(Checker&)> body;
    };
    const std::vector<Criterion> criteria{
        {1, "Example 1 reproduction", 1, criterion1},
        {2, "Example 2 reproduction", 1, criterion2},
        {3, "Example 3 reproduction", 30, criterion3},
        {4, "bijection property suite", 60, criterion4},
        {5, "invariant suite", 60, criterion5},
        {6, "determinism", 60, criterion6},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Checker c;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.body(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs >= cr.limit) c.failures.push_back("runtime over the limit");
        const bool ok = c.failures.empty();
        failed += !ok;
        std::printf("%s criterion %d: %s (%d checks, %.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", cr.id, cr.name.c_str(),
                    c.checks, secs, cr.limit);
        std::set<std::string> shown;
        for (const auto& f : c.failures)
            if (shown.insert(f).second && shown.size() <= 12) std::printf("    %s\n", f.c_str());
        if (shown.size() > 12) std::printf("    ... %zu more\n", shown.size() - 12);
    }
    return failed == 0 ? 0 : 1;
}
