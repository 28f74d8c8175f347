#include "oracles.hpp"

#include "tauseq/error.hpp"

#include <doctest.h>

using namespace tauseq;
using testing::example;

namespace {

const Enumeration& enumeration(int n) {
    static std::map<int, Enumeration> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, enumerate_support_tau_tilting(example(n).algebra)).first;
    return it->second;
}

SignedObject shift(int n, int v) { return SignedObject::shift(example(n).algebra, v); }
SignedObject mod(int n, const std::string& name) { return SignedObject::of(example(n)[name]); }

bool same_objects(std::vector<SignedObject> x, std::vector<SignedObject> y) {
    if (x.size() != y.size()) return false;
    for (const auto& a : x)
        if (std::none_of(y.begin(), y.end(), [&](const SignedObject& b) { return is_iso(a, b); })) return false;
    return true;
}

bool has_projective_summand(const FdModule& m) {
    for (const auto& s : basic_summands(m))
        for (int v = 0; v < m.algebra()->num_vertices(); ++v)
            if (is_iso(s, projective_module(m.algebra(), v))) return true;
    return false;
}

std::vector<TwoTermComplex> lifts(const std::vector<SignedObject>& t) {
    std::vector<TwoTermComplex> out;
    for (const auto& x : t) out.push_back(lift(x));
    return out;
}

}  // namespace

TEST_CASE("τ-rigid modules") {
    CHECK_FALSE(is_tau_rigid(example(2)["I1"]));
    for (const char* name : {"S2", "P1", "P2", "S1"}) CHECK(is_tau_rigid(example(2)[name]));
    const auto& e3 = example(3);
    for (const char* name : {"S1", "S2", "S3", "P1", "P2", "M", "N", "I2"}) CHECK(is_tau_rigid(e3[name]));
    CHECK_FALSE(is_tau_rigid(e3["I3"]));
    for (int n = 1; n <= 3; ++n)
        for (int v = 0; v < example(n).algebra->num_vertices(); ++v)
            CHECK(is_tau_rigid(projective_module(example(n).algebra, v)));
}

TEST_CASE("support τ-rigid objects") {
    CHECK(is_support_tau_rigid({mod(1, "S1"), shift(1, 1)}));
    CHECK_FALSE(is_support_tau_rigid({mod(1, "S1"), shift(1, 0)}));
    CHECK(is_support_tau_rigid({}));
    CHECK_FALSE(is_support_tau_rigid({mod(1, "P1"), mod(1, "P1")}));
    CHECK_FALSE(is_support_tau_rigid({mod(1, "P2"), mod(1, "S1")}));
    CHECK(is_support_tau_tilting({mod(1, "P1"), mod(1, "S1")}));
    CHECK_FALSE(is_support_tau_tilting({mod(1, "S1")}));
}

TEST_CASE("lift and back") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& c : testing::rigid_candidates(example(n))) {
            const auto x = lift(c.object);
            CHECK(is_indecomposable_K(x));
            CHECK(is_iso(from_complex(x), c.object));
        }
}

TEST_CASE("mutation") {
    const auto ex1 = std::vector<SignedObject>{mod(1, "P1"), mod(1, "P2")};
    CHECK(same_objects(mutate(ex1, 1), {mod(1, "P1"), mod(1, "S1")}));
    // the brute-force completions of {P2} other than P1
    const auto cands = testing::rigid_candidates(example(1));
    std::vector<SignedObject> others;
    for (const auto& c : cands)
        if (!is_iso(c.object, mod(1, "P1")) && is_support_tau_tilting({mod(1, "P2"), c.object})) others.push_back(c.object);
    REQUIRE(others.size() == 1);
    CHECK(is_iso(exchange_partner(ex1, 0), others.front()));
    CHECK(is_iso(others.front(), shift(1, 0)));

    CHECK_THROWS_AS(mutate({mod(1, "S1")}, 0), DomainError);
    CHECK_THROWS_AS(mutate({mod(1, "P2"), mod(1, "S1")}, 0), DomainError);

    for (int n = 1; n <= 3; ++n) {
        const auto& e = enumeration(n);
        for (const auto& ids : e.objects) {
            const auto t = e.registry.objects(ids);
            for (std::size_t k = 0; k < t.size(); ++k) {
                const auto m = mutate(t, k);
                CHECK(is_support_tau_tilting(m));
                CHECK_FALSE(is_iso(m[k], t[k]));
                CHECK(same_objects(mutate(m, k), t));
            }
        }
    }
}

TEST_CASE("exchange triangles") {
    for (int n = 1; n <= 3; ++n) {
        const auto& e = enumeration(n);
        for (const auto& ids : e.objects) {
            const auto t = e.registry.objects(ids);
            for (std::size_t k = 0; k < t.size(); ++k) {
                std::vector<TwoTermComplex> us;
                for (std::size_t j = 0; j < t.size(); ++j)
                    if (j != k) us.push_back(e.registry.complex(ids[j]));
                const auto x = e.registry.complex(ids[k]);
                const auto alpha = min_right_approx_K(us, x);
                const auto y = try_cone_shift(alpha.map);
                auto with = [&](const TwoTermComplex& z) {
                    auto v = us;
                    v.push_back(z);
                    return v;
                };
                CHECK(is_two_term_silting(with(x)));
                if (!y || y->is_zero() || !is_indecomposable_K(*y) || is_iso_K(*y, x)) continue;
                // Y ⊕ U rigid, disjoint from add U, with Y -> U' a minimal left approximation
                CHECK(is_rigid(direct_sum(with(*y))));
                for (const auto& u : us) CHECK_FALSE(is_iso_K(u, *y));
                auto left = min_left_approx_K(*y, us).kinds;
                auto right = alpha.kinds;
                std::sort(left.begin(), left.end());
                std::sort(right.begin(), right.end());
                CHECK(left == right);
                CHECK(is_two_term_silting(with(*y)));
            }
        }
    }
}

TEST_CASE("enumeration of support τ-tilting objects") {
    CHECK(enumeration(1).objects.size() == 5);
    CHECK(enumeration(2).objects.size() == 6);
    for (int n = 1; n <= 3; ++n) {
        const auto& ex = example(n);
        const auto& e = enumeration(n);
        const auto cands = testing::rigid_candidates(ex);
        const auto oracle = testing::brute_force_tilting(cands, ex.algebra->num_vertices());
        std::set<std::vector<int>> found;
        for (const auto& ids : e.objects) {
            std::vector<int> idx;
            for (int id : ids) idx.push_back(testing::candidate_index(cands, e.registry[id]));
            std::sort(idx.begin(), idx.end());
            found.insert(idx);
            CHECK(is_support_tau_tilting(e.registry.objects(ids)));
        }
        CHECK(found == oracle);
        CHECK(found.size() == e.objects.size());
        CHECK(e.registry.size() == static_cast<int>(cands.size()));
        for (int id = 0; id < e.registry.size(); ++id) CHECK(is_tau_rigid(e.registry[id]));
        // n distinct neighbors each
        for (const auto& nb : e.neighbors) {
            CHECK(static_cast<int>(nb.size()) == ex.algebra->num_vertices());
            CHECK(std::set<int>(nb.begin(), nb.end()).size() == nb.size());
        }
    }
    CHECK_THROWS_AS(enumerate_support_tau_tilting(example(3).algebra, 3), CapExceeded);
}

TEST_CASE("H^-1 of a silting complex without projective summands gives a τ-tilting H^0") {
    for (int n = 1; n <= 3; ++n) {
        const auto& e = enumeration(n);
        for (const auto& ids : e.objects) {
            const auto t = e.registry.objects(ids);
            const bool tilting = std::none_of(t.begin(), t.end(), [](const SignedObject& x) { return x.is_shifted(); });
            const auto u = direct_sum(lifts(t));
            const bool full = basic_summands(h0(u)).size() == t.size();
            CHECK(tilting == full);
            if (!has_projective_summand(hminus1(u))) CHECK(tilting);
            if (!tilting) CHECK(has_projective_summand(hminus1(u)));
        }
    }
    // the converse fails: S1 over Example 2 has projective dimension 2
    const auto& e2 = example(2);
    const auto u = direct_sum({lift(mod(2, "P1")), lift(mod(2, "S1"))});
    CHECK(is_support_tau_tilting({mod(2, "P1"), mod(2, "S1")}));
    CHECK(is_iso(hminus1(u), e2["P1"]));
}

TEST_CASE("co-Bongartz completion") {
    const auto& e1 = enumeration(1);
    auto c = cobongartz(e1.registry, example(1)["P1"]);
    REQUIRE(c.c.size() == 1);
    CHECK(is_iso(c.c[0], example(1)["S1"]));
    CHECK(c.q.empty());
    c = cobongartz(e1.registry, example(1)["S1"]);
    CHECK(c.c.empty());
    CHECK(c.q == std::vector<int>{1});
    c = cobongartz(e1.registry, regular_module(example(1).algebra));
    CHECK(c.c.empty());
    CHECK(c.q.empty());
    CHECK_THROWS_AS(cobongartz(enumeration(2).registry, example(2)["I1"]), DomainError);

    for (int n = 1; n <= 3; ++n) {
        const auto& ex = example(n);
        for (const auto& f : ex.fixtures) {
            if (!is_tau_rigid(f.module)) continue;
            const auto cb = cobongartz(enumeration(n).registry, f.module);
            std::vector<SignedObject> all{SignedObject::of(f.module)};
            for (const auto& m : cb.c) all.push_back(SignedObject::of(m));
            for (int v : cb.q) all.push_back(SignedObject::shift(ex.algebra, v));
            CHECK(is_support_tau_tilting(all));
            // Ext-projectives of Gen U are exactly add(C ⊕ U)
            for (const auto& x : ex.fixtures) {
                const bool ext_projective = in_gen(f.module, x.module) && is_tau_rigid(x.module) &&
                                            compatible(SignedObject::of(x.module), SignedObject::of(f.module));
                const bool listed = is_iso(x.module, f.module) ||
                                    std::any_of(cb.c.begin(), cb.c.end(), [&](const FdModule& m) { return is_iso(m, x.module); });
                CHECK_MESSAGE(ext_projective == listed, f.name << " " << x.name);
            }
        }
    }
}

TEST_CASE("Bongartz completion") {
    const auto& e1 = example(1);
    auto b = bongartz(enumeration(1).registry, e1["P2"]);
    REQUIRE(b.size() == 1);
    CHECK(is_iso(b[0], e1["P1"]));
    b = bongartz(enumeration(1).registry, e1["S1"]);
    REQUIRE(b.size() == 1);
    CHECK(is_iso(b[0], e1["P1"]));
    CHECK(bongartz(enumeration(1).registry, regular_module(e1.algebra)).empty());

    const auto& e3 = example(3);
    b = bongartz(enumeration(3).registry, e3["S2"]);
    REQUIRE(b.size() == 2);
    CHECK(same_objects({SignedObject::of(b[0]), SignedObject::of(b[1])}, {mod(3, "N"), mod(3, "P2")}));
    // the torsion-free parts are the projectives of J(S2)
    CHECK(same_objects({SignedObject::of(torsion_free_quotient(e3["S2"], b[0]).target),
                        SignedObject::of(torsion_free_quotient(e3["S2"], b[1]).target)},
                       {mod(3, "P2"), mod(3, "I3")}));

    for (int n = 1; n <= 3; ++n) {
        const auto& ex = example(n);
        for (const auto& f : ex.fixtures) {
            if (!is_tau_rigid(f.module)) continue;
            const auto bs = bongartz(enumeration(n).registry, f.module);
            std::vector<SignedObject> all{SignedObject::of(f.module)};
            for (const auto& m : bs) all.push_back(SignedObject::of(m));
            CHECK(is_support_tau_tilting(all));
            auto parts = bs;
            parts.push_back(f.module);
            const auto t = direct_sum(ex.algebra, parts).sum;
            const auto tu = tau(f.module);
            // Gen(U ⊕ B) = ⊥τU
            for (const auto& x : ex.fixtures)
                CHECK_MESSAGE(in_gen(t, x.module) == (hom_dim(x.module, tu) == 0), f.name << " " << x.name);
        }
    }
}

TEST_CASE("Bongartz summands and their partners") {
    const auto& e1 = example(1);
    auto r = complement_correspondence(enumeration(1).registry, e1["S1"]);
    REQUIRE(r.size() == 1);
    CHECK(is_iso(r[0].b, e1["P1"]));
    CHECK(r[0].partner.shifted == 1);
    r = complement_correspondence(enumeration(1).registry, e1["P1"]);
    REQUIRE(r.size() == 1);
    CHECK(is_iso(r[0].b, e1["P2"]));
    CHECK(is_iso(r[0].partner, mod(1, "S1")));
    CHECK(complement_correspondence(enumeration(1).registry, regular_module(e1.algebra)).empty());

    for (int n = 1; n <= 3; ++n) {
        const auto& ex = example(n);
        for (const auto& u : ex.fixtures) {
            if (!is_tau_rigid(u.module)) continue;
            const auto recs = complement_correspondence(enumeration(n).registry, u.module);
            const auto tu = tau(u.module);
            for (const auto& rec : recs) {
                CHECK(rec.to_u.is_homomorphism());
                if (!rec.partner.is_shifted()) {
                    // B_i -> U'_i -> C_i -> 0
                    CHECK(is_iso(cokernel(rec.to_u).target, rec.partner.module));
                    // every map to Gen U factors through B_i -> U'_i
                    for (const auto& v : ex.fixtures) {
                        if (!in_gen(u.module, v.module)) continue;
                        const auto h = hom_basis(rec.to_u.target, v.module);
                        std::vector<Mat> through;
                        for (const auto& g : h.basis) through.push_back(g * rec.to_u.matrix);
                        const auto hb = hom_basis(rec.b, v.module);
                        std::vector<Vec> coords;
                        for (const auto& m : through) coords.push_back(hb.coords(m));
                        CHECK(rank(ex.algebra->field(), from_columns(ex.algebra->field(), hb.dim(), coords)) == hb.dim());
                    }
                } else {
                    // Q_i -> B_i -> U'_i -> 0
                    REQUIRE(rec.from_q);
                    CHECK(rec.to_u.is_surjective());
                    CHECK(is_iso(rec.from_q->target, rec.b));
                    CHECK(rank(ex.algebra->field(), rec.from_q->matrix) == rec.b.dim() - rec.to_u.target.dim());
                    CHECK(is_zero(Mat(rec.to_u.matrix * rec.from_q->matrix)));
                }
                // split projective in ⊥τU: surjections from indecomposables in ⊥τU onto B_i are isomorphisms
                for (const auto& y : ex.fixtures) {
                    if (hom_dim(y.module, tu) != 0 || y.module.dim() < rec.b.dim()) continue;
                    const Mat g = testing::generic_map(y.module, rec.b);
                    if (rank(ex.algebra->field(), g) == rec.b.dim()) CHECK(is_iso(y.module, rec.b));
                }
            }
        }
    }
}

TEST_CASE("kernels of approximations lie in the left perpendicular of τU") {
    for (int n = 1; n <= 3; ++n) {
        const auto& ex = example(n);
        for (const auto& u : ex.fixtures) {
            if (!is_tau_rigid(u.module)) continue;
            const auto tu = tau(u.module);
            for (const auto& x : ex.fixtures) {
                const auto alpha = min_right_approx(u.module, x.module);
                CHECK(hom_dim(kernel(alpha.map).source, tu) == 0);
            }
        }
    }
}
