#include "support.hpp"

#include "tauseq/error.hpp"

#include <doctest.h>

using namespace tauseq;
using testing::example;

TEST_CASE("fixtures parse into valid modules") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& f : example(n).fixtures) {
            CHECK(f.module.dim() > 0);
            CHECK(is_local_endo(f.module));
        }
    const auto& ex = example(3);
    CHECK(ex["N"].dim_vector() == std::vector<Eigen::Index>{1, 2, 1});
    // the representation must satisfy the relation
    CHECK_THROWS_AS(parse_fixtures("module X\ndims 1 1 1\narrow alpha = [[1]]\narrow beta = [[1]]\n", ex.quiver,
                                   ex.algebra),
                    DomainError);
    CHECK_THROWS_AS(parse_fixtures("module X\ndims 1 1 1\narrow alpha = [[1,2]]\n", ex.quiver, ex.algebra),
                    DomainError);
    CHECK_THROWS_AS(parse_fixtures("module X\ndims 1 1\n", ex.quiver, ex.algebra), ParseError);
    CHECK_THROWS_AS(parse_fixtures("module X\ndims 1 0 0\narrow delta = [[1]]\n", ex.quiver, ex.algebra), ParseError);
}

TEST_CASE("projective, simple and injective modules") {
    const auto& e1 = example(1);
    CHECK(projective_module(e1.algebra, 0).dim_vector() == std::vector<Eigen::Index>{1, 1});
    CHECK(projective_module(e1.algebra, 1).dim_vector() == std::vector<Eigen::Index>{0, 1});
    CHECK(is_iso(projective_module(e1.algebra, 0), e1["P1"]));
    CHECK(is_iso(simple_module(e1.algebra, 0), e1["S1"]));
    CHECK(is_iso(injective_module(e1.algebra, 1), e1["P1"]));
    CHECK(is_iso(injective_module(e1.algebra, 0), e1["S1"]));

    const auto& e2 = example(2);
    CHECK(projective_module(e2.algebra, 0).dim() == 2);
    CHECK(projective_module(e2.algebra, 1).dim() == 3);
    CHECK(is_iso(projective_module(e2.algebra, 1), e2["P2"]));
    CHECK(is_iso(injective_module(e2.algebra, 0), e2["I1"]));

    const auto& e3 = example(3);
    CHECK(is_iso(injective_module(e3.algebra, 1), e3["I2"]));
    CHECK(is_iso(injective_module(e3.algebra, 2), e3["I3"]));
    CHECK(is_iso(projective_module(e3.algebra, 0), e3["P1"]));

    auto [q, a] = parse_algebra("vertex x\n");
    const auto p = projective_module(a, 0);
    CHECK(p.dim() == 1);
    CHECK(is_iso(p, simple_module(a, 0)));
    CHECK(is_iso(p, regular_module(a)));
}

TEST_CASE("hom dimensions agree with vertex dimensions of the target") {
    // Hom(P_v, X) = e_v X
    for (int n = 1; n <= 3; ++n) {
        const auto& ex = example(n);
        for (int v = 0; v < ex.algebra->num_vertices(); ++v)
            for (const auto& f : ex.fixtures)
                CHECK(hom_dim(projective_module(ex.algebra, v), f.module) == f.module.vertex_dim(v));
    }
    const auto& e1 = example(1);
    CHECK(hom_dim(e1["P2"], e1["P1"]) == 1);
    CHECK(hom_dim(e1["P1"], e1["P2"]) == 0);
    const auto h = hom_basis(e1["P1"], e1["S1"]);
    REQUIRE(h.dim() == 1);
    CHECK(h.map(0).is_homomorphism());
}

TEST_CASE("locality and decomposition") {
    const auto& e1 = example(1);
    const auto pp = direct_sum(e1.algebra, {e1["P1"], e1["P1"]}).sum;
    CHECK_FALSE(is_local_endo(pp));
    auto d = decompose(pp);
    REQUIRE(d.size() == 1);
    CHECK(d[0].multiplicity == 2);
    CHECK(is_iso(d[0].module, e1["P1"]));

    auto reg = decompose(regular_module(e1.algebra));
    CHECK(reg.size() == 2);
    const auto& e3 = example(3);
    auto reg3 = decompose(regular_module(e3.algebra));
    REQUIRE(reg3.size() == 3);
    for (const auto& s : reg3) CHECK(s.multiplicity == 1);

    // A sum of all fixtures decomposes back into them.
    std::vector<FdModule> parts;
    for (const auto& f : e3.fixtures) parts.push_back(f.module);
    parts.push_back(e3["N"]);
    const auto big = direct_sum(e3.algebra, parts).sum;
    const auto dec = decompose(big);
    CHECK(dec.size() == e3.fixtures.size());
    Eigen::Index total = 0;
    for (const auto& s : dec) {
        total += s.module.dim() * s.multiplicity;
        CHECK(is_local_endo(s.module));
    }
    CHECK(total == big.dim());
    CHECK(is_iso(big, big));
    CHECK_FALSE(is_iso(big, direct_sum(e3.algebra, {big, e3["S1"]}).sum));
}

TEST_CASE("isomorphism classes of the fixtures are distinct") {
    for (int n = 1; n <= 3; ++n) {
        const auto& fx = example(n).fixtures;
        for (std::size_t i = 0; i < fx.size(); ++i)
            for (std::size_t j = 0; j < fx.size(); ++j)
                CHECK(is_iso_indecomposable(fx[i].module, fx[j].module) == (i == j));
    }
}

TEST_CASE("trace and torsion-free parts") {
    const auto& e1 = example(1);
    CHECK(trace_submodule(e1["P1"], e1["S1"]).source.dim() == 1);
    CHECK(trace_submodule(e1["P1"], e1["P2"]).source.dim() == 0);
    CHECK(torsion_free_quotient(e1["P1"], e1["P2"]).target.dim() == 1);
    CHECK(torsion_free_quotient(e1["P1"], e1["S1"]).target.is_zero());

    for (int n = 1; n <= 3; ++n) {
        const auto& fx = example(n).fixtures;
        for (const auto& u : fx)
            for (const auto& x : fx) {
                const auto t = trace_submodule(u.module, x.module);
                const auto f = torsion_free_quotient(u.module, x.module);
                CHECK(t.source.dim() + f.target.dim() == x.module.dim());
                CHECK(trace_submodule(u.module, t.source).source.dim() == t.source.dim());
                CHECK(t.is_homomorphism());
                CHECK(f.is_homomorphism());
            }
    }
}

TEST_CASE("minimal approximations") {
    const auto& e3 = example(3);
    auto r = min_right_approx(e3["P1"], e3["M"]);
    CHECK(r.map.source.dim() == 3);
    CHECK(r.map.is_surjective());
    CHECK(r.map.is_homomorphism());

    const auto& e1 = example(1);
    auto z = min_right_approx(e1["P1"], e1["P2"]);
    CHECK(z.map.source.is_zero());
    auto l = min_left_approx(e1["P2"], e1["P1"]);
    CHECK(l.map.target.dim() == 2);
    CHECK(l.map.is_injective());

    // Every map from a summand of U factors through the right approximation,
    // and every map to one through the left approximation.
    for (int n = 1; n <= 3; ++n) {
        const auto& fx = example(n).fixtures;
        for (const auto& u : fx)
            for (const auto& x : fx) {
                const auto ra = min_right_approx(u.module, x.module);
                CHECK(ra.map.is_homomorphism());
                const auto lift = hom_basis(u.module, ra.map.source);
                Mat img = zeros(x.module.field(), x.module.dim() * u.module.dim(), 0);
                for (const auto& g : lift.basis) img = hcat(x.module.field(), img, Mat(flatten(Mat(ra.map.matrix * g))));
                CHECK(rank(x.module.field(), img) == hom_dim(u.module, x.module));

                const auto la = min_left_approx(x.module, u.module);
                CHECK(la.map.is_homomorphism());
                const auto ext = hom_basis(la.map.target, u.module);
                Mat img2 = zeros(x.module.field(), x.module.dim() * u.module.dim(), 0);
                for (const auto& g : ext.basis) img2 = hcat(x.module.field(), img2, Mat(flatten(Mat(g * la.map.matrix))));
                CHECK(rank(x.module.field(), img2) == hom_dim(x.module, u.module));
            }
    }
}

TEST_CASE("characteristic polynomial roots") {
    const PrimeField k(101);
    const Mat m = make_matrix(k, {{2, 0, 0}, {0, 100, 0}, {0, 0, 2}});
    const auto chi = characteristic_polynomial(k, m);
    REQUIRE(chi.size() == 4);
    const auto roots = roots_in_field(k, chi);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == k(-1));
    CHECK(roots[1] == k(2));
    // x^2 + 1 has no roots mod 103 (103 = 3 mod 4)
    const PrimeField k2(103);
    CHECK(roots_in_field(k2, {k2(1), k2(0), k2(1)}).empty());
}
