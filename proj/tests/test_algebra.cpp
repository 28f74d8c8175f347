#include "tauseq/algebra.hpp"
#include "tauseq/error.hpp"

#include <doctest.h>

using namespace tauseq;

namespace {

AlgebraPtr load(const char* name) { return load_algebra(std::string(TAUSEQ_DATA_DIR) + "/" + name).second; }

// dim e_j A e_i summed over all pairs, straight from the multiplication table.
Eigen::Index corner_sum(const StructAlgebra& a) {
    Eigen::Index total = 0;
    for (int i = 0; i < a.num_vertices(); ++i)
        for (int j = 0; j < a.num_vertices(); ++j) total += a.corner(j, i).dim();
    return total;
}

}  // namespace

TEST_CASE("path algebras of the three example quivers") {
    const auto a1 = load("ex1.alg");
    CHECK(a1->dim() == 3);
    CHECK(a1->num_vertices() == 2);
    CHECK(algebra_invariants(*a1) == AlgebraInvariants{2, 3, 1});

    const auto a2 = load("ex2.alg");
    CHECK(a2->dim() == 5);
    CHECK(algebra_invariants(*a2) == AlgebraInvariants{2, 5, 2});

    const auto a3 = load("ex3.alg");
    CHECK(a3->dim() == 6);
    CHECK(algebra_invariants(*a3) == AlgebraInvariants{3, 6, 3});

    for (const auto& a : {a1, a2, a3}) {
        CHECK(corner_sum(*a) == a->dim());
        CHECK(a->radical().dim() == a->dim() - a->num_vertices());
    }
}

TEST_CASE("path basis of the two-cycle algebra") {
    const auto [q, a] = load_algebra(std::string(TAUSEQ_DATA_DIR) + "/ex2.alg");
    const auto paths = q.path_basis();
    REQUIRE(paths.size() == 5);
    // e1, e2, alpha, beta, beta-then-alpha
    CHECK(paths[4].arrows == std::vector<int>{1, 0});
    CHECK(a->label(4) == "alpha*beta");
}

TEST_CASE("single vertex and semisimple algebras") {
    auto [q, a] = parse_algebra("vertex x\n");
    CHECK(a->dim() == 1);
    CHECK(a->num_vertices() == 1);
    auto [q2, b] = parse_algebra("vertex 1\nvertex 2\n");
    CHECK(algebra_invariants(*b) == AlgebraInvariants{2, 2, 0});
}

TEST_CASE("algebra file errors") {
    CHECK_THROWS_AS(parse_algebra("vertex 1\narrow a 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("vertex 1\nbogus\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("field 32004\nvertex 1\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("vertex 1\narrow a 1 1\n"), DomainError);
    CHECK_THROWS_AS(parse_algebra("vertex 1\narrow a 1 1\nrel a\n"), DomainError);
    // loop with a^2 = 0 is fine
    auto [q, a] = parse_algebra("vertex 1\narrow a 1 1\nrel a a\n");
    CHECK(a->dim() == 2);
    CHECK(algebra_invariants(*a).arrows == 1);
    // p must exceed the dimension
    CHECK_THROWS_AS(parse_algebra("field 2\nvertex 1\nvertex 2\narrow a 1 2\n"), DomainError);
}

TEST_CASE("quotients by idempotent ideals") {
    const auto a1 = load("ex1.alg");
    auto [b2, pi2] = quotient_by_idempotent_ideal(a1, 1);
    CHECK(b2->dim() == 1);
    CHECK(pi2.is_homomorphism());
    auto [b1, pi1] = quotient_by_idempotent_ideal(a1, 0);
    CHECK(b1->dim() == 1);
    CHECK(b1->vertex_label(0) == "2");

    const auto a3 = load("ex3.alg");
    auto [c, pi] = quotient_by_idempotent_ideal(a3, 0);
    CHECK(pi.is_homomorphism());
    CHECK(algebra_invariants(*c) == AlgebraInvariants{2, 3, 1});
    CHECK_THROWS_AS(quotient_by_idempotent_ideal(b1, 0), DomainError);
}
