#pragma once

#include "tauseq/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tauseq {

/// Finite-dimensional left module: one action matrix per algebra basis element.
class FdModule {
public:
    FdModule() = default;
    /// Checks that the action is unital and multiplicative unless `validate` is off.
    FdModule(AlgebraPtr a, std::vector<Mat> action, bool validate = true);

    static FdModule zero(const AlgebraPtr& a);

    [[nodiscard]] const AlgebraPtr& algebra() const { return alg_; }
    [[nodiscard]] const PrimeField& field() const { return alg_->field(); }
    [[nodiscard]] Eigen::Index dim() const { return dim_; }
    [[nodiscard]] bool is_zero() const { return dim_ == 0; }
    [[nodiscard]] const Mat& action(Eigen::Index i) const { return action_[static_cast<std::size_t>(i)]; }
    /// Action of an arbitrary algebra element.
    [[nodiscard]] Mat act(const Vec& x) const;
    [[nodiscard]] std::vector<Eigen::Index> dim_vector() const;
    [[nodiscard]] Eigen::Index vertex_dim(int v) const;

private:
    AlgebraPtr alg_;
    Eigen::Index dim_ = 0;
    std::vector<Mat> action_;
};

struct ModuleMap {
    FdModule source;
    FdModule target;
    Mat matrix;  // target.dim x source.dim

    [[nodiscard]] bool is_homomorphism() const;
    [[nodiscard]] bool is_injective() const;
    [[nodiscard]] bool is_surjective() const;
};

/// g after f.
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);

struct HomSpace {
    FdModule source;
    FdModule target;
    std::vector<Mat> basis;
    Subspace span;  // flattened basis matrices

    [[nodiscard]] Eigen::Index dim() const { return static_cast<Eigen::Index>(basis.size()); }
    [[nodiscard]] ModuleMap map(std::size_t i) const { return {source, target, basis[i]}; }
    /// Coordinates of an intertwiner in the basis.
    [[nodiscard]] Vec coords(const Mat& f) const;
    [[nodiscard]] Mat combination(const Vec& c) const;
};

HomSpace hom_basis(const FdModule& m, const FdModule& n);
Eigen::Index hom_dim(const FdModule& m, const FdModule& n);

FdModule regular_module(const AlgebraPtr& a);
FdModule projective_module(const AlgebraPtr& a, int v);
FdModule simple_module(const AlgebraPtr& a, int v);
/// D(e_v A), the dual of a right module, with the transpose action.
FdModule injective_module(const AlgebraPtr& a, int v);

struct DirectSum {
    FdModule sum;
    std::vector<Mat> inclusions;
    std::vector<Mat> projections;
};
DirectSum direct_sum(const AlgebraPtr& a, const std::vector<FdModule>& parts);

/// Submodule spanned by a subspace (must be invariant); returns the inclusion.
ModuleMap submodule(const FdModule& m, const Subspace& w);
/// Quotient by an invariant subspace; returns the projection.
ModuleMap quotient(const FdModule& m, const Subspace& w);
/// Smallest submodule containing the given vectors.
Subspace generated_submodule(const FdModule& m, const Mat& vectors);

ModuleMap kernel(const ModuleMap& f);
ModuleMap image(const ModuleMap& f);
ModuleMap cokernel(const ModuleMap& f);

Subspace radical_subspace(const FdModule& m);
/// The projection M -> M / rad M.
ModuleMap top(const FdModule& m);

/// End(M) with its Jacobson radical, in coordinates of the Hom basis.
struct Endomorphisms {
    HomSpace end;
    Subspace radical;
};
Endomorphisms endomorphisms(const FdModule& m);

bool is_local_endo(const FdModule& m);
/// Whether the algebra of square matrices spanned by `spanning` (closed under
/// products, containing the identity) is local.
bool is_local_span(const PrimeField& k, const std::vector<Mat>& spanning);
/// Indecomposable summands, repeated by multiplicity, in the order found.
std::vector<FdModule> indecomposable_summands(const FdModule& m);

struct Summand {
    FdModule module;
    int multiplicity;
};
/// Indecomposable summands grouped by isomorphism class.
std::vector<Summand> decompose(const FdModule& m);

/// Isomorphism test for modules known to be indecomposable.
bool is_iso_indecomposable(const FdModule& m, const FdModule& n);
bool is_iso(const FdModule& m, const FdModule& n);

/// t_U(X) with its inclusion into X.
ModuleMap trace_submodule(const FdModule& u, const FdModule& x);
/// f_U(X) = X / t_U(X) with the projection from X.
ModuleMap torsion_free_quotient(const FdModule& u, const FdModule& x);
bool in_gen(const FdModule& u, const FdModule& x);

/// A minimal add(U)-approximation; `kinds[c]` is the index (into the basic
/// summand list of U) of the c-th copy in the approximating module.
struct Approximation {
    ModuleMap map;
    std::vector<int> kinds;
};
/// Pairwise non-isomorphic indecomposable summands of U.
std::vector<FdModule> basic_summands(const FdModule& u);
Approximation min_right_approx(const FdModule& u, const FdModule& x);
Approximation min_left_approx(const FdModule& x, const FdModule& u);

/// Characteristic polynomial, lowest degree first, monic.
std::vector<Fp> characteristic_polynomial(const PrimeField& k, const Mat& m);
/// Distinct roots in F_p, in the order 0, 1, -1, 2, -2, ...
std::vector<Fp> roots_in_field(const PrimeField& k, const std::vector<Fp>& poly);

}  // namespace tauseq
