#pragma once

#include "tauseq/twoterm.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tauseq {

/// An indecomposable object of mod A ⊔ mod A[1]: a module, or (A e_v)[1].
struct SignedObject {
    FdModule module;  // zero module for a shifted projective
    int shifted = -1;

    static SignedObject of(FdModule m);
    static SignedObject shift(const AlgebraPtr& a, int v);

    [[nodiscard]] bool is_shifted() const { return shifted >= 0; }
    [[nodiscard]] const AlgebraPtr& algebra() const { return module.algebra(); }
};

bool is_iso(const SignedObject& x, const SignedObject& y);

/// The two-term complex of x: the minimal presentation, or the stalk P_v[1].
TwoTermComplex lift(const SignedObject& x);
/// Inverse of lift on reduced indecomposable presilting complexes.
SignedObject from_complex(const TwoTermComplex& y);

bool is_tau_rigid(const FdModule& m);
bool is_tau_rigid(const SignedObject& x);
/// Pairwise condition for two τ-rigid indecomposables.
bool compatible(const SignedObject& x, const SignedObject& y);
/// Basic, each summand τ-rigid, and pairwise compatible.
bool is_support_tau_rigid(const std::vector<SignedObject>& t);
bool is_support_tau_tilting(const std::vector<SignedObject>& t);

/// Replace t[k] by the other completion of the remaining summands.
SignedObject exchange_partner(const std::vector<SignedObject>& t, std::size_t k);
std::vector<SignedObject> mutate(const std::vector<SignedObject>& t, std::size_t k);

/// Indecomposable τ-rigid objects up to isomorphism, with ids in first-seen order.
class Registry {
public:
    Registry() = default;
    explicit Registry(AlgebraPtr a) : alg_(std::move(a)) {}

    [[nodiscard]] const AlgebraPtr& algebra() const { return alg_; }
    [[nodiscard]] int size() const { return static_cast<int>(items_.size()); }
    [[nodiscard]] const SignedObject& operator[](int id) const { return items_[static_cast<std::size_t>(id)].object; }
    [[nodiscard]] const TwoTermComplex& complex(int id) const { return items_[static_cast<std::size_t>(id)].complex; }

    [[nodiscard]] std::optional<int> find(const SignedObject& x) const;
    int insert(const SignedObject& x);
    /// Memoized compatibility of two entries.
    [[nodiscard]] bool compatible(int i, int j) const;
    [[nodiscard]] std::vector<SignedObject> objects(const std::vector<int>& ids) const;

private:
    struct Item {
        SignedObject object;
        TwoTermComplex complex;
        FdModule tau;
    };
    AlgebraPtr alg_;
    std::vector<Item> items_;
    mutable std::vector<std::vector<signed char>> compat_;
};

/// Support τ-tilting objects reachable from A by mutation.
struct Enumeration {
    Registry registry;
    std::vector<std::vector<int>> objects;    // sorted registry ids, in discovery order
    std::vector<std::vector<int>> neighbors;  // neighbors[i][j]: objects[i] mutated at its j-th id
};
Enumeration enumerate_support_tau_tilting(const AlgebraPtr& a, std::size_t cap = 10000);

/// The co-Bongartz completion C ⊕ U ⊕ Q[1] of a τ-rigid U.
struct CoBongartz {
    std::vector<FdModule> c;  // basic
    std::vector<int> q;
};
CoBongartz cobongartz(const Registry& r, const FdModule& u);

/// Summands of the Bongartz complement, each paired with the summand of
/// the co-Bongartz part it comes from.
struct Correspondence {
    FdModule b;
    SignedObject partner;
    /// Minimal left add U-approximation of b; its cokernel is the partner in
    /// the module case and it is onto in the shifted case.
    ModuleMap to_u;
    /// Shifted case only: minimal left add B-approximation of the partner's projective.
    std::optional<ModuleMap> from_q;
};
std::vector<Correspondence> complement_correspondence(const Registry& r, const FdModule& u);
/// Basic Bongartz complement, as its indecomposable summands.
std::vector<FdModule> bongartz(const Registry& r, const FdModule& u);

}  // namespace tauseq
