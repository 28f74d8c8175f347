#pragma once

#include "tauseq/fixtures.hpp"
#include "tauseq/tautilting.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tauseq {

/// x lies in J(u): Hom(u, x) = 0 = Hom(x, τu) for a module u, e_v x = 0 for u = P_v[1].
bool j_membership(const SignedObject& u, const FdModule& x);

/// Γ = End(B ⊕ U)^op / [U] for the basic summands `bs` of B, with Γ-modules
/// Hom(B ⊕ U, X) for X in U^⊥. Vertex i of Γ corresponds to bs[i].
class EndoQuotient {
public:
    EndoQuotient(std::vector<FdModule> bs, FdModule u);

    [[nodiscard]] const AlgebraPtr& algebra() const { return gamma_; }
    [[nodiscard]] FdModule transport(const FdModule& x) const;

private:
    struct Element {
        int from;
        int to;
        Mat map;  // bs[to].dim x bs[from].dim
    };
    std::vector<FdModule> bs_;
    FdModule u_;
    std::vector<Element> basis_;
    AlgebraPtr gamma_;
};

class WideContext;

/// A τ-tilting reduction level: an algebra with its named modules and the
/// indecomposable τ-rigid objects over it. Names of modules at deeper levels
/// are inherited from the level above.
class Level {
public:
    Level(AlgebraPtr a, std::vector<NamedModule> catalog, int depth = 0, std::size_t cap = 10000);
    ~Level();
    Level(const Level&) = delete;
    Level& operator=(const Level&) = delete;

    [[nodiscard]] const AlgebraPtr& algebra() const { return alg_; }
    [[nodiscard]] const std::vector<NamedModule>& catalog() const { return catalog_; }
    [[nodiscard]] int depth() const { return depth_; }
    [[nodiscard]] std::size_t cap() const { return cap_; }
    /// All indecomposable τ-rigid objects, computed on first use.
    [[nodiscard]] const Registry& registry() const;

    /// Memoized reduction by an indecomposable τ-rigid object.
    [[nodiscard]] const WideContext& context(const SignedObject& reducer) const;

    [[nodiscard]] std::string name(const FdModule& m) const;
    [[nodiscard]] std::string name(const SignedObject& x) const;
    /// Resolves "NAME", "NAME[1]" (NAME projective) and "dim(a,b,...)" forms.
    [[nodiscard]] SignedObject resolve(const std::string& text) const;

private:
    AlgebraPtr alg_;
    std::vector<NamedModule> catalog_;
    int depth_;
    std::size_t cap_;
    mutable std::optional<Registry> registry_;
    mutable std::vector<std::unique_ptr<WideContext>> contexts_;
};

/// E_U(x): the Λ-side module (tagged when shifted) and the object of J(U) ≃ mod Γ.
struct ReducedObject {
    FdModule lambda;
    bool shifted = false;
    SignedObject gamma;
};

/// J(reducer) ≃ mod Γ, with the reduction map E on compatible objects.
class WideContext {
public:
    WideContext(const Level& parent, SignedObject reducer);

    [[nodiscard]] const Level& parent() const { return *parent_; }
    [[nodiscard]] const SignedObject& reducer() const { return reducer_; }
    [[nodiscard]] const AlgebraPtr& gamma() const { return child_->algebra(); }
    [[nodiscard]] const Level& child() const { return *child_; }
    /// Basic summands of the Bongartz complement (module reducers only).
    [[nodiscard]] const std::vector<FdModule>& bongartz() const { return bongartz_; }

    [[nodiscard]] bool contains(const FdModule& x) const { return j_membership(reducer_, x); }
    [[nodiscard]] FdModule transport(const FdModule& x) const;
    /// Γ-vertex of the projective transport(m), if it is one.
    [[nodiscard]] std::optional<int> projective_vertex(const FdModule& m) const;

    /// Compatible with the reducer, indecomposable, not the reducer itself.
    [[nodiscard]] bool compatible_with_reducer(const SignedObject& x) const;
    [[nodiscard]] ReducedObject e_map(const SignedObject& x) const;
    /// The parent object mapped to the Γ-object y.
    [[nodiscard]] SignedObject e_inverse(const SignedObject& y) const;

    /// E on the parent registry: child registry id for each parent id (or -1).
    [[nodiscard]] const std::vector<int>& images() const;

private:
    const Level* parent_;
    SignedObject reducer_;
    std::vector<FdModule> bongartz_;
    std::optional<EndoQuotient> endo_;
    std::vector<Vec> lifts_;  // shifted reducer: an A-preimage of each Γ basis element
    std::unique_ptr<Level> child_;
    mutable std::optional<std::vector<int>> images_;
};

}  // namespace tauseq
