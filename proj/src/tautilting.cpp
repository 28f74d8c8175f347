#include "tauseq/tautilting.hpp"

#include "tauseq/error.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace tauseq {

SignedObject SignedObject::of(FdModule m) {
    if (m.is_zero()) throw DomainError("a signed object needs a nonzero module");
    return {std::move(m), -1};
}

SignedObject SignedObject::shift(const AlgebraPtr& a, int v) {
    if (v < 0 || v >= a->num_vertices()) throw DomainError("no such vertex");
    return {FdModule::zero(a), v};
}

bool is_iso(const SignedObject& x, const SignedObject& y) {
    if (x.is_shifted() || y.is_shifted()) return x.shifted == y.shifted;
    return x.module.dim_vector() == y.module.dim_vector() && is_iso_indecomposable(x.module, y.module);
}

TwoTermComplex lift(const SignedObject& x) {
    if (x.is_shifted()) return shifted(x.algebra(), {x.shifted});
    return min_presentation(x.module).complex;
}

SignedObject from_complex(const TwoTermComplex& y) {
    auto m = h0(y);
    if (!m.is_zero()) return SignedObject::of(std::move(m));
    if (y.zero.empty() && y.minus1.size() == 1) return SignedObject::shift(y.algebra, y.minus1.front());
    throw DomainError("complex is not indecomposable presilting");
}

bool is_tau_rigid(const FdModule& m) { return hom_dim(m, tau(m)) == 0; }

bool is_tau_rigid(const SignedObject& x) { return x.is_shifted() || is_tau_rigid(x.module); }

bool compatible(const SignedObject& x, const SignedObject& y) {
    if (x.is_shifted() && y.is_shifted()) return true;
    if (x.is_shifted()) return y.module.vertex_dim(x.shifted) == 0;
    if (y.is_shifted()) return x.module.vertex_dim(y.shifted) == 0;
    return hom_dim(x.module, tau(y.module)) == 0 && hom_dim(y.module, tau(x.module)) == 0;
}

bool is_support_tau_rigid(const std::vector<SignedObject>& t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!is_tau_rigid(t[i])) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (is_iso(t[i], t[j]) || !compatible(t[i], t[j])) return false;
    }
    return true;
}

bool is_support_tau_tilting(const std::vector<SignedObject>& t) {
    if (t.empty()) return false;
    return static_cast<int>(t.size()) == t.front().algebra()->num_vertices() && is_support_tau_rigid(t);
}

namespace {

bool is_partner(const std::optional<TwoTermComplex>& y, const TwoTermComplex& x) {
    return y && !y->is_zero() && is_indecomposable_K(*y) && !is_iso_K(*y, x);
}

TwoTermComplex exchange_complex(const std::vector<TwoTermComplex>& us, const TwoTermComplex& x) {
    auto y = try_cone_shift(min_right_approx_K(us, x).map);
    if (!is_partner(y, x)) y = try_cone(min_left_approx_K(x, us).map);
    if (!is_partner(y, x)) throw DomainError("no exchange partner: the object is not support τ-tilting");
    for (const auto& u : us)
        if (is_iso_K(u, *y)) throw DomainError("exchange produced a summand of the remaining object");
    return *y;
}

}  // namespace

SignedObject exchange_partner(const std::vector<SignedObject>& t, std::size_t k) {
    if (k >= t.size()) throw DomainError("summand index out of range");
    if (!is_support_tau_tilting(t)) throw DomainError("mutation needs a support τ-tilting object");
    std::vector<TwoTermComplex> us;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (i != k) us.push_back(lift(t[i]));
    return from_complex(exchange_complex(us, lift(t[k])));
}

std::vector<SignedObject> mutate(const std::vector<SignedObject>& t, std::size_t k) {
    auto out = t;
    out[k] = exchange_partner(t, k);
    return out;
}

std::optional<int> Registry::find(const SignedObject& x) const {
    for (std::size_t i = 0; i < items_.size(); ++i)
        if (is_iso(items_[i].object, x)) return static_cast<int>(i);
    return std::nullopt;
}

int Registry::insert(const SignedObject& x) {
    if (auto id = find(x)) return *id;
    items_.push_back({x, lift(x), x.is_shifted() ? x.module : tau(x.module)});
    for (auto& row : compat_) row.push_back(-1);
    compat_.emplace_back(items_.size(), -1);
    return size() - 1;
}

bool Registry::compatible(int i, int j) const {
    auto& c = compat_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    if (c < 0) {
        const auto& x = items_[static_cast<std::size_t>(i)];
        const auto& y = items_[static_cast<std::size_t>(j)];
        bool ok = true;
        if (i == j || (x.object.is_shifted() && y.object.is_shifted()))
            ok = true;
        else if (x.object.is_shifted())
            ok = y.object.module.vertex_dim(x.object.shifted) == 0;
        else if (y.object.is_shifted())
            ok = x.object.module.vertex_dim(y.object.shifted) == 0;
        else
            ok = hom_dim(x.object.module, y.tau) == 0 && hom_dim(y.object.module, x.tau) == 0;
        c = ok ? 1 : 0;
        compat_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = c;
    }
    return c == 1;
}

std::vector<SignedObject> Registry::objects(const std::vector<int>& ids) const {
    std::vector<SignedObject> out;
    for (int id : ids) out.push_back((*this)[id]);
    return out;
}

Enumeration enumerate_support_tau_tilting(const AlgebraPtr& a, std::size_t cap) {
    if (cap == 0) throw DomainError("cap must be positive");
    Enumeration e{Registry(a), {}, {}};
    std::vector<int> start;
    for (int v = 0; v < a->num_vertices(); ++v) start.push_back(e.registry.insert(SignedObject::of(projective_module(a, v))));
    std::sort(start.begin(), start.end());

    std::map<std::vector<int>, int> index;
    auto visit = [&](std::vector<int> ids) {
        std::sort(ids.begin(), ids.end());
        auto [it, fresh] = index.try_emplace(ids, static_cast<int>(e.objects.size()));
        if (fresh) {
            if (e.objects.size() >= cap) throw CapExceeded("more support τ-tilting objects than the cap allows");
            e.objects.push_back(ids);
            e.neighbors.emplace_back();
        }
        return it->second;
    };
    visit(start);
    for (std::size_t i = 0; i < e.objects.size(); ++i) {
        const auto ids = e.objects[i];
        std::vector<int> nbrs;
        for (std::size_t k = 0; k < ids.size(); ++k) {
            std::vector<TwoTermComplex> us;
            for (std::size_t j = 0; j < ids.size(); ++j)
                if (j != k) us.push_back(e.registry.complex(ids[j]));
            const auto y = from_complex(exchange_complex(us, e.registry.complex(ids[k])));
            auto next = ids;
            next[k] = e.registry.insert(y);
            nbrs.push_back(visit(next));
        }
        e.neighbors[i] = nbrs;
    }
    return e;
}

CoBongartz cobongartz(const Registry& r, const FdModule& u) {
    if (!is_tau_rigid(u)) throw DomainError("module is not τ-rigid");
    const auto us = basic_summands(u);
    const auto tu = tau(u);
    CoBongartz out;
    for (int id = 0; id < r.size(); ++id) {
        const auto& x = r[id];
        if (x.is_shifted()) continue;
        const auto& m = x.module;
        if (std::any_of(us.begin(), us.end(), [&](const FdModule& s) { return is_iso(SignedObject::of(s), x); }))
            continue;
        if (in_gen(u, m) && hom_dim(m, tu) == 0 && hom_dim(u, tau(m)) == 0) out.c.push_back(m);
    }
    for (int v = 0; v < u.algebra()->num_vertices(); ++v)
        if (u.vertex_dim(v) == 0) out.q.push_back(v);
    return out;
}

std::vector<Correspondence> complement_correspondence(const Registry& r, const FdModule& u) {
    const auto& a = u.algebra();
    const auto cb = cobongartz(r, u);
    std::vector<TwoTermComplex> ps;
    for (const auto& s : basic_summands(u)) ps.push_back(lift(SignedObject::of(s)));
    std::vector<SignedObject> partners;
    for (const auto& c : cb.c) partners.push_back(SignedObject::of(c));
    for (int v : cb.q) partners.push_back(SignedObject::shift(a, v));

    std::vector<Correspondence> out;
    for (const auto& z : partners) {
        const auto y = cone_shift(min_right_approx_K(ps, lift(z)).map);
        auto b = h0(y);
        if (b.is_zero() || !is_local_endo(b)) throw DomainError("Bongartz summand is not indecomposable");
        auto to_u = u.is_zero() ? ModuleMap{b, u, zeros(b.field(), 0, b.dim())} : min_left_approx(b, u).map;
        out.push_back({std::move(b), z, std::move(to_u), std::nullopt});
    }
    std::vector<FdModule> bs;
    for (const auto& c : out) bs.push_back(c.b);
    if (bs.empty()) return out;
    const auto sum = direct_sum(a, bs).sum;
    for (auto& c : out)
        if (c.partner.is_shifted()) c.from_q = min_left_approx(projective_module(a, c.partner.shifted), sum).map;
    return out;
}

std::vector<FdModule> bongartz(const Registry& r, const FdModule& u) {
    std::vector<FdModule> out;
    for (auto& c : complement_correspondence(r, u)) out.push_back(std::move(c.b));
    return out;
}

}  // namespace tauseq
