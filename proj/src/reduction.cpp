#include "tauseq/reduction.hpp"

#include "tauseq/error.hpp"

#include <algorithm>
#include <sstream>

namespace tauseq {

bool j_membership(const SignedObject& u, const FdModule& x) {
    if (x.is_zero()) return true;
    if (u.is_shifted()) return x.vertex_dim(u.shifted) == 0;
    return hom_dim(u.module, x) == 0 && hom_dim(x, tau(u.module)) == 0;
}

EndoQuotient::EndoQuotient(std::vector<FdModule> bs, FdModule u) : bs_(std::move(bs)), u_(std::move(u)) {
    const auto& k = u_.field();
    const auto m = bs_.size();
    std::vector<HomSpace> into_u, from_u;
    for (const auto& b : bs_) {
        into_u.push_back(hom_basis(b, u_));
        from_u.push_back(hom_basis(u_, b));
    }
    std::vector<std::vector<HomSpace>> h(m);
    std::vector<std::vector<Mat>> quot(m);
    std::vector<std::vector<Eigen::Index>> offset(m, std::vector<Eigen::Index>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            h[i].push_back(hom_basis(bs_[i], bs_[j]));
            const auto& hij = h[i].back();
            // maps b_i -> b_j factoring through add U
            std::vector<Vec> gens;
            for (const auto& a : into_u[i].basis)
                for (const auto& g : from_u[j].basis) gens.push_back(hij.coords(Mat(g * a)));
            const Subspace ideal(k, hij.dim(), from_columns(k, hij.dim(), gens));
            quot[i].push_back(ideal.quotient_map());
            offset[i][j] = static_cast<Eigen::Index>(basis_.size());
            for (auto r : ideal.complement_rows())
                basis_.push_back({static_cast<int>(i), static_cast<int>(j), hij.basis[static_cast<std::size_t>(r)]});
        }

    const auto d = static_cast<Eigen::Index>(basis_.size());
    auto element = [&](std::size_t i, std::size_t j, const Mat& f) {
        Vec out = zero_vector(k, d);
        const Vec q = quot[i][j] * h[i][j].coords(f);
        out.segment(offset[i][j], q.size()) = q;
        return out;
    };
    // Γ is the opposite ring: a * b is "a, then b".
    std::vector<Vec> products;
    for (const auto& a : basis_)
        for (const auto& b : basis_) {
            if (a.to != b.from) {
                products.push_back(zero_vector(k, d));
                continue;
            }
            products.push_back(element(static_cast<std::size_t>(a.from), static_cast<std::size_t>(b.to), Mat(b.map * a.map)));
        }
    std::vector<Vec> idempotents;
    std::vector<std::string> labels, vertex_labels;
    for (std::size_t i = 0; i < m; ++i) {
        idempotents.push_back(element(i, i, identity(k, bs_[i].dim())));
        vertex_labels.push_back(std::to_string(i + 1));
    }
    for (const auto& e : basis_)
        labels.push_back("g" + std::to_string(e.from + 1) + std::to_string(e.to + 1) + "_" + std::to_string(labels.size()));
    gamma_ = algebra_from_products(k, std::move(labels), products, std::move(idempotents), std::move(vertex_labels));
}

FdModule EndoQuotient::transport(const FdModule& x) const {
    if (hom_dim(u_, x) != 0) throw DomainError("module is not in the perpendicular category of the reducer");
    const auto& k = x.field();
    std::vector<HomSpace> hx;
    std::vector<Eigen::Index> offset;
    Eigen::Index dim = 0;
    for (const auto& b : bs_) {
        offset.push_back(dim);
        hx.push_back(hom_basis(b, x));
        dim += hx.back().dim();
    }
    std::vector<Mat> action;
    for (const auto& g : basis_) {
        // φ in Hom(b_to, x) goes to φ ∘ g in Hom(b_from, x)
        Mat a = zeros(k, dim, dim);
        const auto& src = hx[static_cast<std::size_t>(g.to)];
        const auto& dst = hx[static_cast<std::size_t>(g.from)];
        for (std::size_t c = 0; c < src.basis.size(); ++c) {
            const Vec v = dst.coords(Mat(src.basis[c] * g.map));
            a.block(offset[static_cast<std::size_t>(g.from)], offset[static_cast<std::size_t>(g.to)] + static_cast<Eigen::Index>(c),
                    v.size(), 1) = v;
        }
        action.push_back(std::move(a));
    }
    return {gamma_, std::move(action)};
}

Level::Level(AlgebraPtr a, std::vector<NamedModule> catalog, int depth, std::size_t cap)
    : alg_(std::move(a)), catalog_(std::move(catalog)), depth_(depth), cap_(cap) {}

Level::~Level() = default;

const Registry& Level::registry() const {
    if (!registry_) registry_ = enumerate_support_tau_tilting(alg_, cap_).registry;
    return *registry_;
}

const WideContext& Level::context(const SignedObject& reducer) const {
    for (const auto& c : contexts_)
        if (is_iso(c->reducer(), reducer)) return *c;
    contexts_.push_back(std::make_unique<WideContext>(*this, reducer));
    return *contexts_.back();
}

std::string Level::name(const FdModule& m) const {
    for (const auto& c : catalog_)
        if (c.module.dim_vector() == m.dim_vector() && is_iso(c.module, m)) return c.name;
    std::string s = "dim(";
    const auto dv = m.dim_vector();
    for (std::size_t i = 0; i < dv.size(); ++i) s += (i ? "," : "") + std::to_string(dv[i]);
    return s + ")";
}

std::string Level::name(const SignedObject& x) const {
    if (x.is_shifted()) return name(projective_module(alg_, x.shifted)) + "[1]";
    return name(x.module);
}

SignedObject Level::resolve(const std::string& text) const {
    std::string base = text;
    base.erase(0, base.find_first_not_of(" \t"));
    base.erase(base.find_last_not_of(" \t") + 1);
    const bool shifted = base.size() > 3 && base.ends_with("[1]");
    if (shifted) base.resize(base.size() - 3);
    if (base.empty()) throw ParseError("empty object name");

    std::optional<FdModule> m;
    if (base.starts_with("dim(")) {
        if (!base.ends_with(")")) throw ParseError("bad dimension literal '" + base + "'");
        std::vector<Eigen::Index> dims;
        std::stringstream in(base.substr(4, base.size() - 5));
        for (std::string tok; std::getline(in, tok, ',');) {
            try {
                std::size_t used = 0;
                dims.push_back(std::stoll(tok, &used));
                if (used != tok.size()) throw ParseError("bad dimension literal '" + base + "'");
            } catch (const std::logic_error&) {
                throw ParseError("bad dimension literal '" + base + "'");
            }
        }
        const auto& r = registry();
        for (int id = 0; id < r.size(); ++id) {
            if (r[id].is_shifted() || r[id].module.dim_vector() != dims) continue;
            if (m) throw DomainError("dimension vector '" + base + "' does not determine a τ-rigid module");
            m = r[id].module;
        }
        if (!m) throw DomainError("no τ-rigid module with dimension vector '" + base + "'");
    } else {
        for (const auto& c : catalog_)
            if (c.name == base) m = c.module;
        if (!m) throw DomainError("unknown module '" + base + "'");
    }
    if (shifted) {
        for (int v = 0; v < alg_->num_vertices(); ++v)
            if (is_iso(*m, projective_module(alg_, v))) return SignedObject::shift(alg_, v);
        throw DomainError(base + " is not projective, so " + base + "[1] is not an object");
    }
    if (m->is_zero() || !is_local_endo(*m)) throw DomainError(base + " is not indecomposable");
    return SignedObject::of(std::move(*m));
}

WideContext::WideContext(const Level& parent, SignedObject reducer) : parent_(&parent), reducer_(std::move(reducer)) {
    const auto& a = parent.algebra();
    if (a->num_vertices() < 2) throw DomainError("reduction of an algebra with one vertex is zero");
    if (!is_tau_rigid(reducer_)) throw DomainError("reducer is not τ-rigid");
    AlgebraPtr gamma;
    if (reducer_.is_shifted()) {
        auto [q, map] = quotient_by_idempotent_ideal(a, reducer_.shifted);
        const auto& k = a->field();
        for (Eigen::Index j = 0; j < q->dim(); ++j) {
            auto l = solve(k, map.matrix, unit_vector(k, q->dim(), j));
            if (!l) throw std::logic_error("quotient map is not onto");
            lifts_.push_back(*l);
        }
        gamma = q;
    } else {
        if (!is_local_endo(reducer_.module)) throw DomainError("reducer is not indecomposable");
        bongartz_ = tauseq::bongartz(parent.registry(), reducer_.module);
        endo_.emplace(bongartz_, reducer_.module);
        gamma = endo_->algebra();
    }
    std::vector<NamedModule> catalog;
    child_ = std::make_unique<Level>(gamma, std::vector<NamedModule>{}, parent.depth() + 1, parent.cap());
    for (const auto& c : parent.catalog())
        if (contains(c.module)) catalog.push_back({c.name, transport(c.module)});
    child_ = std::make_unique<Level>(gamma, std::move(catalog), parent.depth() + 1, parent.cap());
}

FdModule WideContext::transport(const FdModule& x) const {
    if (!contains(x)) throw DomainError("module is not in J of the reducer");
    if (endo_) return endo_->transport(x);
    std::vector<Mat> action;
    for (const auto& l : lifts_) action.push_back(x.act(l));
    return {child_->algebra(), std::move(action)};
}

std::optional<int> WideContext::projective_vertex(const FdModule& m) const {
    const auto t = transport(m);
    const auto& g = child_->algebra();
    for (int v = 0; v < g->num_vertices(); ++v)
        if (is_iso(t, projective_module(g, v))) return v;
    return std::nullopt;
}

bool WideContext::compatible_with_reducer(const SignedObject& x) const {
    return !is_iso(x, reducer_) && is_tau_rigid(x) && compatible(x, reducer_);
}

ReducedObject WideContext::e_map(const SignedObject& x) const {
    if (!compatible_with_reducer(x)) throw DomainError("object is not compatible with the reducer");
    const auto& a = parent_->algebra();
    auto shifted_result = [&](FdModule lambda) {
        if (lambda.is_zero()) throw DomainError("reduction produced the zero module");
        const auto v = projective_vertex(lambda);
        if (!v) throw DomainError("reduction did not produce a projective of J");
        return ReducedObject{std::move(lambda), true, SignedObject::shift(child_->algebra(), *v)};
    };
    if (reducer_.is_shifted()) {
        if (!x.is_shifted()) return {x.module, false, SignedObject::of(transport(x.module))};
        const auto pe = projective_module(a, reducer_.shifted);
        return shifted_result(torsion_free_quotient(pe, projective_module(a, x.shifted)).target);
    }
    const auto& u = reducer_.module;
    if (x.is_shifted()) {
        const auto b = direct_sum(a, bongartz_).sum;
        const auto bp = min_left_approx(projective_module(a, x.shifted), b).map.target;
        return shifted_result(torsion_free_quotient(u, bp).target);
    }
    if (!in_gen(u, x.module)) {
        auto f = torsion_free_quotient(u, x.module).target;
        auto g = SignedObject::of(transport(f));
        return {std::move(f), false, std::move(g)};
    }
    const auto r = cone_shift(min_right_approx_K({lift(reducer_)}, lift(x)).map);
    return shifted_result(torsion_free_quotient(u, h0(r)).target);
}

const std::vector<int>& WideContext::images() const {
    if (images_) return *images_;
    const auto& pr = parent_->registry();
    const auto& cr = child_->registry();
    std::vector<int> out(static_cast<std::size_t>(pr.size()), -1);
    std::vector<int> hits(static_cast<std::size_t>(cr.size()), 0);
    for (int id = 0; id < pr.size(); ++id) {
        if (!compatible_with_reducer(pr[id])) continue;
        const auto c = cr.find(e_map(pr[id]).gamma);
        if (!c) throw DomainError("reduced object is not τ-rigid in J");
        out[static_cast<std::size_t>(id)] = *c;
        ++hits[static_cast<std::size_t>(*c)];
    }
    if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; }))
        throw DomainError("reduction is not a bijection on τ-rigid objects");
    images_ = std::move(out);
    return *images_;
}

SignedObject WideContext::e_inverse(const SignedObject& y) const {
    const auto c = child_->registry().find(y);
    if (!c) throw DomainError("object is not τ-rigid in J");
    const auto& im = images();
    const auto it = std::find(im.begin(), im.end(), *c);
    return parent_->registry()[static_cast<int>(it - im.begin())];
}

}  // namespace tauseq
