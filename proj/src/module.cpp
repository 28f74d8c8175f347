#include "tauseq/module.hpp"

#include "tauseq/error.hpp"

#include <algorithm>

namespace tauseq {

FdModule::FdModule(AlgebraPtr a, std::vector<Mat> action, bool validate)
    : alg_(std::move(a)), action_(std::move(action)) {
    if (!alg_) throw std::invalid_argument("FdModule: null algebra");
    if (static_cast<Eigen::Index>(action_.size()) != alg_->dim())
        throw std::invalid_argument("FdModule: need one action matrix per basis element");
    dim_ = action_.front().rows();
    for (const auto& m : action_)
        if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("FdModule: action matrix shape");
    if (!validate || dim_ == 0) return;
    if (!equal(act(alg_->unit()), identity(field(), dim_))) throw DomainError("the unit does not act as the identity");
    for (Eigen::Index i = 0; i < alg_->dim(); ++i)
        for (Eigen::Index j = 0; j < alg_->dim(); ++j)
            if (!equal(Mat(action_[i] * action_[j]), act(alg_->left(i).col(j))))
                throw DomainError("action does not respect the product " + alg_->label(i) + " * " + alg_->label(j));
}

FdModule FdModule::zero(const AlgebraPtr& a) {
    return {a, std::vector<Mat>(static_cast<std::size_t>(a->dim()), zeros(a->field(), 0, 0)), false};
}

Mat FdModule::act(const Vec& x) const {
    Mat out = zeros(field(), dim_, dim_);
    if (dim_ == 0) return out;
    for (Eigen::Index i = 0; i < alg_->dim(); ++i)
        if (!x(i).is_zero()) out += x(i) * action_[i];
    return out;
}

Eigen::Index FdModule::vertex_dim(int v) const {
    if (dim_ == 0) return 0;
    return rank(field(), act(alg_->idempotent(v)));
}

std::vector<Eigen::Index> FdModule::dim_vector() const {
    std::vector<Eigen::Index> out;
    for (int v = 0; v < alg_->num_vertices(); ++v) out.push_back(vertex_dim(v));
    return out;
}

bool ModuleMap::is_homomorphism() const {
    if (matrix.rows() != target.dim() || matrix.cols() != source.dim()) return false;
    for (const auto& g : source.algebra()->generators())
        if (!equal(Mat(matrix * source.act(g)), Mat(target.act(g) * matrix))) return false;
    return true;
}

bool ModuleMap::is_injective() const { return rank(source.field(), matrix) == source.dim(); }
bool ModuleMap::is_surjective() const { return rank(source.field(), matrix) == target.dim(); }

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
    if (f.target.dim() != g.source.dim()) throw std::invalid_argument("compose: dimension mismatch");
    return {f.source, g.target, g.matrix * f.matrix};
}

Vec HomSpace::coords(const Mat& f) const { return span.coords(flatten(f)); }

Mat HomSpace::combination(const Vec& c) const {
    Mat out = zeros(source.field(), target.dim(), source.dim());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!c(static_cast<Eigen::Index>(i)).is_zero()) out += c(static_cast<Eigen::Index>(i)) * basis[i];
    return out;
}

namespace {

// Basis of e_v M for each vertex, together with the coordinate projections
// M -> e_v M along the other vertex spaces.
struct VertexSplit {
    std::vector<Mat> basis;
    std::vector<Mat> coords;
};

VertexSplit vertex_split(const FdModule& m) {
    const auto& k = m.field();
    const auto& a = *m.algebra();
    VertexSplit out;
    Mat all = zeros(k, m.dim(), 0);
    for (int v = 0; v < a.num_vertices(); ++v) {
        out.basis.push_back(Subspace(k, m.dim(), m.act(a.idempotent(v))).basis());
        all = hcat(k, all, out.basis.back());
    }
    const Mat inv = *solve(k, all, identity(k, m.dim()));
    Eigen::Index off = 0;
    for (const auto& b : out.basis) {
        out.coords.push_back(inv.middleRows(off, b.cols()));
        off += b.cols();
    }
    return out;
}

}  // namespace

HomSpace hom_basis(const FdModule& m, const FdModule& n) {
    if (m.algebra() != n.algebra() && m.algebra()->dim() != n.algebra()->dim())
        throw std::invalid_argument("hom_basis: modules over different algebras");
    const auto& k = m.field();
    const Eigen::Index rows = n.dim(), cols = m.dim(), unknowns = rows * cols;
    HomSpace out{m, n, {}, Subspace(k, unknowns, zeros(k, unknowns, 0))};
    if (unknowns == 0) return out;

    // Intertwiners preserve vertex spaces, so start from the block maps
    // e_v M -> e_v N and impose the remaining generators one at a time.
    const auto sm = vertex_split(m), sn = vertex_split(n);
    std::vector<Vec> blocks;
    for (std::size_t v = 0; v < sm.basis.size(); ++v)
        for (Eigen::Index j = 0; j < sm.basis[v].cols(); ++j)
            for (Eigen::Index i = 0; i < sn.basis[v].cols(); ++i)
                blocks.push_back(flatten(Mat(sn.basis[v].col(i) * sm.coords[v].row(j))));
    Mat sol = from_columns(k, unknowns, blocks);
    const auto& gens = m.algebra()->generators();
    for (std::size_t g = static_cast<std::size_t>(m.algebra()->num_vertices()); g < gens.size(); ++g) {
        if (sol.cols() == 0) break;
        const Mat mg = m.act(gens[g]), ng = n.act(gens[g]);
        Mat sys = zeros(k, unknowns, sol.cols());
        for (Eigen::Index c = 0; c < sol.cols(); ++c) {
            const Mat f = unflatten(sol.col(c), rows, cols);
            sys.col(c) = flatten(Mat(f * mg - ng * f));
        }
        sol = sol * kernel_basis(k, sys);
    }
    out.span = Subspace(k, unknowns, sol);
    for (Eigen::Index c = 0; c < out.span.dim(); ++c) out.basis.push_back(unflatten(out.span.basis().col(c), rows, cols));
    return out;
}

Eigen::Index hom_dim(const FdModule& m, const FdModule& n) { return hom_basis(m, n).dim(); }

FdModule regular_module(const AlgebraPtr& a) {
    std::vector<Mat> action;
    for (Eigen::Index i = 0; i < a->dim(); ++i) action.push_back(a->left(i));
    return {a, std::move(action), false};
}

FdModule projective_module(const AlgebraPtr& a, int v) {
    const Subspace w(a->field(), a->dim(), a->right_mult(a->idempotent(v)));
    return submodule(regular_module(a), w).source;
}

FdModule simple_module(const AlgebraPtr& a, int v) { return top(projective_module(a, v)).target; }

FdModule injective_module(const AlgebraPtr& a, int v) {
    const Subspace w(a->field(), a->dim(), a->left_mult(a->idempotent(v)));
    std::vector<Mat> action;
    for (Eigen::Index i = 0; i < a->dim(); ++i) {
        const Mat rho = w.coords(Mat(a->right_mult(a->basis_vector(i)) * w.basis()));
        action.push_back(rho.transpose());
    }
    return {a, std::move(action), false};
}

DirectSum direct_sum(const AlgebraPtr& a, const std::vector<FdModule>& parts) {
    const auto& k = a->field();
    Eigen::Index total = 0;
    for (const auto& p : parts) total += p.dim();
    std::vector<Mat> action(static_cast<std::size_t>(a->dim()), zeros(k, total, total));
    DirectSum out;
    Eigen::Index off = 0;
    for (const auto& p : parts) {
        for (Eigen::Index i = 0; i < a->dim(); ++i) action[i].block(off, off, p.dim(), p.dim()) = p.action(i);
        Mat inc = zeros(k, total, p.dim());
        inc.block(off, 0, p.dim(), p.dim()) = identity(k, p.dim());
        out.projections.push_back(inc.transpose());
        out.inclusions.push_back(std::move(inc));
        off += p.dim();
    }
    out.sum = FdModule(a, std::move(action), false);
    return out;
}

ModuleMap submodule(const FdModule& m, const Subspace& w) {
    std::vector<Mat> action;
    for (Eigen::Index i = 0; i < m.algebra()->dim(); ++i) {
        const Mat img = m.action(i) * w.basis();
        const Mat c = w.coords(img);
        if (!equal(Mat(w.basis() * c), img)) throw std::logic_error("submodule: subspace is not invariant");
        action.push_back(c);
    }
    if (w.dim() == 0) return {FdModule::zero(m.algebra()), m, zeros(m.field(), m.dim(), 0)};
    return {FdModule(m.algebra(), std::move(action), false), m, w.basis()};
}

ModuleMap quotient(const FdModule& m, const Subspace& w) {
    const auto& k = m.field();
    const auto rows = w.complement_rows();
    const Mat q = w.quotient_map();
    if (rows.empty()) return {m, FdModule::zero(m.algebra()), zeros(k, 0, m.dim())};
    Mat sel = zeros(k, m.dim(), static_cast<Eigen::Index>(rows.size()));
    for (std::size_t j = 0; j < rows.size(); ++j) sel(rows[j], static_cast<Eigen::Index>(j)) = k.one();
    std::vector<Mat> action;
    for (Eigen::Index i = 0; i < m.algebra()->dim(); ++i) action.push_back(q * m.action(i) * sel);
    return {m, FdModule(m.algebra(), std::move(action), false), q};
}

Subspace generated_submodule(const FdModule& m, const Mat& vectors) {
    const auto& k = m.field();
    Mat gens = zeros(k, m.dim(), 0);
    for (Eigen::Index i = 0; i < m.algebra()->dim(); ++i) gens = hcat(k, gens, Mat(m.action(i) * vectors));
    return {k, m.dim(), gens};
}

ModuleMap kernel(const ModuleMap& f) {
    const auto& k = f.source.field();
    return submodule(f.source, Subspace(k, f.source.dim(), kernel_basis(k, f.matrix)));
}

ModuleMap image(const ModuleMap& f) {
    return submodule(f.target, Subspace(f.source.field(), f.target.dim(), f.matrix));
}

ModuleMap cokernel(const ModuleMap& f) {
    return quotient(f.target, Subspace(f.source.field(), f.target.dim(), f.matrix));
}

Subspace radical_subspace(const FdModule& m) {
    const auto& k = m.field();
    const auto& rad = m.algebra()->radical();
    Mat gens = zeros(k, m.dim(), 0);
    for (Eigen::Index c = 0; c < rad.dim(); ++c) gens = hcat(k, gens, m.act(rad.basis().col(c)));
    return {k, m.dim(), gens};
}

ModuleMap top(const FdModule& m) { return quotient(m, radical_subspace(m)); }

namespace {

void require_trace_form(const FdModule& m) {
    if (static_cast<Eigen::Index>(m.field().p()) <= m.dim())
        throw DomainError("field characteristic must exceed the module dimension " + std::to_string(m.dim()));
}

}  // namespace

Endomorphisms endomorphisms(const FdModule& m) {
    require_trace_form(m);
    const auto& k = m.field();
    auto end = hom_basis(m, m);
    const Eigen::Index e = end.dim();
    Mat form = zeros(k, e, e);
    for (Eigen::Index i = 0; i < e; ++i)
        for (Eigen::Index j = i; j < e; ++j) form(i, j) = form(j, i) = Mat(end.basis[i] * end.basis[j]).trace();
    Subspace rad(k, e, kernel_basis(k, form));
    return {std::move(end), std::move(rad)};
}

bool is_local_span(const PrimeField& k, const std::vector<Mat>& spanning) {
    if (spanning.empty()) return false;
    const Eigen::Index n = spanning.front().rows();
    if (n == 0) return false;
    if (static_cast<Eigen::Index>(k.p()) <= n)
        throw DomainError("field characteristic must exceed the matrix size " + std::to_string(n));
    std::vector<Vec> flat;
    for (const auto& m : spanning) flat.push_back(flatten(m));
    const Subspace span(k, n * n, from_columns(k, n * n, flat));
    const Eigen::Index e = span.dim();
    std::vector<Mat> basis;
    for (Eigen::Index c = 0; c < e; ++c) basis.push_back(unflatten(span.basis().col(c), n, n));

    Mat form = zeros(k, e, e);
    for (Eigen::Index i = 0; i < e; ++i)
        for (Eigen::Index j = i; j < e; ++j) form(i, j) = form(j, i) = Mat(basis[i] * basis[j]).trace();
    const Subspace rad(k, e, kernel_basis(k, form));
    const auto top_idx = rad.complement_rows();
    if (top_idx.size() <= 1) return top_idx.size() == 1;

    auto reduce_coords = [&](const Mat& f) { return rad.reduce(span.coords(flatten(f))); };
    for (std::size_t a = 0; a < top_idx.size(); ++a)
        for (std::size_t b = a + 1; b < top_idx.size(); ++b) {
            const Mat& x = basis[top_idx[a]];
            const Mat& y = basis[top_idx[b]];
            if (!is_zero(reduce_coords(Mat(x * y - y * x)))) return false;
        }

    // Commutative semisimple quotient: it is a field iff the fixed points of
    // Frobenius are one-dimensional.
    const auto q = static_cast<Eigen::Index>(top_idx.size());
    Mat frob = zeros(k, q, q);
    for (Eigen::Index a = 0; a < q; ++a) {
        Mat x = basis[top_idx[a]], acc = identity(k, n);
        for (std::uint64_t p = k.p(); p != 0; p >>= 1u) {
            if (p & 1u) acc = acc * x;
            x = x * x;
        }
        const Vec r = reduce_coords(acc);
        for (Eigen::Index b = 0; b < q; ++b) frob(b, a) = r(top_idx[b]);
    }
    return kernel_basis(k, Mat(frob - identity(k, q))).cols() == 1;
}

bool is_local_endo(const FdModule& m) {
    if (m.is_zero()) return false;
    require_trace_form(m);
    return is_local_span(m.field(), hom_basis(m, m).basis);
}

std::vector<Fp> characteristic_polynomial(const PrimeField& k, const Mat& m) {
    // Faddeev-LeVerrier; divisions by 1..n are fine since p > n.
    const Eigen::Index n = m.rows();
    std::vector<Fp> c(static_cast<std::size_t>(n + 1), k.zero());
    c[n] = k.one();
    Mat mk = zeros(k, n, n);
    const Mat id = identity(k, n);
    for (Eigen::Index i = 1; i <= n; ++i) {
        mk = m * mk + c[n - i + 1] * id;
        c[n - i] = -Mat(m * mk).trace() / k(i);
    }
    return c;
}

namespace {

using Poly = std::vector<Fp>;

void trim(Poly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& b) {
    trim(a);
    const Fp lead_inv = b.back().inverse();
    while (a.size() >= b.size()) {
        const Fp f = a.back() * lead_inv;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, const PrimeField& k) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, k.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return poly_mod(std::move(out), m);
}

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Fp poly_eval(const Poly& a, Fp x) {
    Fp acc = x * Fp(0);
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Synthetic division by (x - r), where r is a root.
Poly deflate(const Poly& a, Fp r) {
    Poly out(a.size() - 1, r * Fp(0));
    Fp carry = r * Fp(0);
    for (std::size_t i = a.size() - 1; i > 0; --i) {
        carry = a[i] + carry * r;
        out[i - 1] = carry;
    }
    return out;
}

}  // namespace

std::vector<Fp> roots_in_field(const PrimeField& k, const std::vector<Fp>& poly) {
    Poly f = poly;
    trim(f);
    if (f.size() <= 1) return {};
    // g = gcd(f, x^p - x) is the product of the distinct linear factors.
    Poly xp{k.one()}, base{k.zero(), k.one()};
    base = poly_mod(base, f);
    for (std::uint64_t e = k.p(); e != 0; e >>= 1u) {
        if (e & 1u) xp = poly_mulmod(xp, base, f, k);
        base = poly_mulmod(base, base, f, k);
    }
    xp.resize(std::max<std::size_t>(xp.size(), 2), k.zero());
    xp[1] -= k.one();
    Poly g = poly_gcd(f, xp);
    std::vector<Fp> roots;
    for (std::uint64_t step = 0; g.size() > 1 && step < k.p(); ++step) {
        const std::int64_t mag = static_cast<std::int64_t>((step + 1) / 2);
        const Fp r = k(step % 2 == 1 ? mag : -mag);
        if (!poly_eval(g, r).is_zero()) continue;
        roots.push_back(r);
        g = deflate(g, r);
    }
    return roots;
}

namespace {

Mat matrix_power(const PrimeField& k, Mat x, Eigen::Index e) {
    Mat acc = identity(k, x.rows());
    for (; e != 0; e >>= 1) {
        if (e & 1) acc = acc * x;
        x = x * x;
    }
    return acc;
}

// Fitting splitting of M along a single endomorphism, if it is nontrivial.
std::optional<std::pair<Subspace, Subspace>> fitting_split(const FdModule& m, const Mat& f) {
    const auto& k = m.field();
    for (const Fp lambda : roots_in_field(k, characteristic_polynomial(k, f))) {
        const Mat g = matrix_power(k, Mat(f - lambda * identity(k, m.dim())), m.dim());
        Subspace ker(k, m.dim(), kernel_basis(k, g));
        if (ker.dim() == 0 || ker.dim() == m.dim()) continue;
        return std::make_pair(std::move(ker), Subspace(k, m.dim(), g));
    }
    return std::nullopt;
}

void split_into(const FdModule& m, std::vector<FdModule>& out) {
    if (m.is_zero()) return;
    require_trace_form(m);
    const auto end = hom_basis(m, m);
    std::vector<Mat> candidates = end.basis;
    auto attempt = [&](const Mat& f) {
        auto parts = fitting_split(m, f);
        if (!parts) return false;
        split_into(submodule(m, parts->first).source, out);
        split_into(submodule(m, parts->second).source, out);
        return true;
    };
    for (const auto& f : candidates)
        if (attempt(f)) return;
    if (end.dim() == 1 || is_local_endo(m)) {
        out.push_back(m);
        return;
    }
    const auto& k = m.field();
    for (std::size_t i = 0; i < candidates.size(); ++i)
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
            for (const std::int64_t c : {1, 2, 3})
                if (attempt(Mat(candidates[i] + k(c) * candidates[j])) || attempt(Mat(candidates[i] * candidates[j])))
                    return;
    throw DomainError("could not split a module whose endomorphism ring is not local");
}

}  // namespace

std::vector<FdModule> indecomposable_summands(const FdModule& m) {
    std::vector<FdModule> out;
    split_into(m, out);
    return out;
}

std::vector<Summand> decompose(const FdModule& m) {
    std::vector<Summand> out;
    for (auto& s : indecomposable_summands(m)) {
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const Summand& x) { return is_iso_indecomposable(x.module, s); });
        if (it != out.end())
            ++it->multiplicity;
        else
            out.push_back({std::move(s), 1});
    }
    return out;
}

bool is_iso_indecomposable(const FdModule& m, const FdModule& n) {
    if (m.dim() != n.dim()) return false;
    if (m.is_zero()) return true;
    if (m.dim_vector() != n.dim_vector()) return false;
    const auto f = hom_basis(m, n);
    if (f.dim() == 0) return false;
    const auto g = hom_basis(n, m);
    for (const auto& a : f.basis)
        for (const auto& b : g.basis)
            if (rank(m.field(), Mat(b * a)) == m.dim()) return true;
    return false;
}

bool is_iso(const FdModule& m, const FdModule& n) {
    if (m.dim() != n.dim() || m.dim_vector() != n.dim_vector()) return false;
    auto a = decompose(m);
    auto b = decompose(n);
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& x : a) {
        bool found = false;
        for (std::size_t j = 0; j < b.size() && !found; ++j) {
            if (used[j] || b[j].multiplicity != x.multiplicity) continue;
            if (is_iso_indecomposable(x.module, b[j].module)) used[j] = found = true;
        }
        if (!found) return false;
    }
    return true;
}

ModuleMap trace_submodule(const FdModule& u, const FdModule& x) {
    const auto& k = x.field();
    const auto h = hom_basis(u, x);
    Mat gens = zeros(k, x.dim(), 0);
    for (const auto& f : h.basis) gens = hcat(k, gens, f);
    return submodule(x, Subspace(k, x.dim(), gens));
}

ModuleMap torsion_free_quotient(const FdModule& u, const FdModule& x) {
    const auto t = trace_submodule(u, x);
    return quotient(x, Subspace(x.field(), x.dim(), t.matrix));
}

bool in_gen(const FdModule& u, const FdModule& x) { return trace_submodule(u, x).source.dim() == x.dim(); }

std::vector<FdModule> basic_summands(const FdModule& u) {
    std::vector<FdModule> out;
    for (auto& s : decompose(u)) out.push_back(std::move(s.module));
    return out;
}

namespace {

// Basis of the radical maps u_a -> u_b between basic summands.
std::vector<Mat> radical_maps(const std::vector<FdModule>& us, std::size_t a, std::size_t b) {
    if (a != b) return hom_basis(us[a], us[b]).basis;
    const auto [end, rad] = endomorphisms(us[a]);
    std::vector<Mat> out;
    for (Eigen::Index c = 0; c < rad.dim(); ++c) out.push_back(end.combination(rad.basis().col(c)));
    return out;
}

}  // namespace

Approximation min_right_approx(const FdModule& u, const FdModule& x) {
    const auto& k = x.field();
    const auto us = basic_summands(u);
    std::vector<FdModule> copies;
    std::vector<int> kinds;
    Mat map = zeros(k, x.dim(), 0);
    for (std::size_t a = 0; a < us.size(); ++a) {
        const auto h = hom_basis(us[a], x);
        if (h.dim() == 0) continue;
        // Maps u_a -> X that factor through a radical map u_a -> u_b.
        Mat gens = zeros(k, h.dim(), 0);
        for (std::size_t b = 0; b < us.size(); ++b) {
            const auto rad = radical_maps(us, a, b);
            if (rad.empty()) continue;
            const auto g = hom_basis(us[b], x);
            for (const auto& r : rad)
                for (const auto& gb : g.basis) gens = hcat(k, gens, Mat(h.coords(Mat(gb * r))));
        }
        const Subspace factoring(k, h.dim(), gens);
        for (auto i : factoring.complement_rows()) {
            copies.push_back(us[a]);
            kinds.push_back(static_cast<int>(a));
            map = hcat(k, map, h.basis[static_cast<std::size_t>(i)]);
        }
    }
    const auto sum = direct_sum(x.algebra(), copies);
    if (map.cols() == 0) map = zeros(k, x.dim(), 0);
    return {{sum.sum, x, map}, kinds};
}

Approximation min_left_approx(const FdModule& x, const FdModule& u) {
    const auto& k = x.field();
    const auto us = basic_summands(u);
    std::vector<FdModule> copies;
    std::vector<int> kinds;
    Mat map = zeros(k, 0, x.dim());
    for (std::size_t a = 0; a < us.size(); ++a) {
        const auto h = hom_basis(x, us[a]);
        if (h.dim() == 0) continue;
        Mat gens = zeros(k, h.dim(), 0);
        for (std::size_t b = 0; b < us.size(); ++b) {
            const auto rad = radical_maps(us, b, a);
            if (rad.empty()) continue;
            const auto g = hom_basis(x, us[b]);
            for (const auto& r : rad)
                for (const auto& gb : g.basis) gens = hcat(k, gens, Mat(h.coords(Mat(r * gb))));
        }
        const Subspace factoring(k, h.dim(), gens);
        for (auto i : factoring.complement_rows()) {
            copies.push_back(us[a]);
            kinds.push_back(static_cast<int>(a));
            map = vcat(k, map, h.basis[static_cast<std::size_t>(i)]);
        }
    }
    const auto sum = direct_sum(x.algebra(), copies);
    return {{x, sum.sum, map}, kinds};
}

}  // namespace tauseq
