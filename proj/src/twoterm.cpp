#include "tauseq/twoterm.hpp"

#include "tauseq/error.hpp"

#include <algorithm>

namespace tauseq {

AlgMatrix::AlgMatrix(const StructAlgebra& a, Eigen::Index rows, Eigen::Index cols)
    : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows * cols), zero_vector(a.field(), a.dim())) {}

AlgMatrix AlgMatrix::without(std::optional<Eigen::Index> row, std::optional<Eigen::Index> col) const {
    AlgMatrix out;
    out.rows_ = rows_ - (row ? 1 : 0);
    out.cols_ = cols_ - (col ? 1 : 0);
    for (Eigen::Index i = 0; i < rows_; ++i) {
        if (row && *row == i) continue;
        for (Eigen::Index j = 0; j < cols_; ++j)
            if (!col || *col != j) out.e_.push_back((*this)(i, j));
    }
    return out;
}

Vec multiply(const StructAlgebra& a, const Vec& x, const Vec& y) {
    Vec out = zero_vector(a.field(), a.dim());
    for (Eigen::Index i = 0; i < a.dim(); ++i) {
        if (x(i).is_zero()) continue;
        for (Eigen::Index j = 0; j < a.dim(); ++j)
            if (!y(j).is_zero()) out += (x(i) * y(j)) * a.left(i).col(j);
    }
    return out;
}

AlgMatrix multiply(const StructAlgebra& a, const AlgMatrix& x, const AlgMatrix& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("AlgMatrix product: shape mismatch");
    AlgMatrix out(a, x.rows(), y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            if (is_zero(x(i, j))) continue;
            for (Eigen::Index l = 0; l < y.cols(); ++l) out(i, l) += multiply(a, x(i, j), y(j, l));
        }
    return out;
}

AlgMatrix add(const AlgMatrix& x, const AlgMatrix& y) {
    AlgMatrix out = x;
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j) out(i, j) += y(i, j);
    return out;
}

AlgMatrix negate(const AlgMatrix& x) {
    AlgMatrix out = x;
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j) out(i, j) = -x(i, j);
    return out;
}

AlgMatrix hstack(const StructAlgebra& a, const AlgMatrix& x, const AlgMatrix& y) {
    AlgMatrix out(a, x.rows(), x.cols() + y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        for (Eigen::Index j = 0; j < x.cols(); ++j) out(i, j) = x(i, j);
        for (Eigen::Index j = 0; j < y.cols(); ++j) out(i, x.cols() + j) = y(i, j);
    }
    return out;
}

AlgMatrix vstack(const StructAlgebra& a, const AlgMatrix& x, const AlgMatrix& y) {
    AlgMatrix out(a, x.rows() + y.rows(), x.cols());
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        for (Eigen::Index i = 0; i < x.rows(); ++i) out(i, j) = x(i, j);
        for (Eigen::Index i = 0; i < y.rows(); ++i) out(x.rows() + i, j) = y(i, j);
    }
    return out;
}

namespace {

Eigen::Index size(const std::vector<int>& v) { return static_cast<Eigen::Index>(v.size()); }

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

AlgMatrix diagonal_units(const StructAlgebra& a, const std::vector<int>& vertices) {
    AlgMatrix out(a, size(vertices), size(vertices));
    for (Eigen::Index i = 0; i < size(vertices); ++i) out(i, i) = a.idempotent(vertices[i]);
    return out;
}

bool same_entries(const AlgMatrix& x, const AlgMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j)
            if (!equal(x(i, j), y(i, j))) return false;
    return true;
}

}  // namespace

TwoTermComplex stalk(const AlgebraPtr& a, const std::vector<int>& vertices) {
    return {a, {}, vertices, AlgMatrix(*a, 0, size(vertices))};
}

TwoTermComplex shifted(const AlgebraPtr& a, const std::vector<int>& vertices) {
    return {a, vertices, {}, AlgMatrix(*a, size(vertices), 0)};
}

TwoTermComplex direct_sum(const std::vector<TwoTermComplex>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct_sum: no summands");
    const auto& a = parts.front().algebra;
    TwoTermComplex out{a, {}, {}, {}};
    for (const auto& p : parts) {
        out.minus1 = concat(out.minus1, p.minus1);
        out.zero = concat(out.zero, p.zero);
    }
    out.d = AlgMatrix(*a, size(out.minus1), size(out.zero));
    Eigen::Index r = 0, c = 0;
    for (const auto& p : parts) {
        for (Eigen::Index i = 0; i < p.d.rows(); ++i)
            for (Eigen::Index j = 0; j < p.d.cols(); ++j) out.d(r + i, c + j) = p.d(i, j);
        r += p.d.rows();
        c += p.d.cols();
    }
    return out;
}

bool ChainMap::commutes() const {
    const auto& a = *source.algebra;
    return same_entries(multiply(a, source.d, f0), multiply(a, f1, target.d));
}

ChainMap identity_map(const TwoTermComplex& x) {
    return {x, x, diagonal_units(*x.algebra, x.minus1), diagonal_units(*x.algebra, x.zero)};
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    const auto& a = *f.source.algebra;
    return {f.source, g.target, multiply(a, f.f1, g.f1), multiply(a, f.f0, g.f0)};
}

HomLayout::HomLayout(const StructAlgebra& a, std::vector<int> rows, std::vector<int> cols)
    : a_(&a), rows_(std::move(rows)), cols_(std::move(cols)) {
    for (int u : rows_)
        for (int v : cols_) {
            offset_.push_back(dim_);
            dim_ += a.corner(u, v).dim();
        }
}

Vec HomLayout::coords(const AlgMatrix& m) const {
    Vec out = zero_vector(a_->field(), dim_);
    const auto nc = size(cols_);
    for (Eigen::Index i = 0; i < size(rows_); ++i)
        for (Eigen::Index j = 0; j < nc; ++j) {
            const auto& corner = a_->corner(rows_[i], cols_[j]);
            if (corner.dim() == 0) continue;
            out.segment(offset_[static_cast<std::size_t>(i * nc + j)], corner.dim()) = corner.coords(m(i, j));
        }
    return out;
}

AlgMatrix HomLayout::element(const Vec& c) const {
    AlgMatrix out(*a_, size(rows_), size(cols_));
    const auto nc = size(cols_);
    for (Eigen::Index i = 0; i < size(rows_); ++i)
        for (Eigen::Index j = 0; j < nc; ++j) {
            const auto& corner = a_->corner(rows_[i], cols_[j]);
            if (corner.dim() == 0) continue;
            out(i, j) = corner.basis() * c.segment(offset_[static_cast<std::size_t>(i * nc + j)], corner.dim());
        }
    return out;
}

namespace {

// Chain maps x -> y as vectors in Hom(x^-1, y^-1) + Hom(x^0, y^0), together
// with the null-homotopic ones.
struct ChainSpace {
    HomLayout l1, l0;
    Mat cycles;
    Subspace null;
};

ChainSpace chain_space(const TwoTermComplex& x, const TwoTermComplex& y) {
    const auto& a = *x.algebra;
    const auto& k = a.field();
    ChainSpace s{HomLayout(a, x.minus1, y.minus1), HomLayout(a, x.zero, y.zero), {}, {}};
    const HomLayout lc(a, x.minus1, y.zero), lh(a, x.zero, y.minus1);
    const Eigen::Index n1 = s.l1.dim(), n0 = s.l0.dim(), n = n1 + n0;

    std::vector<Vec> cond;
    for (Eigen::Index c = 0; c < n1; ++c)
        cond.push_back(lc.coords(negate(multiply(a, s.l1.element(unit_vector(k, n1, c)), y.d))));
    for (Eigen::Index c = 0; c < n0; ++c) cond.push_back(lc.coords(multiply(a, x.d, s.l0.element(unit_vector(k, n0, c)))));
    s.cycles = kernel_basis(k, from_columns(k, lc.dim(), cond));

    std::vector<Vec> hs;
    for (Eigen::Index c = 0; c < lh.dim(); ++c) {
        const AlgMatrix h = lh.element(unit_vector(k, lh.dim(), c));
        Vec v(n);
        v.head(n1) = s.l1.coords(multiply(a, x.d, h));
        v.tail(n0) = s.l0.coords(multiply(a, h, y.d));
        hs.push_back(v);
    }
    s.null = Subspace(k, n, from_columns(k, n, hs));
    return s;
}

ChainMap chain_map(const TwoTermComplex& x, const TwoTermComplex& y, const HomLayout& l1, const HomLayout& l0,
                   const Vec& v) {
    return {x, y, l1.element(v.head(l1.dim())), l0.element(v.tail(l0.dim()))};
}

}  // namespace

Vec HomK::coords(const ChainMap& f) const {
    const auto& k = source.algebra->field();
    Vec v(layout1.dim() + layout0.dim());
    v.head(layout1.dim()) = layout1.coords(f.f1);
    v.tail(layout0.dim()) = layout0.coords(f.f0);
    if (v.size() == 0) return zero_vector(k, 0);
    const auto sol = solve(k, representatives, v);
    if (!sol) throw std::logic_error("HomK::coords: not a chain map");
    return sol->head(dim());
}

HomK hom_K(const TwoTermComplex& x, const TwoTermComplex& y) {
    const auto& k = x.algebra->field();
    auto s = chain_space(x, y);
    const Eigen::Index n = s.l1.dim() + s.l0.dim();
    HomK out{x, y, {}, s.l1, s.l0, {}};
    // Cycles independent modulo the homotopies: pivots past the null block.
    const auto ech = row_echelon(hcat(k, s.null.basis(), s.cycles));
    std::vector<Vec> reps;
    for (auto p : ech.pivots)
        if (p >= s.null.dim()) reps.push_back(s.cycles.col(p - s.null.dim()));
    for (const auto& r : reps) out.basis.push_back(chain_map(x, y, s.l1, s.l0, r));
    out.representatives = hcat(k, from_columns(k, n, reps), s.null.basis());
    return out;
}

Eigen::Index hom_K_dim(const TwoTermComplex& x, const TwoTermComplex& y, int shift) {
    const auto& a = *x.algebra;
    const auto& k = a.field();
    if (shift == 0) {
        const auto s = chain_space(x, y);
        return s.cycles.cols() - s.null.dim();
    }
    if (shift == 1) {
        // Maps x^-1 -> y^0 modulo d_x h0 + h1 d_y.
        const HomLayout l(a, x.minus1, y.zero), h0(a, x.zero, y.zero), h1(a, x.minus1, y.minus1);
        std::vector<Vec> gens;
        for (Eigen::Index c = 0; c < h0.dim(); ++c)
            gens.push_back(l.coords(multiply(a, x.d, h0.element(unit_vector(k, h0.dim(), c)))));
        for (Eigen::Index c = 0; c < h1.dim(); ++c)
            gens.push_back(l.coords(multiply(a, h1.element(unit_vector(k, h1.dim(), c)), y.d)));
        return l.dim() - rank(k, from_columns(k, l.dim(), gens));
    }
    if (shift == -1) {
        // Maps x^0 -> y^-1 killed by both differentials.
        const HomLayout l(a, x.zero, y.minus1), c1(a, x.minus1, y.minus1), c0(a, x.zero, y.zero);
        const Eigen::Index rows = c1.dim() + c0.dim();
        std::vector<Vec> cond;
        for (Eigen::Index c = 0; c < l.dim(); ++c) {
            const AlgMatrix g = l.element(unit_vector(k, l.dim(), c));
            Vec v(rows);
            v.head(c1.dim()) = c1.coords(multiply(a, x.d, g));
            v.tail(c0.dim()) = c0.coords(multiply(a, g, y.d));
            cond.push_back(v);
        }
        return kernel_basis(k, from_columns(k, rows, cond)).cols();
    }
    throw std::invalid_argument("hom_K_dim: shift must be -1, 0 or 1");
}

bool is_rigid(const TwoTermComplex& x) { return hom_K_dim(x, x, 1) == 0; }

namespace {

// T0 -> T1 -> T2 with differentials in row convention.
struct ThreeTerm {
    std::vector<int> t0, t1, t2;
    AlgMatrix d1, d2;
};

std::optional<std::pair<Eigen::Index, Eigen::Index>> find_unit(const StructAlgebra& a, const std::vector<int>& rows,
                                                               const std::vector<int>& cols, const AlgMatrix& m) {
    for (Eigen::Index i = 0; i < size(rows); ++i)
        for (Eigen::Index j = 0; j < size(cols); ++j)
            if (rows[i] == cols[j] && !a.top_coefficient(m(i, j), rows[i]).is_zero()) return std::make_pair(i, j);
    return std::nullopt;
}

// Schur complement of an invertible entry: m(r, c) - m(r, j) m(i, j)^-1 m(i, c).
AlgMatrix schur(const StructAlgebra& a, const AlgMatrix& m, Eigen::Index i, Eigen::Index j, int vertex) {
    const Vec inv = a.local_inverse(m(i, j), vertex);
    AlgMatrix out = m.without(i, j);
    Eigen::Index rr = 0;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        if (r == i) continue;
        if (!is_zero(m(r, j))) {
            const Vec left = multiply(a, m(r, j), inv);
            Eigen::Index cc = 0;
            for (Eigen::Index c = 0; c < m.cols(); ++c) {
                if (c == j) continue;
                out(rr, cc) -= multiply(a, left, m(i, c));
                ++cc;
            }
        }
        ++rr;
    }
    return out;
}

void reduce(const StructAlgebra& a, ThreeTerm& c) {
    for (;;) {
        if (auto p = find_unit(a, c.t1, c.t2, c.d2)) {
            const auto [j, l] = *p;
            c.d2 = schur(a, c.d2, j, l, c.t1[j]);
            c.d1 = c.d1.without(std::nullopt, j);
            c.t1.erase(c.t1.begin() + j);
            c.t2.erase(c.t2.begin() + l);
            continue;
        }
        if (auto p = find_unit(a, c.t0, c.t1, c.d1)) {
            const auto [i, j] = *p;
            c.d1 = schur(a, c.d1, i, j, c.t0[i]);
            c.d2 = c.d2.without(j, std::nullopt);
            c.t0.erase(c.t0.begin() + i);
            c.t1.erase(c.t1.begin() + j);
            continue;
        }
        return;
    }
}

}  // namespace

TwoTermComplex reduce_complex(const TwoTermComplex& x) {
    const auto& a = *x.algebra;
    ThreeTerm c{x.minus1, x.zero, {}, x.d, AlgMatrix(a, size(x.zero), 0)};
    reduce(a, c);
    return {x.algebra, c.t0, c.t1, c.d1};
}

namespace {

std::vector<Subspace> projective_bases(const StructAlgebra& a) {
    std::vector<Subspace> out;
    for (int v = 0; v < a.num_vertices(); ++v) out.emplace_back(a.field(), a.dim(), a.right_mult(a.idempotent(v)));
    return out;
}

std::vector<Subspace> injective_bases(const StructAlgebra& a) {
    std::vector<Subspace> out;
    for (int v = 0; v < a.num_vertices(); ++v) out.emplace_back(a.field(), a.dim(), a.left_mult(a.idempotent(v)));
    return out;
}

std::vector<Eigen::Index> offsets(const std::vector<Subspace>& bases, const std::vector<int>& vertices) {
    std::vector<Eigen::Index> out;
    Eigen::Index off = 0;
    for (int v : vertices) {
        out.push_back(off);
        off += bases[static_cast<std::size_t>(v)].dim();
    }
    out.push_back(off);
    return out;
}

}  // namespace

FdModule projective_sum(const AlgebraPtr& a, const std::vector<int>& vertices) {
    std::vector<FdModule> parts;
    for (int v : vertices) parts.push_back(projective_module(a, v));
    return direct_sum(a, parts).sum;
}

Mat realize(const AlgebraPtr& a, const std::vector<int>& rows, const std::vector<int>& cols, const AlgMatrix& m) {
    const auto w = projective_bases(*a);
    const auto ro = offsets(w, rows), co = offsets(w, cols);
    Mat out = zeros(a->field(), co.back(), ro.back());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const auto& src = w[static_cast<std::size_t>(rows[i])];
            const auto& dst = w[static_cast<std::size_t>(cols[j])];
            if (src.dim() == 0 || dst.dim() == 0) continue;
            const Mat img = a->right_mult(m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) * src.basis();
            out.block(co[j], ro[i], dst.dim(), src.dim()) = dst.coords(img);
        }
    return out;
}

ModuleMap differential(const TwoTermComplex& x) {
    return {projective_sum(x.algebra, x.minus1), projective_sum(x.algebra, x.zero),
            realize(x.algebra, x.minus1, x.zero, x.d)};
}

FdModule h0(const TwoTermComplex& x) { return cokernel(differential(x)).target; }
FdModule hminus1(const TwoTermComplex& x) { return kernel(differential(x)).source; }

namespace {

// Elements of the vertex spaces of M whose classes form a basis of top M.
std::vector<std::pair<int, Vec>> top_generators(const FdModule& m) {
    const auto& k = m.field();
    const auto& a = *m.algebra();
    std::vector<std::pair<int, Vec>> out;
    if (m.is_zero()) return out;
    Subspace acc = radical_subspace(m);
    for (int v = 0; v < a.num_vertices(); ++v) {
        const Mat ev = Subspace(k, m.dim(), m.act(a.idempotent(v))).basis();
        for (Eigen::Index c = 0; c < ev.cols(); ++c) {
            const Vec x = ev.col(c);
            if (acc.contains(x)) continue;
            out.emplace_back(v, x);
            acc = acc + Subspace(k, m.dim(), Mat(x));
        }
    }
    return out;
}

}  // namespace

Presentation min_presentation(const FdModule& m) {
    const auto& a = m.algebra();
    const auto& k = m.field();
    const auto w = projective_bases(*a);

    const auto gens = top_generators(m);
    std::vector<int> zero;
    for (const auto& g : gens) zero.push_back(g.first);
    FdModule p0 = projective_sum(a, zero);
    const auto off0 = offsets(w, zero);
    Mat cover = zeros(k, m.dim(), p0.dim());
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const auto& basis = w[static_cast<std::size_t>(gens[g].first)].basis();
        for (Eigen::Index c = 0; c < basis.cols(); ++c)
            cover.col(off0[g] + c) = m.act(basis.col(c)) * gens[g].second;
    }

    const auto omega = kernel(ModuleMap{p0, m, cover});
    const auto rel = top_generators(omega.source);
    std::vector<int> minus1;
    for (const auto& r : rel) minus1.push_back(r.first);
    AlgMatrix d(*a, size(minus1), size(zero));
    for (std::size_t i = 0; i < rel.size(); ++i) {
        const Vec x = omega.matrix * rel[i].second;
        for (std::size_t j = 0; j < zero.size(); ++j) {
            const auto& basis = w[static_cast<std::size_t>(zero[j])].basis();
            d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = basis * x.segment(off0[j], basis.cols());
        }
    }
    return {{a, std::move(minus1), std::move(zero), std::move(d)}, std::move(p0), std::move(cover)};
}

FdModule tau(const FdModule& m) {
    const auto& a = m.algebra();
    const auto& k = m.field();
    const auto x = min_presentation(m).complex;
    if (x.minus1.empty()) return FdModule::zero(a);

    // Nakayama functor: Hom(P_u, P_v) = e_u A e_v acts D(e_u A) -> D(e_v A)
    // as the dual of left multiplication e_v A -> e_u A.
    const auto w = injective_bases(*a);
    const auto so = offsets(w, x.minus1), to = offsets(w, x.zero);
    Mat nu = zeros(k, to.back(), so.back());
    for (std::size_t i = 0; i < x.minus1.size(); ++i)
        for (std::size_t j = 0; j < x.zero.size(); ++j) {
            const auto& src = w[static_cast<std::size_t>(x.minus1[i])];
            const auto& dst = w[static_cast<std::size_t>(x.zero[j])];
            const Mat l = a->left_mult(x.d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) * dst.basis();
            nu.block(to[j], so[i], dst.dim(), src.dim()) = src.coords(l).transpose();
        }
    std::vector<FdModule> src, dst;
    for (int u : x.minus1) src.push_back(injective_module(a, u));
    for (int v : x.zero) dst.push_back(injective_module(a, v));
    return kernel(ModuleMap{direct_sum(a, src).sum, direct_sum(a, dst).sum, nu}).source;
}

Eigen::Index ext1_dim(const FdModule& m, const FdModule& n) {
    const auto& k = m.field();
    const auto pres = min_presentation(m);
    const auto omega = kernel(ModuleMap{pres.p0, m, pres.cover});
    const auto h = hom_basis(omega.source, n);
    if (h.dim() == 0) return 0;
    const auto g = hom_basis(pres.p0, n);
    std::vector<Vec> restricted;
    for (const auto& f : g.basis) restricted.push_back(h.coords(Mat(f * omega.matrix)));
    return h.dim() - rank(k, from_columns(k, h.dim(), restricted));
}

ChainMap lift_map(const ModuleMap& phi, const Presentation& px, const Presentation& py) {
    const auto& a = px.complex.algebra;
    const auto& k = a->field();
    const auto& x = px.complex;
    const auto& y = py.complex;

    const HomLayout l0(*a, x.zero, y.zero);
    std::vector<Vec> cols;
    for (Eigen::Index c = 0; c < l0.dim(); ++c)
        cols.push_back(flatten(Mat(py.cover * realize(a, x.zero, y.zero, l0.element(unit_vector(k, l0.dim(), c))))));
    const Vec rhs0 = flatten(Mat(phi.matrix * px.cover));
    const auto c0 = solve(k, from_columns(k, rhs0.size(), cols), rhs0);
    if (!c0) throw std::logic_error("lift_map: degree 0 component does not exist");
    const AlgMatrix f0 = l0.element(*c0);

    const HomLayout l1(*a, x.minus1, y.minus1), lc(*a, x.minus1, y.zero);
    cols.clear();
    for (Eigen::Index c = 0; c < l1.dim(); ++c)
        cols.push_back(lc.coords(multiply(*a, l1.element(unit_vector(k, l1.dim(), c)), y.d)));
    const Vec rhs1 = lc.coords(multiply(*a, x.d, f0));
    const auto c1 = solve(k, from_columns(k, lc.dim(), cols), rhs1);
    if (!c1) throw std::logic_error("lift_map: degree -1 component does not exist");
    return {x, y, l1.element(*c1), f0};
}

std::optional<TwoTermComplex> try_cone_shift(const ChainMap& alpha) {
    const auto& a = *alpha.source.algebra;
    const auto& u = alpha.source;
    const auto& x = alpha.target;
    ThreeTerm c{u.minus1, concat(u.zero, x.minus1), x.zero, hstack(a, negate(u.d), alpha.f1),
                vstack(a, alpha.f0, x.d)};
    reduce(a, c);
    if (!c.t2.empty()) return std::nullopt;
    return TwoTermComplex{u.algebra, c.t0, c.t1, c.d1};
}

TwoTermComplex cone_shift(const ChainMap& alpha) {
    auto y = try_cone_shift(alpha);
    if (!y) throw DomainError("cone is not two-term: the map is not surjective on H^0");
    return *y;
}

std::optional<TwoTermComplex> try_cone(const ChainMap& beta) {
    const auto& a = *beta.source.algebra;
    const auto& x = beta.source;
    const auto& u = beta.target;
    ThreeTerm c{x.minus1, concat(x.zero, u.minus1), u.zero, hstack(a, negate(x.d), beta.f1), vstack(a, beta.f0, u.d)};
    reduce(a, c);
    if (!c.t0.empty()) return std::nullopt;
    return TwoTermComplex{x.algebra, c.t1, c.t2, c.d2};
}

namespace {

// Top coefficients of an endomorphism, one block per degree. Composition is
// multiplicative on these, and the kernel consists of nilpotent maps.
Mat top_matrix(const StructAlgebra& a, const ChainMap& f) {
    const auto& x = f.source;
    const Eigen::Index n1 = size(x.minus1), n0 = size(x.zero);
    Mat t = zeros(a.field(), n1 + n0, n1 + n0);
    for (Eigen::Index i = 0; i < n1; ++i)
        for (Eigen::Index j = 0; j < n1; ++j)
            if (x.minus1[i] == x.minus1[j]) t(i, j) = a.top_coefficient(f.f1(i, j), x.minus1[i]);
    for (Eigen::Index i = 0; i < n0; ++i)
        for (Eigen::Index j = 0; j < n0; ++j)
            if (x.zero[i] == x.zero[j]) t(n1 + i, n1 + j) = a.top_coefficient(f.f0(i, j), x.zero[i]);
    return t;
}

ChainMap combination(const HomK& h, const Vec& c) {
    const auto& a = *h.source.algebra;
    ChainMap out{h.source, h.target, AlgMatrix(a, size(h.source.minus1), size(h.target.minus1)),
                 AlgMatrix(a, size(h.source.zero), size(h.target.zero))};
    for (std::size_t i = 0; i < h.basis.size(); ++i) {
        const Fp s = c(static_cast<Eigen::Index>(i));
        if (s.is_zero()) continue;
        for (Eigen::Index r = 0; r < out.f1.rows(); ++r)
            for (Eigen::Index q = 0; q < out.f1.cols(); ++q) out.f1(r, q) += s * h.basis[i].f1(r, q);
        for (Eigen::Index r = 0; r < out.f0.rows(); ++r)
            for (Eigen::Index q = 0; q < out.f0.cols(); ++q) out.f0(r, q) += s * h.basis[i].f0(r, q);
    }
    return out;
}

// Radical of End_K(x) for an indecomposable reduced x.
std::vector<ChainMap> radical_endomorphisms(const TwoTermComplex& x) {
    const auto& a = *x.algebra;
    const auto& k = a.field();
    const auto end = hom_K(x, x);
    const Eigen::Index e = end.dim();
    if (static_cast<Eigen::Index>(k.p()) <= size(x.minus1) + size(x.zero))
        throw DomainError("field characteristic too small for the trace form");
    std::vector<Mat> tops;
    for (const auto& f : end.basis) tops.push_back(top_matrix(a, f));
    Mat form = zeros(k, e, e);
    for (Eigen::Index i = 0; i < e; ++i)
        for (Eigen::Index j = i; j < e; ++j) form(i, j) = form(j, i) = Mat(tops[i] * tops[j]).trace();
    const Mat rad = kernel_basis(k, form);
    std::vector<ChainMap> out;
    for (Eigen::Index c = 0; c < rad.cols(); ++c) out.push_back(combination(end, rad.col(c)));
    return out;
}

std::vector<ChainMap> radical_maps_K(const std::vector<TwoTermComplex>& us, std::size_t a, std::size_t b) {
    if (a != b) return hom_K(us[a], us[b]).basis;
    return radical_endomorphisms(us[a]);
}

ChainMap zero_map(const TwoTermComplex& x, const TwoTermComplex& y) {
    const auto& a = *x.algebra;
    return {x, y, AlgMatrix(a, size(x.minus1), size(y.minus1)), AlgMatrix(a, size(x.zero), size(y.zero))};
}

TwoTermComplex zero_complex(const AlgebraPtr& a) { return {a, {}, {}, AlgMatrix(*a, 0, 0)}; }

}  // namespace

bool is_indecomposable_K(const TwoTermComplex& x) {
    if (x.is_zero()) return false;
    std::vector<Mat> tops;
    for (const auto& f : hom_K(x, x).basis) tops.push_back(top_matrix(*x.algebra, f));
    return is_local_span(x.algebra->field(), tops);
}

bool is_iso_K(const TwoTermComplex& x, const TwoTermComplex& y) {
    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    if (sorted(x.minus1) != sorted(y.minus1) || sorted(x.zero) != sorted(y.zero)) return false;
    if (x.is_zero()) return true;
    const auto f = hom_K(x, y);
    if (f.dim() == 0) return false;
    const auto g = hom_K(y, x);
    const auto n = size(x.minus1) + size(x.zero);
    for (const auto& a : f.basis)
        for (const auto& b : g.basis)
            if (rank(x.algebra->field(), top_matrix(*x.algebra, compose(b, a))) == n) return true;
    return false;
}

ApproximationK min_right_approx_K(const std::vector<TwoTermComplex>& us, const TwoTermComplex& x) {
    const auto& alg = x.algebra;
    const auto& k = alg->field();
    std::vector<TwoTermComplex> copies;
    std::vector<int> kinds;
    std::vector<ChainMap> chosen;
    for (std::size_t a = 0; a < us.size(); ++a) {
        const auto h = hom_K(us[a], x);
        if (h.dim() == 0) continue;
        // Maps u_a -> x that factor through a radical map u_a -> u_b.
        std::vector<Vec> gens;
        for (std::size_t b = 0; b < us.size(); ++b) {
            const auto rad = radical_maps_K(us, a, b);
            if (rad.empty()) continue;
            const auto g = hom_K(us[b], x);
            for (const auto& r : rad)
                for (const auto& gb : g.basis) gens.push_back(h.coords(compose(gb, r)));
        }
        const Subspace factoring(k, h.dim(), from_columns(k, h.dim(), gens));
        for (auto i : factoring.complement_rows()) {
            copies.push_back(us[a]);
            kinds.push_back(static_cast<int>(a));
            chosen.push_back(h.basis[static_cast<std::size_t>(i)]);
        }
    }
    if (copies.empty()) return {zero_map(zero_complex(alg), x), {}};
    const auto source = direct_sum(copies);
    AlgMatrix f1(*alg, 0, size(x.minus1)), f0(*alg, 0, size(x.zero));
    for (const auto& c : chosen) {
        f1 = vstack(*alg, f1, c.f1);
        f0 = vstack(*alg, f0, c.f0);
    }
    return {{source, x, f1, f0}, kinds};
}

ApproximationK min_left_approx_K(const TwoTermComplex& x, const std::vector<TwoTermComplex>& us) {
    const auto& alg = x.algebra;
    const auto& k = alg->field();
    std::vector<TwoTermComplex> copies;
    std::vector<int> kinds;
    std::vector<ChainMap> chosen;
    for (std::size_t a = 0; a < us.size(); ++a) {
        const auto h = hom_K(x, us[a]);
        if (h.dim() == 0) continue;
        std::vector<Vec> gens;
        for (std::size_t b = 0; b < us.size(); ++b) {
            const auto rad = radical_maps_K(us, b, a);
            if (rad.empty()) continue;
            const auto g = hom_K(x, us[b]);
            for (const auto& r : rad)
                for (const auto& gb : g.basis) gens.push_back(h.coords(compose(r, gb)));
        }
        const Subspace factoring(k, h.dim(), from_columns(k, h.dim(), gens));
        for (auto i : factoring.complement_rows()) {
            copies.push_back(us[a]);
            kinds.push_back(static_cast<int>(a));
            chosen.push_back(h.basis[static_cast<std::size_t>(i)]);
        }
    }
    if (copies.empty()) return {zero_map(x, zero_complex(alg)), {}};
    const auto target = direct_sum(copies);
    AlgMatrix f1(*alg, size(x.minus1), 0), f0(*alg, size(x.zero), 0);
    for (const auto& c : chosen) {
        f1 = hstack(*alg, f1, c.f1);
        f0 = hstack(*alg, f0, c.f0);
    }
    return {{x, target, f1, f0}, kinds};
}

bool is_two_term_silting(const std::vector<TwoTermComplex>& summands) {
    if (summands.empty()) return false;
    const auto& a = *summands.front().algebra;
    return static_cast<int>(summands.size()) == a.num_vertices() && is_rigid(direct_sum(summands));
}

}  // namespace tauseq
