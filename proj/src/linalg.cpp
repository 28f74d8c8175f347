#include "tauseq/linalg.hpp"

#include <algorithm>

namespace tauseq {

namespace {

std::uint32_t find_modulus(const Mat& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (m(i, j).modulus() != 0) return m(i, j).modulus();
    return 0;
}

RowEchelon row_echelon_generic(Mat m) {
    RowEchelon out;
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = r; i < rows; ++i)
            if (!m(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r) m.row(piv).swap(m.row(r));
        const Fp inv = m(r, c).inverse();
        for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Fp f = m(i, c);
            for (Eigen::Index j = c; j < cols; ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

}  // namespace

RowEchelon row_echelon(Mat m) {
    const std::uint64_t p = find_modulus(m);
    if (p == 0) return row_echelon_generic(std::move(m));

    // Plain residues in a row-major buffer; this loop dominates every Hom and
    // kernel computation.
    const Eigen::Index rows = m.rows(), cols = m.cols();
    std::vector<std::uint64_t> a(static_cast<std::size_t>(rows * cols));
    const PrimeField k(static_cast<std::uint32_t>(p));
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) a[static_cast<std::size_t>(i * cols + j)] = (k.zero() + m(i, j)).value();
    auto at = [&](Eigen::Index i, Eigen::Index j) -> std::uint64_t& { return a[static_cast<std::size_t>(i * cols + j)]; };

    RowEchelon out;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = r; i < rows; ++i)
            if (at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (Eigen::Index j = c; j < cols; ++j) std::swap(at(piv, j), at(r, j));
        const std::uint64_t inv = Fp(static_cast<std::uint32_t>(at(r, c)), static_cast<std::uint32_t>(p)).inverse().value();
        for (Eigen::Index j = c; j < cols; ++j) at(r, j) = at(r, j) * inv % p;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || at(i, c) == 0) continue;
            const std::uint64_t f = p - at(i, c);
            for (Eigen::Index j = c; j < cols; ++j)
                if (at(r, j) != 0) at(i, j) = (at(i, j) + f * at(r, j)) % p;
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = zeros(k, rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) out.reduced(i, j) = Fp(static_cast<std::uint32_t>(at(i, j)), static_cast<std::uint32_t>(p));
    return out;
}

Eigen::Index rank(const PrimeField&, const Mat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return row_echelon(m).rank();
}

Mat kernel_basis(const PrimeField& k, const Mat& m) {
    const Eigen::Index n = m.cols();
    if (m.rows() == 0) return identity(k, n);
    const auto ech = row_echelon(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (auto c : ech.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    Mat basis = zeros(k, n, n - ech.rank());
    Eigen::Index col = 0;
    for (Eigen::Index f = 0; f < n; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        basis(f, col) = k.one();
        for (Eigen::Index r = 0; r < ech.rank(); ++r) basis(ech.pivots[static_cast<std::size_t>(r)], col) = -ech.reduced(r, f);
        ++col;
    }
    return basis;
}

std::optional<Vec> solve(const PrimeField& k, const Mat& m, const Vec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
    auto x = solve(k, m, Mat(b));
    if (!x) return std::nullopt;
    return Vec(x->col(0));
}

std::optional<Mat> solve(const PrimeField& k, const Mat& m, const Mat& b) {
    const Eigen::Index n = m.cols();
    if (b.rows() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong height");
    Mat x = zeros(k, n, b.cols());
    if (m.rows() == 0) return x;
    const auto ech = row_echelon(hcat(k, m, b));
    for (Eigen::Index r = 0; r < ech.rank(); ++r)
        if (ech.pivots[static_cast<std::size_t>(r)] >= n) return std::nullopt;
    for (Eigen::Index r = 0; r < ech.rank(); ++r)
        x.row(ech.pivots[static_cast<std::size_t>(r)]) = ech.reduced.block(r, n, 1, b.cols());
    return x;
}

Mat hcat(const PrimeField& k, const Mat& a, const Mat& b) {
    if (a.cols() == 0) return b;
    if (b.cols() == 0) return a;
    if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row mismatch");
    Mat out = zeros(k, a.rows(), a.cols() + b.cols());
    out << a, b;
    return out;
}

Mat vcat(const PrimeField& k, const Mat& a, const Mat& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw std::invalid_argument("vcat: column mismatch");
    Mat out = zeros(k, a.rows() + b.rows(), a.cols());
    out << a, b;
    return out;
}

Mat from_columns(const PrimeField& k, Eigen::Index rows, const std::vector<Vec>& columns) {
    Mat out = zeros(k, rows, static_cast<Eigen::Index>(columns.size()));
    for (std::size_t j = 0; j < columns.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = columns[j];
    return out;
}

Vec flatten(const Mat& m) { return Eigen::Map<const Vec>(m.data(), m.size()); }

Mat unflatten(const Vec& v, Eigen::Index rows, Eigen::Index cols) {
    return Eigen::Map<const Mat>(v.data(), rows, cols);
}

Subspace::Subspace(const PrimeField& k, Eigen::Index ambient, const Mat& generators)
    : field_(k), ambient_(ambient) {
    if (generators.cols() > 0 && generators.rows() != ambient)
        throw std::invalid_argument("Subspace: generator height differs from ambient dimension");
    if (generators.cols() == 0 || ambient == 0) {
        basis_ = zeros(k, ambient, 0);
        return;
    }
    // Row-reduce the transpose: its rows become the echelon basis.
    const auto ech = row_echelon(generators.transpose());
    basis_ = ech.reduced.topRows(ech.rank()).transpose();
    pivots_ = ech.pivots;
}

Subspace Subspace::whole(const PrimeField& k, Eigen::Index n) { return {k, n, identity(k, n)}; }

Vec Subspace::reduce(const Vec& v) const {
    Vec r = v;
    for (Eigen::Index c = 0; c < dim(); ++c) {
        const Fp f = r(pivots_[static_cast<std::size_t>(c)]);
        if (!f.is_zero()) r -= f * basis_.col(c);
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

Vec Subspace::coords(const Vec& v) const {
    Vec c = zero_vector(field_, dim());
    for (Eigen::Index i = 0; i < dim(); ++i) c(i) = v(pivots_[static_cast<std::size_t>(i)]);
    assert(equal(basis_ * c + zero_vector(field_, ambient_), v));
    return c;
}

Mat Subspace::coords(const Mat& m) const {
    Mat c = zeros(field_, dim(), m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j) c.col(j) = coords(Vec(m.col(j)));
    return c;
}

std::vector<Eigen::Index> Subspace::complement_rows() const {
    std::vector<Eigen::Index> out;
    for (Eigen::Index i = 0; i < ambient_; ++i)
        if (std::find(pivots_.begin(), pivots_.end(), i) == pivots_.end()) out.push_back(i);
    return out;
}

Mat Subspace::quotient_map() const {
    const auto rows = complement_rows();
    Mat q = zeros(field_, static_cast<Eigen::Index>(rows.size()), ambient_);
    for (Eigen::Index j = 0; j < ambient_; ++j) {
        const Vec r = reduce(unit_vector(field_, ambient_, j));
        for (std::size_t i = 0; i < rows.size(); ++i) q(static_cast<Eigen::Index>(i), j) = r(rows[i]);
    }
    return q;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("subspace sum: ambient mismatch");
    if (a.dim() == 0) return b;
    if (b.dim() == 0) return a;
    Mat g(a.ambient(), a.dim() + b.dim());
    g << a.basis(), b.basis();
    return {a.field(), a.ambient(), g};
}

Subspace intersect(const PrimeField& k, const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("subspace intersection: ambient mismatch");
    if (a.dim() == 0 || b.dim() == 0) return {k, a.ambient(), zeros(k, a.ambient(), 0)};
    // x = A s = B t  <=>  [A | -B] (s,t) = 0
    const Mat sys = hcat(k, a.basis(), -b.basis());
    const Mat ker = kernel_basis(k, sys);
    return {k, a.ambient(), a.basis() * ker.topRows(a.dim())};
}

}  // namespace tauseq
