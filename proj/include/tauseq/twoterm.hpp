#pragma once

#include "tauseq/module.hpp"

#include <optional>
#include <vector>

namespace tauseq {

/// Matrix of algebra elements describing a map between sums of
/// indecomposable projectives. Entry (i, j) is a map P_{u_i} -> P_{v_j}
/// given by right multiplication, so it lies in e_{u_i} A e_{v_j} and the
/// composite "x, then y" is the product x * y.
class AlgMatrix {
public:
    AlgMatrix() = default;
    AlgMatrix(const StructAlgebra& a, Eigen::Index rows, Eigen::Index cols);

    [[nodiscard]] Eigen::Index rows() const { return rows_; }
    [[nodiscard]] Eigen::Index cols() const { return cols_; }
    Vec& operator()(Eigen::Index i, Eigen::Index j) { return e_[static_cast<std::size_t>(i * cols_ + j)]; }
    const Vec& operator()(Eigen::Index i, Eigen::Index j) const { return e_[static_cast<std::size_t>(i * cols_ + j)]; }

    [[nodiscard]] AlgMatrix without(std::optional<Eigen::Index> row, std::optional<Eigen::Index> col) const;

private:
    Eigen::Index rows_ = 0;
    Eigen::Index cols_ = 0;
    std::vector<Vec> e_;
};

/// Product of algebra elements using the structure constants.
Vec multiply(const StructAlgebra& a, const Vec& x, const Vec& y);
AlgMatrix multiply(const StructAlgebra& a, const AlgMatrix& x, const AlgMatrix& y);
AlgMatrix add(const AlgMatrix& x, const AlgMatrix& y);
AlgMatrix negate(const AlgMatrix& x);
/// Block matrices: [x | y] and [x ; y].
AlgMatrix hstack(const StructAlgebra& a, const AlgMatrix& x, const AlgMatrix& y);
AlgMatrix vstack(const StructAlgebra& a, const AlgMatrix& x, const AlgMatrix& y);

/// A complex P^{-1} -> P^0 of projectives, each degree listed by the
/// vertices of its indecomposable summands.
struct TwoTermComplex {
    AlgebraPtr algebra;
    std::vector<int> minus1;
    std::vector<int> zero;
    AlgMatrix d;  // minus1.size() x zero.size()

    [[nodiscard]] bool is_zero() const { return minus1.empty() && zero.empty(); }
};

/// 0 -> P (the stalk complex of P in degree 0).
TwoTermComplex stalk(const AlgebraPtr& a, const std::vector<int>& vertices);
/// P[1], i.e. P -> 0.
TwoTermComplex shifted(const AlgebraPtr& a, const std::vector<int>& vertices);
TwoTermComplex direct_sum(const std::vector<TwoTermComplex>& parts);

struct ChainMap {
    TwoTermComplex source;
    TwoTermComplex target;
    AlgMatrix f1;  // source.minus1 x target.minus1
    AlgMatrix f0;  // source.zero x target.zero

    [[nodiscard]] bool commutes() const;
};

ChainMap identity_map(const TwoTermComplex& x);
/// g after f.
ChainMap compose(const ChainMap& g, const ChainMap& f);

/// Coordinates on Hom(sum P_rows, sum P_cols) built from the corner spaces.
class HomLayout {
public:
    HomLayout() = default;
    HomLayout(const StructAlgebra& a, std::vector<int> rows, std::vector<int> cols);
    [[nodiscard]] Eigen::Index dim() const { return dim_; }
    [[nodiscard]] Vec coords(const AlgMatrix& m) const;
    [[nodiscard]] AlgMatrix element(const Vec& c) const;

private:
    const StructAlgebra* a_ = nullptr;
    std::vector<int> rows_;
    std::vector<int> cols_;
    std::vector<Eigen::Index> offset_;
    Eigen::Index dim_ = 0;
};

/// Hom in the homotopy category: chain maps modulo null-homotopic ones.
struct HomK {
    TwoTermComplex source;
    TwoTermComplex target;
    std::vector<ChainMap> basis;

    [[nodiscard]] Eigen::Index dim() const { return static_cast<Eigen::Index>(basis.size()); }
    /// Coordinates of a chain map modulo homotopy.
    [[nodiscard]] Vec coords(const ChainMap& f) const;

    HomLayout layout1;
    HomLayout layout0;
    Mat representatives;  // basis followed by the homotopies, as columns
};

HomK hom_K(const TwoTermComplex& x, const TwoTermComplex& y);
/// dim Hom_K(x, y[shift]) for shift in {-1, 0, 1}.
Eigen::Index hom_K_dim(const TwoTermComplex& x, const TwoTermComplex& y, int shift);
bool is_rigid(const TwoTermComplex& x);

/// Homotopy-equivalent complex with radical differential.
TwoTermComplex reduce_complex(const TwoTermComplex& x);

/// The sum of the indecomposable projectives P_v as a module, in the order given.
FdModule projective_sum(const AlgebraPtr& a, const std::vector<int>& vertices);
/// The module map of an algebra matrix between projective sums.
Mat realize(const AlgebraPtr& a, const std::vector<int>& rows, const std::vector<int>& cols, const AlgMatrix& m);
ModuleMap differential(const TwoTermComplex& x);

FdModule h0(const TwoTermComplex& x);
FdModule hminus1(const TwoTermComplex& x);

/// Minimal projective presentation with the cover P^0 -> M.
struct Presentation {
    TwoTermComplex complex;
    FdModule p0;
    Mat cover;  // M.dim x p0.dim
};
Presentation min_presentation(const FdModule& m);
FdModule tau(const FdModule& m);
Eigen::Index ext1_dim(const FdModule& m, const FdModule& n);

/// A chain map between presentations inducing the module map on H^0.
ChainMap lift_map(const ModuleMap& phi, const Presentation& px, const Presentation& py);

/// cone(alpha)[-1], reduced; empty when it is not two-term (H^0(alpha) not epi).
std::optional<TwoTermComplex> try_cone_shift(const ChainMap& alpha);
/// As above, throwing DomainError when the cone is not two-term.
TwoTermComplex cone_shift(const ChainMap& alpha);
/// cone(beta), reduced; empty when it is not two-term.
std::optional<TwoTermComplex> try_cone(const ChainMap& beta);

/// End_K(x) is local, i.e. x is indecomposable in the homotopy category.
bool is_indecomposable_K(const TwoTermComplex& x);
/// Isomorphism in K for complexes known to be indecomposable and reduced.
bool is_iso_K(const TwoTermComplex& x, const TwoTermComplex& y);

/// Minimal approximation by add of the given pairwise non-isomorphic
/// indecomposable complexes; kinds[c] indexes the c-th copy.
struct ApproximationK {
    ChainMap map;
    std::vector<int> kinds;
};
ApproximationK min_right_approx_K(const std::vector<TwoTermComplex>& us, const TwoTermComplex& x);
ApproximationK min_left_approx_K(const TwoTermComplex& x, const std::vector<TwoTermComplex>& us);

/// Rigid with as many indecomposable summands as the algebra has vertices.
bool is_two_term_silting(const std::vector<TwoTermComplex>& summands);

}  // namespace tauseq
