#pragma once

#include "tauseq/linalg.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tauseq {

/// Quiver with monomial relations, as read from an algebra file.
struct QuiverPresentation {
    struct Arrow {
        std::string name;
        int source;
        int target;
    };
    /// A path; the trivial path at v has no arrows and source == target == v.
    struct Path {
        int source;
        int target;
        std::vector<int> arrows;  // traversal order
    };

    std::uint32_t prime = PrimeField::kDefaultPrime;
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    /// Each relation lists arrow indices in traversal order.
    std::vector<std::vector<int>> relations;

    [[nodiscard]] int vertex_index(std::string_view label) const;
    [[nodiscard]] int arrow_index(std::string_view name) const;

    /// Relation-avoiding paths: trivial paths first (one per vertex), then
    /// by length, then lexicographically by arrow index. Throws DomainError
    /// when the set is infinite.
    [[nodiscard]] std::vector<Path> path_basis() const;
    [[nodiscard]] bool avoids_relations(const std::vector<int>& arrows) const;
};

/// Basic finite-dimensional algebra given by structure constants.
///
/// Basis element i acts on the algebra by the matrix left(i), so the product
/// of basis elements b_i * b_j is left(i).col(j). For path algebras the
/// product a * b means "b, then a" (functions compose right to left).
class StructAlgebra {
public:
    StructAlgebra(PrimeField k, std::vector<std::string> labels, std::vector<Mat> left,
                  std::vector<Vec> idempotents, std::vector<std::string> vertex_labels);

    [[nodiscard]] const PrimeField& field() const { return field_; }
    [[nodiscard]] Eigen::Index dim() const { return static_cast<Eigen::Index>(left_.size()); }
    [[nodiscard]] int num_vertices() const { return static_cast<int>(idempotents_.size()); }
    [[nodiscard]] const std::string& label(Eigen::Index i) const { return labels_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] const std::string& vertex_label(int v) const { return vertex_labels_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }

    [[nodiscard]] const Mat& left(Eigen::Index i) const { return left_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] Mat left_mult(const Vec& x) const;
    [[nodiscard]] Mat right_mult(const Vec& y) const;
    [[nodiscard]] Vec multiply(const Vec& x, const Vec& y) const { return left_mult(x) * y; }

    [[nodiscard]] const Vec& idempotent(int v) const { return idempotents_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] const Vec& unit() const { return unit_; }
    [[nodiscard]] Vec basis_vector(Eigen::Index i) const { return unit_vector(field_, dim(), i); }

    /// Jacobson radical, computed from the trace form.
    [[nodiscard]] const Subspace& radical() const { return radical_; }
    /// e_u A e_v.
    [[nodiscard]] const Subspace& corner(int u, int v) const;
    /// Coefficient of e_v in x modulo the radical.
    [[nodiscard]] Fp top_coefficient(const Vec& x, int v) const;
    /// Algebra generators: idempotents, then radical elements spanning rad/rad^2.
    [[nodiscard]] const std::vector<Vec>& generators() const { return generators_; }
    /// dim e_target (rad/rad^2) e_source: the number of arrows source -> target.
    [[nodiscard]] int arrow_count(int source, int target) const;

    /// Inverse of an invertible element of the local ring e_v A e_v.
    [[nodiscard]] Vec local_inverse(const Vec& x, int v) const;

private:
    PrimeField field_;
    std::vector<std::string> labels_;
    std::vector<Mat> left_;
    std::vector<Vec> idempotents_;
    std::vector<std::string> vertex_labels_;
    Vec unit_;
    Subspace radical_;
    std::vector<Subspace> corners_;
    Mat top_;  // num_vertices x dim
    std::vector<Vec> generators_;
    std::vector<int> arrow_counts_;
};

using AlgebraPtr = std::shared_ptr<const StructAlgebra>;

/// Linear map between algebras, multiplicative and unit preserving.
struct AlgebraMap {
    AlgebraPtr source;
    AlgebraPtr target;
    Mat matrix;  // target.dim x source.dim

    [[nodiscard]] Vec operator()(const Vec& x) const { return matrix * x; }
    /// Checks multiplicativity on basis pairs and the unit.
    [[nodiscard]] bool is_homomorphism() const;
};

/// Path algebra of a presentation; the basis is QuiverPresentation::path_basis().
AlgebraPtr path_algebra(const QuiverPresentation& q);

/// Parses an algebra file (see README for the format).
std::pair<QuiverPresentation, AlgebraPtr> parse_algebra(std::string_view text);
std::pair<QuiverPresentation, AlgebraPtr> load_algebra(const std::string& path);

/// Lambda / Lambda e Lambda for the distinguished idempotent e = e_v.
std::pair<AlgebraPtr, AlgebraMap> quotient_by_idempotent_ideal(const AlgebraPtr& a, int v);

struct AlgebraInvariants {
    int idempotents;
    Eigen::Index dim;
    int arrows;
    friend bool operator==(const AlgebraInvariants&, const AlgebraInvariants&) = default;
};

AlgebraInvariants algebra_invariants(const StructAlgebra& a);

/// Builds an algebra from structure constants in a general basis: `products`
/// holds b_i * b_j at index i * dim + j, expressed in the same basis.
AlgebraPtr algebra_from_products(PrimeField k, std::vector<std::string> labels, const std::vector<Vec>& products,
                                 std::vector<Vec> idempotents, std::vector<std::string> vertex_labels);

}  // namespace tauseq
