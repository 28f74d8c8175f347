#include "tauseq/algebra.hpp"

#include "tauseq/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tauseq {

int QuiverPresentation::vertex_index(std::string_view label) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == label) return static_cast<int>(i);
    return -1;
}

int QuiverPresentation::arrow_index(std::string_view name) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return static_cast<int>(i);
    return -1;
}

bool QuiverPresentation::avoids_relations(const std::vector<int>& path) const {
    for (const auto& rel : relations) {
        if (rel.size() > path.size()) continue;
        if (std::search(path.begin(), path.end(), rel.begin(), rel.end()) != path.end()) return false;
    }
    return true;
}

std::vector<QuiverPresentation::Path> QuiverPresentation::path_basis() const {
    std::vector<Path> out;
    for (int v = 0; v < static_cast<int>(vertices.size()); ++v) out.push_back({v, v, {}});

    // A relation-avoiding path longer than this bound revisits a state (its
    // last L-1 arrows), so it can be pumped indefinitely.
    std::size_t longest = 1;
    for (const auto& r : relations) longest = std::max(longest, r.size());
    std::size_t bound = longest + 1;
    {
        std::size_t states = 1;
        for (std::size_t i = 0; i + 1 < std::max<std::size_t>(longest, 2); ++i) {
            states *= std::max<std::size_t>(arrows.size(), 1);
            if (states > 100000) break;
        }
        bound += states;
    }

    std::vector<Path> level;
    for (int a = 0; a < static_cast<int>(arrows.size()); ++a)
        level.push_back({arrows[a].source, arrows[a].target, {a}});
    std::size_t length = 1;
    while (!level.empty()) {
        if (length > bound) throw DomainError("relations do not bound path length: path algebra is infinite-dimensional");
        out.insert(out.end(), level.begin(), level.end());
        if (out.size() > 100000) throw DomainError("path basis too large");
        std::vector<Path> next;
        for (const auto& p : level)
            for (int a = 0; a < static_cast<int>(arrows.size()); ++a) {
                if (arrows[a].source != p.target) continue;
                Path q{p.source, arrows[a].target, p.arrows};
                q.arrows.push_back(a);
                if (avoids_relations(q.arrows)) next.push_back(std::move(q));
            }
        level = std::move(next);
        ++length;
    }
    return out;
}

StructAlgebra::StructAlgebra(PrimeField k, std::vector<std::string> labels, std::vector<Mat> left,
                             std::vector<Vec> idempotents, std::vector<std::string> vertex_labels)
    : field_(k),
      labels_(std::move(labels)),
      left_(std::move(left)),
      idempotents_(std::move(idempotents)),
      vertex_labels_(std::move(vertex_labels)) {
    const Eigen::Index d = dim();
    if (d == 0) throw DomainError("zero algebra");
    if (static_cast<Eigen::Index>(labels_.size()) != d) throw std::invalid_argument("StructAlgebra: label count");
    if (vertex_labels_.size() != idempotents_.size()) throw std::invalid_argument("StructAlgebra: vertex label count");
    if (static_cast<std::int64_t>(k.p()) <= d)
        throw DomainError("field characteristic " + std::to_string(k.p()) + " must exceed the algebra dimension " +
                          std::to_string(d));
    for (const auto& l : left_)
        if (l.rows() != d || l.cols() != d) throw std::invalid_argument("StructAlgebra: multiplication matrix shape");

    unit_ = zero_vector(k, d);
    for (const auto& e : idempotents_) unit_ += e;

    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            if (!equal(Mat(left_[i] * left_[j]), left_mult(left_[i].col(j))))
                throw DomainError("multiplication is not associative at (" + labels_[i] + ", " + labels_[j] + ")");
    const Mat id = identity(k, d);
    if (!equal(left_mult(unit_), id) || !equal(right_mult(unit_), id))
        throw DomainError("idempotents do not sum to a unit");
    for (int u = 0; u < num_vertices(); ++u)
        for (int v = 0; v < num_vertices(); ++v) {
            const Vec prod = multiply(idempotents_[u], idempotents_[v]);
            if (!equal(prod, u == v ? idempotents_[u] : zero_vector(k, d)))
                throw DomainError("idempotents are not orthogonal");
        }

    Mat trace_form = zeros(k, d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) trace_form(i, j) = Mat(left_[i] * left_[j]).trace();
    radical_ = Subspace(k, d, kernel_basis(k, trace_form));

    corners_.reserve(idempotents_.size() * idempotents_.size());
    for (int u = 0; u < num_vertices(); ++u)
        for (int v = 0; v < num_vertices(); ++v)
            corners_.emplace_back(k, d, Mat(left_mult(idempotents_[u]) * right_mult(idempotents_[v])));

    // A/rad must be k^n with the e_v as basis.
    const Mat q = radical_.quotient_map();
    if (q.rows() != num_vertices()) throw DomainError("algebra is not basic over the prime field");
    Mat e = zeros(k, d, num_vertices());
    for (int v = 0; v < num_vertices(); ++v) e.col(v) = idempotents_[v];
    const auto t = solve(k, Mat(q * e), q);
    if (!t) throw DomainError("idempotents do not span the top of the algebra");
    top_ = *t;

    // Generators: idempotents plus lifts of rad/rad^2, corner by corner.
    Mat rad_sq_gens = zeros(k, d, radical_.dim() * radical_.dim());
    for (Eigen::Index i = 0; i < radical_.dim(); ++i)
        for (Eigen::Index j = 0; j < radical_.dim(); ++j)
            rad_sq_gens.col(i * radical_.dim() + j) = multiply(radical_.basis().col(i), radical_.basis().col(j));
    const Subspace rad_sq(k, d, rad_sq_gens);
    generators_ = idempotents_;
    arrow_counts_.assign(static_cast<std::size_t>(num_vertices() * num_vertices()), 0);
    for (int u = 0; u < num_vertices(); ++u)
        for (int v = 0; v < num_vertices(); ++v) {
            const Mat proj = left_mult(idempotents_[u]) * right_mult(idempotents_[v]);
            Subspace acc(k, d, Mat(proj * rad_sq.basis()));
            const Mat cand = proj * radical_.basis();
            for (Eigen::Index c = 0; c < cand.cols(); ++c) {
                const Vec x = cand.col(c);
                if (acc.contains(x)) continue;
                generators_.push_back(x);
                acc = acc + Subspace(k, d, Mat(x));
                ++arrow_counts_[static_cast<std::size_t>(v * num_vertices() + u)];
            }
        }
}

Mat StructAlgebra::left_mult(const Vec& x) const {
    Mat out = zeros(field_, dim(), dim());
    for (Eigen::Index i = 0; i < dim(); ++i)
        if (!x(i).is_zero()) out += x(i) * left_[i];
    return out;
}

Mat StructAlgebra::right_mult(const Vec& y) const {
    Mat out = zeros(field_, dim(), dim());
    for (Eigen::Index i = 0; i < dim(); ++i) out.col(i) = left_[i] * y;
    return out;
}

const Subspace& StructAlgebra::corner(int u, int v) const {
    return corners_[static_cast<std::size_t>(u * num_vertices() + v)];
}

Fp StructAlgebra::top_coefficient(const Vec& x, int v) const { return Vec(top_ * x)(v); }

int StructAlgebra::arrow_count(int source, int target) const {
    return arrow_counts_[static_cast<std::size_t>(source * num_vertices() + target)];
}

Vec StructAlgebra::local_inverse(const Vec& x, int v) const {
    const Mat& c = corner(v, v).basis();
    const auto sol = solve(field_, Mat(left_mult(x) * c), idempotent(v));
    if (!sol) throw DomainError("element is not invertible in its local corner ring");
    return c * *sol;
}

bool AlgebraMap::is_homomorphism() const {
    const auto& a = *source;
    const auto& b = *target;
    if (!equal(Vec(matrix * a.unit()), b.unit())) return false;
    for (Eigen::Index i = 0; i < a.dim(); ++i)
        for (Eigen::Index j = 0; j < a.dim(); ++j) {
            const Vec lhs = matrix * Vec(a.left(i).col(j));
            const Vec rhs = b.multiply(matrix.col(i), matrix.col(j));
            if (!equal(lhs, rhs)) return false;
        }
    return true;
}

AlgebraPtr algebra_from_products(PrimeField k, std::vector<std::string> labels, const std::vector<Vec>& products,
                                 std::vector<Vec> idempotents, std::vector<std::string> vertex_labels) {
    const auto d = static_cast<Eigen::Index>(labels.size());
    std::vector<Mat> left(static_cast<std::size_t>(d), zeros(k, d, d));
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) left[i].col(j) = products[static_cast<std::size_t>(i * d + j)];
    return std::make_shared<const StructAlgebra>(k, std::move(labels), std::move(left), std::move(idempotents),
                                                 std::move(vertex_labels));
}

namespace {

std::string path_label(const QuiverPresentation& q, const QuiverPresentation::Path& p) {
    if (p.arrows.empty()) return "e" + q.vertices[p.source];
    // Written as a composition: last arrow leftmost.
    std::string s;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
        if (!s.empty()) s += "*";
        s += q.arrows[*it].name;
    }
    return s;
}

}  // namespace

AlgebraPtr path_algebra(const QuiverPresentation& q) {
    const PrimeField k(q.prime);
    const auto paths = q.path_basis();
    const auto d = static_cast<Eigen::Index>(paths.size());
    std::vector<std::string> labels;
    for (const auto& p : paths) labels.push_back(path_label(q, p));

    auto index_of = [&](const QuiverPresentation::Path& p) -> Eigen::Index {
        for (Eigen::Index i = 0; i < d; ++i)
            if (paths[i].source == p.source && paths[i].arrows == p.arrows) return i;
        return -1;
    };

    // b_i * b_j: traverse b_j, then b_i.
    std::vector<Vec> products;
    products.reserve(static_cast<std::size_t>(d * d));
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) {
            Vec out = zero_vector(k, d);
            const auto& first = paths[j];
            const auto& second = paths[i];
            if (first.target == second.source) {
                QuiverPresentation::Path cat{first.source, second.target, first.arrows};
                cat.arrows.insert(cat.arrows.end(), second.arrows.begin(), second.arrows.end());
                if (q.avoids_relations(cat.arrows)) {
                    const auto idx = index_of(cat);
                    if (idx >= 0) out(idx) = k.one();
                }
            }
            products.push_back(out);
        }

    std::vector<Vec> idempotents;
    for (int v = 0; v < static_cast<int>(q.vertices.size()); ++v) idempotents.push_back(unit_vector(k, d, v));
    return algebra_from_products(k, std::move(labels), products, std::move(idempotents), q.vertices);
}

std::pair<QuiverPresentation, AlgebraPtr> parse_algebra(std::string_view text) {
    QuiverPresentation q;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    std::vector<std::vector<std::string>> raw_relations;
    bool saw_field = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        auto fail = [&](const std::string& msg) {
            throw ParseError("line " + std::to_string(lineno) + ": " + msg);
        };
        const auto& kw = tok[0];
        if (kw == "field") {
            if (tok.size() != 2) fail("expected 'field <p>'");
            if (saw_field) fail("duplicate field declaration");
            saw_field = true;
            try {
                std::size_t used = 0;
                const auto p = std::stoul(tok[1], &used);
                if (used != tok[1].size() || p > 0xFFFFFFFFul) fail("bad prime '" + tok[1] + "'");
                if (!is_prime(p)) fail(tok[1] + " is not prime");
                q.prime = static_cast<std::uint32_t>(p);
            } catch (const std::logic_error&) {
                fail("bad prime '" + tok[1] + "'");
            }
        } else if (kw == "vertex") {
            if (tok.size() != 2) fail("expected 'vertex <label>'");
            if (q.vertex_index(tok[1]) >= 0) fail("duplicate vertex '" + tok[1] + "'");
            q.vertices.push_back(tok[1]);
        } else if (kw == "arrow") {
            if (tok.size() != 4) fail("expected 'arrow <name> <src> <dst>'");
            if (q.arrow_index(tok[1]) >= 0) fail("duplicate arrow '" + tok[1] + "'");
            const int s = q.vertex_index(tok[2]), t = q.vertex_index(tok[3]);
            if (s < 0) fail("unknown vertex '" + tok[2] + "'");
            if (t < 0) fail("unknown vertex '" + tok[3] + "'");
            q.arrows.push_back({tok[1], s, t});
        } else if (kw == "rel") {
            raw_relations.emplace_back(tok.begin() + 1, tok.end());
            for (const auto& a : raw_relations.back())
                if (q.arrow_index(a) < 0) fail("unknown arrow '" + a + "'");
        } else {
            fail("unknown keyword '" + kw + "'");
        }
    }
    if (q.vertices.empty()) throw ParseError("algebra file declares no vertices");
    for (const auto& r : raw_relations) {
        if (r.size() < 2) throw DomainError("relation of length " + std::to_string(r.size()) + " is not admissible");
        std::vector<int> idx;
        for (const auto& a : r) idx.push_back(q.arrow_index(a));
        for (std::size_t i = 0; i + 1 < idx.size(); ++i)
            if (q.arrows[idx[i]].target != q.arrows[idx[i + 1]].source)
                throw DomainError("relation is not a path: " + q.arrows[idx[i]].name + " then " +
                                  q.arrows[idx[i + 1]].name);
        q.relations.push_back(std::move(idx));
    }
    auto a = path_algebra(q);
    return {std::move(q), std::move(a)};
}

std::pair<QuiverPresentation, AlgebraPtr> load_algebra(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open algebra file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_algebra(ss.str());
}

std::pair<AlgebraPtr, AlgebraMap> quotient_by_idempotent_ideal(const AlgebraPtr& a, int v) {
    const auto& k = a->field();
    const Eigen::Index d = a->dim();
    if (v < 0 || v >= a->num_vertices()) throw DomainError("idempotent index out of range");
    const Mat ev_left = a->left_mult(a->idempotent(v));
    Mat gens = zeros(k, d, d * d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) gens.col(i * d + j) = a->left(i) * Vec(ev_left.col(j));
    const Subspace ideal(k, d, gens);
    if (ideal.dim() == d) throw DomainError("quotient by the idempotent ideal is the zero algebra");

    const auto rows = ideal.complement_rows();
    const Mat q = ideal.quotient_map();
    const auto qd = static_cast<Eigen::Index>(rows.size());
    std::vector<std::string> labels;
    for (auto r : rows) labels.push_back(a->label(r));
    std::vector<Vec> products;
    for (Eigen::Index i = 0; i < qd; ++i)
        for (Eigen::Index j = 0; j < qd; ++j) products.push_back(q * Vec(a->left(rows[i]).col(rows[j])));
    std::vector<Vec> idem;
    std::vector<std::string> vlabels;
    for (int u = 0; u < a->num_vertices(); ++u) {
        if (u == v) continue;
        idem.push_back(q * a->idempotent(u));
        vlabels.push_back(a->vertex_label(u));
    }
    auto b = algebra_from_products(k, std::move(labels), products, std::move(idem), std::move(vlabels));
    AlgebraMap map{a, b, q};
    return {b, std::move(map)};
}

AlgebraInvariants algebra_invariants(const StructAlgebra& a) {
    int arrows = 0;
    for (int u = 0; u < a.num_vertices(); ++u)
        for (int v = 0; v < a.num_vertices(); ++v) arrows += a.arrow_count(u, v);
    return {a.num_vertices(), a.dim(), arrows};
}

}  // namespace tauseq
