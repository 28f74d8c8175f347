#include "tauseq/field.hpp"

#include <ostream>

namespace tauseq {

std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.value(); }

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
}

Mat zeros(const PrimeField& k, Eigen::Index rows, Eigen::Index cols) {
    return Mat::Constant(rows, cols, k.zero());
}

Mat identity(const PrimeField& k, Eigen::Index n) {
    Mat m = zeros(k, n, n);
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = k.one();
    return m;
}

Vec zero_vector(const PrimeField& k, Eigen::Index n) { return Vec::Constant(n, k.zero()); }

Vec unit_vector(const PrimeField& k, Eigen::Index n, Eigen::Index i) {
    Vec v = zero_vector(k, n);
    v(i) = k.one();
    return v;
}

Mat make_matrix(const PrimeField& k, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    const auto r = static_cast<Eigen::Index>(rows.size());
    const auto c = r == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(rows.begin()->size());
    Mat m = zeros(k, r, c);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        if (static_cast<Eigen::Index>(row.size()) != c) throw std::invalid_argument("ragged matrix literal");
        Eigen::Index j = 0;
        for (auto x : row) m(i, j++) = k(x);
        ++i;
    }
    return m;
}

}  // namespace tauseq
