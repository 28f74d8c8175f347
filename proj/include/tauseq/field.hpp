#pragma once

#include <Eigen/Core>

#include <cassert>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace tauseq {

/// Element of the prime field F_p.
///
/// The modulus travels with the value so that matrices built from different
/// algebras cannot be mixed silently. A modulus of zero marks an untyped
/// small-integer literal (Eigen creates Scalar(0), Scalar(1) and Scalar(-1)
/// internally); it adopts the modulus of the other operand on first use.
class Fp {
public:
    constexpr Fp() = default;
    constexpr explicit Fp(int literal) : v_(static_cast<std::uint32_t>(literal)), p_(0) {}
    constexpr Fp(std::uint32_t value, std::uint32_t modulus) : v_(value), p_(modulus) {}

    [[nodiscard]] constexpr std::uint32_t value() const { return v_; }
    [[nodiscard]] constexpr std::uint32_t modulus() const { return p_; }
    [[nodiscard]] constexpr bool is_zero() const { return v_ == 0; }

    friend Fp operator+(Fp a, Fp b) {
        if (a.p_ == b.p_ && a.p_ != 0) [[likely]] {
            const std::uint32_t s = a.v_ + b.v_;
            return {s >= a.p_ ? s - a.p_ : s, a.p_};
        }
        const auto p = common(a, b);
        if (p == 0) return Fp(a.literal() + b.literal());
        return {static_cast<std::uint32_t>((std::uint64_t(a.residue(p)) + b.residue(p)) % p), p};
    }
    friend Fp operator-(Fp a, Fp b) {
        if (a.p_ == b.p_ && a.p_ != 0) [[likely]]
            return {a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_};
        const auto p = common(a, b);
        if (p == 0) return Fp(a.literal() - b.literal());
        return {static_cast<std::uint32_t>((std::uint64_t(a.residue(p)) + p - b.residue(p)) % p), p};
    }
    friend Fp operator-(Fp a) {
        if (a.p_ == 0) return Fp(-a.literal());
        return {a.v_ == 0 ? 0u : a.p_ - a.v_, a.p_};
    }
    friend Fp operator*(Fp a, Fp b) {
        if (a.p_ == b.p_ && a.p_ != 0) [[likely]]
            return {static_cast<std::uint32_t>(std::uint64_t(a.v_) * b.v_ % a.p_), a.p_};
        const auto p = common(a, b);
        if (p == 0) return Fp(a.literal() * b.literal());
        return {static_cast<std::uint32_t>(std::uint64_t(a.residue(p)) * b.residue(p) % p), p};
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }

    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }
    Fp& operator/=(Fp b) { return *this = *this / b; }

    friend bool operator==(Fp a, Fp b) {
        const auto p = common(a, b);
        return p == 0 ? a.v_ == b.v_ : a.residue(p) == b.residue(p);
    }
    friend bool operator!=(Fp a, Fp b) { return !(a == b); }

    [[nodiscard]] Fp pow(std::uint64_t e) const {
        Fp base = *this, acc(1u, p_);
        while (e != 0) {
            if (e & 1u) acc *= base;
            base *= base;
            e >>= 1u;
        }
        return acc;
    }

    [[nodiscard]] Fp inverse() const {
        if (v_ == 0) throw std::domain_error("division by zero in F_p");
        if (p_ == 0) {
            if (literal() != 1 && literal() != -1) throw std::domain_error("inverse of untyped literal");
            return *this;
        }
        return pow(p_ - 2);
    }

private:
    static std::uint32_t common(Fp a, Fp b) {
        assert(a.p_ == 0 || b.p_ == 0 || a.p_ == b.p_);
        return a.p_ != 0 ? a.p_ : b.p_;
    }
    // Untyped literals are small signed integers stored in two's complement.
    [[nodiscard]] constexpr int literal() const { return static_cast<int>(v_); }
    [[nodiscard]] std::uint32_t residue(std::uint32_t p) const {
        if (p_ != 0) return v_;
        const auto r = static_cast<std::int64_t>(literal()) % static_cast<std::int64_t>(p);
        return static_cast<std::uint32_t>(r < 0 ? r + p : r);
    }

    std::uint32_t v_ = 0;
    std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, Fp x);

/// The prime field F_p; hands out typed scalars.
class PrimeField {
public:
    static constexpr std::uint32_t kDefaultPrime = 32003;

    explicit PrimeField(std::uint32_t p = kDefaultPrime);

    [[nodiscard]] std::uint32_t p() const { return p_; }
    [[nodiscard]] Fp operator()(std::int64_t x) const {
        auto r = x % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return {static_cast<std::uint32_t>(r), p_};
    }
    [[nodiscard]] Fp zero() const { return {0u, p_}; }
    [[nodiscard]] Fp one() const { return {1u, p_}; }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace tauseq

namespace Eigen {
template <>
struct NumTraits<tauseq::Fp> : GenericNumTraits<tauseq::Fp> {
    using Real = tauseq::Fp;
    using NonInteger = tauseq::Fp;
    using Literal = tauseq::Fp;
    using Nested = tauseq::Fp;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 4
    };
    static tauseq::Fp epsilon() { return tauseq::Fp(0); }
    static tauseq::Fp dummy_precision() { return tauseq::Fp(0); }
    static int digits10() { return 0; }
};
}  // namespace Eigen

namespace tauseq {

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Mat = MatrixX<Fp>;
using Vec = VectorX<Fp>;

/// Typed zero/identity helpers; Eigen's own Zero() yields untyped literals.
Mat zeros(const PrimeField& k, Eigen::Index rows, Eigen::Index cols);
Mat identity(const PrimeField& k, Eigen::Index n);
Vec zero_vector(const PrimeField& k, Eigen::Index n);
Vec unit_vector(const PrimeField& k, Eigen::Index n, Eigen::Index i);

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) return false;
    return true;
}

template <class A, class B>
bool equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

/// Matrix from nested integer rows, reduced into the field.
Mat make_matrix(const PrimeField& k, std::initializer_list<std::initializer_list<std::int64_t>> rows);

}  // namespace tauseq
