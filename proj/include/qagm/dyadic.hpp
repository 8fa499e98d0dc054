#ifndef QAGM_DYADIC_HPP
#define QAGM_DYADIC_HPP

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <initializer_list>
#include <ostream>

#include "qagm/scalar.hpp"

namespace qagm {

using BigInt = boost::multiprecision::cpp_int;

/// Exact number of the form (re + im*i) / 2^k with Gaussian-integer numerator.
/// Canonical form: k == 0, or numerator not divisible by 2.
class DyadicGaussian {
public:
    DyadicGaussian() = default;
    DyadicGaussian(long re) : re_(re) { normalize(); }
    DyadicGaussian(BigInt re, BigInt im, int k = 0)
        : re_(std::move(re)), im_(std::move(im)), k_(k) {
        normalize();
    }
    static DyadicGaussian i_unit() { return {0, 1}; }
    static DyadicGaussian half(long re, long im) { return {re, im, 1}; } // (re+im*i)/2

    const BigInt& num_re() const { return re_; }
    const BigInt& num_im() const { return im_; }
    int exponent() const { return k_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_integer() const { return k_ == 0 && im_ == 0; }

    friend DyadicGaussian operator+(const DyadicGaussian& x, const DyadicGaussian& y) {
        int k = std::max(x.k_, y.k_);
        BigInt sx = BigInt(1) << (k - x.k_), sy = BigInt(1) << (k - y.k_);
        return {x.re_ * sx + y.re_ * sy, x.im_ * sx + y.im_ * sy, k};
    }
    friend DyadicGaussian operator-(const DyadicGaussian& x, const DyadicGaussian& y) {
        return x + (-y);
    }
    DyadicGaussian operator-() const { return {-re_, -im_, k_}; }
    friend DyadicGaussian operator*(const DyadicGaussian& x, const DyadicGaussian& y) {
        return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_, x.k_ + y.k_};
    }
    DyadicGaussian conj() const { return {re_, -im_, k_}; }

    /// Exact quotient; throws if x/y is not dyadic Gaussian.
    friend DyadicGaussian div_exact(const DyadicGaussian& x, const DyadicGaussian& y) {
        if (y.is_zero()) throw domain_error("DyadicGaussian: division by zero");
        BigInt nre = x.re_ * y.re_ + x.im_ * y.im_;
        BigInt nim = x.im_ * y.re_ - x.re_ * y.im_;
        BigInt d = y.re_ * y.re_ + y.im_ * y.im_;
        int s = 0;
        while ((d & 1) == 0) { d >>= 1; ++s; }
        if (nre % d != 0 || nim % d != 0)
            throw domain_error("DyadicGaussian: quotient is not dyadic");
        return {nre / d, nim / d, x.k_ - y.k_ + s};
    }

    friend bool operator==(const DyadicGaussian& x, const DyadicGaussian& y) {
        return x.re_ == y.re_ && x.im_ == y.im_ && x.k_ == y.k_;
    }
    friend bool operator!=(const DyadicGaussian& x, const DyadicGaussian& y) { return !(x == y); }

    Cplx to_complex() const {
        const Real s = std::ldexp(1.0, -k_);
        return {static_cast<Real>(re_) * s, static_cast<Real>(im_) * s};
    }

    friend std::ostream& operator<<(std::ostream& os, const DyadicGaussian& x) {
        os << "(" << x.re_ << (x.im_ >= 0 ? "+" : "") << x.im_ << "i)";
        if (x.k_ > 0) os << "/2^" << x.k_;
        return os;
    }

private:
    void normalize() {
        if (re_ == 0 && im_ == 0) { k_ = 0; return; }
        while (k_ > 0 && (re_ & 1) == 0 && (im_ & 1) == 0) {
            re_ >>= 1;
            im_ >>= 1;
            --k_;
        }
        if (k_ < 0) {
            re_ <<= -k_;
            im_ <<= -k_;
            k_ = 0;
        }
    }

    BigInt re_ = 0, im_ = 0;
    int k_ = 0;
};

/// Dense N x N matrix over DyadicGaussian; exact group arithmetic only.
template <int N>
struct GaussMat {
    std::array<DyadicGaussian, N * N> a{};

    DyadicGaussian& operator()(int r, int c) { return a[r * N + c]; }
    const DyadicGaussian& operator()(int r, int c) const { return a[r * N + c]; }

    static GaussMat identity() {
        GaussMat m;
        for (int j = 0; j < N; ++j) m(j, j) = DyadicGaussian(1);
        return m;
    }
    static GaussMat zero() { return {}; }

    friend GaussMat operator*(const GaussMat& x, const GaussMat& y) {
        GaussMat r;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                DyadicGaussian s;
                for (int k = 0; k < N; ++k) s = s + x(i, k) * y(k, j);
                r(i, j) = s;
            }
        return r;
    }
    friend GaussMat operator+(const GaussMat& x, const GaussMat& y) {
        GaussMat r;
        for (int i = 0; i < N * N; ++i) r.a[i] = x.a[i] + y.a[i];
        return r;
    }
    friend GaussMat operator-(const GaussMat& x, const GaussMat& y) {
        GaussMat r;
        for (int i = 0; i < N * N; ++i) r.a[i] = x.a[i] - y.a[i];
        return r;
    }
    GaussMat operator-() const {
        GaussMat r;
        for (int i = 0; i < N * N; ++i) r.a[i] = -a[i];
        return r;
    }
    friend GaussMat operator*(const DyadicGaussian& s, const GaussMat& x) {
        GaussMat r;
        for (int i = 0; i < N * N; ++i) r.a[i] = s * x.a[i];
        return r;
    }
    GaussMat transpose() const {
        GaussMat r;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) r(i, j) = (*this)(j, i);
        return r;
    }
    GaussMat conjugate() const {
        GaussMat r;
        for (int i = 0; i < N * N; ++i) r.a[i] = a[i].conj();
        return r;
    }
    GaussMat adjoint() const { return conjugate().transpose(); }

    friend bool operator==(const GaussMat& x, const GaussMat& y) { return x.a == y.a; }
    friend bool operator!=(const GaussMat& x, const GaussMat& y) { return !(x.a == y.a); }

    bool is_real() const {
        for (const auto& z : a)
            if (!z.is_real()) return false;
        return true;
    }
    bool is_integral() const {
        for (const auto& z : a)
            if (z.exponent() != 0) return false;
        return true;
    }

    /// Cofactor-expansion determinant (fine for N <= 4; 8x8 group elements
    /// never need an exact determinant here).
    DyadicGaussian det() const {
        static_assert(N <= 4, "exact determinant only for small matrices");
        if constexpr (N == 1) return a[0];
        else {
            DyadicGaussian s;
            int sign = 1;
            for (int c = 0; c < N; ++c) {
                GaussMat<N - 1> minor;
                for (int i = 1; i < N; ++i) {
                    int jj = 0;
                    for (int j = 0; j < N; ++j) {
                        if (j == c) continue;
                        minor(i - 1, jj++) = (*this)(i, j);
                    }
                }
                DyadicGaussian term = (*this)(0, c) * minor.det();
                s = (sign > 0) ? s + term : s - term;
                sign = -sign;
            }
            return s;
        }
    }
};

/// Assemble an 8x8 matrix from four 4x4 blocks.
inline GaussMat<8> blocks8(const GaussMat<4>& a11, const GaussMat<4>& a12,
                           const GaussMat<4>& a21, const GaussMat<4>& a22) {
    GaussMat<8> m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            m(i, j) = a11(i, j);
            m(i, j + 4) = a12(i, j);
            m(i + 4, j) = a21(i, j);
            m(i + 4, j + 4) = a22(i, j);
        }
    return m;
}

template <int N>
GaussMat<N / 2> block_of(const GaussMat<N>& m, int br, int bc) {
    GaussMat<N / 2> r;
    for (int i = 0; i < N / 2; ++i)
        for (int j = 0; j < N / 2; ++j) r(i, j) = m(br * N / 2 + i, bc * N / 2 + j);
    return r;
}

} // namespace qagm

#endif
