#ifndef QAGM_BALL_HPP
#define QAGM_BALL_HPP

#include <Eigen/Dense>

#include "qagm/dyadic.hpp"
#include "qagm/scalar.hpp"
#include "qagm/theta.hpp"

namespace qagm {

// ---------------------------------------------------------------------------
// Exact layer: the Hermitian form U, the named group elements, ball vectors.
// ---------------------------------------------------------------------------

using GaussVec4 = std::array<DyadicGaussian, 4>;

inline GaussMat<4> u_mat() {
    GaussMat<4> u;
    u(0, 1) = u(1, 0) = u(2, 2) = u(3, 3) = DyadicGaussian(1);
    return u;
}

namespace detail {
inline GaussMat<4> from_rows(std::initializer_list<std::initializer_list<DyadicGaussian>> rows) {
    GaussMat<4> m;
    int r = 0;
    for (const auto& row : rows) {
        int c = 0;
        for (const auto& z : row) m(r, c++) = z;
        ++r;
    }
    return m;
}
} // namespace detail

inline GaussMat<4> mat_g01() {
    using D = DyadicGaussian;
    return detail::from_rows({{D(1), D(0), D(0), D(0)},
                              {D(-1, 1), D(1), D(-1, -1), D(0)},
                              {D(1, 1), D(0), D(0, 1), D(0)},
                              {D(0), D(0), D(0), D(1)}});
}

inline GaussMat<4> mat_g12() {
    using D = DyadicGaussian;
    return detail::from_rows({{D(1), D(0), D(0), D(0)},
                              {D(0), D(1), D(0), D(0)},
                              {D(0), D(0), D(1, 1, 1), D(1, 1, 1)},
                              {D(0), D(0), D(-1, -1, 1), D(1, 1, 1)}});
}

inline GaussMat<4> mat_g13() {
    using D = DyadicGaussian;
    return detail::from_rows({{D(1), D(0), D(0), D(0)},
                              {D(0), D(1), D(0), D(0)},
                              {D(0), D(0), D(1, 1, 1), D(1, -1, 1)},
                              {D(0), D(0), D(1, -1, 1), D(1, 1, 1)}});
}

inline GaussMat<4> mat_g23() {
    using D = DyadicGaussian;
    GaussMat<4> m = GaussMat<4>::identity();
    m(3, 3) = D(0, 1);
    return m;
}

/// The mean generating transformation R = (1/(1-i)) diag-block(1, 2, [[1,-i],[-i,1]]).
inline GaussMat<4> mat_R() {
    using D = DyadicGaussian;
    // 1/(1-i) = (1+i)/2
    const D s(1, 1, 1);
    GaussMat<4> m;
    m(0, 0) = s;
    m(1, 1) = s * D(2);
    m(2, 2) = s;
    m(2, 3) = s * D(0, -1);
    m(3, 2) = s * D(0, -1);
    m(3, 3) = s;
    return m;
}

inline GaussMat<4> mat_R1() {
    using D = DyadicGaussian;
    GaussMat<4> m;
    m(0, 0) = D(1, 1, 1); // (1+i)/2
    m(1, 1) = D(1, 1);
    m(2, 2) = D(1);
    m(3, 3) = D(1);
    return m;
}

inline GaussMat<2> mat_T() {
    GaussMat<2> t;
    t(0, 0) = t(0, 1) = t(1, 0) = DyadicGaussian(1, 0, 1);
    t(1, 1) = DyadicGaussian(-1, 0, 1);
    return t;
}

inline GaussMat<4> mat_B1() {
    using D = DyadicGaussian;
    GaussMat<4> m;
    m(0, 2) = D(1);
    m(1, 1) = D(1);
    m(2, 0) = D(-1);
    m(3, 3) = D(1);
    return m;
}

inline GaussMat<4> mat_B2() {
    using D = DyadicGaussian;
    GaussMat<4> m;
    m(0, 1) = D(1);
    m(1, 0) = D(1);
    m(2, 3) = D(1);
    m(3, 2) = D(1);
    return m;
}

/// M1 = B2 B1 S1 B1^{-1} = T (+) T^{-1} with T^{-1} = 2T.
inline GaussMat<4> mat_M1() {
    GaussMat<4> m;
    const auto t = mat_T();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            m(i, j) = t(i, j);
            m(i + 2, j + 2) = DyadicGaussian(2) * t(i, j);
        }
    return m;
}

inline GaussMat<4> mat_S1() {
    using D = DyadicGaussian;
    return detail::from_rows({{D(1), D(0), D(0), D(1)},
                              {D(0), D(1, 0, 1), D(1, 0, 1), D(0)},
                              {D(0), D(-1, 0, 1), D(1, 0, 1), D(0)},
                              {D(-1), D(0), D(0), D(1)}});
}

inline GaussMat<8> mat_J8() {
    GaussMat<8> j;
    for (int k = 0; k < 4; ++k) {
        j(k, k + 4) = DyadicGaussian(-1);
        j(k + 4, k) = DyadicGaussian(1);
    }
    return j;
}

inline GaussMat<8> mat_Jswap() { return -mat_J8(); } // [[O,-I],[I,O]]

/// N: N11 = N22 = diag(1,0,1,1), N21 = -N12 = diag(0,1,0,0).
inline GaussMat<8> mat_N() {
    GaussMat<8> m;
    using D = DyadicGaussian;
    for (int k : {0, 2, 3}) {
        m(k, k) = D(1);
        m(k + 4, k + 4) = D(1);
    }
    m(1, 5) = D(-1);
    m(5, 1) = D(1);
    return m;
}

inline GaussMat<4> real_part(const GaussMat<4>& g) {
    GaussMat<4> r;
    for (int i = 0; i < 16; ++i) {
        const auto& z = g.a[i];
        r.a[i] = DyadicGaussian(z.num_re(), 0, z.exponent());
    }
    return r;
}

inline GaussMat<4> imag_part(const GaussMat<4>& g) {
    GaussMat<4> r;
    for (int i = 0; i < 16; ++i) {
        const auto& z = g.a[i];
        r.a[i] = DyadicGaussian(z.num_im(), 0, z.exponent());
    }
    return r;
}

/// jmath: U(U,C) -> Sp(8,R), g |-> [[U Re(g) U, U Im(g)], [-Im(g) U, Re(g)]].
inline GaussMat<8> jmath(const GaussMat<4>& g) {
    const auto u = u_mat();
    const auto re = real_part(g), im = imag_part(g);
    return blocks8(u * re * u, u * im, -(im * u), re);
}

inline GaussMat<8> mat_Mrho() {
    GaussMat<4> iI;
    for (int k = 0; k < 4; ++k) iI(k, k) = DyadicGaussian(0, 1);
    return jmath(iI); // = [[O, U], [-U, O]]
}

/// Lift Sp(4) acting on coordinates (1,2) into Sp(8) fixing coordinates (3,4):
/// [[M11 (+) I2, M12 (+) O2], [M21 (+) O2, M22 (+) I2]].
inline GaussMat<8> natural_lift(const GaussMat<4>& m) {
    GaussMat<8> r;
    auto put = [&](int br, int bc, bool pad_identity) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r(4 * br + i, 4 * bc + j) = m(2 * br + i, 2 * bc + j);
        if (pad_identity)
            for (int k = 2; k < 4; ++k) r(4 * br + k, 4 * bc + k) = DyadicGaussian(1);
    };
    put(0, 0, true);
    put(0, 1, false);
    put(1, 0, false);
    put(1, 1, true);
    return r;
}

// --- group-structure checks and inverses (all exact) ---

inline bool is_unitary(const GaussMat<4>& g) {
    return g.adjoint() * u_mat() * g == u_mat();
}

inline GaussMat<4> unitary_inverse(const GaussMat<4>& g) {
    if (!is_unitary(g)) throw domain_error("unitary_inverse: g*Ug != U");
    return u_mat() * g.adjoint() * u_mat();
}

template <int N>
inline bool is_symplectic(const GaussMat<N>& m) {
    static_assert(N % 2 == 0);
    GaussMat<N> j;
    for (int k = 0; k < N / 2; ++k) {
        j(k, k + N / 2) = DyadicGaussian(-1);
        j(k + N / 2, k) = DyadicGaussian(1);
    }
    return m.is_real() && (m * j * m.transpose() == j);
}

template <int N>
inline GaussMat<N> symplectic_inverse(const GaussMat<N>& m) {
    if (!is_symplectic(m)) throw domain_error("symplectic_inverse: M J M^T != J");
    GaussMat<N> j;
    for (int k = 0; k < N / 2; ++k) {
        j(k, k + N / 2) = DyadicGaussian(-1);
        j(k + N / 2, k) = DyadicGaussian(1);
    }
    return -(j * m.transpose() * j);
}

inline GaussVec4 apply(const GaussMat<4>& g, const GaussVec4& v) {
    GaussVec4 r;
    for (int i = 0; i < 4; ++i) {
        DyadicGaussian s;
        for (int j = 0; j < 4; ++j) s = s + g(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Floating layer: ball points, the embedding, symplectic action, automorphy.
// ---------------------------------------------------------------------------

inline Eigen::Matrix4cd u_eigen() {
    Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
    u(0, 1) = u(1, 0) = u(2, 2) = u(3, 3) = 1.0;
    return u;
}

template <int N>
Eigen::Matrix<Cplx, N, N> to_eigen(const GaussMat<N>& m) {
    Eigen::Matrix<Cplx, N, N> r;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) r(i, j) = m(i, j).to_complex();
    return r;
}

struct BallPoint {
    Eigen::Vector4cd v;

    explicit BallPoint(Eigen::Vector4cd w) : v(std::move(w)) {
        if (!(herm_form() < 0.0)) throw domain_error("BallPoint: v*Uv >= 0");
    }

    /// Hermitian value v*Uv (real by symmetry of U); negative on the ball.
    Real herm_form() const {
        return (v.adjoint() * u_eigen() * v).value().real();
    }
    /// Bilinear value v^T U v appearing in the identities.
    Cplx bilin_form() const {
        return (v.transpose() * u_eigen() * v).value();
    }
};

inline BallPoint apply(const GaussMat<4>& g, const BallPoint& p) {
    return BallPoint(to_eigen(g) * p.v);
}

/// tau(v) = iU (I - (2 / v^T U v) v v^T U); maps the ball into Siegel space.
inline SiegelPoint tau_of_v(const BallPoint& p) {
    const Eigen::Matrix4cd u = u_eigen();
    const Cplx q = p.bilin_form();
    if (std::abs(q) < 1e-14 * p.v.squaredNorm())
        throw domain_error("tau_of_v: v^T U v = 0 (degenerate point)");
    Eigen::Matrix4cd t =
        Cplx(0, 1) * u *
        (Eigen::Matrix4cd::Identity() - (2.0 / q) * (p.v * p.v.transpose()) * u);
    t = 0.5 * (t + t.transpose().eval()); // symmetrize roundoff
    return SiegelPoint(t);
}

/// (M11 tau + M12)(M21 tau + M22)^{-1} for a real 2n x 2n symplectic M.
inline SiegelPoint sp_act(const Eigen::MatrixXd& M, const SiegelPoint& tp) {
    const auto n = tp.tau.rows();
    if (M.rows() != 2 * n || M.cols() != 2 * n)
        throw domain_error("sp_act: size mismatch");
    const Eigen::MatrixXcd num =
        M.topLeftCorner(n, n) * tp.tau + M.topRightCorner(n, n);
    Eigen::MatrixXcd den = M.bottomLeftCorner(n, n) * tp.tau + M.bottomRightCorner(n, n);
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(den);
    if (!lu.isInvertible())
        throw domain_error("sp_act: singular denominator (boundary point)");
    Eigen::MatrixXcd t = num * lu.inverse();
    t = 0.5 * (t + t.transpose().eval());
    return SiegelPoint(t);
}

inline Eigen::MatrixXd to_eigen_real(const GaussMat<8>& m) {
    if (!m.is_real()) throw domain_error("to_eigen_real: matrix has imaginary entries");
    Eigen::MatrixXd r(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) r(i, j) = m(i, j).to_complex().real();
    return r;
}

inline SiegelPoint sp_act(const GaussMat<8>& M, const SiegelPoint& tp) {
    return sp_act(to_eigen_real(M), tp);
}

/// chi(M, tau) = det(M21 tau + M22).
inline Cplx chi(const Eigen::MatrixXd& M, const SiegelPoint& tp) {
    const auto n = tp.tau.rows();
    if (M.rows() != 2 * n || M.cols() != 2 * n) throw domain_error("chi: size mismatch");
    const Eigen::MatrixXcd den =
        M.bottomLeftCorner(n, n) * tp.tau + M.bottomRightCorner(n, n);
    return den.determinant();
}

inline Cplx chi(const GaussMat<8>& M, const SiegelPoint& tp) {
    return chi(to_eigen_real(M), tp);
}

// ---------------------------------------------------------------------------
// Characteristic transformation under integral (or dyadic) symplectic M.
// ---------------------------------------------------------------------------

/// Exact characteristic pair as a dyadic row 8-vector (a | b).
using CharVec = std::array<DyadicGaussian, 8>;

inline CharVec char_vec(const Characteristic& ch) {
    if (ch.dim() != 4) throw domain_error("char_vec: need dimension 4");
    CharVec r;
    for (int j = 0; j < 4; ++j) {
        r[j] = DyadicGaussian(ch.a[j]);
        r[j + 4] = DyadicGaussian(ch.b[j]);
    }
    return r;
}

/// Converts back to an integer characteristic; throws if non-integral.
inline Characteristic char_of_vec(const CharVec& cv) {
    Characteristic ch{std::vector<int>(4), std::vector<int>(4)};
    for (int j = 0; j < 8; ++j) {
        if (!cv[j].is_integer())
            throw domain_error("char_of_vec: non-integral characteristic");
        (j < 4 ? ch.a[j] : ch.b[j - 4]) = cv[j].num_re().convert_to<int>();
    }
    return ch;
}

inline CharVec row_times_mat(const CharVec& r, const GaussMat<8>& m) {
    CharVec out;
    for (int j = 0; j < 8; ++j) {
        DyadicGaussian s;
        for (int k = 0; k < 8; ++k) s = s + r[k] * m(k, j);
        out[j] = s;
    }
    return out;
}

/// Affine action M . (a,b) = (a,b) M^{-1} + ((M21 M22^T)_0, (M11 M12^T)_0).
inline CharVec char_act(const GaussMat<8>& M, const CharVec& ab) {
    const auto Minv = symplectic_inverse(M);
    CharVec r = row_times_mat(ab, Minv);
    const auto m11 = block_of(M, 0, 0), m12 = block_of(M, 0, 1);
    const auto m21 = block_of(M, 1, 0), m22 = block_of(M, 1, 1);
    const auto d1 = m21 * m22.transpose();
    const auto d2 = m11 * m12.transpose();
    for (int j = 0; j < 4; ++j) {
        r[j] = r[j] + d1(j, j);
        r[j + 4] = r[j + 4] + d2(j, j);
    }
    return r;
}

inline Characteristic char_act(const GaussMat<8>& M, const Characteristic& ch) {
    return char_of_vec(char_act(M, char_vec(ch)));
}

/// phi_{a,b}(M) = -(1/8)(a M22^T M12 a^T - 2 a M12^T M21 b^T + b M21^T M11 b^T)
///               + (1/4)(a M22^T - b M21^T) ((M11 M12^T)_0)^T, exact dyadic.
inline DyadicGaussian phi_ab(const GaussMat<8>& M, const Characteristic& ch) {
    if (!is_symplectic(M)) throw domain_error("phi_ab: M is not symplectic");
    const auto cv = char_vec(ch);
    std::array<DyadicGaussian, 4> a, b;
    for (int j = 0; j < 4; ++j) {
        a[j] = cv[j];
        b[j] = cv[j + 4];
    }
    const auto m11 = block_of(M, 0, 0), m12 = block_of(M, 0, 1);
    const auto m21 = block_of(M, 1, 0), m22 = block_of(M, 1, 1);
    auto quad = [](const std::array<DyadicGaussian, 4>& x, const GaussMat<4>& m,
                   const std::array<DyadicGaussian, 4>& y) {
        DyadicGaussian s;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) s = s + x[i] * m(i, j) * y[j];
        return s;
    };
    const DyadicGaussian q1 = quad(a, m22.transpose() * m12, a);
    const DyadicGaussian q2 = quad(a, m12.transpose() * m21, b);
    const DyadicGaussian q3 = quad(b, m21.transpose() * m11, b);
    const auto d2 = m11 * m12.transpose();
    DyadicGaussian lin;
    for (int j = 0; j < 4; ++j) {
        DyadicGaussian aj, bj;
        for (int k = 0; k < 4; ++k) {
            aj = aj + a[k] * m22(j, k);
            bj = bj + b[k] * m21(j, k);
        }
        lin = lin + (aj - bj) * d2(j, j);
    }
    const DyadicGaussian eighth(1, 0, 3), quarter(1, 0, 2);
    const DyadicGaussian val =
        -(eighth * (q1 - DyadicGaussian(2) * q2 + q3)) + quarter * lin;
    if (!val.is_real()) throw domain_error("phi_ab: non-real value");
    return val;
}

// ---------------------------------------------------------------------------
// Characteristic table and theta pullbacks on the ball.
// ---------------------------------------------------------------------------

/// The twelve characteristic pairs indexing the theta constants used by the
/// inverse period map.
inline Characteristic nu_char(int j) {
    static const std::array<Characteristic, 12> table = {
        char4({0, 0, 0, 0}, {0, 0, 0, 0}), char4({1, 0, 0, 0}, {0, 1, 0, 0}),
        char4({0, 1, 0, 0}, {1, 0, 0, 0}), char4({1, 1, 1, 1}, {1, 1, 1, 1}),
        char4({0, 0, 1, 0}, {0, 0, 0, 1}), char4({1, 0, 1, 0}, {0, 1, 0, 1}),
        char4({0, 1, 1, 0}, {1, 0, 0, 1}), char4({1, 1, 0, 1}, {1, 1, 1, 0}),
        char4({0, 0, 1, 1}, {0, 0, 0, 0}), char4({1, 0, 1, 1}, {0, 1, 0, 0}),
        char4({0, 1, 1, 1}, {1, 0, 0, 0}), char4({1, 1, 0, 0}, {1, 1, 1, 1})};
    if (j < 0 || j > 11) throw domain_error("nu_char: index out of range");
    return table[static_cast<std::size_t>(j)];
}

inline Cplx theta_ball(const Characteristic& ch, const BallPoint& v,
                       const ThetaAccuracy& acc = {}) {
    return theta_constant(ch, tau_of_v(v), acc);
}

inline Cplx theta_nu(int j, const BallPoint& v, const ThetaAccuracy& acc = {}) {
    return theta_ball(nu_char(j), v, acc);
}

} // namespace qagm

#endif
