#include "linalg.hpp"

#include "eigen_support.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>

namespace mopoly::detail {

template <Floating T>
PivotedSolve<T> solve_pivoted_qr(const std::vector<T>& a, int n, const std::vector<T>& b) {
    using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
    using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;
    Mat m(n, n);
    Vec rhs(n);
    for (int i = 0; i < n; ++i) {
        rhs(i) = b[i];
        for (int j = 0; j < n; ++j) m(i, j) = a[static_cast<std::size_t>(i) * n + j];
    }
    // Column equilibration keeps the condition estimate scale free.
    Vec colscale(n);
    for (int j = 0; j < n; ++j) {
        T s = m.col(j).template lpNorm<Eigen::Infinity>();
        if (s == 0) s = 1;
        colscale(j) = s;
        m.col(j) /= s;
    }
    Eigen::ColPivHouseholderQR<Mat> qr(m);
    PivotedSolve<T> out;
    const auto& r = qr.matrixR();
    using std::abs;
    const T r0 = abs(T(r(0, 0)));
    const T rn = abs(T(r(n - 1, n - 1)));
    out.full_rank = rn > 0 && qr.rank() == n;
    out.condition = rn > 0 ? to_double(T(r0 / rn)) : std::numeric_limits<double>::infinity();
    Vec sol = qr.solve(rhs);
    out.x.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) out.x[j] = sol(j) / colscale(j);
    return out;
}

bool solve_exact(const std::vector<Rational>& a, int n, const std::vector<Rational>& b, std::vector<Rational>& x) {
    using Int = bmp::mpz_int;
    // Augmented integer matrix: each row scaled by the lcm of its denominators.
    std::vector<std::vector<Int>> m(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n) + 1));
    for (int i = 0; i < n; ++i) {
        Int l = 1;
        auto fold = [&](const Rational& q) { l = bmp::lcm(l, Int(bmp::denominator(q))); };
        for (int j = 0; j < n; ++j) fold(a[static_cast<std::size_t>(i) * n + j]);
        fold(b[i]);
        for (int j = 0; j < n; ++j) {
            const Rational& q = a[static_cast<std::size_t>(i) * n + j];
            m[i][j] = Int(bmp::numerator(q)) * (l / Int(bmp::denominator(q)));
        }
        m[i][n] = Int(bmp::numerator(b[i])) * (l / Int(bmp::denominator(b[i])));
    }
    // Bareiss elimination.
    Int prev = 1;
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) return false;
        if (p != k) std::swap(m[p], m[k]);
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j <= n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    x.assign(static_cast<std::size_t>(n), Rational(0));
    for (int i = n - 1; i >= 0; --i) {
        Rational acc(m[i][n]);
        for (int j = i + 1; j < n; ++j) acc -= Rational(m[i][j]) * x[j];
        x[i] = acc / Rational(m[i][i]);
    }
    return true;
}

template <Floating T>
std::vector<T> tridiagonal_eigenvalues(const std::vector<T>& diag, const std::vector<T>& offdiag) {
    using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
    using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;
    const int n = static_cast<int>(diag.size());
    if (n == 1) return {diag[0]};
    Vec d(n), e(n - 1);
    for (int i = 0; i < n; ++i) d(i) = diag[i];
    for (int i = 0; i + 1 < n; ++i) e(i) = offdiag[i];
    Eigen::SelfAdjointEigenSolver<Mat> solver;
    solver.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) return {};
    std::vector<T> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[i] = solver.eigenvalues()(i);
    std::sort(out.begin(), out.end());
    return out;
}

bool general_eigenvalues(const std::vector<double>& a, int n, std::vector<std::complex<double>>& out) {
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = a[static_cast<std::size_t>(i) * n + j];
    Eigen::EigenSolver<Eigen::MatrixXd> solver;
    solver.setMaxIterations(200);
    solver.compute(m, false);
    if (solver.info() != Eigen::Success) return false;
    out.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[i] = solver.eigenvalues()(i);
    return true;
}

template PivotedSolve<double> solve_pivoted_qr(const std::vector<double>&, int, const std::vector<double>&);
template PivotedSolve<Extended> solve_pivoted_qr(const std::vector<Extended>&, int, const std::vector<Extended>&);
template std::vector<double> tridiagonal_eigenvalues(const std::vector<double>&, const std::vector<double>&);
template std::vector<Extended> tridiagonal_eigenvalues(const std::vector<Extended>&, const std::vector<Extended>&);

}  // namespace mopoly::detail
