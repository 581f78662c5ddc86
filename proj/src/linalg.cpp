#include "twistfloer/linalg.hpp"

#include "twistfloer/errors.hpp"

namespace twistfloer {

IntPolynomial charpoly(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw input_error("charpoly: matrix must be square");
    const int n = static_cast<int>(m.rows());
    if (n == 0) return IntPolynomial::one();
    // Faddeev-LeVerrier: A_1 = M, c_{n-k} = -tr(M A_k)/k (exact integer
    // division, checked), A_{k+1} = M (A_k + c_{n-k} I).
    std::vector<Int> c(n + 1, Int(0));
    c[n] = 1;
    IntMatrix A = m;
    for (int k = 1; k <= n; ++k) {
        Int tr(0);
        for (int i = 0; i < n; ++i) tr += A(i, i);
        if (tr % k != 0) throw internal_error("charpoly: inexact trace division");
        c[n - k] = -tr / Int(k);
        if (k < n) {
            IntMatrix B = A;
            for (int i = 0; i < n; ++i) B(i, i) += c[n - k];
            A = m * B;
        }
    }
    return IntPolynomial(std::move(c));
}

Int det_bareiss(IntMatrix m) {
    if (m.rows() != m.cols()) throw input_error("det: matrix must be square");
    const int n = static_cast<int>(m.rows());
    if (n == 0) return Int(1);
    Int sign(1), prev(1);
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (m(r, k) != 0) { swap_row = r; break; }
            if (swap_row < 0) return Int(0);
            m.row(k).swap(m.row(swap_row));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                if (num % prev != 0) throw internal_error("bareiss: inexact division");
                m(i, j) = num / prev;
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

int f2_rank(F2Matrix m) {
    const int rows = static_cast<int>(m.rows());
    const int cols = static_cast<int>(m.cols());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        // fixed pivot rule: first nonzero row at or below the pivot row
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!m(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        m.row(rank).swap(m.row(pivot));
        for (int r = 0; r < rows; ++r)
            if (r != rank && !m(r, col).is_zero()) m.row(r) += m.row(rank);
        ++rank;
    }
    return rank;
}

F2Matrix mod2(const IntMatrix& m) {
    F2Matrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = F2(m(i, j));
    return out;
}

bool matrices_equal(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

bool preserves_form(const IntMatrix& m, const IntMatrix& J) {
    if (m.rows() != m.cols() || m.rows() != J.rows()) return false;
    return matrices_equal(m.transpose() * J * m, J);
}

IntMatrix symplectic_inverse(const IntMatrix& m, const IntMatrix& J) {
    return IntMatrix(-(J * m.transpose() * J));
}

}  // namespace twistfloer
