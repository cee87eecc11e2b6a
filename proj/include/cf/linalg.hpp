#ifndef CF_LINALG_HPP
#define CF_LINALG_HPP

#include <vector>

#include "cf/polynomial.hpp"
#include "cf/rational.hpp"

namespace cf {

template <class C>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<C> a;

    Mat() = default;
    Mat(int r, int c, C fill = C()) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, fill) {}
    C& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const C& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

/// Row-reduced echelon form of a rational matrix together with the row
/// transform T (R = T * M) and the pivot columns. The workhorse behind
/// exact solves, nullspaces and left-kernels.
struct Rref {
    Mat<Rational> R;
    Mat<Rational> T;
    std::vector<int> pivot_col; // per pivot row
    int rank = 0;

    explicit Rref(const Mat<Rational>& M) : R(M), T(M.rows, M.rows) {
        for (int r = 0; r < M.rows; ++r) T.at(r, r) = 1;
        int row = 0;
        for (int col = 0; col < M.cols && row < M.rows; ++col) {
            int piv = -1;
            for (int r = row; r < M.rows; ++r)
                if (R.at(r, col) != 0) { piv = r; break; }
            if (piv < 0) continue;
            swap_rows(piv, row);
            Rational p = R.at(row, col);
            scale_row(row, Rational(1) / p);
            for (int r = 0; r < M.rows; ++r) {
                if (r == row || R.at(r, col) == 0) continue;
                axpy_row(r, row, -R.at(r, col));
            }
            pivot_col.push_back(col);
            ++row;
        }
        rank = row;
    }

    /// Rows of T that annihilate M (a basis of the left kernel).
    std::vector<std::vector<Rational>> left_kernel() const {
        std::vector<std::vector<Rational>> out;
        for (int r = rank; r < T.rows; ++r) {
            std::vector<Rational> v(static_cast<std::size_t>(T.cols));
            for (int c = 0; c < T.cols; ++c) v[static_cast<std::size_t>(c)] = T.at(r, c);
            out.push_back(std::move(v));
        }
        return out;
    }

    /// Basis of the right kernel.
    std::vector<std::vector<Rational>> kernel() const {
        std::vector<std::vector<Rational>> out;
        std::vector<char> is_pivot(static_cast<std::size_t>(R.cols), 0);
        for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = 1;
        for (int free = 0; free < R.cols; ++free) {
            if (is_pivot[static_cast<std::size_t>(free)]) continue;
            std::vector<Rational> v(static_cast<std::size_t>(R.cols));
            v[static_cast<std::size_t>(free)] = 1;
            for (int r = 0; r < rank; ++r)
                v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] = -R.at(r, free);
            out.push_back(std::move(v));
        }
        return out;
    }

    /// Particular solution of M x = b with all free variables set to 0;
    /// throws if the system is inconsistent. The RHS entries may be any
    /// module over Q supporting v+v and scaled(q) - here: polynomials.
    template <class V>
    std::vector<V> solve(const std::vector<V>& b, const V& zero) const {
        std::vector<V> c(static_cast<std::size_t>(T.rows), zero);
        for (int r = 0; r < T.rows; ++r) {
            V acc = zero;
            for (int j = 0; j < T.cols; ++j) {
                if (T.at(r, j) == 0) continue;
                acc = acc + b[static_cast<std::size_t>(j)].scaled(T.at(r, j));
            }
            c[static_cast<std::size_t>(r)] = std::move(acc);
        }
        for (int r = rank; r < T.rows; ++r)
            if (!c[static_cast<std::size_t>(r)].is_zero())
                throw DomainError("linear system inconsistent");
        std::vector<V> x(static_cast<std::size_t>(R.cols), zero);
        for (int r = 0; r < rank; ++r)
            x[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] = std::move(c[static_cast<std::size_t>(r)]);
        return x;
    }

private:
    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < R.cols; ++c) std::swap(R.at(i, c), R.at(j, c));
        for (int c = 0; c < T.cols; ++c) std::swap(T.at(i, c), T.at(j, c));
    }
    void scale_row(int r, const Rational& f) {
        for (int c = 0; c < R.cols; ++c) R.at(r, c) *= f;
        for (int c = 0; c < T.cols; ++c) T.at(r, c) *= f;
    }
    void axpy_row(int dst, int src, const Rational& f) {
        for (int c = 0; c < R.cols; ++c) R.at(dst, c) += f * R.at(src, c);
        for (int c = 0; c < T.cols; ++c) T.at(dst, c) += f * T.at(src, c);
    }
};

/// Exact rank by fraction-free (Bareiss) elimination: rows are first scaled
/// to integers, then eliminated with exact integer division only.
inline int rank_bareiss(const Mat<Rational>& M) {
    const int m = M.rows, n = M.cols;
    std::vector<std::vector<Integer>> a(static_cast<std::size_t>(m),
                                        std::vector<Integer>(static_cast<std::size_t>(n)));
    for (int r = 0; r < m; ++r) {
        Integer l(1);
        for (int c = 0; c < n; ++c) {
            Integer den = M.at(r, c).get_den();
            l = l / gcd(l, den) * den;
        }
        for (int c = 0; c < n; ++c)
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                M.at(r, c).get_num() * (l / M.at(r, c).get_den());
    }
    Integer prev(1);
    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        int piv = -1;
        for (int r = rank; r < m; ++r)
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(rank)]);
        auto& pr = a[static_cast<std::size_t>(rank)];
        for (int r = rank + 1; r < m; ++r) {
            auto& ar = a[static_cast<std::size_t>(r)];
            for (int c = col + 1; c < n; ++c) {
                Integer num = pr[static_cast<std::size_t>(col)] * ar[static_cast<std::size_t>(c)]
                            - ar[static_cast<std::size_t>(col)] * pr[static_cast<std::size_t>(c)];
                mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                ar[static_cast<std::size_t>(c)] = std::move(num);
            }
            ar[static_cast<std::size_t>(col)] = 0;
        }
        prev = pr[static_cast<std::size_t>(col)];
        ++rank;
    }
    return rank;
}

} // namespace cf

#endif
