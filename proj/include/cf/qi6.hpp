#ifndef CF_QI6_HPP
#define CF_QI6_HPP

#include <array>
#include <string>

#include "cf/errors.hpp"
#include "cf/rational.hpp"

namespace cf {

/// Element a + b·i + c·r6 + d·i·r6 of Q(i,√6), with i² = −1 and r6² = 6.
/// A field: nonzero elements are inverted by solving the 4×4
/// multiplication-by-element linear system exactly.
class QI6 {
public:
    QI6() = default;
    explicit QI6(Rational a) : c_{std::move(a), 0, 0, 0} {}
    QI6(Rational a, Rational b, Rational c, Rational d)
        : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

    static QI6 i()  { return QI6(0, 1, 0, 0); }
    static QI6 r6() { return QI6(0, 0, 1, 0); }

    const Rational& re() const { return c_[0]; }
    const Rational& comp(int k) const { return c_[k]; }

    bool is_zero() const {
        return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
    }
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

    friend QI6 operator+(const QI6& x, const QI6& y) {
        return QI6(x.c_[0] + y.c_[0], x.c_[1] + y.c_[1], x.c_[2] + y.c_[2], x.c_[3] + y.c_[3]);
    }
    friend QI6 operator-(const QI6& x, const QI6& y) {
        return QI6(x.c_[0] - y.c_[0], x.c_[1] - y.c_[1], x.c_[2] - y.c_[2], x.c_[3] - y.c_[3]);
    }
    friend QI6 operator-(const QI6& x) {
        return QI6(-x.c_[0], -x.c_[1], -x.c_[2], -x.c_[3]);
    }
    // basis products: i·i=−1, r6·r6=6, (i r6)²=−6, i·r6=ir6, r6·ir6=6i, i·ir6=−r6
    friend QI6 operator*(const QI6& x, const QI6& y) {
        const auto& a = x.c_; const auto& b = y.c_;
        return QI6(a[0]*b[0] - a[1]*b[1] + 6*a[2]*b[2] - 6*a[3]*b[3],
                   a[0]*b[1] + a[1]*b[0] + 6*(a[2]*b[3] + a[3]*b[2]),
                   a[0]*b[2] + a[2]*b[0] - (a[1]*b[3] + a[3]*b[1]),
                   a[0]*b[3] + a[3]*b[0] + a[1]*b[2] + a[2]*b[1]);
    }
    QI6 inv() const;
    friend QI6 operator/(const QI6& x, const QI6& y) { return x * y.inv(); }

    friend bool operator==(const QI6& x, const QI6& y) { return x.c_ == y.c_; }
    friend bool operator!=(const QI6& x, const QI6& y) { return !(x == y); }

    /// Grammar-compatible form, e.g. "1/2 + 1/3*i - r6".
    std::string str() const;

private:
    std::array<Rational, 4> c_{Rational(0), Rational(0), Rational(0), Rational(0)};
};

inline QI6 QI6::inv() const {
    if (is_zero()) throw DomainError("QI6: inverse of zero");
    // Solve M·x = e0 where M is multiplication by *this in basis {1,i,r6,ir6}.
    // Column k of M is (*this) * basis_k.
    const QI6 basis[4] = {QI6(1), i(), r6(), i() * r6()};
    Rational m[4][5];
    for (int k = 0; k < 4; ++k) {
        QI6 col = *this * basis[k];
        for (int r = 0; r < 4; ++r) m[r][k] = col.c_[r];
    }
    for (int r = 0; r < 4; ++r) m[r][4] = (r == 0) ? Rational(1) : Rational(0);
    // Gaussian elimination with partial (first-nonzero) pivoting.
    int row = 0;
    for (int col = 0; col < 4 && row < 4; ++col) {
        int piv = -1;
        for (int r = row; r < 4; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        for (int c = 0; c < 5; ++c) std::swap(m[piv][c], m[row][c]);
        for (int r = 0; r < 4; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col] / m[row][col];
            for (int c = col; c < 5; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
    }
    if (row < 4) throw DomainError("QI6: singular regular representation"); // unreachable for nonzero e
    QI6 out;
    for (int r = 0; r < 4; ++r) {
        // rows are in pivot order = column order after full elimination
        out.c_[r] = m[r][4] / m[r][r];
    }
    return out;
}

inline std::string QI6::str() const {
    static const char* units[4] = {"", "i", "r6", "i*r6"};
    std::string out;
    for (int k = 0; k < 4; ++k) {
        if (c_[k] == 0) continue;
        Rational a = c_[k];
        bool neg = sign(a) < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        Rational mag = neg ? Rational(-a) : a;
        if (k == 0) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += units[k];
        } else {
            out += to_string(mag) + "*" + units[k];
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace cf

#endif
