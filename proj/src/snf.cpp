#include "quandlekit/snf.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace quandlekit {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    return (a % b < 0) ? q - 1 : q;
}

} // namespace

long long mod_inverse(long long a, long long m) {
    if (m == 1)
        return 0;
    long long r0 = m, r1 = ((a % m) + m) % m;
    long long s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1)
        throw std::logic_error("mod_inverse: argument is not a unit");
    return ((s0 % m) + m) % m;
}

// Textbook elimination with the minimum-magnitude pivot rule.  Row operations
// are mirrored into u (and inverted into uinv's columns), column operations
// into v.  Fine for the small boundary matrices this library produces; not
// tuned for large sparse inputs.
SmithForm smith_form(IMatrix a) {
    const int nr = static_cast<int>(a.rows());
    const int nc = static_cast<int>(a.cols());
    SmithForm f;
    f.u = IMatrix::Identity(nr, nr);
    f.uinv = IMatrix::Identity(nr, nr);
    f.v = IMatrix::Identity(nc, nc);

    auto row_add = [&](int i, int j, long long k) { // row i += k * row j
        a.row(i) += k * a.row(j);
        f.u.row(i) += k * f.u.row(j);
        f.uinv.col(j) -= k * f.uinv.col(i);
    };
    auto row_swap = [&](int i, int j) {
        a.row(i).swap(a.row(j));
        f.u.row(i).swap(f.u.row(j));
        f.uinv.col(i).swap(f.uinv.col(j));
    };
    auto col_add = [&](int i, int j, long long k) { // col i += k * col j
        a.col(i) += k * a.col(j);
        f.v.col(i) += k * f.v.col(j);
    };
    auto col_swap = [&](int i, int j) {
        a.col(i).swap(a.col(j));
        f.v.col(i).swap(f.v.col(j));
    };

    const int steps = std::min(nr, nc);
    int t = 0;
    while (t < steps) {
        int pi = -1, pj = -1;
        for (int i = t; i < nr; ++i)
            for (int j = t; j < nc; ++j)
                if (a(i, j) != 0 && (pi < 0 || std::llabs(a(i, j)) < std::llabs(a(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0)
            break; // trailing submatrix is zero
        if (pi != t)
            row_swap(pi, t);
        if (pj != t)
            col_swap(pj, t);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = t + 1; i < nr; ++i) {
                if (a(i, t) == 0)
                    continue;
                long long k = a(i, t) / a(t, t);
                if (k != 0)
                    row_add(i, t, -k);
                if (a(i, t) != 0) { // remainder became the smaller pivot
                    row_swap(i, t);
                    dirty = true;
                }
            }
            if (dirty)
                continue;
            for (int j = t + 1; j < nc; ++j) {
                if (a(t, j) == 0)
                    continue;
                long long k = a(t, j) / a(t, t);
                if (k != 0)
                    col_add(j, t, -k);
                if (a(t, j) != 0) {
                    col_swap(j, t);
                    dirty = true;
                }
            }
        }
        if (a(t, t) < 0) {
            a.row(t) = -a.row(t);
            f.u.row(t) = -f.u.row(t);
            f.uinv.col(t) = -f.uinv.col(t);
        }

        // Pivot must divide the rest of the submatrix; pull an offending row
        // up and redo this step until it does.
        bool redo = false;
        for (int i = t + 1; i < nr && !redo; ++i)
            for (int j = t + 1; j < nc && !redo; ++j)
                if (a(i, j) % a(t, t) != 0) {
                    row_add(t, i, 1);
                    redo = true;
                }
        if (!redo)
            ++t;
    }

    f.d = std::move(a);
    f.rank = t;
    return f;
}

IMatrix integer_kernel_basis(const IMatrix& a) {
    SmithForm f = smith_form(a);
    return f.v.rightCols(a.cols() - f.rank);
}

std::optional<IMatrix> solve_integer(const IMatrix& a, const IMatrix& b) {
    SmithForm f = smith_form(a);
    IMatrix y = f.u * b;
    IMatrix z = IMatrix::Zero(a.cols(), b.cols());
    for (int col = 0; col < y.cols(); ++col) {
        for (int i = 0; i < y.rows(); ++i) {
            if (i < f.rank) {
                if (y(i, col) % f.d(i, i) != 0)
                    return std::nullopt;
                if (i < z.rows())
                    z(i, col) = y(i, col) / f.d(i, i);
            } else if (y(i, col) != 0) {
                return std::nullopt;
            }
        }
    }
    return f.v * z;
}

std::optional<IVector> solve_mod(const IMatrix& a, const IVector& b, long long q) {
    SmithForm f = smith_form(a);
    IVector y = f.u * b;
    IVector z = IVector::Zero(a.cols());
    for (int i = 0; i < y.rows(); ++i) {
        long long yi = ((y(i) % q) + q) % q;
        if (i < f.rank) {
            long long g = std::gcd(f.d(i, i), q);
            if (yi % g != 0)
                return std::nullopt;
            long long qg = q / g;
            z(i) = (yi / g) % qg * mod_inverse(f.d(i, i) / g, qg) % qg;
        } else if (yi != 0) {
            return std::nullopt;
        }
    }
    IVector x = f.v * z;
    for (int i = 0; i < x.rows(); ++i)
        x(i) = ((x(i) % q) + q) % q;
    return x;
}

LatticeReducer::LatticeReducer(IMatrix a) {
    const int nr = static_cast<int>(a.rows());
    const int nc = static_cast<int>(a.cols());
    int piv = 0;
    for (int row = 0; row < nr && piv < nc; ++row) {
        int found = -1;
        for (int j = piv; j < nc; ++j)
            if (a(row, j) != 0) {
                found = j;
                break;
            }
        if (found < 0)
            continue;
        if (found != piv)
            a.col(piv).swap(a.col(found));
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int j = piv + 1; j < nc; ++j) {
                if (a(row, j) == 0)
                    continue;
                long long k = a(row, j) / a(row, piv);
                if (k != 0)
                    a.col(j) -= k * a.col(piv);
                if (a(row, j) != 0) {
                    a.col(piv).swap(a.col(j));
                    dirty = true;
                }
            }
        }
        if (a(row, piv) < 0)
            a.col(piv) = -a.col(piv);
        pivots_.emplace_back(row, piv);
        ++piv;
    }
    h_ = std::move(a);
}

IVector LatticeReducer::reduce(IVector v) const {
    for (auto [row, col] : pivots_) {
        long long k = floor_div(v(row), h_(row, col));
        if (k != 0)
            v -= k * h_.col(col);
    }
    return v;
}

} // namespace quandlekit
