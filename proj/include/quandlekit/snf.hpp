#pragma once

#include <optional>

#include <Eigen/Core>

namespace quandlekit {

using IMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using IVector = Eigen::Matrix<long long, Eigen::Dynamic, 1>;

// Smith normal form u * a * v = d with d diagonal, d(i,i) >= 0 and
// d(i,i) | d(i+1,i+1).  uinv is the inverse of u, accumulated alongside so
// callers can change basis without a separate integer inversion.
struct SmithForm {
    IMatrix d;
    IMatrix u;
    IMatrix uinv;
    IMatrix v;
    int rank = 0;
};

SmithForm smith_form(IMatrix a);

// Columns form a basis of { x : a x = 0 } over the integers.
IMatrix integer_kernel_basis(const IMatrix& a);

// Exact integer solution of a x = b, column by column; nullopt if any column
// has no integer solution.
std::optional<IMatrix> solve_integer(const IMatrix& a, const IMatrix& b);

// One solution of a x = b (mod q) with entries in [0, q), or nullopt.
std::optional<IVector> solve_mod(const IMatrix& a, const IVector& b, long long q);

// Column-style Hermite reduction lattice for deterministic coset
// representatives: reduce() maps v to the unique representative of
// v + (column lattice of a) whose pivot-row entries lie in [0, pivot).
// Rows are processed top to bottom, so representatives are reproducible.
class LatticeReducer {
public:
    explicit LatticeReducer(IMatrix a);
    IVector reduce(IVector v) const;

private:
    IMatrix h_;
    std::vector<std::pair<int, int>> pivots_; // (row, column) with h_(row, column) > 0
};

long long mod_inverse(long long a, long long m); // a unit mod m; throws otherwise

} // namespace quandlekit
