#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "quandlekit/abelian.hpp"
#include "quandlekit/quandle.hpp"

namespace quandlekit {

// Integer chains in the quandle complex, keyed by generator.  Degenerate
// pairs (x, x) are zero in degree 2, so add() drops them; zero coefficients
// are erased.  Basis order everywhere is row-major by tuple.
struct Chain1 {
    std::map<int, long long> terms;
    void add(int x, long long coeff);
};

struct Chain2 {
    std::map<std::pair<int, int>, long long> terms;
    void add(int x, int y, long long coeff);
    bool zero() const { return terms.empty(); }
};

// "(0,1) + (2,1)", "2*(0,1) - (3,4)", minus binds to the following term.
Chain2 parse_chain2(const std::string& text);
std::string chain2_to_string(const Chain2& chain);

// A 2-cochain with values in a finite abelian group, values(x, x) = 0.
// Values are flat indices into the group.
class Cochain2 {
public:
    Cochain2(AbelianGroup group, int quandle_size); // zero cochain
    Cochain2(AbelianGroup group, Eigen::MatrixXi values);

    const AbelianGroup& group() const { return group_; }
    int size() const { return static_cast<int>(values_.rows()); }
    int operator()(int x, int y) const { return values_(x, y); }
    void set(int x, int y, int value);
    const Eigen::MatrixXi& values() const { return values_; }

    Cochain2 operator+(const Cochain2& other) const;
    Cochain2 operator-(const Cochain2& other) const;
    bool operator==(const Cochain2& other) const {
        return group_ == other.group_ && values_ == other.values_;
    }

private:
    AbelianGroup group_;
    Eigen::MatrixXi values_;
};

// d(x1, x2) = (x1) - (x1 * x2)
Chain1 boundary2(const FiniteQuandle& q, int x1, int x2);
Chain1 boundary2(const FiniteQuandle& q, const Chain2& chain);
// d(x1, x2, x3) = (x1, x3) - (x1*x2, x3) - (x1, x2) + (x1*x3, x2*x3)
Chain2 boundary3(const FiniteQuandle& q, int x1, int x2, int x3);

bool is_cycle2(const FiniteQuandle& q, const Chain2& chain);

struct CocycleReport {
    bool ok = true;
    int x = -1, y = -1, z = -1; // first violating triple when !ok
};

// phi(x, z) + phi(x*z, y*z) = phi(x, y) + phi(x*y, z) for all triples.
CocycleReport is_cocycle2(const FiniteQuandle& q, const Cochain2& phi);

// (df)(x, y) = f(x) - f(x * y); f maps elements to group flat indices.
Cochain2 coboundary1(const FiniteQuandle& q, const AbelianGroup& group,
                     const std::vector<int>& f);

// Pairing <phi, chain> as a group element; integer chain coefficients act by
// scalar multiplication in the group.
int evaluate(const Cochain2& phi, const Chain2& chain);

// A witness f with phi = df, or nullopt.  Solved one cyclic factor at a time
// via Smith normal form of the coboundary matrix.
std::optional<std::vector<int>> is_coboundary(const FiniteQuandle& q, const Cochain2& phi);
bool cohomologous(const FiniteQuandle& q, const Cochain2& phi, const Cochain2& psi);

// Second cohomology with Z_q coefficients as an abelian group, plus one
// cocycle representative per invariant factor.  Computed from the integer
// boundary matrices: K = { v : D2 v = 0 mod q } as an integer lattice,
// I = column lattice of [D1 | qI], then Smith normal form of the matrix
// expressing I in a basis of K.  Representatives are reduced to canonical
// coset form, so repeated runs agree exactly.
struct H2Result {
    std::vector<long long> orders;      // invariant factors > 1, each divides q
    std::vector<Cochain2> representatives;
    long long group_order() const;
    std::string group_string() const;   // "Z2 x Z2 x Z2 x Z2", "trivial"
};

H2Result compute_h2(const FiniteQuandle& q, int modulus);

} // namespace quandlekit
