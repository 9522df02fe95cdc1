#pragma once

#include <utility>
#include <vector>

#include "quandlekit/homology.hpp"
#include "quandlekit/quandle.hpp"

namespace quandlekit {

// The abelian extension E(X, A, phi): elements are pairs (a, x) with flat
// index a * |X| + x, and
//   (a1, x1) * (a2, x2) = (a1 + phi(x1, x2), x1 * x2).
// Built only from cocycles; the constructor-by-factory rejects anything
// whose total table would fail the quandle axioms.
struct AbelianExtension {
    FiniteQuandle base;
    AbelianGroup fiber;
    Cochain2 cocycle;
    FiniteQuandle total;
    QuandleMap projection; // total -> base, (a, x) -> x

    int pair_index(int a, int x) const { return a * base.size() + x; }
    std::pair<int, int> fiber_coords(int e) const {
        return {e / base.size(), e % base.size()};
    }
};

// Requires phi to satisfy the cocycle condition (ValidationFailure with the
// first bad triple otherwise); the quandle axioms for the total table follow.
AbelianExtension build_extension(const FiniteQuandle& x, const Cochain2& phi);

// Inverse problem: given a quandle E, a base X, a fiber A and a bijection
// E -> A x X (pairing[e] = (a, x)), check that the bijection exhibits E as an
// abelian extension and return the cocycle it defines.  Throws
// ValidationFailure with a witness pair of E-elements if the extension
// condition fails.
Cochain2 extract_cocycle(const FiniteQuandle& e, const FiniteQuandle& x, const AbelianGroup& a,
                         const std::vector<std::pair<int, int>>& pairing);

// Same, but only the projection E -> X is given: searches fiber labelings
// (lexicographically, smallest first) for one satisfying the extension
// condition.  Intended for small fibers; the search is exponential in |A|.
Cochain2 extract_cocycle(const FiniteQuandle& e, const FiniteQuandle& x, const AbelianGroup& a,
                         const std::vector<int>& projection);

// A quandle together with a distinguished 2-cocycle on it.
struct BasedCocycle {
    FiniteQuandle quandle;
    Cochain2 cocycle;
};

// Modular family: on Z_{q^m} with a * b = (1-q) a + q b, the carry cocycle
//   phi(a, b) = ( ((1-q)a + qb mod q^{m+1}) - ((1-q)a + qb mod q^m) ) / q^m
// with values in Z_q.  E(X, Z_q, phi) is the same family one level up.
BasedCocycle modular_carry_cocycle(int q, int m);

// Polynomial family: on Z_q[T]/(1-T)^m in (1-T)-adic digits, the top-digit
// cocycle phi(A, B) = B_{m-1} - A_{m-1}; E(X, Z_q, phi) is level m+1.
BasedCocycle polynomial_digit_cocycle(int q, int m);

// (p# phi)(u, v) = phi(p(u), p(v)) along a homomorphism p.
Cochain2 pullback_cocycle(const QuandleMap& p, const Cochain2& phi);

// R_n split into dihedral quandles of prime power order via the Chinese
// remainder theorem.  iso maps R_n onto the product, and is verified.
struct DihedralSplitting {
    FiniteQuandle product;
    QuandleMap iso;                 // R_n -> product
    std::vector<long long> moduli;  // prime powers, ascending primes
};

DihedralSplitting crt_decompose_dihedral(int n);

// The cocycle on R_{2n} whose extension is R_{4n}: write 2n = 2^m k with k
// odd, take the modular carry cocycle on the 2-part and pull it back along
// reduction mod 2^m.  The doubling R_{4n} = E(R_{2n}, Z_2, phi) is verified
// before returning.
BasedCocycle dihedral_doubling_cocycle(int n);

// True when the defining cocycle is a coboundary, i.e. the extension is
// equivalent to the product extension with the zero cocycle.
bool is_trivial_extension(const AbelianExtension& ext);

} // namespace quandlekit
