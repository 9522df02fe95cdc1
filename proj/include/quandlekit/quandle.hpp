#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "quandlekit/errors.hpp"

namespace quandlekit {

// A finite quandle on {0, .., n-1} given by its operation table
// table(a, b) = a * b.  Construction verifies the three axioms
//   (I)   a * a = a
//   (II)  for each b, the map a -> a * b is a bijection
//   (III) (a * b) * c = (a * c) * (b * c)
// and precomputes the inverse translations, so solve_right is O(1).
class FiniteQuandle {
public:
    explicit FiniteQuandle(Eigen::MatrixXi table, std::string label = "");

    int size() const { return static_cast<int>(table_.rows()); }
    int op(int a, int b) const { return table_(a, b); }
    // The unique c with c * b = a.
    int solve_right(int a, int b) const { return solve_(a, b); }
    const Eigen::MatrixXi& table() const { return table_; }

    const std::string& label() const { return label_; }
    void relabel(std::string label) { label_ = std::move(label); }

    // Labels are display metadata; equality is equality of tables.
    bool operator==(const FiniteQuandle& other) const { return table_ == other.table_; }

private:
    Eigen::MatrixXi table_;
    Eigen::MatrixXi solve_;
    std::string label_;
};

struct AxiomWitness {
    enum class Axiom { Idempotence, RightTranslation, Distributivity };
    Axiom axiom;
    int a = -1, b = -1, c = -1;
    std::string describe() const;
};

struct TableReport {
    bool well_formed = true;        // square, entries in range
    std::string shape_problem;      // set when !well_formed
    std::vector<AxiomWitness> witnesses;
    bool valid() const { return well_formed && witnesses.empty(); }
    std::string describe() const;   // one line per problem
};

// Checks a raw table without constructing; collects every failing witness.
TableReport verify_table(const Eigen::MatrixXi& table);

FiniteQuandle make_trivial(int n);       // a * b = a, label "T<n>"
FiniteQuandle make_dihedral(int n);      // a * b = 2b - a mod n, label "R<n>"

// Z_n[T, T^-1] / (h(T)) with h given by coefficients lowest degree first.
// Elements are coefficient vectors of degree < deg h, flat index
// sum c_i n^i.  Finite only when h's lowest and highest coefficients are
// units mod n; the constructor rejects anything else.
struct AlexanderPresentation {
    int modulus;
    std::vector<int> h;
    AlexanderPresentation(int modulus, std::vector<int> h);
    int degree() const { return static_cast<int>(h.size()) - 1; }
    long long element_count() const;
    std::vector<int> decode(long long flat) const;
    long long encode(const std::vector<int>& coeffs) const;
    std::string label() const; // "A<n>_<c0>.<c1>..."
};

// a * b = T a + (1 - T) b in the presentation above.
FiniteQuandle make_alexander(const AlexanderPresentation& pres);
FiniteQuandle make_alexander(int modulus, std::vector<int> h);

// a * b = b^-n a b^n for a finite group given by its multiplication table.
// Validates that the table is a group first.
FiniteQuandle make_conjugation(const Eigen::MatrixXi& group_table, int nfold,
                               const std::string& group_name = "G");

// Componentwise operation on pairs, flat index x * |Y| + y.
FiniteQuandle make_product(const FiniteQuandle& x, const FiniteQuandle& y);

// A quandle homomorphism source -> target, stored by images.  The factory
// validates f(a * b) = f(a) * f(b) for every pair (which forces the same for
// the inverse operation) and throws ValidationFailure with a witness pair.
struct QuandleMap {
    FiniteQuandle source;
    FiniteQuandle target;
    std::vector<int> images;
    int operator()(int a) const { return images[a]; }
};

QuandleMap make_quandle_map(const FiniteQuandle& source, const FiniteQuandle& target,
                            std::vector<int> images);
bool is_homomorphism(const FiniteQuandle& source, const FiniteQuandle& target,
                     const std::vector<int>& images);

// Backtracking search for an isomorphism, pruned by cycle-type signatures of
// the right translations and by forward propagation of f(a*b) = f(a)*f(b).
// Images are chosen in element order, smallest candidate first, so the result
// is the lexicographically least image vector when one exists.
std::optional<std::vector<int>> find_isomorphism(const FiniteQuandle& x, const FiniteQuandle& y);

} // namespace quandlekit
