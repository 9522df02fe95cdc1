#pragma once

#include <map>
#include <string>
#include <vector>

#include "quandlekit/coloring.hpp"
#include "quandlekit/diagram.hpp"
#include "quandlekit/extensions.hpp"
#include "quandlekit/homology.hpp"
#include "quandlekit/quandle.hpp"

namespace quandlekit {

// Group element as a monomial: "1" for the identity, "t", "t^3" for cyclic
// groups, "t1*t2^2" with one variable per factor otherwise.
std::string element_monomial(const AbelianGroup& g, int elem);

// An element of the integral group ring Z[A]: a formal sum of group elements
// with integer multiplicities.  Zero coefficients are not stored.
class GroupRingValue {
public:
    explicit GroupRingValue(AbelianGroup group);

    const AbelianGroup& group() const { return group_; }
    void add(int elem, long long count = 1);
    long long coeff(int elem) const;
    long long mass() const; // sum of all coefficients
    const std::map<int, long long>& terms() const { return terms_; }

    std::string str() const; // "4 + 12t", "0" when empty

    bool operator==(const GroupRingValue& other) const {
        return group_ == other.group_ && terms_ == other.terms_;
    }

private:
    AbelianGroup group_;
    std::map<int, long long> terms_;
};

// The signed cocycle value this crossing contributes under a coloring.
int boltzmann_weight(const FiniteQuandle& q, const Cochain2& phi, const LinkDiagram& d,
                     int crossing, const Coloring& c);

// State sum: over all colorings, the group ring element
// sum_C t^(total weight of C).  verify_cocycle rejects cochains that fail
// the cocycle condition, without which the sum is not a link invariant.
GroupRingValue state_sum(const LinkDiagram& d, const FiniteQuandle& q, const Cochain2& phi,
                         bool verify_cocycle = true);

// One group ring element per component, collecting t^(holonomy of that
// component) over all colorings.  For a knot this is the state sum itself.
std::vector<GroupRingValue> componentwise_state_sum(const LinkDiagram& d, const FiniteQuandle& q,
                                                    const Cochain2& phi,
                                                    bool verify_cocycle = true);

// Which colorings extend through E(X, A, phi): exactly those whose component
// holonomies all vanish.  Counts both by the holonomy criterion and by
// actually lifting through the built extension; the two must agree.
struct ObstructionReport {
    long long coloring_count = 0;
    long long extendable_count = 0;
    std::vector<Coloring> colorings;
    std::vector<std::vector<int>> holonomy_table; // [coloring][component]
    GroupRingValue total;
    std::vector<GroupRingValue> per_component;
};

ObstructionReport obstruction_report(const LinkDiagram& d, const FiniteQuandle& q,
                                     const Cochain2& phi, bool verify_cocycle = true);

} // namespace quandlekit
