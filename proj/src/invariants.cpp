#include "quandlekit/invariants.hpp"

#include <sstream>
#include <stdexcept>

namespace quandlekit {

std::string element_monomial(const AbelianGroup& g, int elem) {
    if (elem == 0)
        return "1";
    std::ostringstream out;
    if (g.cyclic()) {
        out << 't';
        if (elem != 1)
            out << '^' << elem;
        return out.str();
    }
    auto coords = g.decode(elem);
    bool first = true;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0)
            continue;
        if (!first)
            out << '*';
        out << 't' << (i + 1);
        if (coords[i] != 1)
            out << '^' << coords[i];
        first = false;
    }
    return out.str();
}

GroupRingValue::GroupRingValue(AbelianGroup group) : group_(std::move(group)) {}

void GroupRingValue::add(int elem, long long count) {
    if (elem < 0 || elem >= group_.order())
        throw MalformedInput("group ring term outside the group");
    auto it = terms_.find(elem);
    long long next = (it == terms_.end() ? 0 : it->second) + count;
    if (next == 0) {
        if (it != terms_.end())
            terms_.erase(it);
    } else {
        terms_[elem] = next;
    }
}

long long GroupRingValue::coeff(int elem) const {
    auto it = terms_.find(elem);
    return it == terms_.end() ? 0 : it->second;
}

long long GroupRingValue::mass() const {
    long long total = 0;
    for (const auto& [elem, count] : terms_)
        total += count;
    return total;
}

std::string GroupRingValue::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [elem, count] : terms_) {
        long long mag = count < 0 ? -count : count;
        if (first)
            out << (count < 0 ? "-" : "");
        else
            out << (count < 0 ? " - " : " + ");
        if (elem == 0)
            out << mag;
        else if (mag == 1)
            out << element_monomial(group_, elem);
        else
            out << mag << element_monomial(group_, elem);
        first = false;
    }
    return out.str();
}

int boltzmann_weight(const FiniteQuandle& q, const Cochain2& phi, const LinkDiagram& d,
                     int crossing, const Coloring& c) {
    if (crossing < 0 || crossing >= static_cast<int>(d.crossings().size()))
        throw MalformedInput("crossing index out of range");
    if (!is_coloring(d, q, c))
        throw ValidationFailure("weight of something that is not a coloring");
    const Crossing& cr = d.crossings()[crossing];
    int x = cr.sign > 0 ? c.colors[cr.under_in] : c.colors[cr.under_out];
    return phi.group().scale(cr.sign, phi(x, c.colors[cr.over]));
}

namespace {

void require_cocycle(const FiniteQuandle& q, const Cochain2& phi, bool verify) {
    if (phi.size() != q.size())
        throw MalformedInput("cochain size does not match quandle size");
    if (!verify)
        return;
    CocycleReport rep = is_cocycle2(q, phi);
    if (!rep.ok)
        throw ValidationFailure("state sum needs a cocycle: condition fails at (x, y, z) = (" +
                                std::to_string(rep.x) + ", " + std::to_string(rep.y) + ", " +
                                std::to_string(rep.z) + ")");
}

} // namespace

GroupRingValue state_sum(const LinkDiagram& d, const FiniteQuandle& q, const Cochain2& phi,
                         bool verify_cocycle) {
    require_cocycle(q, phi, verify_cocycle);
    const AbelianGroup& g = phi.group();
    GroupRingValue sum(g);
    for (const Coloring& c : enumerate_colorings(d, q)) {
        int weight = 0;
        for (size_t ci = 0; ci < d.crossings().size(); ++ci) {
            const Crossing& cr = d.crossings()[ci];
            int x = cr.sign > 0 ? c.colors[cr.under_in] : c.colors[cr.under_out];
            weight = g.add(weight, g.scale(cr.sign, phi(x, c.colors[cr.over])));
        }
        sum.add(weight);
    }
    return sum;
}

std::vector<GroupRingValue> componentwise_state_sum(const LinkDiagram& d, const FiniteQuandle& q,
                                                    const Cochain2& phi, bool verify_cocycle) {
    require_cocycle(q, phi, verify_cocycle);
    std::vector<GroupRingValue> sums(d.component_count(), GroupRingValue(phi.group()));
    for (const Coloring& c : enumerate_colorings(d, q)) {
        std::vector<int> h = holonomies(d, q, phi, c);
        for (int i = 0; i < d.component_count(); ++i)
            sums[i].add(h[i]);
    }
    return sums;
}

ObstructionReport obstruction_report(const LinkDiagram& d, const FiniteQuandle& q,
                                     const Cochain2& phi, bool verify_cocycle) {
    require_cocycle(q, phi, verify_cocycle);
    ObstructionReport report{0, 0, {}, {}, GroupRingValue(phi.group()), {}};
    report.per_component.assign(d.component_count(), GroupRingValue(phi.group()));
    report.colorings = enumerate_colorings(d, q);
    report.coloring_count = static_cast<long long>(report.colorings.size());

    const AbelianGroup& g = phi.group();
    AbelianExtension ext = build_extension(q, phi);
    long long lifted_count = 0;
    for (const Coloring& c : report.colorings) {
        std::vector<int> h = holonomies(d, q, phi, c);
        bool flat = true;
        int total = 0;
        for (int i = 0; i < d.component_count(); ++i) {
            report.per_component[i].add(h[i]);
            total = g.add(total, h[i]);
            if (h[i] != 0)
                flat = false;
        }
        report.total.add(total);
        if (flat)
            ++report.extendable_count;
        report.holonomy_table.push_back(std::move(h));

        LiftOutcome lift = lift_coloring(d, ext, c);
        if (lift.component_holonomy != report.holonomy_table.back())
            throw std::logic_error("holonomy disagrees between direct sum and extension walk");
        if (lift.ok)
            ++lifted_count;
    }
    if (lifted_count != report.extendable_count)
        throw std::logic_error("lift count disagrees with the holonomy criterion");
    return report;
}

} // namespace quandlekit
