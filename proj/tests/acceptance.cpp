// Acceptance gate: one line per criterion, nonzero exit if any fail.
// Criteria with a stated runtime budget are timed and fail when over it.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "golden_tables.hpp"
#include "quandlekit/coloring.hpp"
#include "quandlekit/extensions.hpp"
#include "quandlekit/homology.hpp"
#include "quandlekit/invariants.hpp"
#include "quandlekit/io.hpp"
#include "quandlekit/quandle.hpp"

using namespace quandlekit;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

long long ipow(long long base, int exp) {
    long long r = 1;
    while (exp-- > 0)
        r *= base;
    return r;
}

struct Gate {
    int passed = 0;
    int failed = 0;

    void criterion(int number, const std::string& name, double budget_seconds,
                   const std::function<std::string()>& check) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        try {
            detail = check();
        } catch (const std::exception& e) {
            detail = e.what();
        }
        double secs = seconds_since(t0);
        if (detail.empty() && budget_seconds > 0 && secs > budget_seconds)
            detail = "exceeded the " + std::to_string(budget_seconds) + "s budget";
        if (detail.empty()) {
            std::printf("PASS %d %s (%.2fs)\n", number, name.c_str(), secs);
            ++passed;
        } else {
            std::printf("FAIL %d %s: %s (%.2fs)\n", number, name.c_str(), detail.c_str(), secs);
            ++failed;
        }
    }
};

// Independent GF(2) second-cohomology rank: Gaussian elimination on the
// cocycle constraints and coboundary generators over the off-diagonal pairs.
// No Smith normal form, no lattices; usable for quandles up to 8 elements.
int rank_gf2(std::vector<uint64_t> rows) {
    int r = 0;
    for (int bit = 63; bit >= 0 && r < static_cast<int>(rows.size()); --bit) {
        int pivot = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[i] >> bit & 1) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(rows[r], rows[pivot]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            if (i != r && (rows[i] >> bit & 1))
                rows[i] ^= rows[r];
        ++r;
    }
    return r;
}

int h2_rank_gf2(const FiniteQuandle& x) {
    const int n = x.size();
    std::vector<int> pair_index(n * n, -1);
    int npairs = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b)
                pair_index[a * n + b] = npairs++;
    auto flip = [&](uint64_t& row, int a, int b) {
        if (a != b)
            row ^= 1ull << pair_index[a * n + b];
    };
    std::vector<uint64_t> constraints;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                uint64_t row = 0;
                flip(row, a, c);
                flip(row, x.op(a, c), x.op(b, c));
                flip(row, a, b);
                flip(row, x.op(a, b), c);
                if (row)
                    constraints.push_back(row);
            }
    int cocycle_dim = npairs - rank_gf2(constraints);
    std::vector<uint64_t> coboundaries;
    for (int u = 0; u < n; ++u) {
        uint64_t row = 0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (a != b && ((a == u) != (x.op(a, b) == u)))
                    row ^= 1ull << pair_index[a * n + b];
        coboundaries.push_back(row);
    }
    return cocycle_dim - rank_gf2(coboundaries);
}

std::string fmt_pair(int q, int m) {
    return "(" + std::to_string(q) + "," + std::to_string(m) + ")";
}

} // namespace

int main() {
    const AbelianGroup z2({2});
    Gate gate;

    gate.criterion(1, "cocycle-tables", 4.0, [&]() -> std::string {
        struct Case {
            int q, m;
            bool digit;
            const std::vector<golden::Entry>* want;
        };
        const Case cases[] = {
            {2, 2, false, &golden::carry22},
            {3, 1, false, &golden::carry31},
            {3, 2, false, &golden::carry32},
            {2, 2, true, &golden::digit22},
        };
        for (const Case& c : cases) {
            auto t0 = std::chrono::steady_clock::now();
            BasedCocycle bc =
                c.digit ? polynomial_digit_cocycle(c.q, c.m) : modular_carry_cocycle(c.q, c.m);
            double secs = seconds_since(t0);
            if (!golden::matches(bc.cocycle, *c.want))
                return (c.digit ? "digit " : "carry ") + fmt_pair(c.q, c.m) +
                       " differs from the pinned table";
            if (secs >= 1.0)
                return fmt_pair(c.q, c.m) + " took over a second";
        }
        if (!(modular_carry_cocycle(2, 2).quandle == make_dihedral(4)))
            return "carry (2,2) base is not R4";
        if (!(modular_carry_cocycle(3, 1).quandle == make_trivial(3)))
            return "carry (3,1) base is not T3";
        if (!(polynomial_digit_cocycle(2, 2).quandle == make_dihedral(4)))
            return "digit (2,2) base is not the R4 table";
        return "";
    });

    gate.criterion(2, "extension-identifications", 10.0, [&]() -> std::string {
        BasedCocycle c22 = modular_carry_cocycle(2, 2);
        if (!find_isomorphism(build_extension(c22.quandle, c22.cocycle).total, make_dihedral(8)))
            return "carry (2,2) extension is not isomorphic to R8";
        BasedCocycle d22 = polynomial_digit_cocycle(2, 2);
        if (!find_isomorphism(build_extension(d22.quandle, d22.cocycle).total,
                              polynomial_digit_cocycle(2, 3).quandle))
            return "digit (2,2) extension is not the cubic quandle";
        for (int q = 2; q <= 16; ++q)
            for (int m = 1; ipow(q, m + 1) <= 256; ++m) {
                BasedCocycle bc = modular_carry_cocycle(q, m);
                AbelianExtension e = build_extension(bc.quandle, bc.cocycle);
                FiniteQuandle up = modular_carry_cocycle(q, m + 1).quandle;
                if (!(e.total == up) && !find_isomorphism(e.total, up))
                    return "carry " + fmt_pair(q, m) + " extension is not the level above";
            }
        return "";
    });

    gate.criterion(3, "non-triviality", 0, [&]() -> std::string {
        for (auto [q, m] : {std::pair{2, 2}, {3, 1}, {3, 2}}) {
            long long qm = ipow(q, m);
            BasedCocycle carry = modular_carry_cocycle(q, m);
            Chain2 c;
            c.add(0, 1, 1);
            c.add(static_cast<int>(q % qm), static_cast<int>((ipow(q, m - 1) + q - 1) % qm), 1);
            if (!is_cycle2(carry.quandle, c))
                return "carry " + fmt_pair(q, m) + " witness chain is not a cycle";
            if (evaluate(carry.cocycle, c) != 1)
                return "carry " + fmt_pair(q, m) + " pairing is not 1";
            if (is_trivial_extension(build_extension(carry.quandle, carry.cocycle)))
                return "carry " + fmt_pair(q, m) + " extension is trivial";

            BasedCocycle digit = polynomial_digit_cocycle(q, m);
            auto enc = [&, mm = m, qq = q](const std::vector<int>& dig) {
                long long i = 0;
                for (int j = mm - 1; j >= 0; --j)
                    i = i * qq + dig[j];
                return static_cast<int>(i);
            };
            std::vector<int> unit(m, 0); // digits of 1 - T, zero at level one
            if (m >= 2)
                unit[1] = 1;
            std::vector<int> second(m, 0); // (1-T)^{m-1} + (1-T) - 1
            second[0] = (q - 1) % q;
            if (m >= 2)
                second[1] = (second[1] + 1) % q;
            second[m - 1] = (second[m - 1] + 1) % q;
            Chain2 c2;
            c2.add(0, 1, 1);
            c2.add(enc(unit), enc(second), 1);
            if (!is_cycle2(digit.quandle, c2))
                return "digit " + fmt_pair(q, m) + " witness chain is not a cycle";
            if (evaluate(digit.cocycle, c2) != 1)
                return "digit " + fmt_pair(q, m) + " pairing is not 1";
            if (is_trivial_extension(build_extension(digit.quandle, digit.cocycle)))
                return "digit " + fmt_pair(q, m) + " extension is trivial";
        }
        return "";
    });

    gate.criterion(4, "evaluation-matrix", 0, [&]() -> std::string {
        const int expect[3][3] = {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}};
        FiniteQuandle r4 = make_dihedral(4);
        Cochain2 a4 = golden::to_cochain(z2, 4, golden::chi01_03);
        Cochain2 b4 = golden::to_cochain(z2, 4, golden::chi10_12);
        for (int n = 1; n <= 3; ++n) {
            int big = 4 * n;
            FiniteQuandle r = make_dihedral(big);
            std::vector<int> reduction(big);
            for (int u = 0; u < big; ++u)
                reduction[u] = u % 4;
            QuandleMap p = make_quandle_map(r, r4, reduction);
            Cochain2 cochains[3] = {pullback_cocycle(p, a4), pullback_cocycle(p, b4),
                                    dihedral_doubling_cocycle(2 * n).cocycle};
            for (const Cochain2& phi : cochains)
                if (!is_cocycle2(r, phi).ok)
                    return "a candidate cochain fails the cocycle condition at n=" +
                           std::to_string(n);
            Chain2 chains[3];
            chains[0].add(0, 1, 1);
            chains[0].add(2, 1, 1);
            chains[1].add(1, 0, 1);
            chains[1].add(big - 1, 0, 1);
            chains[2].add(0, 1, 1);
            chains[2].add(2, (2 * n + 1) % big, 1);
            std::vector<uint64_t> eval_rows;
            for (int i = 0; i < 3; ++i) {
                uint64_t row = 0;
                for (int j = 0; j < 3; ++j) {
                    if (!is_cycle2(r, chains[j]))
                        return "witness chain is not a cycle at n=" + std::to_string(n);
                    int v = evaluate(cochains[i], chains[j]);
                    if (v != expect[i][j])
                        return "entry (" + std::to_string(i) + "," + std::to_string(j) +
                               ") mismatch at n=" + std::to_string(n);
                    row = row << 1 | static_cast<unsigned>(v);
                }
                eval_rows.push_back(row);
            }
            if (rank_gf2(eval_rows) != 3)
                return "evaluation vectors are dependent over GF(2) at n=" + std::to_string(n);
        }
        return "";
    });

    gate.criterion(5, "state-sum-golden", 60.0, [&]() -> std::string {
        FiniteQuandle s4 = read_quandle_file(data_file("s4.qnd"));
        Cochain2 phi = read_cochain_file(data_file("cjkls.coc"), s4);
        CocycleReport rep = is_cocycle2(s4, phi);
        if (!rep.ok)
            return "bundled cocycle fails the cocycle condition";
        GroupRingValue want_small(z2);
        want_small.add(0, 4);
        want_small.add(1, 12);
        GroupRingValue want_big(z2);
        want_big.add(0, 16);
        want_big.add(1, 48);
        struct Case {
            const char* file;
            const GroupRingValue* want;
        };
        const Case cases[] = {{"trefoil.lnk", &want_small},
                              {"fig8.lnk", &want_small},
                              {"k8_18.lnk", &want_big}};
        for (const Case& c : cases) {
            GroupRingValue got = state_sum(read_diagram_file(data_file(c.file)), s4, phi, false);
            if (!(got == *c.want))
                return std::string(c.file) + " gave " + got.str();
        }
        return "";
    });

    gate.criterion(6, "whitehead-obstruction", 0, [&]() -> std::string {
        FiniteQuandle r8 = read_quandle_file(data_file("r8.qnd"));
        Cochain2 phi = read_cochain_file(data_file("doubling8.coc"), r8);
        LinkDiagram d = read_diagram_file(data_file("whitehead.lnk"));
        ObstructionReport rep = obstruction_report(d, r8, phi);
        if (rep.per_component.size() != 2 || rep.per_component[0].str() != "32 + 32t" ||
            rep.per_component[1].str() != "32 + 32t")
            return "per-component values differ from (32 + 32t, 32 + 32t)";
        if (rep.coloring_count != 64 || rep.extendable_count != 32)
            return "expected 32 of 64 colorings extendable, got " +
                   std::to_string(rep.extendable_count) + " of " +
                   std::to_string(rep.coloring_count);
        int base0 = d.components()[0].base;
        int base1 = d.components()[1].base;
        std::set<std::pair<int, int>> tops;
        for (size_t i = 0; i < rep.colorings.size(); ++i) {
            const std::vector<int>& c = rep.colorings[i].colors;
            tops.insert({c[base0], c[base1]});
            bool extends = std::all_of(rep.holonomy_table[i].begin(), rep.holonomy_table[i].end(),
                                       [](int h) { return h == 0; });
            if (extends != (c[base0] % 2 == c[base1] % 2))
                return "extendable set differs from the equal-parity pairs";
        }
        if (tops.size() != 64)
            return "colorings are not determined by the top arc colors";
        return "";
    });

    gate.criterion(7, "lift-consistency", 0, [&]() -> std::string {
        const char* diagrams[] = {"unknot.lnk",     "unlink2.lnk",    "trefoil.lnk",
                                  "trefoil_r1.lnk", "trefoil_r2.lnk", "trefoil_r3.lnk",
                                  "fig8.lnk",       "k8_18.lnk",      "whitehead.lnk"};
        struct Pair {
            const char* quandle;
            const char* cochain;
        };
        const Pair pairs[] = {{"s4.qnd", "cjkls.coc"}, {"r8.qnd", "doubling8.coc"}};
        for (const Pair& p : pairs) {
            FiniteQuandle x = read_quandle_file(data_file(p.quandle));
            Cochain2 phi = read_cochain_file(data_file(p.cochain), x);
            if (!is_cocycle2(x, phi).ok)
                return std::string(p.cochain) + " fails the cocycle condition";
            AbelianExtension ext = build_extension(x, phi);
            const AbelianGroup& g = phi.group();
            for (const char* file : diagrams) {
                LinkDiagram d = read_diagram_file(data_file(file));
                std::vector<Coloring> colorings = enumerate_colorings(d, x);
                GroupRingValue v = state_sum(d, x, phi, false);
                if (v.mass() != static_cast<long long>(colorings.size()))
                    return std::string(file) + " with " + p.quandle +
                           ": state-sum mass differs from the coloring count";
                // The constant term counts colorings whose total fiber shift
                // vanishes; a coloring lifts iff every per-component shift
                // vanishes.  On knots the two counts coincide, so the constant
                // term is exactly the lift count there.
                long long lifts = 0, sum_zero = 0;
                for (const Coloring& c : colorings) {
                    std::vector<int> h = holonomies(d, x, phi, c);
                    bool zero = std::all_of(h.begin(), h.end(), [](int e) { return e == 0; });
                    int total = 0;
                    for (int e : h)
                        total = g.add(total, e);
                    sum_zero += total == 0;
                    if (lift_coloring(d, ext, c).ok != zero)
                        return std::string(file) + " with " + p.quandle +
                               ": lift outcome disagrees with the holonomy criterion";
                    lifts += zero;
                }
                if (v.coeff(0) != sum_zero)
                    return std::string(file) + " with " + p.quandle +
                           ": constant term differs from the trivial-holonomy count";
                if (d.components().size() == 1 && v.coeff(0) != lifts)
                    return std::string(file) + " with " + p.quandle +
                           ": constant term differs from the lift count";
                std::vector<GroupRingValue> parts = componentwise_state_sum(d, x, phi, false);
                bool all_integer = true;
                for (const GroupRingValue& part : parts)
                    if (part.coeff(0) != part.mass())
                        all_integer = false;
                if (all_integer != (lifts == static_cast<long long>(colorings.size())))
                    return std::string(file) + " with " + p.quandle +
                           ": componentwise integrality differs from full extendability";
            }
        }
        return "";
    });

    gate.criterion(8, "invariance-suite", 0, [&]() -> std::string {
        const char* variants[] = {"trefoil_r1.lnk", "trefoil_r2.lnk", "trefoil_r3.lnk"};
        struct Pair {
            const char* quandle;
            const char* cochain;
        };
        const Pair pairs[] = {{"s4.qnd", "cjkls.coc"}, {"r8.qnd", "doubling8.coc"}};
        for (const Pair& p : pairs) {
            FiniteQuandle x = read_quandle_file(data_file(p.quandle));
            Cochain2 phi = read_cochain_file(data_file(p.cochain), x);
            LinkDiagram base = read_diagram_file(data_file("trefoil.lnk"));
            GroupRingValue want_sum = state_sum(base, x, phi);
            std::vector<GroupRingValue> want_parts = componentwise_state_sum(base, x, phi, false);
            long long want_count = count_colorings(base, x);
            for (const char* file : variants) {
                LinkDiagram d = read_diagram_file(data_file(file));
                if (count_colorings(d, x) != want_count)
                    return std::string(file) + " with " + p.quandle + ": coloring count moved";
                if (!(state_sum(d, x, phi, false) == want_sum))
                    return std::string(file) + " with " + p.quandle + ": state-sum moved";
                std::vector<GroupRingValue> parts = componentwise_state_sum(d, x, phi, false);
                if (parts != want_parts)
                    return std::string(file) + " with " + p.quandle +
                           ": componentwise state-sum moved";
            }
        }
        return "";
    });

    gate.criterion(9, "second-cohomology", 0, [&]() -> std::string {
        FiniteQuandle r4 = make_dihedral(4);
        H2Result h = compute_h2(r4, 2);
        if (h.orders != std::vector<long long>{2, 2, 2, 2})
            return "H2(R4; Z2) computed as " + h.group_string() +
                   ", expected Z2 x Z2 x Z2 x Z2";
        if (h2_rank_gf2(r4) != 4)
            return "independent GF(2) elimination disagrees with rank 4";
        for (const Cochain2& rep : h.representatives) {
            if (!is_cocycle2(r4, rep).ok)
                return "a generator fails the cocycle condition";
            if (is_coboundary(r4, rep))
                return "a generator is a coboundary";
        }
        const char* files[] = {"r3.qnd", "r4.qnd", "r8.qnd", "s4.qnd"};
        for (const char* file : files) {
            FiniteQuandle x = read_quandle_file(data_file(file));
            if (x.size() > 16)
                continue;
            for (int a = 0; a < x.size(); ++a)
                for (int b = 0; b < x.size(); ++b)
                    for (int c = 0; c < x.size(); ++c)
                        if (!boundary2(x, boundary3(x, a, b, c)).terms.empty())
                            return std::string(file) + ": boundary of a boundary is nonzero at (" +
                                   std::to_string(a) + "," + std::to_string(b) + "," +
                                   std::to_string(c) + ")";
        }
        return "";
    });

    std::printf("%d of %d criteria passed\n", gate.passed, gate.passed + gate.failed);
    return gate.failed == 0 ? 0 : 1;
}
