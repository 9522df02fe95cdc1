#include "quandlekit/extensions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace quandlekit {

AbelianExtension build_extension(const FiniteQuandle& x, const Cochain2& phi) {
    if (phi.size() != x.size())
        throw MalformedInput("cocycle size does not match quandle size");
    CocycleReport rep = is_cocycle2(x, phi);
    if (!rep.ok)
        throw ValidationFailure("not a cocycle: condition fails at (x, y, z) = (" +
                                std::to_string(rep.x) + ", " + std::to_string(rep.y) + ", " +
                                std::to_string(rep.z) + ")");
    const AbelianGroup& a = phi.group();
    const int n = x.size();
    const long long total_size = a.order() * n;
    if (total_size > 4096)
        throw MalformedInput("extension too large: " + std::to_string(total_size) + " elements");
    const int na = static_cast<int>(a.order());

    Eigen::MatrixXi t(total_size, total_size);
    for (int a1 = 0; a1 < na; ++a1)
        for (int x1 = 0; x1 < n; ++x1)
            for (int a2 = 0; a2 < na; ++a2)
                for (int x2 = 0; x2 < n; ++x2)
                    t(a1 * n + x1, a2 * n + x2) =
                        a.add(a1, phi(x1, x2)) * n + x.op(x1, x2);
    FiniteQuandle total(std::move(t), "E_" + x.label() + "_" + a.spec_string());

    std::vector<int> proj(total_size);
    for (int e = 0; e < total_size; ++e)
        proj[e] = e % n;
    QuandleMap pmap = make_quandle_map(total, x, std::move(proj));
    return AbelianExtension{x, a, phi, std::move(total), std::move(pmap)};
}

Cochain2 extract_cocycle(const FiniteQuandle& e, const FiniteQuandle& x, const AbelianGroup& a,
                         const std::vector<std::pair<int, int>>& pairing) {
    const int n = x.size();
    if (static_cast<long long>(e.size()) != a.order() * n)
        throw MalformedInput("sizes do not match: |E| != |A| * |X|");
    if (static_cast<int>(pairing.size()) != e.size())
        throw MalformedInput("pairing needs one entry per extension element");
    std::vector<char> seen(e.size(), 0);
    for (auto [fa, fx] : pairing) {
        if (fa < 0 || fa >= a.order() || fx < 0 || fx >= n)
            throw MalformedInput("pairing entry out of range");
        int flat = fa * n + fx;
        if (seen[flat])
            throw MalformedInput("pairing is not a bijection onto A x X");
        seen[flat] = 1;
    }

    Eigen::MatrixXi values = Eigen::MatrixXi::Constant(n, n, -1);
    for (int e1 = 0; e1 < e.size(); ++e1)
        for (int e2 = 0; e2 < e.size(); ++e2) {
            auto [a1, x1] = pairing[e1];
            auto [x2_a, x2] = pairing[e2];
            (void)x2_a;
            auto [ap, xp] = pairing[e.op(e1, e2)];
            if (xp != x.op(x1, x2))
                throw ValidationFailure(
                    "pairing does not respect the base operation at extension pair (" +
                    std::to_string(e1) + ", " + std::to_string(e2) + ")");
            int v = a.subtract(ap, a1);
            if (values(x1, x2) == -1)
                values(x1, x2) = v;
            else if (values(x1, x2) != v)
                throw ValidationFailure(
                    "fiber translation is not constant on fibers at extension pair (" +
                    std::to_string(e1) + ", " + std::to_string(e2) + ")");
        }
    return Cochain2(a, std::move(values));
}

Cochain2 extract_cocycle(const FiniteQuandle& e, const FiniteQuandle& x, const AbelianGroup& a,
                         const std::vector<int>& projection) {
    const int n = x.size();
    if (static_cast<long long>(e.size()) != a.order() * n)
        throw MalformedInput("sizes do not match: |E| != |A| * |X|");
    if (static_cast<int>(projection.size()) != e.size())
        throw MalformedInput("projection needs one entry per extension element");
    if (!is_homomorphism(e, x, projection))
        throw ValidationFailure("projection is not a quandle homomorphism onto the base");
    const int na = static_cast<int>(a.order());
    std::vector<std::vector<int>> fibers(n);
    for (int el = 0; el < e.size(); ++el)
        fibers[projection[el]].push_back(el);
    for (int xv = 0; xv < n; ++xv)
        if (static_cast<int>(fibers[xv].size()) != na)
            throw ValidationFailure("projection fibers do not all have size |A|");

    // Label fibers with group elements, one base element at a time, pruning
    // whenever some pair of labeled fibers fails to translate by a constant.
    std::vector<int> label(e.size(), -1);
    auto consistent = [&](int labeled) {
        for (int x1 = 0; x1 < labeled; ++x1)
            for (int x2 = 0; x2 < labeled; ++x2) {
                int xp = x.op(x1, x2);
                if (xp >= labeled)
                    continue;
                int expected = -1;
                for (int e1 : fibers[x1])
                    for (int e2 : fibers[x2]) {
                        int v = a.subtract(label[e.op(e1, e2)], label[e1]);
                        if (expected == -1)
                            expected = v;
                        else if (v != expected)
                            return false;
                    }
            }
        return true;
    };
    std::function<bool(int)> assign_fiber = [&](int k) -> bool {
        if (k == n)
            return true;
        std::vector<int> perm(na);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            for (int i = 0; i < na; ++i)
                label[fibers[k][i]] = perm[i];
            if (consistent(k + 1) && assign_fiber(k + 1))
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (int i = 0; i < na; ++i)
            label[fibers[k][i]] = -1;
        return false;
    };
    if (!assign_fiber(0))
        throw ValidationFailure(
            "no fiber labeling exhibits this quandle as an abelian extension over the given "
            "projection");

    std::vector<std::pair<int, int>> pairing(e.size());
    for (int el = 0; el < e.size(); ++el)
        pairing[el] = {label[el], projection[el]};
    return extract_cocycle(e, x, a, pairing);
}

BasedCocycle modular_carry_cocycle(int q, int m) {
    if (q < 2 || m < 1)
        throw MalformedInput("carry cocycle needs q >= 2 and m >= 1");
    long long qm = 1;
    for (int i = 0; i < m; ++i) {
        qm *= q;
        if (qm > 2048)
            throw ValidationFailure("carry cocycle base too large: more than 2048 elements");
    }
    const long long qm1 = qm * q;
    FiniteQuandle base = make_alexander(static_cast<int>(qm), {q - 1, 1});

    const int n = static_cast<int>(qm);
    Eigen::MatrixXi values(n, n);
    for (int av = 0; av < n; ++av)
        for (int bv = 0; bv < n; ++bv) {
            long long s = (1 - static_cast<long long>(q)) * av + static_cast<long long>(q) * bv;
            long long big = ((s % qm1) + qm1) % qm1;
            long long small = big % qm;
            if ((big - small) % qm != 0)
                throw std::logic_error("carry cocycle: residue difference not divisible");
            values(av, bv) = static_cast<int>((big - small) / qm % q);
        }
    Cochain2 phi(AbelianGroup({q}), std::move(values));
    CocycleReport rep = is_cocycle2(base, phi);
    if (!rep.ok)
        throw std::logic_error("carry cocycle failed the cocycle condition");
    return {std::move(base), std::move(phi)};
}

BasedCocycle polynomial_digit_cocycle(int q, int m) {
    if (q < 2 || m < 1)
        throw MalformedInput("digit cocycle needs q >= 2 and m >= 1");
    long long count = 1;
    for (int i = 0; i < m; ++i) {
        count *= q;
        if (count > 2048)
            throw ValidationFailure("digit cocycle base too large: more than 2048 elements");
    }
    const int n = static_cast<int>(count);

    // Elements of Z_q[T]/(1-T)^m as (1-T)-adic digit vectors, flat index
    // sum A_j q^j.  In digits, a*b keeps digit 0 and adds the previous
    // digit difference: C_j = A_j - A_{j-1} + B_{j-1}.
    auto digits = [&](int flat) {
        std::vector<int> d(m);
        for (int j = 0; j < m; ++j) {
            d[j] = flat % q;
            flat /= q;
        }
        return d;
    };
    auto star_digits = [&](const std::vector<int>& av, const std::vector<int>& bv, int levels) {
        std::vector<int> c(levels);
        c[0] = av[0];
        for (int j = 1; j < levels; ++j)
            c[j] = ((av[j] - av[j - 1] + bv[j - 1]) % q + q) % q;
        return c;
    };
    auto flatten = [&](const std::vector<int>& d) {
        long long flat = 0;
        for (size_t j = d.size(); j-- > 0;)
            flat = flat * q + d[j];
        return static_cast<int>(flat);
    };

    Eigen::MatrixXi table(n, n);
    Eigen::MatrixXi values(n, n);
    for (int av = 0; av < n; ++av) {
        auto da = digits(av);
        auto da1 = da;
        da1.push_back(0); // embed with top digit zero, one level up
        for (int bv = 0; bv < n; ++bv) {
            auto db = digits(bv);
            table(av, bv) = flatten(star_digits(da, db, m));
            values(av, bv) = ((db[m - 1] - da[m - 1]) % q + q) % q;

            // The top digit dropped by truncating the one-level-up product
            // must be exactly the cocycle value.
            auto db1 = db;
            db1.push_back(0);
            auto c1 = star_digits(da1, db1, m + 1);
            if (c1[m] != values(av, bv))
                throw std::logic_error("digit cocycle disagrees with its section");
        }
    }
    FiniteQuandle base(std::move(table), "nil" + std::to_string(q) + "e" + std::to_string(m));
    Cochain2 phi(AbelianGroup({q}), std::move(values));
    CocycleReport rep = is_cocycle2(base, phi);
    if (!rep.ok)
        throw std::logic_error("digit cocycle failed the cocycle condition");
    return {std::move(base), std::move(phi)};
}

Cochain2 pullback_cocycle(const QuandleMap& p, const Cochain2& phi) {
    if (phi.size() != p.target.size())
        throw MalformedInput("cocycle size does not match the map's target");
    const int n = p.source.size();
    Eigen::MatrixXi values(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            values(u, v) = u == v ? 0 : phi(p(u), p(v));
    return Cochain2(phi.group(), std::move(values));
}

DihedralSplitting crt_decompose_dihedral(int n) {
    if (n < 1)
        throw MalformedInput("dihedral splitting needs n >= 1");
    std::vector<long long> moduli;
    int rest = n;
    for (int p = 2; static_cast<long long>(p) * p <= rest; ++p) {
        if (rest % p != 0)
            continue;
        long long pk = 1;
        while (rest % p == 0) {
            pk *= p;
            rest /= p;
        }
        moduli.push_back(pk);
    }
    if (rest > 1)
        moduli.push_back(rest);

    FiniteQuandle rn = make_dihedral(n);
    if (moduli.size() <= 1) {
        std::vector<int> identity(n);
        std::iota(identity.begin(), identity.end(), 0);
        QuandleMap iso = make_quandle_map(rn, rn, std::move(identity));
        if (moduli.empty())
            moduli.push_back(n); // n = 1
        return {rn, std::move(iso), std::move(moduli)};
    }

    FiniteQuandle product = make_dihedral(static_cast<int>(moduli[0]));
    for (size_t i = 1; i < moduli.size(); ++i)
        product = make_product(product, make_dihedral(static_cast<int>(moduli[i])));

    std::vector<int> images(n);
    for (int xv = 0; xv < n; ++xv) {
        long long flat = 0;
        for (long long mod : moduli)
            flat = flat * mod + xv % mod;
        images[xv] = static_cast<int>(flat);
    }
    std::vector<char> hit(n, 0);
    for (int v : images) {
        if (hit[v])
            throw std::logic_error("residue map failed to be a bijection");
        hit[v] = 1;
    }
    QuandleMap iso = make_quandle_map(rn, product, std::move(images));
    return {std::move(product), std::move(iso), std::move(moduli)};
}

BasedCocycle dihedral_doubling_cocycle(int n) {
    if (n < 1)
        throw MalformedInput("doubling cocycle needs n >= 1");
    const int two_n = 2 * n;
    int m = 0, rest = two_n;
    while (rest % 2 == 0) {
        rest /= 2;
        ++m;
    }
    const int two_part = two_n / rest;

    FiniteQuandle base = make_dihedral(two_n);
    BasedCocycle carry = modular_carry_cocycle(2, m);

    std::vector<int> reduce(two_n);
    for (int xv = 0; xv < two_n; ++xv)
        reduce[xv] = xv % two_part;
    QuandleMap p = make_quandle_map(base, carry.quandle, std::move(reduce));
    Cochain2 phi = pullback_cocycle(p, carry.cocycle);

    AbelianExtension ext = build_extension(base, phi);
    if (!find_isomorphism(ext.total, make_dihedral(4 * n)))
        throw std::logic_error("doubling extension is not the double dihedral quandle");
    return {std::move(base), std::move(phi)};
}

bool is_trivial_extension(const AbelianExtension& ext) {
    return is_coboundary(ext.base, ext.cocycle).has_value();
}

} // namespace quandlekit
