#include "quandlekit/quandle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "quandlekit/snf.hpp"

namespace quandlekit {

std::string AxiomWitness::describe() const {
    std::ostringstream out;
    switch (axiom) {
    case Axiom::Idempotence:
        out << "idempotence fails: " << a << " * " << a << " != " << a;
        break;
    case Axiom::RightTranslation:
        out << "right translation by " << b << " is not a bijection (elements " << a << " and "
            << c << " collide)";
        break;
    case Axiom::Distributivity:
        out << "self-distributivity fails at (a, b, c) = (" << a << ", " << b << ", " << c
            << "): (a*b)*c != (a*c)*(b*c)";
        break;
    }
    return out.str();
}

std::string TableReport::describe() const {
    if (!well_formed)
        return shape_problem;
    std::ostringstream out;
    for (size_t i = 0; i < witnesses.size(); ++i) {
        if (i > 0)
            out << '\n';
        out << witnesses[i].describe();
    }
    return out.str();
}

TableReport verify_table(const Eigen::MatrixXi& table) {
    TableReport report;
    const int n = static_cast<int>(table.rows());
    if (n == 0 || table.cols() != n) {
        report.well_formed = false;
        report.shape_problem = "table must be square and nonempty (got " + std::to_string(n) +
                               "x" + std::to_string(table.cols()) + ")";
        return report;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (table(a, b) < 0 || table(a, b) >= n) {
                report.well_formed = false;
                report.shape_problem = "entry at (" + std::to_string(a) + ", " +
                                       std::to_string(b) + ") is " + std::to_string(table(a, b)) +
                                       ", outside 0.." + std::to_string(n - 1);
                return report;
            }

    for (int a = 0; a < n; ++a)
        if (table(a, a) != a)
            report.witnesses.push_back({AxiomWitness::Axiom::Idempotence, a, a, -1});

    for (int b = 0; b < n; ++b) {
        std::vector<int> seen(n, -1);
        for (int a = 0; a < n; ++a) {
            int v = table(a, b);
            if (seen[v] >= 0) {
                report.witnesses.push_back({AxiomWitness::Axiom::RightTranslation, seen[v], b, a});
                break;
            }
            seen[v] = a;
        }
    }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table(table(a, b), c) != table(table(a, c), table(b, c))) {
                    report.witnesses.push_back({AxiomWitness::Axiom::Distributivity, a, b, c});
                    if (report.witnesses.size() >= 16)
                        return report; // enough evidence
                }
    return report;
}

FiniteQuandle::FiniteQuandle(Eigen::MatrixXi table, std::string label)
    : table_(std::move(table)), label_(std::move(label)) {
    TableReport report = verify_table(table_);
    if (!report.well_formed)
        throw MalformedInput("not a quandle table: " + report.shape_problem);
    if (!report.witnesses.empty())
        throw ValidationFailure("not a quandle: " + report.witnesses.front().describe());
    const int n = size();
    solve_.resize(n, n);
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a)
            solve_(table_(a, b), b) = a;
}

FiniteQuandle make_trivial(int n) {
    if (n < 1)
        throw MalformedInput("trivial quandle needs n >= 1");
    Eigen::MatrixXi t(n, n);
    for (int a = 0; a < n; ++a)
        t.row(a).setConstant(a);
    return FiniteQuandle(std::move(t), "T" + std::to_string(n));
}

FiniteQuandle make_dihedral(int n) {
    if (n < 1)
        throw MalformedInput("dihedral quandle needs n >= 1");
    Eigen::MatrixXi t(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t(a, b) = ((2 * b - a) % n + n) % n;
    return FiniteQuandle(std::move(t), "R" + std::to_string(n));
}

AlexanderPresentation::AlexanderPresentation(int m, std::vector<int> coeffs)
    : modulus(m), h(std::move(coeffs)) {
    if (modulus < 1)
        throw MalformedInput("alexander modulus must be >= 1");
    if (h.size() < 2)
        throw MalformedInput("alexander polynomial must have degree >= 1");
    for (int& c : h)
        c = ((c % modulus) + modulus) % modulus;
    if (std::gcd(h.front(), modulus) != 1 || std::gcd(h.back(), modulus) != 1)
        throw ValidationFailure(
            "alexander quotient is not finite: constant and leading coefficients of h must be "
            "units mod " +
            std::to_string(modulus));
}

long long AlexanderPresentation::element_count() const {
    long long count = 1;
    for (int i = 0; i < degree(); ++i) {
        count *= modulus;
        if (count > 2048)
            throw ValidationFailure("alexander quandle too large: more than 2048 elements");
    }
    return count;
}

std::vector<int> AlexanderPresentation::decode(long long flat) const {
    std::vector<int> coeffs(degree());
    for (int i = 0; i < degree(); ++i) {
        coeffs[i] = static_cast<int>(flat % modulus);
        flat /= modulus;
    }
    return coeffs;
}

long long AlexanderPresentation::encode(const std::vector<int>& coeffs) const {
    long long flat = 0;
    for (int i = degree(); i-- > 0;) {
        int c = ((coeffs[i] % modulus) + modulus) % modulus;
        flat = flat * modulus + c;
    }
    return flat;
}

std::string AlexanderPresentation::label() const {
    std::ostringstream out;
    out << 'A' << modulus << '_';
    for (size_t i = 0; i < h.size(); ++i) {
        if (i > 0)
            out << '.';
        out << h[i];
    }
    return out.str();
}

FiniteQuandle make_alexander(const AlexanderPresentation& pres) {
    const int n = pres.modulus;
    const int d = pres.degree();
    const long long count = pres.element_count();

    // T^d = -h_d^{-1} (h_0 + h_1 T + ... + h_{d-1} T^{d-1})
    const long long lead_inv = mod_inverse(pres.h.back(), n);
    auto mul_t = [&](const std::vector<int>& v) {
        std::vector<int> w(d);
        long long top = v[d - 1];
        for (int i = 0; i < d; ++i) {
            long long val = (i > 0 ? v[i - 1] : 0) - top * lead_inv % n * pres.h[i];
            w[i] = static_cast<int>(((val % n) + n) % n);
        }
        return w;
    };

    std::vector<std::vector<int>> coeffs(count);
    for (long long e = 0; e < count; ++e)
        coeffs[e] = pres.decode(e);

    Eigen::MatrixXi t(count, count);
    std::vector<int> diff(d);
    for (long long a = 0; a < count; ++a)
        for (long long b = 0; b < count; ++b) {
            const auto& va = coeffs[a];
            const auto& vb = coeffs[b];
            for (int i = 0; i < d; ++i)
                diff[i] = ((va[i] - vb[i]) % n + n) % n;
            auto res = mul_t(diff); // a*b = T(a - b) + b
            for (int i = 0; i < d; ++i)
                res[i] = (res[i] + vb[i]) % n;
            t(a, b) = static_cast<int>(pres.encode(res));
        }
    return FiniteQuandle(std::move(t), pres.label());
}

FiniteQuandle make_alexander(int modulus, std::vector<int> h) {
    return make_alexander(AlexanderPresentation(modulus, std::move(h)));
}

namespace {

int group_mul(const Eigen::MatrixXi& g, int a, int b) { return g(a, b); }

void validate_group(const Eigen::MatrixXi& g, int& identity, std::vector<int>& inverse) {
    const int n = static_cast<int>(g.rows());
    if (n == 0 || g.cols() != n)
        throw MalformedInput("group table must be square and nonempty");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g(a, b) < 0 || g(a, b) >= n)
                throw MalformedInput("group table entry out of range at (" + std::to_string(a) +
                                     ", " + std::to_string(b) + ")");
    identity = -1;
    for (int e = 0; e < n && identity < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            ok = g(e, x) == x && g(x, e) == x;
        if (ok)
            identity = e;
    }
    if (identity < 0)
        throw ValidationFailure("not a group: no identity element");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g(g(a, b), c) != g(a, g(b, c)))
                    throw ValidationFailure("not a group: associativity fails at (" +
                                            std::to_string(a) + ", " + std::to_string(b) + ", " +
                                            std::to_string(c) + ")");
    inverse.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (g(a, b) == identity && g(b, a) == identity) {
                inverse[a] = b;
                break;
            }
        if (inverse[a] < 0)
            throw ValidationFailure("not a group: element " + std::to_string(a) +
                                    " has no inverse");
    }
}

} // namespace

FiniteQuandle make_conjugation(const Eigen::MatrixXi& group_table, int nfold,
                               const std::string& group_name) {
    int identity;
    std::vector<int> inverse;
    validate_group(group_table, identity, inverse);
    const int n = static_cast<int>(group_table.rows());

    auto power = [&](int b, int exp) {
        int base = exp < 0 ? inverse[b] : b;
        int count = exp < 0 ? -exp : exp;
        int acc = identity;
        for (int i = 0; i < count; ++i)
            acc = group_mul(group_table, acc, base);
        return acc;
    };

    Eigen::MatrixXi t(n, n);
    for (int b = 0; b < n; ++b) {
        int pb = power(b, nfold);
        int pbinv = inverse[pb];
        for (int a = 0; a < n; ++a)
            t(a, b) = group_mul(group_table, group_mul(group_table, pbinv, a), pb);
    }
    return FiniteQuandle(std::move(t), "conj" + std::to_string(nfold) + "_" + group_name);
}

FiniteQuandle make_product(const FiniteQuandle& x, const FiniteQuandle& y) {
    const int nx = x.size(), ny = y.size();
    Eigen::MatrixXi t(nx * ny, nx * ny);
    for (int a = 0; a < nx * ny; ++a)
        for (int b = 0; b < nx * ny; ++b)
            t(a, b) = x.op(a / ny, b / ny) * ny + y.op(a % ny, b % ny);
    return FiniteQuandle(std::move(t), x.label() + "x" + y.label());
}

bool is_homomorphism(const FiniteQuandle& source, const FiniteQuandle& target,
                     const std::vector<int>& images) {
    if (static_cast<int>(images.size()) != source.size())
        return false;
    for (int v : images)
        if (v < 0 || v >= target.size())
            return false;
    for (int a = 0; a < source.size(); ++a)
        for (int b = 0; b < source.size(); ++b)
            if (images[source.op(a, b)] != target.op(images[a], images[b]))
                return false;
    return true;
}

QuandleMap make_quandle_map(const FiniteQuandle& source, const FiniteQuandle& target,
                            std::vector<int> images) {
    if (static_cast<int>(images.size()) != source.size())
        throw MalformedInput("quandle map needs one image per source element");
    for (int v : images)
        if (v < 0 || v >= target.size())
            throw MalformedInput("quandle map image out of range");
    for (int a = 0; a < source.size(); ++a)
        for (int b = 0; b < source.size(); ++b)
            if (images[source.op(a, b)] != target.op(images[a], images[b]))
                throw ValidationFailure("not a homomorphism: f(a*b) != f(a)*f(b) at (a, b) = (" +
                                        std::to_string(a) + ", " + std::to_string(b) + ")");
    return QuandleMap{source, target, std::move(images)};
}

namespace {

// Sorted cycle lengths of the right translation a -> a * b.
std::vector<int> translation_signature(const FiniteQuandle& q, int b) {
    const int n = q.size();
    std::vector<int> lens;
    std::vector<char> seen(n, 0);
    for (int start = 0; start < n; ++start) {
        if (seen[start])
            continue;
        int len = 0;
        for (int a = start; !seen[a]; a = q.op(a, b)) {
            seen[a] = 1;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
}

struct IsoSearch {
    const FiniteQuandle& x;
    const FiniteQuandle& y;
    int n;
    std::vector<std::vector<int>> sig_x, sig_y;
    std::vector<int> f, finv;

    bool assign(int a, int t, std::vector<int>& trail) {
        if (f[a] != -1)
            return f[a] == t;
        if (finv[t] != -1)
            return false;
        if (sig_x[a] != sig_y[t])
            return false;
        f[a] = t;
        finv[t] = a;
        trail.push_back(a);
        return true;
    }

    // Propagate f(a*b) = f(a)*f(b) over every pair touching a new assignment
    // until nothing new is forced.  trail doubles as the work queue.
    bool close(std::vector<int>& trail) {
        for (size_t qi = 0; qi < trail.size(); ++qi) {
            int a = trail[qi];
            for (int b = 0; b < n; ++b) {
                if (f[b] == -1)
                    continue;
                if (!assign(x.op(a, b), y.op(f[a], f[b]), trail))
                    return false;
                if (!assign(x.op(b, a), y.op(f[b], f[a]), trail))
                    return false;
            }
        }
        return true;
    }

    bool dfs() {
        int a = -1;
        for (int i = 0; i < n; ++i)
            if (f[i] == -1) {
                a = i;
                break;
            }
        if (a == -1)
            return true;
        for (int t = 0; t < n; ++t) {
            if (finv[t] != -1 || sig_x[a] != sig_y[t])
                continue;
            std::vector<int> trail;
            if (assign(a, t, trail) && close(trail) && dfs())
                return true;
            for (int e : trail) {
                finv[f[e]] = -1;
                f[e] = -1;
            }
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteQuandle& x, const FiniteQuandle& y) {
    if (x.size() != y.size())
        return std::nullopt;
    const int n = x.size();
    IsoSearch search{x, y, n, {}, {}, std::vector<int>(n, -1), std::vector<int>(n, -1)};
    for (int i = 0; i < n; ++i) {
        search.sig_x.push_back(translation_signature(x, i));
        search.sig_y.push_back(translation_signature(y, i));
    }
    auto sorted_x = search.sig_x, sorted_y = search.sig_y;
    std::sort(sorted_x.begin(), sorted_x.end());
    std::sort(sorted_y.begin(), sorted_y.end());
    if (sorted_x != sorted_y)
        return std::nullopt;
    if (!search.dfs())
        return std::nullopt;
    return search.f;
}

} // namespace quandlekit
