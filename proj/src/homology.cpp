#include "quandlekit/homology.hpp"

#include <array>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "quandlekit/errors.hpp"
#include "quandlekit/snf.hpp"

namespace quandlekit {

void Chain1::add(int x, long long coeff) {
    auto it = terms.find(x);
    long long next = (it == terms.end() ? 0 : it->second) + coeff;
    if (next == 0) {
        if (it != terms.end())
            terms.erase(it);
    } else {
        terms[x] = next;
    }
}

void Chain2::add(int x, int y, long long coeff) {
    if (x == y)
        return; // degenerate generators vanish in the quandle complex
    auto key = std::make_pair(x, y);
    auto it = terms.find(key);
    long long next = (it == terms.end() ? 0 : it->second) + coeff;
    if (next == 0) {
        if (it != terms.end())
            terms.erase(it);
    } else {
        terms[key] = next;
    }
}

Chain2 parse_chain2(const std::string& text) {
    Chain2 chain;
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto expect = [&](char c) {
        skip();
        if (pos >= text.size() || text[pos] != c)
            throw MalformedInput("bad chain '" + text + "': expected '" + std::string(1, c) +
                                 "' at position " + std::to_string(pos));
        ++pos;
    };
    auto number = [&]() -> long long {
        skip();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            throw MalformedInput("bad chain '" + text + "': expected integer at position " +
                                 std::to_string(start));
        return std::stoll(text.substr(start, pos - start));
    };

    skip();
    if (pos == text.size())
        throw MalformedInput("bad chain: empty");
    bool first = true;
    while (true) {
        skip();
        long long sign = 1;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw MalformedInput("bad chain '" + text + "': expected '+' or '-' at position " +
                                 std::to_string(pos));
        }
        skip();
        long long coeff = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = number();
            expect('*');
        }
        expect('(');
        long long x = number();
        expect(',');
        long long y = number();
        expect(')');
        chain.add(static_cast<int>(x), static_cast<int>(y), sign * coeff);
        first = false;
        skip();
        if (pos == text.size())
            break;
    }
    return chain;
}

std::string chain2_to_string(const Chain2& chain) {
    if (chain.terms.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [pair, coeff] : chain.terms) {
        long long mag = coeff < 0 ? -coeff : coeff;
        if (first)
            out << (coeff < 0 ? "-" : "");
        else
            out << (coeff < 0 ? " - " : " + ");
        if (mag != 1)
            out << mag << '*';
        out << '(' << pair.first << ',' << pair.second << ')';
        first = false;
    }
    return out.str();
}

Cochain2::Cochain2(AbelianGroup group, int quandle_size)
    : group_(std::move(group)), values_(Eigen::MatrixXi::Zero(quandle_size, quandle_size)) {
    if (quandle_size < 1)
        throw MalformedInput("cochain needs quandle size >= 1");
    if (group_.order() > (1LL << 30))
        throw MalformedInput("coefficient group too large for cochain storage");
}

Cochain2::Cochain2(AbelianGroup group, Eigen::MatrixXi values)
    : group_(std::move(group)), values_(std::move(values)) {
    if (values_.rows() == 0 || values_.rows() != values_.cols())
        throw MalformedInput("cochain value table must be square and nonempty");
    if (group_.order() > (1LL << 30))
        throw MalformedInput("coefficient group too large for cochain storage");
    for (int x = 0; x < values_.rows(); ++x)
        for (int y = 0; y < values_.cols(); ++y)
            if (values_(x, y) < 0 || values_(x, y) >= group_.order())
                throw MalformedInput("cochain value at (" + std::to_string(x) + ", " +
                                     std::to_string(y) + ") outside the coefficient group");
    for (int x = 0; x < values_.rows(); ++x)
        if (values_(x, x) != 0)
            throw ValidationFailure("cochain has nonzero value on degenerate pair (" +
                                    std::to_string(x) + ", " + std::to_string(x) + ")");
}

void Cochain2::set(int x, int y, int value) {
    if (x < 0 || x >= size() || y < 0 || y >= size())
        throw MalformedInput("cochain index out of range");
    if (value < 0 || value >= group_.order())
        throw MalformedInput("cochain value outside the coefficient group");
    if (x == y && value != 0)
        throw ValidationFailure("cannot set nonzero value on degenerate pair (" +
                                std::to_string(x) + ", " + std::to_string(x) + ")");
    values_(x, y) = value;
}

Cochain2 Cochain2::operator+(const Cochain2& other) const {
    if (!(group_ == other.group_) || size() != other.size())
        throw MalformedInput("cochain mismatch: different group or quandle size");
    Eigen::MatrixXi out(size(), size());
    for (int x = 0; x < size(); ++x)
        for (int y = 0; y < size(); ++y)
            out(x, y) = group_.add(values_(x, y), other.values_(x, y));
    return Cochain2(group_, std::move(out));
}

Cochain2 Cochain2::operator-(const Cochain2& other) const {
    if (!(group_ == other.group_) || size() != other.size())
        throw MalformedInput("cochain mismatch: different group or quandle size");
    Eigen::MatrixXi out(size(), size());
    for (int x = 0; x < size(); ++x)
        for (int y = 0; y < size(); ++y)
            out(x, y) = group_.subtract(values_(x, y), other.values_(x, y));
    return Cochain2(group_, std::move(out));
}

namespace {

void check_element(const FiniteQuandle& q, int x) {
    if (x < 0 || x >= q.size())
        throw MalformedInput("chain references element " + std::to_string(x) +
                             " outside quandle of size " + std::to_string(q.size()));
}

} // namespace

Chain1 boundary2(const FiniteQuandle& q, int x1, int x2) {
    check_element(q, x1);
    check_element(q, x2);
    Chain1 out;
    if (x1 == x2)
        return out;
    out.add(x1, 1);
    out.add(q.op(x1, x2), -1);
    return out;
}

Chain1 boundary2(const FiniteQuandle& q, const Chain2& chain) {
    Chain1 out;
    for (const auto& [pair, coeff] : chain.terms) {
        check_element(q, pair.first);
        check_element(q, pair.second);
        out.add(pair.first, coeff);
        out.add(q.op(pair.first, pair.second), -coeff);
    }
    return out;
}

Chain2 boundary3(const FiniteQuandle& q, int x1, int x2, int x3) {
    check_element(q, x1);
    check_element(q, x2);
    check_element(q, x3);
    Chain2 out;
    if (x1 == x2 || x2 == x3)
        return out;
    out.add(x1, x3, 1);
    out.add(q.op(x1, x2), x3, -1);
    out.add(x1, x2, -1);
    out.add(q.op(x1, x3), q.op(x2, x3), 1);
    return out;
}

bool is_cycle2(const FiniteQuandle& q, const Chain2& chain) {
    return boundary2(q, chain).terms.empty();
}

CocycleReport is_cocycle2(const FiniteQuandle& q, const Cochain2& phi) {
    if (phi.size() != q.size())
        throw MalformedInput("cochain size does not match quandle size");
    const auto& g = phi.group();
    const int n = q.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int lhs = g.add(phi(x, z), phi(q.op(x, z), q.op(y, z)));
                int rhs = g.add(phi(x, y), phi(q.op(x, y), z));
                if (lhs != rhs)
                    return {false, x, y, z};
            }
    return {};
}

Cochain2 coboundary1(const FiniteQuandle& q, const AbelianGroup& group,
                     const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != q.size())
        throw MalformedInput("coboundary needs one value per quandle element");
    for (int v : f)
        if (v < 0 || v >= group.order())
            throw MalformedInput("coboundary input value outside the coefficient group");
    Eigen::MatrixXi values(q.size(), q.size());
    for (int x = 0; x < q.size(); ++x)
        for (int y = 0; y < q.size(); ++y)
            values(x, y) = group.subtract(f[x], f[q.op(x, y)]);
    return Cochain2(group, std::move(values));
}

int evaluate(const Cochain2& phi, const Chain2& chain) {
    const auto& g = phi.group();
    int total = 0;
    for (const auto& [pair, coeff] : chain.terms) {
        if (pair.first < 0 || pair.first >= phi.size() || pair.second < 0 ||
            pair.second >= phi.size())
            throw MalformedInput("chain references a pair outside the cochain's quandle");
        total = g.add(total, g.scale(coeff, phi(pair.first, pair.second)));
    }
    return total;
}

namespace {

// Nondegenerate pairs in row-major order with their index map.
std::vector<std::pair<int, int>> pair_basis(int n, Eigen::MatrixXi& index) {
    std::vector<std::pair<int, int>> pairs;
    index = Eigen::MatrixXi::Constant(n, n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y) {
                index(x, y) = static_cast<int>(pairs.size());
                pairs.emplace_back(x, y);
            }
    return pairs;
}

// Rows = nondegenerate pairs, columns = elements; (df)(x,y) = f(x) - f(x*y).
IMatrix coboundary_matrix(const FiniteQuandle& q,
                          const std::vector<std::pair<int, int>>& pairs) {
    IMatrix d1 = IMatrix::Zero(static_cast<int>(pairs.size()), q.size());
    for (size_t p = 0; p < pairs.size(); ++p) {
        auto [x, y] = pairs[p];
        d1(p, x) += 1;
        d1(p, q.op(x, y)) -= 1;
    }
    return d1;
}

} // namespace

std::optional<std::vector<int>> is_coboundary(const FiniteQuandle& q, const Cochain2& phi) {
    if (phi.size() != q.size())
        throw MalformedInput("cochain size does not match quandle size");
    const int n = q.size();
    Eigen::MatrixXi index;
    auto pairs = pair_basis(n, index);
    IMatrix d1 = coboundary_matrix(q, pairs);

    const auto& factors = phi.group().factors();
    std::vector<std::vector<int>> factor_values(n, std::vector<int>(factors.size()));
    for (size_t j = 0; j < factors.size(); ++j) {
        IVector b(static_cast<int>(pairs.size()));
        for (size_t p = 0; p < pairs.size(); ++p)
            b(p) = phi.group().decode(phi(pairs[p].first, pairs[p].second))[j];
        auto fj = solve_mod(d1, b, factors[j]);
        if (!fj)
            return std::nullopt;
        for (int x = 0; x < n; ++x)
            factor_values[x][j] = static_cast<int>((*fj)(x));
    }
    std::vector<int> f(n);
    for (int x = 0; x < n; ++x)
        f[x] = phi.group().encode(factor_values[x]);
    return f;
}

bool cohomologous(const FiniteQuandle& q, const Cochain2& phi, const Cochain2& psi) {
    return is_coboundary(q, phi - psi).has_value();
}

long long H2Result::group_order() const {
    long long order = 1;
    for (long long e : orders)
        order *= e;
    return order;
}

std::string H2Result::group_string() const {
    if (orders.empty())
        return "trivial";
    std::ostringstream out;
    for (size_t i = 0; i < orders.size(); ++i) {
        if (i > 0)
            out << " x ";
        out << 'Z' << orders[i];
    }
    return out.str();
}

H2Result compute_h2(const FiniteQuandle& q, int modulus) {
    if (modulus < 2)
        throw MalformedInput("cohomology modulus must be >= 2");
    const int n = q.size();
    Eigen::MatrixXi index;
    auto pairs = pair_basis(n, index);
    const int m = static_cast<int>(pairs.size());
    IMatrix d1 = coboundary_matrix(q, pairs);

    // Rows = nondegenerate triples; the cocycle condition as a matrix on
    // pair-indexed vectors.
    std::vector<std::array<int, 3>> trips;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (x != y && y != z)
                    trips.push_back({x, y, z});
    const int r = static_cast<int>(trips.size());
    IMatrix d2 = IMatrix::Zero(r, m);
    for (int t = 0; t < r; ++t) {
        auto [x, y, z] = trips[t];
        auto bump = [&](int a, int b, long long c) {
            if (a != b)
                d2(t, index(a, b)) += c;
        };
        bump(x, z, 1);
        bump(q.op(x, y), z, -1);
        bump(x, y, -1);
        bump(q.op(x, z), q.op(y, z), 1);
    }

    // K = { v : d2 v = 0 mod modulus } as the projection of an integer
    // kernel; the auxiliary block makes the projection injective.
    IMatrix aug(r, m + r);
    aug.leftCols(m) = d2;
    aug.rightCols(r) = -static_cast<long long>(modulus) * IMatrix::Identity(r, r);
    IMatrix kernel = integer_kernel_basis(aug);
    if (kernel.cols() != m)
        throw std::logic_error("cocycle lattice has unexpected rank");
    IMatrix bk = kernel.topRows(m);

    IMatrix bi(m, n + m);
    bi.leftCols(n) = d1;
    bi.rightCols(m) = static_cast<long long>(modulus) * IMatrix::Identity(m, m);

    auto rel = solve_integer(bk, bi);
    if (!rel)
        throw std::logic_error("coboundary lattice not contained in cocycle lattice");
    SmithForm sf = smith_form(*rel);
    if (sf.rank != m)
        throw std::logic_error("coboundary lattice has unexpected rank");
    IMatrix gens = bk * sf.uinv;

    LatticeReducer reducer(bi);
    H2Result result;
    for (int i = 0; i < m; ++i) {
        long long e = sf.d(i, i);
        if (e <= 1)
            continue;
        result.orders.push_back(e);
        IVector rep = reducer.reduce(gens.col(i));
        Eigen::MatrixXi values = Eigen::MatrixXi::Zero(n, n);
        for (int p = 0; p < m; ++p)
            values(pairs[p].first, pairs[p].second) = static_cast<int>(rep(p));
        result.representatives.emplace_back(AbelianGroup({modulus}), std::move(values));
    }
    return result;
}

} // namespace quandlekit
