#include "quandlekit/abelian.hpp"

#include <charconv>
#include <sstream>

#include "quandlekit/errors.hpp"

namespace quandlekit {

AbelianGroup::AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
    if (factors_.empty())
        throw MalformedInput("abelian group needs at least one factor");
    order_ = 1;
    for (int d : factors_) {
        if (d < 2)
            throw MalformedInput("abelian group factor must be >= 2, got " + std::to_string(d));
        order_ *= d;
        if (order_ > (1LL << 40))
            throw MalformedInput("abelian group order too large");
    }
}

AbelianGroup AbelianGroup::parse(const std::string& spec) {
    std::vector<int> factors;
    size_t pos = 0;
    while (pos < spec.size()) {
        if (spec[pos] != 'Z')
            throw MalformedInput("bad group spec '" + spec + "': expected 'Z' at position " +
                                 std::to_string(pos));
        ++pos;
        int value = 0;
        auto [next, ec] = std::from_chars(spec.data() + pos, spec.data() + spec.size(), value);
        if (ec != std::errc() || next == spec.data() + pos)
            throw MalformedInput("bad group spec '" + spec + "': expected integer after 'Z'");
        factors.push_back(value);
        pos = static_cast<size_t>(next - spec.data());
        if (pos < spec.size()) {
            if (spec[pos] != 'x')
                throw MalformedInput("bad group spec '" + spec + "': expected 'x' between factors");
            ++pos;
            if (pos == spec.size())
                throw MalformedInput("bad group spec '" + spec + "': trailing 'x'");
        }
    }
    if (factors.empty())
        throw MalformedInput("bad group spec '" + spec + "': empty");
    return AbelianGroup(std::move(factors));
}

std::string AbelianGroup::spec_string() const {
    std::ostringstream out;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (i > 0)
            out << 'x';
        out << 'Z' << factors_[i];
    }
    return out.str();
}

std::vector<int> AbelianGroup::decode(int flat) const {
    std::vector<int> coords(factors_.size());
    for (size_t i = factors_.size(); i-- > 0;) {
        coords[i] = flat % factors_[i];
        flat /= factors_[i];
    }
    return coords;
}

int AbelianGroup::encode(const std::vector<int>& coords) const {
    long long flat = 0;
    for (size_t i = 0; i < factors_.size(); ++i) {
        int c = coords[i] % factors_[i];
        if (c < 0)
            c += factors_[i];
        flat = flat * factors_[i] + c;
    }
    return static_cast<int>(flat);
}

int AbelianGroup::add(int a, int b) const {
    auto ca = decode(a), cb = decode(b);
    for (size_t i = 0; i < factors_.size(); ++i)
        ca[i] = (ca[i] + cb[i]) % factors_[i];
    return encode(ca);
}

int AbelianGroup::negate(int a) const {
    auto ca = decode(a);
    for (size_t i = 0; i < factors_.size(); ++i)
        ca[i] = (factors_[i] - ca[i]) % factors_[i];
    return encode(ca);
}

int AbelianGroup::scale(long long k, int a) const {
    auto ca = decode(a);
    for (size_t i = 0; i < factors_.size(); ++i) {
        long long v = (k % factors_[i]) * ca[i] % factors_[i];
        ca[i] = static_cast<int>(v < 0 ? v + factors_[i] : v);
    }
    return encode(ca);
}

} // namespace quandlekit
