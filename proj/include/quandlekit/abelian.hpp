#pragma once

#include <string>
#include <vector>

namespace quandlekit {

// Finite abelian group Z_{d_1} x ... x Z_{d_k}, every d_i >= 2.  Elements are
// flat indices 0 .. order()-1 in mixed radix with the first factor most
// significant: flat((a_1,..,a_k)) = ((a_1*d_2 + a_2)*d_3 + ...).
class AbelianGroup {
public:
    explicit AbelianGroup(std::vector<int> factors);

    // Parses "Z2", "Z6", "Z2xZ4", ... Throws MalformedInput on anything else.
    static AbelianGroup parse(const std::string& spec);

    const std::vector<int>& factors() const { return factors_; }
    long long order() const { return order_; }
    bool cyclic() const { return factors_.size() == 1; }
    std::string spec_string() const; // "Z2xZ4"

    std::vector<int> decode(int flat) const;
    int encode(const std::vector<int>& coords) const;

    int add(int a, int b) const;
    int negate(int a) const;
    int subtract(int a, int b) const { return add(a, negate(b)); }
    int scale(long long k, int a) const;

    bool operator==(const AbelianGroup& other) const { return factors_ == other.factors_; }

private:
    std::vector<int> factors_;
    long long order_;
};

} // namespace quandlekit
