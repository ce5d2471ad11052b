#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace uppertail {

// Unsigned arbitrary-precision integer, little-endian 32-bit limbs.
// Only the operations needed for exact independent-set counting live here:
// add, subtract (a >= b), multiply, compare, decimal I/O. Counts are
// nonnegative by nature so there is no sign handling.
class BigUint {
public:
    BigUint() = default;
    BigUint(unsigned long long v);

    static BigUint from_decimal(const std::string& s);

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 2; }
    unsigned long long to_u64() const; // throws std::overflow_error if too big

    BigUint& operator+=(const BigUint& o);
    BigUint& operator-=(const BigUint& o); // requires *this >= o
    BigUint operator+(const BigUint& o) const;
    BigUint operator-(const BigUint& o) const;
    BigUint operator*(const BigUint& o) const;

    int compare(const BigUint& o) const;
    bool operator==(const BigUint& o) const { return compare(o) == 0; }
    bool operator!=(const BigUint& o) const { return compare(o) != 0; }
    bool operator<(const BigUint& o) const { return compare(o) < 0; }
    bool operator<=(const BigUint& o) const { return compare(o) <= 0; }
    bool operator>(const BigUint& o) const { return compare(o) > 0; }
    bool operator>=(const BigUint& o) const { return compare(o) >= 0; }

    std::string to_decimal() const;
    double to_double() const;

    const std::vector<std::uint32_t>& limbs() const { return limbs_; }

private:
    void trim();
    std::vector<std::uint32_t> limbs_; // empty == zero
};

// C(n, k) as an exact integer.
BigUint big_binomial(int n, int k);

} // namespace uppertail
