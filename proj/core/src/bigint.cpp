#include "uppertail/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace uppertail {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigUint::BigUint(unsigned long long v) {
    while (v != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffull));
        v >>= 32;
    }
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::from_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("BigUint::from_decimal: empty string");
    BigUint r;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("BigUint::from_decimal: not a digit");
        // r = r * 10 + digit
        std::uint64_t carry = static_cast<std::uint64_t>(c - '0');
        for (auto& limb : r.limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * 10 + carry;
            limb = static_cast<std::uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
        }
        while (carry != 0) {
            r.limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffull));
            carry >>= 32;
        }
    }
    r.trim();
    return r;
}

unsigned long long BigUint::to_u64() const {
    if (limbs_.size() > 2) throw std::overflow_error("BigUint::to_u64: value too large");
    unsigned long long v = 0;
    for (size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
    return v;
}

BigUint& BigUint::operator+=(const BigUint& o) {
    if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t cur = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
        limbs_[i] = static_cast<std::uint32_t>(cur & 0xffffffffull);
        carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUint& BigUint::operator-=(const BigUint& o) {
    if (*this < o) throw std::invalid_argument("BigUint subtraction would go negative");
    std::int64_t borrow = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t cur = static_cast<std::int64_t>(limbs_[i]) - borrow -
                           (i < o.limbs_.size() ? static_cast<std::int64_t>(o.limbs_[i]) : 0);
        if (cur < 0) {
            cur += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        limbs_[i] = static_cast<std::uint32_t>(cur);
    }
    trim();
    return *this;
}

BigUint BigUint::operator+(const BigUint& o) const {
    BigUint r = *this;
    r += o;
    return r;
}

BigUint BigUint::operator-(const BigUint& o) const {
    BigUint r = *this;
    r -= o;
    return r;
}

BigUint BigUint::operator*(const BigUint& o) const {
    if (is_zero() || o.is_zero()) return BigUint();
    BigUint r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        const std::uint64_t a = limbs_[i];
        for (size_t j = 0; j < o.limbs_.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(r.limbs_[i + j]) + a * o.limbs_[j] + carry;
            r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
        }
        size_t k = i + o.limbs_.size();
        while (carry != 0) {
            std::uint64_t cur = static_cast<std::uint64_t>(r.limbs_[k]) + carry;
            r.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

int BigUint::compare(const BigUint& o) const {
    if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size() ? -1 : 1;
    for (size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::string BigUint::to_decimal() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> work = limbs_;
    std::string out;
    while (!work.empty()) {
        // divide by 1e9, collecting the remainder as 9 digits
        std::uint64_t rem = 0;
        for (size_t i = work.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / 1000000000ull);
            rem = cur % 1000000000ull;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        for (int d = 0; d < 9; ++d) {
            out.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    std::reverse(out.begin(), out.end());
    return out;
}

double BigUint::to_double() const {
    double v = 0.0;
    for (size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + static_cast<double>(limbs_[i]);
    return v;
}

BigUint big_binomial(int n, int k) {
    if (k < 0 || k > n) return BigUint();
    k = std::min(k, n - k);
    std::vector<BigUint> row(static_cast<size_t>(k) + 1);
    row[0] = BigUint(1);
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) row[j] += row[j - 1];
    }
    return row[k];
}

} // namespace uppertail
