#include "bignat.hpp"

#include <stdexcept>

namespace cpl {

using u64 = uint64_t;
using u128 = unsigned __int128;

void BigNat::trim()
{
    while (!limbs_.empty() && limbs_.back() == 0)
        limbs_.pop_back();
}

BigNat& BigNat::operator+=(const BigNat& o)
{
    if (o.limbs_.size() > limbs_.size())
        limbs_.resize(o.limbs_.size(), 0);
    u64 carry = 0;
    size_t i = 0;
    for (; i < o.limbs_.size(); ++i) {
        u128 s = (u128)limbs_[i] + o.limbs_[i] + carry;
        limbs_[i] = (u64)s;
        carry = (u64)(s >> 64);
    }
    for (; carry && i < limbs_.size(); ++i) {
        u128 s = (u128)limbs_[i] + carry;
        limbs_[i] = (u64)s;
        carry = (u64)(s >> 64);
    }
    if (carry)
        limbs_.push_back(carry);
    return *this;
}

BigNat& BigNat::add_mul(const BigNat& a, u64 k)
{
    if (k == 0 || a.is_zero())
        return *this;
    if (k == 1)
        return *this += a;
    if (a.limbs_.size() + 1 > limbs_.size())
        limbs_.resize(a.limbs_.size() + 1, 0);
    u64 carry = 0;
    size_t i = 0;
    for (; i < a.limbs_.size(); ++i) {
        u128 s = (u128)a.limbs_[i] * k + limbs_[i] + carry;
        limbs_[i] = (u64)s;
        carry = (u64)(s >> 64);
    }
    for (; carry && i < limbs_.size(); ++i) {
        u128 s = (u128)limbs_[i] + carry;
        limbs_[i] = (u64)s;
        carry = (u64)(s >> 64);
    }
    if (carry)
        limbs_.push_back(carry);
    trim();
    return *this;
}

BigNat& BigNat::mul_u64(u64 k)
{
    if (k == 0 || is_zero()) {
        limbs_.clear();
        return *this;
    }
    u64 carry = 0;
    for (auto& w : limbs_) {
        u128 p = (u128)w * k + carry;
        w = (u64)p;
        carry = (u64)(p >> 64);
    }
    if (carry)
        limbs_.push_back(carry);
    return *this;
}

BigNat BigNat::operator*(const BigNat& o) const
{
    BigNat r;
    if (is_zero() || o.is_zero())
        return r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        u64 carry = 0;
        u64 x = limbs_[i];
        for (size_t j = 0; j < o.limbs_.size(); ++j) {
            u128 s = (u128)x * o.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = (u64)s;
            carry = (u64)(s >> 64);
        }
        r.limbs_[i + o.limbs_.size()] = carry;
    }
    r.trim();
    return r;
}

std::strong_ordering BigNat::operator<=>(const BigNat& o) const
{
    if (limbs_.size() != o.limbs_.size())
        return limbs_.size() <=> o.limbs_.size();
    for (size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != o.limbs_[i])
            return limbs_[i] <=> o.limbs_[i];
    }
    return std::strong_ordering::equal;
}

BigNat BigNat::from_decimal(std::string_view s)
{
    if (s.empty())
        throw std::invalid_argument("BigNat: empty decimal string");
    BigNat r;
    size_t i = 0;
    while (i < s.size()) {
        // consume up to 19 digits at a time (10^19 fits in u64)
        u64 chunk = 0, scale = 1;
        size_t j = 0;
        for (; j < 19 && i < s.size(); ++j, ++i) {
            char c = s[i];
            if (c < '0' || c > '9')
                throw std::invalid_argument("BigNat: bad digit in decimal string");
            chunk = chunk * 10 + (u64)(c - '0');
            scale *= 10;
        }
        r.mul_u64(scale);
        r += BigNat(chunk);
    }
    return r;
}

std::string BigNat::to_decimal() const
{
    if (is_zero())
        return "0";
    std::vector<u64> work = limbs_;
    std::vector<u64> chunks; // low-order 10^19 chunks first
    constexpr u64 base = 10'000'000'000'000'000'000ull; // 10^19
    while (!work.empty()) {
        u64 rem = 0;
        for (size_t i = work.size(); i-- > 0;) {
            u128 cur = ((u128)rem << 64) | work[i];
            work[i] = (u64)(cur / base);
            rem = (u64)(cur % base);
        }
        while (!work.empty() && work.back() == 0)
            work.pop_back();
        chunks.push_back(rem);
    }
    std::string out = std::to_string(chunks.back());
    for (size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out.append(19 - part.size(), '0');
        out += part;
    }
    return out;
}

} // namespace cpl
