#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cpl {

// Unsigned arbitrary-precision integer, 64-bit limbs, little-endian.
// Counts in this project are non-negative and never divided, so the
// interface stays small: addition, multiplication, comparison, decimal I/O.
class BigNat {
public:
    BigNat() = default;
    BigNat(uint64_t v) { if (v) limbs_.push_back(v); }

    static BigNat from_decimal(std::string_view s);
    std::string to_decimal() const;

    bool is_zero() const { return limbs_.empty(); }

    BigNat& operator+=(const BigNat& o);
    friend BigNat operator+(BigNat a, const BigNat& b) { a += b; return a; }

    // *this += a * k
    BigNat& add_mul(const BigNat& a, uint64_t k);

    BigNat& mul_u64(uint64_t k);
    friend BigNat operator*(BigNat a, uint64_t k) { a.mul_u64(k); return a; }
    BigNat operator*(const BigNat& o) const;

    std::strong_ordering operator<=>(const BigNat& o) const;
    bool operator==(const BigNat& o) const = default;

    // Fits in uint64_t?  (used by oracles that cross-check native counters)
    bool fits_u64() const { return limbs_.size() <= 1; }
    uint64_t as_u64() const { return limbs_.empty() ? 0 : limbs_[0]; }

    size_t limb_count() const { return limbs_.size(); }

private:
    void trim();
    std::vector<uint64_t> limbs_;
};

} // namespace cpl
