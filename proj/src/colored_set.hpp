#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace cpl {

inline constexpr int kTupleLen = 12;

using Coeffs = std::array<int, kTupleLen>;

// Fold a coefficient into [0, C/2]: the classes +-a (mod C) are the same pair,
// so a and C-a describe the same residues.
int fold_coeff(long C, long a);

// The multiset of allowed part values: for each residue r in [0, C) a copy
// count, plus the parity rule for the partitions drawn from it.
struct ColoredSet {
    long modulus = 1;
    std::vector<int> multiplicity;  // size modulus, residue -> copies
    bool parity_required = false;   // partitions must have an odd number of parts

    int copies_of(long value) const { return multiplicity[value % modulus]; }
    int total_multiplicity() const;
    // Smallest positive integer present in the set, or 0 if the set is empty.
    long min_element() const;

    bool operator==(const ColoredSet&) const = default;
};

// One copy of all positive integers congruent to +-coeff_i (mod C) per index.
// A coefficient of 0 or C/2 still contributes both signed copies of its class.
// Accepts coefficients in [0, C]; values outside throw DomainError.
ColoredSet build_colored_set(long C, const Coeffs& coeffs);

} // namespace cpl
