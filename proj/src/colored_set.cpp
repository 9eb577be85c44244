#include "colored_set.hpp"

#include "errors.hpp"

#include <numeric>
#include <string>

namespace cpl {

int fold_coeff(long C, long a)
{
    long r = ((a % C) + C) % C;
    return (int)std::min(r, C - r);
}

int ColoredSet::total_multiplicity() const
{
    return std::accumulate(multiplicity.begin(), multiplicity.end(), 0);
}

long ColoredSet::min_element() const
{
    // residue r != 0 is itself the smallest member of its class; residue 0
    // starts at C.
    long best = 0;
    for (long r = 1; r < modulus; ++r)
        if (multiplicity[r] > 0 && (best == 0 || r < best))
            best = r;
    if (multiplicity[0] > 0 && (best == 0 || modulus < best))
        best = modulus;
    return best;
}

ColoredSet build_colored_set(long C, const Coeffs& coeffs)
{
    if (C < 1)
        throw DomainError("modulus must be >= 1");
    ColoredSet set;
    set.modulus = C;
    set.multiplicity.assign(C, 0);
    bool all_nonzero = true;
    for (int a : coeffs) {
        if (a < 0 || a > C)
            throw DomainError("coefficient " + std::to_string(a) +
                              " out of range [0, " + std::to_string(C) + "]");
        long r = a % C;
        set.multiplicity[r] += 1;
        set.multiplicity[(C - r) % C] += 1;
        if (r == 0)
            all_nonzero = false;
    }
    set.parity_required = all_nonzero;
    return set;
}

} // namespace cpl
