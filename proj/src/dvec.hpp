#pragma once

#include "colored_set.hpp"

#include <array>
#include <cstdint>

namespace cpl {

using Tuple12 = std::array<int64_t, kTupleLen>;

// Element of D = { d in Z^12 u (Z+1/2)^12 : Sum d_i odd }, stored as the
// doubled tuple t_i = 2 d_i.  All t_i share one parity; Sum t_i == 2 (mod 4).
// The parity-uniformity is structural and always enforced; the odd-sum
// requirement can be waived for tuples that only feed the value form.
struct DVec {
    Tuple12 t{};

    DVec() = default;
    explicit DVec(const Tuple12& doubled, bool require_odd_sum = true);
    static DVec from_ints(const std::array<int, kTupleLen>& d);

    bool half_integer() const { return t[0] & 1; }
    int64_t doubled_sum() const;
    // Sum of d_i (an odd integer).
    int64_t coord_sum() const { return doubled_sum() / 2; }
    // Sum of d_i^2 scaled by 4 (= Sum t_i^2).
    int64_t norm4() const;

    bool operator==(const DVec&) const = default;
};

// value(d) = C * Sum C(d_i, 2) + Sum coeff_i d_i + offset, evaluated in
// 8x-scaled integers; a non-divisible result means the element does not
// belong to this context and raises a DomainError.
struct ValueCtx {
    long C = 1;
    Coeffs coeffs{};
    long offset = 0;

    int64_t value8(const Tuple12& t) const;
    int64_t value(const DVec& d) const;
};

// The 12 pairwise-orthogonal +-1 vectors used by the reflection argument.
// The literal is checked on first use: all 66 cross products vanish and all
// 12 self products equal 12.
class ReflectionBasis {
public:
    static const ReflectionBasis& instance();
    int at(int i, int j) const { return v_[i][j]; }
    // d . V_i as an integer (always odd for d in D).
    int64_t dot(const DVec& d, int i) const;

private:
    ReflectionBasis();
    int v_[kTupleLen][kTupleLen];
};

// r_i(d) = d - (d.V_i / 6) V_i; requires d.V_i == 0 (mod 3).  Norm-preserving,
// type-flipping involution.
DVec lemma1_reflect(const DVec& d, int i);

struct Residual {
    int z_index = 0;           // which of the 24 signed unit vectors, see below
    Tuple12 f{};               // f_i = -x_i y_i
    int64_t pent_value() const; // Sum f_i (3 f_i - 1) + 1  ( = ||d||^2 )
    bool f_sum_even() const;
};

// z_index convention: the 24 signed unit tuples are ordered position-major
// with +e_j before -e_j, i.e. index = 2j for +e_j and 2j+1 for -e_j.
Residual lemma1_residual(const DVec& d);
DVec lemma1_reconstruct(int z_index, const Tuple12& f);

// The half-integer flip d_i = 1/2 - e_{13-i}: valid when A_i + B_{13-i} = C/2
// for all i and m = Sum A_i / 2 - 3C/2; the value identity
//   value(d; C, A, 0) == value(e; C, B, m)
// is asserted on every call.
DVec lemma3_flip(const std::array<int, kTupleLen>& e, long C, const Coeffs& A,
                 const Coeffs& B, long m);

// --- three-quadruple involution machinery -----------------------------------

// Element of W: three quadruples, each uniformly integer or half-integer,
// with odd total coordinate sum.  Doubled storage as in DVec.
struct WElement {
    Tuple12 t{};
    explicit WElement(const Tuple12& doubled, bool validate = true);
    WElement() = default;
    bool quadruple_half(int g) const { return t[4 * g] & 1; }
    int half_quadruples() const;
    bool operator==(const WElement&) const = default;
};

// Coefficient data of the three-quadruple value form: the value of w is
// C * Sum C(d_i,2) + Sum_k a[k] * (d_k + d_{k+4} + d_{k+8}).
struct QuadrupleCtx {
    long C = 2;
    std::array<int, 4> a{};
    long mstar = 0;

    // validates a_i + b_{5-i} = C/2 with b = C/2 - reversed(a), and
    // a1+a4 = a2+a3 = C/2 + mstar
    static QuadrupleCtx make(long C, const std::array<int, 4>& a, long mstar);
    int64_t value8(const Tuple12& t) const;
    int64_t value(const WElement& w) const;
};

// Per quadruple, d*_i = (quadruple sum)/2 - d_{reversed i}.  Value-preserving
// involution that flips the parity of the number of half-integer quadruples.
WElement lemma4_involution(const WElement& w);

} // namespace cpl
