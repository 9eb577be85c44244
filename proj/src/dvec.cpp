#include "dvec.hpp"

#include "errors.hpp"

#include <cstdlib>
#include <string>

namespace cpl {

namespace {

void check_dvec(const Tuple12& t, bool require_odd_sum)
{
    int par = (int)(t[0] & 1);
    int64_t sum = 0;
    for (int64_t v : t) {
        if ((v & 1) != par)
            throw DomainError("DVec: mixed integer/half-integer coordinates");
        sum += v;
    }
    if (require_odd_sum && ((sum % 4) + 4) % 4 != 2)
        throw DomainError("DVec: coordinate sum must be odd");
}

} // namespace

DVec::DVec(const Tuple12& doubled, bool require_odd_sum) : t(doubled)
{
    check_dvec(t, require_odd_sum);
}

DVec DVec::from_ints(const std::array<int, kTupleLen>& d)
{
    Tuple12 t;
    for (int i = 0; i < kTupleLen; ++i)
        t[i] = 2 * (int64_t)d[i];
    return DVec(t);
}

int64_t DVec::doubled_sum() const
{
    int64_t s = 0;
    for (int64_t v : t)
        s += v;
    return s;
}

int64_t DVec::norm4() const
{
    int64_t s = 0;
    for (int64_t v : t)
        s += v * v;
    return s;
}

int64_t ValueCtx::value8(const Tuple12& t) const
{
    int64_t acc = 0;
    for (int i = 0; i < kTupleLen; ++i)
        acc += C * t[i] * (t[i] - 2) + 4 * (int64_t)coeffs[i] * t[i];
    return acc;
}

int64_t ValueCtx::value(const DVec& d) const
{
    int64_t v8 = value8(d.t);
    if (v8 % 8 != 0)
        throw DomainError("ValueCtx: element value is not an integer in this context");
    return v8 / 8 + offset;
}

// --- reflection basis -------------------------------------------------------

namespace {

constexpr int kBasis[kTupleLen][kTupleLen] = {
    {-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1},
    {1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1},
    {1, 1, 1, -1, -1, -1, 1, 1, 1, -1, -1, -1},
    {1, -1, -1, 1, 1, -1, 1, 1, -1, 1, -1, -1},
    {-1, 1, -1, 1, -1, 1, 1, -1, 1, 1, -1, -1},
    {-1, -1, 1, -1, 1, 1, -1, 1, 1, 1, -1, -1},
    {-1, -1, 1, 1, -1, 1, 1, 1, -1, -1, 1, -1},
    {1, -1, -1, -1, 1, 1, 1, -1, 1, -1, 1, -1},
    {-1, 1, -1, 1, 1, -1, -1, 1, 1, -1, 1, -1},
    {-1, 1, 1, -1, 1, -1, 1, -1, -1, 1, 1, -1},
    {1, 1, -1, -1, -1, 1, -1, 1, -1, 1, 1, -1},
    {1, -1, 1, 1, -1, -1, -1, -1, 1, 1, 1, -1},
};

} // namespace

ReflectionBasis::ReflectionBasis()
{
    for (int i = 0; i < kTupleLen; ++i)
        for (int j = 0; j < kTupleLen; ++j) {
            v_[i][j] = kBasis[i][j];
            if (v_[i][j] != 1 && v_[i][j] != -1)
                throw DomainError("ReflectionBasis: entries must be +-1");
        }
    for (int i = 0; i < kTupleLen; ++i)
        for (int j = 0; j < kTupleLen; ++j) {
            int dot = 0;
            for (int k = 0; k < kTupleLen; ++k)
                dot += v_[i][k] * v_[j][k];
            int expect = i == j ? kTupleLen : 0;
            if (dot != expect)
                throw DomainError("ReflectionBasis: orthogonality check failed at (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
        }
}

const ReflectionBasis& ReflectionBasis::instance()
{
    static const ReflectionBasis basis;
    return basis;
}

int64_t ReflectionBasis::dot(const DVec& d, int i) const
{
    int64_t s = 0;
    for (int j = 0; j < kTupleLen; ++j)
        s += d.t[j] * v_[i][j];
    // s = 2 (d . V_i); the true dot product is an odd integer
    if (s % 2 != 0)
        throw DomainError("ReflectionBasis: doubled dot must be even");
    int64_t dot = s / 2;
    if ((std::abs(dot) & 1) == 0)
        throw DomainError("ReflectionBasis: d.V_i must be odd for d in D");
    return dot;
}

DVec lemma1_reflect(const DVec& d, int i)
{
    const auto& basis = ReflectionBasis::instance();
    int64_t s = basis.dot(d, i);
    if (s % 3 != 0)
        throw DomainError("lemma1_reflect: d.V_i is not divisible by 3");
    // d - (s/6) V_i doubles to t - (s/3) V_i; s/3 is odd, so the type flips.
    int64_t shift = s / 3;
    Tuple12 t = d.t;
    for (int j = 0; j < kTupleLen; ++j)
        t[j] -= shift * basis.at(i, j);
    return DVec(t);
}

int64_t Residual::pent_value() const
{
    int64_t s = 0;
    for (int64_t fi : f)
        s += fi * (3 * fi - 1);
    return s + 1;
}

bool Residual::f_sum_even() const
{
    int64_t s = 0;
    for (int64_t fi : f)
        s += fi;
    return (s & 1) == 0;
}

Residual lemma1_residual(const DVec& d)
{
    const auto& basis = ReflectionBasis::instance();
    int64_t x[kTupleLen], y[kTupleLen];
    for (int i = 0; i < kTupleLen; ++i) {
        int64_t s = basis.dot(d, i);
        int64_t r = ((s % 6) + 6) % 6;
        if (r == 3)
            throw DomainError("lemma1_residual: d.V_i divisible by 3; use the reflection");
        // s is odd and not divisible by 3, so s == +-1 (mod 6): the nearest
        // integer to s/6 is unique, no tie-breaking needed.
        y[i] = r == 1 ? 1 : -1;
        x[i] = (s - y[i]) / 6;
    }
    Residual res;
    Tuple12 zt = d.t;
    for (int j = 0; j < kTupleLen; ++j)
        for (int i = 0; i < kTupleLen; ++i)
            zt[j] -= x[i] * basis.at(i, j);
    int unit = -1;
    for (int j = 0; j < kTupleLen; ++j) {
        if (zt[j] == 0)
            continue;
        if ((zt[j] != 2 && zt[j] != -2) || unit >= 0)
            throw DomainError("lemma1_residual: z is not a signed unit vector");
        unit = j;
        res.z_index = 2 * j + (zt[j] < 0 ? 1 : 0);
    }
    if (unit < 0)
        throw DomainError("lemma1_residual: z vanished");
    for (int i = 0; i < kTupleLen; ++i)
        res.f[i] = -x[i] * y[i];
    if (res.pent_value() * 4 != d.norm4())
        throw DomainError("lemma1_residual: pentagonal value identity violated");
    if (res.f_sum_even() != !d.half_integer())
        throw DomainError("lemma1_residual: f-sum parity / type correspondence violated");
    return res;
}

DVec lemma1_reconstruct(int z_index, const Tuple12& f)
{
    if (z_index < 0 || z_index >= 2 * kTupleLen)
        throw DomainError("lemma1_reconstruct: z_index out of range");
    const auto& basis = ReflectionBasis::instance();
    int pos = z_index / 2;
    int sign = z_index % 2 == 0 ? 1 : -1;
    Tuple12 zt{};
    zt[pos] = 2 * sign;
    // y_i = z . V_i; d = z - Sum (y_i f_i / 2) V_i
    Tuple12 t = zt;
    for (int i = 0; i < kTupleLen; ++i) {
        int64_t y = sign * basis.at(i, pos);
        for (int j = 0; j < kTupleLen; ++j)
            t[j] -= y * f[i] * basis.at(i, j);
    }
    return DVec(t);
}

DVec lemma3_flip(const std::array<int, kTupleLen>& e, long C, const Coeffs& A,
                 const Coeffs& B, long m)
{
    long sumA = 0;
    for (int i = 0; i < kTupleLen; ++i) {
        if (2L * (A[i] + B[kTupleLen - 1 - i]) != C)
            throw DomainError("lemma3_flip: A_i + B_{13-i} = C/2 violated at i=" +
                              std::to_string(i + 1));
        sumA += A[i];
    }
    if (2 * m != sumA - 3 * C)
        throw DomainError("lemma3_flip: m != Sum A_i / 2 - 3C/2");
    Tuple12 t;
    for (int i = 0; i < kTupleLen; ++i)
        t[i] = 1 - 2 * (int64_t)e[kTupleLen - 1 - i];
    // The identity is algebraic and holds for every integer tuple; the image
    // lies in D exactly when the input sum is odd.
    DVec d(t, /*require_odd_sum=*/false);
    // value of d under (C, A, 0) must equal the e-side value under (C, B, m)
    ValueCtx actx{C, A, 0};
    int64_t lhs = actx.value(d);
    int64_t rhs = m;
    for (int i = 0; i < kTupleLen; ++i)
        rhs += C * (int64_t)e[i] * (e[i] - 1) / 2 + (int64_t)B[i] * e[i];
    if (lhs != rhs)
        throw DomainError("lemma3_flip: value identity violated");
    return d;
}

// --- three-quadruple involution ------------------------------------------------

namespace {

void check_welement(const Tuple12& t)
{
    int64_t sum = 0;
    for (int g = 0; g < 3; ++g) {
        int par = (int)(t[4 * g] & 1);
        for (int j = 4 * g; j < 4 * g + 4; ++j) {
            if ((t[j] & 1) != par)
                throw DomainError("WElement: quadruple mixes integers and half-integers");
            sum += t[j];
        }
    }
    if (((sum % 4) + 4) % 4 != 2)
        throw DomainError("WElement: total coordinate sum must be odd");
}

} // namespace

WElement::WElement(const Tuple12& doubled, bool validate) : t(doubled)
{
    if (validate)
        check_welement(t);
}

int WElement::half_quadruples() const
{
    return (int)quadruple_half(0) + (int)quadruple_half(1) + (int)quadruple_half(2);
}

QuadrupleCtx QuadrupleCtx::make(long C, const std::array<int, 4>& a, long mstar)
{
    QuadrupleCtx ctx;
    ctx.C = C;
    ctx.a = a;
    ctx.mstar = mstar;
    for (int i = 0; i < 4; ++i) {
        long b = C / 2 - a[3 - i]; // b_{5-i} paired with a_i
        if (b < 0 || 2 * b > C || 2L * (a[i] + (C / 2 - a[i])) != C)
            throw DomainError("QuadrupleCtx: coefficients incompatible with C/2 pairing");
    }
    if (a[0] + a[3] != C / 2 + mstar || a[1] + a[2] != C / 2 + mstar)
        throw DomainError("QuadrupleCtx: a1+a4 = a2+a3 = C/2 + m* violated");
    return ctx;
}

int64_t QuadrupleCtx::value8(const Tuple12& t) const
{
    int64_t acc = 0;
    for (int j = 0; j < kTupleLen; ++j)
        acc += C * t[j] * (t[j] - 2) + 4 * (int64_t)a[j % 4] * t[j];
    return acc;
}

int64_t QuadrupleCtx::value(const WElement& w) const
{
    int64_t v8 = value8(w.t);
    if (v8 % 8 != 0)
        throw DomainError("QuadrupleCtx: element value is not an integer");
    return v8 / 8;
}

WElement lemma4_involution(const WElement& w)
{
    Tuple12 t;
    for (int g = 0; g < 3; ++g) {
        int64_t x2 = 0;
        for (int j = 4 * g; j < 4 * g + 4; ++j)
            x2 += w.t[j];
        // quadruple sums double to even values, so x2/2 is exact
        for (int i = 0; i < 4; ++i)
            t[4 * g + i] = x2 / 2 - w.t[4 * g + (3 - i)];
    }
    return WElement(t);
}

} // namespace cpl
