#include "tuple_oracle.hpp"

#include "errors.hpp"

#include <algorithm>
#include <string>

namespace cpl {

namespace {

long quad_w(long C, long a, long d)
{
    return C * d * (d - 1) / 2 + a * d;
}

// All (weight, d) with quad_w <= cap, sorted by weight ascending.  The weight
// is convex with minimum at d in {0, 1}, so scan outward in both directions.
std::vector<std::pair<long, long>> coordinate_weights(long C, long a, long cap)
{
    std::vector<std::pair<long, long>> out;
    for (long d = 0;; ++d) {
        long w = quad_w(C, a, d);
        if (w > cap)
            break;
        out.push_back({w, d});
    }
    for (long d = -1;; --d) {
        long w = quad_w(C, a, d);
        if (w > cap)
            break;
        out.push_back({w, d});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

long pent_w(long f)
{
    return f * (3 * f - 1) / 2;
}

std::vector<std::pair<long, long>> pent_coordinate_weights(long cap)
{
    std::vector<std::pair<long, long>> out;
    for (long f = 0;; ++f) {
        long w = pent_w(f);
        if (w > cap)
            break;
        out.push_back({w, f});
    }
    for (long f = -1;; --f) {
        long w = pent_w(f);
        if (w > cap)
            break;
        out.push_back({w, f});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

ParityTable convolve_coordinates(const std::vector<std::vector<std::pair<long, long>>>& coords,
                                 long q_max)
{
    ParityTable t;
    t.even_sum_counts.assign(q_max + 1, BigNat());
    t.odd_sum_counts.assign(q_max + 1, BigNat());
    t.even_sum_counts[0] = BigNat(1);
    for (const auto& opts : coords) {
        ParityTable next;
        next.even_sum_counts.assign(q_max + 1, BigNat());
        next.odd_sum_counts.assign(q_max + 1, BigNat());
        for (long q = 0; q <= q_max; ++q) {
            const BigNat& e = t.even_sum_counts[q];
            const BigNat& o = t.odd_sum_counts[q];
            if (e.is_zero() && o.is_zero())
                continue;
            for (const auto& [w, d] : opts) {
                if (q + w > q_max)
                    break;
                if (d & 1) {
                    next.even_sum_counts[q + w] += o;
                    next.odd_sum_counts[q + w] += e;
                } else {
                    next.even_sum_counts[q + w] += e;
                    next.odd_sum_counts[q + w] += o;
                }
            }
        }
        t = std::move(next);
    }
    return t;
}

} // namespace

ParityTable quad_weights(long C, const Coeffs& coeffs, long q_max)
{
    if (q_max < 0)
        throw RangeError("quad_weights: q_max must be >= 0");
    if (C < 1)
        throw DomainError("quad_weights: modulus must be >= 1");
    for (int a : coeffs)
        if (a < 0 || a > C)
            throw DomainError("quad_weights: coefficient out of range");
    std::vector<std::vector<std::pair<long, long>>> coords;
    coords.reserve(kTupleLen);
    for (int i = 0; i < kTupleLen; ++i)
        coords.push_back(coordinate_weights(C, coeffs[i], q_max));
    return convolve_coordinates(coords, q_max);
}

ParityTable pentagonal_vectors(long w_max)
{
    if (w_max < 0)
        throw RangeError("pentagonal_vectors: w_max must be >= 0");
    std::vector<std::vector<std::pair<long, long>>> coords(
        kTupleLen, pent_coordinate_weights(w_max));
    return convolve_coordinates(coords, w_max);
}

std::vector<BigNat> partition_tuples(long w_max)
{
    if (w_max < 0)
        throw RangeError("partition_tuples: w_max must be >= 0");
    std::vector<BigNat> a(w_max + 1);
    a[0] = BigNat(1);
    for (long k = 1; k <= w_max; ++k)
        for (int rep = 0; rep < kTupleLen; ++rep)
            for (long n = k; n <= w_max; ++n)
                a[n] += a[n - k];
    return a;
}

BigNat tuple_count(const ParityTable& quads, const std::vector<BigNat>& ptuples,
                   long C, long offset, long N)
{
    BigNat total;
    long budget = N - offset;
    if (budget < 0)
        return total;
    for (long q = budget % C; q <= budget; q += C) {
        const BigNat& dcount = quads.odd_sum_counts[q];
        if (dcount.is_zero())
            continue;
        total += dcount * ptuples[(budget - q) / C];
    }
    return total;
}

BigNat tuple_count(long C, const Coeffs& coeffs, long offset, long N)
{
    if (N < offset)
        return BigNat();
    ParityTable quads = quad_weights(C, coeffs, N - offset);
    std::vector<BigNat> ptuples = partition_tuples((N - offset) / C);
    return tuple_count(quads, ptuples, C, offset, N);
}

UVProfile uv_profile(const IdentitySpec& spec)
{
    UVProfile prof;
    // k is the least weight with an odd-sum d-vector; since a single 1 in any
    // coordinate has weight coeff_i, k <= min coeff <= C/2.  Scan with a
    // table out to k + C, enough to also find the second nonempty value.
    long scan = 2 * spec.C + 2;
    ParityTable qa = quad_weights(spec.C, spec.A, scan);
    ParityTable qb = quad_weights(spec.C, spec.B, scan);
    long k = -1;
    for (long q = 0; q <= scan; ++q) {
        if (!qa.odd_sum_counts[q].is_zero()) {
            k = q;
            break;
        }
    }
    if (k < 0)
        throw DomainError("uv_profile: no odd-sum vector found (unexpected)");
    prof.k = k;
    prof.s_k = qa.odd_sum_counts[k];
    // S_N is nonempty iff some q <= N with q == N (mod C) has odd vectors.
    long second = -1;
    for (long N = k + 1; N <= k + spec.C && second < 0; ++N)
        for (long q = N % spec.C; q <= N && q <= scan; q += spec.C)
            if (!qa.odd_sum_counts[q].is_zero()) {
                second = N;
                break;
            }
    prof.second_s = second;
    long kb = -1;
    for (long q = 0; q <= scan; ++q)
        if (!qb.odd_sum_counts[q].is_zero()) {
            kb = q;
            break;
        }
    prof.first_t = spec.m + kb;
    prof.m_property = (prof.first_t == prof.second_s);
    return prof;
}

UVTables make_uv_tables(const IdentitySpec& spec, long n_max)
{
    UVTables t;
    t.profile = uv_profile(spec);
    t.n_max = n_max;
    t.quad_A = quad_weights(spec.C, spec.A, n_max);
    t.quad_B = quad_weights(spec.C, spec.B, std::max<long>(0, n_max - spec.m));
    t.pent = pentagonal_vectors(std::max<long>(0, (n_max - t.profile.k) / spec.C));
    return t;
}

std::pair<BigNat, BigNat> UVTables::at(const IdentitySpec& spec, long N) const
{
    if (N < 0 || N > n_max)
        throw RangeError("uv_counts: N outside table range");
    BigNat u = quad_A.odd_sum_counts[N];
    BigNat v = N >= spec.m ? quad_B.odd_sum_counts[N - spec.m] : BigNat();
    long rel = N - profile.k;
    if (rel >= 0 && rel % spec.C == 0) {
        long w = rel / spec.C;
        u += profile.s_k * pent.odd_sum_counts[w];
        v += profile.s_k * pent.even_sum_counts[w];
    }
    return {std::move(u), std::move(v)};
}

std::pair<BigNat, BigNat> uv_counts(const IdentitySpec& spec, long N)
{
    UVTables t = make_uv_tables(spec, N);
    return t.at(spec, N);
}

long qr_reduction_first_failure(long C, const Coeffs& A, const Coeffs& B, long m,
                                const Coeffs& Ap, const Coeffs& Bp, long mp,
                                long n_max)
{
    auto side_profile = [&](const Coeffs& coeffs) {
        ParityTable t = quad_weights(C, coeffs, C + 1);
        for (long q = 0; q <= C + 1; ++q)
            if (!t.odd_sum_counts[q].is_zero())
                return std::pair<long, BigNat>{q, t.odd_sum_counts[q]};
        throw DomainError("qr_reduction: empty weight spectrum");
    };
    auto [k, sk] = side_profile(A);
    auto [kp, skp] = side_profile(Ap);
    long cap = n_max + std::max(k, kp);
    ParityTable qa = quad_weights(C, A, cap);
    ParityTable qb = quad_weights(C, B, cap);
    ParityTable qap = quad_weights(C, Ap, cap);
    ParityTable qbp = quad_weights(C, Bp, cap);
    auto at = [](const ParityTable& t, long idx) {
        return idx >= 0 && idx <= t.q_max() ? t.odd_sum_counts[idx] : BigNat();
    };
    for (long N = 0; N <= n_max; ++N) {
        BigNat lhs = sk * at(qap, N + kp) + skp * at(qb, N + k - m);
        BigNat rhs = sk * at(qbp, N + kp - mp) + skp * at(qa, N + k);
        if (lhs != rhs)
            return N;
    }
    return -1;
}

// --- exhaustive enumeration ------------------------------------------------

namespace {

// Partitions of every w <= w_max, each as a descending part list.
std::vector<std::vector<std::vector<int>>> partition_lists(long w_max)
{
    std::vector<std::vector<std::vector<int>>> lists(w_max + 1);
    lists[0].push_back({});
    for (long w = 1; w <= w_max; ++w) {
        std::vector<int> parts;
        auto gen = [&](auto&& self, long rem, int max_part) -> void {
            if (rem == 0) {
                lists[w].push_back(parts);
                return;
            }
            for (int p = std::min<long>(max_part, rem); p >= 1; --p) {
                parts.push_back(p);
                self(self, rem - p, p);
                parts.pop_back();
            }
        };
        gen(gen, w, (int)w);
    }
    return lists;
}

struct TupleEnumerator {
    long C;
    long offset;
    long N;
    std::array<std::vector<std::pair<long, long>>, kTupleLen> dopts;
    std::vector<std::vector<std::vector<int>>> plists;

    TupleEnumerator(long C_, const Coeffs& coeffs, long offset_, long N_)
        : C(C_), offset(offset_), N(N_)
    {
        long budget = N - offset;
        for (int i = 0; i < kTupleLen; ++i)
            dopts[i] = coordinate_weights(C, coeffs[i], std::max<long>(budget, 0));
        plists = partition_lists(budget >= 0 ? budget / C : 0);
    }

    template <typename Visitor>
    void run(Visitor&& visit)
    {
        long budget = N - offset;
        if (budget < 0)
            return;
        std::array<int, kTupleLen> d{};
        rec_d(0, budget, 0, d, visit);
    }

private:
    template <typename Visitor>
    void rec_d(int i, long rem, int par, std::array<int, kTupleLen>& d, Visitor&& visit)
    {
        if (i == kTupleLen) {
            if ((par & 1) && rem % C == 0)
                rec_parts(d, rem / C, visit);
            return;
        }
        for (const auto& [w, dv] : dopts[i]) {
            if (w > rem)
                break;
            d[i] = (int)dv;
            rec_d(i + 1, rem - w, par ^ ((int)dv & 1), d, visit);
        }
        d[i] = 0;
    }

    template <typename Visitor>
    void rec_parts(const std::array<int, kTupleLen>& d, long total, Visitor&& visit)
    {
        std::array<const std::vector<int>*, kTupleLen> mu{};
        auto rec = [&](auto&& self, int slot, long rem) -> void {
            if (slot == kTupleLen - 1) {
                for (const auto& part : plists[rem]) {
                    mu[slot] = &part;
                    visit(d, mu);
                }
                return;
            }
            for (long w = 0; w <= rem; ++w)
                for (const auto& part : plists[w]) {
                    mu[slot] = &part;
                    self(self, slot + 1, rem - w);
                }
        };
        rec(rec, 0, total);
    }
};

} // namespace

uint64_t brute_count(long C, const Coeffs& coeffs, long offset, long N)
{
    TupleEnumerator en(C, coeffs, offset, N);
    uint64_t count = 0;
    en.run([&](const auto&, const auto&) { ++count; });
    return count;
}

std::vector<BruteTuple> brute_tuples(long C, const Coeffs& coeffs, long offset, long N)
{
    if (N > kBruteTupleLimit)
        throw BoundError("brute_tuples: N = " + std::to_string(N) +
                         " exceeds the enumeration bound " +
                         std::to_string(kBruteTupleLimit));
    std::vector<BruteTuple> out;
    TupleEnumerator en(C, coeffs, offset, N);
    en.run([&](const std::array<int, kTupleLen>& d,
               const std::array<const std::vector<int>*, kTupleLen>& mu) {
        BruteTuple t;
        t.d = d;
        for (int i = 0; i < kTupleLen; ++i)
            t.parts[i] = *mu[i];
        out.push_back(std::move(t));
    });
    return out;
}

void quad_brute(long C, const Coeffs& coeffs, long q_max,
                std::vector<uint64_t>& even_out, std::vector<uint64_t>& odd_out)
{
    even_out.assign(q_max + 1, 0);
    odd_out.assign(q_max + 1, 0);
    // (weight, parity-of-d) per coordinate; only those matter for the tally.
    std::array<std::vector<std::pair<long, int>>, kTupleLen> opts;
    for (int i = 0; i < kTupleLen; ++i)
        for (auto [w, d] : coordinate_weights(C, coeffs[i], q_max))
            opts[i].push_back({w, (int)(d & 1)});
    for (auto& v : opts)
        std::stable_sort(v.begin(), v.end(),
                         [](const auto& x, const auto& y) { return x.first < y.first; });

    uint64_t* tally[2] = {even_out.data(), odd_out.data()};
    auto rec = [&](auto&& self, int i, long q, int par) -> void {
        const auto& list = opts[i];
        if (i == kTupleLen - 1) {
            for (const auto& [w, p] : list) {
                if (q + w > q_max)
                    break;
                ++tally[par ^ p][q + w];
            }
            return;
        }
        for (const auto& [w, p] : list) {
            if (q + w > q_max)
                break;
            self(self, i + 1, q + w, par ^ p);
        }
    };
    rec(rec, 0, 0, 0);
}

} // namespace cpl
