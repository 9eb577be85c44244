// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "dvec.hpp"
#include "identity_spec.hpp"
#include "match.hpp"
#include "series.hpp"
#include "tuple_oracle.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace cpl;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long ms() const
    {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

void outcome(int criterion, bool pass, const std::string& detail)
{
    std::printf("%s  criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion,
                detail.c_str());
    std::fflush(stdout);
    if (!pass)
        ++g_failures;
}

Coeffs fill12(int v)
{
    Coeffs c;
    c.fill(v);
    return c;
}

uint64_t binom_u64(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    uint64_t r = 1;
    for (int i = 0; i < k; ++i)
        r = r * (uint64_t)(n - i) / (uint64_t)(i + 1);
    return r;
}

// independent multiset enumeration for the hand-checkable anchors
void brute_colored(const ColoredSet& set, long target, long value, long parts,
                   BigNat mult, BigNat& even, BigNat& odd)
{
    if (target == 0) {
        (parts % 2 == 0 ? even : odd) += mult;
        return;
    }
    if (value > target)
        return;
    brute_colored(set, target, value + 1, parts, mult, even, odd);
    int c = set.copies_of(value);
    for (int j = 1; j <= c && (long)j * value <= target; ++j)
        brute_colored(set, target - j * value, value + 1, parts + j,
                      mult * binom_u64(c, j), even, odd);
}

BigNat brute_D(const ColoredSet& set, long N)
{
    BigNat even, odd;
    brute_colored(set, N, 1, 0, BigNat(1), even, odd);
    if (set.parity_required)
        return odd;
    return even + odd;
}

// --- criterion 1: proven identities to N = 1000 with the stated factors ----

void criterion1()
{
    Timer timer;
    const std::map<std::string, std::string> factors = {
        {"thm_111", "2048"}, {"thm_222", "16"}, {"thm_333", "1"},  {"thm_444", "32"},
        {"thm_555", "8"},    {"thm_666", "4"},  {"thm_777", "8"},  {"thm_7'''", "2"},
        {"thm_888", "4"},    {"thm_999", "1"},  {"thm_1000", "1"}, {"thm_1001", "1"}};
    std::ostringstream why;
    bool pass = true;
    int checked = 0;
    for (const auto& spec : builtin_registry()) {
        if (spec.status != Status::proven)
            continue;
        auto it = factors.find(spec.name);
        if (it == factors.end() || spec.factor_string() != it->second) {
            pass = false;
            why << spec.name << ": factor " << spec.factor_string() << "; ";
            continue;
        }
        VerificationReport rep = verify_identity(spec, 1000);
        ++checked;
        if (!rep.holds) {
            pass = false;
            why << spec.name << ": fails at N=" << rep.first_failure->N << "; ";
        }
    }
    if (checked != 12) {
        pass = false;
        why << "expected 12 proven entries, saw " << checked << "; ";
    }
    long ms = timer.ms();
    if (ms >= 120000) {
        pass = false;
        why << "runtime " << ms << " ms over the 2 minute target; ";
    }
    outcome(1, pass,
            "proven-identity regression, 12 entries, N0..1000, exact (" +
                std::to_string(ms) + " ms) " + why.str());
}

// --- criterion 2: conjecture reproduction to N = 2000 ----------------------

void criterion2()
{
    Timer timer;
    std::ostringstream why;
    bool pass = true;
    int checked = 0;
    std::vector<IdentitySpec> conjectured;
    for (const auto& spec : builtin_registry())
        if (spec.status == Status::conjectured)
            conjectured.push_back(spec);
    auto reports = verify_many(conjectured, 2000, 1);
    for (const auto& rep : reports) {
        ++checked;
        if (!rep.holds) {
            pass = false;
            why << rep.spec_name << ": fails at N=" << rep.first_failure->N << "; ";
        }
    }
    if (checked != 30) {
        pass = false;
        why << "expected 30 conjectured entries, saw " << checked << "; ";
    }
    long ms = timer.ms();
    if (ms >= 900000) {
        pass = false;
        why << "runtime " << ms << " ms over the 15 minute target; ";
    }
    outcome(2, pass,
            "conjecture reproduction, 30 entries, N0..2000, exact (" +
                std::to_string(ms) + " ms) " + why.str());
}

// --- criterion 3: hand-checkable anchors -----------------------------------

void criterion3()
{
    std::ostringstream why;
    bool pass = true;
    auto check = [&](const ColoredSet& set, long N, const char* expect, const char* label) {
        SeriesTable t = distinct_series(set, N);
        BigNat series = D(set, t, N);
        BigNat brute = brute_D(set, N);
        if (series.to_decimal() != expect || brute != series) {
            pass = false;
            why << label << ": series " << series.to_decimal() << ", brute "
                << brute.to_decimal() << ", expected " << expect << "; ";
        }
    };
    const IdentitySpec* t111 = find_spec(builtin_registry(), "thm_111");
    const IdentitySpec* t999 = find_spec(builtin_registry(), "thm_999");
    check(t111->set_S(), 3, "2048", "D_S(3) of thm_111");
    check(t111->set_T(), 0, "1", "D_T(0) of thm_111");
    check(t999->set_S(), 2, "8", "D_S(2) of thm_999");
    check(t999->set_T(), 1, "8", "D_T(1) of thm_999");
    outcome(3, pass, "hand-checkable anchors (2048, 1, 8, 8) " + why.str());
}

// --- criterion 4: tuple-count equivalence against the series identity ------

void criterion4()
{
    Timer timer;
    std::ostringstream why;
    bool pass = true;
    for (const auto& spec : builtin_registry()) {
        ParityTable qa = quad_weights(spec.C, spec.A, 60);
        ParityTable qb = quad_weights(spec.C, spec.B, std::max<long>(0, 60 - spec.m));
        std::vector<BigNat> pt = partition_tuples(60 / spec.C);
        SeriesTable st = distinct_series(spec.set_S(), 60);
        SeriesTable tt = distinct_series(spec.set_T(), 60);
        uint64_t num, den;
        spec.factor(num, den);
        for (long N = spec.N0; N <= 60; ++N) {
            BigNat left = tuple_count(qa, pt, spec.C, 0, N);
            BigNat right = tuple_count(qb, pt, spec.C, spec.m, N);
            if (left != right) {
                pass = false;
                why << spec.name << ": tuple counts differ at N=" << N << "; ";
                break;
            }
            BigNat ds = D(spec.set_S(), st, N) * den;
            BigNat dt = (N >= spec.m ? D(spec.set_T(), tt, N - spec.m) : BigNat()) * num;
            if (ds != dt) {
                pass = false;
                why << spec.name << ": series identity fails at N=" << N << "; ";
                break;
            }
        }
    }
    outcome(4, pass,
            "condition (i) and (ii) agree for all 42 entries, N0..60 (" +
                std::to_string(timer.ms()) + " ms) " + why.str());
}

// --- criterion 5: exhaustive enumeration oracles ----------------------------

void criterion5()
{
    Timer timer;
    std::ostringstream why;
    bool pass = true;

    for (const auto& spec : builtin_registry()) {
        for (long N = 0; N <= 12 && pass; ++N) {
            if (BigNat(brute_count(spec.C, spec.A, 0, N)) !=
                    tuple_count(spec.C, spec.A, 0, N) ||
                BigNat(brute_count(spec.C, spec.B, spec.m, N)) !=
                    tuple_count(spec.C, spec.B, spec.m, N)) {
                pass = false;
                why << spec.name << ": tuple enumeration differs at N=" << N << "; ";
            }
        }
        if (!pass)
            break;
    }

    // quad tables: direct vector enumeration to q = 40, deduplicated by form
    std::set<std::pair<long, Coeffs>> forms;
    for (const auto& spec : builtin_registry()) {
        forms.insert({spec.C, spec.A});
        forms.insert({spec.C, spec.B});
    }
    for (const auto& [C, coeffs] : forms) {
        if (!pass)
            break;
        ParityTable dp = quad_weights(C, coeffs, 40);
        std::vector<uint64_t> even, odd;
        quad_brute(C, coeffs, 40, even, odd);
        for (long q = 0; q <= 40; ++q) {
            if (dp.even_sum_counts[q] != BigNat(even[q]) ||
                dp.odd_sum_counts[q] != BigNat(odd[q])) {
                pass = false;
                why << "quad table (C=" << C << ") differs at q=" << q << "; ";
                break;
            }
        }
    }
    outcome(5, pass,
            "brute tuples (N<=12) and brute quad tables (q<=40) match the DP (" +
                std::to_string(timer.ms()) + " ms) " + why.str());
}

// --- criterion 6: the U/V counting identity ---------------------------------

void criterion6()
{
    Timer timer;
    std::ostringstream why;
    bool pass = true;
    std::set<std::string> flagged;
    for (const auto& spec : builtin_registry()) {
        UVTables uv = make_uv_tables(spec, 60);
        if (!uv.profile.m_property) {
            flagged.insert(spec.name);
            continue;
        }
        for (long N = 0; N <= 60; ++N) {
            auto [u, v] = uv.at(spec, N);
            if (u != v) {
                pass = false;
                why << spec.name << ": |U_N| != |V_N| at N=" << N << "; ";
                break;
            }
        }
    }
    // Exactly the five combined identities carry a shift that is not the
    // hypothesis normalization (their smallest nonempty T-value undercuts the
    // second smallest nonempty S-value); every other entry must satisfy it
    // and pass the counting identity.
    const std::set<std::string> expected_flags = {"thm_7'''", "c6'", "c8'", "c17'",
                                                  "c22'"};
    if (flagged != expected_flags) {
        pass = false;
        why << "unexpected offset-normalization flags: ";
        for (const auto& name : flagged)
            why << name << " ";
    }
    outcome(6, pass,
            "U/V counting identity, N<=60, hypothesis-checked on 37 entries, 5 "
            "flagged (" +
                std::to_string(timer.ms()) + " ms) " + why.str());
}

// --- criterion 7: bijection certificates -------------------------------------

void criterion7()
{
    Timer timer;
    std::ostringstream why;
    bool pass = true;

    // basis orthogonality is validated by construction; recheck explicitly
    const auto& basis = ReflectionBasis::instance();
    for (int i = 0; i < kTupleLen && pass; ++i)
        for (int j = 0; j < kTupleLen; ++j) {
            int dot = 0;
            for (int k = 0; k < kTupleLen; ++k)
                dot += basis.at(i, k) * basis.at(j, k);
            if (dot != (i == j ? 12 : 0)) {
                pass = false;
                why << "basis orthogonality fails at (" << i << "," << j << "); ";
            }
        }

    struct Run {
        LemmaTag tag;
        long vmax;
    };
    for (Run run : {Run{LemmaTag::lemma3_1, 25}, Run{LemmaTag::lemma3_3, 40},
                    Run{LemmaTag::lemma3_4, 40}, Run{LemmaTag::lemma3_5, 30},
                    Run{LemmaTag::lemma3_6, 30}, Run{LemmaTag::lemma3_7, 30}}) {
        if (!pass)
            break;
        MatchReport rep = exhaustive_match(run.tag, run.vmax);
        if (!rep.pass) {
            pass = false;
            why << to_string(run.tag) << "@" << run.vmax << ": " << rep.failure << "; ";
        }
    }

    // the flip value identity on 1000 seeded random tuples (asserted per call)
    if (pass) {
        struct FlipInstance {
            long C;
            Coeffs A, B;
            long m;
        };
        std::vector<FlipInstance> instances = {
            {2, fill12(1), fill12(0), 3},
            {6, fill12(2), fill12(1), 3},
            {6, {1, 1, 1, 1, 1, 1, 3, 3, 3, 3, 3, 3}, {0, 0, 0, 0, 0, 0, 2, 2, 2, 2, 2, 2}, 3},
            {10, {2, 2, 2, 2, 2, 2, 4, 4, 4, 4, 4, 4}, {1, 1, 1, 1, 1, 1, 3, 3, 3, 3, 3, 3}, 3},
        };
        std::mt19937 rng(20260808);
        std::uniform_int_distribution<int> coord(-25, 25);
        int done = 0;
        try {
            for (int it = 0; it < 250; ++it)
                for (const auto& inst : instances) {
                    std::array<int, kTupleLen> e;
                    for (auto& v : e)
                        v = coord(rng);
                    lemma3_flip(e, inst.C, inst.A, inst.B, inst.m);
                    ++done;
                }
        } catch (const std::exception& ex) {
            pass = false;
            why << "flip identity failed after " << done << " tuples: " << ex.what()
                << "; ";
        }
    }

    // quadruple involution on every W element of value <= 40 for the
    // instances behind the derived theorems; the 24-copies instance has about
    // 1e10 elements at 40 and is covered to 15 instead
    if (pass) {
        struct L4Run {
            long C;
            std::array<int, 4> a;
            long mstar;
            long bound;
        };
        for (L4Run run : {L4Run{6, {2, 2, 2, 2}, 1, 40}, L4Run{6, {1, 1, 3, 3}, 1, 40},
                          L4Run{10, {2, 2, 4, 4}, 1, 40}, L4Run{2, {1, 1, 1, 1}, 1, 15}}) {
            auto ctx = QuadrupleCtx::make(run.C, run.a, run.mstar);
            int64_t cap8 = 8 * run.bound;
            // quadruple fragments sorted by partial value
            std::vector<std::pair<int64_t, std::array<int64_t, 4>>> frags;
            for (int par = 0; par <= 1; ++par) {
                std::array<int64_t, 4> q{};
                auto rec = [&](auto&& self, int i, int64_t acc) -> void {
                    if (i == 4) {
                        frags.push_back({acc, q});
                        return;
                    }
                    for (int64_t t = par - 40; t <= par + 40; t += 2) {
                        int64_t c = ctx.C * t * (t - 2) + 4 * (int64_t)ctx.a[i] * t;
                        if (acc + c <= cap8) {
                            q[i] = t;
                            self(self, i + 1, acc + c);
                        }
                    }
                };
                rec(rec, 0, 0);
            }
            std::sort(frags.begin(), frags.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            uint64_t seen = 0;
            bool ok = true;
            std::string detail;
            for (const auto& [v0, q0] : frags) {
                if (!ok || v0 > cap8)
                    break;
                for (const auto& [v1, q1] : frags) {
                    if (!ok || v0 + v1 > cap8)
                        break;
                    for (const auto& [v2, q2] : frags) {
                        if (v0 + v1 + v2 > cap8)
                            break;
                        Tuple12 t;
                        std::copy(q0.begin(), q0.end(), t.begin());
                        std::copy(q1.begin(), q1.end(), t.begin() + 4);
                        std::copy(q2.begin(), q2.end(), t.begin() + 8);
                        int64_t sum = 0;
                        for (int64_t v : t)
                            sum += v;
                        if (((sum % 4) + 4) % 4 != 2)
                            continue;
                        WElement w(t);
                        WElement img = lemma4_involution(w);
                        ++seen;
                        if (ctx.value(img) != ctx.value(w) ||
                            ((img.half_quadruples() ^ w.half_quadruples()) & 1) == 0 ||
                            !(lemma4_involution(img) == w)) {
                            ok = false;
                            detail = "involution property violated";
                            break;
                        }
                    }
                    if (!ok)
                        break;
                }
            }
            if (!ok || seen == 0) {
                pass = false;
                why << "quadruple involution (C=" << run.C << ", bound " << run.bound
                    << "): " << (seen == 0 ? "empty domain" : detail) << "; ";
                break;
            }
        }
    }

    outcome(7, pass,
            "bijection certificates, basis, flip identity, quadruple involution (" +
                std::to_string(timer.ms()) + " ms) " + why.str());
}

// --- criterion 8: mutation sensitivity ---------------------------------------

void criterion8()
{
    Timer timer;
    std::ostringstream why;
    bool pass = true;
    int mutants = 0;
    for (const auto& spec : builtin_registry()) {
        if (spec.status != Status::proven)
            continue;
        std::vector<IdentitySpec> mutations;
        std::set<std::tuple<Coeffs, Coeffs, long>> seen;
        auto push = [&](IdentitySpec m) {
            auto key = std::make_tuple(canonicalize_coeffs(m.C, m.A),
                                       canonicalize_coeffs(m.C, m.B), m.m);
            if (seen.insert(key).second)
                mutations.push_back(std::move(m));
        };
        // ensure the unmutated spec never counts as "new"
        seen.insert({canonicalize_coeffs(spec.C, spec.A),
                     canonicalize_coeffs(spec.C, spec.B), spec.m});
        for (long dm : {-1L, +1L}) {
            if (spec.m + dm >= 0) {
                IdentitySpec m = spec;
                m.m += dm;
                push(std::move(m));
            }
        }
        for (int i = 0; i < kTupleLen; ++i)
            for (int d : {-1, +1}) {
                if (2 * (spec.A[i] + d) >= 0 && 2 * (spec.A[i] + d) <= spec.C) {
                    IdentitySpec m = spec;
                    m.A[i] += d;
                    push(std::move(m));
                }
                if (2 * (spec.B[i] + d) >= 0 && 2 * (spec.B[i] + d) <= spec.C) {
                    IdentitySpec m = spec;
                    m.B[i] += d;
                    push(std::move(m));
                }
            }
        for (const auto& mut : mutations) {
            ++mutants;
            VerificationReport rep = verify_identity(mut, 50);
            if (rep.holds || rep.first_failure->N > 50) {
                pass = false;
                why << spec.name << ": a mutation passes to N=50; ";
                break;
            }
        }
        if (!pass)
            break;
    }
    outcome(8, pass,
            "every single-coefficient or shift mutation of a proven entry fails by "
            "N<=50 (" +
                std::to_string(mutants) + " mutants, " + std::to_string(timer.ms()) +
                " ms) " + why.str());
}

} // namespace

int main()
{
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (g_failures)
        std::printf("%d criterion(s) FAILED\n", g_failures);
    else
        std::printf("all acceptance criteria passed\n");
    return g_failures ? 1 : 0;
}
