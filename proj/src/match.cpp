#include "match.hpp"

#include "dvec.hpp"
#include "errors.hpp"
#include "identity_spec.hpp"
#include "tuple_oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <memory>
#include <sstream>

namespace cpl {

std::optional<LemmaTag> parse_lemma_tag(std::string_view s)
{
    if (s == "lemma3_1") return LemmaTag::lemma3_1;
    if (s == "lemma3_3") return LemmaTag::lemma3_3;
    if (s == "lemma3_4") return LemmaTag::lemma3_4;
    if (s == "lemma3_5") return LemmaTag::lemma3_5;
    if (s == "lemma3_6") return LemmaTag::lemma3_6;
    if (s == "lemma3_7") return LemmaTag::lemma3_7;
    return std::nullopt;
}

const char* to_string(LemmaTag tag)
{
    switch (tag) {
    case LemmaTag::lemma3_1: return "lemma3_1";
    case LemmaTag::lemma3_3: return "lemma3_3";
    case LemmaTag::lemma3_4: return "lemma3_4";
    case LemmaTag::lemma3_5: return "lemma3_5";
    case LemmaTag::lemma3_6: return "lemma3_6";
    case LemmaTag::lemma3_7: return "lemma3_7";
    }
    return "?";
}

std::vector<LemmaTag> all_lemma_tags()
{
    return {LemmaTag::lemma3_1, LemmaTag::lemma3_3, LemmaTag::lemma3_4,
            LemmaTag::lemma3_5, LemmaTag::lemma3_6, LemmaTag::lemma3_7};
}

namespace {

// ---------------------------------------------------------------------------
// Harness element model

struct Elem {
    int8_t family = 0;
    int8_t copy = 0;
    Tuple12 v{}; // doubled coords (dvec), plain integers (ivec), or f (fvec)
    bool operator==(const Elem&) const = default;
};

enum class FamKind { dvec, ivec, fvec };

struct FamilyDef {
    std::string name;
    FamKind kind = FamKind::ivec;
    long C = 1;
    Coeffs coeffs{};
    long add = 0;   // constant (the offset m) added to the weight form
    long shift = 0; // N = weight + add - shift
    int copies = 1;
    // side of an element: dvec: side_a for integer type, side_b for half;
    // ivec: side_a; fvec: side_a when sum f odd, side_b when even
    int side_a = 0;
    int side_b = 1;
    bool odd_sum_only = false; // ivec: restrict to odd coordinate sums
};

// subclass used for tallies: dvec 0=int/1=half, ivec sum parity, fvec f-sum parity
int subclass_of(const FamilyDef& fam, const Elem& e)
{
    if (fam.kind == FamKind::dvec)
        return (int)(e.v[0] & 1);
    int64_t s = 0;
    for (int64_t x : e.v)
        s += x;
    return (int)(((s % 2) + 2) % 2);
}

int side_of(const FamilyDef& fam, const Elem& e)
{
    switch (fam.kind) {
    case FamKind::dvec:
        return (e.v[0] & 1) ? fam.side_b : fam.side_a;
    case FamKind::ivec:
        return fam.side_a;
    case FamKind::fvec:
        return subclass_of(fam, e) == 1 ? fam.side_a : fam.side_b;
    }
    return 0;
}

int64_t weight_of(const FamilyDef& fam, const Elem& e)
{
    switch (fam.kind) {
    case FamKind::dvec: {
        int64_t v8 = 0;
        for (int i = 0; i < kTupleLen; ++i)
            v8 += fam.C * e.v[i] * (e.v[i] - 2) + 4 * (int64_t)fam.coeffs[i] * e.v[i];
        if (v8 % 8 != 0)
            throw DomainError("match: dvec value not an integer");
        return v8 / 8;
    }
    case FamKind::ivec: {
        int64_t w = 0;
        for (int i = 0; i < kTupleLen; ++i)
            w += fam.C * e.v[i] * (e.v[i] - 1) / 2 + (int64_t)fam.coeffs[i] * e.v[i];
        return w;
    }
    case FamKind::fvec: {
        int64_t w = 1;
        for (int64_t f : e.v)
            w += f * (3 * f - 1);
        return w;
    }
    }
    return 0;
}

long N_of(const FamilyDef& fam, const Elem& e)
{
    return (long)(weight_of(fam, e) + fam.add - fam.shift);
}

struct CaseDef {
    std::string name;
    uint32_t inverse_mask = 0; // cases allowed to claim the image
};

struct Problem {
    std::string tag;
    std::vector<FamilyDef> families;
    std::vector<CaseDef> cases;
    bool has_flip_stage = false;

    virtual ~Problem() = default;
    virtual uint32_t claim_mask(const Elem& e) const = 0;
    virtual Elem apply_case(int c, const Elem& e) const = 0;
    // Clause (d): per-value reconciliation against the DP oracles.
    virtual bool reconcile(const std::vector<std::vector<std::array<uint64_t, 2>>>& fam_tallies,
                           const std::vector<std::vector<std::array<uint64_t, 2>>>& flip_tallies,
                           long value_max, std::string& why) const = 0;
};

std::string render(const Problem& p, const Elem& e)
{
    std::ostringstream os;
    os << p.families[e.family].name << " copy=" << (int)e.copy << " [";
    for (int i = 0; i < kTupleLen; ++i)
        os << (i ? "," : "") << e.v[i];
    os << "]";
    if (p.families[e.family].kind == FamKind::dvec)
        os << " (doubled)";
    return os.str();
}

// ---------------------------------------------------------------------------
// Enumeration by value bound

template <typename F>
void enumerate_tuples(const std::vector<std::vector<std::pair<int64_t, int64_t>>>& opts,
                      const std::array<int64_t, kTupleLen + 1>& suffix_min, int64_t cap,
                      Tuple12& v, int i, int64_t acc, F&& leaf)
{
    if (i == kTupleLen) {
        leaf();
        return;
    }
    for (const auto& [w, val] : opts[i]) {
        if (acc + w + suffix_min[i + 1] > cap)
            break;
        v[i] = val;
        enumerate_tuples(opts, suffix_min, cap, v, i + 1, acc + w, leaf);
    }
}

// All elements of the family with N <= value_max, one call per element.
template <typename F>
void enumerate_family(const FamilyDef& fam, long value_max, F&& emit)
{
    int64_t wcap = value_max + fam.shift - fam.add;
    if (fam.kind == FamKind::dvec) {
        // two lattices: integer (even doubled coords) and half-integer (odd).
        // Half-integer coordinates can contribute negatively, so candidate
        // caps and pruning use per-coordinate minima.
        int64_t cap8 = 8 * wcap;
        for (int par = 0; par <= 1; ++par) {
            std::array<int64_t, kTupleLen> min8;
            int64_t total_min = 0;
            for (int i = 0; i < kTupleLen; ++i) {
                auto c8 = [&](int64_t t) {
                    return fam.C * t * (t - 2) + 4 * (int64_t)fam.coeffs[i] * t;
                };
                // the parabola's vertex lies in [0, 1]
                int64_t m = c8(par);
                for (int64_t t = par - 2; t <= par + 2; t += 2)
                    m = std::min(m, c8(t));
                min8[i] = m;
                total_min += m;
            }
            if (total_min > cap8)
                continue;
            std::vector<std::vector<std::pair<int64_t, int64_t>>> opts(kTupleLen);
            std::array<int64_t, kTupleLen + 1> suffix{};
            for (int i = kTupleLen; i-- > 0;)
                suffix[i] = suffix[i + 1] + min8[i];
            for (int i = 0; i < kTupleLen; ++i) {
                auto c8 = [&](int64_t t) {
                    return fam.C * t * (t - 2) + 4 * (int64_t)fam.coeffs[i] * t;
                };
                int64_t cap_i = cap8 - (total_min - min8[i]);
                auto& list = opts[i];
                for (int64_t t = par;; t += 2) {
                    if (c8(t) <= cap_i)
                        list.push_back({c8(t), t});
                    else if (t > 2)
                        break;
                }
                for (int64_t t = par - 2;; t -= 2) {
                    if (c8(t) <= cap_i)
                        list.push_back({c8(t), t});
                    else if (t < -2)
                        break;
                }
                std::sort(list.begin(), list.end());
            }
            Tuple12 v{};
            enumerate_tuples(opts, suffix, cap8, v, 0, 0, [&]() {
                int64_t s = 0;
                for (int64_t t : v)
                    s += t;
                if (((s % 4) + 4) % 4 != 2)
                    return;
                emit(v);
            });
        }
    } else if (fam.kind == FamKind::ivec) {
        if (wcap < 0)
            return;
        std::vector<std::vector<std::pair<int64_t, int64_t>>> opts(kTupleLen);
        for (int i = 0; i < kTupleLen; ++i) {
            auto w = [&](int64_t d) {
                return fam.C * d * (d - 1) / 2 + (int64_t)fam.coeffs[i] * d;
            };
            auto& list = opts[i];
            for (int64_t d = 0; w(d) <= wcap; ++d)
                list.push_back({w(d), d});
            for (int64_t d = -1; w(d) <= wcap; --d)
                list.push_back({w(d), d});
            std::sort(list.begin(), list.end());
        }
        std::array<int64_t, kTupleLen + 1> suffix{}; // weights are >= 0
        Tuple12 v{};
        enumerate_tuples(opts, suffix, wcap, v, 0, 0, [&]() {
            if (fam.odd_sum_only) {
                int64_t s = 0;
                for (int64_t d : v)
                    s += d;
                if ((((s % 2) + 2) % 2) == 0)
                    return;
            }
            emit(v);
        });
    } else {
        // fvec: weight = sum f(3f-1) + 1
        if (wcap < 1)
            return;
        int64_t budget = wcap - 1;
        std::vector<std::vector<std::pair<int64_t, int64_t>>> opts(kTupleLen);
        for (int i = 0; i < kTupleLen; ++i) {
            auto w = [&](int64_t f) { return f * (3 * f - 1); };
            auto& list = opts[i];
            for (int64_t f = 0; w(f) <= budget; ++f)
                list.push_back({w(f), f});
            for (int64_t f = -1; w(f) <= budget; --f)
                list.push_back({w(f), f});
            std::sort(list.begin(), list.end());
        }
        std::array<int64_t, kTupleLen + 1> suffix{};
        Tuple12 v{};
        enumerate_tuples(opts, suffix, budget, v, 0, 0, [&]() { emit(v); });
    }
}

// ---------------------------------------------------------------------------
// driver

struct Tallies {
    // [family][N] -> {subclass0, subclass1}
    std::vector<std::vector<std::array<uint64_t, 2>>> fam;
    // [N] -> {side0, side1}
    std::vector<std::array<uint64_t, 2>> side;
};

class Runner {
public:
    Runner(Problem& p, long value_max) : p_(p), vmax_(value_max) {}

    MatchReport run()
    {
        auto start = std::chrono::steady_clock::now();
        rep_.tag = p_.tag;
        rep_.value_max = vmax_;
        for (const auto& f : p_.families)
            rep_.family_names.push_back(f.name);
        main_.fam.assign(p_.families.size(),
                         std::vector<std::array<uint64_t, 2>>(vmax_ + 1, {0, 0}));
        main_.side.assign(vmax_ + 1, {0, 0});
        flip_.fam.assign(p_.families.size(),
                         std::vector<std::array<uint64_t, 2>>(vmax_ + 1, {0, 0}));
        case_claimed_.assign(p_.cases.size(), 0);
        flip_claimed_.assign(p_.families.size(), 0);

        rep_.single_claim_ok = rep_.value_side_ok = rep_.inverse_ok = true;
        bool ok = run_main() && (!p_.has_flip_stage || run_flip());
        if (ok) {
            std::string why;
            rep_.counts_ok = check_counts(why);
            if (!rep_.counts_ok)
                rep_.failure = "counts: " + why;
        }
        rep_.pass = ok && rep_.counts_ok;

        for (size_t c = 0; c < p_.cases.size(); ++c)
            rep_.case_counts.push_back({"main", p_.cases[c].name, case_claimed_[c]});
        if (p_.has_flip_stage)
            for (size_t f = 0; f < p_.families.size(); ++f)
                rep_.case_counts.push_back(
                    {"parity", "flip_" + p_.families[f].name, flip_claimed_[f]});

        for (long N = 0; N <= vmax_; ++N) {
            MatchReport::Row row;
            row.N = N;
            for (size_t f = 0; f < p_.families.size(); ++f)
                row.family_counts.push_back(main_.fam[f][N][0] + main_.fam[f][N][1]);
            row.left = main_.side[N][0];
            row.right = main_.side[N][1];
            rep_.table.push_back(std::move(row));
        }
        auto end = std::chrono::steady_clock::now();
        rep_.timings_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
        return std::move(rep_);
    }

private:
    bool fail(const char* clause, bool& flag, const Elem& e, const std::string& detail)
    {
        flag = false;
        rep_.failure = std::string(clause) + ": " + render(p_, e) +
                       (detail.empty() ? "" : " -- " + detail);
        return false;
    }

    bool run_main()
    {
        for (size_t fi = 0; fi < p_.families.size(); ++fi) {
            const FamilyDef& fam = p_.families[fi];
            bool bad = false;
            enumerate_family(fam, vmax_, [&](const Tuple12& v) {
                if (bad)
                    return;
                Elem e;
                e.family = (int8_t)fi;
                e.v = v;
                long N = N_of(fam, e);
                if (N < 0)
                    throw DomainError("match: element below the value window in " +
                                      fam.name);
                if (N > vmax_)
                    return;
                for (int copy = 0; copy < fam.copies && !bad; ++copy) {
                    e.copy = (int8_t)copy;
                    if (!process_main(e, N))
                        bad = true;
                }
            });
            if (bad)
                return false;
        }
        return true;
    }

    bool process_main(const Elem& e, long N)
    {
        ++rep_.elements;
        uint32_t mask = p_.claim_mask(e);
        if (std::popcount(mask) != 1)
            return fail("clause (a) single claim", rep_.single_claim_ok, e,
                        "claim mask = " + std::to_string(mask));
        int c = std::countr_zero(mask);
        Elem img = p_.apply_case(c, e);
        const FamilyDef& ifam = p_.families[img.family];
        long iN = N_of(ifam, img);
        if (iN != N)
            return fail("clause (b) value", rep_.value_side_ok, e,
                        "image " + render(p_, img) + " has N=" + std::to_string(iN) +
                            " expected " + std::to_string(N));
        if (side_of(ifam, img) == side_of(p_.families[e.family], e))
            return fail("clause (b) side", rep_.value_side_ok, e,
                        "image " + render(p_, img) + " is on the same side");
        uint32_t imask = p_.claim_mask(img);
        if (std::popcount(imask) != 1 || !(imask & p_.cases[c].inverse_mask))
            return fail("clause (c) inverse-claim", rep_.inverse_ok, e,
                        "image " + render(p_, img) + " claim mask = " + std::to_string(imask));
        int ic = std::countr_zero(imask);
        Elem back = p_.apply_case(ic, img);
        if (!(back == e))
            return fail("clause (c) inverse", rep_.inverse_ok, e,
                        "roundtrip gave " + render(p_, back));
        ++case_claimed_[c];
        ++main_.fam[e.family][N][subclass_of(p_.families[e.family], e)];
        ++main_.side[N][side_of(p_.families[e.family], e)];
        return true;
    }

    bool run_flip()
    {
        for (size_t fi = 0; fi < p_.families.size(); ++fi) {
            const FamilyDef& fam = p_.families[fi];
            if (fam.coeffs[0] != 0)
                throw DomainError("flip stage requires a zero first coefficient");
            bool bad = false;
            enumerate_family(fam, vmax_, [&](const Tuple12& v) {
                if (bad)
                    return;
                Elem e;
                e.family = (int8_t)fi;
                e.copy = 0;
                e.v = v;
                long N = N_of(fam, e);
                if (N < 0 || N > vmax_)
                    return;
                Elem img = e;
                img.v[0] = 1 - img.v[0];
                long iN = N_of(fam, img);
                int sub = subclass_of(fam, e);
                int isub = subclass_of(fam, img);
                if (iN != N || isub == sub) {
                    fail("clause (b) flip", rep_.value_side_ok, e,
                         "flip image " + render(p_, img));
                    bad = true;
                    return;
                }
                Elem back = img;
                back.v[0] = 1 - back.v[0];
                if (!(back == e)) {
                    fail("clause (c) flip involution", rep_.inverse_ok, e, "");
                    bad = true;
                    return;
                }
                ++flip_claimed_[fi];
                ++flip_.fam[fi][N][sub];
                ++rep_.elements;
            });
            if (bad)
                return false;
        }
        return true;
    }

    bool check_counts(std::string& why)
    {
        for (long N = 0; N <= vmax_; ++N)
            if (main_.side[N][0] != main_.side[N][1]) {
                why = "side totals differ at N=" + std::to_string(N) + ": " +
                      std::to_string(main_.side[N][0]) + " vs " +
                      std::to_string(main_.side[N][1]);
                return false;
            }
        return p_.reconcile(main_.fam, flip_.fam, vmax_, why);
    }

    Problem& p_;
    long vmax_;
    MatchReport rep_;
    Tallies main_, flip_;
    std::vector<uint64_t> case_claimed_;
    std::vector<uint64_t> flip_claimed_;
};

// ---------------------------------------------------------------------------
// shared helpers for the concrete problems

Coeffs fill12(int v)
{
    Coeffs c;
    c.fill(v);
    return c;
}

int64_t vsum(const Tuple12& v)
{
    int64_t s = 0;
    for (int64_t x : v)
        s += x;
    return s;
}

int mod_pos(int64_t v, int m)
{
    return (int)(((v % m) + m) % m);
}

// expected = DP table row (0 outside range)
bool row_matches(const ParityTable& t, long idx, bool odd, uint64_t got, long N,
                 const char* fam, std::string& why)
{
    BigNat expect;
    if (idx >= 0 && idx <= t.q_max())
        expect = odd ? t.odd_sum_counts[idx] : t.even_sum_counts[idx];
    if (expect != BigNat(got)) {
        why = std::string(fam) + " count mismatch at N=" + std::to_string(N) + ": got " +
              std::to_string(got) + ", oracle " + expect.to_decimal();
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// lemma3_1: reflections + residual pentagonal map  (C=2, A=(1,...,1))

class L31 : public Problem {
public:
    L31()
    {
        tag = "lemma3_1";
        FamilyDef D{"D", FamKind::dvec, 2, fill12(1), 0, 0, 1, 0, 1, false};
        FamilyDef F{"F", FamKind::fvec, 2, fill12(0), 0, 0, 24, 0, 1, false};
        families = {D, F};
        cases = {{"reflect", 1u << 0}, {"residual", 1u << 2}, {"reconstruct", 1u << 1}};
    }

    uint32_t claim_mask(const Elem& e) const override
    {
        if (e.family == 1)
            return 1u << 2;
        const auto& basis = ReflectionBasis::instance();
        DVec d(e.v, false);
        for (int i = 0; i < kTupleLen; ++i)
            if (basis.dot(d, i) % 3 == 0)
                return 1u << 0;
        return 1u << 1;
    }

    Elem apply_case(int c, const Elem& e) const override
    {
        if (c == 0) {
            const auto& basis = ReflectionBasis::instance();
            DVec d(e.v, false);
            for (int i = 0; i < kTupleLen; ++i)
                if (basis.dot(d, i) % 3 == 0) {
                    Elem out = e;
                    out.v = lemma1_reflect(d, i).t;
                    return out;
                }
            throw DomainError("lemma3_1: reflect applied outside its case");
        }
        if (c == 1) {
            Residual r = lemma1_residual(DVec(e.v, false));
            Elem out;
            out.family = 1;
            out.copy = (int8_t)r.z_index;
            out.v = r.f;
            return out;
        }
        Elem out;
        out.family = 0;
        out.copy = 0;
        out.v = lemma1_reconstruct(e.copy, e.v).t;
        return out;
    }

    bool reconcile(const std::vector<std::vector<std::array<uint64_t, 2>>>& fam,
                   const std::vector<std::vector<std::array<uint64_t, 2>>>&, long vmax,
                   std::string& why) const override
    {
        ParityTable qa = quad_weights(2, fill12(1), vmax);
        ParityTable qb = quad_weights(2, fill12(0), vmax);
        ParityTable pent = pentagonal_vectors(vmax / 2 + 1);
        IdentitySpec spec;
        spec.name = "thm_111";
        spec.C = 2;
        spec.A = fill12(1);
        spec.B = fill12(0);
        spec.m = 3;
        spec.N0 = 3;
        UVTables uv = make_uv_tables(spec, vmax);
        for (long N = 0; N <= vmax; ++N) {
            if (!row_matches(qa, N, true, fam[0][N][0], N, "D integer", why))
                return false;
            if (!row_matches(qb, N - 3, true, fam[0][N][1], N, "D half", why))
                return false;
            uint64_t fodd = fam[1][N][1], feven = fam[1][N][0];
            BigNat eo, ee;
            if (N >= 1 && (N - 1) % 2 == 0) {
                eo = pent.odd_sum_counts[(N - 1) / 2] * (uint64_t)24;
                ee = pent.even_sum_counts[(N - 1) / 2] * (uint64_t)24;
            }
            if (eo != BigNat(fodd) || ee != BigNat(feven)) {
                why = "F counts mismatch at N=" + std::to_string(N);
                return false;
            }
            auto [u, v] = uv.at(spec, N);
            if (u != BigNat(fam[0][N][0] + fodd) || v != BigNat(fam[0][N][1] + feven)) {
                why = "U/V bridge mismatch at N=" + std::to_string(N);
                return false;
            }
        }
        return true;
    }
};

// ---------------------------------------------------------------------------
// lemma3_3 / lemma3_4: mod-6 case maps between D (two copies) and D'

struct Mod6Config {
    const char* tag;
    long C;
    Coeffs A, B;
    long m;
    Coeffs Ap, Bp;
    long mp;
    long k, kp;
    bool split_form; // false: sigma = sum d_i; true: x = first six minus last six
};

class LMod6 : public Problem {
public:
    explicit LMod6(const Mod6Config& cfg) : cfg_(cfg)
    {
        tag = cfg.tag;
        FamilyDef D{"D", FamKind::dvec, cfg.C, cfg.A, 0, cfg.k, 2, 0, 1, false};
        FamilyDef Dp{"Dp", FamKind::dvec, cfg.C, cfg.Ap, 0, cfg.kp, 1, 1, 0, false};
        families = {D, Dp};
        cases = {{"d_r5", 1u << 0},  {"d_r3", 1u << 1},  {"d_r1_a", 1u << 4},
                 {"d_r1_b", 1u << 5}, {"dp_r1", 1u << 2}, {"dp_r5", 1u << 3},
                 {"dp_r3", 1u << 6}};
    }

    int64_t form(const Tuple12& t) const
    {
        if (!cfg_.split_form)
            return vsum(t) / 2;
        int64_t a = 0, b = 0;
        for (int i = 0; i < 6; ++i)
            a += t[i];
        for (int i = 6; i < kTupleLen; ++i)
            b += t[i];
        return (a - b) / 2;
    }

    uint32_t claim_mask(const Elem& e) const override
    {
        int r = mod_pos(form(e.v), 6);
        if (r % 2 == 0)
            return 0; // cannot happen for odd-sum tuples
        if (e.family == 0) {
            if (r == 5) return 1u << 0;
            if (r == 3) return 1u << 1;
            return e.copy == 0 ? 1u << 2 : 1u << 3;
        }
        if (r == 1) return 1u << 4;
        if (r == 5) return 1u << 5;
        return 1u << 6;
    }

    // shift by s/3 (doubled): plus on the first six, minus on the last six
    // when the split form is in play, uniform otherwise
    Tuple12 shifted(const Tuple12& t, int64_t third) const
    {
        Tuple12 out;
        for (int i = 0; i < kTupleLen; ++i) {
            int64_t d = (!cfg_.split_form || i < 6) ? -third : third;
            out[i] = t[i] + d;
        }
        return out;
    }

    Tuple12 negated_shift(const Tuple12& t, int64_t third) const
    {
        // sigma/6 - d_i pattern (uniform form); unused for the split form
        Tuple12 out;
        for (int i = 0; i < kTupleLen; ++i)
            out[i] = third - t[i];
        return out;
    }

    Tuple12 swapped_shift(const Tuple12& t, int64_t third) const
    {
        // d*_i = d_{i+6} + s, d*_{i+6} = d_i - s (split form)
        Tuple12 out;
        for (int i = 0; i < 6; ++i) {
            out[i] = t[i + 6] + third;
            out[i + 6] = t[i] - third;
        }
        return out;
    }

    Elem apply_case(int c, const Elem& e) const override
    {
        int64_t x = form(e.v);
        Elem out = e;
        switch (c) {
        case 0: // r == 5 involution, type flip
            out.v = shifted(e.v, (x - 2) / 3);
            return out;
        case 1: // r == 3 involution, type flip
            out.v = cfg_.split_form ? swapped_shift(e.v, x / 3)
                                    : negated_shift(e.v, x / 3);
            return out;
        case 2: // copy 0 -> D', residue 1
            out.family = 1;
            out.copy = 0;
            out.v = shifted(e.v, (x - 1) / 3);
            return out;
        case 3: // copy 1 -> D', residue 5
            out.family = 1;
            out.copy = 0;
            out.v = cfg_.split_form ? swapped_shift(e.v, (x - 1) / 3)
                                    : negated_shift(e.v, (x - 1) / 3);
            return out;
        case 4: // D' residue 1 -> D copy 0
            out.family = 0;
            out.copy = 0;
            out.v = shifted(e.v, (x - 1) / 3);
            return out;
        case 5: // D' residue 5 -> D copy 1
            out.family = 0;
            out.copy = 1;
            out.v = cfg_.split_form ? swapped_shift(e.v, (x + 1) / 3)
                                    : negated_shift(e.v, (x + 1) / 3);
            return out;
        case 6: // D' residue 3 involution
            out.v = shifted(e.v, x / 3);
            return out;
        }
        throw DomainError("mod6: unknown case");
    }

    bool reconcile(const std::vector<std::vector<std::array<uint64_t, 2>>>& fam,
                   const std::vector<std::vector<std::array<uint64_t, 2>>>&, long vmax,
                   std::string& why) const override
    {
        ParityTable qa = quad_weights(cfg_.C, cfg_.A, vmax + cfg_.k);
        ParityTable qb = quad_weights(cfg_.C, cfg_.B, vmax + cfg_.k);
        ParityTable qap = quad_weights(cfg_.C, cfg_.Ap, vmax + cfg_.kp);
        ParityTable qbp = quad_weights(cfg_.C, cfg_.Bp, vmax + cfg_.kp);
        for (long N = 0; N <= vmax; ++N) {
            if (!row_matches2(qa, N + cfg_.k, fam[0][N][0], 2, N, "D integer", why) ||
                !row_matches2(qb, N + cfg_.k - cfg_.m, fam[0][N][1], 2, N, "D half", why) ||
                !row_matches2(qap, N + cfg_.kp, fam[1][N][0], 1, N, "D' integer", why) ||
                !row_matches2(qbp, N + cfg_.kp - cfg_.mp, fam[1][N][1], 1, N, "D' half", why))
                return false;
        }
        return true;
    }

private:
    static bool row_matches2(const ParityTable& t, long idx, uint64_t got, uint64_t copies,
                             long N, const char* famname, std::string& why)
    {
        BigNat expect;
        if (idx >= 0 && idx <= t.q_max())
            expect = t.odd_sum_counts[idx] * copies;
        if (expect != BigNat(got)) {
            why = std::string(famname) + " mismatch at N=" + std::to_string(N) + ": got " +
                  std::to_string(got) + ", oracle " + expect.to_decimal();
            return false;
        }
        return true;
    }

    Mod6Config cfg_;
};

// ---------------------------------------------------------------------------
// lemma3_5: integer-tuple case maps (C=4), no half-integers involved

class L35 : public Problem {
public:
    L35()
    {
        tag = "lemma3_5";
        A_ = {2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1};
        B_ = {0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1};
        Ap_ = {2, 2, 2, 2, 0, 0, 0, 0, 2, 2, 2, 2};
        Bp_ = {0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 2};
        FamilyDef Q{"Q", FamKind::ivec, 4, A_, 0, 1, 1, 0, 0, true};
        FamilyDef R{"R", FamKind::ivec, 4, B_, 2, 1, 1, 1, 1, true};
        FamilyDef Qp{"Qp", FamKind::ivec, 4, Ap_, 0, 0, 1, 1, 1, true};
        FamilyDef Rp{"Rp", FamKind::ivec, 4, Bp_, 2, 0, 1, 0, 0, true};
        families = {Q, R, Qp, Rp};
        cases = {{"q_xodd", 1u << 1},   {"r_xodd", 1u << 0},  {"q_y1", 1u << 6},
                 {"q_y3", 1u << 7},     {"r_y1", 1u << 8},    {"r_y3", 1u << 9},
                 {"qp_y1", 1u << 2},    {"qp_y3", 1u << 3},   {"rp_y1", 1u << 4},
                 {"rp_y3", 1u << 5},    {"qp_xodd", 1u << 11}, {"rp_xodd", 1u << 10}};
    }

    static int64_t xform(const Tuple12& v) { return v[0] + v[1] + v[2] + v[3]; }
    static int64_t yform(const Tuple12& v)
    {
        return v[4] + v[5] + v[6] + v[7] - v[8] - v[9] - v[10] - v[11];
    }

    uint32_t claim_mask(const Elem& e) const override
    {
        bool xodd = mod_pos(xform(e.v), 2) == 1;
        int ymod = mod_pos(yform(e.v), 4);
        if (!xodd && ymod != 1 && ymod != 3)
            return 0; // cannot happen for odd-sum tuples
        int base;
        switch (e.family) {
        case 0: base = xodd ? 0 : (ymod == 1 ? 2 : 3); break;
        case 1: base = xodd ? 1 : (ymod == 1 ? 4 : 5); break;
        case 2: base = xodd ? 10 : (ymod == 1 ? 6 : 7); break;
        default: base = xodd ? 11 : (ymod == 1 ? 8 : 9); break;
        }
        return 1u << base;
    }

    static Tuple12 map_xd(const Tuple12& v)
    {
        int64_t s = (xform(v) - 1) / 2;
        Tuple12 out = v;
        for (int i = 0; i < 4; ++i)
            out[i] = v[i] - s;
        return out;
    }

    static Tuple12 map_y1(const Tuple12& v)
    {
        int64_t s = (yform(v) - 1) / 4;
        Tuple12 out = v;
        for (int i = 4; i < 8; ++i)
            out[i] = v[i] - s;
        for (int i = 8; i < 12; ++i)
            out[i] = v[i] + s;
        return out;
    }

    static Tuple12 map_y3(const Tuple12& v)
    {
        int64_t s = (yform(v) + 1) / 4;
        Tuple12 out = v;
        for (int i = 4; i < 8; ++i)
            out[i] = 1 - v[i + 4] - s;
        for (int i = 8; i < 12; ++i)
            out[i] = -v[i - 4] + s;
        return out;
    }

    Elem apply_case(int c, const Elem& e) const override
    {
        static constexpr int8_t target[12] = {1, 0, 2, 2, 3, 3, 0, 0, 1, 1, 3, 2};
        Elem out = e;
        out.family = target[c];
        switch (c) {
        case 0: case 1: case 10: case 11: out.v = map_xd(e.v); break;
        case 2: case 4: case 6: case 8: out.v = map_y1(e.v); break;
        default: out.v = map_y3(e.v); break;
        }
        return out;
    }

    bool reconcile(const std::vector<std::vector<std::array<uint64_t, 2>>>& fam,
                   const std::vector<std::vector<std::array<uint64_t, 2>>>&, long vmax,
                   std::string& why) const override
    {
        ParityTable qa = quad_weights(4, A_, vmax + 1);
        ParityTable qb = quad_weights(4, B_, vmax + 1);
        ParityTable qap = quad_weights(4, Ap_, vmax);
        ParityTable qbp = quad_weights(4, Bp_, vmax);
        for (long N = 0; N <= vmax; ++N) {
            if (!row_matches(qa, N + 1, true, fam[0][N][1], N, "Q", why) ||
                !row_matches(qb, N - 1, true, fam[1][N][1], N, "R", why) ||
                !row_matches(qap, N, true, fam[2][N][1], N, "Q'", why) ||
                !row_matches(qbp, N - 2, true, fam[3][N][1], N, "R'", why))
                return false;
            if (fam[0][N][0] || fam[1][N][0] || fam[2][N][0] || fam[3][N][0]) {
                why = "even-sum element leaked into an odd-sum family at N=" +
                      std::to_string(N);
                return false;
            }
        }
        return true;
    }

private:
    Coeffs A_, B_, Ap_, Bp_;
};

// ---------------------------------------------------------------------------
// lemma3_6 / lemma3_7: Hadamard-style quadruple transforms (C=4), built on
// unrestricted integer tuples plus a first-coordinate parity-flip stage.

// Invert w = H [p,q,r,s]^T with H rows (1,1,-1,-1),(1,-1,1,-1),(1,-1,-1,1),
// (1,1,1,1): p = (a+b+c+d)/4 etc.  Throws unless all four divide.
std::array<int64_t, 4> hadamard_inv(int64_t a, int64_t b, int64_t c, int64_t d)
{
    int64_t p4 = a + b + c + d;
    int64_t q4 = a - b - c + d;
    int64_t r4 = -a + b - c + d;
    int64_t s4 = -a - b + c + d;
    if (p4 % 4 || q4 % 4 || r4 % 4 || s4 % 4)
        throw DomainError("hadamard_inv: non-integral preimage");
    return {p4 / 4, q4 / 4, r4 / 4, s4 / 4};
}

class L36 : public Problem {
public:
    L36()
    {
        tag = "lemma3_6";
        A_ = {0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 2};
        B_ = {0, 0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2};
        Ap_ = {0, 0, 0, 0, 2, 2, 2, 2, 2, 2, 2, 2};
        Bp_ = {0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 2};
        FamilyDef Q{"Q", FamKind::ivec, 4, A_, 0, 0, 2, 0, 0, false};
        FamilyDef R{"R", FamKind::ivec, 4, B_, 1, 0, 2, 1, 1, false};
        FamilyDef Qp{"Qp", FamKind::ivec, 4, Ap_, 0, 0, 1, 1, 1, false};
        FamilyDef Rp{"Rp", FamKind::ivec, 4, Bp_, 2, 0, 1, 0, 0, false};
        families = {Q, R, Qp, Rp};
        has_flip_stage = true;
        cases = {{"q_odd_c0", (1u << 2) | (1u << 3)}, {"q_odd_c1", (1u << 2) | (1u << 3)},
                 {"r_even_c0", (1u << 0) | (1u << 1)}, {"r_even_c1", (1u << 0) | (1u << 1)},
                 {"q_even_c0", 1u << 8},               {"q_even_c1", 1u << 8},
                 {"r_odd_c0", 1u << 9},                {"r_odd_c1", 1u << 9},
                 {"qp", (1u << 4) | (1u << 5)},        {"rp", (1u << 6) | (1u << 7)}};
    }

    // one-based coordinates d4..d9 live in v[3..8]; the d-form reads d4..d7,
    // the e-form e6..e9
    static int64_t dform(const Tuple12& v) { return v[3] + v[4] + v[5] + v[6]; }
    static int64_t eform(const Tuple12& v) { return v[5] + v[6] + v[7] + v[8]; }

    uint32_t claim_mask(const Elem& e) const override
    {
        switch (e.family) {
        case 0:
            return mod_pos(dform(e.v), 2) ? (1u << (0 + e.copy)) : (1u << (4 + e.copy));
        case 1:
            return mod_pos(eform(e.v), 2) ? (1u << (6 + e.copy)) : (1u << (2 + e.copy));
        case 2:
            return 1u << 8;
        default:
            return 1u << 9;
        }
    }

    // d-mid (form odd) -> X  (x1..x6), sign fixed per copy
    static std::array<int64_t, 6> alpha(const Tuple12& v, int sign)
    {
        int64_t s1 = v[3] + v[4] - v[5] - v[6];
        int64_t s2 = v[3] - v[4] + v[5] - v[6];
        int64_t s3 = v[3] - v[4] - v[5] + v[6];
        int64_t s4 = dform(v);
        return {(sign * s1 + 1) / 2, (s2 + 1) / 2, (s3 + 1) / 2, (s4 - 1) / 2, v[7], v[8]};
    }

    // X -> d-mid: the sign is determined by integrality (x1+x2+x3+x4 parity)
    static std::pair<Tuple12, int> alpha_inv(const std::array<int64_t, 6>& x, const Tuple12& outer)
    {
        int sign = mod_pos(x[0] + x[1] + x[2] + x[3], 2) == 1 ? 1 : -1;
        int64_t s1 = sign * (2 * x[0] - 1);
        int64_t s2 = 2 * x[1] - 1;
        int64_t s3 = 2 * x[2] - 1;
        int64_t s4 = 2 * x[3] + 1;
        auto q = hadamard_inv(s1, s2, s3, s4);
        Tuple12 out = outer;
        out[3] = q[0];
        out[4] = q[1];
        out[5] = q[2];
        out[6] = q[3];
        out[7] = x[4];
        out[8] = x[5];
        return {out, sign};
    }

    // e-mid (form even) -> X, sign fixed per copy
    static std::array<int64_t, 6> beta(const Tuple12& v, int sign)
    {
        int64_t s = v[5] + v[6] + v[7] + v[8]; // even
        return {v[3], v[4], (1 + sign * (s - 1)) / 2, (v[5] + v[6] - v[7] - v[8]) / 2,
                (v[5] - v[6] + v[7] - v[8]) / 2, (v[5] - v[6] - v[7] + v[8]) / 2};
    }

    static std::pair<Tuple12, int> beta_inv(const std::array<int64_t, 6>& x, const Tuple12& outer)
    {
        int sign = mod_pos(x[2] + x[3] + x[4] + x[5], 2) == 0 ? 1 : -1;
        int64_t half = sign == 1 ? x[2] : 1 - x[2]; // sum(e5..e8)/2
        if ((half + x[3] + x[4] + x[5]) % 2 != 0)
            throw DomainError("beta_inv: non-integral preimage");
        int64_t e5 = (half + x[3] + x[4] + x[5]) / 2;
        int64_t e6 = (half + x[3] - x[4] - x[5]) / 2;
        int64_t e7 = (half - x[3] + x[4] - x[5]) / 2;
        int64_t e8 = (half - x[3] - x[4] + x[5]) / 2;
        Tuple12 out = outer;
        out[3] = x[0];
        out[4] = x[1];
        out[5] = e5;
        out[6] = e6;
        out[7] = e7;
        out[8] = e8;
        return {out, sign};
    }

    // d-mid (form even) -> d'-mid, sign per copy
    static Tuple12 gamma(const Tuple12& v, int sign)
    {
        Tuple12 out = v;
        out[3] = (1 + sign * (dform(v) - 1)) / 2;
        out[4] = (v[3] + v[4] - v[5] - v[6]) / 2;
        out[5] = (v[3] - v[4] + v[5] - v[6]) / 2;
        out[6] = (v[3] - v[4] - v[5] + v[6]) / 2;
        return out;
    }

    static std::pair<Tuple12, int> gamma_inv(const Tuple12& vp)
    {
        int sign = mod_pos(vp[3] + vp[4] + vp[5] + vp[6], 2) == 0 ? 1 : -1;
        int64_t half = sign == 1 ? vp[3] : 1 - vp[3]; // dform/2
        if ((half + vp[4] + vp[5] + vp[6]) % 2 != 0)
            throw DomainError("gamma_inv: non-integral preimage");
        int64_t d4 = (half + vp[4] + vp[5] + vp[6]) / 2;
        int64_t d5 = (half + vp[4] - vp[5] - vp[6]) / 2;
        int64_t d6 = (half - vp[4] + vp[5] - vp[6]) / 2;
        int64_t d7 = (half - vp[4] - vp[5] + vp[6]) / 2;
        Tuple12 out = vp;
        out[3] = d4;
        out[4] = d5;
        out[5] = d6;
        out[6] = d7;
        return {out, sign};
    }

    // e-mid (form odd) -> e'-mid, sign per copy
    static Tuple12 delta(const Tuple12& v, int sign)
    {
        Tuple12 out = v;
        out[5] = (1 + sign * (v[5] + v[6] - v[7] - v[8])) / 2;
        out[6] = (v[5] - v[6] + v[7] - v[8] + 1) / 2;
        out[7] = (v[5] - v[6] - v[7] + v[8] + 1) / 2;
        out[8] = (eform(v) - 1) / 2;
        return out;
    }

    static std::pair<Tuple12, int> delta_inv(const Tuple12& vp)
    {
        int sign = mod_pos(vp[5] + vp[6] + vp[7] + vp[8], 2) == 1 ? 1 : -1;
        int64_t a = sign * (2 * vp[5] - 1); // e5+e6-e7-e8
        int64_t b = 2 * vp[6] - 1;          // e5-e6+e7-e8
        int64_t c = 2 * vp[7] - 1;          // e5-e6-e7+e8
        int64_t d = 2 * vp[8] + 1;          // e5+e6+e7+e8
        auto q = hadamard_inv(a, b, c, d);
        Tuple12 out = vp;
        out[5] = q[0];
        out[6] = q[1];
        out[7] = q[2];
        out[8] = q[3];
        return {out, sign};
    }

    Elem apply_case(int c, const Elem& e) const override
    {
        Elem out = e;
        switch (c) {
        case 0:
        case 1: { // Q odd-form: alpha then beta-inverse -> R, copy from beta sign
            auto x = alpha(e.v, c == 0 ? 1 : -1);
            auto [v, sign] = beta_inv(x, e.v);
            out.family = 1;
            out.copy = sign == 1 ? 0 : 1;
            out.v = v;
            return out;
        }
        case 2:
        case 3: { // R even-form: beta then alpha-inverse -> Q
            auto x = beta(e.v, c == 2 ? 1 : -1);
            auto [v, sign] = alpha_inv(x, e.v);
            out.family = 0;
            out.copy = sign == 1 ? 0 : 1;
            out.v = v;
            return out;
        }
        case 4:
        case 5: // Q even-form -> Q'
            out.family = 2;
            out.copy = 0;
            out.v = gamma(e.v, c == 4 ? 1 : -1);
            return out;
        case 6:
        case 7: // R odd-form -> R'
            out.family = 3;
            out.copy = 0;
            out.v = delta(e.v, c == 6 ? 1 : -1);
            return out;
        case 8: { // Q' -> Q, copy from sign
            auto [v, sign] = gamma_inv(e.v);
            out.family = 0;
            out.copy = sign == 1 ? 0 : 1;
            out.v = v;
            return out;
        }
        case 9: { // R' -> R
            auto [v, sign] = delta_inv(e.v);
            out.family = 1;
            out.copy = sign == 1 ? 0 : 1;
            out.v = v;
            return out;
        }
        }
        throw DomainError("lemma3_6: unknown case");
    }

    bool reconcile(const std::vector<std::vector<std::array<uint64_t, 2>>>& fam,
                   const std::vector<std::vector<std::array<uint64_t, 2>>>& flip, long vmax,
                   std::string& why) const override
    {
        return reconcile_hadamard(fam, flip, vmax, why, 4, A_, B_, 1, Ap_, Bp_, 2);
    }

protected:
    static bool reconcile_hadamard(const std::vector<std::vector<std::array<uint64_t, 2>>>& fam,
                                   const std::vector<std::vector<std::array<uint64_t, 2>>>& flip,
                                   long vmax, std::string& why, long C, const Coeffs& A,
                                   const Coeffs& B, long m, const Coeffs& Ap, const Coeffs& Bp,
                                   long mp)
    {
        ParityTable qa = quad_weights(C, A, vmax);
        ParityTable qb = quad_weights(C, B, vmax);
        ParityTable qap = quad_weights(C, Ap, vmax);
        ParityTable qbp = quad_weights(C, Bp, vmax);
        const ParityTable* tables[4] = {&qa, &qb, &qap, &qbp};
        long offs[4] = {0, m, 0, mp};
        uint64_t copies[4] = {2, 2, 1, 1};
        for (long N = 0; N <= vmax; ++N) {
            for (int f = 0; f < 4; ++f) {
                long idx = N - offs[f];
                BigNat even, odd;
                if (idx >= 0 && idx <= tables[f]->q_max()) {
                    even = tables[f]->even_sum_counts[idx];
                    odd = tables[f]->odd_sum_counts[idx];
                }
                BigNat total = (even + odd) * copies[f];
                if (total != BigNat(fam[f][N][0] + fam[f][N][1])) {
                    why = "family " + std::to_string(f) + " total mismatch at N=" +
                          std::to_string(N);
                    return false;
                }
                if (even != BigNat(flip[f][N][0]) || odd != BigNat(flip[f][N][1])) {
                    why = "family " + std::to_string(f) + " parity rows mismatch at N=" +
                          std::to_string(N);
                    return false;
                }
            }
            // the odd-sum identity itself: 2 Q_odd + R'_odd == 2 R_odd + Q'_odd
            auto at = [&](const ParityTable& t, long idx) {
                return idx >= 0 && idx <= t.q_max() ? t.odd_sum_counts[idx] : BigNat();
            };
            BigNat lhs = at(qa, N) * (uint64_t)2 + at(qbp, N - mp);
            BigNat rhs = at(qb, N - m) * (uint64_t)2 + at(qap, N);
            if (lhs != rhs) {
                why = "odd-sum count identity fails at N=" + std::to_string(N);
                return false;
            }
        }
        return true;
    }

    Coeffs A_, B_, Ap_, Bp_;
};

class L37 : public Problem {
public:
    L37()
    {
        tag = "lemma3_7";
        A_ = {0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2};
        B_ = {0, 0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2};
        Ap_ = {0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 2};
        Bp_ = B_;
        FamilyDef Q{"Q", FamKind::ivec, 4, A_, 0, 0, 2, 0, 0, false};
        FamilyDef R{"R", FamKind::ivec, 4, B_, 1, 0, 2, 1, 1, false};
        FamilyDef Qp{"Qp", FamKind::ivec, 4, Ap_, 0, 0, 1, 1, 1, false};
        FamilyDef Rp{"Rp", FamKind::ivec, 4, Bp_, 1, 0, 1, 0, 0, false};
        families = {Q, R, Qp, Rp};
        has_flip_stage = true;
        cases = {{"rp_id", 1u << 1},                 {"r_c0_id", 1u << 0},
                 {"q_odd_c0", 1u << 4},              {"q_odd_c1", 1u << 4},
                 {"r_c1", (1u << 2) | (1u << 3)},    {"q_even_c0", 1u << 7},
                 {"q_even_c1", 1u << 7},             {"qp", (1u << 5) | (1u << 6)}};
    }

    // one-based coordinates d3, d4, d5, d10 live in v[2], v[3], v[4], v[9]
    static int64_t qform(const Tuple12& v) { return v[2] + v[3] + v[4] + v[9]; }

    uint32_t claim_mask(const Elem& e) const override
    {
        switch (e.family) {
        case 0:
            return mod_pos(qform(e.v), 2) ? (1u << (2 + e.copy)) : (1u << (5 + e.copy));
        case 1:
            return e.copy == 0 ? 1u << 1 : 1u << 4;
        case 2:
            return 1u << 7;
        default:
            return 1u << 0;
        }
    }

    static Tuple12 eps(const Tuple12& v, int sign)
    {
        Tuple12 out = v;
        out[2] = (1 + sign * (v[2] + v[3] - v[4] - v[9])) / 2;
        out[3] = (v[2] - v[3] + v[4] - v[9] + 1) / 2;
        out[4] = (v[2] - v[3] - v[4] + v[9] + 1) / 2;
        out[9] = (qform(v) - 1) / 2;
        return out;
    }

    static std::pair<Tuple12, int> eps_inv(const Tuple12& e)
    {
        int sign = mod_pos(e[2] + e[3] + e[4] + e[9], 2) == 1 ? 1 : -1;
        int64_t s1 = sign * (2 * e[2] - 1);
        int64_t s2 = 2 * e[3] - 1;
        int64_t s3 = 2 * e[4] - 1;
        int64_t s4 = 2 * e[9] + 1;
        auto q = hadamard_inv(s1, s2, s3, s4);
        Tuple12 out = e;
        out[2] = q[0];
        out[3] = q[1];
        out[4] = q[2];
        out[9] = q[3];
        return {out, sign};
    }

    static Tuple12 zeta(const Tuple12& v, int sign)
    {
        Tuple12 out = v;
        out[2] = (1 + sign * (qform(v) - 1)) / 2;
        out[7] = (v[2] + v[3] - v[4] - v[9]) / 2;
        out[8] = (v[2] - v[3] + v[4] - v[9]) / 2;
        out[9] = (v[2] - v[3] - v[4] + v[9]) / 2;
        out[3] = v[5];
        out[4] = v[6];
        out[5] = v[7];
        out[6] = v[8];
        return out;
    }

    static std::pair<Tuple12, int> zeta_inv(const Tuple12& vp)
    {
        int sign = mod_pos(vp[2] + vp[7] + vp[8] + vp[9], 2) == 0 ? 1 : -1;
        int64_t s4 = 1 + sign * (2 * vp[2] - 1);
        int64_t s1 = 2 * vp[7];
        int64_t s2 = 2 * vp[8];
        int64_t s3 = 2 * vp[9];
        auto q = hadamard_inv(s1, s2, s3, s4);
        Tuple12 out = vp;
        out[2] = q[0];
        out[3] = q[1];
        out[4] = q[2];
        out[9] = q[3];
        out[5] = vp[3];
        out[6] = vp[4];
        out[7] = vp[5];
        out[8] = vp[6];
        return {out, sign};
    }

    Elem apply_case(int c, const Elem& e) const override
    {
        Elem out = e;
        switch (c) {
        case 0: // R' -> R copy 0, identity vector
            out.family = 1;
            out.copy = 0;
            return out;
        case 1: // R copy 0 -> R'
            out.family = 3;
            out.copy = 0;
            return out;
        case 2:
        case 3: // Q odd-form -> R copy 1
            out.family = 1;
            out.copy = 1;
            out.v = eps(e.v, c == 2 ? 1 : -1);
            return out;
        case 4: { // R copy 1 -> Q copy by sign
            auto [v, sign] = eps_inv(e.v);
            out.family = 0;
            out.copy = sign == 1 ? 0 : 1;
            out.v = v;
            return out;
        }
        case 5:
        case 6: // Q even-form -> Q'
            out.family = 2;
            out.copy = 0;
            out.v = zeta(e.v, c == 5 ? 1 : -1);
            return out;
        case 7: { // Q' -> Q copy by sign
            auto [v, sign] = zeta_inv(e.v);
            out.family = 0;
            out.copy = sign == 1 ? 0 : 1;
            out.v = v;
            return out;
        }
        }
        throw DomainError("lemma3_7: unknown case");
    }

    bool reconcile(const std::vector<std::vector<std::array<uint64_t, 2>>>& fam,
                   const std::vector<std::vector<std::array<uint64_t, 2>>>& flip, long vmax,
                   std::string& why) const override
    {
        // same oracle layout as lemma3_6, with both offsets equal to 1 and
        // copies (2,2,1,1)
        ParityTable qa = quad_weights(4, A_, vmax);
        ParityTable qb = quad_weights(4, B_, vmax);
        ParityTable qap = quad_weights(4, Ap_, vmax);
        const ParityTable& qbp = qb;
        const ParityTable* tables[4] = {&qa, &qb, &qap, &qbp};
        long offs[4] = {0, 1, 0, 1};
        uint64_t copies[4] = {2, 2, 1, 1};
        for (long N = 0; N <= vmax; ++N) {
            for (int f = 0; f < 4; ++f) {
                long idx = N - offs[f];
                BigNat even, odd;
                if (idx >= 0 && idx <= tables[f]->q_max()) {
                    even = tables[f]->even_sum_counts[idx];
                    odd = tables[f]->odd_sum_counts[idx];
                }
                if ((even + odd) * copies[f] != BigNat(fam[f][N][0] + fam[f][N][1])) {
                    why = "family " + std::to_string(f) + " total mismatch at N=" +
                          std::to_string(N);
                    return false;
                }
                if (even != BigNat(flip[f][N][0]) || odd != BigNat(flip[f][N][1])) {
                    why = "family " + std::to_string(f) + " parity rows mismatch at N=" +
                          std::to_string(N);
                    return false;
                }
            }
            auto at = [&](const ParityTable& t, long idx) {
                return idx >= 0 && idx <= t.q_max() ? t.odd_sum_counts[idx] : BigNat();
            };
            BigNat lhs = at(qa, N) * (uint64_t)2 + at(qbp, N - 1);
            BigNat rhs = at(qb, N - 1) * (uint64_t)2 + at(qap, N);
            if (lhs != rhs) {
                why = "odd-sum count identity fails at N=" + std::to_string(N);
                return false;
            }
        }
        return true;
    }

private:
    Coeffs A_, B_, Ap_, Bp_;
};

std::unique_ptr<Problem> make_problem(LemmaTag tag)
{
    switch (tag) {
    case LemmaTag::lemma3_1:
        return std::make_unique<L31>();
    case LemmaTag::lemma3_3: {
        Mod6Config cfg{"lemma3_3", 6, fill12(2), fill12(1), 3,
                       fill12(3), fill12(0), 9, 2, 3, false};
        return std::make_unique<LMod6>(cfg);
    }
    case LemmaTag::lemma3_4: {
        Mod6Config cfg{"lemma3_4", 6, {1, 1, 1, 1, 1, 1, 3, 3, 3, 3, 3, 3},
                       {0, 0, 0, 0, 0, 0, 2, 2, 2, 2, 2, 2}, 3,
                       fill12(2), fill12(1), 3, 1, 2, true};
        return std::make_unique<LMod6>(cfg);
    }
    case LemmaTag::lemma3_5:
        return std::make_unique<L35>();
    case LemmaTag::lemma3_6:
        return std::make_unique<L36>();
    case LemmaTag::lemma3_7:
        return std::make_unique<L37>();
    }
    throw DomainError("unknown lemma tag");
}

} // namespace

MatchReport exhaustive_match(LemmaTag tag, long value_max)
{
    if (value_max < 0)
        throw RangeError("exhaustive_match: value_max must be >= 0");
    auto problem = make_problem(tag);
    Runner runner(*problem, value_max);
    return runner.run();
}

} // namespace cpl
