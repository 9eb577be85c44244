#include "cpl/cpl.h"

#include "errors.hpp"
#include "identity_spec.hpp"
#include "match.hpp"
#include "report.hpp"
#include "series.hpp"
#include "tuple_oracle.hpp"

#include <cstring>
#include <memory>
#include <sstream>
#include <string>

using namespace cpl;

struct cpl_registry {
    std::vector<IdentitySpec> specs;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s)
{
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

cpl_status set_error(cpl_status code, const std::string& msg)
{
    g_last_error = msg;
    return code;
}

template <typename Fn>
cpl_status guarded(Fn&& fn)
{
    try {
        return fn();
    } catch (const ParseError& e) {
        return set_error(CPL_ERR_PARSE, e.what());
    } catch (const DomainError& e) {
        return set_error(CPL_ERR_DOMAIN, e.what());
    } catch (const RangeError& e) {
        return set_error(CPL_ERR_RANGE, e.what());
    } catch (const BoundError& e) {
        return set_error(CPL_ERR_BOUND, e.what());
    } catch (const NotFoundError& e) {
        return set_error(CPL_ERR_NOT_FOUND, e.what());
    } catch (const std::exception& e) {
        return set_error(CPL_ERR_INTERNAL, e.what());
    }
}

std::vector<IdentitySpec> filter_specs(const cpl_registry* reg, const char* status_filter)
{
    std::vector<IdentitySpec> out;
    for (const auto& s : reg->specs) {
        if (!status_filter || std::string_view(status_filter) == to_string(s.status))
            out.push_back(s);
    }
    if (status_filter && std::string_view(status_filter) != "proven" &&
        std::string_view(status_filter) != "conjectured")
        throw RangeError("status filter must be 'proven' or 'conjectured'");
    return out;
}

const IdentitySpec& require_spec(const cpl_registry* reg, const char* name)
{
    if (!name)
        throw NotFoundError("spec name is null");
    const IdentitySpec* spec = find_spec(reg->specs, name);
    if (!spec)
        throw NotFoundError("unknown spec '" + std::string(name) + "'");
    return *spec;
}

Coeffs parse_csv_coeffs(const char* csv)
{
    if (!csv)
        throw RangeError("coefficient list is null");
    Coeffs out{};
    std::stringstream ss(csv);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= kTupleLen)
            throw RangeError("coefficient list must have exactly 12 entries");
        out[i++] = std::stoi(item);
    }
    if (i != kTupleLen)
        throw RangeError("coefficient list must have exactly 12 entries");
    return out;
}

std::vector<int> parse_csv_ints(const char* csv)
{
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoi(item));
    return out;
}

} // namespace

extern "C" {

const char* cpl_version(void)
{
    return "1.0.0";
}

const char* cpl_last_error(void)
{
    return g_last_error.c_str();
}

void cpl_string_free(char* s)
{
    delete[] s;
}

cpl_status cpl_registry_open(const char* path, cpl_registry** out)
{
    return guarded([&]() {
        if (!path || !out)
            return set_error(CPL_ERR_RANGE, "null argument");
        auto reg = std::make_unique<cpl_registry>();
        reg->specs = load_registry_file(path);
        *out = reg.release();
        return CPL_OK;
    });
}

cpl_status cpl_registry_open_builtin(cpl_registry** out)
{
    return guarded([&]() {
        if (!out)
            return set_error(CPL_ERR_RANGE, "null argument");
        auto reg = std::make_unique<cpl_registry>();
        reg->specs = builtin_registry();
        *out = reg.release();
        return CPL_OK;
    });
}

void cpl_registry_close(cpl_registry* reg)
{
    delete reg;
}

int cpl_registry_size(const cpl_registry* reg)
{
    return reg ? (int)reg->specs.size() : 0;
}

cpl_status cpl_registry_catalog_json(const cpl_registry* reg, const char* status_filter,
                                     char** out_json)
{
    return guarded([&]() {
        if (!reg || !out_json)
            return set_error(CPL_ERR_RANGE, "null argument");
        *out_json = dup_string(catalog_to_json(filter_specs(reg, status_filter)));
        return CPL_OK;
    });
}

cpl_status cpl_verify(const cpl_registry* reg, const char* name, long n_max,
                      int* holds_out, char** report_json)
{
    return guarded([&]() {
        if (!reg)
            return set_error(CPL_ERR_RANGE, "null registry");
        const IdentitySpec& spec = require_spec(reg, name);
        VerificationReport rep = verify_identity(spec, default_n_max(spec, n_max));
        if (holds_out)
            *holds_out = rep.holds ? 1 : 0;
        if (report_json)
            *report_json = dup_string(report_to_json(rep));
        return CPL_OK;
    });
}

cpl_status cpl_verify_all(const cpl_registry* reg, const char* status_filter,
                          long n_max, int jobs, int* all_hold, char** reports_json)
{
    return guarded([&]() {
        if (!reg)
            return set_error(CPL_ERR_RANGE, "null registry");
        std::vector<IdentitySpec> specs = filter_specs(reg, status_filter);
        std::vector<VerificationReport> reps = verify_many(specs, n_max, jobs);
        bool ok = true;
        for (const auto& r : reps)
            ok = ok && r.holds;
        if (all_hold)
            *all_hold = ok ? 1 : 0;
        if (reports_json)
            *reports_json = dup_string(reports_to_json(reps));
        return CPL_OK;
    });
}

cpl_status cpl_oracle(const cpl_registry* reg, const char* name, long n_max,
                      long brute_n_max, int* ok_out, char** report_json)
{
    return guarded([&]() {
        if (!reg)
            return set_error(CPL_ERR_RANGE, "null registry");
        const IdentitySpec& spec = require_spec(reg, name);
        if (n_max < spec.N0)
            return set_error(CPL_ERR_RANGE, "n_max must be >= N0");
        if (brute_n_max > kBruteTupleLimit)
            return set_error(CPL_ERR_BOUND,
                             "brute bound exceeds the enumeration limit " +
                                 std::to_string(kBruteTupleLimit));
        OracleReport rep = run_oracle(spec, n_max, brute_n_max);
        if (ok_out)
            *ok_out = rep.ok() ? 1 : 0;
        if (report_json)
            *report_json = dup_string(oracle_report_to_json(rep));
        return CPL_OK;
    });
}

cpl_status cpl_bijection(const char* lemma_tag, long value_max, int* pass_out,
                         char** report_json)
{
    return guarded([&]() {
        if (!lemma_tag)
            return set_error(CPL_ERR_NOT_FOUND, "lemma tag is null");
        auto tag = parse_lemma_tag(lemma_tag);
        if (!tag)
            return set_error(CPL_ERR_NOT_FOUND,
                             "unknown lemma tag '" + std::string(lemma_tag) + "'");
        MatchReport rep = exhaustive_match(*tag, value_max);
        if (pass_out)
            *pass_out = rep.pass ? 1 : 0;
        if (report_json)
            *report_json = dup_string(match_report_to_json(rep, /*include_table=*/true));
        return CPL_OK;
    });
}

cpl_status cpl_search_pair(long C, long m_min, long m_max, const char* a_csv,
                           const char* b_csv, long n_probe, char** result_json)
{
    return guarded([&]() {
        Coeffs A = parse_csv_coeffs(a_csv);
        Coeffs B = parse_csv_coeffs(b_csv);
        bool emitted = false;
        CoeffPairGenerator gen = [&]() -> std::optional<std::pair<Coeffs, Coeffs>> {
            if (emitted)
                return std::nullopt;
            emitted = true;
            return std::make_pair(A, B);
        };
        SearchResult res;
        res.C = C;
        res.n_probe = n_probe;
        res.candidates = search_candidates(C, m_min, m_max, gen, n_probe);
        if (result_json)
            *result_json = dup_string(search_result_to_json(res));
        return CPL_OK;
    });
}

cpl_status cpl_search_alphabet(long C, long m_min, long m_max, const char* alphabet_csv,
                               long n_probe, long max_pairs, char** result_json)
{
    return guarded([&]() {
        if (!alphabet_csv)
            return set_error(CPL_ERR_RANGE, "alphabet is null");
        std::vector<int> alphabet = parse_csv_ints(alphabet_csv);
        if (alphabet.empty())
            return set_error(CPL_ERR_RANGE, "alphabet is empty");
        for (int a : alphabet)
            if (a < 0 || 2 * a > C)
                return set_error(CPL_ERR_DOMAIN, "alphabet value outside [0, C/2]");
        // enumerate sorted (multiset) coefficient vectors over the alphabet
        std::vector<Coeffs> vectors;
        Coeffs cur{};
        auto rec = [&](auto&& self, int pos, size_t min_idx) -> void {
            if (pos == kTupleLen) {
                vectors.push_back(cur);
                return;
            }
            for (size_t i = min_idx; i < alphabet.size(); ++i) {
                cur[pos] = alphabet[i];
                self(self, pos + 1, i);
            }
        };
        rec(rec, 0, 0);
        size_t ai = 0, bi = 0;
        long produced = 0;
        CoeffPairGenerator gen = [&]() -> std::optional<std::pair<Coeffs, Coeffs>> {
            if (produced >= max_pairs || ai >= vectors.size())
                return std::nullopt;
            auto pair = std::make_pair(vectors[ai], vectors[bi]);
            if (++bi == vectors.size()) {
                bi = 0;
                ++ai;
            }
            ++produced;
            return pair;
        };
        SearchResult res;
        res.C = C;
        res.n_probe = n_probe;
        res.candidates = search_candidates(C, m_min, m_max, gen, n_probe);
        if (result_json)
            *result_json = dup_string(search_result_to_json(res));
        return CPL_OK;
    });
}

} // extern "C"
