#include "report.hpp"

#include "errors.hpp"
#include "tuple_oracle.hpp"

#include <json.hpp>

#include <chrono>
#include <sstream>

namespace cpl {

using json = nlohmann::ordered_json;

namespace {

json failure_json(const VerificationReport::Failure& f)
{
    json j;
    j["N"] = f.N;
    j["left"] = f.left.to_decimal();
    j["right"] = f.right.to_decimal();
    return j;
}

json report_json(const VerificationReport& rep)
{
    json j;
    j["spec"] = rep.spec_name;
    j["n_from"] = rep.n_checked_from;
    j["n_to"] = rep.n_checked_to;
    j["holds"] = rep.holds;
    j["first_failure"] = rep.first_failure ? failure_json(*rep.first_failure) : json(nullptr);
    j["timings_ms"] = rep.timings_ms;
    json subs = json::array();
    for (const auto& s : rep.sub_N0_observations)
        subs.push_back(failure_json(s));
    j["sub_n0_observations"] = std::move(subs);
    return j;
}

json spec_json(const IdentitySpec& s)
{
    json j;
    j["name"] = s.name;
    j["status"] = to_string(s.status);
    j["source"] = s.source;
    j["C"] = s.C;
    j["A"] = s.A;
    j["B"] = s.B;
    j["m"] = s.m;
    j["N0"] = s.N0;
    j["p"] = s.p();
    j["factor"] = s.factor_string();
    return j;
}

std::string coeff_str(const Coeffs& c)
{
    std::ostringstream os;
    for (int i = 0; i < kTupleLen; ++i)
        os << (i ? " " : "") << c[i];
    return os.str();
}

} // namespace

std::string report_to_json(const VerificationReport& rep, int indent)
{
    return report_json(rep).dump(indent);
}

std::string reports_to_json(const std::vector<VerificationReport>& reps, int indent)
{
    json arr = json::array();
    for (const auto& r : reps)
        arr.push_back(report_json(r));
    return arr.dump(indent);
}

std::string catalog_to_json(const std::vector<IdentitySpec>& specs, int indent)
{
    json arr = json::array();
    for (const auto& s : specs)
        arr.push_back(spec_json(s));
    return arr.dump(indent);
}

std::string catalog_to_csv(const std::vector<IdentitySpec>& specs)
{
    std::ostringstream os;
    os << "name,status,source,C,m,N0,p,factor,A,B\n";
    for (const auto& s : specs) {
        os << s.name << ',' << to_string(s.status) << ",\"" << s.source << "\"," << s.C
           << ',' << s.m << ',' << s.N0 << ',' << s.p() << ',' << s.factor_string()
           << ",\"" << coeff_str(s.A) << "\",\"" << coeff_str(s.B) << "\"\n";
    }
    return os.str();
}

std::string catalog_to_markdown(const std::vector<IdentitySpec>& specs)
{
    std::ostringstream os;
    os << "| name | status | source | C | m | N0 | factor | A | B |\n";
    os << "|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& s : specs) {
        os << "| " << s.name << " | " << to_string(s.status) << " | " << s.source
           << " | " << s.C << " | " << s.m << " | " << s.N0 << " | " << s.factor_string()
           << " | " << coeff_str(s.A) << " | " << coeff_str(s.B) << " |\n";
    }
    return os.str();
}

std::string reports_to_csv(const std::vector<VerificationReport>& reps)
{
    std::ostringstream os;
    os << "spec,n_from,n_to,holds,failure_N,left,right,timings_ms\n";
    for (const auto& r : reps) {
        os << r.spec_name << ',' << r.n_checked_from << ',' << r.n_checked_to << ','
           << (r.holds ? "true" : "false") << ',';
        if (r.first_failure)
            os << r.first_failure->N << ',' << r.first_failure->left.to_decimal() << ','
               << r.first_failure->right.to_decimal();
        else
            os << ",,";
        os << ',' << r.timings_ms << "\n";
    }
    return os.str();
}

std::string reports_to_markdown(const std::vector<VerificationReport>& reps)
{
    std::ostringstream os;
    os << "| spec | range | holds | first failure | ms |\n|---|---|---|---|---|\n";
    for (const auto& r : reps) {
        os << "| " << r.spec_name << " | [" << r.n_checked_from << ", " << r.n_checked_to
           << "] | " << (r.holds ? "yes" : "NO") << " | ";
        if (r.first_failure)
            os << "N=" << r.first_failure->N << ": " << r.first_failure->left.to_decimal()
               << " vs " << r.first_failure->right.to_decimal();
        else
            os << "-";
        os << " | " << r.timings_ms << " |\n";
    }
    return os.str();
}

std::string match_report_to_json(const MatchReport& rep, bool include_table, int indent)
{
    json j;
    j["lemma"] = rep.tag;
    j["value_max"] = rep.value_max;
    j["pass"] = rep.pass;
    j["clauses"] = {{"single_claim", rep.single_claim_ok},
                    {"value_and_side", rep.value_side_ok},
                    {"mutual_inverse", rep.inverse_ok},
                    {"count_identity", rep.counts_ok}};
    j["failure"] = rep.failure;
    j["elements"] = rep.elements;
    json cases = json::array();
    for (const auto& c : rep.case_counts) {
        json cj;
        cj["stage"] = c.stage;
        cj["case"] = c.name;
        cj["claimed"] = c.claimed;
        cases.push_back(std::move(cj));
    }
    j["cases"] = std::move(cases);
    if (include_table) {
        json table = json::array();
        for (const auto& row : rep.table) {
            json rj;
            rj["N"] = row.N;
            for (size_t f = 0; f < rep.family_names.size(); ++f)
                rj[rep.family_names[f]] = row.family_counts[f];
            rj["left"] = row.left;
            rj["right"] = row.right;
            table.push_back(std::move(rj));
        }
        j["reconciliation"] = std::move(table);
    }
    j["timings_ms"] = rep.timings_ms;
    return j.dump(indent);
}

OracleReport run_oracle(const IdentitySpec& spec, long n_max, long brute_n_max)
{
    auto start = std::chrono::steady_clock::now();
    OracleReport rep;
    rep.spec_name = spec.name;
    rep.n_max = n_max;
    rep.brute_n_max = brute_n_max;

    ParityTable qa = quad_weights(spec.C, spec.A, n_max);
    ParityTable qb = quad_weights(spec.C, spec.B, std::max<long>(0, n_max - spec.m));
    std::vector<BigNat> pt = partition_tuples(n_max / spec.C);

    rep.counts_equal = true;
    for (long N = spec.N0; N <= n_max; ++N) {
        BigNat left = tuple_count(qa, pt, spec.C, 0, N);
        BigNat right = tuple_count(qb, pt, spec.C, spec.m, N);
        if (left != right) {
            rep.counts_equal = false;
            rep.first_count_mismatch = N;
            break;
        }
    }

    UVTables uv = make_uv_tables(spec, n_max);
    rep.m_property = uv.profile.m_property;
    if (rep.m_property) {
        rep.uv_equal = true;
        for (long N = 0; N <= n_max; ++N) {
            auto [u, v] = uv.at(spec, N);
            if (u != v) {
                rep.uv_equal = false;
                rep.first_uv_mismatch = N;
                break;
            }
        }
    }

    if (brute_n_max >= 0) {
        rep.brute_equal = true;
        for (long N = 0; N <= brute_n_max; ++N) {
            uint64_t lc = brute_count(spec.C, spec.A, 0, N);
            uint64_t rc = brute_count(spec.C, spec.B, spec.m, N);
            if (BigNat(lc) != tuple_count(qa, pt, spec.C, 0, N) ||
                BigNat(rc) != tuple_count(qb, pt, spec.C, spec.m, N)) {
                rep.brute_equal = false;
                rep.first_brute_mismatch = N;
                break;
            }
        }
    }

    auto end = std::chrono::steady_clock::now();
    rep.timings_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    return rep;
}

std::string oracle_report_to_json(const OracleReport& rep, int indent)
{
    json j;
    j["spec"] = rep.spec_name;
    j["n_max"] = rep.n_max;
    j["tuple_counts_equal"] = rep.counts_equal;
    j["first_count_mismatch"] =
        rep.first_count_mismatch < 0 ? json(nullptr) : json(rep.first_count_mismatch);
    j["m_property"] = rep.m_property;
    j["uv_equal"] = rep.m_property ? json(rep.uv_equal) : json(nullptr);
    j["first_uv_mismatch"] =
        rep.first_uv_mismatch < 0 ? json(nullptr) : json(rep.first_uv_mismatch);
    j["brute_n_max"] = rep.brute_n_max < 0 ? json(nullptr) : json(rep.brute_n_max);
    j["brute_equal"] = rep.brute_n_max < 0 ? json(nullptr) : json(rep.brute_equal);
    j["ok"] = rep.ok();
    j["timings_ms"] = rep.timings_ms;
    return j.dump(indent);
}

std::string search_result_to_json(const SearchResult& res, int indent)
{
    json j;
    j["C"] = res.C;
    j["n_probe"] = res.n_probe;
    json arr = json::array();
    for (const auto& c : res.candidates) {
        json cj;
        cj["A"] = c.A;
        cj["B"] = c.B;
        cj["m"] = c.m;
        cj["N0"] = c.N0;
        cj["p"] = c.p;
        arr.push_back(std::move(cj));
    }
    j["candidates"] = std::move(arr);
    return j.dump(indent);
}

} // namespace cpl
