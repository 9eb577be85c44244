// Command-line front end.  All functionality is reached through the shared
// library's C interface; this translation unit knows nothing about the
// engine's internals.

#include "cpl/cpl.h"

#include <CLI11.hpp>

#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct RegistryHandle {
    cpl_registry* reg = nullptr;
    ~RegistryHandle() { cpl_registry_close(reg); }
};

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { cpl_string_free(s); }
};

int open_registry(const std::string& path_flag, RegistryHandle& h)
{
    cpl_status st;
    if (!path_flag.empty()) {
        st = cpl_registry_open(path_flag.c_str(), &h.reg);
    } else if (const char* env = std::getenv("CPL_REGISTRY"); env && *env) {
        st = cpl_registry_open(env, &h.reg);
    } else {
        st = cpl_registry_open_builtin(&h.reg);
    }
    if (st != CPL_OK) {
        std::cerr << "error: " << cpl_last_error() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

std::string csv_quote(const std::string& s)
{
    return "\"" + s + "\"";
}

std::string join_array(const ordered_json& arr)
{
    std::string out;
    for (const auto& v : arr) {
        if (!out.empty())
            out += " ";
        out += v.dump();
    }
    return out;
}

// The engine emits catalog/report JSON; table renderings are derived here.
void print_catalog(const ordered_json& arr, const std::string& format)
{
    if (format == "json") {
        std::cout << arr.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        std::cout << "name,status,source,C,m,N0,p,factor,A,B\n";
        for (const auto& rec : arr)
            std::cout << rec["name"].get<std::string>() << ','
                      << rec["status"].get<std::string>() << ','
                      << csv_quote(rec["source"].get<std::string>()) << ','
                      << rec["C"] << ',' << rec["m"] << ',' << rec["N0"] << ','
                      << rec["p"] << ',' << rec["factor"].get<std::string>() << ','
                      << csv_quote(join_array(rec["A"])) << ','
                      << csv_quote(join_array(rec["B"])) << "\n";
        return;
    }
    std::cout << "| name | status | source | C | m | N0 | factor | A | B |\n"
              << "|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& rec : arr)
        std::cout << "| " << rec["name"].get<std::string>() << " | "
                  << rec["status"].get<std::string>() << " | "
                  << rec["source"].get<std::string>() << " | " << rec["C"] << " | "
                  << rec["m"] << " | " << rec["N0"] << " | "
                  << rec["factor"].get<std::string>() << " | " << join_array(rec["A"])
                  << " | " << join_array(rec["B"]) << " |\n";
}

void print_reports(const ordered_json& arr, const std::string& format)
{
    if (format == "json") {
        std::cout << arr.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        std::cout << "spec,n_from,n_to,holds,failure_N,left,right,timings_ms\n";
        for (const auto& r : arr) {
            std::cout << r["spec"].get<std::string>() << ',' << r["n_from"] << ','
                      << r["n_to"] << ',' << (r["holds"].get<bool>() ? "true" : "false")
                      << ',';
            if (!r["first_failure"].is_null())
                std::cout << r["first_failure"]["N"] << ','
                          << r["first_failure"]["left"].get<std::string>() << ','
                          << r["first_failure"]["right"].get<std::string>();
            else
                std::cout << ",,";
            std::cout << ',' << r["timings_ms"] << "\n";
        }
        return;
    }
    std::cout << "| spec | range | holds | first failure | ms |\n"
              << "|---|---|---|---|---|\n";
    for (const auto& r : arr) {
        std::cout << "| " << r["spec"].get<std::string>() << " | [" << r["n_from"]
                  << ", " << r["n_to"] << "] | "
                  << (r["holds"].get<bool>() ? "yes" : "NO") << " | ";
        if (!r["first_failure"].is_null())
            std::cout << "N=" << r["first_failure"]["N"] << ": "
                      << r["first_failure"]["left"].get<std::string>() << " vs "
                      << r["first_failure"]["right"].get<std::string>();
        else
            std::cout << "-";
        std::cout << " | " << r["timings_ms"] << " |\n";
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"colored partition identity laboratory"};
    app.require_subcommand(1);

    std::string registry_path;
    app.add_option("--registry", registry_path,
                   "registry JSON path (default: $CPL_REGISTRY, else builtin)");

    // catalog
    auto* catalog = app.add_subcommand("catalog", "list the identity registry");
    std::string cat_status, cat_format = "markdown";
    catalog->add_option("--status", cat_status, "filter: proven|conjectured")
        ->check(CLI::IsMember({"proven", "conjectured"}));
    catalog->add_option("--format", cat_format, "json|csv|markdown")
        ->check(CLI::IsMember({"json", "csv", "markdown"}));

    // verify / verify-all
    auto* verify = app.add_subcommand("verify", "verify one identity");
    std::string ver_id, ver_format = "json";
    long ver_nmax = 0;
    verify->add_option("--id", ver_id, "spec name")->required();
    verify->add_option("--nmax", ver_nmax, "check N0 <= N <= nmax");
    verify->add_option("--format", ver_format, "json|csv|markdown")
        ->check(CLI::IsMember({"json", "csv", "markdown"}));

    auto* verify_all = app.add_subcommand("verify-all", "verify every identity");
    std::string va_status, va_format = "json";
    long va_nmax = 0;
    int va_jobs = 1;
    verify_all->add_option("--status", va_status, "filter: proven|conjectured")
        ->check(CLI::IsMember({"proven", "conjectured"}));
    verify_all->add_option("--nmax", va_nmax,
                           "depth (default 1000 proven / 2000 conjectured)");
    verify_all->add_option("--jobs", va_jobs, "parallel workers")->check(CLI::PositiveNumber);
    verify_all->add_option("--format", va_format, "json|csv|markdown")
        ->check(CLI::IsMember({"json", "csv", "markdown"}));

    // oracle
    auto* oracle = app.add_subcommand("oracle", "tuple-counting cross-checks");
    std::string or_id;
    long or_nmax = 60, or_brute = -1;
    oracle->add_option("--id", or_id, "spec name")->required();
    oracle->add_option("--nmax", or_nmax, "tuple-count range (default 60)");
    oracle->add_option("--brute-nmax", or_brute,
                       "exhaustive enumeration cross-check up to this N");

    // bijection
    auto* bijection = app.add_subcommand("bijection", "exhaustive matching certificate");
    std::string bj_lemma;
    long bj_value_max = 25;
    bool bj_table = false;
    bijection->add_option("--lemma", bj_lemma, "lemma3_1|lemma3_3|lemma3_4|lemma3_5|lemma3_6|lemma3_7")
        ->required();
    bijection->add_option("--value-max", bj_value_max, "enumerate values <= this bound");
    bijection->add_flag("--table", bj_table, "include the per-value reconciliation table");

    // search
    auto* search = app.add_subcommand("search", "probe coefficient pairs for identities");
    long se_C = 0, se_mmin = 0, se_mmax = -1, se_nprobe = 50, se_limit = 100000;
    std::string se_a, se_b, se_alphabet;
    search->add_option("--C", se_C, "modulus")->required();
    search->add_option("--m-min", se_mmin, "smallest offset m (default 0)");
    search->add_option("--m-max", se_mmax, "largest offset m (default m-min)");
    search->add_option("--a", se_a, "fixed A coefficients, comma separated");
    search->add_option("--b", se_b, "fixed B coefficients, comma separated");
    search->add_option("--alphabet", se_alphabet,
                       "enumerate sorted coefficient vectors over these values");
    search->add_option("--n-probe", se_nprobe, "verify candidates up to this N");
    search->add_option("--limit", se_limit, "cap on generated pairs (alphabet mode)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (catalog->parsed()) {
        RegistryHandle reg;
        if (int rc = open_registry(registry_path, reg))
            return rc;
        OwnedString out;
        cpl_status st = cpl_registry_catalog_json(
            reg.reg, cat_status.empty() ? nullptr : cat_status.c_str(), &out.s);
        if (st != CPL_OK) {
            std::cerr << "error: " << cpl_last_error() << "\n";
            return kExitUsage;
        }
        print_catalog(ordered_json::parse(out.s), cat_format);
        return kExitOk;
    }

    if (verify->parsed()) {
        if (verify->count("--nmax") && ver_nmax < 1) {
            std::cerr << "error: --nmax must be >= 1\n";
            return kExitUsage;
        }
        RegistryHandle reg;
        if (int rc = open_registry(registry_path, reg))
            return rc;
        OwnedString out;
        int holds = 0;
        cpl_status st = cpl_verify(reg.reg, ver_id.c_str(), ver_nmax, &holds, &out.s);
        if (st != CPL_OK) {
            std::cerr << "error: " << cpl_last_error() << "\n";
            return kExitUsage;
        }
        print_reports(ordered_json::array({ordered_json::parse(out.s)}), ver_format);
        return holds ? kExitOk : kExitCheckFailed;
    }

    if (verify_all->parsed()) {
        if (verify_all->count("--nmax") && va_nmax < 1) {
            std::cerr << "error: --nmax must be >= 1\n";
            return kExitUsage;
        }
        RegistryHandle reg;
        if (int rc = open_registry(registry_path, reg))
            return rc;
        OwnedString out;
        int all_hold = 0;
        cpl_status st = cpl_verify_all(reg.reg, va_status.empty() ? nullptr : va_status.c_str(),
                                       va_nmax, va_jobs, &all_hold, &out.s);
        if (st != CPL_OK) {
            std::cerr << "error: " << cpl_last_error() << "\n";
            return kExitUsage;
        }
        print_reports(ordered_json::parse(out.s), va_format);
        return all_hold ? kExitOk : kExitCheckFailed;
    }

    if (oracle->parsed()) {
        RegistryHandle reg;
        if (int rc = open_registry(registry_path, reg))
            return rc;
        OwnedString out;
        int ok = 0;
        cpl_status st = cpl_oracle(reg.reg, or_id.c_str(), or_nmax, or_brute, &ok, &out.s);
        if (st != CPL_OK) {
            std::cerr << "error: " << cpl_last_error() << "\n";
            return kExitUsage;
        }
        std::cout << out.s << "\n";
        return ok ? kExitOk : kExitCheckFailed;
    }

    if (bijection->parsed()) {
        OwnedString out;
        int pass = 0;
        cpl_status st = cpl_bijection(bj_lemma.c_str(), bj_value_max, &pass, &out.s);
        if (st != CPL_OK) {
            std::cerr << "error: " << cpl_last_error() << "\n";
            return kExitUsage;
        }
        ordered_json rep = ordered_json::parse(out.s);
        if (!bj_table)
            rep.erase("reconciliation");
        std::cout << rep.dump(2) << "\n";
        return pass ? kExitOk : kExitCheckFailed;
    }

    if (search->parsed()) {
        if (se_mmax < se_mmin)
            se_mmax = se_mmin;
        bool pair_mode = !se_a.empty() || !se_b.empty();
        if (pair_mode == !se_alphabet.empty()) {
            std::cerr << "error: give either --a/--b or --alphabet\n";
            return kExitUsage;
        }
        OwnedString out;
        cpl_status st;
        if (pair_mode) {
            if (se_a.empty() || se_b.empty()) {
                std::cerr << "error: --a and --b must be given together\n";
                return kExitUsage;
            }
            st = cpl_search_pair(se_C, se_mmin, se_mmax, se_a.c_str(), se_b.c_str(),
                                 se_nprobe, &out.s);
        } else {
            st = cpl_search_alphabet(se_C, se_mmin, se_mmax, se_alphabet.c_str(),
                                     se_nprobe, se_limit, &out.s);
        }
        if (st != CPL_OK) {
            std::cerr << "error: " << cpl_last_error() << "\n";
            return kExitUsage;
        }
        std::cout << out.s << "\n";
        return kExitOk;
    }

    return kExitUsage;
}
