#include "cpl/cpl.h"

#include <doctest.h>

#include <json.hpp>

#include <cstring>
#include <fstream>
#include <string>

namespace {

using nlohmann::ordered_json;

struct Reg {
    cpl_registry* h = nullptr;
    ~Reg() { cpl_registry_close(h); }
};

struct Str {
    char* s = nullptr;
    ~Str() { cpl_string_free(s); }
};

} // namespace

TEST_CASE("builtin registry through the C surface")
{
    Reg reg;
    REQUIRE(cpl_registry_open_builtin(&reg.h) == CPL_OK);
    CHECK(cpl_registry_size(reg.h) == 42);

    Str all, proven, conjectured;
    REQUIRE(cpl_registry_catalog_json(reg.h, nullptr, &all.s) == CPL_OK);
    REQUIRE(cpl_registry_catalog_json(reg.h, "proven", &proven.s) == CPL_OK);
    REQUIRE(cpl_registry_catalog_json(reg.h, "conjectured", &conjectured.s) == CPL_OK);
    CHECK(ordered_json::parse(all.s).size() == 42);
    CHECK(ordered_json::parse(proven.s).size() == 12);
    CHECK(ordered_json::parse(conjectured.s).size() == 30);

    Str bad;
    CHECK(cpl_registry_catalog_json(reg.h, "unknown", &bad.s) == CPL_ERR_RANGE);
    CHECK(std::strlen(cpl_last_error()) > 0);
}

TEST_CASE("registry file equals the builtin")
{
    Reg file_reg, builtin_reg;
    REQUIRE(cpl_registry_open(CPL_REGISTRY_FILE, &file_reg.h) == CPL_OK);
    REQUIRE(cpl_registry_open_builtin(&builtin_reg.h) == CPL_OK);
    Str a, b;
    REQUIRE(cpl_registry_catalog_json(file_reg.h, nullptr, &a.s) == CPL_OK);
    REQUIRE(cpl_registry_catalog_json(builtin_reg.h, nullptr, &b.s) == CPL_OK);
    CHECK(std::string(a.s) == b.s);
}

TEST_CASE("verify through the C surface, with byte-stable JSON")
{
    Reg reg;
    REQUIRE(cpl_registry_open_builtin(&reg.h) == CPL_OK);
    Str rep;
    int holds = -1;
    REQUIRE(cpl_verify(reg.h, "thm_333", 150, &holds, &rep.s) == CPL_OK);
    CHECK(holds == 1);
    ordered_json parsed = ordered_json::parse(rep.s);
    CHECK(parsed["spec"] == "thm_333");
    CHECK(parsed["holds"] == true);
    CHECK(parsed["first_failure"].is_null());
    // round trip: parse then re-serialize must be byte-identical
    CHECK(parsed.dump(2) == std::string(rep.s));

    CHECK(cpl_verify(reg.h, "nope", 100, &holds, nullptr) == CPL_ERR_NOT_FOUND);
    CHECK(cpl_verify(reg.h, "thm_333", 2, &holds, nullptr) == CPL_ERR_RANGE);
}

TEST_CASE("verify-all filtered subset")
{
    Reg reg;
    REQUIRE(cpl_registry_open_builtin(&reg.h) == CPL_OK);
    Str out;
    int all_hold = -1;
    REQUIRE(cpl_verify_all(reg.h, "proven", 60, 2, &all_hold, &out.s) == CPL_OK);
    CHECK(all_hold == 1);
    ordered_json arr = ordered_json::parse(out.s);
    CHECK(arr.size() == 12);
    CHECK(arr[0]["spec"] == "thm_111");
    for (const auto& r : arr)
        CHECK(r["holds"] == true);
}

TEST_CASE("oracle and bijection through the C surface")
{
    Reg reg;
    REQUIRE(cpl_registry_open_builtin(&reg.h) == CPL_OK);
    Str rep;
    int ok = -1;
    REQUIRE(cpl_oracle(reg.h, "thm_999", 30, 6, &ok, &rep.s) == CPL_OK);
    CHECK(ok == 1);
    ordered_json parsed = ordered_json::parse(rep.s);
    CHECK(parsed["tuple_counts_equal"] == true);
    CHECK(parsed["brute_equal"] == true);

    CHECK(cpl_oracle(reg.h, "thm_999", 30, 99, &ok, nullptr) == CPL_ERR_BOUND);

    Str match;
    int pass = -1;
    REQUIRE(cpl_bijection("lemma3_4", 12, &pass, &match.s) == CPL_OK);
    CHECK(pass == 1);
    CHECK(cpl_bijection("bogus", 12, &pass, nullptr) == CPL_ERR_NOT_FOUND);
}

TEST_CASE("search through the C surface")
{
    Str out;
    REQUIRE(cpl_search_pair(2, 3, 3, "1,1,1,1,1,1,1,1,1,1,1,1",
                            "0,0,0,0,0,0,0,0,0,0,0,0", 40, &out.s) == CPL_OK);
    ordered_json res = ordered_json::parse(out.s);
    REQUIRE(res["candidates"].size() == 1);
    CHECK(res["candidates"][0]["N0"] == 2);
    CHECK(res["candidates"][0]["p"] == 11);

    Str bad;
    CHECK(cpl_search_pair(2, 0, 0, "1,2", "0,0", 20, &bad.s) == CPL_ERR_RANGE);
}

TEST_CASE("registry file errors")
{
    cpl_registry* reg = nullptr;
    CHECK(cpl_registry_open("/no/such/file.json", &reg) == CPL_ERR_PARSE);
    std::ofstream bad("/tmp/cpl_bad_registry.json");
    bad << "[{\"name\": \"x\"}]";
    bad.close();
    CHECK(cpl_registry_open("/tmp/cpl_bad_registry.json", &reg) == CPL_ERR_PARSE);
}
