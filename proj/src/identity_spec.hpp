#pragma once

#include "colored_set.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cpl {

enum class Status { proven, conjectured };

const char* to_string(Status s);

// p = |{B_i = 0}| - |{A_i = 0}| with an empty set counted as 1.  Coefficients
// are folded first so that a and C-a are interchangeable.
int derive_p(long C, const Coeffs& A, const Coeffs& B);

// One registry record: the data of an identity D_S(N) = 2^p * D_T(N - m),
// N >= N0, with S, T generated by A, B modulo C.
struct IdentitySpec {
    std::string name;
    Status status = Status::proven;
    std::string source;
    long C = 1;
    Coeffs A{};
    Coeffs B{};
    long m = 0;
    long N0 = 1;

    int p() const { return derive_p(C, A, B); }
    // factor = 2^p as an exact rational: num/den, each a power of two.
    void factor(uint64_t& num, uint64_t& den) const;
    std::string factor_string() const; // "2048", "1/2", ...

    ColoredSet set_S() const { return build_colored_set(C, A); }
    ColoredSet set_T() const { return build_colored_set(C, B); }
};

// Parse the registry document (canonical JSON array).  Unknown fields and
// range violations are rejected; errors name the offending record.
std::vector<IdentitySpec> load_registry(std::string_view json_text);

std::vector<IdentitySpec> load_registry_file(const std::string& path);

// The registry shipped with the library: 12 proven + 30 conjectured entries.
const std::vector<IdentitySpec>& builtin_registry();
const char* builtin_registry_json();

const IdentitySpec* find_spec(const std::vector<IdentitySpec>& regs, std::string_view name);

} // namespace cpl
