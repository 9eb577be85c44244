#include "colored_set.hpp"
#include "errors.hpp"
#include "identity_spec.hpp"

#include <doctest.h>

using namespace cpl;

namespace {

Coeffs fill12(int v)
{
    Coeffs c;
    c.fill(v);
    return c;
}

} // namespace

TEST_CASE("24 copies of the odds")
{
    ColoredSet s = build_colored_set(2, fill12(1));
    CHECK(s.multiplicity == std::vector<int>{0, 24});
    CHECK(s.parity_required);
    CHECK(s.copies_of(7) == 24);
    CHECK(s.copies_of(4) == 0);
    CHECK(s.min_element() == 1);
}

TEST_CASE("mixed even/odd copies")
{
    ColoredSet s = build_colored_set(2, {0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(s.multiplicity == std::vector<int>{8, 16});
    CHECK_FALSE(s.parity_required);
}

TEST_CASE("modulus six, coefficient two")
{
    ColoredSet s = build_colored_set(6, fill12(2));
    CHECK(s.multiplicity == std::vector<int>{0, 0, 12, 0, 12, 0});
    CHECK(s.parity_required);
    CHECK(s.min_element() == 2);
}

TEST_CASE("zero and C/2 coefficients contribute both signs")
{
    // one zero coefficient: the zero class gets two copies
    Coeffs c = fill12(1);
    c[0] = 0;
    ColoredSet s = build_colored_set(2, c);
    CHECK(s.multiplicity[0] == 2);
    CHECK(s.multiplicity[1] == 22);
    // C/2 likewise carries both signed copies of its single class
    ColoredSet h = build_colored_set(4, fill12(2));
    CHECK(h.multiplicity[2] == 24);
}

TEST_CASE("coefficient range errors")
{
    Coeffs bad = fill12(1);
    bad[3] = -1;
    CHECK_THROWS_AS(build_colored_set(2, bad), DomainError);
    bad[3] = 3;
    CHECK_THROWS_AS(build_colored_set(2, bad), DomainError);
    CHECK_THROWS_AS(build_colored_set(0, fill12(0)), DomainError);
}

TEST_CASE("registry sets always have total multiplicity 24")
{
    for (const auto& spec : builtin_registry()) {
        CHECK(spec.set_S().total_multiplicity() == 24);
        CHECK(spec.set_T().total_multiplicity() == 24);
    }
}

TEST_CASE("replacing a coefficient by C - a leaves the set unchanged")
{
    for (const auto& spec : builtin_registry()) {
        Coeffs reflected;
        for (int i = 0; i < kTupleLen; ++i)
            reflected[i] = (int)(spec.C - spec.A[i]) % (int)spec.C;
        CHECK(build_colored_set(spec.C, reflected) == spec.set_S());
    }
}

TEST_CASE("fold_coeff")
{
    CHECK(fold_coeff(6, 5) == 1);
    CHECK(fold_coeff(6, 3) == 3);
    CHECK(fold_coeff(6, 6) == 0);
    CHECK(fold_coeff(6, -1) == 1);
    CHECK(fold_coeff(2, 1) == 1);
}
