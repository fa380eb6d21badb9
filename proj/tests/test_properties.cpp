#include <doctest.h>

#include "property_suites.hpp"

TEST_CASE("randomized property suites") {
    for (const auto& suite : props::all_suites()) {
        CAPTURE(suite.name);
        CHECK(suite.run(2000, 0xC0FFEE) == 0);
    }
}

TEST_CASE("negative points have non-positive negated prefix sums") {
    using namespace spdual;
    GridSpec grid = default_grid();
    for (int q = 1; q <= 3; ++q) {
        for (const auto& [rep, norm] : enumerate_negative(q, grid)) {
            Rational prefix(0);
            for (const auto& x : norm) {
                prefix = prefix + (-x);
                CHECK(prefix <= Rational(0));
            }
        }
    }
}
