#include <doctest.h>

#include "contact/homs.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace contact;

TEST_CASE("edge rounding matches the interval criterion on basic pairs") {
  for (int n = 1; n <= 6; ++n)
    for (int e = 0; e <= n; ++e) {
      auto bs = basic_sets(n, e);
      for (const auto& a : bs)
        for (const auto& b : bs) {
          const bool want = a == b || oracle::interval_tight(a.based_mask(), b.based_mask());
          CHECK_MESSAGE(hom_nonzero(a, b) == want, describe(a) << " -> " << describe(b));
          CHECK(tight_basic(a, b) == want);
        }
    }
}

TEST_CASE("hom spaces of the nested C_{4,2} basics") {
  auto g = [](Label a, Label b) { return basic_of(4, 2, {0, a, b}); };
  CHECK_FALSE(hom_nonzero(g(1, 2), g(2, 4)));
  CHECK_FALSE(hom_nonzero(g(1, 3), g(3, 4)));
  CHECK(hom_nonzero(g(1, 3), g(2, 4)));
  CHECK(rounded_components(g(1, 2), g(2, 4)) > 1);
  CHECK(rounded_components(g(1, 3), g(2, 4)) == 1);
  CHECK(composition_nonzero(g(1, 3), g(2, 3), g(2, 4)));
  CHECK(composition_nonzero(g(1, 3), g(1, 4), g(2, 4)));
  CHECK(composition_nonzero_right(g(1, 3), g(2, 3), g(2, 4)));
}

TEST_CASE("every object has its identity and every bypass is tight") {
  for (int n = 1; n <= 4; ++n)
    for (int e = 0; e <= n; ++e)
      for (const auto& g : enumerate_objects(n, e)) {
        CHECK(hom_nonzero(g, g));
        for (const auto& mv : enumerate_bypasses(g)) CHECK(hom_nonzero(g, attach(g, mv)));
      }
}

TEST_CASE("hom inputs are checked") {
  CHECK_THROWS_AS(hom_nonzero(basic_of(2, 1, {0, 1}), basic_of(3, 1, {0, 1})), ComponentMismatch);
  CHECK_THROWS_AS(tight_basic(fixtures::c21_nonbasic(), basic_of(2, 1, {0, 1})), NotBasic);
}
