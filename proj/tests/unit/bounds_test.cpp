#include <doctest.h>

#include "omegadet/bounds.hpp"

using namespace omegadet;

TEST_CASE("compact bounds")
{
  CHECK(compact_buchi_bound(1) == 2);
  CHECK(compact_buchi_bound(2) == 16);
  CHECK(compact_buchi_bound(3) == 324);
  CHECK(compact_buchi_bound(4) == 12288);
  CHECK(compact_streett_bound(2, 1) == 3072);
  // k = 0 collapses to the Büchi formula
  for (std::size_t n = 1; n <= 5; ++n)
    CHECK(compact_streett_bound(n, 0) == compact_buchi_bound(n));
}

TEST_CASE("Safra bounds")
{
  CHECK(safra_buchi_bound(1) == 12);
  CHECK(safra_buchi_bound(2) == 144 * 16);
  // 12^2 * 1 * 2^2 * 2^2 for n = 1, k = 1
  CHECK(safra_streett_bound(1, 1) == 144 * 4 * 4);
}

TEST_CASE("compact bounds improve on Safra's from n = 2")
{
  for (std::size_t n = 2; n <= 8; ++n)
    CHECK(compact_buchi_bound(n) < safra_buchi_bound(n));
}
