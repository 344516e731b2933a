#include "doctest.h"

#include "properties.hpp"

TEST_CASE("property suites, fixed seeds") {
  int total = 0;
  for (const auto& r : {props::ring_laws(101, 150), props::extract_roundtrip(102, 250),
                        props::truncation_stability(103, 250), props::parser_roundtrip(104, 400)}) {
    INFO(r.name, ": ", r.first);
    CHECK(r.failures == 0);
    total += r.cases;
  }
  CHECK(total >= 1000);
}
