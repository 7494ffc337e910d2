#include <atomic>
#include <mutex>
#include <numeric>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "mbl/core.hpp"

using namespace mbl;

TEST_CASE("report bookkeeping", "[core]") {
  Report r;
  CHECK(r.ok());
  r.checks = 3;
  r.fail("M4.join", {1, 2}, "witness detail");
  CHECK_FALSE(r.ok());
  CHECK(r.ok_for("M1"));
  CHECK_FALSE(r.ok_for("M4"));
  CHECK_FALSE(r.ok_for("M4.join"));

  Report other;
  other.checks = 2;
  other.fail("M5", {0});
  r.merge(other);
  CHECK(r.checks == 5);
  CHECK(r.failures.size() == 2);
}

TEST_CASE("group counting distinguishes related law names", "[core]") {
  Report r;
  r.fail("M13.exists-1", {0});
  // the failure counts against M13 but not against M1
  CHECK(passed_groups(r, {"M13", "M1", "M30"}) == 2);
  Report clean;
  CHECK(passed_groups(clean, {"M6", "M7"}) == 2);
}

TEST_CASE("error hierarchy roots in the library error", "[core]") {
  CHECK_THROWS_AS(throw structural_error("x"), error);
  CHECK_THROWS_AS(throw invalid_parameter("x"), error);
  CHECK_THROWS_AS(throw precondition_error("x"), error);
}

TEST_CASE("mask helpers", "[core]") {
  Mask m = mask_of({0, 2, 5});
  CHECK(mask_size(m) == 3);
  CHECK(mask_has(m, 2));
  CHECK_FALSE(mask_has(m, 1));
  CHECK(mask_elements(m) == std::vector<int>{0, 2, 5});
  CHECK(mask_bit(3) == 8u);
  CHECK_THROWS_AS(mask_of({64}), invalid_parameter);
  CHECK_THROWS_AS(mask_of({-1}), invalid_parameter);
}

TEST_CASE("sharded ranges cover the index space exactly once", "[core]") {
  for (int jobs : {1, 2, 3, 7}) {
    for (std::size_t count : {std::size_t{0}, std::size_t{1}, std::size_t{5}, std::size_t{100}}) {
      std::vector<int> seen(count, 0);
      std::mutex mu;
      run_sharded(jobs, count, [&](std::size_t begin, std::size_t end) {
        std::lock_guard<std::mutex> lock(mu);
        for (std::size_t i = begin; i < end; ++i) seen[i]++;
      });
      CHECK(std::accumulate(seen.begin(), seen.end(), 0) == static_cast<int>(count));
      for (int c : seen) CHECK(c == 1);
    }
  }
}

TEST_CASE("fraction labels reduce", "[core]") {
  CHECK(fraction_label(0, 4) == "0");
  CHECK(fraction_label(4, 4) == "1");
  CHECK(fraction_label(1, 2) == "1/2");
  CHECK(fraction_label(2, 4) == "1/2");
  CHECK(fraction_label(3, 4) == "3/4");
}
