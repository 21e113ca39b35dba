#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"

using namespace cc;
using namespace cctest;

TEST_CASE("random instances agree with the oracle (plain types)") {
  std::mt19937 rng(20260826);
  GenOptions go;
  for (int i = 0; i < 60; ++i) {
    Problem p = generate_problem(rng, go);
    std::string err = verify_instance(p);
    CAPTURE(i);
    CAPTURE(err);
    CHECK(err.empty());
  }
}

TEST_CASE("random instances agree with the oracle (dependent types)") {
  std::mt19937 rng(424242);
  GenOptions go;
  go.dependent = true;
  for (int i = 0; i < 60; ++i) {
    Problem p = generate_problem(rng, go);
    std::string err = verify_instance(p);
    CAPTURE(i);
    CAPTURE(err);
    CHECK(err.empty());
  }
}

TEST_CASE("theorem-2 style instances: equal functions applied to equal args") {
  std::mt19937 rng(777);
  auto pick = [&](int n) {
    return std::uniform_int_distribution<int>(0, n - 1)(rng);
  };
  for (int i = 0; i < 25; ++i) {
    int n = 1 + pick(3);
    std::ostringstream in;
    in << "var N : Type\n";
    std::string fnty = "N";
    for (int k = 0; k < n; ++k) fnty = "N -> " + fnty;
    in << "var f : " << fnty << "\nvar g : " << fnty << "\n";
    for (int k = 0; k < n; ++k)
      in << "var a" << k << " : N\nvar b" << k << " : N\n";
    in << "hyp ef : f == g\n";
    for (int k = 0; k < n; ++k)
      in << "hyp e" << k << " : a" << k << " == b" << k << "\n";
    in << "goal f";
    for (int k = 0; k < n; ++k) in << " a" << k;
    in << " == g";
    for (int k = 0; k < n; ++k) in << " b" << k;
    in << "\n";
    DriverOptions opts;
    DriverResult res = run_text(in.str(), opts);
    CAPTURE(in.str());
    CAPTURE(res.report);
    CHECK(res.status == DriverStatus::Proved);
  }
}
