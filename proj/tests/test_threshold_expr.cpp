#include <doctest.h>

#include <stdexcept>

#include "scp/solver.hpp"
#include "scp/threshold_expr.hpp"

using scp::compile_threshold_expr;

TEST_CASE("constants and the variable") {
  CHECK(compile_threshold_expr("64")(1000) == 64);
  CHECK(compile_threshold_expr("n")(1000) == 1000);
  CHECK(compile_threshold_expr(" n / 4 ")(1000) == 250);
}

TEST_CASE("arithmetic and precedence") {
  CHECK(compile_threshold_expr("2+3*4")(1000) == 14);
  CHECK(compile_threshold_expr("(2+3)*4")(1000) == 20);
  CHECK(compile_threshold_expr("n-n/2")(10) == 5);
}

TEST_CASE("functions") {
  CHECK(compile_threshold_expr("log2(n)")(1024) == 10);
  CHECK(compile_threshold_expr("sqrt(n)")(10000) == 100);
  CHECK(compile_threshold_expr("floor(n/3)")(10) == 3);
  CHECK(compile_threshold_expr("ceil(n/3)")(10) == 4);
  CHECK(compile_threshold_expr("min(n, 7)")(100) == 7);
  CHECK(compile_threshold_expr("max(n, 7)")(100) == 100);
}

TEST_CASE("the default policy is expressible") {
  const auto f = compile_threshold_expr("n/max(1,floor(log2(n)))");
  for (std::size_t n : {1u, 2u, 7u, 64u, 1024u, 65536u})
    CHECK(f(n) == scp::default_large_threshold(n));
}

TEST_CASE("results are clamped to [0, n]") {
  CHECK(compile_threshold_expr("n*n")(10) == 10);
  CHECK(compile_threshold_expr("0-5")(10) == 0);
}

TEST_CASE("syntax errors are rejected") {
  for (const char* bad : {"", "n+", "(n", "foo(n)", "min(n)", "2 3", "n n"})
    CHECK_THROWS_AS(compile_threshold_expr(bad), std::invalid_argument);
}
