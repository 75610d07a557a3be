// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "paulic/errors.hpp"
#include "paulic/pauli.hpp"

using namespace paulic;

TEST_CASE("parse single string") {
  Kernel k = parse_kernel("XXYZI\n");
  REQUIRE(k.n_qubits == 5);
  REQUIRE(k.blocks.size() == 1);
  REQUIRE(k.blocks[0].strings.size() == 1);
  CHECK(k.blocks[0].strings[0].word() == "XXYZI");
  CHECK(k.blocks[0].strings[0].coefficient == 1.0);
  CHECK(k.blocks[0].strings[0].angle_ref == 0);
}

TEST_CASE("parse two-string block and block separation") {
  Kernel k = parse_kernel("YZZZY\nXZZZX\n\nZZIII\n");
  REQUIRE(k.blocks.size() == 2);
  CHECK(k.blocks[0].strings.size() == 2);
  CHECK(k.blocks[1].strings.size() == 1);
  CHECK(k.blocks[0].strings[1].angle_ref == 0);
  CHECK(k.blocks[1].strings[0].angle_ref == 1);
}

TEST_CASE("parse weights and comments") {
  Kernel k = parse_kernel("# header comment\nXX ; w=0.25\nYY ; w=-1.5 # tail\n");
  REQUIRE(k.blocks.size() == 1);
  CHECK(k.blocks[0].strings[0].coefficient == doctest::Approx(0.25));
  CHECK(k.blocks[0].strings[1].coefficient == doctest::Approx(-1.5));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_kernel("XX\nXQ\n"),
                       doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_WITH_AS(parse_kernel("XX\nXXX\n"),
                       doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_AS(parse_kernel("# only a comment\n"), ParseError);
  CHECK_THROWS_AS(parse_kernel("XX ; w=abc\n"), ParseError);
}

TEST_CASE("emit/parse round-trip") {
  Kernel k = parse_kernel("XZZZX ; w=0.5\nYZZZY\n\nIZYII\n\nXXXXX ; w=-2\n");
  build_ir(k);
  Kernel again = parse_kernel(emit_kernel(k));
  build_ir(again);
  CHECK(k == again);
}

TEST_CASE("build_ir splits roots from the shared-Z leaf run") {
  Kernel k = parse_kernel("YZZZY\nXZZZX\n");
  build_ir(k);
  CHECK(k.blocks[0].leaf_set == std::set<int>{1, 2, 3});
  CHECK(k.blocks[0].root_set == std::set<int>{0, 4});
  CHECK(k.blocks[0].qubit_order == std::vector<int>{0, 4, 1, 2, 3});
  CHECK(active_length(k.blocks[0]) == 5);
  CHECK(leaf_op(k.blocks[0], 2) == PauliOp::Z);
}

TEST_CASE("build_ir three strings with common tail") {
  Kernel k = parse_kernel("XYZZZ\nYXZZZ\nXXZZZ\n");
  build_ir(k);
  CHECK(k.blocks[0].leaf_set == std::set<int>{2, 3, 4});
  CHECK(k.blocks[0].root_set == std::set<int>{0, 1});
  CHECK(active_length(k.blocks[0]) == 5);
}

TEST_CASE("build_ir identical strings leave no roots") {
  Kernel k = parse_kernel("ZZIII\nZZIII\n");
  build_ir(k);
  CHECK(k.blocks[0].leaf_set == std::set<int>{0, 1});
  CHECK(k.blocks[0].root_set.empty());
  CHECK(active_length(k.blocks[0]) == 2);
}

TEST_CASE("build_ir single-string block has empty leaf set") {
  Kernel k = parse_kernel("XZZZX\n");
  build_ir(k);
  CHECK(k.blocks[0].leaf_set.empty());
  CHECK(k.blocks[0].root_set == std::set<int>{0, 1, 2, 3, 4});
}

TEST_CASE("build_ir is idempotent and partitions the support") {
  Kernel k = parse_kernel("XYZIZ\nYYZIZ\nXXZII\n");
  build_ir(k);
  Kernel twice = k;
  build_ir(twice);
  CHECK(twice.blocks[0].leaf_set == k.blocks[0].leaf_set);
  CHECK(twice.blocks[0].root_set == k.blocks[0].root_set);
  for (int q : k.blocks[0].leaf_set) CHECK(!k.blocks[0].root_set.count(q));
  // Qubit 3 is all-I and belongs to neither set.
  CHECK(!k.blocks[0].leaf_set.count(3));
  CHECK(!k.blocks[0].root_set.count(3));
}
