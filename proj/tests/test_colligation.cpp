#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "colligate/colligation.hpp"
#include "colligate/colligation_io.hpp"
#include "colligate/numerics.hpp"
#include "colligate/realizations.hpp"

#include <cmath>

using namespace colligate;

TEST_CASE("assemble accepts the famous-example blocks on Partition([1,1])") {
  const Colligation v = build_famous_example();
  CHECK(v.input_dim() == 2);
  CHECK(v.output_dim() == 2);
  CHECK(v.full_matrix().rows() == 3);
}

TEST_CASE("assemble rejects mismatched block shapes, naming the block") {
  PartitionStructure p{{1, 2}};
  const Matrix b = Matrix::Zero(1, 3), c = Matrix::Zero(3, 1);
  const Matrix d_bad = Matrix::Zero(2, 2);
  try {
    assemble(p, Complex(0.0), b, c, d_bad);
    FAIL("expected a shape error");
  } catch (const ShapeError& e) {
    CHECK(std::string(e.what()).find("D") != std::string::npos);
  }
}

TEST_CASE("row-pencil dimension bookkeeping (s=1, r=2, dim_h=1)") {
  MatrixBallStructure mb{QPencil::row(2), 1};
  CHECK(input_dim(StateStructure(mb)) == 1);
  CHECK(output_dim(StateStructure(mb)) == 2);
  const Colligation v = assemble(mb, Complex(0.0), Matrix::Ones(1, 1), Matrix::Zero(2, 1),
                                 Matrix::Zero(2, 1));
  CHECK(v.full_matrix().rows() == 3);
  CHECK(v.full_matrix().cols() == 2);
}

TEST_CASE("validate: famous example is unitary to near machine precision") {
  const ValidationReport rep = validate(build_famous_example());
  CHECK(rep.is_unitary);
  CHECK(rep.isometry_defect <= 1e-14);
  CHECK(rep.coisometry_defect <= 1e-14);
}

TEST_CASE("validate: ball coordinate is an isometry but not a coisometry") {
  const ValidationReport rep = validate(build_ball_coordinate(1, 2));
  CHECK(rep.is_isometry);
  CHECK_FALSE(rep.is_coisometry);
  CHECK_FALSE(rep.is_unitary);
}

TEST_CASE("validate: the identity colligation is unitary with defect zero") {
  PartitionStructure p{{2}};
  const Colligation v = assemble(p, Complex(1.0), Matrix::Zero(1, 2), Matrix::Zero(2, 1),
                                 Matrix::Identity(2, 2));
  const ValidationReport rep = validate(v);
  CHECK(rep.is_unitary);
  CHECK(rep.isometry_defect == doctest::Approx(0.0));
}

TEST_CASE("corner contraction: D of a unitary colligation has norm <= 1") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Colligation v = build_random(PartitionStructure{{2, 3}}, seed);
    const ValidationReport rep = validate(v);
    CHECK(rep.is_unitary);
    CHECK(rep.isometry_defect <= 1e-12);
    CHECK(rep.d_norm <= 1.0 + 1e-12);
  }
}

TEST_CASE("pencil validation rejects dependent coefficients") {
  QPencil q;
  q.s = 2;
  q.r = 2;
  q.coeffs = {Matrix::Identity(2, 2), Matrix::Identity(2, 2)};
  CHECK_THROWS_AS(q.validate(), ShapeError);
}

TEST_CASE("json round-trip is bitwise stable") {
  const Colligation v = build_famous_example();
  const std::string text = save(v);
  const Colligation w = load(text);
  CHECK(w.A == v.A);
  CHECK((w.B - v.B).norm() == 0.0);
  CHECK((w.C - v.C).norm() == 0.0);
  CHECK((w.D - v.D).norm() == 0.0);
  CHECK(save(w) == text);
}

TEST_CASE("json round-trip preserves random isometric ball colligations") {
  const Colligation v = build_random(MatrixBallStructure{QPencil::row(2), 2}, 99);
  const Colligation w = load(save(v));
  CHECK((w.full_matrix() - v.full_matrix()).norm() == 0.0);
  CHECK(save(w) == save(v));
}

TEST_CASE("load rejects wrong-length rows with a path") {
  const std::string bad = R"({
    "name": "broken",
    "structure": {"kind": "partition", "dims": [1, 1]},
    "A": [[[0.0, 0.0]]],
    "B": [[[0.0, 0.0]]],
    "C": [[[0.0, 0.0]], [[0.0, 0.0]]],
    "D": [[[0.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]]
  })";
  try {
    load(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("B") != std::string::npos);
  }
}

TEST_CASE("load rejects non-finite entries") {
  const std::string bad = R"({
    "structure": {"kind": "partition", "dims": [1]},
    "A": [[[0.0, 0.0]]],
    "B": [[[1e999, 0.0]]],
    "C": [[[0.0, 0.0]]],
    "D": [[[0.0, 0.0]]]
  })";
  CHECK_THROWS_AS(load(bad), ParseError);
}

TEST_CASE("matrix_ball schema arithmetic: s=1, r=2, dim_h=3") {
  const std::string text = R"({
    "name": "wide",
    "structure": {"kind": "matrix_ball", "s": 1, "r": 2, "dim_h": 3,
      "q": [[[[1.0,0.0],[0.0,0.0]]], [[[0.0,0.0],[1.0,0.0]]]]},
    "A": [[[0.0, 0.0]]],
    "B": [[[0.0,0.0],[0.0,0.0],[0.0,0.0]]],
    "C": [[[0.0,0.0]],[[0.0,0.0]],[[0.0,0.0]],[[0.0,0.0]],[[0.0,0.0]],[[0.0,0.0]]],
    "D": [[[0.0,0.0],[0.0,0.0],[0.0,0.0]],[[0.0,0.0],[0.0,0.0],[0.0,0.0]],
          [[0.0,0.0],[0.0,0.0],[0.0,0.0]],[[0.0,0.0],[0.0,0.0],[0.0,0.0]],
          [[0.0,0.0],[0.0,0.0],[0.0,0.0]],[[0.0,0.0],[0.0,0.0],[0.0,0.0]]]
  })";
  const Colligation v = load(text);
  CHECK(v.input_dim() == 3);
  CHECK(v.output_dim() == 6);
}

TEST_CASE("to_matrix_ball requires equal block sizes") {
  const Colligation famous = build_famous_example();
  const Colligation ball = to_matrix_ball(famous);
  CHECK_FALSE(ball.is_partition());
  CHECK(ball.matrix_ball().pencil.s == 2);
  CHECK(ball.matrix_ball().dim_h == 1);

  const Colligation uneven = build_random(PartitionStructure{{1, 2}}, 3);
  CHECK_THROWS_AS(to_matrix_ball(uneven), ShapeError);
}

TEST_CASE("validate(assemble(random unitary blocks)) reports unitary") {
  for (std::uint64_t seed : {21, 22, 23}) {
    const Matrix u = random_unitary(5, seed);
    const Colligation v =
        assemble(PartitionStructure{{2, 2}}, u(0, 0), u.block(0, 1, 1, 4), u.block(1, 0, 4, 1),
                 u.block(1, 1, 4, 4));
    CHECK(validate(v).is_unitary);
  }
}
