#include "colligate/realizations.hpp"

#include "colligate/numerics.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <utility>

namespace colligate {

Colligation build_famous_example() {
  const double s = 1.0 / std::sqrt(2.0);
  Matrix b(1, 2), c(2, 1), d(2, 2);
  b << -s, -s;
  c << s, s;
  d << 0.5, -0.5, -0.5, 0.5;
  return assemble(PartitionStructure{{1, 1}}, Complex(0.0), std::move(b), std::move(c),
                  std::move(d), "famous-example");
}

Colligation build_f_alpha_beta(Complex alpha, Complex beta) {
  if (std::abs(std::abs(alpha) + std::abs(beta) - 1.0) > 1e-12)
    throw DomainError("f_alpha_beta: requires |alpha| + |beta| = 1");
  if (alpha == Complex(0.0) || beta == Complex(0.0))
    throw DomainError("f_alpha_beta: requires alpha != 0 and beta != 0");

  // sqrt(alpha) := conj(sqrt(conj(alpha))), principal branch inside.
  const Complex sa_bar = std::sqrt(std::conj(alpha));
  const Complex sb_bar = std::sqrt(std::conj(beta));
  const Complex sa = std::conj(sa_bar);
  const Complex sb = std::conj(sb_bar);

  Matrix b(1, 2), c(2, 1), d(2, 2);
  b << sa, sb;
  c << -sa, -sb;
  d << std::conj(beta), -sa_bar * sb_bar, -sa_bar * sb_bar, std::conj(alpha);

  std::ostringstream name;
  name << "f-alpha-beta(" << alpha.real() << "+" << alpha.imag() << "i," << beta.real() << "+"
       << beta.imag() << "i)";
  return assemble(PartitionStructure{{1, 1}}, Complex(0.0), std::move(b), std::move(c),
                  std::move(d), name.str());
}

Colligation build_ball_coordinate(Index j, Index d) {
  if (d < 1) throw ShapeError("ball_coordinate: d must be >= 1");
  if (j < 1 || j > d) throw ShapeError("ball_coordinate: index out of range");
  Matrix b = Matrix::Ones(1, 1);
  Matrix c = Matrix::Zero(d, 1);
  c(j - 1, 0) = 1.0;
  Matrix dd = Matrix::Zero(d, 1);
  return assemble(MatrixBallStructure{QPencil::row(d), 1}, Complex(0.0), std::move(b),
                  std::move(c), std::move(dd), "ball-coordinate-" + std::to_string(j));
}

Colligation build_random(StateStructure structure, std::uint64_t seed) {
  const Index in = 1 + input_dim(structure);
  const Index out = 1 + output_dim(structure);
  if (out < in)
    throw ShapeError("build_random: structure admits no isometry (output smaller than input)");

  const Matrix u = random_unitary(out, seed);
  const Matrix v = u.leftCols(in);
  std::string name = "random-" + std::to_string(seed);
  return assemble(std::move(structure), v(0, 0), v.block(0, 1, 1, in - 1),
                  v.block(1, 0, out - 1, 1), v.block(1, 1, out - 1, in - 1), std::move(name));
}

}  // namespace colligate
