#include "trilie/examples.hpp"

#include "trilie/errors.hpp"

namespace trilie::examples {

TriLieAlgebra dim4_algebra() {
  TriLieAlgebra a("g4", 4);
  a.set_basis_bracket(1, 2, 3, basis_vec(4, 0)); // [e2,e3,e4] = e1
  return a;
}

Action dim4_action() { return adjoint_action(dim4_algebra()); }

LinearMap dim4_crossed_map() {
  LinearMap h = LinearMap::zero("H", 4, 4);
  h.mat(1, 1) = 1;
  h.mat(2, 2) = 1;
  h.mat(3, 3) = -1;
  return h;
}

LinearMap dim4_family_map(const Matrix& block3, const Vec& top_row_free) {
  if (block3.rows() != 3 || block3.cols() != 3 || top_row_free.size() != 3) {
    throw DimensionMismatch("family parameters are a 3x3 block and 3 values");
  }
  LinearMap h = LinearMap::zero("H_family", 4, 4);
  for (std::size_t r = 0; r < 3; ++r) {
    h.mat(0, 1 + r) = top_row_free[r];
    for (std::size_t c = 0; c < 3; ++c) h.mat(1 + r, 1 + c) = block3(r, c);
  }
  // The variety constraint pins the remaining corner entry.
  const auto b = [&](std::size_t r, std::size_t c) { return block3(r, c); };
  h.mat(0, 0) = b(0, 0) + b(1, 1) + b(2, 2) + b(0, 1) * b(1, 2) * b(2, 0) +
                b(0, 2) * b(1, 0) * b(2, 1) + b(0, 0) * b(1, 1) * b(2, 2) -
                b(0, 2) * b(1, 1) * b(2, 0) - b(0, 0) * b(1, 2) * b(2, 1) -
                b(0, 1) * b(1, 0) * b(2, 2);
  return h;
}

TriLieAlgebra dim4_fi_violation() {
  TriLieAlgebra a("g4_broken", 4);
  a.set_basis_bracket(1, 2, 3, basis_vec(4, 0)); // [e2,e3,e4] = e1
  a.set_basis_bracket(0, 1, 2, basis_vec(4, 1)); // [e1,e2,e3] = e2
  return a;
}

} // namespace trilie::examples
