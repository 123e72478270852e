#include <gtest/gtest.h>

#include "hermlie/instances.hpp"
#include "hermlie/notation.hpp"
#include "hermlie/random.hpp"
#include "hermlie/structure.hpp"
#include "support.hpp"

using namespace hermlie;

namespace {

std::string validation_error(const Matrix<Rational>& g, const Matrix<Rational>& J) {
  try {
    AlmostHermitianStructure<Rational>::validate(g, J);
  } catch (const StructureError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Structure, StandardPairing) {
  const auto J = standard_complex_structure<Rational>(4);
  // J e1 = e2, J e2 = -e1 (1-based)
  EXPECT_EQ(J.column(0), (Vector<Rational>{0, 1, 0, 0}));
  EXPECT_EQ(J.column(1), (Vector<Rational>{-1, 0, 0, 0}));
  EXPECT_EQ(J * J, Matrix<Rational>::identity(4) * Rational(-1));
}

TEST(Structure, ValidationMessages) {
  const auto I = Matrix<Rational>::identity(4);
  const auto J = standard_complex_structure<Rational>(4);
  EXPECT_EQ(validation_error(I, J), "");
  auto nonsym = I;
  nonsym(0, 1) = 1;
  EXPECT_EQ(validation_error(nonsym, J), "metric not symmetric");
  auto indefinite = I;
  indefinite(1, 1) = -1;
  EXPECT_EQ(validation_error(indefinite, J), "metric not positive definite");
  EXPECT_NE(validation_error(I, I).find("J^2 != -Id at entry"), std::string::npos);
  auto stretched = I;
  stretched(0, 0) = 2;  // J is not an isometry
  EXPECT_NE(validation_error(stretched, J).find("not compatible"), std::string::npos);
  EXPECT_EQ(validation_error(Matrix<Rational>::identity(3), Matrix<Rational>::identity(3)), "odd dimension");
}

TEST(Structure, RandomStructuresAreCompatible) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto S = random_compatible_structure(6, s);
    const auto& g = S.g();
    const auto& J = S.J();
    EXPECT_EQ(J * J, Matrix<Rational>::identity(6) * Rational(-1));
    EXPECT_EQ(J.transpose() * g * J, g);
    EXPECT_TRUE(is_positive_definite(g));
    // omega is antisymmetric
    EXPECT_EQ(S.omega().transpose(), S.omega() * Rational(-1));
  }
  // generic: not always the standard J
  int standard = 0;
  for (std::uint64_t s = 0; s < 30; ++s) standard += random_compatible_structure(6, s).J() == standard_complex_structure<Rational>(6);
  EXPECT_LT(standard, 5);
}

TEST(Structure, IntegrabilityAgreesWithSubalgebraCriterion) {
  // J integrable iff T^{1,0} is a subalgebra: with A = [X,Y] - [JX,JY] and
  // B = -[JX,Y] - [X,JY], [X - iJX, Y - iJY] = A + iB lies in T^{1,0} iff JA = -B
  auto subalgebra = [](const LieAlgebra<Rational>& L, const AlmostHermitianStructure<Rational>& S) {
    const int n = L.dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto x = basis_vector<Rational>(n, i), y = basis_vector<Rational>(n, j);
        const auto jx = S.apply_J(x), jy = S.apply_J(y);
        const auto A = sub(bracket(L, x, y), bracket(L, jx, jy));
        const auto B = scale(add(bracket(L, jx, y), bracket(L, x, jy)), Rational(-1));
        if (!is_zero_vector(add(S.apply_J(A), B))) return false;
      }
    return true;
  };
  int integrable = 0, total = 0;
  for (const auto& inst : curated_instances()) {
    EXPECT_EQ(is_integrable(inst.algebra, inst.structure), subalgebra(inst.algebra, inst.structure)) << inst.name;
    integrable += is_integrable(inst.algebra, inst.structure);
    ++total;
  }
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto inst = random_two_step_instance(4, s);
    EXPECT_EQ(is_integrable(inst.algebra, inst.structure), subalgebra(inst.algebra, inst.structure));
  }
  EXPECT_GT(integrable, 0);
  EXPECT_LT(integrable, total);
  EXPECT_TRUE(is_integrable(curated_instance("complex heisenberg").algebra, curated_instance("complex heisenberg").structure));
  EXPECT_FALSE(is_integrable(curated_instance("kodaira-thurston almost-kahler").algebra,
                             curated_instance("kodaira-thurston almost-kahler").structure));
}

TEST(Structure, UnitaryFrame) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto S = random_compatible_structure(6, s);
    const auto fr = unitary_frame(S);
    ASSERT_EQ(fr.size(), 3);
    EXPECT_EQ(frame_defect(S, fr), 0);
    for (int r = 0; r < 3; ++r) {
      EXPECT_EQ(S.metric(fr.e[r], fr.e[r]), fr.sq_norm[r]);
      EXPECT_EQ(fr.je[r], S.apply_J(fr.e[r]));
      for (int q = 0; q < r; ++q) {
        EXPECT_EQ(S.metric(fr.e[r], fr.e[q]), 0);
        EXPECT_EQ(S.metric(fr.e[r], fr.je[q]), 0);
      }
    }
  }
}
