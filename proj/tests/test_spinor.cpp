#include <gtest/gtest.h>

#include "dirac_step/spinor.hpp"

using namespace dirac_step;
using namespace std::complex_literals;

TEST(Spinor, DensityAndCurrent) {
  const Spinor s{1.0 + 1.0i, 2.0};
  EXPECT_DOUBLE_EQ(density(s), 6.0);
  EXPECT_DOUBLE_EQ(current(s), 4.0);  // 2 Re(conj(phi) chi)
}

TEST(Spinor, DiracMatricesAnticommute) {
  using namespace dirac_matrices;
  const Matrix2 ab = alpha() * beta() + beta() * alpha();
  EXPECT_EQ(ab, (Matrix2{{{{0.0, 0.0}, {0.0, 0.0}}}}));
  EXPECT_EQ(alpha() * alpha(), identity());
  EXPECT_EQ(beta() * beta(), identity());
}

TEST(PlaneWave, RejectsGrowingWaves) {
  EXPECT_THROW(PlaneWave({1.0, 0.0}, -1.0i, Side::Right), DomainError);
  EXPECT_THROW(PlaneWave({1.0, 0.0}, 1.0i, Side::Left), DomainError);
  EXPECT_NO_THROW(PlaneWave({1.0, 0.0}, 1.0i, Side::Right));
}

TEST(PlaneWave, Evaluates) {
  const PlaneWave w({1.0, 2.0}, 3.0, Side::Left);
  const Spinor s = w.at(0.5);
  EXPECT_NEAR(std::abs(s.upper - std::exp(1.5i)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.lower - 2.0 * std::exp(1.5i)), 0.0, 1e-15);
  EXPECT_EQ(w.scaled(2.0).amplitude(), (Spinor{2.0, 4.0}));
}

TEST(PlaneWave, HamiltonianOnFreeWave) {
  // [1, a] e^{ikx} with a = k / (E + m) is an eigenvector of k sigma_x + m sigma_z
  const double m = 1.0, e = 2.0, k = std::sqrt(3.0), a = k / (e + m);
  const PlaneWave w({1.0, a}, k, Side::Left);
  const Spinor h = apply_hamiltonian(w, 0.0, m);
  EXPECT_NEAR(std::abs(h.upper - e), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h.lower - e * a), 0.0, 1e-15);
}

TEST(PlaneWave, ChargeConjugateSwapsComponents) {
  const PlaneWave w({1.0, 2.0i}, 3.0, Side::Right);
  const PlaneWave c = charge_conjugate(w);
  EXPECT_EQ(c.amplitude(), (Spinor{-2.0i, 1.0}));
  EXPECT_EQ(c.wave_number(), complex(-3.0));
}
