#include "dirac_step/spinor.hpp"

#include <cmath>

namespace dirac_step {

double density(const Spinor& s) {
  return std::norm(s.upper) + std::norm(s.lower);
}

double current(const Spinor& s) {
  return 2.0 * std::real(std::conj(s.upper) * s.lower);
}

double norm(const Spinor& s) { return std::sqrt(density(s)); }

Matrix2 operator*(const Matrix2& lhs, const Matrix2& rhs) {
  Matrix2 out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.m[i][j] = lhs.m[i][0] * rhs.m[0][j] + lhs.m[i][1] * rhs.m[1][j];
    }
  }
  return out;
}

Matrix2 operator+(const Matrix2& lhs, const Matrix2& rhs) {
  Matrix2 out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.m[i][j] = lhs.m[i][j] + rhs.m[i][j];
  }
  return out;
}

Spinor operator*(const Matrix2& lhs, const Spinor& rhs) {
  return {lhs.m[0][0] * rhs.upper + lhs.m[0][1] * rhs.lower,
          lhs.m[1][0] * rhs.upper + lhs.m[1][1] * rhs.lower};
}

namespace dirac_matrices {
Matrix2 identity() { return Matrix2{{{{1.0, 0.0}, {0.0, 1.0}}}}; }
Matrix2 alpha() { return Matrix2{{{{0.0, 1.0}, {1.0, 0.0}}}}; }
Matrix2 beta() { return Matrix2{{{{1.0, 0.0}, {0.0, -1.0}}}}; }
}  // namespace dirac_matrices

PlaneWave::PlaneWave(Spinor amplitude, complex wave_number, Side side)
    : amplitude_(amplitude), wave_number_(wave_number), side_(side) {
  const double growth = side == Side::Right ? -wave_number.imag()
                                            : wave_number.imag();
  if (growth > 0.0) {
    throw DomainError("plane wave grows away from the step on its side");
  }
}

Spinor PlaneWave::at(double x) const {
  return std::exp(complex(0.0, 1.0) * wave_number_ * x) * amplitude_;
}

PlaneWave PlaneWave::scaled(complex factor) const {
  return PlaneWave(factor * amplitude_, wave_number_, side_);
}

Spinor apply_hamiltonian(const PlaneWave& wave, double potential,
                         double mass_energy, double hbar_c) {
  using namespace dirac_matrices;
  const Spinor& amp = wave.amplitude();
  const Spinor kinetic = alpha() * amp;
  const Spinor rest = beta() * amp;
  const complex p = hbar_c * wave.wave_number();
  return {p * kinetic.upper + mass_energy * rest.upper + potential * amp.upper,
          p * kinetic.lower + mass_energy * rest.lower + potential * amp.lower};
}

PlaneWave charge_conjugate(const PlaneWave& wave) {
  const Spinor& amp = wave.amplitude();
  const Spinor conjugated{std::conj(amp.upper), std::conj(amp.lower)};
  return PlaneWave(dirac_matrices::alpha() * conjugated,
                   -std::conj(wave.wave_number()), wave.side());
}

}  // namespace dirac_step
