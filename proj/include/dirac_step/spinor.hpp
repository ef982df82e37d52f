#pragma once

#include <array>

#include "dirac_step/setup.hpp"

namespace dirac_step {

//! Two-component Dirac spinor [phi, chi] (upper/large, lower/small).
struct Spinor {
  complex upper;
  complex lower;

  Spinor& operator+=(const Spinor& other) {
    upper += other.upper;
    lower += other.lower;
    return *this;
  }
  friend Spinor operator+(Spinor lhs, const Spinor& rhs) { return lhs += rhs; }
  friend Spinor operator-(const Spinor& lhs, const Spinor& rhs) {
    return {lhs.upper - rhs.upper, lhs.lower - rhs.lower};
  }
  friend Spinor operator*(complex s, const Spinor& v) {
    return {s * v.upper, s * v.lower};
  }
  friend bool operator==(const Spinor&, const Spinor&) = default;
};

//! psi^dagger psi
double density(const Spinor& s);
//! c psi^dagger sigma_x psi = 2 Re(phi^* chi), c = 1
double current(const Spinor& s);
//! Euclidean norm, sqrt(density)
double norm(const Spinor& s);

//---------------------------------------------------------------------------//
// Dirac representation: alpha = sigma_x, beta = sigma_z.
//---------------------------------------------------------------------------//
struct Matrix2 {
  std::array<std::array<complex, 2>, 2> m;

  friend Matrix2 operator*(const Matrix2& lhs, const Matrix2& rhs);
  friend Matrix2 operator+(const Matrix2& lhs, const Matrix2& rhs);
  friend Spinor operator*(const Matrix2& lhs, const Spinor& rhs);
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

namespace dirac_matrices {
Matrix2 identity();
Matrix2 alpha();  // sigma_x
Matrix2 beta();   // sigma_z
}  // namespace dirac_matrices

enum class Side { Left, Right };

/*!
 * amplitude * exp(i q x), restricted to one side of the step.
 *
 * A complex q carries evanescent decay. Waves that grow away from the origin
 * on their own side (Im q < 0 on the right, Im q > 0 on the left) are rejected.
 */
class PlaneWave {
 public:
  PlaneWave(Spinor amplitude, complex wave_number, Side side);

  const Spinor& amplitude() const { return amplitude_; }
  complex wave_number() const { return wave_number_; }
  Side side() const { return side_; }

  Spinor at(double x) const;
  PlaneWave scaled(complex factor) const;

 private:
  Spinor amplitude_;
  complex wave_number_;
  Side side_;
};

/*!
 * Amplitude of H psi for psi = amplitude e^{iqx} in a constant potential:
 * (hbar_c q sigma_x + mc^2 sigma_z + V) amplitude. Exact, since d/dx -> iq.
 */
Spinor apply_hamiltonian(const PlaneWave& wave, double potential,
                         double mass_energy, double hbar_c = 1.0);

//! S_C psi^* with S_C = sigma_x (phase fixed to +1); q -> -q^*.
PlaneWave charge_conjugate(const PlaneWave& wave);

}  // namespace dirac_step
