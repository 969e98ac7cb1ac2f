// Copyright 2026 The tomoportrait Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace tomo {

using Complex = std::complex<double>;

/// Dense complex square matrix on n qubits (dim = 2^n, n >= 1).
///
/// Storage is row-major. Basis index bits encode qubit outcomes with qubit 0
/// (qubit "A") as the most significant bit, and bit value 0 meaning spin
/// projection +1/2.
class Operator {
   public:
    Operator() = default;
    /// Zero operator. Throws InputError unless dim is a power of two >= 2.
    explicit Operator(std::size_t dim);
    Operator(std::size_t dim, std::vector<Complex> row_major);
    Operator(std::initializer_list<std::initializer_list<Complex>> rows);

    static Operator identity(std::size_t dim);
    static Operator diagonal(std::span<const Complex> diag);

    std::size_t dim() const { return dim_; }
    std::size_t num_qubits() const { return num_qubits_; }

    Complex &operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const Complex &operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

    std::span<const Complex> data() const { return data_; }

    Operator adjoint() const;
    Operator transpose() const;
    Complex trace() const;

    Operator &operator+=(const Operator &other);
    Operator &operator-=(const Operator &other);
    Operator &operator*=(Complex scale);

    friend Operator operator+(Operator a, const Operator &b) { return a += b; }
    friend Operator operator-(Operator a, const Operator &b) { return a -= b; }
    friend Operator operator*(Operator a, Complex s) { return a *= s; }
    friend Operator operator*(Complex s, Operator a) { return a *= s; }
    /// Matrix product.
    friend Operator operator*(const Operator &a, const Operator &b);

    bool operator==(const Operator &other) const = default;

   private:
    std::size_t dim_ = 0;
    std::size_t num_qubits_ = 0;
    std::vector<Complex> data_;
};

/// Largest entrywise |a_ij - b_ij|. Throws InputError on dimension mismatch.
double max_abs_diff(const Operator &a, const Operator &b);

/// Largest entrywise |h_ij - conj(h_ji)|.
double hermiticity_defect(const Operator &h);

Operator pauli_x();
Operator pauli_y();
Operator pauli_z();

/// Kronecker product; `a` occupies the most significant qubits.
Operator tensor(const Operator &a, const Operator &b);
Operator tensor(std::span<const Operator> factors);

/// Traces out every qubit not listed in `keep`. Kept qubits retain their
/// relative order.
Operator partial_trace(const Operator &rho, std::span<const std::size_t> keep);

/// Transposes the row/column bits belonging to `subset` only.
Operator partial_transpose(const Operator &rho, std::span<const std::size_t> subset);

/// All eigenvalues of a Hermitian operator, ascending.
///
/// Cyclic Jacobi on the real symmetric embedding [[Re, -Im], [Im, Re]], whose
/// spectrum is that of `h` with every eigenvalue doubled. Throws InputError if
/// `h` is not Hermitian within 1e-10 and NumericalError if the sweeps fail to
/// converge.
std::vector<double> hermitian_eigenvalues(const Operator &h);

/// Unit vector in R^3: a spin-projection measurement axis.
class Direction {
   public:
    /// +z.
    Direction() = default;
    /// Throws InputError unless x^2 + y^2 + z^2 = 1 within kUnitTolerance.
    Direction(double x, double y, double z);

    /// Accepts a vector whose norm is within `tolerance` of 1, rescaling it
    /// unless it already meets kUnitTolerance (so valid directions pass
    /// through bit-exact). Throws InputError otherwise.
    static Direction normalized(double x, double y, double z, double tolerance);
    /// (sin(theta)cos(phi), sin(theta)sin(phi), cos(theta)) for any real angles.
    static Direction from_spherical(double theta, double phi);

    static Direction x_axis() { return {1, 0, 0}; }
    static Direction y_axis() { return {0, 1, 0}; }
    static Direction z_axis() { return {0, 0, 1}; }

    double x() const { return v_[0]; }
    double y() const { return v_[1]; }
    double z() const { return v_[2]; }
    double operator[](std::size_t i) const { return v_[i]; }
    const std::array<double, 3> &components() const { return v_; }

    Direction operator-() const;
    bool operator==(const Direction &) const = default;

    static constexpr double kUnitTolerance = 1e-12;

   private:
    struct Unchecked {};
    Direction(Unchecked, double x, double y, double z) : v_{x, y, z} {}

    std::array<double, 3> v_{0, 0, 1};
};

/// theta in [0, pi], phi and psi in [0, 2 pi).
struct EulerAngles {
    double theta = 0;
    double phi = 0;
    double psi = 0;
};

/// Angles of the axis `n` with psi = 0.
EulerAngles euler_angles(const Direction &n);
Direction direction(const EulerAngles &angles);

/// u = exp(-i phi sz/2) exp(-i theta sy/2) exp(-i psi sz/2).
Operator rotation_from_euler(const EulerAngles &angles);

/// The SU(2) element with u sz u^dagger = n . sigma (psi fixed to 0).
Operator rotation_from_direction(const Direction &n);

/// n_x sx + n_y sy + n_z sz.
Operator spin_observable(const Direction &n);

}  // namespace tomo
