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

#include "tomoportrait/linalg.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "tomoportrait/errors.h"

namespace tomo {

namespace {

std::size_t checked_num_qubits(std::size_t dim) {
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw InputError("operator dimension must be a power of two >= 2, got " + std::to_string(dim));
    }
    return static_cast<std::size_t>(std::countr_zero(dim));
}

void require_same_dim(const Operator &a, const Operator &b) {
    if (a.dim() != b.dim()) {
        throw InputError(
            "operator dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }
}

/// Bitmask over basis indices of an n-qubit register selecting `qubits`.
std::size_t qubit_mask(std::span<const std::size_t> qubits, std::size_t n, bool allow_empty) {
    if (qubits.empty() && !allow_empty) {
        throw InputError("qubit subset must be nonempty");
    }
    std::size_t mask = 0;
    for (std::size_t q : qubits) {
        if (q >= n) {
            throw InputError("qubit index " + std::to_string(q) + " out of range for " + std::to_string(n) + " qubits");
        }
        std::size_t bit = std::size_t{1} << (n - 1 - q);
        if (mask & bit) {
            throw InputError("duplicate qubit index " + std::to_string(q));
        }
        mask |= bit;
    }
    return mask;
}

/// Spreads the bits of `packed` (first listed qubit most significant) onto the
/// register positions of `qubits`.
std::size_t scatter_bits(std::size_t packed, std::span<const std::size_t> qubits, std::size_t n) {
    std::size_t out = 0;
    std::size_t k = qubits.size();
    for (std::size_t i = 0; i < k; ++i) {
        if ((packed >> (k - 1 - i)) & 1) {
            out |= std::size_t{1} << (n - 1 - qubits[i]);
        }
    }
    return out;
}

}  // namespace

Operator::Operator(std::size_t dim) : dim_(dim), num_qubits_(checked_num_qubits(dim)), data_(dim * dim) {
}

Operator::Operator(std::size_t dim, std::vector<Complex> row_major)
    : dim_(dim), num_qubits_(checked_num_qubits(dim)), data_(std::move(row_major)) {
    if (data_.size() != dim * dim) {
        throw InputError(
            "expected " + std::to_string(dim * dim) + " entries, got " + std::to_string(data_.size()));
    }
}

Operator::Operator(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()), num_qubits_(checked_num_qubits(rows.size())) {
    data_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw InputError("operator rows must all have length " + std::to_string(dim_));
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Operator Operator::identity(std::size_t dim) {
    Operator out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        out(i, i) = 1;
    }
    return out;
}

Operator Operator::diagonal(std::span<const Complex> diag) {
    Operator out(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        out(i, i) = diag[i];
    }
    return out;
}

Operator Operator::adjoint() const {
    Operator out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Operator Operator::transpose() const {
    Operator out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

Complex Operator::trace() const {
    Complex t = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

Operator &Operator::operator+=(const Operator &other) {
    require_same_dim(*this, other);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += other.data_[i];
    }
    return *this;
}

Operator &Operator::operator-=(const Operator &other) {
    require_same_dim(*this, other);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= other.data_[i];
    }
    return *this;
}

Operator &Operator::operator*=(Complex scale) {
    for (auto &v : data_) {
        v *= scale;
    }
    return *this;
}

Operator operator*(const Operator &a, const Operator &b) {
    require_same_dim(a, b);
    std::size_t d = a.dim();
    Operator out(d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t k = 0; k < d; ++k) {
            Complex ark = a(r, k);
            if (ark == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < d; ++c) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

double max_abs_diff(const Operator &a, const Operator &b) {
    require_same_dim(a, b);
    double worst = 0;
    auto da = a.data();
    auto db = b.data();
    for (std::size_t i = 0; i < da.size(); ++i) {
        worst = std::max(worst, std::abs(da[i] - db[i]));
    }
    return worst;
}

double hermiticity_defect(const Operator &h) {
    double worst = 0;
    for (std::size_t r = 0; r < h.dim(); ++r) {
        for (std::size_t c = r; c < h.dim(); ++c) {
            worst = std::max(worst, std::abs(h(r, c) - std::conj(h(c, r))));
        }
    }
    return worst;
}

Operator pauli_x() {
    return {{0, 1}, {1, 0}};
}

Operator pauli_y() {
    return {{0, Complex{0, -1}}, {Complex{0, 1}, 0}};
}

Operator pauli_z() {
    return {{1, 0}, {0, -1}};
}

Operator tensor(const Operator &a, const Operator &b) {
    std::size_t da = a.dim();
    std::size_t db = b.dim();
    Operator out(da * db);
    for (std::size_t ar = 0; ar < da; ++ar) {
        for (std::size_t ac = 0; ac < da; ++ac) {
            Complex s = a(ar, ac);
            for (std::size_t br = 0; br < db; ++br) {
                for (std::size_t bc = 0; bc < db; ++bc) {
                    out(ar * db + br, ac * db + bc) = s * b(br, bc);
                }
            }
        }
    }
    return out;
}

Operator tensor(std::span<const Operator> factors) {
    if (factors.empty()) {
        throw InputError("tensor product of zero factors");
    }
    Operator out = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) {
        out = tensor(out, factors[i]);
    }
    return out;
}

Operator partial_trace(const Operator &rho, std::span<const std::size_t> keep) {
    std::size_t n = rho.num_qubits();
    std::size_t keep_mask = qubit_mask(keep, n, false);
    std::vector<std::size_t> traced;
    for (std::size_t q = 0; q < n; ++q) {
        if (!(keep_mask & (std::size_t{1} << (n - 1 - q)))) {
            traced.push_back(q);
        }
    }
    std::size_t kept_dim = std::size_t{1} << keep.size();
    std::size_t traced_dim = std::size_t{1} << traced.size();
    Operator out(kept_dim);
    for (std::size_t r = 0; r < kept_dim; ++r) {
        std::size_t rbits = scatter_bits(r, keep, n);
        for (std::size_t c = 0; c < kept_dim; ++c) {
            std::size_t cbits = scatter_bits(c, keep, n);
            Complex acc = 0;
            for (std::size_t t = 0; t < traced_dim; ++t) {
                std::size_t tbits = scatter_bits(t, traced, n);
                acc += rho(rbits | tbits, cbits | tbits);
            }
            out(r, c) = acc;
        }
    }
    return out;
}

Operator partial_transpose(const Operator &rho, std::span<const std::size_t> subset) {
    std::size_t n = rho.num_qubits();
    std::size_t mask = qubit_mask(subset, n, true);
    std::size_t d = rho.dim();
    Operator out(d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            std::size_t r2 = (r & ~mask) | (c & mask);
            std::size_t c2 = (c & ~mask) | (r & mask);
            out(r2, c2) = rho(r, c);
        }
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const Operator &h) {
    constexpr double kHermitianTolerance = 1e-10;
    constexpr int kMaxSweeps = 100;
    double defect = hermiticity_defect(h);
    if (defect > kHermitianTolerance) {
        throw InputError("operator is not Hermitian (max defect " + std::to_string(defect) + ")");
    }

    std::size_t d = h.dim();
    std::size_t m = 2 * d;
    std::vector<double> a(m * m);
    auto at = [&](std::size_t r, std::size_t c) -> double & { return a[r * m + c]; };
    double frob2 = 0;
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            // Symmetrize on the way in so the embedding is exactly symmetric.
            Complex v = 0.5 * (h(r, c) + std::conj(h(c, r)));
            at(r, c) = v.real();
            at(r + d, c + d) = v.real();
            at(r, c + d) = -v.imag();
            at(r + d, c) = v.imag();
            frob2 += std::norm(v);
        }
    }
    double tolerance = 1e-12 * static_cast<double>(d) * std::max(1.0, std::sqrt(frob2));

    auto off_norm = [&] {
        double s = 0;
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t c = 0; c < m; ++c) {
                if (r != c) {
                    s += at(r, c) * at(r, c);
                }
            }
        }
        return std::sqrt(s);
    };

    bool converged = off_norm() <= tolerance;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                double apq = at(p, q);
                if (apq == 0) {
                    continue;
                }
                double theta = (at(q, q) - at(p, p)) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                for (std::size_t k = 0; k < m; ++k) {
                    double akp = at(k, p);
                    double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < m; ++k) {
                    double apk = at(p, k);
                    double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                at(p, q) = 0;
                at(q, p) = 0;
            }
        }
        converged = off_norm() <= tolerance;
    }
    if (!converged) {
        throw NumericalError("Jacobi eigensolver did not converge in " + std::to_string(kMaxSweeps) + " sweeps");
    }

    std::vector<double> doubled(m);
    for (std::size_t i = 0; i < m; ++i) {
        doubled[i] = at(i, i);
    }
    std::sort(doubled.begin(), doubled.end());
    std::vector<double> out(d);
    for (std::size_t i = 0; i < d; ++i) {
        out[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    }
    return out;
}

Direction::Direction(double x, double y, double z) : v_{x, y, z} {
    double norm2 = x * x + y * y + z * z;
    if (!(std::abs(norm2 - 1) <= kUnitTolerance)) {
        throw InputError(
            "direction (" + std::to_string(x) + ", " + std::to_string(y) + ", " + std::to_string(z) +
            ") is not a unit vector");
    }
}

Direction Direction::normalized(double x, double y, double z, double tolerance) {
    double norm = std::sqrt(x * x + y * y + z * z);
    if (!(std::abs(norm - 1) <= tolerance)) {
        throw InputError(
            "direction (" + std::to_string(x) + ", " + std::to_string(y) + ", " + std::to_string(z) +
            ") has norm " + std::to_string(norm) + ", not 1");
    }
    if (std::abs(x * x + y * y + z * z - 1) <= kUnitTolerance) {
        return Direction(Unchecked{}, x, y, z);
    }
    return Direction(Unchecked{}, x / norm, y / norm, z / norm);
}

Direction Direction::from_spherical(double theta, double phi) {
    double st = std::sin(theta);
    return Direction(Unchecked{}, st * std::cos(phi), st * std::sin(phi), std::cos(theta));
}

Direction Direction::operator-() const {
    return Direction(Unchecked{}, -v_[0], -v_[1], -v_[2]);
}

EulerAngles euler_angles(const Direction &n) {
    double rho = std::hypot(n.x(), n.y());
    EulerAngles out;
    out.theta = std::atan2(rho, n.z());
    out.phi = rho == 0 ? 0.0 : std::atan2(n.y(), n.x());
    if (out.phi < 0) {
        out.phi += 2 * std::numbers::pi;
    }
    return out;
}

Direction direction(const EulerAngles &angles) {
    return Direction::from_spherical(angles.theta, angles.phi);
}

Operator rotation_from_euler(const EulerAngles &angles) {
    double c = std::cos(angles.theta / 2);
    double s = std::sin(angles.theta / 2);
    Complex em = std::polar(1.0, -(angles.phi + angles.psi) / 2);
    Complex ed = std::polar(1.0, (angles.psi - angles.phi) / 2);
    return {
        {c * em, -s * ed},
        {s * std::conj(ed), c * std::conj(em)},
    };
}

Operator rotation_from_direction(const Direction &n) {
    return rotation_from_euler(euler_angles(n));
}

Operator spin_observable(const Direction &n) {
    return {
        {n.z(), Complex{n.x(), -n.y()}},
        {Complex{n.x(), n.y()}, -n.z()},
    };
}

}  // namespace tomo
