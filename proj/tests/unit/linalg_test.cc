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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "test_util.h"
#include "tomoportrait/errors.h"
#include "tomoportrait/states.h"

using namespace tomo;
using tomo::testing::oracle_eigenvalues;

namespace {

Operator random_operator(std::size_t dim, Rng &rng) {
    return tomo::testing::random_ginibre(dim, rng);
}

}  // namespace

TEST(Operator, rejects_non_power_of_two) {
    EXPECT_THROW(Operator(3), InputError);
    EXPECT_THROW(Operator(1), InputError);
    EXPECT_THROW(Operator(4, std::vector<Complex>(15)), InputError);
    EXPECT_EQ(Operator(8).num_qubits(), 3u);
}

TEST(Tensor, identity_and_diagonal) {
    EXPECT_EQ(tensor(Operator::identity(2), Operator::identity(2)), Operator::identity(4));
    Operator zz = tensor(pauli_z(), pauli_z());
    std::vector<Complex> diag{1, -1, -1, 1};
    EXPECT_EQ(zz, Operator::diagonal(diag));
}

TEST(Tensor, associative) {
    Operator left = tensor(tensor(pauli_x(), pauli_y()), pauli_z());
    Operator right = tensor(pauli_x(), tensor(pauli_y(), pauli_z()));
    EXPECT_EQ(left, right);
}

TEST(Tensor, properties_on_random_operators) {
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        Operator a = random_operator(2, rng);
        Operator b = random_operator(4, rng);
        Operator c = random_operator(2, rng);
        EXPECT_LE(std::abs(tensor(a, b).trace() - a.trace() * b.trace()), 1e-12);
        EXPECT_LE(max_abs_diff(tensor(tensor(a, b), c), tensor(a, tensor(b, c))), 1e-12);
        // Bilinearity in the first slot.
        Operator a2 = random_operator(2, rng);
        Complex s{rng.normal(), rng.normal()};
        EXPECT_LE(max_abs_diff(tensor(a + a2 * s, b), tensor(a, b) + tensor(a2, b) * s), 1e-12);
    }
}

TEST(PartialTrace, product_state_factorizes) {
    Rng rng(3);
    DensityMatrix ra = tomo::testing::random_density(1, rng);
    DensityMatrix rb = tomo::testing::random_density(2, rng);
    Operator joint = tensor(ra.op(), rb.op());
    std::size_t keep_a[] = {0};
    std::size_t keep_b[] = {1, 2};
    EXPECT_LE(max_abs_diff(partial_trace(joint, keep_a), ra.op()), 1e-14);
    EXPECT_LE(max_abs_diff(partial_trace(joint, keep_b), rb.op()), 1e-14);
}

TEST(PartialTrace, bell_pair_and_smolin_marginals_are_maximally_mixed) {
    std::size_t keep[] = {0};
    Operator half = Operator::identity(2) * Complex{0.5, 0};
    EXPECT_LE(max_abs_diff(partial_trace(bell_state(BellKind::kPhiPlus).projector(), keep), half), 1e-15);
    EXPECT_LE(max_abs_diff(partial_trace(smolin_pauli().op(), keep), half), 1e-15);

    // Brute-force trace over BCD written out independently.
    Operator rho = smolin_pauli().op();
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            Complex acc = 0;
            for (std::size_t t = 0; t < 8; ++t) {
                acc += rho(r * 8 + t, c * 8 + t);
            }
            EXPECT_LE(std::abs(acc - half(r, c)), 1e-15);
        }
    }
}

TEST(PartialTrace, preserves_trace_and_orders_kept_qubits) {
    Rng rng(5);
    DensityMatrix rho = tomo::testing::random_density(3, rng);
    std::size_t keep[] = {2, 0};
    Operator reduced = partial_trace(rho.op(), keep);
    EXPECT_LE(std::abs(reduced.trace() - Complex{1, 0}), 1e-12);

    // Keeping {2, 0} is keeping {0, 2} with the two qubits swapped.
    std::size_t sorted[] = {0, 2};
    Operator ref = partial_trace(rho.op(), sorted);
    std::size_t swap[] = {1, 0};
    DensityMatrix ref_swapped = permute_qubits(DensityMatrix::from_operator(ref), swap);
    EXPECT_LE(max_abs_diff(reduced, ref_swapped.op()), 1e-15);
}

TEST(PartialTrace, errors) {
    Operator rho = Operator::identity(4);
    std::size_t bad[] = {2};
    std::size_t dup[] = {0, 0};
    EXPECT_THROW(partial_trace(rho, bad), InputError);
    EXPECT_THROW(partial_trace(rho, dup), InputError);
    EXPECT_THROW(partial_trace(rho, std::span<const std::size_t>{}), InputError);
}

TEST(PartialTranspose, full_transpose_and_involution) {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Operator rho = random_operator(8, rng);
        std::size_t all[] = {0, 1, 2};
        EXPECT_EQ(partial_transpose(rho, all), rho.transpose());
        std::size_t subset[] = {1};
        EXPECT_EQ(partial_transpose(partial_transpose(rho, subset), subset), rho);
        EXPECT_EQ(partial_transpose(rho, std::span<const std::size_t>{}), rho);
    }
}

TEST(PartialTranspose, preserves_trace_and_hermiticity) {
    Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        Operator h = tomo::testing::random_hermitian(16, rng);
        std::size_t subset[] = {0, 3};
        Operator pt = partial_transpose(h, subset);
        EXPECT_EQ(pt.trace(), h.trace());
        EXPECT_EQ(hermiticity_defect(pt), 0.0);
    }
}

TEST(PartialTranspose, smolin_is_invariant_across_two_two_cut) {
    Operator rho = smolin_pauli().op();
    std::size_t ab[] = {0, 1};
    EXPECT_LE(max_abs_diff(partial_transpose(rho, ab), rho), 1e-15);
    std::size_t a[] = {0};
    EXPECT_GT(max_abs_diff(partial_transpose(rho, a), rho), 0.1);
    std::size_t out_of_range[] = {4};
    EXPECT_THROW(partial_transpose(rho, out_of_range), InputError);
}

TEST(HermitianEigenvalues, small_known_spectra) {
    std::vector<Complex> diag{3, 1, 2, 0};
    auto ev = hermitian_eigenvalues(Operator::diagonal(diag));
    ASSERT_EQ(ev.size(), 4u);
    EXPECT_NEAR(ev[0], 0, 1e-15);
    EXPECT_NEAR(ev[1], 1, 1e-15);
    EXPECT_NEAR(ev[2], 2, 1e-15);
    EXPECT_NEAR(ev[3], 3, 1e-15);

    auto sx = hermitian_eigenvalues(pauli_x());
    EXPECT_NEAR(sx[0], -1, 1e-15);
    EXPECT_NEAR(sx[1], 1, 1e-15);
    auto sy = hermitian_eigenvalues(pauli_y());
    EXPECT_NEAR(sy[0], -1, 1e-15);
    EXPECT_NEAR(sy[1], 1, 1e-15);
}

TEST(HermitianEigenvalues, smolin_spectrum) {
    auto ev = hermitian_eigenvalues(smolin_pauli().op());
    auto oracle = oracle_eigenvalues(smolin_pauli().op());
    for (std::size_t i = 0; i < 16; ++i) {
        EXPECT_NEAR(ev[i], i < 12 ? 0.0 : 0.25, 1e-10) << i;
        EXPECT_NEAR(ev[i], oracle[i], 1e-10) << i;
    }
}

TEST(HermitianEigenvalues, agrees_with_independent_solver_up_to_64) {
    Rng rng(13);
    for (std::size_t dim : {2u, 4u, 8u, 16u, 32u, 64u}) {
        for (int trial = 0; trial < 3; ++trial) {
            Operator h = tomo::testing::random_hermitian(dim, rng);
            auto ev = hermitian_eigenvalues(h);
            auto oracle = oracle_eigenvalues(h);
            EXPECT_LE(tomo::testing::max_abs_diff(ev, oracle), 1e-10) << "dim " << dim;
            double sum = 0;
            for (double v : ev) {
                sum += v;
            }
            EXPECT_NEAR(sum, h.trace().real(), 1e-10);
        }
    }
}

TEST(HermitianEigenvalues, degenerate_spectrum) {
    // Projector onto a random 3-dim subspace of C^8, rotated by a local frame.
    Rng rng(17);
    std::vector<Complex> diag{1, 1, 1, 0, 0, 0, 0, 0};
    Operator u = tomo::testing::random_local_unitary(3, rng);
    Operator p = u * Operator::diagonal(diag) * u.adjoint();
    auto ev = hermitian_eigenvalues((p + p.adjoint()) * Complex{0.5, 0});
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_NEAR(ev[i], i < 5 ? 0.0 : 1.0, 1e-12);
    }
}

TEST(HermitianEigenvalues, unitary_invariance) {
    Rng rng(19);
    for (int trial = 0; trial < 10; ++trial) {
        Operator h = tomo::testing::random_hermitian(8, rng);
        Operator u = tomo::testing::random_local_unitary(3, rng);
        Operator rotated = u * h * u.adjoint();
        rotated = (rotated + rotated.adjoint()) * Complex{0.5, 0};
        EXPECT_LE(tomo::testing::max_abs_diff(hermitian_eigenvalues(h), hermitian_eigenvalues(rotated)), 1e-10);
    }
}

TEST(HermitianEigenvalues, rejects_non_hermitian) {
    Operator m{{1, 2}, {0, 1}};
    EXPECT_THROW(hermitian_eigenvalues(m), InputError);
}

TEST(Direction, validation) {
    EXPECT_THROW(Direction(1, 1, 0), InputError);
    EXPECT_NO_THROW(Direction(std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2, 0));
    EXPECT_THROW(Direction::normalized(1.01, 0, 0, 1e-9), InputError);
    Direction d = Direction::normalized(1 + 1e-10, 0, 0, 1e-9);
    EXPECT_EQ(d.x(), 1.0);
}

TEST(Rotation, fixed_axes) {
    EXPECT_LE(max_abs_diff(rotation_from_direction(Direction::z_axis()), Operator::identity(2)), 1e-16);
    for (Direction n : {Direction::x_axis(), Direction::y_axis(), Direction::z_axis(), -Direction::z_axis()}) {
        Operator u = rotation_from_direction(n);
        EXPECT_LE(max_abs_diff(u * pauli_z() * u.adjoint(), spin_observable(n)), 1e-15);
    }
    Operator u = rotation_from_direction(Direction::x_axis());
    EXPECT_LE(max_abs_diff(u * pauli_z() * u.adjoint(), pauli_x()), 1e-15);
    u = rotation_from_direction(Direction::y_axis());
    EXPECT_LE(max_abs_diff(u * pauli_z() * u.adjoint(), pauli_y()), 1e-15);
}

TEST(Rotation, defining_property_for_random_axes) {
    Rng rng(23);
    for (int trial = 0; trial < 500; ++trial) {
        Direction n = rng.direction();
        Operator u = rotation_from_direction(n);
        EXPECT_LE(max_abs_diff(u * u.adjoint(), Operator::identity(2)), 1e-14);
        EXPECT_LE(max_abs_diff(u * pauli_z() * u.adjoint(), spin_observable(n)), 1e-14);
    }
}

TEST(Rotation, psi_only_adds_diagonal_phases) {
    Rng rng(29);
    for (int trial = 0; trial < 50; ++trial) {
        EulerAngles e{rng.uniform(0, std::numbers::pi), rng.uniform(0, 2 * std::numbers::pi),
                      rng.uniform(0, 2 * std::numbers::pi)};
        Operator with_psi = rotation_from_euler(e);
        EulerAngles no_psi = e;
        no_psi.psi = 0;
        Operator u = rotation_from_euler(no_psi);
        EXPECT_LE(max_abs_diff(with_psi * pauli_z() * with_psi.adjoint(), u * pauli_z() * u.adjoint()), 1e-14);
    }
}

TEST(Rotation, euler_angle_ranges) {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        Direction n = rng.direction();
        EulerAngles e = euler_angles(n);
        EXPECT_GE(e.theta, 0);
        EXPECT_LE(e.theta, std::numbers::pi);
        EXPECT_GE(e.phi, 0);
        EXPECT_LT(e.phi, 2 * std::numbers::pi);
        EXPECT_EQ(e.psi, 0);
        Direction back = direction(e);
        for (std::size_t i = 0; i < 3; ++i) {
            EXPECT_NEAR(back[i], n[i], 1e-15);
        }
    }
}
