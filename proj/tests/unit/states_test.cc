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

#include "tomoportrait/states.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gtest/gtest.h"
#include "test_util.h"
#include "tomoportrait/errors.h"

using namespace tomo;

TEST(BellState, amplitudes) {
    const double h = 1 / std::sqrt(2.0);
    PureState phi_state = bell_state(BellKind::kPhiPlus);
    auto phi_plus = phi_state.amplitudes();
    EXPECT_DOUBLE_EQ(phi_plus[0].real(), h);
    EXPECT_EQ(phi_plus[1], Complex{});
    EXPECT_EQ(phi_plus[2], Complex{});
    EXPECT_DOUBLE_EQ(phi_plus[3].real(), h);

    PureState psi_state = bell_state(BellKind::kPsiMinus);
    auto psi_minus = psi_state.amplitudes();
    EXPECT_EQ(psi_minus[0], Complex{});
    EXPECT_DOUBLE_EQ(psi_minus[1].real(), h);
    EXPECT_DOUBLE_EQ(psi_minus[2].real(), -h);
    EXPECT_EQ(psi_minus[3], Complex{});
}

TEST(BellState, orthonormal_basis_with_positive_first_amplitude) {
    for (std::size_t i = 0; i < 4; ++i) {
        PureState sa = bell_state(kAllBellKinds[i]);
        auto a = sa.amplitudes();
        auto first = std::find_if(a.begin(), a.end(), [](Complex c) { return c != Complex{}; });
        EXPECT_GT(first->real(), 0);
        for (std::size_t j = 0; j < 4; ++j) {
            PureState sb = bell_state(kAllBellKinds[j]);
            auto b = sb.amplitudes();
            Complex overlap = 0;
            for (std::size_t k = 0; k < 4; ++k) {
                overlap += std::conj(a[k]) * b[k];
            }
            EXPECT_NEAR(std::abs(overlap - Complex(i == j ? 1.0 : 0.0)), 0, 1e-15);
        }
    }
}

TEST(BellState, names_round_trip) {
    for (BellKind kind : kAllBellKinds) {
        EXPECT_EQ(parse_bell_kind(bell_kind_name(kind)), kind);
    }
    EXPECT_EQ(parse_bell_kind("Phi+"), BellKind::kPhiPlus);
    EXPECT_EQ(parse_bell_kind("psi-"), BellKind::kPsiMinus);
    EXPECT_EQ(parse_bell_kind("Ψ−"), BellKind::kPsiMinus);
    EXPECT_THROW(parse_bell_kind("chi+"), InputError);
}

TEST(PureState, rejects_unnormalized) {
    EXPECT_THROW(PureState({1, 1}), InputError);
    EXPECT_THROW(PureState({1, 0, 0}), InputError);
}

TEST(Smolin, two_presentations_agree) {
    DensityMatrix mixture = smolin_mixture();
    DensityMatrix pauli = smolin_pauli();
    EXPECT_LE(max_abs_diff(mixture.op(), pauli.op()), 1e-15);
    EXPECT_NEAR(mixture.op().trace().real(), 1, 1e-15);
}

TEST(Smolin, diagonal_parity_pattern) {
    Operator rho = smolin_pauli().op();
    for (std::size_t i = 0; i < 16; ++i) {
        double expected = std::popcount(i) % 2 == 0 ? 0.125 : 0.0;
        EXPECT_EQ(rho(i, i), Complex(expected)) << i;
    }
}

TEST(Smolin, spectrum_and_purity) {
    auto ev = tomo::testing::oracle_eigenvalues(smolin_mixture().op());
    for (std::size_t i = 0; i < 16; ++i) {
        EXPECT_NEAR(ev[i], i < 12 ? 0.0 : 0.25, 1e-12);
    }
    Operator rho = smolin_pauli().op();
    EXPECT_NEAR((rho * rho).trace().real(), 0.25, 1e-15);
}

TEST(Smolin, symmetric_under_all_qubit_permutations) {
    DensityMatrix rho = smolin_pauli();
    std::vector<std::size_t> perm{0, 1, 2, 3};
    int count = 0;
    do {
        EXPECT_LE(max_abs_diff(permute_qubits(rho, perm).op(), rho.op()), 1e-15);
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(count, 24);
}

TEST(PermuteQubits, relabels_product_factors) {
    // |0><0| (x) |1><1| (x) I/2, qubit 0 -> position 2, 1 -> 0, 2 -> 1.
    Operator up{{1, 0}, {0, 0}};
    Operator down{{0, 0}, {0, 1}};
    Operator mixed = Operator::identity(2) * Complex{0.5, 0};
    std::vector<Operator> in{up, down, mixed};
    std::vector<Operator> expected{down, mixed, up};
    std::size_t perm[] = {2, 0, 1};
    DensityMatrix out = permute_qubits(DensityMatrix::from_operator(tensor(in)), perm);
    EXPECT_EQ(out.op(), tensor(expected));
}

TEST(PermuteQubits, identity_involution_and_spectrum) {
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        DensityMatrix rho = tomo::testing::random_density(3, rng);
        std::size_t id[] = {0, 1, 2};
        EXPECT_EQ(permute_qubits(rho, id), rho);
        std::size_t swap_ab[] = {1, 0, 2};
        EXPECT_EQ(permute_qubits(permute_qubits(rho, swap_ab), swap_ab), rho);
        std::size_t cycle[] = {1, 2, 0};
        EXPECT_LE(tomo::testing::max_abs_diff(hermitian_eigenvalues(permute_qubits(rho, cycle).op()),
                                              hermitian_eigenvalues(rho.op())),
                  1e-10);
    }
}

TEST(PermuteQubits, rejects_invalid_permutations) {
    DensityMatrix rho = DensityMatrix::maximally_mixed(3);
    std::size_t dup[] = {0, 0, 1};
    std::size_t short_perm[] = {0, 1};
    std::size_t out_of_range[] = {0, 1, 3};
    EXPECT_THROW(permute_qubits(rho, dup), InputError);
    EXPECT_THROW(permute_qubits(rho, short_perm), InputError);
    EXPECT_THROW(permute_qubits(rho, out_of_range), InputError);
}

TEST(Validation, reports_every_violation) {
    Operator bad{{0.7, 0.3}, {0.0, 0.7}};
    ValidationReport report = validate_density(bad);
    EXPECT_FALSE(report.ok());
    EXPECT_EQ(report.violations.size(), 3u);  // Hermiticity, trace, positivity not checkable

    Operator negative{{1.5, 0}, {0, -0.5}};
    report = validate_density(negative);
    ASSERT_EQ(report.violations.size(), 1u);
    EXPECT_NEAR(report.min_eigenvalue, -0.5, 1e-15);
    EXPECT_THROW(DensityMatrix::from_operator(negative), InputError);

    try {
        DensityMatrix::from_operator(bad);
        FAIL();
    } catch (const InputError &e) {
        std::string msg = e.what();
        EXPECT_NE(msg.find("Hermitian"), std::string::npos);
        EXPECT_NE(msg.find("trace"), std::string::npos);
    }
}

TEST(AssembleSeparable, single_term_is_tensor_product) {
    Rng rng(43);
    DensityMatrix a = tomo::testing::random_density(1, rng);
    DensityMatrix b = tomo::testing::random_density(2, rng);
    DensityMatrix out = assemble_separable({{{1.0, a, b}}});
    EXPECT_LE(max_abs_diff(out.op(), tensor(a.op(), b.op())), 1e-16);
}

TEST(AssembleSeparable, smolin_from_bell_pairs) {
    SeparableDecomposition dec;
    for (BellKind kind : kAllBellKinds) {
        DensityMatrix pair = DensityMatrix::from_pure(bell_state(kind));
        dec.terms.push_back({0.25, pair, pair});
    }
    EXPECT_LE(max_abs_diff(assemble_separable(dec).op(), smolin_pauli().op()), 1e-15);
}

TEST(AssembleSeparable, classical_correlation) {
    DensityMatrix up = DensityMatrix::from_operator({{1, 0}, {0, 0}});
    DensityMatrix down = DensityMatrix::from_operator({{0, 0}, {0, 1}});
    DensityMatrix out = assemble_separable({{{0.5, up, up}, {0.5, down, down}}});
    std::vector<Complex> diag{0.5, 0, 0, 0.5};
    EXPECT_EQ(out.op(), Operator::diagonal(diag));
}

TEST(AssembleSeparable, random_decompositions_are_valid_states) {
    Rng rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        auto dec = tomo::testing::random_separable(1, 3, 1 + trial % 4, rng);
        DensityMatrix rho = assemble_separable(dec);
        EXPECT_TRUE(validate_density(rho.op()).ok());
    }
}

TEST(AssembleSeparable, rejects_bad_weights_and_shapes) {
    DensityMatrix q = DensityMatrix::maximally_mixed(1);
    DensityMatrix qq = DensityMatrix::maximally_mixed(2);
    EXPECT_THROW(assemble_separable({{{0.6, q, q}, {0.6, q, q}}}), InputError);
    EXPECT_THROW(assemble_separable({{{1.5, q, q}, {-0.5, q, q}}}), InputError);
    EXPECT_THROW(assemble_separable({{{0.5, q, q}, {0.5, q, qq}}}), InputError);
    EXPECT_THROW(assemble_separable({}), InputError);
}
