// SPDX-License-Identifier: Apache-2.0
#include "mshsp/promise.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace mshsp;
using dihedral::DihedralElement;

TEST_CASE("haar-projected instances satisfy the stabilization condition exactly") {
    for (uint64_t seed = 0; seed < 10; seed++) {
        sim::RngStream hr(seed);
        auto h = promise::random_involution(2, hr);
        auto inst = promise::gen_haar_projected(2, h, seed);
        CHECK(dihedral::is_involution(inst.hidden));
        auto copy = inst.fresh_copy(0);
        CHECK(std::abs(dihedral::expectation(h, copy) - sim::cplx{1, 0}) < 1e-10);
        CHECK(std::abs(copy.norm() - 1.0) < 1e-10);
    }
}

TEST_CASE("haar-projected N=1 with h=r: all non-hidden elements stay below 1") {
    auto h = DihedralElement::from_strings("1", "0", "0");
    for (uint64_t seed = 0; seed < 12; seed++) {
        auto inst = promise::gen_haar_projected(1, h, seed);
        auto copy = inst.fresh_copy(0);
        for (int bits = 0; bits < 8; bits++) {
            DihedralElement g = DihedralElement::from_strings(
                (bits & 1) ? "1" : "0", (bits & 2) ? "1" : "0", (bits & 4) ? "1" : "0");
            if (g == DihedralElement::identity(1) || g == h) {
                continue;
            }
            CHECK(std::abs(dihedral::expectation(g, copy)) < 1.0 - 1e-6);
        }
        CHECK(inst.epsilon > 0.0);
    }
}

TEST_CASE("a bare s^2 hidden element forces epsilon = 0") {
    // The +1 eigenspace of U_2(s^2) is exactly the site's odd-parity
    // subspace, which U_2(s) fixes pointwise, so no state can satisfy the
    // promise when s^2 is the only non-identity factor of h.
    auto h = DihedralElement::from_strings("0", "1", "0");
    for (uint64_t seed = 0; seed < 4; seed++) {
        auto inst = promise::gen_haar_projected(1, h, seed);
        CHECK(inst.epsilon == 0.0);
        CHECK(inst.promise_violating());
        auto s = DihedralElement::from_strings("0", "0", "1");
        CHECK(std::abs(dihedral::expectation(s, inst.fresh_copy(0))) ==
              doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("haar-projected N=3: certified epsilon exceeds 0.3 on most seeds (regression)") {
    // Empirical fixture for this seed block; re-recorded only if the
    // generator's sampling sequence changes.
    int good = 0;
    for (uint64_t seed = 0; seed < 100; seed++) {
        sim::RngStream hr(7000 + seed);
        auto h = promise::random_admissible_involution(3, hr);
        auto inst = promise::gen_haar_projected(3, h, 7000 + seed);
        if (inst.epsilon > 0.3) {
            good++;
        }
    }
    CHECK(good >= 90);
}

TEST_CASE("instances regenerate identically from the seed") {
    auto h = DihedralElement::from_strings("11", "00", "10");
    auto a = promise::gen_haar_projected(2, h, 31);
    auto b = promise::gen_haar_projected(2, h, 31);
    REQUIRE(a.amplitudes.size() == b.amplitudes.size());
    for (size_t i = 0; i < a.amplitudes.size(); i++) {
        CHECK(a.amplitudes[i] == b.amplitudes[i]);
    }
    CHECK(a.epsilon == b.epsilon);
}

TEST_CASE("hamiltonian-evolved: time 0 reproduces |Psi+>^N, flagged promise-violating") {
    auto h = DihedralElement::from_strings("10", "01", "10");
    REQUIRE(dihedral::is_involution(h));
    auto inst = promise::gen_hamiltonian_evolved(2, h, 0.0, 5);
    CHECK(inst.epsilon == 0.0);
    CHECK(inst.promise_violating());
    // |Psi+>^N is a +1 eigenstate of every involution
    auto copy = inst.fresh_copy(0);
    for (int bits = 0; bits < 64; bits++) {
        gf2::BitVec t(2), v(2), w(2);
        for (int n = 0; n < 2; n++) {
            t.set(n, (bits >> (3 * n)) & 1);
            v.set(n, (bits >> (3 * n + 1)) & 1);
            w.set(n, (bits >> (3 * n + 2)) & 1);
        }
        DihedralElement g(t, v, w);
        if (!dihedral::is_involution(g)) {
            continue;
        }
        CHECK(std::abs(dihedral::expectation(g, copy) - sim::cplx{1, 0}) < 1e-10);
    }
}

TEST_CASE("hamiltonian-evolved: [H ⊗ I, U_2^N(h)] = 0 as a dense identity at N=2") {
    auto h = DihedralElement::from_strings("10", "01", "10");
    auto inst = promise::gen_hamiltonian_evolved(2, h, 0.7, 9);
    size_t dima = 4;
    // H ⊗ I_B on the interleaved layout (A bits even, B bits odd).
    oracle::CMat hfull = oracle::zeros(16);
    auto interleave = [](size_t a, size_t b) {
        size_t idx = 0;
        for (size_t s = 0; s < 2; s++) {
            idx |= ((a >> s) & 1) << (2 * s);
            idx |= ((b >> s) & 1) << (2 * s + 1);
        }
        return idx;
    };
    for (size_t i = 0; i < dima; i++) {
        for (size_t j = 0; j < dima; j++) {
            for (size_t b = 0; b < 4; b++) {
                hfull[interleave(i, b)][interleave(j, b)] = inst.hamiltonian[i * dima + j];
            }
        }
    }
    auto u = oracle::u2_full(h.t, h.v, h.w);
    auto lhs = oracle::mul(hfull, u);
    auto rhs = oracle::mul(u, hfull);
    CHECK(oracle::max_abs_diff(lhs, rhs) < 1e-10);

    // evolved state still satisfies expectation(h, .) = 1 for random times
    for (double time : {0.3, 1.1, 2.9}) {
        auto e = promise::gen_hamiltonian_evolved(2, h, time, 11);
        CHECK(std::abs(dihedral::expectation(h, e.fresh_copy(0)) - sim::cplx{1, 0}) < 1e-10);
    }
}

TEST_CASE("certify_epsilon: |Psi+>^N gives 0; dense-sweep cross-check at N=2") {
    auto h = DihedralElement::from_strings("10", "00", "10");
    auto plus_inst = promise::gen_hamiltonian_evolved(2, h, 0.0, 1);
    CHECK(promise::certify_epsilon(plus_inst.fresh_copy(0), h) == 0.0);

    auto inst = promise::gen_haar_projected(2, h, 77);
    auto copy = inst.fresh_copy(0);
    // second implementation: dense 16x16 operator sweep
    double max_overlap = 0;
    for (int bits = 0; bits < 64; bits++) {
        gf2::BitVec t(2), v(2), w(2);
        for (int n = 0; n < 2; n++) {
            t.set(n, (bits >> (3 * n)) & 1);
            v.set(n, (bits >> (3 * n + 1)) & 1);
            w.set(n, (bits >> (3 * n + 2)) & 1);
        }
        DihedralElement g(t, v, w);
        if (g == DihedralElement::identity(2) || g == h) {
            continue;
        }
        auto dense = oracle::u2_full(t, v, w);
        auto val = oracle::inner(copy.amplitudes(), oracle::mul_vec(dense, copy.amplitudes()));
        max_overlap = std::max(max_overlap, std::abs(val));
    }
    CHECK(inst.epsilon == doctest::Approx(1.0 - max_overlap).epsilon(1e-12));
    // h itself is excluded from the max: epsilon stays positive even though
    // expectation(h) = 1.
    CHECK(inst.epsilon > 0.0);
}

TEST_CASE("generator precondition checks") {
    auto not_involution = DihedralElement::from_strings("0", "0", "1");  // s
    CHECK_THROWS(promise::gen_haar_projected(1, not_involution, 0));
    auto h5 = DihedralElement::identity(5);
    CHECK_THROWS(promise::gen_haar_projected(5, h5, 0));
}
