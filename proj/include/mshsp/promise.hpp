// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mshsp/dihedral.hpp"
#include "mshsp/register.hpp"

namespace mshsp::promise {

/// A generated promise state with its hidden involution and a certified
/// epsilon: 1 minus the largest |<Psi|U_2^N(g)|Psi>| over g outside {e, h}.
/// Instances with epsilon = 0 carry accidental extra symmetries and are
/// kept but flagged; they are legal for subroutine tests only.
struct PromiseInstance {
    std::string generator;
    uint64_t seed = 0;
    double time = 0.0;  // hamiltonian-evolved generator only
    dihedral::DihedralElement hidden;
    double epsilon = 0.0;
    std::vector<sim::cplx> amplitudes;
    // hamiltonian-evolved generator only: the commutant-projected H on the
    // A qubits (row-major 2^N x 2^N), kept for observability.
    std::vector<sim::cplx> hamiltonian;

    size_t sites() const { return hidden.sites(); }
    bool promise_violating() const { return epsilon <= 0.0; }

    /// A fresh 2N-qubit register of |Psi> under the given copy id.
    sim::StateRegister fresh_copy(int copy_id) const;

    /// Instance metadata as a JSON object string (generator id, seed,
    /// h as three bitstrings, certified epsilon).
    std::string metadata_json() const;
};

/// |Psi> proportional to (I + U_2^N(h)) |chi> for Haar-random |chi>.
/// Deterministic in (n, h, seed); resamples internally if the projection
/// annihilates |chi| (error after 16 attempts).
PromiseInstance gen_haar_projected(size_t n, const dihedral::DihedralElement& h, uint64_t seed);

/// exp(-i t H ⊗ I_B)|Psi+>^{⊗N} for a random Hermitian H on the A qubits
/// projected onto the commutant of the single-copy symmetry U(t^h, k^h).
/// epsilon is certified numerically per instance.
PromiseInstance gen_hamiltonian_evolved(size_t n, const dihedral::DihedralElement& h, double time,
                                        uint64_t seed);

/// epsilon = 1 - max_{g not in {e,h}} |<Psi|U_2^N(g)|Psi>|, clamped at 0,
/// by exhaustive sweep over all 8^N elements. N > 4 is an error.
double certify_epsilon(const sim::StateRegister& reg, const dihedral::DihedralElement& h);

/// Uniform random involution of D4^N (6 involution classes per site).
dihedral::DihedralElement random_involution(size_t n, sim::RngStream& rng);

/// Uniform random involution drawn from per-site classes {e, r, rs, rs^2,
/// rs^3}. A hidden element whose only non-identity factor is a single s^2
/// forces epsilon = 0 (its +1 eigenspace is that site's odd-parity
/// subspace, which U_2(s) fixes pointwise); excluding s^2 sites altogether
/// keeps every draw inside a family whose generic instances certify at
/// epsilon > 0.
dihedral::DihedralElement random_admissible_involution(size_t n, sim::RngStream& rng);

}  // namespace mshsp::promise
