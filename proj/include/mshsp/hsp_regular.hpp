// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mshsp/algorithm.hpp"
#include "mshsp/dihedral.hpp"
#include "mshsp/gf2.hpp"
#include "mshsp/register.hpp"

namespace mshsp::reghsp {

/// A coset state lives in a register with three qubits per site: the
/// reflection qubit (Role::T) and the two rotation qubits (Role::V,
/// Role::W) encoding k = 2v + w.
using CosetState = sim::StateRegister;

/// Partial-Fourier-sampling result: per-site block labels (sigma, pi) and
/// the N residual D-register qubits. The multiplicity label is absent for
/// the regular representation (every block appears exactly once).
struct PftLabels {
    gf2::BitVec sigma, pi;
    sim::StateRegister residual;
    int copy_id = 0;
};

/// The 8x8 site transform U with U† · L(g) · U = D^0(g) ⊕ D^1(g) ⊕ D^2(g)
/// ⊕ D^3(g) for all eight elements, where L is the left-regular
/// representation in the |t, k⟩ basis (basis index t + 2v + 4w) and the
/// block order is (sigma, pi) = (0,0), (0,1), (1,0), (1,1) at index
/// d + 2·sigma + 4·pi. Concretely a Z4 Fourier transform of the rotation
/// register paired against the reflection qubit.
dihedral::SmallUnitary build_pft_site();

/// (|g⟩ + |h·g⟩)/√2 for uniformly random g, encoded sitewise as |t⟩|k⟩.
/// Left multiplication by the involution h stabilizes the state, matching
/// the representation block-diagonalized by build_pft_site.
CosetState prepare_coset_state(const dihedral::DihedralElement& h, int copy_id,
                               sim::RngStream& rng);

/// Apply build_pft_site()† at each site, measure the (sigma, pi) qubits,
/// keep the N-qubit residual (relabelled Role::R).
PftLabels partial_fourier_sampling(CosetState state, sim::RngStream& rng);

/// Bell resolution with the sign-corrected classical post-processing: the
/// measurement pattern of the doubled-representation subroutine, then the
/// p bit at site n flipped iff sum_m sigma_n^m is odd.
algo::IrrepSample bell_resolution_general(std::vector<PftLabels> set, sim::RngStream& rng,
                                          algo::TrialLog* log = nullptr);

/// Classically controlled S correction: at sites with w_max = 1, apply S†
/// to the residual qubit iff the measured pi = 1 and Z iff the measured
/// sigma = 1. Sites with w_max = 0 are untouched.
void s_correction_classical(const gf2::BitVec& w_max, PftLabels& sample);

/// Coherent variant: the per-site 8x8 operator
/// U_pFT (|sigma,pi⟩⟨sigma,pi| ⊗ Z^sigma S†^pi) U_pFT† (identity when the
/// site's w_max bit is 0), applied to an unmeasured coset site.
dihedral::SmallUnitary s_correction_coherent_site(bool w_max_bit);

/// Fourier sampling on the phaseless-Pauli subgroup: per corrected sample,
/// X-measure each residual qubit and accumulate the GF(2) constraint
/// x·t + pi·v = 0. Solution handling matches learn_pauli_stabilizer.
std::optional<algo::PauliCandidate> learn_pauli_like(
    const std::function<PftLabels()>& corrected_sample, uint64_t budget, sim::RngStream& rng,
    bool accept_zero, algo::TrialLog* log = nullptr);

/// Coset-state oracle for a hidden involution, with a consumed counter.
class CosetSource {
  public:
    CosetSource(const dihedral::DihedralElement& h, sim::RngStream& rng)
        : hidden_(h), rng_(&rng) {}

    CosetState fresh_state() { return prepare_coset_state(hidden_, next_copy_id_++, *rng_); }
    uint64_t consumed() const { return next_copy_id_; }
    size_t sites() const { return hidden_.sites(); }

  private:
    dihedral::DihedralElement hidden_;
    sim::RngStream* rng_;
    int next_copy_id_ = 0;
};

/// The generalized solver on the regular representation (epsilon = 1).
dihedral::DihedralElement solve_hsp(CosetSource& source, double delta, sim::RngStream& rng,
                                    algo::SolveStats* stats = nullptr,
                                    algo::TrialLog* log = nullptr, double budget_c = 2.0);

}  // namespace mshsp::reghsp
