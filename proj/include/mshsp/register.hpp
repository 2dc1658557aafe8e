// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mshsp/rng.hpp"
#include "mshsp/smallunitary.hpp"

namespace mshsp::sim {

using cplx = std::complex<double>;

/// Qubit roles. A/B are the two qubits of a doubled-representation site,
/// R is the single residual qubit left after a site collapse, and T/V/W
/// are the three computational-basis qubits of a regular-representation
/// site (reflection bit and the two rotation bits of k = 2v + w).
enum class Role : uint8_t { A, B, R, T, V, W };

std::string role_name(Role role);

struct QubitLabel {
    int32_t copy_id = 0;
    int32_t site = 0;
    Role role = Role::A;

    bool operator==(const QubitLabel&) const = default;
};

std::string to_string(const QubitLabel& label);

enum class BellOutcome : int { PhiPlus = 0, PhiMinus = 1, PsiPlus = 2, PsiMinus = 3 };

/// Eigenvalue bit of X⊗X on the Bell state: 0 for Φ+, Ψ+; 1 for Φ−, Ψ−.
inline int bell_xx_bit(BellOutcome o) {
    return (o == BellOutcome::PhiMinus || o == BellOutcome::PsiMinus) ? 1 : 0;
}

/// Eigenvalue bit of Z⊗Z on the Bell state: 0 for Φ±, 1 for Ψ±.
inline int bell_zz_bit(BellOutcome o) {
    return (o == BellOutcome::PsiPlus || o == BellOutcome::PsiMinus) ? 1 : 0;
}

std::string to_string(BellOutcome o);

/// Dense complex statevector with labelled qubits and seeded Born-rule
/// measurement. Qubit 0 is the least-significant bit of the amplitude
/// index; labels map to bit positions by insertion order. Measured qubits
/// are retired immediately, halving the live dimension, and every
/// projective step renormalizes (a branch of probability < 1e-14 is an
/// error, never silently renormalized).
class StateRegister {
  public:
    static constexpr size_t kMaxQubits = 26;
    static constexpr double kZeroProbability = 1e-14;

    StateRegister() = default;
    StateRegister(std::vector<QubitLabel> labels, std::vector<cplx> amplitudes);

    static StateRegister computational_basis(std::vector<QubitLabel> labels, uint64_t index);

    size_t num_qubits() const { return labels_.size(); }
    size_t dim() const { return amp_.size(); }
    const std::vector<QubitLabel>& labels() const { return labels_; }
    const std::vector<cplx>& amplitudes() const { return amp_; }

    bool has(const QubitLabel& label) const;
    size_t position(const QubitLabel& label) const;  // throws if missing
    void relabel(const QubitLabel& from, const QubitLabel& to);

    double norm() const;
    cplx inner_product(const StateRegister& other) const;

    void apply_unitary(const dihedral::SmallUnitary& u, std::span<const QubitLabel> targets);
    void apply_unitary(const dihedral::SmallUnitary& u, const QubitLabel& target) {
        apply_unitary(u, std::span<const QubitLabel>(&target, 1));
    }

    /// Transversal Z⊗Z measurement of one site's (A, B) pair followed by
    /// the parity partial isometry: the site collapses to a single qubit
    /// relabelled (copy, site, R). Returns the parity bit (1 for the +1
    /// eigenvalue of Z⊗Z).
    int measure_site_parity(int copy_id, int site, RngStream& rng);

    /// X-basis measurement; returns +1 or -1 and retires the qubit.
    int measure_x(const QubitLabel& label, RngStream& rng);

    /// Computational-basis measurement; returns the bit and retires the qubit.
    int measure_z(const QubitLabel& label, RngStream& rng);

    /// Absorb the qubits of `other` at higher significance; `other` is
    /// left empty. Errors if the merged register would exceed kMaxQubits.
    void merge(StateRegister&& other);

    /// Binary fixture dump: little-endian f64 (re, im) pairs, row-major in
    /// amplitude-index order.
    void dump_amplitudes(std::ostream& out) const;
    static std::vector<cplx> read_amplitude_dump(std::istream& in);

  private:
    void renormalize_after_projection(double branch_probability);
    void drop_qubit_positions(std::vector<size_t> positions, const std::vector<cplx>& projected);

    std::vector<QubitLabel> labels_;
    std::vector<cplx> amp_;
};

/// Bell measurement of two live qubits, possibly across two registers.
/// Distinct registers are tensor-merged into `a` first; the two measured
/// qubits are projected onto a Bell state and retired. After a cross-
/// register call, `b` is empty and the surviving state lives in `a`.
BellOutcome bell_measure(StateRegister& a, const QubitLabel& label_a, StateRegister& b,
                         const QubitLabel& label_b, RngStream& rng);

}  // namespace mshsp::sim
