// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "mshsp/gf2.hpp"
#include "mshsp/register.hpp"
#include "mshsp/smallunitary.hpp"

namespace mshsp::dihedral {

/// Element of D4^N as three N-bit vectors: reflection bits t and rotation
/// exponent k = 2v + w per site. The identity is (0, 0, 0).
struct DihedralElement {
    gf2::BitVec t, v, w;

    DihedralElement() = default;
    DihedralElement(gf2::BitVec t_, gf2::BitVec v_, gf2::BitVec w_);

    static DihedralElement identity(size_t n_sites);
    static DihedralElement from_strings(std::string_view ts, std::string_view vs,
                                        std::string_view ws);

    size_t sites() const { return t.size(); }
    int k(size_t site) const { return 2 * v.get(site) + w.get(site); }

    bool operator==(const DihedralElement&) const = default;
    std::string to_string() const;
};

/// Sitewise group product from r² = s⁴ = e, rsr = s⁻¹:
/// t = t_a ⊕ t_b, k = k_b + (−1)^{t_b} k_a mod 4.
DihedralElement compose(const DihedralElement& a, const DihedralElement& b);
DihedralElement inverse(const DihedralElement& g);
bool is_involution(const DihedralElement& g);

/// Two-dimensional representation D^j(r^t s^k) = X^t (iZ)^{kj} of a single
/// site, exact in {0, ±1, ±i} entries.
SmallUnitary rep_matrix_2d(int j, int t, int v, int w);

enum class Char1D { T, A, R, RA };

/// One-dimensional character D^T/A/R/RA evaluated on a single-site element.
int char_1d(Char1D label, int t, int v, int w);

/// C^{q,p}(t,w) = (−1)^{q·t + p·w}, the Z2×Z2 characters of the quotient.
int char_qp(int q, int p, int t, int w);

/// Single-site doubled representation U_2(r^t s^k) = X^t e^{iπkZ/4} applied
/// identically to both qubits; returned as the 2x2 single-qubit factor.
SmallUnitary doubled_site_factor(int t, int k);

/// Multiply the register by U_2^N(g); the register must carry live (site, A)
/// and (site, B) qubits for every site of g under the given copy id.
void doubled_rep_apply(const DihedralElement& g, sim::StateRegister& reg, int copy_id = 0);

/// Apply T[d] = ⊗_n (T ⊗ T)^{d_n} with T = e^{iπZ/8}.
void t_layer_apply(const gf2::BitVec& d, sim::StateRegister& reg, int copy_id = 0);

/// ⟨Ψ| U_2^N(g) |Ψ⟩ for a normalized register.
std::complex<double> expectation(const DihedralElement& g, const sim::StateRegister& reg,
                                 int copy_id = 0);

}  // namespace mshsp::dihedral
