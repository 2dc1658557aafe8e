// SPDX-License-Identifier: Apache-2.0
#include "mshsp/dihedral.hpp"

#include <stdexcept>

namespace mshsp::dihedral {

DihedralElement::DihedralElement(gf2::BitVec t_, gf2::BitVec v_, gf2::BitVec w_)
    : t(std::move(t_)), v(std::move(v_)), w(std::move(w_)) {
    if (t.size() != v.size() || t.size() != w.size()) {
        throw std::invalid_argument("DihedralElement: t, v, w must have equal length");
    }
}

DihedralElement DihedralElement::identity(size_t n_sites) {
    return DihedralElement(gf2::BitVec(n_sites), gf2::BitVec(n_sites), gf2::BitVec(n_sites));
}

DihedralElement DihedralElement::from_strings(std::string_view ts, std::string_view vs,
                                              std::string_view ws) {
    return DihedralElement(gf2::BitVec::from_string(ts), gf2::BitVec::from_string(vs),
                           gf2::BitVec::from_string(ws));
}

std::string DihedralElement::to_string() const {
    return t.to_string() + ":" + v.to_string() + ":" + w.to_string();
}

DihedralElement compose(const DihedralElement& a, const DihedralElement& b) {
    size_t n = a.sites();
    if (b.sites() != n) {
        throw std::invalid_argument("compose: site count mismatch");
    }
    DihedralElement c = DihedralElement::identity(n);
    for (size_t i = 0; i < n; i++) {
        int tb = b.t.get(i);
        int k = (b.k(i) + (tb ? -1 : 1) * a.k(i)) % 4;
        if (k < 0) {
            k += 4;
        }
        c.t.set(i, a.t.get(i) ^ tb);
        c.v.set(i, (k >> 1) & 1);
        c.w.set(i, k & 1);
    }
    return c;
}

DihedralElement inverse(const DihedralElement& g) {
    size_t n = g.sites();
    DihedralElement inv = DihedralElement::identity(n);
    for (size_t i = 0; i < n; i++) {
        int t = g.t.get(i);
        // (r^t s^k)^-1 = r^t s^k for t=1, s^{4-k} for t=0.
        int k = t ? g.k(i) : (4 - g.k(i)) % 4;
        inv.t.set(i, t);
        inv.v.set(i, (k >> 1) & 1);
        inv.w.set(i, k & 1);
    }
    return inv;
}

bool is_involution(const DihedralElement& g) {
    return compose(g, g) == DihedralElement::identity(g.sites());
}

namespace {

// i^e for e mod 4, exact.
cplx ipow(int e) {
    switch (((e % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

}  // namespace

SmallUnitary rep_matrix_2d(int j, int t, int v, int w) {
    if (j < 0 || j > 3) {
        throw std::invalid_argument("rep_matrix_2d: j must be in 0..3");
    }
    int k = 2 * v + w;
    int e = k * j;
    // (iZ)^e = diag(i^e, (-i)^e), then X^t swaps the rows.
    SmallUnitary u(2);
    if (t) {
        u.at(0, 1) = ipow(-e);
        u.at(1, 0) = ipow(e);
    } else {
        u.at(0, 0) = ipow(e);
        u.at(1, 1) = ipow(-e);
    }
    return u;
}

int char_1d(Char1D label, int t, int v, int w) {
    int k = 2 * v + w;
    switch (label) {
        case Char1D::T: return 1;
        case Char1D::A: return (t & 1) ? -1 : 1;
        case Char1D::R: return (k & 1) ? -1 : 1;
        case Char1D::RA: return ((k + t) & 1) ? -1 : 1;
    }
    return 1;
}

int char_qp(int q, int p, int t, int w) { return ((q * t + p * w) & 1) ? -1 : 1; }

SmallUnitary doubled_site_factor(int t, int k) {
    SmallUnitary u = phase_quarter(k);
    if (t) {
        u = pauli_x() * u;
    }
    return u;
}

void doubled_rep_apply(const DihedralElement& g, sim::StateRegister& reg, int copy_id) {
    for (size_t n = 0; n < g.sites(); n++) {
        SmallUnitary u = doubled_site_factor(g.t.get(n), g.k(n));
        reg.apply_unitary(u, sim::QubitLabel{copy_id, static_cast<int>(n), sim::Role::A});
        reg.apply_unitary(u, sim::QubitLabel{copy_id, static_cast<int>(n), sim::Role::B});
    }
}

void t_layer_apply(const gf2::BitVec& d, sim::StateRegister& reg, int copy_id) {
    SmallUnitary t = gate_t();
    for (size_t n = 0; n < d.size(); n++) {
        if (!d.get(n)) {
            continue;
        }
        reg.apply_unitary(t, sim::QubitLabel{copy_id, static_cast<int>(n), sim::Role::A});
        reg.apply_unitary(t, sim::QubitLabel{copy_id, static_cast<int>(n), sim::Role::B});
    }
}

std::complex<double> expectation(const DihedralElement& g, const sim::StateRegister& reg,
                                 int copy_id) {
    sim::StateRegister moved = reg;
    doubled_rep_apply(g, moved, copy_id);
    return reg.inner_product(moved);
}

}  // namespace mshsp::dihedral
