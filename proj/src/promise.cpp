// SPDX-License-Identifier: Apache-2.0
#include "mshsp/promise.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace mshsp::promise {

namespace {

std::vector<sim::QubitLabel> doubled_labels(size_t n, int copy_id) {
    std::vector<sim::QubitLabel> labels;
    labels.reserve(2 * n);
    for (size_t s = 0; s < n; s++) {
        labels.push_back({copy_id, static_cast<int>(s), sim::Role::A});
        labels.push_back({copy_id, static_cast<int>(s), sim::Role::B});
    }
    return labels;
}

void check_generator_pre(size_t n, const dihedral::DihedralElement& h) {
    if (h.sites() != n) {
        throw std::invalid_argument("promise generator: h has wrong site count");
    }
    if (!dihedral::is_involution(h)) {
        throw std::invalid_argument("promise generator: h is not an involution");
    }
    if (n == 0 || n > 4) {
        throw std::invalid_argument("promise generator: N must be in 1..4 (certification cap)");
    }
}

}  // namespace

sim::StateRegister PromiseInstance::fresh_copy(int copy_id) const {
    return sim::StateRegister(doubled_labels(sites(), copy_id), amplitudes);
}

std::string PromiseInstance::metadata_json() const {
    std::ostringstream os;
    os << "{\"generator\":\"" << generator << "\",\"seed\":" << seed << ",\"n\":" << sites()
       << ",\"h\":{\"t\":\"" << hidden.t.to_string() << "\",\"v\":\"" << hidden.v.to_string()
       << "\",\"w\":\"" << hidden.w.to_string() << "\"},\"epsilon\":" << epsilon;
    if (generator == "hamiltonian-evolved") {
        os << ",\"time\":" << time;
    }
    os << "}";
    return os.str();
}

PromiseInstance gen_haar_projected(size_t n, const dihedral::DihedralElement& h, uint64_t seed) {
    check_generator_pre(n, h);
    sim::RngStream rng(seed);
    size_t dim = size_t{1} << (2 * n);
    for (int attempt = 0; attempt < 16; attempt++) {
        std::vector<sim::cplx> chi(dim);
        double norm2 = 0;
        for (auto& a : chi) {
            a = {rng.next_gaussian(), rng.next_gaussian()};
            norm2 += std::norm(a);
        }
        double inv = 1.0 / std::sqrt(norm2);
        for (auto& a : chi) {
            a *= inv;
        }
        auto reg = sim::StateRegister(doubled_labels(n, 0), chi);
        auto moved = reg;
        dihedral::doubled_rep_apply(h, moved, 0);
        std::vector<sim::cplx> psi(dim);
        double p = 0;
        for (size_t i = 0; i < dim; i++) {
            psi[i] = 0.5 * (reg.amplitudes()[i] + moved.amplitudes()[i]);
            p += std::norm(psi[i]);
        }
        if (p < 1e-14) {
            continue;
        }
        double s = 1.0 / std::sqrt(p);
        for (auto& a : psi) {
            a *= s;
        }
        PromiseInstance inst;
        inst.generator = "haar-projected";
        inst.seed = seed;
        inst.hidden = h;
        inst.amplitudes = std::move(psi);
        inst.epsilon = certify_epsilon(inst.fresh_copy(0), h);
        return inst;
    }
    throw std::runtime_error("gen_haar_projected: projection annihilated 16 samples in a row");
}

namespace {

// Dense Hermitian matrix on the N A-qubits, stored row-major.
using CVec = std::vector<sim::cplx>;

CVec random_hermitian(size_t dim, sim::RngStream& rng) {
    CVec g(dim * dim);
    for (auto& x : g) {
        x = {rng.next_gaussian(), rng.next_gaussian()};
    }
    CVec h(dim * dim);
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = 0; j < dim; j++) {
            h[i * dim + j] = 0.5 * (g[i * dim + j] + std::conj(g[j * dim + i]));
        }
    }
    return h;
}

// Single-copy symmetry operator U(t^h, k^h) = ⊗_n X^{t_n} e^{i pi k_n Z/4}
// as a dense 2^N matrix (site n on bit n).
CVec symmetry_operator(const dihedral::DihedralElement& h) {
    size_t n = h.sites();
    size_t dim = size_t{1} << n;
    CVec u(dim * dim, sim::cplx{0, 0});
    for (size_t col = 0; col < dim; col++) {
        size_t row = col;
        sim::cplx val{1, 0};
        for (size_t s = 0; s < n; s++) {
            int bit = (col >> s) & 1;
            int k = h.k(s);
            val *= std::polar(1.0, std::numbers::pi * k / 4.0 * (bit ? -1 : 1));
            if (h.t.get(s)) {
                row ^= size_t{1} << s;
            }
        }
        u[row * dim + col] = val;
    }
    return u;
}

CVec matmul(const CVec& a, const CVec& b, size_t dim) {
    CVec r(dim * dim, sim::cplx{0, 0});
    for (size_t i = 0; i < dim; i++) {
        for (size_t k = 0; k < dim; k++) {
            sim::cplx aik = a[i * dim + k];
            if (aik == sim::cplx{0, 0}) {
                continue;
            }
            for (size_t j = 0; j < dim; j++) {
                r[i * dim + j] += aik * b[k * dim + j];
            }
        }
    }
    return r;
}

CVec adjoint(const CVec& a, size_t dim) {
    CVec r(dim * dim);
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = 0; j < dim; j++) {
            r[i * dim + j] = std::conj(a[j * dim + i]);
        }
    }
    return r;
}

// Apply exp(-i t H) to the A-qubit part of a doubled-register amplitude
// vector (A qubits on even bit positions). Taylor series with step
// splitting keeps every step well inside convergence.
void evolve_a_qubits(std::vector<sim::cplx>& amp, const CVec& ham, size_t n, double time) {
    size_t dima = size_t{1} << n;
    double fro = 0;
    for (const auto& x : ham) {
        fro += std::norm(x);
    }
    fro = std::sqrt(fro);
    int steps = std::max(1, static_cast<int>(std::ceil(std::abs(time) * fro)));
    double dt = time / steps;

    // index maps between (a, b) pairs and interleaved full indices
    size_t dimb = size_t{1} << n;
    std::vector<size_t> interleave(dima * dimb);
    for (size_t a = 0; a < dima; a++) {
        for (size_t b = 0; b < dimb; b++) {
            size_t idx = 0;
            for (size_t s = 0; s < n; s++) {
                idx |= ((a >> s) & 1) << (2 * s);
                idx |= ((b >> s) & 1) << (2 * s + 1);
            }
            interleave[b * dima + a] = idx;
        }
    }
    CVec x(dima), term(dima), acc(dima);
    for (int step = 0; step < steps; step++) {
        for (size_t b = 0; b < dimb; b++) {
            for (size_t a = 0; a < dima; a++) {
                x[a] = amp[interleave[b * dima + a]];
            }
            acc = x;
            term = x;
            for (int m = 1; m < 64; m++) {
                CVec next(dima, sim::cplx{0, 0});
                for (size_t i = 0; i < dima; i++) {
                    sim::cplx s{0, 0};
                    for (size_t j = 0; j < dima; j++) {
                        s += ham[i * dima + j] * term[j];
                    }
                    next[i] = s * sim::cplx{0, -dt} / double(m);
                }
                term = std::move(next);
                double tn = 0;
                for (const auto& v : term) {
                    tn += std::norm(v);
                }
                for (size_t i = 0; i < dima; i++) {
                    acc[i] += term[i];
                }
                if (tn < 1e-34) {
                    break;
                }
            }
            for (size_t a = 0; a < dima; a++) {
                amp[interleave[b * dima + a]] = acc[a];
            }
        }
    }
    double norm2 = 0;
    for (const auto& v : amp) {
        norm2 += std::norm(v);
    }
    double s = 1.0 / std::sqrt(norm2);
    for (auto& v : amp) {
        v *= s;
    }
}

}  // namespace

PromiseInstance gen_hamiltonian_evolved(size_t n, const dihedral::DihedralElement& h, double time,
                                        uint64_t seed) {
    check_generator_pre(n, h);
    sim::RngStream rng(seed);
    size_t dima = size_t{1} << n;

    CVec ham = random_hermitian(dima, rng);
    CVec u = symmetry_operator(h);
    CVec uhu = matmul(matmul(u, ham, dima), adjoint(u, dima), dima);
    double fro = 0;
    for (size_t i = 0; i < ham.size(); i++) {
        ham[i] = 0.5 * (ham[i] + uhu[i]);
        fro += std::norm(ham[i]);
    }
    if (std::sqrt(fro) < 1e-10) {
        throw std::runtime_error("gen_hamiltonian_evolved: commutant projection degenerate");
    }
    // normalize to Frobenius norm sqrt(dim) so typical eigenvalues are O(1)
    double scale = std::sqrt(double(dima)) / std::sqrt(fro);
    for (auto& x : ham) {
        x *= scale;
    }

    // |Psi+>^{⊗N}: per site amplitude 1/sqrt2 on |01> and |10>.
    size_t dim = size_t{1} << (2 * n);
    std::vector<sim::cplx> amp(dim, sim::cplx{0, 0});
    const double s = 1.0 / std::numbers::sqrt2;
    for (size_t pattern = 0; pattern < (size_t{1} << n); pattern++) {
        size_t idx = 0;
        for (size_t site = 0; site < n; site++) {
            int a = (pattern >> site) & 1;
            idx |= size_t(a) << (2 * site);
            idx |= size_t(1 - a) << (2 * site + 1);
        }
        amp[idx] = std::pow(s, double(n));
    }
    evolve_a_qubits(amp, ham, n, time);

    PromiseInstance inst;
    inst.generator = "hamiltonian-evolved";
    inst.seed = seed;
    inst.time = time;
    inst.hidden = h;
    inst.amplitudes = std::move(amp);
    inst.hamiltonian = std::move(ham);
    inst.epsilon = certify_epsilon(inst.fresh_copy(0), h);
    return inst;
}

double certify_epsilon(const sim::StateRegister& reg, const dihedral::DihedralElement& h) {
    size_t n = h.sites();
    if (n > 4) {
        throw std::invalid_argument("certify_epsilon: N > 4 exceeds the exhaustive-sweep cap");
    }
    auto identity = dihedral::DihedralElement::identity(n);
    double max_overlap = 0.0;
    size_t count = size_t{1} << (3 * n);
    for (size_t bits = 0; bits < count; bits++) {
        dihedral::DihedralElement g = identity;
        for (size_t s = 0; s < n; s++) {
            g.t.set(s, (bits >> (3 * s)) & 1);
            g.v.set(s, (bits >> (3 * s + 1)) & 1);
            g.w.set(s, (bits >> (3 * s + 2)) & 1);
        }
        if (g == identity || g == h) {
            continue;
        }
        max_overlap = std::max(max_overlap, std::abs(dihedral::expectation(g, reg)));
    }
    double eps = std::max(0.0, 1.0 - max_overlap);
    // Snap round-off residue to an exact 0 so degenerate instances are
    // reliably flagged.
    return eps < 1e-9 ? 0.0 : eps;
}

dihedral::DihedralElement random_involution(size_t n, sim::RngStream& rng) {
    auto h = dihedral::DihedralElement::identity(n);
    for (size_t s = 0; s < n; s++) {
        // involution classes per site: e, s^2, r, rs, rs^2, rs^3
        switch (rng.next_u64() % 6) {
            case 0: break;
            case 1: h.v.set(s, true); break;                      // s^2
            case 2: h.t.set(s, true); break;                      // r
            case 3: h.t.set(s, true); h.w.set(s, true); break;    // rs
            case 4: h.t.set(s, true); h.v.set(s, true); break;    // rs^2
            default: h.t.set(s, true); h.v.set(s, true); h.w.set(s, true);  // rs^3
        }
    }
    return h;
}

dihedral::DihedralElement random_admissible_involution(size_t n, sim::RngStream& rng) {
    auto h = dihedral::DihedralElement::identity(n);
    for (size_t s = 0; s < n; s++) {
        switch (rng.next_u64() % 5) {
            case 0: break;
            case 1: h.t.set(s, true); break;                      // r
            case 2: h.t.set(s, true); h.w.set(s, true); break;    // rs
            case 3: h.t.set(s, true); h.v.set(s, true); break;    // rs^2
            default: h.t.set(s, true); h.v.set(s, true); h.w.set(s, true);  // rs^3
        }
    }
    return h;
}

}  // namespace mshsp::promise
