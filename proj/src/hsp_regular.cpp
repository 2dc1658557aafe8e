// SPDX-License-Identifier: Apache-2.0
#include "mshsp/hsp_regular.hpp"

#include <array>
#include <cmath>

namespace mshsp::reghsp {

namespace {

// i^e for e mod 4, exact.
sim::cplx ipow(int e) {
    switch (((e % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

std::vector<sim::QubitLabel> coset_labels(size_t n, int copy_id) {
    std::vector<sim::QubitLabel> labels;
    labels.reserve(3 * n);
    for (size_t s = 0; s < n; s++) {
        labels.push_back({copy_id, static_cast<int>(s), sim::Role::T});
        labels.push_back({copy_id, static_cast<int>(s), sim::Role::V});
        labels.push_back({copy_id, static_cast<int>(s), sim::Role::W});
    }
    return labels;
}

uint64_t group_index(const dihedral::DihedralElement& g) {
    uint64_t idx = 0;
    for (size_t s = 0; s < g.sites(); s++) {
        uint64_t site = uint64_t(g.t.get(s)) | (uint64_t(g.v.get(s)) << 1) |
                        (uint64_t(g.w.get(s)) << 2);
        idx |= site << (3 * s);
    }
    return idx;
}

}  // namespace

dihedral::SmallUnitary build_pft_site() {
    // Columns are the block-register basis |d, sigma, pi> expressed in the
    // group basis |t, k>: U[t + 2v + 4w][d + 2s + 4p] = delta_{t,d} *
    // (1/2) i^{-(2s+p)(2v+w)}. A momentum-(2 sigma + pi) Fourier vector of
    // the rotation register, paired with the reflection qubit, spans an
    // invariant 2-plane on which left multiplication acts exactly as
    // D^{2 sigma + pi}.
    dihedral::SmallUnitary u(8);
    for (int d = 0; d < 2; d++) {
        for (int sg = 0; sg < 2; sg++) {
            for (int pi = 0; pi < 2; pi++) {
                int m = 2 * sg + pi;
                for (int v = 0; v < 2; v++) {
                    for (int w = 0; w < 2; w++) {
                        int k = 2 * v + w;
                        u.at(d + 2 * v + 4 * w, d + 2 * sg + 4 * pi) = 0.5 * ipow(-m * k);
                    }
                }
            }
        }
    }
    return u;
}

CosetState prepare_coset_state(const dihedral::DihedralElement& h, int copy_id,
                               sim::RngStream& rng) {
    if (!dihedral::is_involution(h)) {
        throw std::invalid_argument("prepare_coset_state: h is not an involution");
    }
    size_t n = h.sites();
    auto g = dihedral::DihedralElement::identity(n);
    for (size_t s = 0; s < n; s++) {
        uint64_t bits = rng.next_u64();
        g.t.set(s, bits & 1);
        g.v.set(s, (bits >> 1) & 1);
        g.w.set(s, (bits >> 2) & 1);
    }
    auto hg = dihedral::compose(h, g);
    std::vector<sim::cplx> amp(size_t{1} << (3 * n), sim::cplx{0, 0});
    if (hg == g) {  // h = e
        amp[group_index(g)] = 1.0;
    } else {
        const double s = 1.0 / std::numbers::sqrt2;
        amp[group_index(g)] = s;
        amp[group_index(hg)] = s;
    }
    return CosetState(coset_labels(n, copy_id), std::move(amp));
}

PftLabels partial_fourier_sampling(CosetState state, sim::RngStream& rng) {
    if (state.num_qubits() % 3 != 0) {
        throw std::invalid_argument("partial_fourier_sampling: expected a 3N-qubit register");
    }
    size_t n = state.num_qubits() / 3;
    int copy_id = state.labels().front().copy_id;
    auto u_dag = build_pft_site().adjoint();
    PftLabels out;
    out.sigma = gf2::BitVec(n);
    out.pi = gf2::BitVec(n);
    out.copy_id = copy_id;
    for (size_t s = 0; s < n; s++) {
        int site = static_cast<int>(s);
        std::array<sim::QubitLabel, 3> targets = {sim::QubitLabel{copy_id, site, sim::Role::T},
                                                  sim::QubitLabel{copy_id, site, sim::Role::V},
                                                  sim::QubitLabel{copy_id, site, sim::Role::W}};
        state.apply_unitary(u_dag, targets);
        // After U†, the former T slot carries the D register and the V/W
        // slots carry sigma/pi.
        out.sigma.set(s, state.measure_z({copy_id, site, sim::Role::V}, rng));
        out.pi.set(s, state.measure_z({copy_id, site, sim::Role::W}, rng));
        state.relabel({copy_id, site, sim::Role::T}, {copy_id, site, sim::Role::R});
    }
    out.residual = std::move(state);
    return out;
}

algo::IrrepSample bell_resolution_general(std::vector<PftLabels> set, sim::RngStream& rng,
                                          algo::TrialLog* log) {
    if (set.empty()) {
        throw std::invalid_argument("bell_resolution_general: empty set");
    }
    size_t n = set.front().pi.size();
    gf2::BitVec sigma_sum(n);
    algo::BellResolvableSet inner;
    for (auto& m : set) {
        sigma_sum ^= m.sigma;
        inner.members.push_back(
            algo::ParityOutcome{std::move(m.pi), std::move(m.residual), m.copy_id});
    }
    auto sample = algo::bell_resolution(std::move(inner), rng, nullptr);
    // Reinterpret the Bell outcomes under the sigma-dependent sign:
    // D^{2 sigma + pi} = (-1)^{sigma w} D^pi, so the sampled character's p
    // bit flips wherever the summed sigma is odd.
    sample.p ^= sigma_sum;
    if (log && log->enabled()) {
        log->event("{\"event\":\"irrep_sample_general\",\"q\":\"" + sample.q.to_string() +
                   "\",\"p\":\"" + sample.p.to_string() + "\"}");
    }
    return sample;
}

void s_correction_classical(const gf2::BitVec& w_max, PftLabels& sample) {
    size_t n = sample.pi.size();
    if (w_max.size() != n) {
        throw std::invalid_argument("s_correction_classical: w_max width mismatch");
    }
    auto s_dag = dihedral::gate_s().adjoint();
    auto z = dihedral::pauli_z();
    for (size_t s = 0; s < n; s++) {
        if (!w_max.get(s)) {
            continue;
        }
        sim::QubitLabel label{sample.copy_id, static_cast<int>(s), sim::Role::R};
        if (sample.pi.get(s)) {
            sample.residual.apply_unitary(s_dag, label);
        }
        if (sample.sigma.get(s)) {
            sample.residual.apply_unitary(z, label);
        }
    }
}

dihedral::SmallUnitary s_correction_coherent_site(bool w_max_bit) {
    if (!w_max_bit) {
        return dihedral::SmallUnitary::identity(8);
    }
    auto u = build_pft_site();
    dihedral::SmallUnitary control(8);
    auto s_dag = dihedral::gate_s().adjoint();
    auto z = dihedral::pauli_z();
    for (int sg = 0; sg < 2; sg++) {
        for (int pi = 0; pi < 2; pi++) {
            auto gate = dihedral::SmallUnitary::identity(2);
            if (pi) {
                gate = s_dag * gate;
            }
            if (sg) {
                gate = z * gate;
            }
            for (int a = 0; a < 2; a++) {
                for (int b = 0; b < 2; b++) {
                    control.at(a + 2 * sg + 4 * pi, b + 2 * sg + 4 * pi) = gate.at(a, b);
                }
            }
        }
    }
    return u * control * u.adjoint();
}

std::optional<algo::PauliCandidate> learn_pauli_like(
    const std::function<PftLabels()>& corrected_sample, uint64_t budget, sim::RngStream& rng,
    bool accept_zero, algo::TrialLog* log) {
    auto constraint_row = [&](PftLabels sample) {
        size_t n = sample.pi.size();
        gf2::BitVec row(2 * n);
        for (size_t s = 0; s < n; s++) {
            sim::QubitLabel label{sample.copy_id, static_cast<int>(s), sim::Role::R};
            int x = sample.residual.measure_x(label, rng) == -1 ? 1 : 0;
            row.set(s, x);
            row.set(n + s, sample.pi.get(s));
        }
        return row;
    };

    PftLabels probe = corrected_sample();
    size_t n = probe.pi.size();
    gf2::BitMatrix constraints(2 * n);
    constraints.append_row(constraint_row(std::move(probe)));
    for (uint64_t i = 1; i < budget; i++) {
        constraints.append_row(constraint_row(corrected_sample()));
    }
    gf2::BitMatrix solutions = gf2::nullspace(constraints);

    auto log_result = [&](const std::string& result) {
        if (log && log->enabled()) {
            log->event("{\"event\":\"learn_pauli_like\",\"budget\":" + std::to_string(budget) +
                       ",\"solution_dim\":" + std::to_string(solutions.nrows()) +
                       ",\"result\":\"" + result + "\"}");
        }
    };

    if (solutions.nrows() == 0) {
        log_result(accept_zero ? "zero" : "none");
        if (accept_zero) {
            return algo::PauliCandidate{gf2::BitVec(n), gf2::BitVec(n)};
        }
        return std::nullopt;
    }
    if (solutions.nrows() > 1) {
        log_result("degenerate");
        return std::nullopt;
    }
    algo::PauliCandidate candidate{solutions.row(0).slice(0, n), solutions.row(0).slice(n, n)};
    gf2::BitVec tv = gf2::BitVec::concat(candidate.t, candidate.v);
    for (int i = 0; i < 32; i++) {
        if (constraint_row(corrected_sample()).dot(tv)) {
            log_result("rejected-by-verification");
            return std::nullopt;
        }
    }
    log_result("candidate");
    return candidate;
}

dihedral::DihedralElement solve_hsp(CosetSource& source, double delta, sim::RngStream& rng,
                                    algo::SolveStats* stats, algo::TrialLog* log,
                                    double budget_c) {
    size_t n = source.sites();
    const double eps = 1.0;  // the HSP is the StateHSP on the regular rep with epsilon = 1
    algo::SolveStats local;
    algo::SolveStats& st = stats ? *stats : local;

    auto raw_sample = [&] {
        auto out = partial_fourier_sampling(source.fresh_state(), rng);
        if (log && log->enabled()) {
            log->event("{\"event\":\"pft_sample\",\"copy\":" + std::to_string(out.copy_id) +
                       ",\"sigma\":\"" + out.sigma.to_string() + "\",\"pi\":\"" +
                       out.pi.to_string() + "\"}");
        }
        return out;
    };

    // Step 1: catch Pauli-like hidden elements (w^h = 0).
    uint64_t budget1 = algo::lps_budget(n, delta, eps);
    auto step1 = learn_pauli_like(raw_sample, budget1, rng, /*accept_zero=*/false, log);
    st.copies_step1 = source.consumed();
    if (step1) {
        st.copies_total = source.consumed();
        st.w_max = gf2::BitVec(n);
        dihedral::DihedralElement result(step1->t, step1->v, gf2::BitVec(n));
        if (log && log->enabled()) {
            log->event("{\"event\":\"result\",\"mode\":\"regular-hsp\",\"h\":\"" +
                       result.to_string() + "\"}");
        }
        return result;
    }

    // Step 2: Fourier sampling on the quotient via sign-corrected Bell
    // resolution.
    uint64_t n_samples = algo::nullspace_sample_count(n, delta, eps, budget_c);
    double delta_budget = delta / (2.0 * double(n_samples));
    std::vector<PftLabels> pool;
    std::vector<algo::IrrepSample> samples;
    samples.reserve(n_samples);
    std::function<PftLabels()> draw = raw_sample;
    for (uint64_t i = 0; i < n_samples; i++) {
        auto members =
            algo::detail::accumulate_zero_sum_set(draw, pool, delta_budget, eps, nullptr);
        samples.push_back(bell_resolution_general(std::move(members), rng, log));
    }
    auto report = algo::collect_nullspace(samples, n);
    st.nullspace_class = report.classification;
    gf2::BitVec w_max = algo::maximal_rotation(report.k, n);
    st.w_max = w_max;
    st.copies_step2 = source.consumed() - st.copies_step1;
    if (log && log->enabled()) {
        log->event("{\"event\":\"nullspace\",\"dim\":" + std::to_string(report.k.nrows()) +
                   ",\"classification\":\"" + to_string(report.classification) +
                   "\",\"w_max\":\"" + w_max.to_string() + "\"}");
    }

    // Steps 3 + 4: classically controlled S correction, then Pauli-like
    // learning on corrected samples.
    auto corrected = [&] {
        auto sample = raw_sample();
        s_correction_classical(w_max, sample);
        return sample;
    };
    auto step4 = learn_pauli_like(corrected, budget1, rng, /*accept_zero=*/true, log);
    st.copies_step4 = source.consumed() - st.copies_step1 - st.copies_step2;
    st.copies_total = source.consumed();
    if (!step4) {
        throw algo::SolveError("step4", "degenerate Pauli-like solution space - undetermined");
    }

    gf2::BitVec w = step4->t & w_max;
    dihedral::DihedralElement result(step4->t, step4->v, w);
    if (log && log->enabled()) {
        log->event("{\"event\":\"result\",\"mode\":\"regular-hsp\",\"h\":\"" + result.to_string() +
                   "\"}");
    }
    return result;
}

}  // namespace mshsp::reghsp
