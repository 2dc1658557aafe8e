// SPDX-License-Identifier: Apache-2.0
#include "mshsp/algorithm.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace mshsp::algo {

void TrialLog::event(const std::string& json_line) {
    if (out_) {
        (*out_) << json_line << '\n';
    }
}

namespace {

std::string json_kv(const std::string& k, const std::string& v) {
    return "\"" + k + "\":\"" + v + "\"";
}

std::string json_kv(const std::string& k, uint64_t v) {
    return "\"" + k + "\":" + std::to_string(v);
}

int copy_id_of(const sim::StateRegister& reg) {
    if (reg.num_qubits() == 0) {
        throw std::invalid_argument("copy_id_of: empty register");
    }
    return reg.labels().front().copy_id;
}

}  // namespace

std::string to_string(NullspaceClass c) {
    switch (c) {
        case NullspaceClass::unique: return "unique";
        case NullspaceClass::good_candidate: return "good-candidate";
        case NullspaceClass::undetermined: return "undetermined";
    }
    return "?";
}

bool BellResolvableSet::invariant_holds() const {
    if (members.empty()) {
        return false;
    }
    gf2::BitVec acc(members.front().pi.size());
    for (const auto& m : members) {
        acc ^= m.pi;
    }
    return !acc.any();
}

ParityOutcome parity_sampling(sim::StateRegister copy, sim::RngStream& rng) {
    if (copy.num_qubits() % 2 != 0) {
        throw std::invalid_argument("parity_sampling: expected a 2N-qubit doubled copy");
    }
    size_t n = copy.num_qubits() / 2;
    int copy_id = copy_id_of(copy);
    gf2::BitVec pi(n);
    for (size_t site = 0; site < n; site++) {
        pi.set(site, copy.measure_site_parity(copy_id, static_cast<int>(site), rng));
    }
    return ParityOutcome{std::move(pi), std::move(copy), copy_id};
}

BellResolvableSet accumulate_bell_resolvable(const std::function<ParityOutcome()>& draw,
                                             std::vector<ParityOutcome>& pool,
                                             double delta_budget, double eps_assumed,
                                             TrialLog* log) {
    uint64_t fresh = 0;
    BellResolvableSet set;
    set.members = detail::accumulate_zero_sum_set(draw, pool, delta_budget, eps_assumed, &fresh);
    if (!set.invariant_holds()) {
        throw std::logic_error("accumulate_bell_resolvable: set invariant violated");
    }
    if (log && log->enabled()) {
        std::ostringstream os;
        os << "{" << json_kv("event", std::string("bell_resolvable_set")) << ","
           << json_kv("members", uint64_t(set.members.size())) << ","
           << json_kv("fresh_draws", fresh) << ",\"pi\":[";
        for (size_t i = 0; i < set.members.size(); i++) {
            os << (i ? "," : "") << "\"" << set.members[i].pi.to_string() << "\"";
        }
        os << "]}";
        log->event(os.str());
    }
    return set;
}

namespace {

// Locate the register (by index into regs) holding a label; merged-away
// registers are empty and skipped.
size_t find_register(std::vector<sim::StateRegister>& regs, const sim::QubitLabel& label) {
    for (size_t i = 0; i < regs.size(); i++) {
        if (regs[i].num_qubits() > 0 && regs[i].has(label)) {
            return i;
        }
    }
    throw std::logic_error("bell_resolution: label not found in any live register");
}

}  // namespace

IrrepSample bell_resolution(BellResolvableSet set, sim::RngStream& rng, TrialLog* log) {
    if (set.members.empty()) {
        throw std::invalid_argument("bell_resolution: empty set");
    }
    size_t n = set.members.front().pi.size();
    // Per-site even count of pi = 1 members.
    for (size_t site = 0; site < n; site++) {
        int count = 0;
        for (const auto& m : set.members) {
            count += m.pi.get(site);
        }
        if (count % 2 != 0) {
            throw std::invalid_argument("bell_resolution: odd even-parity member count at site " +
                                        std::to_string(site));
        }
    }

    std::vector<int> copy_ids;
    std::vector<sim::StateRegister> regs;
    regs.reserve(set.members.size());
    for (auto& m : set.members) {
        copy_ids.push_back(m.copy_id);
        regs.push_back(std::move(m.residual));
    }

    gf2::BitVec q(n), p(n);
    for (size_t site = 0; site < n; site++) {
        // X measurements on odd-parity members first, then Bell
        // measurements on even-parity members in ascending index order.
        std::vector<size_t> evens;
        for (size_t m = 0; m < set.members.size(); m++) {
            sim::QubitLabel label{copy_ids[m], static_cast<int>(site), sim::Role::R};
            if (set.members[m].pi.get(site)) {
                evens.push_back(m);
                continue;
            }
            auto& reg = regs[find_register(regs, label)];
            int outcome = reg.measure_x(label, rng);
            if (outcome == -1) {
                q.flip(site);  // |-> carries C^{1,0}
            }
        }
        for (size_t k = 0; k + 1 < evens.size(); k += 2) {
            sim::QubitLabel la{copy_ids[evens[k]], static_cast<int>(site), sim::Role::R};
            sim::QubitLabel lb{copy_ids[evens[k + 1]], static_cast<int>(site), sim::Role::R};
            size_t ia = find_register(regs, la);
            size_t ib = find_register(regs, lb);
            sim::BellOutcome outcome;
            if (ia == ib) {
                outcome = sim::bell_measure(regs[ia], la, regs[ia], lb, rng);
            } else {
                outcome = sim::bell_measure(regs[ia], la, regs[ib], lb, rng);
            }
            // Psi+ -> (0,0), Phi+ -> (0,1), Psi- -> (1,0), Phi- -> (1,1)
            if (sim::bell_xx_bit(outcome)) {
                q.flip(site);
            }
            if (!sim::bell_zz_bit(outcome)) {
                p.flip(site);
            }
        }
    }
    if (log && log->enabled()) {
        log->event("{" + json_kv("event", std::string("irrep_sample")) + "," +
                   json_kv("q", q.to_string()) + "," + json_kv("p", p.to_string()) + "}");
    }
    return IrrepSample{std::move(q), std::move(p)};
}

NullspaceReport collect_nullspace(const std::vector<IrrepSample>& samples, size_t n_sites) {
    gf2::BitMatrix all(2 * n_sites);
    for (const auto& s : samples) {
        all.append_row(s.concat());
    }
    NullspaceReport report;
    report.k_perp = gf2::row_basis(all);
    report.k = gf2::annihilated_subgroup(report.k_perp);
    size_t dim = report.k.nrows();
    if (dim <= 1) {
        report.classification = NullspaceClass::unique;
    } else if (dim <= n_sites) {
        report.classification = NullspaceClass::good_candidate;
    } else {
        report.classification = NullspaceClass::undetermined;
    }
    return report;
}

gf2::BitVec maximal_rotation(const gf2::BitMatrix& k_basis, size_t n_sites) {
    if (k_basis.ncols() != 2 * n_sites) {
        throw std::invalid_argument("maximal_rotation: basis width != 2N");
    }
    gf2::BitVec w_max(n_sites);
    for (size_t i = 0; i < k_basis.nrows(); i++) {
        w_max = w_max | k_basis.row(i).slice(n_sites, n_sites);
    }
    return w_max;
}

namespace {

// One Bell-sampled constraint row on (t|v): coefficient a_n on t_n and
// (b_n xor 1) on v_n, where a and b are the X⊗X and Z⊗Z outcome bits. The
// v coefficient is shifted by the (iZ)^v ⊗ (iZ)^v = (-1)^v Z^v ⊗ Z^v phase
// of the doubled Pauli.
gf2::BitVec bell_constraint_row(sim::StateRegister copy, sim::RngStream& rng) {
    size_t n = copy.num_qubits() / 2;
    int copy_id = copy_id_of(copy);
    gf2::BitVec row(2 * n);
    for (size_t site = 0; site < n; site++) {
        sim::QubitLabel la{copy_id, static_cast<int>(site), sim::Role::A};
        sim::QubitLabel lb{copy_id, static_cast<int>(site), sim::Role::B};
        auto outcome = sim::bell_measure(copy, la, copy, lb, rng);
        row.set(site, sim::bell_xx_bit(outcome));
        row.set(n + site, sim::bell_zz_bit(outcome) ^ 1);
    }
    return row;
}

}  // namespace

std::optional<PauliCandidate> learn_pauli_stabilizer(
    const std::function<sim::StateRegister()>& fresh_copy, uint64_t budget, sim::RngStream& rng,
    bool accept_zero, TrialLog* log) {
    sim::StateRegister probe = fresh_copy();
    size_t n = probe.num_qubits() / 2;
    gf2::BitMatrix constraints(2 * n);
    constraints.append_row(bell_constraint_row(std::move(probe), rng));
    for (uint64_t i = 1; i < budget; i++) {
        constraints.append_row(bell_constraint_row(fresh_copy(), rng));
    }
    gf2::BitMatrix solutions = gf2::nullspace(constraints);

    auto log_result = [&](const std::string& result) {
        if (log && log->enabled()) {
            log->event("{" + json_kv("event", std::string("learn_pauli_stabilizer")) + "," +
                       json_kv("budget", budget) + "," +
                       json_kv("solution_dim", uint64_t(solutions.nrows())) + "," +
                       json_kv("result", result) + "}");
        }
    };

    if (solutions.nrows() == 0) {
        log_result(accept_zero ? "zero" : "none");
        if (accept_zero) {
            return PauliCandidate{gf2::BitVec(n), gf2::BitVec(n)};
        }
        return std::nullopt;
    }
    if (solutions.nrows() > 1) {
        log_result("degenerate");
        return std::nullopt;
    }
    PauliCandidate candidate{solutions.row(0).slice(0, n), solutions.row(0).slice(n, n)};
    // Verification pass: the candidate's constraint residual must vanish on
    // 32 fresh copies.
    gf2::BitVec tv = gf2::BitVec::concat(candidate.t, candidate.v);
    for (int i = 0; i < 32; i++) {
        if (bell_constraint_row(fresh_copy(), rng).dot(tv)) {
            log_result("rejected-by-verification");
            return std::nullopt;
        }
    }
    log_result("candidate");
    return candidate;
}

uint64_t spanning_budget(size_t n, double delta, double eps) {
    if (eps <= 0 || delta <= 0) {
        throw std::invalid_argument("spanning_budget: need eps > 0 and delta > 0");
    }
    return static_cast<uint64_t>(std::ceil((double(n) + std::log(1.0 / delta)) / eps));
}

uint64_t lps_budget(size_t n, double delta, double eps) {
    if (eps <= 0 || delta <= 0) {
        throw std::invalid_argument("lps_budget: need eps > 0 and delta > 0");
    }
    return static_cast<uint64_t>(std::ceil(2.0 * (2.0 * double(n) + std::log(1.0 / delta)) / eps));
}

uint64_t nullspace_sample_count(size_t n, double delta, double eps, double c) {
    if (eps <= 0 || delta <= 0 || c <= 0) {
        throw std::invalid_argument("nullspace_sample_count: need positive parameters");
    }
    return static_cast<uint64_t>(std::ceil(c * (double(n) + std::log(1.0 / delta)) / eps));
}

dihedral::DihedralElement solve_multiple_squares(const promise::PromiseInstance& instance,
                                                 const SolveParams& params, sim::RngStream& rng,
                                                 SolveStats* stats) {
    size_t n = instance.sites();
    double eps = params.epsilon_assumed > 0 ? params.epsilon_assumed : instance.epsilon;
    if (eps <= 0) {
        throw SolveError("setup", "no usable epsilon (degenerate instance?) - undetermined");
    }
    CopySource source(instance);
    TrialLog* log = params.log;
    SolveStats local;
    SolveStats& st = stats ? *stats : local;

    // Step 1: the hidden element may already be a doubled Pauli.
    uint64_t budget1 = lps_budget(n, params.delta, eps);
    auto step1 = learn_pauli_stabilizer([&] { return source.fresh_copy(); }, budget1, rng,
                                        /*accept_zero=*/false, log);
    st.copies_step1 = source.consumed();
    if (step1) {
        st.copies_total = source.consumed();
        st.w_max = gf2::BitVec(n);
        dihedral::DihedralElement result(step1->t, step1->v, gf2::BitVec(n));
        if (log && log->enabled()) {
            log->event("{\"event\":\"result\",\"h\":\"" + result.to_string() + "\"}");
        }
        return result;
    }

    // Step 2: Fourier sampling on the quotient to pin w_max.
    uint64_t n_samples = nullspace_sample_count(n, params.delta, eps, params.budget_c);
    double delta_budget = params.delta / (2.0 * double(n_samples));
    std::vector<ParityOutcome> pool;
    std::vector<IrrepSample> samples;
    samples.reserve(n_samples);
    auto draw = [&] {
        auto out = parity_sampling(source.fresh_copy(), rng);
        if (log && log->enabled()) {
            log->event("{\"event\":\"parity_sample\",\"copy\":" + std::to_string(out.copy_id) +
                       ",\"pi\":\"" + out.pi.to_string() + "\"}");
        }
        return out;
    };
    for (uint64_t i = 0; i < n_samples; i++) {
        auto set = accumulate_bell_resolvable(draw, pool, delta_budget, eps, log);
        samples.push_back(bell_resolution(std::move(set), rng, log));
    }
    NullspaceReport report = collect_nullspace(samples, n);
    st.nullspace_class = report.classification;
    gf2::BitVec w_max = maximal_rotation(report.k, n);
    st.w_max = w_max;
    st.copies_step2 = source.consumed() - st.copies_step1;
    if (log && log->enabled()) {
        log->event(std::string("{\"event\":\"nullspace\",\"dim\":") +
                   std::to_string(report.k.nrows()) + ",\"classification\":\"" +
                   to_string(report.classification) + "\",\"w_max\":\"" + w_max.to_string() +
                   "\"}");
    }

    // Steps 3 + 4: rotate fresh copies into the Pauli frame and learn (t, v).
    auto rotated_copy = [&] {
        auto copy = source.fresh_copy();
        dihedral::t_layer_apply(w_max, copy, copy.labels().front().copy_id);
        return copy;
    };
    auto step4 = learn_pauli_stabilizer(rotated_copy, budget1, rng, /*accept_zero=*/true, log);
    st.copies_step4 = source.consumed() - st.copies_step1 - st.copies_step2;
    st.copies_total = source.consumed();
    if (!step4) {
        throw SolveError("step4", "degenerate Pauli solution space - undetermined");
    }

    // Step 5: w^h = t^h ⊙ w_max.
    gf2::BitVec w = step4->t & w_max;
    dihedral::DihedralElement result(step4->t, step4->v, w);
    if (log && log->enabled()) {
        log->event("{\"event\":\"result\",\"h\":\"" + result.to_string() + "\"}");
    }
    return result;
}

}  // namespace mshsp::algo
