// SPDX-License-Identifier: Apache-2.0
#include "mshsp/register.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace mshsp::sim {

std::string role_name(Role role) {
    switch (role) {
        case Role::A: return "A";
        case Role::B: return "B";
        case Role::R: return "R";
        case Role::T: return "T";
        case Role::V: return "V";
        case Role::W: return "W";
    }
    return "?";
}

std::string to_string(const QubitLabel& label) {
    return "(" + std::to_string(label.copy_id) + "," + std::to_string(label.site) + "," +
           role_name(label.role) + ")";
}

std::string to_string(BellOutcome o) {
    switch (o) {
        case BellOutcome::PhiPlus: return "Phi+";
        case BellOutcome::PhiMinus: return "Phi-";
        case BellOutcome::PsiPlus: return "Psi+";
        case BellOutcome::PsiMinus: return "Psi-";
    }
    return "?";
}

StateRegister::StateRegister(std::vector<QubitLabel> labels, std::vector<cplx> amplitudes)
    : labels_(std::move(labels)), amp_(std::move(amplitudes)) {
    if (labels_.size() > kMaxQubits) {
        throw std::invalid_argument("StateRegister: exceeds the " +
                                    std::to_string(kMaxQubits) + "-qubit cap");
    }
    if (amp_.size() != (size_t{1} << labels_.size())) {
        throw std::invalid_argument("StateRegister: amplitude count != 2^qubits");
    }
    for (size_t i = 0; i < labels_.size(); i++) {
        for (size_t j = i + 1; j < labels_.size(); j++) {
            if (labels_[i] == labels_[j]) {
                throw std::invalid_argument("StateRegister: duplicate label " +
                                            to_string(labels_[i]));
            }
        }
    }
    double n = norm();
    if (std::abs(n - 1.0) > 1e-10) {
        throw std::invalid_argument("StateRegister: state is not normalized (norm " +
                                    std::to_string(n) + ")");
    }
}

StateRegister StateRegister::computational_basis(std::vector<QubitLabel> labels, uint64_t index) {
    std::vector<cplx> amp(size_t{1} << labels.size(), cplx{0, 0});
    amp.at(index) = 1.0;
    return StateRegister(std::move(labels), std::move(amp));
}

bool StateRegister::has(const QubitLabel& label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

size_t StateRegister::position(const QubitLabel& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw std::invalid_argument("StateRegister: no live qubit " + to_string(label));
    }
    return static_cast<size_t>(it - labels_.begin());
}

void StateRegister::relabel(const QubitLabel& from, const QubitLabel& to) {
    if (from == to) {
        return;
    }
    if (has(to)) {
        throw std::invalid_argument("relabel: target label already live: " + to_string(to));
    }
    labels_[position(from)] = to;
}

double StateRegister::norm() const {
    double s = 0.0;
    for (const cplx& a : amp_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

cplx StateRegister::inner_product(const StateRegister& other) const {
    if (other.amp_.size() != amp_.size()) {
        throw std::invalid_argument("inner_product: dimension mismatch");
    }
    cplx s{0, 0};
    for (size_t i = 0; i < amp_.size(); i++) {
        s += std::conj(amp_[i]) * other.amp_[i];
    }
    return s;
}

void StateRegister::apply_unitary(const dihedral::SmallUnitary& u,
                                  std::span<const QubitLabel> targets) {
    size_t k = targets.size();
    if (u.dim() != (size_t{1} << k)) {
        throw std::invalid_argument("apply_unitary: dim(u) != 2^#targets");
    }
    std::array<size_t, 3> pos{};
    if (k > 3) {
        throw std::invalid_argument("apply_unitary: at most 3 targets supported");
    }
    uint64_t target_mask = 0;
    for (size_t i = 0; i < k; i++) {
        pos[i] = position(targets[i]);
        target_mask |= uint64_t{1} << pos[i];
    }
    size_t sub = u.dim();
    std::vector<cplx> x(sub), y(sub);
    for (uint64_t base = 0; base < amp_.size(); base++) {
        if (base & target_mask) {
            continue;
        }
        for (size_t j = 0; j < sub; j++) {
            uint64_t idx = base;
            for (size_t l = 0; l < k; l++) {
                if ((j >> l) & 1) {
                    idx |= uint64_t{1} << pos[l];
                }
            }
            x[j] = amp_[idx];
        }
        for (size_t r = 0; r < sub; r++) {
            cplx acc{0, 0};
            for (size_t c = 0; c < sub; c++) {
                acc += u.at(r, c) * x[c];
            }
            y[r] = acc;
        }
        for (size_t j = 0; j < sub; j++) {
            uint64_t idx = base;
            for (size_t l = 0; l < k; l++) {
                if ((j >> l) & 1) {
                    idx |= uint64_t{1} << pos[l];
                }
            }
            amp_[idx] = y[j];
        }
    }
}

void StateRegister::renormalize_after_projection(double branch_probability) {
    if (branch_probability < kZeroProbability) {
        throw std::runtime_error("projection onto a zero-probability branch");
    }
    double s = 1.0 / std::sqrt(branch_probability);
    for (cplx& a : amp_) {
        a *= s;
    }
}

int StateRegister::measure_site_parity(int copy_id, int site, RngStream& rng) {
    QubitLabel la{copy_id, site, Role::A};
    QubitLabel lb{copy_id, site, Role::B};
    if (!has(la) || !has(lb)) {
        throw std::invalid_argument("measure_site_parity: site already collapsed or missing " +
                                    to_string(la));
    }
    size_t pa = position(la);
    size_t pb = position(lb);
    uint64_t ma = uint64_t{1} << pa;
    uint64_t mb = uint64_t{1} << pb;

    double p_even = 0.0, p_odd = 0.0;
    for (uint64_t i = 0; i < amp_.size(); i++) {
        bool a = i & ma;
        bool b = i & mb;
        (a == b ? p_even : p_odd) += std::norm(amp_[i]);
    }
    // pi = 1 for the +1 eigenvalue of Z⊗Z (even subspace).
    std::array<double, 2> probs{p_odd, p_even};
    int pi = rng.sample_outcome(probs, "parity c" + std::to_string(copy_id) + " s" +
                                           std::to_string(site));

    // Partial isometry: Pi_0 = |0><01| + |1><10|, Pi_1 = |0><00| + |1><11|,
    // reading |ab> with the A qubit first. The A slot is relabelled to the
    // residual qubit; the B slot is dropped.
    std::vector<cplx> next(amp_.size() >> 1);
    uint64_t low_mask = (uint64_t{1} << pb) - 1;  // bits strictly below pb
    for (uint64_t j = 0; j < next.size(); j++) {
        uint64_t base = (j & low_mask) | ((j & ~low_mask) << 1);
        int r = (base >> pa) & 1;         // residual bit lives in the old A slot
        uint64_t src = base;
        int a_bit, b_bit;
        if (pi == 1) {
            a_bit = r;
            b_bit = r;
        } else {
            a_bit = r;
            b_bit = 1 - r;
        }
        src = (src & ~ma) | (static_cast<uint64_t>(a_bit) << pa);
        src |= static_cast<uint64_t>(b_bit) << pb;
        next[j] = amp_[src];
    }
    double p = 0.0;
    for (const cplx& a : next) {
        p += std::norm(a);
    }
    amp_ = std::move(next);
    labels_[pa] = QubitLabel{copy_id, site, Role::R};
    labels_.erase(labels_.begin() + static_cast<long>(pb));
    renormalize_after_projection(p);
    return pi;
}

void StateRegister::drop_qubit_positions(std::vector<size_t> positions,
                                         const std::vector<cplx>& projected) {
    std::sort(positions.begin(), positions.end(), std::greater<size_t>());
    amp_ = projected;
    for (size_t p : positions) {
        labels_.erase(labels_.begin() + static_cast<long>(p));
    }
}

int StateRegister::measure_x(const QubitLabel& label, RngStream& rng) {
    apply_unitary(dihedral::hadamard(), label);
    int bit = measure_z(label, rng);
    return bit == 0 ? +1 : -1;
}

int StateRegister::measure_z(const QubitLabel& label, RngStream& rng) {
    size_t p = position(label);
    uint64_t m = uint64_t{1} << p;
    double p1 = 0.0;
    for (uint64_t i = 0; i < amp_.size(); i++) {
        if (i & m) {
            p1 += std::norm(amp_[i]);
        }
    }
    std::array<double, 2> probs{1.0 - p1, p1};
    int bit = rng.sample_outcome(probs, "z " + to_string(label));

    std::vector<cplx> next(amp_.size() >> 1);
    uint64_t low_mask = m - 1;
    for (uint64_t j = 0; j < next.size(); j++) {
        uint64_t src = (j & low_mask) | ((j & ~low_mask) << 1) | (bit ? m : 0);
        next[j] = amp_[src];
    }
    double pr = 0.0;
    for (const cplx& a : next) {
        pr += std::norm(a);
    }
    amp_ = std::move(next);
    labels_.erase(labels_.begin() + static_cast<long>(p));
    renormalize_after_projection(pr);
    return bit;
}

void StateRegister::merge(StateRegister&& other) {
    if (this == &other) {
        throw std::invalid_argument("merge: register with itself");
    }
    if (num_qubits() + other.num_qubits() > kMaxQubits) {
        throw std::runtime_error("merge: would exceed the " + std::to_string(kMaxQubits) +
                                 "-qubit cap on a live register");
    }
    for (const auto& l : other.labels_) {
        if (has(l)) {
            throw std::invalid_argument("merge: duplicate label " + to_string(l));
        }
    }
    std::vector<cplx> merged(amp_.size() * other.amp_.size());
    for (size_t hi = 0; hi < other.amp_.size(); hi++) {
        for (size_t lo = 0; lo < amp_.size(); lo++) {
            merged[hi * amp_.size() + lo] = amp_[lo] * other.amp_[hi];
        }
    }
    labels_.insert(labels_.end(), other.labels_.begin(), other.labels_.end());
    amp_ = std::move(merged);
    other.labels_.clear();
    other.amp_.clear();
}

BellOutcome bell_measure(StateRegister& a, const QubitLabel& label_a, StateRegister& b,
                         const QubitLabel& label_b, RngStream& rng) {
    StateRegister& reg = a;
    if (&a != &b) {
        reg.merge(std::move(b));
    }
    size_t pa = reg.position(label_a);
    size_t pb = reg.position(label_b);
    if (pa == pb) {
        throw std::invalid_argument("bell_measure: identical qubits");
    }
    uint64_t ma = uint64_t{1} << pa;
    uint64_t mb = uint64_t{1} << pb;
    const auto& amp = reg.amplitudes();

    // Outcome order matches BellOutcome: Phi+, Phi-, Psi+, Psi-.
    std::array<double, 4> probs{};
    const double s = 1.0 / std::numbers::sqrt2;
    for (uint64_t i = 0; i < amp.size(); i++) {
        if (i & (ma | mb)) {
            continue;
        }
        cplx c00 = amp[i];
        cplx c01 = amp[i | mb];  // a=0, b=1
        cplx c10 = amp[i | ma];
        cplx c11 = amp[i | ma | mb];
        probs[0] += std::norm((c00 + c11) * s);
        probs[1] += std::norm((c00 - c11) * s);
        probs[2] += std::norm((c01 + c10) * s);
        probs[3] += std::norm((c01 - c10) * s);
    }
    int pick = rng.sample_outcome(probs, "bell " + to_string(label_a) + to_string(label_b));
    auto outcome = static_cast<BellOutcome>(pick);

    std::vector<cplx> next(amp.size() >> 2);
    size_t phi = pa > pb ? pa : pb;
    size_t plo = pa > pb ? pb : pa;
    uint64_t lo_mask = (uint64_t{1} << plo) - 1;
    uint64_t mid_mask = ((uint64_t{1} << (phi - 1)) - 1) & ~lo_mask;
    double pr = 0.0;
    for (uint64_t j = 0; j < next.size(); j++) {
        uint64_t base = (j & lo_mask) | ((j & mid_mask) << 1) | ((j & ~(lo_mask | mid_mask)) << 2);
        cplx c00 = amp[base];
        cplx c01 = amp[base | mb];
        cplx c10 = amp[base | ma];
        cplx c11 = amp[base | ma | mb];
        cplx v;
        switch (outcome) {
            case BellOutcome::PhiPlus: v = (c00 + c11) * s; break;
            case BellOutcome::PhiMinus: v = (c00 - c11) * s; break;
            case BellOutcome::PsiPlus: v = (c01 + c10) * s; break;
            case BellOutcome::PsiMinus: v = (c01 - c10) * s; break;
        }
        next[j] = v;
        pr += std::norm(v);
    }
    if (pr < StateRegister::kZeroProbability) {
        throw std::runtime_error("bell_measure: projection onto a zero-probability branch");
    }
    double scale = 1.0 / std::sqrt(pr);
    for (cplx& v : next) {
        v *= scale;
    }

    // Rebuild the register without the two retired qubits.
    std::vector<QubitLabel> labels;
    labels.reserve(reg.num_qubits() - 2);
    for (size_t i = 0; i < reg.num_qubits(); i++) {
        if (i != pa && i != pb) {
            labels.push_back(reg.labels()[i]);
        }
    }
    reg = StateRegister(std::move(labels), std::move(next));
    return outcome;
}

void StateRegister::dump_amplitudes(std::ostream& out) const {
    auto put_f64 = [&out](double value) {
        uint64_t bits = std::bit_cast<uint64_t>(value);
        char bytes[8];
        for (int i = 0; i < 8; i++) {
            bytes[i] = static_cast<char>((bits >> (8 * i)) & 0xFF);
        }
        out.write(bytes, 8);
    };
    for (const cplx& a : amp_) {
        put_f64(a.real());
        put_f64(a.imag());
    }
}

std::vector<cplx> StateRegister::read_amplitude_dump(std::istream& in) {
    auto get_f64 = [&in](double& value) -> bool {
        char bytes[8];
        if (!in.read(bytes, 8)) {
            return false;
        }
        uint64_t bits = 0;
        for (int i = 0; i < 8; i++) {
            bits |= static_cast<uint64_t>(static_cast<unsigned char>(bytes[i])) << (8 * i);
        }
        value = std::bit_cast<double>(bits);
        return true;
    };
    std::vector<cplx> out;
    double re, im;
    while (get_f64(re)) {
        if (!get_f64(im)) {
            throw std::runtime_error("amplitude dump: odd number of f64 values");
        }
        out.emplace_back(re, im);
    }
    return out;
}

}  // namespace mshsp::sim
