// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mshsp/dihedral.hpp"
#include "mshsp/gf2.hpp"
#include "mshsp/promise.hpp"
#include "mshsp/register.hpp"

namespace mshsp::algo {

/// One parity-sampling result: the N-bit outcome and the N collapsed
/// residual qubits.
struct ParityOutcome {
    gf2::BitVec pi;
    sim::StateRegister residual;
    int copy_id = 0;
};

/// Parity outcomes whose bitstrings XOR to zero (member 0 distinguished),
/// so every site hosts an even number of two-dimensional factors.
struct BellResolvableSet {
    std::vector<ParityOutcome> members;

    size_t size() const { return members.size(); }
    /// Per-site even-count invariant, equivalently sum_m pi^m = 0.
    bool invariant_holds() const;
};

struct IrrepSample {
    gf2::BitVec q, p;

    gf2::BitVec concat() const { return gf2::BitVec::concat(q, p); }
};

enum class NullspaceClass { unique, good_candidate, undetermined };

std::string to_string(NullspaceClass c);

struct NullspaceReport {
    gf2::BitMatrix k_perp;  // row basis of sampled characters (q|p)
    gf2::BitMatrix k;       // annihilated subgroup basis (t|w)
    NullspaceClass classification = NullspaceClass::undetermined;
};

/// Structured JSON-lines sink for subroutine observability. A null stream
/// disables logging.
class TrialLog {
  public:
    TrialLog() = default;
    explicit TrialLog(std::ostream* out) : out_(out) {}
    void event(const std::string& json_line);
    bool enabled() const { return out_ != nullptr; }

  private:
    std::ostream* out_ = nullptr;
};

/// Budget-exceeded failure carrying the partial span accumulated so far.
class BudgetExceededError : public std::runtime_error {
  public:
    BudgetExceededError(std::string stage, gf2::BitMatrix partial_span)
        : std::runtime_error("sample budget exceeded in stage: " + stage),
          stage_(std::move(stage)),
          partial_span_(std::move(partial_span)) {}

    const std::string& stage() const { return stage_; }
    const gf2::BitMatrix& partial_span() const { return partial_span_; }

  private:
    std::string stage_;
    gf2::BitMatrix partial_span_;
};

class SolveError : public std::runtime_error {
  public:
    SolveError(std::string stage, const std::string& what)
        : std::runtime_error("[" + stage + "] " + what), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

  private:
    std::string stage_;
};

/// Provider of fresh promise-state copies with a consumed-copies counter.
class CopySource {
  public:
    explicit CopySource(const promise::PromiseInstance& instance)
        : instance_(&instance) {}

    sim::StateRegister fresh_copy() { return instance_->fresh_copy(next_copy_id_++); }
    int next_copy_id() const { return next_copy_id_; }
    uint64_t consumed() const { return next_copy_id_; }
    size_t sites() const { return instance_->sites(); }

  private:
    const promise::PromiseInstance* instance_;
    int next_copy_id_ = 0;
};

/// Budget helpers (natural logarithm throughout).
uint64_t spanning_budget(size_t n, double delta, double eps);
uint64_t lps_budget(size_t n, double delta, double eps);
uint64_t nullspace_sample_count(size_t n, double delta, double eps, double c);

/// Transversal Z⊗Z measurement of every site in site order.
ParityOutcome parity_sampling(sim::StateRegister copy, sim::RngStream& rng);

namespace detail {

/// Shared accumulation engine for zero-XOR outcome sets (doubled-rep parity
/// outcomes and regular-rep partial-Fourier labels): draw a fresh first
/// outcome, grow a greedy basis from the pool plus fresh draws until the
/// first outcome's bitstring is expressible, and hand back the selected
/// members with the unused ones left pooled. Outcome must expose `.pi`.
template <typename Outcome>
std::vector<Outcome> accumulate_zero_sum_set(const std::function<Outcome()>& draw,
                                             std::vector<Outcome>& pool, double delta_budget,
                                             double eps_assumed, uint64_t* fresh_draws) {
    Outcome first = draw();
    size_t n = first.pi.size();
    uint64_t budget = spanning_budget(n, delta_budget, eps_assumed);

    std::vector<size_t> basis_idx;
    gf2::BitMatrix basis(n);
    for (size_t i = 0; i < pool.size(); i++) {
        if (!gf2::span_contains(basis, pool[i].pi)) {
            basis.append_row(pool[i].pi);
            basis_idx.push_back(i);
        }
    }

    uint64_t fresh = 0;
    std::optional<gf2::BitVec> coeffs;
    while (!(coeffs = gf2::solve(basis, first.pi))) {
        if (fresh >= budget) {
            throw BudgetExceededError("accumulate-bell-resolvable", basis);
        }
        Outcome next = draw();
        fresh++;
        if (!gf2::span_contains(basis, next.pi)) {
            basis.append_row(next.pi);
            basis_idx.push_back(pool.size());
        }
        pool.push_back(std::move(next));
    }
    if (fresh_draws) {
        *fresh_draws = fresh + 1;
    }

    std::vector<Outcome> members;
    members.push_back(std::move(first));
    std::vector<size_t> consumed;
    for (size_t i = 0; i < basis.nrows(); i++) {
        if (coeffs->get(i)) {
            consumed.push_back(basis_idx[i]);
        }
    }
    for (size_t idx : consumed) {
        members.push_back(std::move(pool[idx]));
    }
    std::sort(consumed.begin(), consumed.end(), std::greater<size_t>());
    for (size_t idx : consumed) {
        pool.erase(pool.begin() + static_cast<long>(idx));
    }
    return members;
}

}  // namespace detail

/// Accumulate a Bell-resolvable set: a fresh pi^0 plus a subset of basis
/// outcomes summing to pi^0. Unused outcomes stay in `pool` for reuse by
/// later sets; pool entries may be consumed by this call. `draw` must
/// yield fresh ParityOutcomes (counting copies at the call site). The
/// budget of fresh draws after pi^0 is ceil((N + ln(1/delta_budget)) /
/// eps_assumed); exceeding it raises BudgetExceededError with the partial
/// span.
BellResolvableSet accumulate_bell_resolvable(const std::function<ParityOutcome()>& draw,
                                             std::vector<ParityOutcome>& pool,
                                             double delta_budget, double eps_assumed,
                                             TrialLog* log = nullptr);

/// X measurements on odd-parity sites and Bell measurements on even-parity
/// site pairs (ascending member-index order), XOR-accumulated into an
/// irrep label (q, p). Consumes the set's registers.
IrrepSample bell_resolution(BellResolvableSet set, sim::RngStream& rng, TrialLog* log = nullptr);

NullspaceReport collect_nullspace(const std::vector<IrrepSample>& samples, size_t n_sites);

/// Bitwise OR of the w-halves of the nullspace basis rows (basis
/// independent).
gf2::BitVec maximal_rotation(const gf2::BitMatrix& k_basis, size_t n_sites);

struct PauliCandidate {
    gf2::BitVec t, v;
    bool is_zero() const { return !t.any() && !v.any(); }
};

/// Bell-sample `budget` copies, solve the accumulated GF(2) constraints on
/// (t, v), and return the candidate if the solution space is {0, (t,v)}
/// and a 32-copy verification pass accepts. A zero-dimensional solution
/// space returns the zero candidate only when `accept_zero` is set (sound
/// at Step 4, where the promise guarantees a Pauli stabilizer).
std::optional<PauliCandidate> learn_pauli_stabilizer(
    const std::function<sim::StateRegister()>& fresh_copy, uint64_t budget, sim::RngStream& rng,
    bool accept_zero, TrialLog* log = nullptr);

struct SolveParams {
    double delta = 0.05;
    double budget_c = 2.0;
    double epsilon_assumed = 0.0;  // 0 means: use the instance's certified value
    TrialLog* log = nullptr;
};

struct SolveStats {
    uint64_t copies_step1 = 0;
    uint64_t copies_step2 = 0;
    uint64_t copies_step4 = 0;
    uint64_t copies_total = 0;
    gf2::BitVec w_max;
    NullspaceClass nullspace_class = NullspaceClass::undetermined;
};

/// The five-step Multiple-Squares StateHSP solver.
dihedral::DihedralElement solve_multiple_squares(const promise::PromiseInstance& instance,
                                                 const SolveParams& params, sim::RngStream& rng,
                                                 SolveStats* stats = nullptr);

}  // namespace mshsp::algo
