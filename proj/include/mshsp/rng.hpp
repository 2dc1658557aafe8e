// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mshsp::sim {

/// Audit record of one Born-rule sample.
struct MeasurementRecord {
    std::string tag;
    int outcome = 0;
    double probability = 0.0;
    uint64_t draw_index = 0;

    bool operator==(const MeasurementRecord&) const = default;
};

/// splitmix64 finalizer, used only for seed derivation.
inline uint64_t splitmix64_mix(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Stream-split rule: child_seed(parent, index) = mix(parent) xor mix(index).
/// Identical seeds give bit-identical transcripts; distinct indices give
/// independent streams.
inline uint64_t child_seed(uint64_t parent, uint64_t index) {
    return splitmix64_mix(parent) ^ splitmix64_mix(index);
}

/// Seeded randomness source with a measurement transcript. The engine is
/// std::mt19937_64 (raw draws are portable); uniform doubles are taken as
/// (x >> 11) * 2^-53 to stay platform-independent.
class RngStream {
  public:
    explicit RngStream(uint64_t seed) : seed_(seed), engine_(seed) {}

    uint64_t seed() const { return seed_; }

    RngStream child(uint64_t index) const { return RngStream(child_seed(seed_, index)); }

    uint64_t next_u64() {
        draws_++;
        return engine_();
    }

    /// Uniform in [0, 1).
    double next_double() { return (next_u64() >> 11) * (1.0 / 9007199254740992.0); }

    /// Standard normal via Box-Muller (deterministic across platforms).
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_double();
        double u2 = next_double();
        while (u1 <= 0.0) {
            u1 = next_double();
        }
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// Born-rule sample over outcome probabilities. Branches below the
    /// zero-probability floor (1e-14) are never selected; the sample is
    /// recorded in the transcript.
    int sample_outcome(std::span<const double> probs, std::string_view tag) {
        constexpr double kFloor = 1e-14;
        double total = 0.0;
        bool any_valid = false;
        for (double p : probs) {
            total += p;
            any_valid |= p >= kFloor;
        }
        if (!any_valid || total < kFloor) {
            throw std::runtime_error("sample_outcome: all outcome probabilities vanish");
        }
        uint64_t draw = draws_;
        double u = next_double() * total;
        double cum = 0.0;
        int pick = -1;
        for (size_t i = 0; i < probs.size(); i++) {
            cum += probs[i];
            if (u < cum && probs[i] >= kFloor) {
                pick = static_cast<int>(i);
                break;
            }
        }
        if (pick < 0) {
            // u landed in the round-off tail; take the last valid branch.
            for (size_t i = probs.size(); i-- > 0;) {
                if (probs[i] >= kFloor) {
                    pick = static_cast<int>(i);
                    break;
                }
            }
        }
        transcript_.push_back({std::string(tag), pick, probs[pick], draw});
        return pick;
    }

    const std::vector<MeasurementRecord>& transcript() const { return transcript_; }
    void clear_transcript() { transcript_.clear(); }

  private:
    uint64_t seed_;
    std::mt19937_64 engine_;
    uint64_t draws_ = 0;
    std::vector<MeasurementRecord> transcript_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace mshsp::sim
