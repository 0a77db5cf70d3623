#pragma once

// Enumeration and verification campaigns: exhaustive desk-scale confirmation
// of the theorems plus reproduction of every constructive counterexample.
// Reports are deterministic for a fixed seed and config.

#include <cstdint>
#include <string>
#include <vector>

#include "setlogic/json_util.hpp"

namespace setlogic {

struct HarnessConfig {
    std::uint64_t seed = 0x5E7;
    std::uint64_t samples = 100000;
    int jobs = 0;  // 0 = use hardware concurrency
};

struct Violation {
    std::uint64_t candidate_index = 0;
    Json candidate;  // full replay data
    std::string property;
    Json witness;
};

struct Report {
    std::string campaign;
    std::uint64_t candidates = 0;
    std::vector<Violation> violations;
    double wall_clock_seconds = 0.0;
    std::uint64_t seed = 0;

    bool ok() const { return violations.empty(); }
    // Line-delimited violation records plus a trailing summary. Timing is
    // reported separately (stderr in the CLI) so identical seed and config
    // produce byte-identical records.
    std::string to_records() const;
};

struct Campaign {
    std::string name;
    std::string generator;
    // Exact candidate count for exhaustive generators; 0 when seeded sampling
    // decides the count at run time.
    std::uint64_t cardinality = 0;
    std::vector<std::string> properties;
};

const std::vector<Campaign>& campaign_registry();

Report run_campaign(const std::string& name, const HarnessConfig& config = {});

// Pre-registered bundles: thm2, thm4, thm6, prop1, lemma2, lewis-finite,
// counterexamples; plus logic and all.
std::vector<std::string> theorem_suite_names();
const std::vector<std::string>& suite_campaigns(const std::string& suite);
std::vector<Report> run_theorem_suite(const std::string& name,
                                      const HarnessConfig& config = {});

// Deterministic splitmix64 stream; stable across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    std::uint32_t bits(int count) {
        return count == 0 ? 0u
                          : static_cast<std::uint32_t>(next() & ((1ull << count) - 1ull));
    }

private:
    std::uint64_t state_;
};

}  // namespace setlogic
