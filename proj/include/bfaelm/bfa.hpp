#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "bfaelm/random.hpp"

namespace bfaelm {

using FitnessFn = std::function<double(const std::vector<double>&)>;

struct BfaConfig {
    std::size_t population = 20;       // S, must be even
    std::size_t chemotaxis_steps = 25; // N_c
    std::size_t reproductions = 4;     // N_re
    std::size_t dispersals = 2;        // N_ed
    std::size_t max_swim = 4;          // N_s
    double step_length = 0.1;          // s_p
    double dispersal_prob = 0.25;      // P_ed
    std::size_t dim = 1;

    void validate() const;
};

struct Bacterium {
    std::vector<double> position;  // each component in [0,1]
    double fitness = 0.0;          // lower is better
    double health = 0.0;           // accumulated fitness over the current chemotaxis loop
};

struct BfaResult {
    std::vector<double> best_position;
    double best_fitness = 0.0;
    std::vector<double> trace;  // best-so-far per chemotaxis step, non-increasing
    std::size_t evaluations = 0;
};

// Unit vector away from a fresh uniform point, resampled if it coincides
// with the current position.
std::vector<double> tumble_direction(const std::vector<double>& position, RandomStream& stream);

// One tumble move of length R * s_p along a fresh direction, followed by up to
// N_s swims along the same displacement while fitness strictly improves. The
// final position is kept only if it does not worsen the pre-move fitness;
// health accumulates every evaluated fitness either way.
Bacterium chemotaxis_move(const Bacterium& b, const FitnessFn& fitness_fn, const BfaConfig& cfg,
                          RandomStream& stream);

// Test hook: same move with the tumble direction and R fixed by the caller.
Bacterium chemotaxis_move_forced(const Bacterium& b, const FitnessFn& fitness_fn,
                                 const BfaConfig& cfg, const std::vector<double>& direction,
                                 double r);

// Healthiest half (lowest accumulated fitness) splits in two, the rest dies.
// Stable order: ties keep the original index ordering. Health resets to zero.
std::vector<Bacterium> reproduce(const std::vector<Bacterium>& population);

// Each bacterium independently relocates to a fresh uniform position with
// probability P_ed and is re-evaluated.
std::vector<Bacterium> eliminate_disperse(const std::vector<Bacterium>& population,
                                          const BfaConfig& cfg, RandomStream& stream,
                                          const FitnessFn& fitness_fn);

BfaResult optimize(const FitnessFn& fitness_fn, const BfaConfig& cfg, RandomStream& stream);

}  // namespace bfaelm
