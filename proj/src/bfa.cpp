#include "bfaelm/bfa.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bfaelm {

namespace {

void check_position(const std::vector<double>& position) {
    if (position.empty()) throw std::invalid_argument("bfa: empty position");
    for (double v : position)
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("bfa: position component outside [0,1]");
}

double checked_fitness(const FitnessFn& fitness_fn, const std::vector<double>& position) {
    const double j = fitness_fn(position);
    if (!std::isfinite(j)) {
        std::ostringstream msg;
        msg << "bfa: fitness function returned non-finite value at position (";
        for (std::size_t i = 0; i < position.size(); ++i)
            msg << (i ? ", " : "") << position[i];
        msg << ")";
        throw std::runtime_error(msg.str());
    }
    return j;
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

void BfaConfig::validate() const {
    if (population < 2 || population % 2 != 0)
        throw std::invalid_argument("BfaConfig: population must be even and >= 2");
    if (chemotaxis_steps == 0 || reproductions == 0 || dispersals == 0)
        throw std::invalid_argument("BfaConfig: N_c, N_re, N_ed must be >= 1");
    if (!(step_length > 0.0)) throw std::invalid_argument("BfaConfig: step length must be > 0");
    if (!(dispersal_prob >= 0.0 && dispersal_prob <= 1.0))
        throw std::invalid_argument("BfaConfig: dispersal probability must be in [0,1]");
    if (dim == 0) throw std::invalid_argument("BfaConfig: dim must be >= 1");
}

std::vector<double> tumble_direction(const std::vector<double>& position, RandomStream& stream) {
    check_position(position);
    const std::size_t d = position.size();
    std::vector<double> delta(d);
    double norm = 0.0;
    do {
        norm = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            delta[i] = position[i] - stream.uniform(0.0, 1.0);
            norm += delta[i] * delta[i];
        }
    } while (norm == 0.0);
    norm = std::sqrt(norm);
    for (double& v : delta) v /= norm;
    return delta;
}

Bacterium chemotaxis_move_forced(const Bacterium& b, const FitnessFn& fitness_fn,
                                 const BfaConfig& cfg, const std::vector<double>& direction,
                                 double r) {
    if (direction.size() != b.position.size())
        throw std::invalid_argument("chemotaxis_move: direction dimension mismatch");
    const double step = r * cfg.step_length;

    Bacterium out = b;
    for (std::size_t i = 0; i < out.position.size(); ++i)
        out.position[i] = clamp01(out.position[i] + step * direction[i]);
    double fitness = checked_fitness(fitness_fn, out.position);
    out.health += fitness;

    double previous = b.fitness;
    std::size_t swims = 0;
    while (fitness < previous && swims < cfg.max_swim) {
        previous = fitness;
        for (std::size_t i = 0; i < out.position.size(); ++i)
            out.position[i] = clamp01(out.position[i] + step * direction[i]);
        fitness = checked_fitness(fitness_fn, out.position);
        out.health += fitness;
        ++swims;
    }
    out.fitness = fitness;

    // A move that ends worse than where it started is abandoned.
    if (out.fitness > b.fitness) {
        out.position = b.position;
        out.fitness = b.fitness;
    }
    return out;
}

Bacterium chemotaxis_move(const Bacterium& b, const FitnessFn& fitness_fn, const BfaConfig& cfg,
                          RandomStream& stream) {
    const std::vector<double> direction = tumble_direction(b.position, stream);
    const double r = stream.uniform(0.0, 1.0);
    return chemotaxis_move_forced(b, fitness_fn, cfg, direction, r);
}

std::vector<Bacterium> reproduce(const std::vector<Bacterium>& population) {
    if (population.empty() || population.size() % 2 != 0)
        throw std::invalid_argument("reproduce: population size must be even and >= 2");
    std::vector<std::size_t> order(population.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return population[a].health < population[b].health;
    });

    std::vector<Bacterium> next;
    next.reserve(population.size());
    const std::size_t survivors = population.size() / 2;
    for (std::size_t round = 0; round < 2; ++round) {
        for (std::size_t i = 0; i < survivors; ++i) {
            Bacterium child = population[order[i]];
            child.health = 0.0;
            next.push_back(std::move(child));
        }
    }
    return next;
}

std::vector<Bacterium> eliminate_disperse(const std::vector<Bacterium>& population,
                                          const BfaConfig& cfg, RandomStream& stream,
                                          const FitnessFn& fitness_fn) {
    std::vector<Bacterium> next = population;
    for (auto& b : next) {
        if (stream.uniform(0.0, 1.0) < cfg.dispersal_prob) {
            for (double& v : b.position) v = stream.uniform(0.0, 1.0);
            b.fitness = checked_fitness(fitness_fn, b.position);
        }
    }
    return next;
}

BfaResult optimize(const FitnessFn& fitness_fn, const BfaConfig& cfg, RandomStream& stream) {
    cfg.validate();

    BfaResult result;
    result.best_fitness = std::numeric_limits<double>::infinity();

    // Every fitness call funnels through this wrapper so the evaluation count
    // and the best-so-far tracking see swim intermediates and rejected moves.
    const FitnessFn eval = [&](const std::vector<double>& position) {
        const double j = checked_fitness(fitness_fn, position);
        ++result.evaluations;
        if (j < result.best_fitness) {
            result.best_fitness = j;
            result.best_position = position;
        }
        return j;
    };

    std::vector<Bacterium> population;
    population.reserve(cfg.population);
    for (std::size_t i = 0; i < cfg.population; ++i) {
        RandomStream init = stream.child("init", i);
        Bacterium b;
        b.position.resize(cfg.dim);
        for (double& v : b.position) v = init.uniform(0.0, 1.0);
        b.fitness = eval(b.position);
        population.push_back(std::move(b));
    }

    std::size_t sweep = 0;
    for (std::size_t l = 0; l < cfg.dispersals; ++l) {
        for (std::size_t k = 0; k < cfg.reproductions; ++k) {
            for (std::size_t j = 0; j < cfg.chemotaxis_steps; ++j, ++sweep) {
                for (std::size_t i = 0; i < cfg.population; ++i) {
                    RandomStream move = stream.child("move", sweep, i);
                    population[i] = chemotaxis_move(population[i], eval, cfg, move);
                }
                result.trace.push_back(result.best_fitness);
            }
            population = reproduce(population);
        }
        RandomStream disperse = stream.child("disperse", l);
        population = eliminate_disperse(population, cfg, disperse, eval);
    }
    return result;
}

}  // namespace bfaelm
