#pragma once

#include <cstdint>
#include <vector>

#include "polya/errors.hpp"
#include "polya/model.hpp"
#include "polya/rng.hpp"

// Exact integer-state simulation. A draw is red with probability X/tau by
// comparing a uniform integer in [0, tau) against X; no floating point enters
// the law, so trajectories are bit-identical across platforms.

namespace polya {

struct UrnState {
    std::uint64_t n = 0;
    std::uint64_t X = 0; // red balls
    std::uint64_t Y = 0; // white balls
};

struct Trajectory {
    UrnModel model;
    std::vector<UrnState> states; // n = 0..horizon
    std::vector<std::uint8_t> draws; // eps_1..eps_horizon
};

inline UrnState initial_state(const UrnModel& model) {
    return {0, static_cast<std::uint64_t>(model.alpha), static_cast<std::uint64_t>(model.beta)};
}

// Largest horizon with tau + N*S < 2^63: keeps every count and total in
// uniform_below range and away from unsigned wraparound.
inline std::uint64_t max_horizon(const UrnModel& model) {
    const std::uint64_t cap = (std::uint64_t{1} << 63) - 1;
    return (cap - static_cast<std::uint64_t>(model.tau)) / static_cast<std::uint64_t>(model.S);
}

inline void check_horizon(const UrnModel& model, std::uint64_t horizon) {
    if (horizon > max_horizon(model)) {
        throw OverflowHorizon("horizon " + std::to_string(horizon) +
                              " exceeds the 63-bit ball-count cap");
    }
}

// Pure transition: add row (a,b) on a red draw, row (c,d) on a white draw.
inline UrnState step(const UrnState& state, const UrnModel& model, bool draw) {
    UrnState next;
    next.n = state.n + 1;
    if (draw) {
        next.X = state.X + static_cast<std::uint64_t>(model.a);
        next.Y = state.Y + static_cast<std::uint64_t>(model.b);
    } else {
        next.X = state.X + static_cast<std::uint64_t>(model.c);
        next.Y = state.Y + static_cast<std::uint64_t>(model.d);
    }
    return next;
}

// Runs the chain to the horizon, feeding each transition to an observer
// callable as obs(prev, draw, next). Returns the final state. This is the
// hot path; everything else is built on it.
template <typename Observer>
UrnState simulate_observe(const UrnModel& model, std::uint64_t horizon, RandomStream& rng,
                          Observer&& obs) {
    check_horizon(model, horizon);
    UrnState state = initial_state(model);
    std::uint64_t total = static_cast<std::uint64_t>(model.tau);
    const std::uint64_t growth = static_cast<std::uint64_t>(model.S);
    for (std::uint64_t k = 0; k < horizon; ++k) {
        const bool draw = rng.uniform_below(total) < state.X;
        const UrnState next = step(state, model, draw);
        obs(state, draw, next);
        state = next;
        total += growth;
    }
    return state;
}

// Full-storage variant for short horizons and tests.
inline Trajectory simulate(const UrnModel& model, std::uint64_t horizon, RandomStream& rng) {
    check_horizon(model, horizon);
    Trajectory traj;
    traj.model = model;
    traj.states.reserve(horizon + 1);
    traj.draws.reserve(horizon);
    traj.states.push_back(initial_state(model));
    simulate_observe(model, horizon, rng, [&](const UrnState&, bool draw, const UrnState& next) {
        traj.draws.push_back(draw ? 1 : 0);
        traj.states.push_back(next);
    });
    return traj;
}

} // namespace polya
