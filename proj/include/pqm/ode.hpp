#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "pqm/linalg.hpp"

namespace pqm::ode {

// Adaptive explicit Runge-Kutta integration with the embedded 8(5,3) scheme
// of Dormand-Prince (the DOP853 coefficients of Hairer, Norsett & Wanner) over
// complex state vectors. Output values are produced on arbitrary sample times
// through the scheme's 7th-order dense interpolant, so the step sequence is
// independent of the sampling grid.

using State = VectorC;
using Rhs = std::function<void(double t, const State& y, State& dydt)>;
using Observer = std::function<void(std::size_t sample_index, double t, const State& y)>;

struct Options {
    double rtol = 1e-8;
    double atol = 1e-10;
    double max_step = 0.0;      // 0 = unlimited
    double initial_step = 0.0;  // 0 = automatic
    long max_steps = 100'000'000;
};

struct Stats {
    long steps = 0;
    long accepted = 0;
    long rejected = 0;
    long rhs_evals = 0;
};

// Integrates y from t0 to t1 (t1 > t0) and invokes `emit` once per entry of
// `sample_times` (ascending, all within [t0, t1]). Throws pqm::SimError with
// category integrator_failure when the step size underflows or the step
// budget is exhausted.
Stats solve(const Rhs& f, double t0, double t1, State y, const Options& opt,
            std::span<const double> sample_times, const Observer& emit);

}  // namespace pqm::ode
