#pragma once

#include <functional>
#include <vector>

namespace shapegeo {

struct OdeOptions {
    double rtol = 1e-10;
    double atol = 1e-10;
    double h_init = 1e-4;
    double h_min = 1e-14;
    double h_max = 1.0;
    long max_steps = 5'000'000;
};

// Embedded Dormand-Prince 5(4) with the classic quartic dense-output
// interpolant. The caller drives it step by step; after each accepted step
// the interval [t0,t1] can be interpolated, which is what event refinement
// runs on. State may be mutated between steps (momentum renormalization).
class Dopri5 {
public:
    using Rhs = std::function<void(double t, const double* y, double* dydt)>;

    Dopri5(int dim, Rhs rhs, OdeOptions opt = {});

    void start(double t0, const std::vector<double>& y0);

    // Advance one accepted step, clamped so t1 never exceeds t_limit.
    // Returns false when already at t_limit. Throws StepUnderflowError.
    bool step(double t_limit);

    double t0() const { return t_prev_; }
    double t1() const { return t_; }
    const std::vector<double>& y0() const { return y_prev_; }
    const std::vector<double>& y1() const { return y_; }
    std::vector<double>& state() { return y_; }

    // Dense output at t in [t0,t1] of the last accepted step.
    void interpolate(double t, std::vector<double>& out) const;

    // Restart interpolation data after the caller mutated state().
    void rebase();

    long accepted_steps() const { return n_accepted_; }

private:
    void prepare_dense();

    int n_;
    Rhs rhs_;
    OdeOptions opt_;
    double t_ = 0, t_prev_ = 0, h_ = 0;
    std::vector<double> y_, y_prev_;
    std::vector<std::vector<double>> k_;       // 7 stages
    std::vector<std::vector<double>> rcont_;   // 5 dense coefficients
    std::vector<double> work_;
    bool fsal_valid_ = false;
    long n_accepted_ = 0;
};

// Find a root of g on [a,b] (g(a), g(b) of opposite sign) by bisection with a
// secant polish; tolerance-independent of the integrator step size.
double refine_root(const std::function<double(double)>& g, double a, double b,
                   int bisect_iters = 16, double gtol = 1e-12);

} // namespace shapegeo
