#include "shapegeo/ode.hpp"
#include "shapegeo/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace shapegeo {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                 a75 = -2187.0 / 6784, a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
constexpr double d1 = -12715105075.0 / 11282082432.0,
                 d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0,
                 d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0,
                 d7 = 69997945.0 / 29380423.0;

} // namespace

Dopri5::Dopri5(int dim, Rhs rhs, OdeOptions opt)
    : n_(dim), rhs_(std::move(rhs)), opt_(opt),
      y_(dim), y_prev_(dim), k_(7, std::vector<double>(dim)),
      rcont_(5, std::vector<double>(dim)), work_(dim) {}

void Dopri5::start(double t0, const std::vector<double>& y0) {
    t_ = t_prev_ = t0;
    y_ = y_prev_ = y0;
    h_ = opt_.h_init;
    fsal_valid_ = false;
    n_accepted_ = 0;
}

void Dopri5::rebase() { fsal_valid_ = false; }

bool Dopri5::step(double t_limit) {
    const double dir = t_limit >= t_ ? 1.0 : -1.0;
    if (std::abs(t_limit - t_) < 1e-15 * (1 + std::abs(t_)))
        return false;
    if (!fsal_valid_) {
        rhs_(t_, y_.data(), k_[0].data());
        fsal_valid_ = true;
    }
    double h = std::clamp(std::abs(h_), opt_.h_min, opt_.h_max) * dir;

    for (int attempt = 0;; ++attempt) {
        if (attempt > 400)
            throw StepUnderflowError("dopri5: step size control failed to accept a step");
        if (std::abs(h) < opt_.h_min)
            throw StepUnderflowError("dopri5: step size underflow at t=" + std::to_string(t_));
        bool clipped = false;
        if ((t_ + h - t_limit) * dir > 0) {
            h = t_limit - t_;
            clipped = true;
        }

        auto& y = y_;
        auto stage = [&](std::vector<double>& out, std::initializer_list<std::pair<const std::vector<double>*, double>> terms) {
            for (int i = 0; i < n_; ++i) {
                double acc = y[i];
                for (auto& [kv, a] : terms) acc += h * a * (*kv)[i];
                out[i] = acc;
            }
        };

        stage(work_, {{&k_[0], a21}});
        rhs_(t_ + c2 * h, work_.data(), k_[1].data());
        stage(work_, {{&k_[0], a31}, {&k_[1], a32}});
        rhs_(t_ + c3 * h, work_.data(), k_[2].data());
        stage(work_, {{&k_[0], a41}, {&k_[1], a42}, {&k_[2], a43}});
        rhs_(t_ + c4 * h, work_.data(), k_[3].data());
        stage(work_, {{&k_[0], a51}, {&k_[1], a52}, {&k_[2], a53}, {&k_[3], a54}});
        rhs_(t_ + c5 * h, work_.data(), k_[4].data());
        stage(work_, {{&k_[0], a61}, {&k_[1], a62}, {&k_[2], a63}, {&k_[3], a64}, {&k_[4], a65}});
        rhs_(t_ + h, work_.data(), k_[5].data());
        stage(work_, {{&k_[0], a71}, {&k_[2], a73}, {&k_[3], a74}, {&k_[4], a75}, {&k_[5], a76}});
        rhs_(t_ + h, work_.data(), k_[6].data());

        // work_ now holds the 5th-order solution (FSAL).
        double err = 0;
        for (int i = 0; i < n_; ++i) {
            double ei = h * (e1 * k_[0][i] + e3 * k_[2][i] + e4 * k_[3][i] +
                             e5 * k_[4][i] + e6 * k_[5][i] + e7 * k_[6][i]);
            double sc = opt_.atol + opt_.rtol * std::max(std::abs(y_[i]), std::abs(work_[i]));
            err += (ei / sc) * (ei / sc);
        }
        err = std::sqrt(err / n_);

        if (err <= 1.0) {
            t_prev_ = t_;
            y_prev_ = y_;
            t_ += h;
            y_ = work_;
            prepare_dense();
            k_[0] = k_[6]; // FSAL
            double fac = err == 0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
            if (!clipped)
                h_ = std::min(std::abs(h) * fac, opt_.h_max);
            if (++n_accepted_ > opt_.max_steps)
                throw StiffnessError("dopri5: max step count exceeded");
            return true;
        }
        h *= std::clamp(0.9 * std::pow(err, -0.2), 0.2, 1.0);
    }
}

void Dopri5::prepare_dense() {
    const double h = t_ - t_prev_;
    for (int i = 0; i < n_; ++i) {
        double dy = y_[i] - y_prev_[i];
        double bspl = h * k_[0][i] - dy;
        rcont_[0][i] = y_prev_[i];
        rcont_[1][i] = dy;
        rcont_[2][i] = bspl;
        rcont_[3][i] = dy - h * k_[6][i] - bspl;
        rcont_[4][i] = h * (d1 * k_[0][i] + d3 * k_[2][i] + d4 * k_[3][i] +
                            d5 * k_[4][i] + d6 * k_[5][i] + d7 * k_[6][i]);
    }
}

void Dopri5::interpolate(double t, std::vector<double>& out) const {
    const double h = t_ - t_prev_;
    const double th = h == 0 ? 0 : (t - t_prev_) / h;
    const double th1 = 1.0 - th;
    out.resize(n_);
    for (int i = 0; i < n_; ++i)
        out[i] = rcont_[0][i] +
                 th * (rcont_[1][i] +
                       th1 * (rcont_[2][i] +
                              th * (rcont_[3][i] + th1 * rcont_[4][i])));
}

double refine_root(const std::function<double(double)>& g, double a, double b,
                   int bisect_iters, double gtol) {
    double fa = g(a), fb = g(b);
    if (fa == 0) return a;
    if (fb == 0) return b;
    for (int i = 0; i < bisect_iters; ++i) {
        double m = 0.5 * (a + b), fm = g(m);
        if (fm == 0) return m;
        if ((fa < 0) == (fm < 0)) { a = m; fa = fm; }
        else { b = m; fb = fm; }
    }
    // Secant polish inside the bracket.
    double x0 = a, f0 = fa, x1 = b, f1 = fb;
    for (int i = 0; i < 20 && std::abs(f1) > gtol; ++i) {
        double denom = f1 - f0;
        double x2 = denom == 0 ? 0.5 * (a + b) : x1 - f1 * (x1 - x0) / denom;
        if (!(x2 >= std::min(a, b) && x2 <= std::max(a, b)))
            x2 = 0.5 * (a + b);
        double f2 = g(x2);
        if ((fa < 0) == (f2 < 0)) { a = x2; fa = f2; } else { b = x2; fb = f2; }
        x0 = x1; f0 = f1; x1 = x2; f1 = f2;
    }
    return std::abs(f1) <= std::abs(f0) ? x1 : x0;
}

} // namespace shapegeo
