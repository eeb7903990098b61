#pragma once

#include "shapegeo/planar.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace shapegeo {

// Scale-invariant collision cutoff: r_ij^2 < kCollisionTol2 * I.
inline constexpr double kCollisionTol2 = 1e-24;

// Four planar bodies, equal masses, with optional momenta.
struct Configuration {
    std::array<cplx, 4> q{};
    std::optional<std::array<cplx, 4>> p;

    bool centered(double tol = 1e-12) const;
    double size() const; // I = |q|^2

    // Index pair (1-based) of the closest two bodies.
    std::pair<int, int> closest_pair() const;
    double min_pair_dist2() const;
    bool collision_free() const;

    // Throws CollisionError naming the offending pair.
    void require_collision_free() const;
};

// Jacobi coordinates of a parallelogram configuration: z1=q2-q1, z2=-q2-q1.
struct JacobiPair {
    cplx z1, z2;
};

// Point on the parallelogram shape space, I = 2|u|.
struct ShapePoint {
    double u1 = 0, u2 = 0, u3 = 0;
    double radius() const;
    double size() const { return 2 * radius(); } // I
    ShapePoint normalized() const;               // |u| = 1, i.e. I = 2
};

struct Conserved {
    double H, J, I, Idot;
};

double potential(const Configuration& c);

// Eq-form specialized to parallelograms: 2/r12^2 + 2/r14^2 + 1/r13^2 + 1/r24^2.
double parallelogram_potential(const Configuration& c);

Conserved conserved(const Configuration& c);

bool parallelogram_symmetric(const Configuration& c, double tol = 1e-12);
void require_parallelogram(const Configuration& c, double tol = 1e-12);

JacobiPair jacobi(const Configuration& c);
ShapePoint hopf(const JacobiPair& j);
Configuration config_from_jacobi(const JacobiPair& j);

struct InverseHopfResult {
    Configuration config;
    bool simultaneous_binary_collision = false; // some r_ij vanished on the fiber
};

// Gauge-fixed fiber section: z1 = e^{i gauge} * sqrt(I/2 + u1) (real-positive
// at gauge 0). Throws GaugeDegenerateError when I/2 + u1 <= tol * I.
InverseHopfResult inverse_hopf(const ShapePoint& s, double gauge_angle = 0.0);

// --- Newtonian flow at the Hamiltonian H = |p|^2/2 - U ---

struct ConfigSample {
    double t;
    Configuration c;
};

enum class FlowTermination { TimeEnd, BoundaryFall, StepUnderflow };

struct ConfigTrajectory {
    std::vector<ConfigSample> samples;
    FlowTermination termination = FlowTermination::TimeEnd;
    double min_pair_dist = 0; // over the whole run
};

// Adaptive RK5(4), abs+rel tolerance = tol. Stops early (BoundaryFall) when
// the smallest pairwise distance drops below r_stop.
ConfigTrajectory newtonian_flow(const Configuration& c0, double t_end,
                                double tol, double r_stop = 0.0);

// --- Zero-angular-momentum reconstruction ---

// Lift a sampled equal-size shape curve to physical configurations with J = 0,
// integrating the gauge angle alpha' = -Im(conj(w1) w1' + conj(w2) w2') / I
// along the z1-real-positive section.
ConfigTrajectory horizontal_lift(std::span<const double> times,
                                 std::span<const ShapePoint> shape_curve,
                                 double initial_gauge);

// Horizontal lift of a single shape-space tangent: the unique zero-angular-
// momentum, size-preserving velocity over `at` projecting to `udot`.
std::array<cplx, 2> horizontal_tangent(const JacobiPair& at,
                                       const std::array<double, 3>& udot);

} // namespace shapegeo
