#ifndef KINBOUND_CLASSIFY_HPP
#define KINBOUND_CLASSIFY_HPP

#include <utility>

#include "kinbound/models.hpp"

namespace kinbound::classify {

// Variational character of the auxiliary-field energy relative to the true
// spectrum: lower / upper bound, exact, or undecidable from convexity alone.
enum class BoundClass { lower, upper, exact, indeterminate };

const char* bound_name(BoundClass b);

enum class Verdict { convex, concave, affine, mixed };

const char* verdict_name(Verdict v);

// Second-difference scan of one transform over log-spaced samples.
// max_violation is the largest |second difference| relative to the local
// function scale, so affine verdicts come with max_violation <= 1e-9.
struct ConvexityReport {
  char function_id = 'h';
  Verdict verdict = Verdict::mixed;
  int samples = 0;
  double max_violation = 0.0;
};

// h(s) = T(sqrt(s)): the kinetic term as a function of p^2.
double h_of(const models::KineticModel& T, double s);

// g(y) = V(P_inv(y)): the potential as a function of the auxiliary power law.
double g_of(const models::PotentialModel& V, const models::AuxiliaryPowerLaw& aux,
            double y);

// Convexity scans over the model's working domain, optionally restricted.
// Ranges are in the underlying variable (p for h, r for g); {0, 0} keeps the
// model's own interval.
ConvexityReport analyze_h(const models::KineticModel& T,
                          std::pair<double, double> p_range = {0.0, 0.0});
ConvexityReport analyze_g(const models::PotentialModel& V,
                          const models::AuxiliaryPowerLaw& aux,
                          std::pair<double, double> r_range = {0.0, 0.0});

// Both transforms convex (or affine) -> lower bound; both concave (or
// affine) -> upper bound; both affine -> exact; anything else indeterminate.
BoundClass classify_bound(const models::KineticModel& T,
                          const models::PotentialModel& V,
                          const models::AuxiliaryPowerLaw& aux,
                          std::pair<double, double> p_range = {0.0, 0.0},
                          std::pair<double, double> r_range = {0.0, 0.0});

}  // namespace kinbound::classify

#endif
