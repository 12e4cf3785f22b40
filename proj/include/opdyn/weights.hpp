#pragma once

#include <opdyn/signed_graph.hpp>
#include <opdyn/types.hpp>

namespace opdyn {

/// Shape of one weight-vs-difference curve f(d), d = |x_j - x_i| >= 0.
enum class WeightKind {
  affine_trust,     // max(1 - slope * d, lo): trust decays as opinions split
  affine_distrust,  // min(offset + slope * d, hi): distrust grows with the gap
  constant,         // offset everywhere (difference-independent)
};

/// One weight family together with its declared bounds [lo, hi]. The
/// bounds feed the convergence-rate formulas, so they must genuinely
/// enclose the curve on the relevant difference range; validate()
/// enforces that.
struct WeightFamily {
  WeightKind kind = WeightKind::constant;
  double slope = 0.0;
  double offset = 0.0;
  double lo = 0.0;
  double hi = 0.0;

  double operator()(double d) const;
};

/// The four curves used by the interaction rules, split by edge sign and
/// by whether the influencing agent is the leader:
///   trust_follower  - trust toward a fellow follower     (bounds alpha)
///   trust_leader    - trust toward the leader            (bounds beta)
///   distrust_follower - distrust toward a fellow follower (bounds iota)
///   distrust_leader   - distrust toward the leader        (bounds kappa)
struct WeightModel {
  WeightFamily trust_follower;
  WeightFamily trust_leader;
  WeightFamily distrust_follower;
  WeightFamily distrust_leader;

  /// Weight on the edge from j to i given current opinions. Throws
  /// std::invalid_argument when (j -> i) is not an edge of g.
  double eval(const SignedGraph& g, int i, int j, double xi, double xj) const;

  const WeightFamily& family_for(int sign, bool toward_leader) const;

  /// Check positivity, bound consistency and monotonicity of every
  /// family by dense sampling of [0, d_max]. Throws
  /// std::invalid_argument listing every violated condition.
  void validate(double d_max) const;
};

/// Convenience constructors for the supported curve shapes.
WeightFamily affine_trust(double slope, double lo, double hi = 1.0);
WeightFamily affine_distrust(double offset, double slope, double hi);
WeightFamily constant_weight(double value);

}  // namespace opdyn
