#include <opdyn/weights.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace opdyn {

double WeightFamily::operator()(double d) const {
  switch (kind) {
    case WeightKind::affine_trust:
      return std::max(1.0 - slope * d, lo);
    case WeightKind::affine_distrust:
      return std::min(offset + slope * d, hi);
    case WeightKind::constant:
      return offset;
  }
  return offset;  // unreachable
}

WeightFamily affine_trust(double slope, double lo, double hi) {
  return {WeightKind::affine_trust, slope, 0.0, lo, hi};
}

WeightFamily affine_distrust(double offset, double slope, double hi) {
  return {WeightKind::affine_distrust, slope, offset, offset, hi};
}

WeightFamily constant_weight(double value) {
  return {WeightKind::constant, 0.0, value, value, value};
}

const WeightFamily& WeightModel::family_for(int sign,
                                            bool toward_leader) const {
  if (sign == 1) return toward_leader ? trust_leader : trust_follower;
  if (sign == -1) return toward_leader ? distrust_leader : distrust_follower;
  throw std::invalid_argument("weights: no family for sign 0");
}

double WeightModel::eval(const SignedGraph& g, int i, int j, double xi,
                         double xj) const {
  const int s = g.sign(i, j);
  if (s == 0)
    throw std::invalid_argument("weights: (" + std::to_string(j + 1) + " -> " +
                                std::to_string(i + 1) + ") is not an edge");
  return family_for(s, j == g.leader())(std::abs(xj - xi));
}

namespace {

void validate_family(const WeightFamily& f, const char* name, double d_max,
                     std::string& errs) {
  auto complain = [&](const std::string& what) {
    errs += std::string("  ") + name + ": " + what + "\n";
  };

  if (!(f.lo > 0.0)) complain("lower bound must be strictly positive");
  if (f.lo > f.hi) complain("lower bound exceeds upper bound");
  if (f.slope < 0.0) complain("slope must be nonnegative");

  const bool trust = f.kind == WeightKind::affine_trust;
  if (trust && f.hi < 1.0)
    complain("trust curve starts at 1, above the declared upper bound");
  if (f.kind == WeightKind::affine_distrust && f.offset < f.lo)
    complain("distrust curve starts below the declared lower bound");

  // Sample the curve on [0, d_max]: bounds must hold pointwise and the
  // curve must be monotone in the direction its kind promises.
  constexpr int kSamples = 257;
  double prev = f(0.0);
  for (int k = 0; k < kSamples; ++k) {
    const double d = d_max * static_cast<double>(k) / (kSamples - 1);
    const double v = f(d);
    if (v < f.lo - 1e-12 || v > f.hi + 1e-12) {
      complain("value " + std::to_string(v) + " at difference " +
               std::to_string(d) + " escapes [lo, hi]");
      break;
    }
    if (trust ? v > prev + 1e-12 : v < prev - 1e-12) {
      complain("curve is not monotone at difference " + std::to_string(d));
      break;
    }
    prev = v;
  }
}

}  // namespace

void WeightModel::validate(double d_max) const {
  if (d_max < 0.0)
    throw std::invalid_argument("weights: negative difference range");
  std::string errs;
  validate_family(trust_follower, "trust_follower", d_max, errs);
  validate_family(trust_leader, "trust_leader", d_max, errs);
  validate_family(distrust_follower, "distrust_follower", d_max, errs);
  validate_family(distrust_leader, "distrust_leader", d_max, errs);
  if (!errs.empty())
    throw std::invalid_argument("weights: invalid model\n" + errs);
}

}  // namespace opdyn
