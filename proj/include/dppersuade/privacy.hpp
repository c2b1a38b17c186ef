// Copyright 2026 The dppersuade Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DPPERSUADE_PRIVACY_HPP_
#define DPPERSUADE_PRIVACY_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "dppersuade/model.hpp"

namespace dppersuade {

// Residuals at or below this are treated as satisfied.
inline constexpr double kVerifyTol = 1e-9;

/// Ordered pair of states differing in exactly one protected bit.
struct AdjacentPair {
  int theta_index = -1;
  int theta_prime_index = -1;
  int flipped_bit = 0;  // 1-based
};

struct PrivacyReport {
  bool satisfied = true;
  bool has_worst_pair = false;
  AdjacentPair worst_pair;
  double worst_slack = -std::numeric_limits<double>::infinity();
};

/// All ordered pairs of states in the instance's support differing in exactly
/// one bit of privacy_set.  Neighbors outside the support are skipped: the
/// prior puts no mass there and the programs have no variables for them.
inline std::vector<AdjacentPair> adjacent_pairs(const PersuasionInstance& inst) {
  std::unordered_map<StateBits, int> index;
  for (size_t k = 0; k < inst.states.size(); ++k)
    index.emplace(inst.states[k], static_cast<int>(k));
  std::vector<AdjacentPair> out;
  for (size_t k = 0; k < inst.states.size(); ++k) {
    for (int bit : inst.privacy_set) {
      StateBits flipped = inst.states[k] ^ (StateBits{1} << (bit - 1));
      auto it = index.find(flipped);
      if (it == index.end()) continue;
      out.push_back({static_cast<int>(k), it->second, bit});
    }
  }
  return out;
}

/// pi(s|theta) <= e^eps pi(s|theta') per signal and ordered adjacent pair.
inline PrivacyReport verify_pure(const PersuasionInstance& inst,
                                 const SignalingScheme& scheme, double epsilon) {
  scheme.validate(inst.num_states());
  const double scale = std::exp(epsilon);
  PrivacyReport report;
  for (const AdjacentPair& pair : adjacent_pairs(inst)) {
    for (size_t s = 0; s < scheme.num_signals(); ++s) {
      double slack = scheme.probs[s][pair.theta_index] -
                     scale * scheme.probs[s][pair.theta_prime_index];
      if (slack > report.worst_slack) {
        report.worst_slack = slack;
        report.worst_pair = pair;
        report.has_worst_pair = true;
      }
    }
  }
  report.satisfied = report.worst_slack <= kVerifyTol;
  return report;
}

/// (eps,delta)-DP via the worst-subset closed form: for each ordered adjacent
/// pair the maximizing signal subset is exactly the signals with positive
/// one-sided difference, so sum max{0, pi(s|theta) - e^eps pi(s|theta')} <= delta
/// is equivalent to the subset-quantified definition.
inline PrivacyReport verify_approx(const PersuasionInstance& inst,
                                   const SignalingScheme& scheme, double epsilon,
                                   double delta) {
  scheme.validate(inst.num_states());
  const double scale = std::exp(epsilon);
  PrivacyReport report;
  for (const AdjacentPair& pair : adjacent_pairs(inst)) {
    double clamped = 0.0;
    for (size_t s = 0; s < scheme.num_signals(); ++s) {
      double diff = scheme.probs[s][pair.theta_index] -
                    scale * scheme.probs[s][pair.theta_prime_index];
      if (diff > 0.0) clamped += diff;
    }
    double slack = clamped - delta;
    if (slack > report.worst_slack) {
      report.worst_slack = slack;
      report.worst_pair = pair;
      report.has_worst_pair = true;
    }
  }
  report.satisfied = report.worst_slack <= kVerifyTol;
  return report;
}

/// (alpha,eps)-Renyi DP: per ordered adjacent pair the moment
/// sum_s pi(s|theta) (pi(s|theta)/pi(s|theta'))^(alpha-1) must stay within
/// e^((alpha-1) eps).  Zero conventions: 0 * (0/0)^(alpha-1) contributes 0;
/// positive over zero diverges and the pair is violated outright.  The
/// tolerance is relative to the bound since the bound itself scales with
/// alpha and eps.
inline PrivacyReport verify_renyi(const PersuasionInstance& inst,
                                  const SignalingScheme& scheme, double alpha,
                                  double epsilon) {
  if (!(alpha > 1.0)) throw std::invalid_argument("alpha: must be > 1");
  scheme.validate(inst.num_states());
  const double bound = std::exp((alpha - 1.0) * epsilon);
  PrivacyReport report;
  for (const AdjacentPair& pair : adjacent_pairs(inst)) {
    double moment = 0.0;
    for (size_t s = 0; s < scheme.num_signals(); ++s) {
      double p = scheme.probs[s][pair.theta_index];
      double q = scheme.probs[s][pair.theta_prime_index];
      if (p <= 0.0) continue;
      if (q <= 0.0) {
        moment = std::numeric_limits<double>::infinity();
        break;
      }
      moment += p * std::pow(p / q, alpha - 1.0);
    }
    double slack = moment - bound;
    if (slack > report.worst_slack) {
      report.worst_slack = slack;
      report.worst_pair = pair;
      report.has_worst_pair = true;
    }
  }
  report.satisfied = report.worst_slack <= bound * kVerifyTol;
  return report;
}

/// Dispatch on the instance's own privacy spec.
inline PrivacyReport max_privacy_slack(const PersuasionInstance& inst,
                                       const SignalingScheme& scheme) {
  switch (inst.privacy.kind) {
    case PrivacyKind::kPure:
      return verify_pure(inst, scheme, inst.privacy.epsilon);
    case PrivacyKind::kApprox:
      return verify_approx(inst, scheme, inst.privacy.epsilon, inst.privacy.delta);
    case PrivacyKind::kRenyi:
      return verify_renyi(inst, scheme, inst.privacy.alpha, inst.privacy.epsilon);
    case PrivacyKind::kNone:
      break;
  }
  throw std::invalid_argument("privacy: no constraint to verify");
}

}  // namespace dppersuade

#endif  // DPPERSUADE_PRIVACY_HPP_
