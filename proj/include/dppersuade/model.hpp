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

#ifndef DPPERSUADE_MODEL_HPP_
#define DPPERSUADE_MODEL_HPP_

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dppersuade {

// Equality checks on probabilities and constraint residuals.
inline constexpr double kStructuralTol = 1e-9;
// Equality checks on objective values.
inline constexpr double kObjectiveTol = 1e-7;

enum class PrivacyKind { kNone, kPure, kApprox, kRenyi };

/// Tagged privacy requirement: none, pure eps-DP, approximate (eps,delta)-DP,
/// or (alpha,eps)-Renyi DP.  delta is reserved strictly positive here; the
/// delta = 0 case is spelled Pure.
struct PrivacySpec {
  PrivacyKind kind = PrivacyKind::kNone;
  double epsilon = 0.0;
  double delta = 0.0;
  double alpha = 0.0;

  static PrivacySpec None() { return {}; }
  static PrivacySpec Pure(double eps) {
    return {PrivacyKind::kPure, eps, 0.0, 0.0};
  }
  static PrivacySpec Approx(double eps, double delta) {
    return {PrivacyKind::kApprox, eps, delta, 0.0};
  }
  static PrivacySpec Renyi(double alpha, double eps) {
    return {PrivacyKind::kRenyi, eps, 0.0, alpha};
  }

  void validate() const {
    switch (kind) {
      case PrivacyKind::kNone:
        break;
      case PrivacyKind::kPure:
        if (!(epsilon > 0.0)) throw std::invalid_argument("privacy: epsilon must be > 0");
        break;
      case PrivacyKind::kApprox:
        if (!(epsilon > 0.0)) throw std::invalid_argument("privacy: epsilon must be > 0");
        if (!(delta > 0.0 && delta < 1.0))
          throw std::invalid_argument("privacy: delta must be in (0,1)");
        break;
      case PrivacyKind::kRenyi:
        if (!(alpha > 1.0)) throw std::invalid_argument("privacy: alpha must be > 1");
        if (!(epsilon > 0.0)) throw std::invalid_argument("privacy: epsilon must be > 0");
        break;
    }
  }
};

/// A state is a length-n bit vector stored in the low n bits; agent i's type
/// occupies bit i-1.
using StateBits = std::uint32_t;

inline std::string state_to_string(StateBits s, int n) {
  std::string out(static_cast<size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if (s >> i & 1u) out[static_cast<size_t>(i)] = '1';
  return out;
}

/// Single-receiver persuasion problem: full-support prior over distinct
/// states, payoff tables for both parties, and a privacy requirement over the
/// bits in privacy_set.
struct PersuasionInstance {
  int n = 0;
  std::vector<StateBits> states;
  std::vector<double> prior;
  std::vector<std::string> actions;
  // receiver_u[a][k] is u(a, states[k]); sender_v likewise.
  std::vector<std::vector<double>> receiver_u;
  std::vector<std::vector<double>> sender_v;
  std::vector<int> privacy_set;  // 1-based bit positions
  PrivacySpec privacy;

  size_t num_states() const { return states.size(); }
  size_t num_actions() const { return actions.size(); }

  void validate() const;
};

inline void PersuasionInstance::validate() const {
  if (n < 0 || n > 30) throw std::invalid_argument("n: must be in [0, 30]");
  if (states.empty()) throw std::invalid_argument("states: must be nonempty");
  if (prior.size() != states.size())
    throw std::invalid_argument("prior: length must match states");
  double total = 0.0;
  for (double p : prior) {
    if (!(p > 0.0)) throw std::invalid_argument("prior: entries must be strictly positive");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("prior: must sum to 1 within 1e-12");
  for (size_t i = 0; i < states.size(); ++i) {
    if (n < 30 && states[i] >= (StateBits{1} << n))
      throw std::invalid_argument("states: bit vector longer than n");
    for (size_t j = i + 1; j < states.size(); ++j)
      if (states[i] == states[j])
        throw std::invalid_argument("states: must be pairwise distinct");
  }
  if (actions.empty()) throw std::invalid_argument("actions: must be nonempty");
  if (receiver_u.size() != actions.size() || sender_v.size() != actions.size())
    throw std::invalid_argument("payoffs: one row per action required");
  for (const auto& row : receiver_u)
    if (row.size() != states.size())
      throw std::invalid_argument("receiver_u: one entry per state required");
  for (const auto& row : sender_v)
    if (row.size() != states.size())
      throw std::invalid_argument("sender_v: one entry per state required");
  for (int b : privacy_set)
    if (b < 1 || b > n) throw std::invalid_argument("privacy_set: bits must lie in 1..n");
  privacy.validate();
}

/// Signaling scheme pi(s|theta): probs[s][k] is the probability of signal s
/// in state k.  Every state column sums to one.
struct SignalingScheme {
  std::vector<std::string> signals;
  std::vector<std::vector<double>> probs;

  size_t num_signals() const { return signals.size(); }

  void validate(size_t num_states) const {
    if (probs.size() != signals.size())
      throw std::invalid_argument("scheme: one probability row per signal required");
    for (const auto& row : probs)
      if (row.size() != num_states)
        throw std::invalid_argument("scheme: row length must match state count");
    for (size_t k = 0; k < num_states; ++k) {
      double col = 0.0;
      for (size_t s = 0; s < probs.size(); ++s) {
        double p = probs[s][k];
        if (p < -kStructuralTol || p > 1.0 + kStructuralTol)
          throw std::invalid_argument("scheme: probabilities must lie in [0,1]");
        col += p;
      }
      if (std::abs(col - 1.0) > kStructuralTol)
        throw std::invalid_argument("scheme: state columns must sum to 1");
    }
  }
};

/// A posterior belief together with the marginal probability of the signal
/// inducing it.
struct PosteriorPoint {
  std::vector<double> belief;
  double weight = 0.0;
};

struct SolveResult {
  SignalingScheme scheme;
  double value = 0.0;
  std::vector<PosteriorPoint> posteriors;
  int support_size = 0;
  double privacy_slack = 0.0;
};

/// Bayes update per signal.  Signals with marginal below 1e-9 carry no
/// information and are omitted.
inline std::vector<PosteriorPoint> posteriors_of_scheme(
    const PersuasionInstance& inst, const SignalingScheme& scheme) {
  scheme.validate(inst.num_states());
  const size_t K = inst.num_states();
  std::vector<PosteriorPoint> out;
  for (size_t s = 0; s < scheme.num_signals(); ++s) {
    double marginal = 0.0;
    for (size_t k = 0; k < K; ++k) marginal += inst.prior[k] * scheme.probs[s][k];
    if (marginal <= kStructuralTol) continue;
    PosteriorPoint pt;
    pt.weight = marginal;
    pt.belief.resize(K);
    for (size_t k = 0; k < K; ++k)
      pt.belief[k] = inst.prior[k] * scheme.probs[s][k] / marginal;
    out.push_back(std::move(pt));
  }
  return out;
}

/// argmax_a E_q[u(a, theta)], ties broken toward the sender's payoff and then
/// by action index so the persuasion supremum is attained.
inline size_t best_response(const PersuasionInstance& inst,
                            const std::vector<double>& belief) {
  if (inst.actions.empty()) throw std::invalid_argument("actions: empty action set");
  if (belief.size() != inst.num_states())
    throw std::invalid_argument("belief: length must match state count");
  size_t best = 0;
  double best_u = 0.0, best_v = 0.0;
  for (size_t a = 0; a < inst.num_actions(); ++a) {
    double eu = 0.0, ev = 0.0;
    for (size_t k = 0; k < belief.size(); ++k) {
      eu += belief[k] * inst.receiver_u[a][k];
      ev += belief[k] * inst.sender_v[a][k];
    }
    if (a == 0) {
      best_u = eu;
      best_v = ev;
      continue;
    }
    if (eu > best_u + kStructuralTol ||
        (eu > best_u - kStructuralTol && ev > best_v + kStructuralTol)) {
      best = a;
      best_u = eu;
      best_v = ev;
    }
  }
  return best;
}

/// V(q): the sender's expected payoff when the receiver best-responds to q.
inline double sender_value_at(const PersuasionInstance& inst,
                              const std::vector<double>& belief) {
  size_t a = best_response(inst, belief);
  double ev = 0.0;
  for (size_t k = 0; k < belief.size(); ++k) ev += belief[k] * inst.sender_v[a][k];
  return ev;
}

/// Expected sender payoff of a scheme: sum over induced posteriors of
/// weight * V(q).
inline double evaluate_scheme(const PersuasionInstance& inst,
                              const SignalingScheme& scheme) {
  double total = 0.0;
  for (const auto& pt : posteriors_of_scheme(inst, scheme))
    total += pt.weight * sender_value_at(inst, pt.belief);
  return total;
}

/// True iff the weighted posteriors average back to the prior and the weights
/// form a distribution.
inline bool bayes_plausibility_check(const PersuasionInstance& inst,
                                     const std::vector<PosteriorPoint>& posteriors) {
  const size_t K = inst.num_states();
  double wsum = 0.0;
  std::vector<double> mix(K, 0.0);
  for (const auto& pt : posteriors) {
    if (pt.belief.size() != K) return false;
    wsum += pt.weight;
    for (size_t k = 0; k < K; ++k) mix[k] += pt.weight * pt.belief[k];
  }
  if (std::abs(wsum - 1.0) > kStructuralTol) return false;
  for (size_t k = 0; k < K; ++k)
    if (std::abs(mix[k] - inst.prior[k]) > kStructuralTol) return false;
  return true;
}

}  // namespace dppersuade

#endif  // DPPERSUADE_MODEL_HPP_
