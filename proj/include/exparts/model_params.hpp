// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <stdexcept>
#include <string>

#include "exparts/rational.hpp"

namespace exparts {

// Parameters of the two-parameter seating model.  Three regimes:
//   two_param       0 <= alpha <= 1, theta > -alpha   (alpha = 0 permitted;
//                   evaluators then reduce to the one-parameter Ewens(theta)
//                   branch)
//   negative_kappa  alpha = -kappa < 0, theta = m*kappa, m a positive
//                   integer; laws put zero mass on more than m blocks
//   ewens           the one-parameter family; alpha = 0, theta = lambda > 0
class ModelParams {
 public:
  enum class Regime { two_param, negative_kappa, ewens };

  static ModelParams two_param(const Rational& alpha, const Rational& theta) {
    if (alpha < 0 || alpha > 1)
      throw std::invalid_argument("two-parameter regime requires 0 <= alpha <= 1");
    if (theta <= -alpha)
      throw std::invalid_argument("two-parameter regime requires theta > -alpha");
    return ModelParams(Regime::two_param, alpha, theta, 0);
  }

  static ModelParams negative_kappa(const Rational& kappa, long max_blocks) {
    if (kappa <= 0) throw std::invalid_argument("kappa must be positive");
    if (max_blocks < 1) throw std::invalid_argument("block bound m must be a positive integer");
    return ModelParams(Regime::negative_kappa, -kappa, Rational(max_blocks) * kappa, max_blocks);
  }

  static ModelParams ewens(const Rational& lambda) {
    if (lambda <= 0) throw std::invalid_argument("Ewens parameter must be positive");
    return ModelParams(Regime::ewens, 0, lambda, 0);
  }

  Regime regime() const { return regime_; }
  const Rational& alpha() const { return alpha_; }
  const Rational& theta() const { return theta_; }

  // Block-count ceiling in the negative_kappa regime.
  long max_blocks() const {
    if (regime_ != Regime::negative_kappa)
      throw std::logic_error("max_blocks is only defined in the negative_kappa regime");
    return max_blocks_;
  }

  std::string describe() const {
    switch (regime_) {
      case Regime::two_param:
        return "alpha=" + to_string(alpha_) + " theta=" + to_string(theta_);
      case Regime::negative_kappa:
        return "kappa=" + to_string(-alpha_) + " m=" + std::to_string(max_blocks_);
      case Regime::ewens:
        return "lambda=" + to_string(theta_);
    }
    return {};
  }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

  // Both parameters divided by a positive integer; stays inside the regime.
  ModelParams scaled_down(int divisor) const {
    if (divisor < 1) throw std::invalid_argument("divisor must be positive");
    switch (regime_) {
      case Regime::two_param:
        return two_param(alpha_ / divisor, theta_ / divisor);
      case Regime::negative_kappa:
        return negative_kappa(-alpha_ / divisor, max_blocks_);
      case Regime::ewens:
        return ewens(theta_ / divisor);
    }
    throw std::logic_error("unreachable");
  }

 private:
  ModelParams(Regime r, Rational alpha, Rational theta, long max_blocks)
      : regime_(r), alpha_(std::move(alpha)), theta_(std::move(theta)), max_blocks_(max_blocks) {}

  Regime regime_;
  Rational alpha_;
  Rational theta_;
  long max_blocks_;
};

}  // namespace exparts
