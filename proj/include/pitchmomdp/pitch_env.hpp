#ifndef PITCHMOMDP_PITCH_ENV_HPP
#define PITCHMOMDP_PITCH_ENV_HPP

#include <array>
#include <optional>
#include <utility>

#include "pitchmomdp/momdp.hpp"
#include "pitchmomdp/pitch.hpp"

// The musical-pitch MOMDP: observable state x = (current pitch, commanded
// interval, position in the contour), hidden state y = the intermediate pitch
// reached by the first leg of a decomposition, observations = possibly noisy
// readings of y, reward = the combination of the two sub-interval rewards.

namespace pitchmomdp {

/// Noise on the intermediate-pitch observation: the true pitch is seen with
/// probability 1-epsilon, each of the six other pitches with epsilon/6.
struct ObservationModel {
  double epsilon = 0.0;

  std::array<double, kNumPitchClasses> distribution(PitchClass y_true) const;
  PitchClass observe(PitchClass y_true, Rng& rng) const;
};

/// How the two sub-interval rewards combine into the macro-step reward.
/// Paper is the combination as printed, r1*gamma + r2; DiscountedSecond is
/// the conventional alternative r1 + gamma*r2.
enum class RewardCombine { Paper, DiscountedSecond };

double combined_reward(double r1, double r2, double gamma,
                       RewardCombine combine = RewardCombine::Paper);

/// Sub-interval reward magnitudes. r1 is credited to the first leg, r2 to
/// the second (completing the commanded step). When gamma is unset the
/// combination uses the environment discount.
struct RewardSpec {
  double r1 = 0.0;
  double r2 = 1.0;
  std::optional<double> gamma{};
  RewardCombine combine = RewardCombine::Paper;
};

struct EnvConfig {
  Contour contour;
  ObservationModel obs{};
  RewardSpec reward{};
  double gamma = 0.5;

  double reward_gamma() const { return reward.gamma.value_or(gamma); }
};

/// The fully observable part of the state. command is empty exactly at the
/// terminal position step_index == contour length.
struct PitchObservableState {
  PitchClass pitch;
  std::optional<IntervalNumber> command;
  int step_index = 0;

  bool terminal() const { return !command.has_value(); }
};

/// The contour-driven episodic environment, exposed both through its domain
/// operations and as a momdp::Model (x = step index, y = pitch-class index,
/// observations = pitch-class indices, action ids = index into the
/// decomposition list of the commanded interval).
///
/// Immutable after construction; safe for concurrent shared reads.
class PitchEnv final : public Model {
 public:
  /// Validates the configuration: nonempty contour, gamma in [0,1),
  /// epsilon in [0,1], r2 > 0. Throws std::invalid_argument otherwise.
  explicit PitchEnv(EnvConfig config);

  const EnvConfig& config() const { return config_; }
  int num_steps() const { return config_.contour.length(); }
  PitchObservableState state_at(int step_index) const;

  std::vector<Decomposition> actions(const PitchObservableState& x) const;

  struct TransitionResult {
    PitchClass intermediate;
    PitchObservableState next;
  };
  TransitionResult transition(const PitchObservableState& x,
                              Decomposition a) const;

  std::pair<double, double> sub_rewards(const PitchObservableState& x,
                                        Decomposition a) const;

  // momdp::Model surface.
  int num_x() const override { return num_steps() + 1; }
  int num_y() const override { return kNumPitchClasses; }
  int num_observations() const override { return kNumPitchClasses; }
  int num_actions(int x) const override;
  int next_x(int x, int y, int action) const override;
  std::vector<double> hidden_transition(int x, int y, int action,
                                        int x_next) const override;
  std::vector<double> observation(int x_next, int y_next,
                                  int action) const override;
  double reward(int x, int y, int action) const override;
  double discount() const override { return config_.gamma; }

 private:
  Decomposition action_at(int x, int action) const;

  EnvConfig config_;
  std::vector<PitchClass> pitches_;  // p_0..p_m
};

/// Builds the validated environment for a configuration.
PitchEnv make_env(EnvConfig config);

}  // namespace pitchmomdp

#endif  // PITCHMOMDP_PITCH_ENV_HPP
