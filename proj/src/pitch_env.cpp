#include "pitchmomdp/pitch_env.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pitchmomdp {

std::array<double, kNumPitchClasses> ObservationModel::distribution(
    PitchClass y_true) const {
  std::array<double, kNumPitchClasses> probs;
  probs.fill(epsilon / (kNumPitchClasses - 1));
  probs[static_cast<std::size_t>(y_true.index())] = 1.0 - epsilon;
  return probs;
}

PitchClass ObservationModel::observe(PitchClass y_true, Rng& rng) const {
  const auto probs = distribution(y_true);
  return PitchClass(sample_categorical(probs, rng));
}

double combined_reward(double r1, double r2, double gamma,
                       RewardCombine combine) {
  switch (combine) {
    case RewardCombine::Paper:
      return r1 * gamma + r2;
    case RewardCombine::DiscountedSecond:
      return r1 + gamma * r2;
  }
  throw std::invalid_argument("unknown reward combination mode");
}

namespace {

EnvConfig validated(EnvConfig config) {
  if (config.contour.commands.empty()) {
    throw std::invalid_argument("environment needs a contour with commands");
  }
  if (!(config.gamma >= 0.0 && config.gamma < 1.0)) {
    throw std::invalid_argument("gamma outside [0, 1)");
  }
  if (config.reward.gamma &&
      !(*config.reward.gamma >= 0.0 && *config.reward.gamma < 1.0)) {
    throw std::invalid_argument("reward gamma outside [0, 1)");
  }
  if (!(config.obs.epsilon >= 0.0 && config.obs.epsilon <= 1.0)) {
    throw std::invalid_argument("observation epsilon outside [0, 1]");
  }
  if (!(config.reward.r2 > 0.0)) {
    throw std::invalid_argument("r2 must be positive: something must be reinforced");
  }
  if (!std::isfinite(config.reward.r1)) {
    throw std::invalid_argument("r1 must be finite");
  }
  return config;
}

}  // namespace

PitchEnv::PitchEnv(EnvConfig config)
    : config_(validated(std::move(config))), pitches_(config_.contour.pitches()) {}

PitchObservableState PitchEnv::state_at(int step_index) const {
  if (step_index < 0 || step_index > num_steps()) {
    throw std::out_of_range("step index outside the contour");
  }
  PitchObservableState state{pitches_[static_cast<std::size_t>(step_index)],
                             std::nullopt, step_index};
  if (step_index < num_steps()) {
    state.command = config_.contour.commands[static_cast<std::size_t>(step_index)];
  }
  return state;
}

std::vector<Decomposition> PitchEnv::actions(const PitchObservableState& x) const {
  if (x.terminal()) {
    throw std::invalid_argument("no actions at the terminal state");
  }
  return decompositions(*x.command);
}

PitchEnv::TransitionResult PitchEnv::transition(const PitchObservableState& x,
                                                Decomposition a) const {
  if (x.terminal()) {
    throw std::invalid_argument("no transition from the terminal state");
  }
  if (a.first.number() + a.second.number() != x.command->number() + 1) {
    std::ostringstream msg;
    msg << "decomposition (" << a.first.number() << "," << a.second.number()
        << ") does not realize the commanded " << x.command->number();
    throw std::invalid_argument(msg.str());
  }
  TransitionResult result{advance(x.pitch, a.first),
                          state_at(x.step_index + 1)};
  return result;
}

std::pair<double, double> PitchEnv::sub_rewards(const PitchObservableState& x,
                                                Decomposition a) const {
  // Validates the action; rewards are credited only for legal macro steps.
  (void)transition(x, a);
  return {config_.reward.r1, config_.reward.r2};
}

int PitchEnv::num_actions(int x) const {
  if (x < 0 || x > num_steps()) {
    throw std::out_of_range("observable state outside the chain");
  }
  if (x == num_steps()) return 0;
  return config_.contour.commands[static_cast<std::size_t>(x)].number();
}

Decomposition PitchEnv::action_at(int x, int action) const {
  const IntervalNumber command =
      config_.contour.commands[static_cast<std::size_t>(x)];
  if (action < 0 || action >= command.number()) {
    std::ostringstream msg;
    msg << "invalid action " << action << " at step " << x << " (command "
        << command.number() << ")";
    throw std::invalid_argument(msg.str());
  }
  return {IntervalNumber(action + 1), IntervalNumber(command.number() - action)};
}

int PitchEnv::next_x(int x, int /*y*/, int action) const {
  (void)action_at(x, action);
  return x + 1;
}

std::vector<double> PitchEnv::hidden_transition(int x, int /*y*/, int action,
                                                int /*x_next*/) const {
  const Decomposition a = action_at(x, action);
  const PitchClass intermediate =
      advance(pitches_[static_cast<std::size_t>(x)], a.first);
  std::vector<double> row(kNumPitchClasses, 0.0);
  row[static_cast<std::size_t>(intermediate.index())] = 1.0;
  return row;
}

std::vector<double> PitchEnv::observation(int /*x_next*/, int y_next,
                                          int /*action*/) const {
  const auto probs = config_.obs.distribution(PitchClass(y_next));
  return std::vector<double>(probs.begin(), probs.end());
}

double PitchEnv::reward(int x, int /*y*/, int action) const {
  (void)action_at(x, action);
  return combined_reward(config_.reward.r1, config_.reward.r2,
                         config_.reward_gamma(), config_.reward.combine);
}

PitchEnv make_env(EnvConfig config) { return PitchEnv(std::move(config)); }

}  // namespace pitchmomdp
