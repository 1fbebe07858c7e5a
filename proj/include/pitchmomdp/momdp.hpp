#ifndef PITCHMOMDP_MOMDP_HPP
#define PITCHMOMDP_MOMDP_HPP

#include <cstdint>
#include <random>
#include <span>
#include <vector>

// Generic mixed-observability MDP machinery: factored states, stepping,
// observation sampling and exact Bayes filtering over the hidden factor.
// Nothing in this header knows about music.

namespace pitchmomdp {

using Rng = std::mt19937_64;

/// One 53-bit uniform draw in [0, 1). Fully specified by the standard's
/// mt19937_64 stream, so sequences are identical across platforms.
double uniform_draw(Rng& rng);

/// Inverse-CDF categorical sample over ascending index order, consuming
/// exactly one uniform draw. Tolerates rows that miss 1 by rounding noise;
/// throws std::domain_error when the row carries no mass at all.
int sample_categorical(std::span<const double> probs, Rng& rng);

/// Uniform index in [0, n), one draw.
int sample_uniform_index(int n, Rng& rng);

/// A state split into an observable index x and a hidden index y.
struct FactoredState {
  int x = 0;
  int y = 0;
  bool operator==(const FactoredState&) const = default;
};

/// Probability mass over the hidden-state set Y. Entries are nonnegative and
/// sum to 1 within 1e-12; the constructor enforces this.
class BeliefY {
 public:
  explicit BeliefY(std::vector<double> probs);

  static BeliefY uniform(int n);
  static BeliefY point_mass(int n, int at);

  const std::vector<double>& probs() const { return probs_; }
  int size() const { return static_cast<int>(probs_.size()); }
  double at(int y) const { return probs_.at(static_cast<std::size_t>(y)); }

  bool operator==(const BeliefY&) const = default;

 private:
  std::vector<double> probs_;
};

/// Renormalizes a nonnegative mass vector to a belief. An all-zero vector
/// means the conditioning event was impossible; that is reported as an
/// explicit "inconsistent observation" domain error, never as NaN.
BeliefY normalize(std::vector<double> mass);

/// Environment contract for a mixed-observability MDP with a deterministic
/// observable transition.
///
/// States, actions and observations are dense integer indices; domain layers
/// own the mapping to names. Action ids are local to each observable state
/// (0 .. num_actions(x)-1). A state with no actions is terminal.
///
/// Models are immutable after construction and safe to share across
/// concurrent simulations; each simulation owns its rng and belief.
class Model {
 public:
  virtual ~Model() = default;

  virtual int num_x() const = 0;
  virtual int num_y() const = 0;
  virtual int num_observations() const = 0;
  virtual int num_actions(int x) const = 0;
  bool terminal(int x) const { return num_actions(x) == 0; }

  /// Observable transition Tx. Deterministic by contract.
  virtual int next_x(int x, int y, int action) const = 0;

  /// Hidden transition Ty: distribution over y' given (x, y, a, x').
  virtual std::vector<double> hidden_transition(int x, int y, int action,
                                                int x_next) const = 0;

  /// Observation model Z: distribution over observations given (x', y', a).
  virtual std::vector<double> observation(int x_next, int y_next,
                                          int action) const = 0;

  virtual double reward(int x, int y, int action) const = 0;
  virtual double discount() const = 0;
};

struct StepResult {
  FactoredState next;
  int observation = 0;
  double reward = 0.0;
};

/// Advances the environment one step: x' = Tx(x, y, a), y' ~ Ty, obs ~ Z,
/// reward = R(x, y, a). Consumes exactly two uniform draws (y', then obs),
/// so a fixed seed position gives bit-identical results; point-mass rows
/// still consume their draw but make the output seed-independent.
/// Invalid states or actions are rejected with std::invalid_argument naming
/// the offending state and action.
StepResult step(const Model& model, FactoredState state, int action, Rng& rng);

/// Exact Bayes filter over the hidden factor:
///   posterior(y') ∝ Z(obs | x', y', a) · Σ_y Ty(y' | x, y, a, x') · prior(y)
/// Throws std::domain_error ("inconsistent observation") when the observation
/// has zero probability under the prior.
BeliefY belief_update(const Model& model, const BeliefY& prior, int x,
                      int action, int x_next, int obs);

/// Checks the distribution invariants of a model: every Ty and Z row is
/// nonnegative and sums to 1 within `tol`, and every non-terminal state has
/// at least one action. Throws std::invalid_argument on the first violation.
void validate_model(const Model& model, double tol = 1e-12);

}  // namespace pitchmomdp

#endif  // PITCHMOMDP_MOMDP_HPP
