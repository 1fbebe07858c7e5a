#include "pitchmomdp/momdp.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pitchmomdp {

namespace {

constexpr double kMassTolerance = 1e-12;

void check_index(int value, int size, const char* what) {
  if (value < 0 || value >= size) {
    std::ostringstream msg;
    msg << "invalid " << what << " index " << value << " (size " << size << ")";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

double uniform_draw(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int sample_categorical(std::span<const double> probs, Rng& rng) {
  const double u = uniform_draw(rng);
  double cumulative = 0.0;
  int last_positive = -1;
  for (int i = 0; i < static_cast<int>(probs.size()); ++i) {
    const double p = probs[static_cast<std::size_t>(i)];
    if (p <= 0.0) continue;
    last_positive = i;
    cumulative += p;
    if (u < cumulative) return i;
  }
  if (last_positive < 0) {
    throw std::domain_error("categorical sample over an all-zero row");
  }
  return last_positive;
}

int sample_uniform_index(int n, Rng& rng) {
  if (n <= 0) throw std::invalid_argument("uniform index over empty range");
  const int i = static_cast<int>(uniform_draw(rng) * n);
  return i < n ? i : n - 1;
}

BeliefY::BeliefY(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw std::invalid_argument("belief over empty Y");
  double total = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) throw std::invalid_argument("belief entry negative or NaN");
    total += p;
  }
  if (std::abs(total - 1.0) > kMassTolerance) {
    throw std::invalid_argument("belief does not sum to 1");
  }
}

BeliefY BeliefY::uniform(int n) {
  if (n <= 0) throw std::invalid_argument("belief over empty Y");
  // n equal entries; built to sum to 1 exactly up to rounding of 1/n.
  std::vector<double> probs(static_cast<std::size_t>(n), 1.0 / n);
  return normalize(std::move(probs));
}

BeliefY BeliefY::point_mass(int n, int at) {
  check_index(at, n, "hidden-state");
  std::vector<double> probs(static_cast<std::size_t>(n), 0.0);
  probs[static_cast<std::size_t>(at)] = 1.0;
  return BeliefY(std::move(probs));
}

BeliefY normalize(std::vector<double> mass) {
  double total = 0.0;
  for (double m : mass) {
    if (!(m >= 0.0)) throw std::invalid_argument("mass entry negative or NaN");
    total += m;
  }
  if (total <= 0.0) {
    throw std::domain_error(
        "inconsistent observation: zero posterior mass, cannot normalize");
  }
  for (double& m : mass) m /= total;
  // Cheap exactness fix: force the largest entry to absorb rounding residue.
  double sum = std::accumulate(mass.begin(), mass.end(), 0.0);
  if (sum != 1.0) {
    auto it = std::max_element(mass.begin(), mass.end());
    *it += 1.0 - sum;
  }
  return BeliefY(std::move(mass));
}

StepResult step(const Model& model, FactoredState state, int action, Rng& rng) {
  check_index(state.x, model.num_x(), "observable-state");
  check_index(state.y, model.num_y(), "hidden-state");
  const int n_actions = model.num_actions(state.x);
  if (action < 0 || action >= n_actions) {
    std::ostringstream msg;
    msg << "invalid action " << action << " at state (x=" << state.x
        << ", y=" << state.y << "): " << n_actions << " actions available";
    throw std::invalid_argument(msg.str());
  }

  StepResult result;
  result.next.x = model.next_x(state.x, state.y, action);
  check_index(result.next.x, model.num_x(), "observable-state (Tx output)");

  const std::vector<double> ty =
      model.hidden_transition(state.x, state.y, action, result.next.x);
  result.next.y = sample_categorical(ty, rng);

  const std::vector<double> z =
      model.observation(result.next.x, result.next.y, action);
  result.observation = sample_categorical(z, rng);

  result.reward = model.reward(state.x, state.y, action);
  return result;
}

BeliefY belief_update(const Model& model, const BeliefY& prior, int x,
                      int action, int x_next, int obs) {
  check_index(x, model.num_x(), "observable-state");
  check_index(x_next, model.num_x(), "observable-state");
  check_index(obs, model.num_observations(), "observation");
  if (prior.size() != model.num_y()) {
    throw std::invalid_argument("prior size does not match the model's Y");
  }

  const int n = model.num_y();
  std::vector<double> predicted(static_cast<std::size_t>(n), 0.0);
  for (int y = 0; y < n; ++y) {
    const double p = prior.at(y);
    if (p <= 0.0) continue;
    const std::vector<double> ty = model.hidden_transition(x, y, action, x_next);
    for (int y_next = 0; y_next < n; ++y_next) {
      predicted[static_cast<std::size_t>(y_next)] +=
          ty[static_cast<std::size_t>(y_next)] * p;
    }
  }

  std::vector<double> posterior(static_cast<std::size_t>(n), 0.0);
  for (int y_next = 0; y_next < n; ++y_next) {
    const double pred = predicted[static_cast<std::size_t>(y_next)];
    if (pred <= 0.0) continue;
    const std::vector<double> z = model.observation(x_next, y_next, action);
    posterior[static_cast<std::size_t>(y_next)] =
        z[static_cast<std::size_t>(obs)] * pred;
  }
  return normalize(std::move(posterior));
}

void validate_model(const Model& model, double tol) {
  auto check_row = [tol](const std::vector<double>& row, const char* what) {
    double total = 0.0;
    for (double p : row) {
      if (!(p >= 0.0)) {
        throw std::invalid_argument(std::string(what) + " row has a negative entry");
      }
      total += p;
    }
    if (std::abs(total - 1.0) > tol) {
      throw std::invalid_argument(std::string(what) + " row does not sum to 1");
    }
  };

  for (int x = 0; x < model.num_x(); ++x) {
    const int n_actions = model.num_actions(x);
    for (int a = 0; a < n_actions; ++a) {
      for (int y = 0; y < model.num_y(); ++y) {
        const int x_next = model.next_x(x, y, a);
        check_index(x_next, model.num_x(), "observable-state (Tx output)");
        check_row(model.hidden_transition(x, y, a, x_next), "Ty");
        for (int y_next = 0; y_next < model.num_y(); ++y_next) {
          check_row(model.observation(x_next, y_next, a), "Z");
        }
      }
    }
  }
}

}  // namespace pitchmomdp
