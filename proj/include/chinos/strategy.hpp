#pragma once

// Strategies, best responses, iterated equilibrium scan, crossing-angle
// solver and Monte Carlo validation for the classical and one-mode games.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "chinos/games.hpp"

namespace chinos::strategy {

enum class TieBreak { LowestOutcome, Randomized };
enum class Role { Alice, Bob };
enum class ScanWinner { A, B, Symmetric };

// Uniform or weighted mixture over choices plus a deterministic guess per
// choice. Guesses for choices with zero weight are ignored.
struct MixedStrategy {
    std::vector<double> choice_weights;  // indexed by position in choice_set
    std::vector<int> guess_policy;       // guess label per choice position

    bool operator==(const MixedStrategy& other) const = default;
};

struct EquilibriumIteration {
    MixedStrategy alice;
    MixedStrategy bob;
    double p_a = 0.0;
    double p_b = 0.0;
    std::string note;
};

struct EquilibriumReport {
    std::vector<EquilibriumIteration> iterations;
    bool stable = false;
    bool cycle_detected = false;
    ScanWinner winner = ScanWinner::Symmetric;
};

// Argmax guess for one column of an averaged table. Ties resolve to the
// lowest outcome by default, or uniformly at random with the caller's rng.
int best_guess(const games::AveragedTable& avg, int choice_pos, TieBreak tie = TieBreak::LowestOutcome,
               std::uint64_t seed = 0);

// All argmax-tied guesses for a column, ascending; respects the intelligence
// map when the game enforces it.
std::vector<int> best_guesses(const games::AveragedTable& avg, int choice_pos);

// Alice's hit probability under the residual-claimant scoring: she wins when
// her guess matches the measured outcome, Bob wins otherwise.
// P_A = sum_i w_A(i) <p_i(guess(i))> averaged over Bob's mixture; P_B = 1 - P_A.
std::pair<double, double> winning_probability(const games::GameDefinition& game,
                                              const MixedStrategy& alice,
                                              const std::vector<double>& bob_choice_mixture);

// The default candidate space: uniform mixtures over every nonempty subset of
// the responder's choices, with argmax guess policies against the opponent
// (ties expanded into separate candidates).
std::vector<MixedStrategy> default_candidates(const games::GameDefinition& game,
                                              const std::vector<double>& opponent_mixture);

// Best response over a finite candidate set. Candidates are ranked by their
// guaranteed (worst-case over the opponent's pure choices) winning
// probability, then by the value against the given opponent, then by
// enumeration order. Under the residual scoring the games are zero sum, so
// the top-ranked candidate is a security strategy.
MixedStrategy best_response(const games::GameDefinition& game, Role responder,
                            const MixedStrategy& opponent,
                            const std::vector<MixedStrategy>* search_space = nullptr);

// Guaranteed winning probability of an Alice strategy (minimum over Bob's
// pure choices).
double security_value(const games::GameDefinition& game, const MixedStrategy& alice);

// Alternates best responses until the profile repeats or max_iters is hit.
EquilibriumReport equilibrium_scan(const games::GameDefinition& game, int max_iters = 16);

enum class CrossingFamily { HardCore, Qubit };

// Angles where the averaged p(0) crosses 1/2: theta1 from the O2 column,
// theta2 from the O1 column, found by bracketed bisection to 1e-12.
std::pair<double, double> crossing_angles(CrossingFamily family);

// Bisection root of f on [lo, hi]; throws RootNotBracketedError when
// f(lo) and f(hi) share a sign.
double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double tol = 1e-12, int max_iter = 200);

struct MonteCarloResult {
    double p_a = 0.0;
    double p_b = 0.0;
    double stderr_a = 0.0;
    std::int64_t rounds = 0;
};

// Samples rounds with an explicit seeded generator; reproducible bit for bit
// under a fixed seed. Quantum games score by the residual convention; the
// classical game adjudicates each round by guess distance.
MonteCarloResult monte_carlo_rounds(const games::GameDefinition& game, const MixedStrategy& alice,
                                    const MixedStrategy& bob, std::int64_t rounds, std::uint64_t seed);

// Uniform mixture with argmax guesses against a uniform opponent.
MixedStrategy uniform_best_guess_strategy(const games::GameDefinition& game);

MixedStrategy make_strategy(const games::GameDefinition& game, const std::vector<int>& choices,
                            const std::vector<int>& guesses);

}  // namespace chinos::strategy
