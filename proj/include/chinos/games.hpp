#pragma once

// Game definitions (choices, guesses, device, restriction, intelligence) and
// exact per-move outcome probability tables.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chinos/modes.hpp"
#include "chinos/qstate.hpp"

namespace chinos::games {

enum class Winner { A, B, None };

struct GameDefinition {
    std::string name;
    std::vector<int> choice_set;                 // player choice labels
    std::vector<int> guess_set;                  // guess labels (occupancies / outcomes)
    std::optional<modes::ModeKind> mode;         // empty for the classical game
    double d0 = 1.0;                             // minimal distance between guesses
    std::map<int, std::vector<int>> intelligence;  // choice -> allowed guesses
    bool enforce_intelligence = true;

    int n_choices() const { return static_cast<int>(choice_set.size()); }
    int n_guesses() const { return static_cast<int>(guess_set.size()); }
    const std::vector<int>& allowed_guesses(int choice) const;
};

GameDefinition classical_game();
GameDefinition boson_game();
GameDefinition hardcore_game(double theta);
GameDefinition qubit_game(double theta);

// Outcome distributions p_{i,j}(n) for every pair of choices. Cells are
// indexed by positions in choice_set, entries by positions in guess_set.
struct ProbabilityTable {
    GameDefinition game;
    // cells[a][b][n] = p for Alice choice a, Bob choice b, outcome n
    std::vector<std::vector<std::vector<double>>> cells;

    const std::vector<double>& cell(int alice_pos, int bob_pos) const {
        return cells.at(static_cast<size_t>(alice_pos)).at(static_cast<size_t>(bob_pos));
    }
};

struct AveragedTable {
    GameDefinition game;
    std::vector<double> opponent_mixture;              // over Bob's choices
    std::vector<std::vector<double>> columns;          // columns[a][n] = <p_a(n)>
};

// Winner of one classical round: the guess closest to g_AB = cA + cB wins,
// equal distances are a push. Throws RestrictionViolationError when
// |gA - gB| < d0 and IntelligenceViolationError when enforcement is on and a
// guess is outside the allowed set for the player's own coin count.
Winner classical_round(int c_a, int c_b, int g_a, int g_b, bool enforce_intelligence = true);

// Normalized joint state O_i^A O_j^B |0>; Bob's operator acts first.
// Choices are game labels (1-based for the operator games).
StateVector joint_state(const GameDefinition& game, int choice_a, int choice_b);

std::vector<double> outcome_probs(const GameDefinition& game, int choice_a, int choice_b);

ProbabilityTable probability_table(const GameDefinition& game);

AveragedTable averaged_probs(const GameDefinition& game, const std::vector<double>& bob_mixture);
AveragedTable averaged_probs_uniform(const GameDefinition& game);

// True iff the two guesses are at distance >= d0: |gA - gB| classically,
// trace distance between guess basis states (0 or 1) in the quantum games.
bool restriction_check(const GameDefinition& game, int guess_a, int guess_b);

// The operator family behind a quantum game definition.
modes::OperatorFamily family_for(const GameDefinition& game);

}  // namespace chinos::games
