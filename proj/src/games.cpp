#include "chinos/games.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace chinos::games {

const std::vector<int>& GameDefinition::allowed_guesses(int choice) const {
    auto it = intelligence.find(choice);
    if (it == intelligence.end()) throw ValidationError("choice has no intelligence entry: " + std::to_string(choice));
    return it->second;
}

GameDefinition classical_game() {
    GameDefinition g;
    g.name = "classical";
    g.choice_set = {0, 1};  // coins drawn
    g.guess_set = {0, 1, 2};
    g.mode = std::nullopt;
    g.d0 = 1.0;
    g.intelligence = {{0, {0, 1}}, {1, {1, 2}}};
    return g;
}

GameDefinition boson_game() {
    GameDefinition g;
    g.name = "boson";
    g.choice_set = {1, 2, 3, 4};
    g.guess_set = {0, 1, 2};
    g.mode = modes::ModeKind::boson();
    g.d0 = 1.0;
    // Reachable totals given the opponent adds at most one excitation.
    g.intelligence = {{1, {0, 1}}, {2, {0, 1, 2}}, {3, {0, 1, 2}}, {4, {1, 2}}};
    return g;
}

GameDefinition hardcore_game(double theta) {
    GameDefinition g;
    g.name = "hardcore";
    g.choice_set = {1, 2, 3};
    g.guess_set = {0, 1};
    g.mode = modes::ModeKind::hardcore(theta);
    g.d0 = 1.0;
    g.intelligence = {{1, {0, 1}}, {2, {0, 1}}, {3, {0, 1}}};
    return g;
}

GameDefinition qubit_game(double theta) {
    GameDefinition g;
    g.name = "qubit";
    g.choice_set = {1, 2, 3};
    g.guess_set = {0, 1};
    g.mode = modes::ModeKind::qubit(theta);
    g.d0 = 1.0;
    g.intelligence = {{1, {0, 1}}, {2, {0, 1}}, {3, {0, 1}}};
    return g;
}

modes::OperatorFamily family_for(const GameDefinition& game) {
    if (!game.mode) throw ValidationError("the classical game has no operator family");
    switch (game.mode->tag) {
        case modes::ModeTag::BosonFock3: return modes::boson_family();
        case modes::ModeTag::HardCore: return modes::hardcore_family(game.mode->theta);
        case modes::ModeTag::Qubit: return modes::qubit_family(game.mode->theta);
        case modes::ModeTag::TwoQubitBell: break;
    }
    throw ValidationError("two-qubit games are driven by the metric module");
}

Winner classical_round(int c_a, int c_b, int g_a, int g_b, bool enforce_intelligence) {
    const GameDefinition g = classical_game();
    if (c_a < 0 || c_a > 1 || c_b < 0 || c_b > 1) throw ValidationError("coin counts must be 0 or 1");
    if (g_a < 0 || g_a > 2 || g_b < 0 || g_b > 2) throw ValidationError("guesses must lie in {0,1,2}");
    if (std::abs(g_a - g_b) < g.d0) {
        throw RestrictionViolationError("guesses closer than the minimal distance");
    }
    if (enforce_intelligence) {
        const auto& a_allowed = g.allowed_guesses(c_a);
        const auto& b_allowed = g.allowed_guesses(c_b);
        if (std::find(a_allowed.begin(), a_allowed.end(), g_a) == a_allowed.end() ||
            std::find(b_allowed.begin(), b_allowed.end(), g_b) == b_allowed.end()) {
            throw IntelligenceViolationError("guess inconsistent with the player's own coins");
        }
    }
    const int joint = c_a + c_b;
    const int da = std::abs(g_a - joint);
    const int db = std::abs(g_b - joint);
    if (da < db) return Winner::A;
    if (db < da) return Winner::B;
    return Winner::None;
}

StateVector joint_state(const GameDefinition& game, int choice_a, int choice_b) {
    const modes::OperatorFamily fam = family_for(game);
    const Basis basis = fam.ops.front().dim == 3 ? Basis::Fock3 : Basis::Qubit1;
    const StateVector vacuum = StateVector::basis_state(basis, 0);
    const StateVector joint = apply(fam.op(choice_a), apply(fam.op(choice_b), vacuum));
    return normalize(joint).state;
}

std::vector<double> outcome_probs(const GameDefinition& game, int choice_a, int choice_b) {
    if (!game.mode) {
        // The classical device adds the coins; the outcome is deterministic.
        std::vector<double> p(game.guess_set.size(), 0.0);
        p[static_cast<size_t>(choice_a + choice_b)] = 1.0;
        return p;
    }
    const StateVector psi = joint_state(game, choice_a, choice_b);
    std::vector<double> p;
    p.reserve(psi.amps.size());
    for (const cx& z : psi.amps) p.push_back(std::norm(z));
    return p;
}

ProbabilityTable probability_table(const GameDefinition& game) {
    ProbabilityTable t;
    t.game = game;
    const int n = game.n_choices();
    t.cells.resize(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
        t.cells[static_cast<size_t>(a)].resize(static_cast<size_t>(n));
        for (int b = 0; b < n; ++b) {
            t.cells[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                outcome_probs(game, game.choice_set[static_cast<size_t>(a)], game.choice_set[static_cast<size_t>(b)]);
        }
    }
    return t;
}

AveragedTable averaged_probs(const GameDefinition& game, const std::vector<double>& bob_mixture) {
    if (bob_mixture.size() != static_cast<size_t>(game.n_choices())) {
        throw ValidationError("mixture length does not match the choice set");
    }
    double total = 0.0;
    for (double w : bob_mixture) {
        if (w < 0.0) throw ValidationError("mixture weights must be nonnegative");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9) throw ValidationError("mixture must sum to 1");

    const ProbabilityTable table = probability_table(game);
    AveragedTable avg;
    avg.game = game;
    avg.opponent_mixture = bob_mixture;
    avg.columns.resize(static_cast<size_t>(game.n_choices()));
    for (int a = 0; a < game.n_choices(); ++a) {
        std::vector<double> col(static_cast<size_t>(game.n_guesses()), 0.0);
        for (int b = 0; b < game.n_choices(); ++b) {
            const auto& cell = table.cell(a, b);
            for (size_t n = 0; n < col.size(); ++n) col[n] += bob_mixture[static_cast<size_t>(b)] * cell[n];
        }
        avg.columns[static_cast<size_t>(a)] = std::move(col);
    }
    return avg;
}

AveragedTable averaged_probs_uniform(const GameDefinition& game) {
    return averaged_probs(game, std::vector<double>(static_cast<size_t>(game.n_choices()),
                                                    1.0 / game.n_choices()));
}

bool restriction_check(const GameDefinition& game, int guess_a, int guess_b) {
    if (!game.mode) return std::abs(guess_a - guess_b) >= game.d0;
    // Quantum guesses map to orthonormal basis states, so the trace distance
    // is 0 for equal guesses and 1 otherwise.
    const double d = guess_a == guess_b ? 0.0 : 1.0;
    return d >= game.d0;
}

}  // namespace chinos::games
