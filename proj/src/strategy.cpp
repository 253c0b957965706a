#include "chinos/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace chinos::strategy {

namespace {

constexpr double kPi = 3.14159265358979323846;

int choice_pos(const games::GameDefinition& game, int choice_label) {
    const auto& cs = game.choice_set;
    const auto it = std::find(cs.begin(), cs.end(), choice_label);
    if (it == cs.end()) throw ValidationError("unknown choice label");
    return static_cast<int>(it - cs.begin());
}

int guess_pos(const games::GameDefinition& game, int guess_label) {
    const auto& gs = game.guess_set;
    const auto it = std::find(gs.begin(), gs.end(), guess_label);
    if (it == gs.end()) throw ValidationError("unknown guess label");
    return static_cast<int>(it - gs.begin());
}

// Portable uniform double in [0,1) from the raw engine output.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Alice's hit probability against one pure Bob choice.
double value_vs_pure(const games::ProbabilityTable& table, const MixedStrategy& alice, int bob_pos) {
    const auto& game = table.game;
    double v = 0.0;
    for (int a = 0; a < game.n_choices(); ++a) {
        const double w = alice.choice_weights[static_cast<size_t>(a)];
        if (w <= 0.0) continue;
        const int g = guess_pos(game, alice.guess_policy[static_cast<size_t>(a)]);
        v += w * table.cell(a, bob_pos)[static_cast<size_t>(g)];
    }
    return v;
}

double security_from_table(const games::ProbabilityTable& table, const MixedStrategy& alice) {
    double worst = 1.0;
    for (int b = 0; b < table.game.n_choices(); ++b) worst = std::min(worst, value_vs_pure(table, alice, b));
    return worst;
}

double value_vs_mixture(const games::ProbabilityTable& table, const MixedStrategy& alice,
                        const std::vector<double>& bob_mixture) {
    double v = 0.0;
    for (int b = 0; b < table.game.n_choices(); ++b) {
        if (bob_mixture[static_cast<size_t>(b)] <= 0.0) continue;
        v += bob_mixture[static_cast<size_t>(b)] * value_vs_pure(table, alice, b);
    }
    return v;
}

std::vector<MixedStrategy> candidates_from_table(const games::ProbabilityTable& table,
                                                 const std::vector<double>& opponent_mixture);

// Best value Alice can reach against a fixed Bob mixture, over the default
// candidate space built against that mixture.
double alice_best_value_vs(const games::ProbabilityTable& table, const std::vector<double>& bob_mixture) {
    double best = 0.0;
    for (const MixedStrategy& cand : candidates_from_table(table, bob_mixture)) {
        best = std::max(best, value_vs_mixture(table, cand, bob_mixture));
    }
    return best;
}

std::vector<std::vector<int>> nonempty_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) subset.push_back(i);
        out.push_back(std::move(subset));
    }
    return out;
}

std::vector<int> best_guesses_from_column(const games::GameDefinition& game,
                                          const std::vector<double>& column, int choice_pos_idx) {
    const int choice_label = game.choice_set[static_cast<size_t>(choice_pos_idx)];
    std::vector<int> allowed = game.enforce_intelligence
                                   ? game.allowed_guesses(choice_label)
                                   : game.guess_set;
    double best = -1.0;
    for (int g : allowed) best = std::max(best, column[static_cast<size_t>(guess_pos(game, g))]);
    std::vector<int> ties;
    for (int g : allowed) {
        if (column[static_cast<size_t>(guess_pos(game, g))] >= best - 1e-12) ties.push_back(g);
    }
    std::sort(ties.begin(), ties.end());
    return ties;
}

std::vector<MixedStrategy> candidates_from_table(const games::ProbabilityTable& table,
                                                 const std::vector<double>& opponent_mixture) {
    const auto& game = table.game;
    const int n = game.n_choices();

    // Averaged columns against this opponent, for the guess policies.
    std::vector<std::vector<double>> columns(static_cast<size_t>(n),
                                             std::vector<double>(static_cast<size_t>(game.n_guesses()), 0.0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const auto& cell = table.cell(a, b);
            for (size_t g = 0; g < cell.size(); ++g)
                columns[static_cast<size_t>(a)][g] += opponent_mixture[static_cast<size_t>(b)] * cell[g];
        }

    std::vector<std::vector<int>> tied(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) tied[static_cast<size_t>(a)] = best_guesses_from_column(game, columns[static_cast<size_t>(a)], a);

    std::vector<MixedStrategy> out;
    for (const auto& subset : nonempty_subsets(n)) {
        // Cartesian product of the tied guesses, lexicographic.
        std::vector<size_t> idx(subset.size(), 0);
        while (true) {
            MixedStrategy s;
            s.choice_weights.assign(static_cast<size_t>(n), 0.0);
            s.guess_policy.assign(static_cast<size_t>(n), game.guess_set.front());
            for (size_t k = 0; k < subset.size(); ++k) {
                s.choice_weights[static_cast<size_t>(subset[k])] = 1.0 / static_cast<double>(subset.size());
                s.guess_policy[static_cast<size_t>(subset[k])] = tied[static_cast<size_t>(subset[k])][idx[k]];
            }
            // Off-support guesses still have to respect intelligence.
            for (int a = 0; a < n; ++a) {
                if (s.choice_weights[static_cast<size_t>(a)] == 0.0)
                    s.guess_policy[static_cast<size_t>(a)] = tied[static_cast<size_t>(a)].front();
            }
            out.push_back(std::move(s));
            size_t k = 0;
            for (; k < subset.size(); ++k) {
                if (++idx[k] < tied[static_cast<size_t>(subset[k])].size()) break;
                idx[k] = 0;
            }
            if (k == subset.size()) break;
        }
    }
    return out;
}

void check_weights(const games::GameDefinition& game, const std::vector<double>& w) {
    if (w.size() != static_cast<size_t>(game.n_choices())) throw ValidationError("weight vector length mismatch");
    double total = 0.0;
    for (double x : w) {
        if (x < 0.0) throw ValidationError("negative strategy weight");
        total += x;
    }
    if (std::abs(total - 1.0) > 1e-9) throw ValidationError("strategy weights must sum to 1");
}

}  // namespace

int best_guess(const games::AveragedTable& avg, int choice_pos_idx, TieBreak tie, std::uint64_t seed) {
    const std::vector<int> ties = best_guesses(avg, choice_pos_idx);
    if (tie == TieBreak::LowestOutcome || ties.size() == 1) return ties.front();
    std::mt19937_64 rng(seed);
    return ties[static_cast<size_t>(uniform01(rng) * static_cast<double>(ties.size()))];
}

std::vector<int> best_guesses(const games::AveragedTable& avg, int choice_pos_idx) {
    return best_guesses_from_column(avg.game, avg.columns.at(static_cast<size_t>(choice_pos_idx)), choice_pos_idx);
}

std::pair<double, double> winning_probability(const games::GameDefinition& game,
                                              const MixedStrategy& alice,
                                              const std::vector<double>& bob_choice_mixture) {
    check_weights(game, alice.choice_weights);
    check_weights(game, bob_choice_mixture);
    const games::ProbabilityTable table = games::probability_table(game);
    const double p_a = value_vs_mixture(table, alice, bob_choice_mixture);
    return {p_a, 1.0 - p_a};
}

std::vector<MixedStrategy> default_candidates(const games::GameDefinition& game,
                                              const std::vector<double>& opponent_mixture) {
    return candidates_from_table(games::probability_table(game), opponent_mixture);
}

double security_value(const games::GameDefinition& game, const MixedStrategy& alice) {
    return security_from_table(games::probability_table(game), alice);
}

MixedStrategy best_response(const games::GameDefinition& game, Role responder,
                            const MixedStrategy& opponent,
                            const std::vector<MixedStrategy>* search_space) {
    const games::ProbabilityTable table = games::probability_table(game);
    const int n = game.n_choices();

    if (responder == Role::Alice) {
        const std::vector<MixedStrategy> space =
            search_space ? *search_space : candidates_from_table(table, opponent.choice_weights);
        if (space.empty()) throw ValidationError("empty search space");
        const MixedStrategy* best = nullptr;
        double best_sec = -1.0, best_val = -1.0;
        for (const MixedStrategy& cand : space) {
            const double sec = security_from_table(table, cand);
            const double val = value_vs_mixture(table, cand, opponent.choice_weights);
            if (sec > best_sec + 1e-12 ||
                (sec > best_sec - 1e-12 && val > best_val + 1e-12)) {
                best = &cand;
                best_sec = sec;
                best_val = val;
            }
        }
        return *best;
    }

    // Bob concedes Alice's best response against his mixture; he ranks his
    // own candidates by the value they guarantee him.
    std::vector<MixedStrategy> space;
    if (search_space) {
        space = *search_space;
    } else {
        for (const auto& subset : nonempty_subsets(n)) {
            MixedStrategy s;
            s.choice_weights.assign(static_cast<size_t>(n), 0.0);
            s.guess_policy.assign(static_cast<size_t>(n), game.guess_set.front());
            for (int a : subset) s.choice_weights[static_cast<size_t>(a)] = 1.0 / static_cast<double>(subset.size());
            space.push_back(std::move(s));
        }
    }
    if (space.empty()) throw ValidationError("empty search space");
    const MixedStrategy* best = nullptr;
    double best_sec = -1.0, best_val = -1.0;
    for (const MixedStrategy& cand : space) {
        const double sec = 1.0 - alice_best_value_vs(table, cand.choice_weights);
        const double val = 1.0 - value_vs_mixture(table, opponent, cand.choice_weights);
        if (sec > best_sec + 1e-12 ||
            (sec > best_sec - 1e-12 && val > best_val + 1e-12)) {
            best = &cand;
            best_sec = sec;
            best_val = val;
        }
    }
    return *best;
}

EquilibriumReport equilibrium_scan(const games::GameDefinition& game, int max_iters) {
    if (max_iters < 1) throw ValidationError("max_iters must be at least 1");
    const games::ProbabilityTable table = games::probability_table(game);
    const int n = game.n_choices();

    EquilibriumReport report;
    MixedStrategy alice = uniform_best_guess_strategy(game);
    MixedStrategy bob;
    bob.choice_weights.assign(static_cast<size_t>(n), 1.0 / n);
    bob.guess_policy.assign(static_cast<size_t>(n), game.guess_set.front());

    auto record = [&](const std::string& note) {
        const double p_a = value_vs_mixture(table, alice, bob.choice_weights);
        report.iterations.push_back({alice, bob, p_a, 1.0 - p_a, note});
    };
    record("initial uniform play");

    std::vector<std::pair<MixedStrategy, MixedStrategy>> seen{{alice, bob}};
    for (int it = 0; it < max_iters; ++it) {
        const MixedStrategy next_alice = best_response(game, Role::Alice, bob);
        const bool alice_moved = !(next_alice == alice);
        alice = next_alice;
        if (alice_moved) record("Alice responds");

        const MixedStrategy next_bob = best_response(game, Role::Bob, alice);
        const bool bob_moved = !(next_bob.choice_weights == bob.choice_weights);
        bob = next_bob;
        if (bob_moved) record("Bob responds");

        if (!alice_moved && !bob_moved) {
            report.stable = true;
            break;
        }
        const auto profile = std::make_pair(alice, bob);
        if (std::find(seen.begin(), seen.end(), profile) != seen.end()) {
            report.cycle_detected = true;
            break;
        }
        seen.push_back(profile);
    }

    const double final_pa = report.iterations.back().p_a;
    if (final_pa > 0.5 + 1e-9) report.winner = ScanWinner::A;
    else if (final_pa < 0.5 - 1e-9) report.winner = ScanWinner::B;
    else report.winner = ScanWinner::Symmetric;
    return report;
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tol, int max_iter) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) throw RootNotBracketedError("no sign change on the bracket");
    for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::pair<double, double> crossing_angles(CrossingFamily family) {
    const bool hardcore = family == CrossingFamily::HardCore;
    const double lo = 0.01;
    const double hi = (hardcore ? kPi / 2.0 : kPi) - 0.01;

    auto avg_p0 = [&](int column_pos, double theta) {
        const games::GameDefinition g =
            hardcore ? games::hardcore_game(theta) : games::qubit_game(theta);
        return games::averaged_probs_uniform(g).columns[static_cast<size_t>(column_pos)][0] - 0.5;
    };
    auto first_root = [&](int column_pos) {
        // Scan for the first sign change; the qubit O2 column crosses 1/2
        // twice, and only the first crossing is the region boundary.
        const int grid = 2048;
        double prev_x = lo;
        double prev_f = avg_p0(column_pos, lo);
        if (prev_f == 0.0) return lo;
        for (int k = 1; k <= grid; ++k) {
            const double x = lo + (hi - lo) * static_cast<double>(k) / grid;
            const double fx = avg_p0(column_pos, x);
            if (fx == 0.0) return x;
            if ((fx > 0.0) != (prev_f > 0.0)) {
                return bisect_root([&](double t) { return avg_p0(column_pos, t); }, prev_x, x);
            }
            prev_x = x;
            prev_f = fx;
        }
        throw RootNotBracketedError("averaged p(0) never crosses 1/2 on the domain");
    };

    const double theta1 = first_root(1);  // O2 column
    const double theta2 = first_root(0);  // O1 column
    return {theta1, theta2};
}

MonteCarloResult monte_carlo_rounds(const games::GameDefinition& game, const MixedStrategy& alice,
                                    const MixedStrategy& bob, std::int64_t rounds, std::uint64_t seed) {
    if (rounds < 1) throw ValidationError("rounds must be positive");
    check_weights(game, alice.choice_weights);
    check_weights(game, bob.choice_weights);
    const games::ProbabilityTable table = games::probability_table(game);
    std::mt19937_64 rng(seed);

    auto sample_index = [&](const std::vector<double>& weights) {
        const double u = uniform01(rng);
        double acc = 0.0;
        for (size_t i = 0; i < weights.size(); ++i) {
            acc += weights[i];
            if (u < acc) return static_cast<int>(i);
        }
        return static_cast<int>(weights.size()) - 1;
    };

    std::int64_t wins_a = 0;
    std::int64_t wins_b = 0;
    for (std::int64_t r = 0; r < rounds; ++r) {
        const int a = sample_index(alice.choice_weights);
        const int b = sample_index(bob.choice_weights);
        const int guess_a = alice.guess_policy[static_cast<size_t>(a)];
        if (!game.mode) {
            // Full classical adjudication: Bob sees g_A and, if his policy
            // guess collides, falls back to his lowest admissible guess.
            int guess_b = bob.guess_policy[static_cast<size_t>(b)];
            if (std::abs(guess_a - guess_b) < game.d0) {
                for (int g : game.allowed_guesses(game.choice_set[static_cast<size_t>(b)])) {
                    if (std::abs(guess_a - g) >= game.d0) {
                        guess_b = g;
                        break;
                    }
                }
            }
            const games::Winner w = games::classical_round(game.choice_set[static_cast<size_t>(a)],
                                                           game.choice_set[static_cast<size_t>(b)],
                                                           guess_a, guess_b, game.enforce_intelligence);
            if (w == games::Winner::A) ++wins_a;
            if (w == games::Winner::B) ++wins_b;
            continue;
        }
        // Quantum game: draw the measured outcome, residual scoring.
        const auto& cell = table.cell(a, b);
        const int outcome = sample_index(cell);
        const bool hit = game.guess_set[static_cast<size_t>(outcome)] == guess_a;
        if (hit) ++wins_a;
        else ++wins_b;
    }

    MonteCarloResult res;
    res.rounds = rounds;
    res.p_a = static_cast<double>(wins_a) / static_cast<double>(rounds);
    res.p_b = static_cast<double>(wins_b) / static_cast<double>(rounds);
    res.stderr_a = std::sqrt(std::max(res.p_a * (1.0 - res.p_a), 1e-12) / static_cast<double>(rounds));
    return res;
}

MixedStrategy uniform_best_guess_strategy(const games::GameDefinition& game) {
    const int n = game.n_choices();
    const games::AveragedTable avg = games::averaged_probs_uniform(game);
    MixedStrategy s;
    s.choice_weights.assign(static_cast<size_t>(n), 1.0 / n);
    s.guess_policy.resize(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) s.guess_policy[static_cast<size_t>(a)] = best_guess(avg, a);
    return s;
}

MixedStrategy make_strategy(const games::GameDefinition& game, const std::vector<int>& choices,
                            const std::vector<int>& guesses) {
    if (choices.size() != guesses.size() || choices.empty()) {
        throw ValidationError("choices and guesses must be nonempty and aligned");
    }
    MixedStrategy s;
    s.choice_weights.assign(static_cast<size_t>(game.n_choices()), 0.0);
    s.guess_policy.assign(static_cast<size_t>(game.n_choices()), game.guess_set.front());
    for (size_t k = 0; k < choices.size(); ++k) {
        const int pos = choice_pos(game, choices[k]);
        s.choice_weights[static_cast<size_t>(pos)] = 1.0 / static_cast<double>(choices.size());
        s.guess_policy[static_cast<size_t>(pos)] = guesses[k];
    }
    return s;
}

}  // namespace chinos::strategy
