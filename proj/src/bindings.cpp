#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chinos/games.hpp"
#include "chinos/metric.hpp"
#include "chinos/modes.hpp"
#include "chinos/shots.hpp"
#include "chinos/strategy.hpp"

namespace py = pybind11;
using namespace chinos;

namespace {

games::GameDefinition game_by_name(const std::string& name, std::optional<double> theta) {
    if (name == "classical") return games::classical_game();
    if (name == "boson") return games::boson_game();
    if (!theta) throw ValidationError("game '" + name + "' needs a theta");
    if (name == "hardcore") return games::hardcore_game(*theta);
    if (name == "qubit") return games::qubit_game(*theta);
    throw ValidationError("unknown game: " + name);
}

metric::Order parse_order(const std::string& order) {
    if (order == "bob_first" || order == "bobfirst") return metric::Order::BobFirst;
    if (order == "alice_first" || order == "alicefirst") return metric::Order::AliceFirst;
    throw ValidationError("unknown order: " + order);
}

std::vector<std::vector<cx>> metric_entries(const metric::MetricMatrix& g, bool block_order) {
    std::vector<std::vector<cx>> out;
    for (int r = 0; r < 16; ++r) {
        std::vector<cx> row;
        for (int c = 0; c < 16; ++c) {
            const int rr = block_order ? metric::kBlockOrder[static_cast<size_t>(r)] : r;
            const int cc = block_order ? metric::kBlockOrder[static_cast<size_t>(c)] : c;
            row.push_back(g.at(rr, cc));
        }
        out.push_back(std::move(row));
    }
    return out;
}

strategy::MixedStrategy strategy_from_lists(const games::GameDefinition& game,
                                            const std::vector<int>& choices,
                                            const std::vector<int>& guesses) {
    return strategy::make_strategy(game, choices, guesses);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Chinos game simulator core";

    py::register_exception<Error>(m, "ChinosError");

    // games
    m.def("classical_round",
          [](int ca, int cb, int ga, int gb, bool enforce) {
              const games::Winner w = games::classical_round(ca, cb, ga, gb, enforce);
              return w == games::Winner::A ? "A" : w == games::Winner::B ? "B" : "none";
          },
          py::arg("c_a"), py::arg("c_b"), py::arg("g_a"), py::arg("g_b"),
          py::arg("enforce_intelligence") = true);

    m.def("outcome_probs",
          [](const std::string& game, int i, int j, std::optional<double> theta) {
              return games::outcome_probs(game_by_name(game, theta), i, j);
          },
          py::arg("game"), py::arg("i"), py::arg("j"), py::arg("theta") = py::none());

    m.def("averaged_probs",
          [](const std::string& game, std::optional<double> theta,
             std::optional<std::vector<double>> mixture) {
              const games::GameDefinition g = game_by_name(game, theta);
              const games::AveragedTable avg = mixture ? games::averaged_probs(g, *mixture)
                                                       : games::averaged_probs_uniform(g);
              return avg.columns;
          },
          py::arg("game"), py::arg("theta") = py::none(), py::arg("mixture") = py::none());

    // strategy
    m.def("winning_probability",
          [](const std::string& game, std::optional<double> theta, const std::vector<int>& choices,
             const std::vector<int>& guesses, std::optional<std::vector<double>> bob_mixture) {
              const games::GameDefinition g = game_by_name(game, theta);
              const strategy::MixedStrategy alice = strategy_from_lists(g, choices, guesses);
              const std::vector<double> bob = bob_mixture
                                                  ? *bob_mixture
                                                  : std::vector<double>(
                                                        static_cast<size_t>(g.n_choices()),
                                                        1.0 / g.n_choices());
              return strategy::winning_probability(g, alice, bob);
          },
          py::arg("game"), py::arg("theta"), py::arg("alice_choices"), py::arg("alice_guesses"),
          py::arg("bob_mixture") = py::none());

    m.def("crossing_angles", [](const std::string& family) {
        if (family == "hardcore") return strategy::crossing_angles(strategy::CrossingFamily::HardCore);
        if (family == "qubit") return strategy::crossing_angles(strategy::CrossingFamily::Qubit);
        throw ValidationError("unknown crossing family: " + family);
    });

    m.def("equilibrium",
          [](const std::string& game, std::optional<double> theta) {
              const games::GameDefinition g = game_by_name(game, theta);
              const strategy::EquilibriumReport rep = strategy::equilibrium_scan(g);
              py::dict out;
              out["stable"] = rep.stable;
              out["cycle_detected"] = rep.cycle_detected;
              out["winner"] = rep.winner == strategy::ScanWinner::A   ? "A"
                              : rep.winner == strategy::ScanWinner::B ? "B"
                                                                      : "symmetric";
              out["P_A"] = rep.iterations.back().p_a;
              out["P_B"] = rep.iterations.back().p_b;
              out["iterations"] = rep.iterations.size();
              return out;
          },
          py::arg("game"), py::arg("theta") = py::none());

    m.def("monte_carlo",
          [](const std::string& game, std::optional<double> theta, const std::vector<int>& choices,
             const std::vector<int>& guesses, const std::vector<int>& bob_choices,
             const std::vector<int>& bob_guesses, std::int64_t rounds, std::uint64_t seed) {
              const games::GameDefinition g = game_by_name(game, theta);
              const strategy::MonteCarloResult res = strategy::monte_carlo_rounds(
                  g, strategy_from_lists(g, choices, guesses),
                  strategy_from_lists(g, bob_choices, bob_guesses), rounds, seed);
              return py::make_tuple(res.p_a, res.p_b, res.stderr_a);
          },
          py::arg("game"), py::arg("theta"), py::arg("alice_choices"), py::arg("alice_guesses"),
          py::arg("bob_choices"), py::arg("bob_guesses"), py::arg("rounds"), py::arg("seed"));

    // metric
    m.def("metric_matrix",
          [](double theta, const std::string& order, bool block_order) {
              return metric_entries(metric::metric_matrix(theta, parse_order(order)), block_order);
          },
          py::arg("theta"), py::arg("order") = "bob_first", py::arg("block_order") = false);

    m.def("metric_labels", [](bool block_order) {
        std::vector<std::string> out;
        for (int k = 0; k < 16; ++k) {
            const int idx = block_order ? metric::kBlockOrder[static_cast<size_t>(k)] : k;
            out.push_back(metric::PairIndex::from_lex(idx).label());
        }
        return out;
    }, py::arg("block_order") = false);

    m.def("two_qubit_probabilities",
          [](double theta, const std::string& order, int b0) {
              const metric::TwoQubitReport rep =
                  metric::two_qubit_probabilities(theta, parse_order(order), b0);
              return py::make_tuple(rep.p_a, rep.p_b);
          },
          py::arg("theta"), py::arg("order") = "bob_first", py::arg("b0") = 0);

    m.def("purity_relation", [](double theta) {
        const metric::PurityRelation rel = metric::purity_relation(theta);
        return py::make_tuple(rel.ratio, rel.rhs, rel.purity);
    });

    m.def("orthogonal_guesses",
          [](double theta, const std::string& alice_guess, double threshold) {
              const metric::MetricMatrix g = metric::metric_matrix(theta);
              std::vector<std::string> out;
              for (const metric::PairIndex& q :
                   metric::orthogonal_guesses(g, metric::PairIndex::parse(alice_guess), threshold))
                  out.push_back(q.label());
              return out;
          },
          py::arg("theta"), py::arg("alice_guess"), py::arg("threshold") = kExactTol);

    m.def("block_decomposition",
          [](double theta) {
              const metric::BlockDecomposition d =
                  metric::block_decomposition(metric::metric_matrix(theta));
              auto labeled = [](const std::vector<std::vector<int>>& groups) {
                  std::vector<std::vector<std::string>> out;
                  for (const auto& group : groups) {
                      std::vector<std::string> labels;
                      for (int lex : group) labels.push_back(metric::PairIndex::from_lex(lex).label());
                      out.push_back(std::move(labels));
                  }
                  return out;
              };
              py::dict out;
              out["sets"] = labeled(d.sets);
              out["pairs"] = labeled(d.pairs);
              return out;
          },
          py::arg("theta"));

    m.def("admissible_pairs",
          [](const std::string& path, double threshold) {
              const shots::ExperimentalMatrix exp = shots::ingest_experimental_file(path);
              std::vector<std::pair<std::string, std::string>> out;
              for (const auto& [r, c] : shots::admissible_pairs(exp, threshold))
                  out.emplace_back(r.label(), c.label());
              return out;
          },
          py::arg("path"), py::arg("threshold") = 0.25);

    // shots
    m.def("estimate_overlap",
          [](const std::string& row, const std::string& col, double theta, std::int64_t n_shots,
             std::uint64_t seed, double noise_p) {
              shots::ShotConfig cfg;
              cfg.shots = n_shots;
              cfg.seed = seed;
              cfg.noise = noise_p > 0.0 ? shots::NoiseModel::depolarizing(noise_p)
                                        : shots::NoiseModel::none();
              const shots::ShotEstimate est = shots::estimate_overlap(
                  metric::PairIndex::parse(row), metric::PairIndex::parse(col), theta, cfg);
              return py::make_tuple(est.estimate, est.stderr_est, est.expected);
          },
          py::arg("row"), py::arg("col"), py::arg("theta") = 0.0, py::arg("shots") = 8192,
          py::arg("seed") = 0, py::arg("noise_p") = 0.0);

    m.def("calibrated_depolarizing_p", &shots::calibrated_depolarizing_p);

    m.def("compare_experiment",
          [](const std::string& path, double theta) {
              const shots::ExperimentalMatrix exp = shots::ingest_experimental_file(path);
              const shots::ErrorReport rep = shots::error_report(metric::metric_matrix(theta), exp);
              py::dict out;
              out["avg_err_on_units"] = rep.avg_err_on_units;
              out["avg_err_on_zeros"] = rep.avg_err_on_zeros;
              out["max_err"] = rep.max_err;
              return out;
          },
          py::arg("path"), py::arg("theta") = 0.0);

    m.attr("__version__") = "0.1.0";
}
