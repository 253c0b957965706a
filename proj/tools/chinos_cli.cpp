// Command-line front end: reproduces the probability tables, strategy
// analyses, metric matrices and shot-sampled experiments of every game
// variant, and compares theory against measured data.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "chinos/games.hpp"
#include "chinos/metric.hpp"
#include "chinos/modes.hpp"
#include "chinos/shots.hpp"
#include "chinos/strategy.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitData = 3;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Angles in radians, with exact aliases for the special values:
// "pi", "pi/3", "2pi/3", "0.25pi", plain decimals.
double parse_angle(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    const size_t pi_pos = s.find("pi");
    if (pi_pos == std::string::npos) {
        size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw chinos::ValidationError("bad angle: " + text);
        return v;
    }
    double num = 1.0;
    if (pi_pos > 0) {
        const std::string head = s.substr(0, pi_pos);
        if (head == "-") num = -1.0;
        else {
            size_t used = 0;
            num = std::stod(head, &used);
            if (used != head.size()) throw chinos::ValidationError("bad angle: " + text);
        }
    }
    double den = 1.0;
    if (pi_pos + 2 < s.size()) {
        const std::string tail = s.substr(pi_pos + 2);
        if (tail.size() < 2 || tail[0] != '/') throw chinos::ValidationError("bad angle: " + text);
        size_t used = 0;
        den = std::stod(tail.substr(1), &used);
        if (used != tail.size() - 1 || den == 0.0) throw chinos::ValidationError("bad angle: " + text);
    }
    return num * kPi / den;
}

std::uint64_t default_seed(std::optional<std::uint64_t> flag_seed) {
    if (flag_seed) return *flag_seed;
    if (const char* env = std::getenv("CHINOS_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw chinos::ShapeError("cannot open output file: " + path);
    return file;
}

chinos::games::GameDefinition make_game(const std::string& name, std::optional<double> theta) {
    using namespace chinos::games;
    auto need_theta = [&]() {
        if (!theta) throw chinos::ValidationError("--theta is required for game '" + name + "'");
        return *theta;
    };
    if (name == "classical") return classical_game();
    if (name == "boson") return boson_game();
    if (name == "hardcore") return hardcore_game(need_theta());
    if (name == "qubit") return qubit_game(need_theta());
    throw chinos::ValidationError("unknown game: " + name);
}

void cmd_table(const std::string& game_name, std::optional<double> theta, const std::string& out_path) {
    using namespace chinos;
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);

    if (game_name == "classical") {
        out << "cA,cB,gAB,gA,gB,winner\n";
        // Optimal play: Alice guesses 1, Bob answers with his intelligent
        // guess away from hers.
        for (int ca = 0; ca < 2; ++ca) {
            for (int cb = 0; cb < 2; ++cb) {
                const int ga = 1;
                const int gb = cb == 0 ? 0 : 2;
                const games::Winner w = games::classical_round(ca, cb, ga, gb);
                out << ca << "," << cb << "," << (ca + cb) << "," << ga << "," << gb << ","
                    << (w == games::Winner::A ? "A" : w == games::Winner::B ? "B" : "none") << "\n";
            }
        }
        return;
    }
    if (game_name == "twoqubit") {
        if (!theta) throw ValidationError("--theta is required for game 'twoqubit'");
        const metric::MetricMatrix g = metric::metric_matrix(*theta, metric::Order::BobFirst);
        out << "pair,f_a(00),f_a(10),f_a(20),f_a(30)\n";
        for (int p = 0; p < 8; ++p) {
            const int rep = metric::kCanonicalPairs[static_cast<size_t>(p)][0];
            out << "P" << (p + 1);
            for (int a0 = 0; a0 < 4; ++a0)
                out << "," << fmt(metric::payoff(g, metric::PairIndex::from_lex(rep), a0, 0));
            out << "\n";
        }
        const metric::TwoQubitReport rep = metric::two_qubit_probabilities(*theta);
        out << "P_A," << fmt(rep.p_a) << "\nP_B," << fmt(rep.p_b) << "\n";
        return;
    }

    const games::GameDefinition game = make_game(game_name, theta);
    const games::ProbabilityTable table = games::probability_table(game);
    out << "i,j";
    for (int n : game.guess_set) out << ",p" << n;
    out << "\n";
    for (int a = 0; a < game.n_choices(); ++a) {
        for (int b = 0; b < game.n_choices(); ++b) {
            out << game.choice_set[static_cast<size_t>(a)] << "," << game.choice_set[static_cast<size_t>(b)];
            for (double p : table.cell(a, b)) out << "," << fmt(p);
            out << "\n";
        }
    }
    const games::AveragedTable avg = games::averaged_probs_uniform(game);
    out << "avg\n";
    for (int a = 0; a < game.n_choices(); ++a) {
        out << game.choice_set[static_cast<size_t>(a)];
        for (double p : avg.columns[static_cast<size_t>(a)]) out << "," << fmt(p);
        out << "\n";
    }
}

void cmd_sweep(const std::string& game_name, double start, double stop, int points,
               const std::string& order_name, const std::string& out_path) {
    using namespace chinos;
    if (points < 2) throw ValidationError("a sweep needs at least 2 points");
    if (stop < start) throw ValidationError("sweep stop must be >= start");
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);

    if (game_name == "twoqubit") {
        const metric::Order order =
            order_name == "alicefirst" ? metric::Order::AliceFirst : metric::Order::BobFirst;
        out << "theta,P_A,P_B\n";
        for (int k = 0; k < points; ++k) {
            const double t = start + (stop - start) * static_cast<double>(k) / (points - 1);
            const metric::TwoQubitReport rep = metric::two_qubit_probabilities(t, order);
            out << fmt(t) << "," << fmt(rep.p_a) << "," << fmt(rep.p_b) << "\n";
        }
        return;
    }
    if (game_name != "hardcore" && game_name != "qubit") {
        throw ValidationError("sweeps are defined for the hardcore, qubit and twoqubit games");
    }
    out << "theta,avg_p0_O1,avg_p1_O1,avg_p0_O2,avg_p1_O2,avg_p0_O3,avg_p1_O3\n";
    for (int k = 0; k < points; ++k) {
        const double t = start + (stop - start) * static_cast<double>(k) / (points - 1);
        const games::GameDefinition game = make_game(game_name, t);
        const games::AveragedTable avg = games::averaged_probs_uniform(game);
        out << fmt(t);
        for (int a = 0; a < 3; ++a)
            out << "," << fmt(avg.columns[static_cast<size_t>(a)][0]) << ","
                << fmt(avg.columns[static_cast<size_t>(a)][1]);
        out << "\n";
    }
    const auto family = game_name == "hardcore" ? strategy::CrossingFamily::HardCore
                                                : strategy::CrossingFamily::Qubit;
    const auto [t1, t2] = strategy::crossing_angles(family);
    std::cerr << "crossings: theta1=" << fmt(t1) << " theta2=" << fmt(t2) << "\n";
}

nlohmann::json strategy_json(const chinos::games::GameDefinition& game,
                             const chinos::strategy::MixedStrategy& s) {
    nlohmann::json j;
    j["weights"] = s.choice_weights;
    nlohmann::json policy;
    for (int a = 0; a < game.n_choices(); ++a) {
        if (s.choice_weights[static_cast<size_t>(a)] > 0.0) {
            policy[std::to_string(game.choice_set[static_cast<size_t>(a)])] =
                s.guess_policy[static_cast<size_t>(a)];
        }
    }
    j["guesses"] = policy;
    return j;
}

void cmd_equilibrium(const std::string& game_name, std::optional<double> theta,
                     const std::string& order_name, const std::string& out_path) {
    using namespace chinos;
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    nlohmann::json j;

    if (game_name == "twoqubit") {
        if (!theta) throw ValidationError("--theta is required for game 'twoqubit'");
        const metric::Order order =
            order_name == "alicefirst" ? metric::Order::AliceFirst : metric::Order::BobFirst;
        const metric::TwoQubitReport rep = metric::two_qubit_probabilities(*theta, order);
        j["game"] = game_name;
        j["theta"] = *theta;
        j["order"] = order_name.empty() ? "bobfirst" : order_name;
        j["stable"] = true;
        j["P_A"] = rep.p_a;
        j["P_B"] = rep.p_b;
        j["winner"] = rep.p_b > rep.p_a + 1e-9 ? "B" : rep.p_a > rep.p_b + 1e-9 ? "A" : "symmetric";
        out << j.dump(2) << "\n";
        return;
    }

    const games::GameDefinition game = make_game(game_name, theta);
    const strategy::EquilibriumReport rep = strategy::equilibrium_scan(game);
    j["game"] = game_name;
    if (theta) j["theta"] = *theta;
    j["stable"] = rep.stable;
    j["cycle_detected"] = rep.cycle_detected;
    j["winner"] = rep.winner == strategy::ScanWinner::A   ? "A"
                  : rep.winner == strategy::ScanWinner::B ? "B"
                                                          : "symmetric";
    nlohmann::json iters = nlohmann::json::array();
    for (const auto& it : rep.iterations) {
        nlohmann::json row;
        row["alice"] = strategy_json(game, it.alice);
        row["bob"] = strategy_json(game, it.bob);
        row["P_A"] = it.p_a;
        row["P_B"] = it.p_b;
        row["note"] = it.note;
        iters.push_back(row);
    }
    j["iterations"] = iters;
    out << j.dump(2) << "\n";
}

void cmd_metric(double theta, const std::string& order_name, const std::string& format,
                const std::string& out_path) {
    using namespace chinos;
    const metric::Order order =
        order_name == "alicefirst" ? metric::Order::AliceFirst : metric::Order::BobFirst;
    const metric::MetricMatrix g = metric::metric_matrix(theta, order);
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    if (format == "json") out << metric::metric_json(g) << "\n";
    else metric::write_metric_csv(out, g);
}

void cmd_shots(double theta, const std::string& entry, std::int64_t n_shots,
               std::optional<std::uint64_t> seed_flag, double noise_p, const std::string& out_path) {
    using namespace chinos;
    shots::ShotConfig config;
    config.shots = n_shots;
    config.seed = default_seed(seed_flag);
    config.noise = noise_p > 0.0 ? shots::NoiseModel::depolarizing(noise_p) : shots::NoiseModel::none();

    std::ofstream file;
    std::ostream& out = open_output(file, out_path);

    if (!entry.empty()) {
        const size_t comma = entry.find(',');
        if (comma == std::string::npos) throw ValidationError("--entry must look like 22,30");
        const metric::PairIndex row = metric::PairIndex::parse(entry.substr(0, comma));
        const metric::PairIndex col = metric::PairIndex::parse(entry.substr(comma + 1));
        const shots::ShotEstimate est = shots::estimate_overlap(row, col, theta, config);
        const double theory = std::norm(metric::metric_matrix(theta).at(row, col));
        nlohmann::json j;
        j["entry"] = entry;
        j["theta"] = theta;
        j["shots"] = est.shots;
        j["seed"] = config.seed;
        j["noise_p"] = noise_p;
        j["estimate"] = est.estimate;
        j["stderr"] = est.stderr_est;
        j["theory"] = theory;
        out << j.dump(2) << "\n";
        return;
    }

    // Whole matrix: sqrt of the estimated |G|^2 with the theoretical sign
    // (phases are irrelevant to the strategies). The format matches the
    // experimental-matrix schema, so the output feeds straight into
    // `compare --exp`.
    const metric::MetricMatrix g = metric::metric_matrix(theta);
    out << "# shot-estimated |G| with theoretical signs; theta=" << fmt(theta)
        << " shots=" << config.shots << " seed=" << config.seed << " noise_p=" << fmt(noise_p) << "\n";
    out << "# rows/columns: 00 22 12 30 13 31 01 23 02 20 10 32 11 33 03 21\n";
    for (int r : metric::kBlockOrder) {
        bool first = true;
        for (int c : metric::kBlockOrder) {
            const shots::ShotEstimate est = shots::estimate_overlap(
                metric::PairIndex::from_lex(r), metric::PairIndex::from_lex(c), theta, config);
            const double sign = g.at(r, c).real() < -chinos::kExactTol ? -1.0 : 1.0;
            out << (first ? "" : ",") << fmt(sign * std::sqrt(est.estimate));
            first = false;
        }
        out << "\n";
    }
}

void cmd_compare(const std::string& exp_path, double theta, const std::string& out_path) {
    using namespace chinos;
    const shots::ExperimentalMatrix exp = shots::ingest_experimental_file(exp_path);
    const metric::MetricMatrix g = metric::metric_matrix(theta);
    const shots::ErrorReport rep = shots::error_report(g, exp);
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    out << shots::error_report_json(rep) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum Chinos game simulator"};
    app.require_subcommand(1);

    std::string game_name, theta_text, order_name = "bobfirst", format = "csv", out_path, entry, exp_path;
    std::string start_text = "0", stop_text = "pi";
    int points = 50;
    std::int64_t n_shots = 8192;
    std::optional<std::uint64_t> seed_flag;
    std::uint64_t seed_value = 0;
    double noise_p = 0.0;
    bool seed_given = false;

    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed_value, "RNG seed (default: CHINOS_SEED or 0)")
            ->each([&](const std::string&) { seed_given = true; });
    };

    CLI::App* table = app.add_subcommand("table", "Per-move and averaged probability tables");
    table->add_option("--game", game_name, "classical|boson|hardcore|qubit|twoqubit")->required();
    table->add_option("--theta", theta_text, "angle in radians (pi aliases accepted)");
    table->add_option("--output", out_path, "write to a file instead of stdout");

    CLI::App* sweep = app.add_subcommand("sweep", "Curves over a theta grid");
    sweep->add_option("--game", game_name, "hardcore|qubit|twoqubit")->required();
    CLI::Option* start_opt = sweep->add_option("--start", start_text, "grid start (default: domain start)");
    CLI::Option* stop_opt = sweep->add_option("--stop", stop_text, "grid stop (default: domain end)");
    sweep->add_option("--points", points, "grid points (default 50)");
    sweep->add_option("--order", order_name, "bobfirst|alicefirst (twoqubit only)");
    sweep->add_option("--output", out_path, "write to a file instead of stdout");

    CLI::App* equilibrium = app.add_subcommand("equilibrium", "Iterated best-response report (JSON)");
    equilibrium->add_option("--game", game_name, "classical|boson|hardcore|qubit|twoqubit")->required();
    equilibrium->add_option("--theta", theta_text, "angle in radians");
    equilibrium->add_option("--order", order_name, "bobfirst|alicefirst (twoqubit only)");
    equilibrium->add_option("--output", out_path, "write to a file instead of stdout");

    CLI::App* metric_cmd = app.add_subcommand("metric", "Two-qubit metric matrix");
    metric_cmd->add_option("--theta", theta_text, "angle in radians")->required();
    metric_cmd->add_option("--order", order_name, "bobfirst|alicefirst");
    metric_cmd->add_option("--format", format, "csv|json");
    metric_cmd->add_option("--output", out_path, "write to a file instead of stdout");

    CLI::App* shots_cmd = app.add_subcommand("shots", "Finite-shot estimation of |G|^2");
    shots_cmd->add_option("--theta", theta_text, "angle in radians (default 0)");
    shots_cmd->add_option("--entry", entry, "single entry as row,col labels, e.g. 22,30");
    shots_cmd->add_option("--shots", n_shots, "shots per entry (default 8192)");
    add_seed(shots_cmd);
    shots_cmd->add_option("--noise-p", noise_p, "per-layer depolarizing probability");
    shots_cmd->add_option("--output", out_path, "write to a file instead of stdout");

    CLI::App* compare = app.add_subcommand("compare", "Error report of measured data against theory");
    compare->add_option("--exp", exp_path, "experimental matrix CSV")->required();
    compare->add_option("--theta", theta_text, "angle of the theoretical matrix (default 0)");
    compare->add_option("--output", out_path, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitValidation;
    }

    try {
        std::optional<double> theta;
        if (!theta_text.empty()) theta = parse_angle(theta_text);
        if (seed_given) seed_flag = seed_value;

        if (table->parsed()) cmd_table(game_name, theta, out_path);
        else if (sweep->parsed()) {
            // Default grid = the game's angle domain, shrunk away from
            // degenerate endpoints where the family collapses.
            double start = 0.0;
            double stop = kPi;
            if (game_name == "hardcore") {
                start = 0.01;
                stop = kPi / 2.0 - 0.01;
            } else if (game_name == "qubit") {
                start = 0.01;
                stop = kPi - 0.01;
            }
            if (start_opt->count()) start = parse_angle(start_text);
            if (stop_opt->count()) stop = parse_angle(stop_text);
            cmd_sweep(game_name, start, stop, points, order_name, out_path);
        }
        else if (equilibrium->parsed()) cmd_equilibrium(game_name, theta, order_name, out_path);
        else if (metric_cmd->parsed()) cmd_metric(theta.value(), order_name, format, out_path);
        else if (shots_cmd->parsed()) cmd_shots(theta.value_or(0.0), entry, n_shots, seed_flag, noise_p, out_path);
        else if (compare->parsed()) cmd_compare(exp_path, theta.value_or(0.0), out_path);
    } catch (const chinos::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const chinos::ShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const chinos::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
