#include "chinos/shots.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>

#include "json.hpp"

namespace chinos::shots {

namespace {

int conjugated_inner(int j) {
    const int j1 = j >> 1;
    const int j0 = j & 1;
    return ((j1 ^ j0) << 1) | j0;
}

// rho -> (1-p) rho + p I/4, applied in place.
void depolarize(std::vector<cx>& rho, double p) {
    if (p <= 0.0) return;
    for (cx& z : rho) z *= (1.0 - p);
    for (int i = 0; i < 4; ++i) rho[static_cast<size_t>(i) * 4 + i] += p / 4.0;
}

void apply_layer(std::vector<cx>& rho, const LinearOperator& u) {
    // rho -> U rho U^dag
    std::vector<cx> tmp(16, cx{0.0, 0.0});
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            cx acc{0.0, 0.0};
            for (int k = 0; k < 4; ++k) acc += u.at(r, k) * rho[static_cast<size_t>(k) * 4 + c];
            tmp[static_cast<size_t>(r) * 4 + c] = acc;
        }
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            cx acc{0.0, 0.0};
            for (int k = 0; k < 4; ++k) acc += tmp[static_cast<size_t>(r) * 4 + k] * std::conj(u.at(c, k));
            rho[static_cast<size_t>(r) * 4 + c] = acc;
        }
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

NoiseModel NoiseModel::depolarizing(double p) {
    if (p < 0.0 || p > 1.0) throw ValidationError("depolarizing probability must lie in [0,1]");
    return {NoiseKind::Depolarizing, p};
}

double calibrated_depolarizing_p() {
    // Solve 1/4 + 3/4 (1-p)^4 = 0.964.
    return 1.0 - std::pow((0.964 - 0.25) / 0.75, 0.25);
}

double noisy_population(metric::PairIndex row, metric::PairIndex col, double theta,
                        const NoiseModel& noise) {
    const modes::OperatorFamily fam = modes::bell_family(theta);
    const double p = noise.kind == NoiseKind::Depolarizing ? noise.p : 0.0;

    // The four operator layers in application order; measuring |00| after
    // O_j1'^dag O_i1^dag O_i2 O_j2' |00> gives |G[(i1,j1),(i2,j2)]|^2.
    const std::array<LinearOperator, 4> layers = {
        fam.ops[static_cast<size_t>(conjugated_inner(col.inner))],
        fam.ops[static_cast<size_t>(col.outer)],
        fam.ops[static_cast<size_t>(row.outer)].adjoint(),
        fam.ops[static_cast<size_t>(conjugated_inner(row.inner))].adjoint(),
    };

    std::vector<cx> rho(16, cx{0.0, 0.0});
    rho[0] = cx{1.0, 0.0};
    for (const LinearOperator& u : layers) {
        apply_layer(rho, u);
        depolarize(rho, p);
    }
    return rho[0].real();
}

ShotEstimate estimate_overlap(metric::PairIndex row, metric::PairIndex col, double theta,
                              const ShotConfig& config) {
    if (config.shots < 1) throw ValidationError("shots must be positive");
    const double prob = noisy_population(row, col, theta, config.noise);

    const std::uint64_t entry_index =
        static_cast<std::uint64_t>(row.lex()) * 16u + static_cast<std::uint64_t>(col.lex());
    std::mt19937_64 rng(config.seed ^ entry_index);

    std::int64_t successes = 0;
    for (std::int64_t s = 0; s < config.shots; ++s) {
        if (uniform01(rng) < prob) ++successes;
    }
    ShotEstimate est;
    est.shots = config.shots;
    est.expected = prob;
    est.estimate = static_cast<double>(successes) / static_cast<double>(config.shots);
    est.stderr_est = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(config.shots));
    return est;
}

ExperimentalMatrix ingest_experimental(std::istream& in, const std::string& source_label) {
    ExperimentalMatrix m;
    m.source_label = source_label;
    std::string line;
    int row = 0;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (row >= 16) throw ShapeError("experimental matrix has more than 16 rows");

        // Prefer ';' so decimal commas stay intact; fall back to ',' or
        // whitespace when the file uses dot decimals.
        std::vector<std::string> fields;
        char sep = line.find(';') != std::string::npos ? ';'
                   : line.find(',') != std::string::npos ? ','
                                                         : ' ';
        std::stringstream ss(line);
        std::string tok;
        if (sep == ' ') {
            while (ss >> tok) fields.push_back(tok);
        } else {
            while (std::getline(ss, tok, sep)) fields.push_back(tok);
        }
        if (fields.size() != 16) {
            throw ShapeError("experimental matrix row " + std::to_string(lineno) + " has " +
                             std::to_string(fields.size()) + " fields, expected 16");
        }
        for (int c = 0; c < 16; ++c) {
            std::string f = fields[static_cast<size_t>(c)];
            for (char& ch : f) {
                if (ch == ',') ch = '.';
            }
            size_t consumed = 0;
            double v = 0.0;
            try {
                v = std::stod(f, &consumed);
            } catch (const std::exception&) {
                throw ParseError("bad numeric field '" + fields[static_cast<size_t>(c)] + "'", lineno, c);
            }
            while (consumed < f.size() && std::isspace(static_cast<unsigned char>(f[consumed]))) ++consumed;
            if (consumed != f.size()) {
                throw ParseError("trailing junk in field '" + fields[static_cast<size_t>(c)] + "'", lineno, c);
            }
            if (std::abs(v) > 1.05) {
                throw ParseError("entry magnitude exceeds 1 + 0.05 slack", lineno, c);
            }
            m.at(metric::kBlockOrder[static_cast<size_t>(row)],
                 metric::kBlockOrder[static_cast<size_t>(c)]) = v;
        }
        ++row;
    }
    if (row != 16) throw ShapeError("experimental matrix has " + std::to_string(row) + " rows, expected 16");
    return m;
}

ExperimentalMatrix ingest_experimental_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ShapeError("cannot open experimental matrix file: " + path);
    return ingest_experimental(in, path);
}

ErrorReport error_report(const metric::MetricMatrix& theory, const ExperimentalMatrix& exp) {
    ErrorReport rep;
    double sum_units = 0.0;
    double sum_zeros = 0.0;
    int n_units = 0;
    int n_zeros = 0;
    for (int r = 0; r < 16; ++r) {
        for (int c = 0; c < 16; ++c) {
            const double t = std::abs(theory.at(r, c));
            const double e = std::abs(exp.at(r, c));
            const double err = std::abs(e - t);
            rep.deltas[static_cast<size_t>(r) * 16 + c] = e - t;
            rep.max_err = std::max(rep.max_err, err);
            if (t > 0.5) {
                sum_units += err;
                ++n_units;
            } else {
                sum_zeros += err;
                ++n_zeros;
            }
        }
    }
    rep.avg_err_on_units = n_units ? sum_units / n_units : 0.0;
    rep.avg_err_on_zeros = n_zeros ? sum_zeros / n_zeros : 0.0;
    return rep;
}

std::string error_report_json(const ErrorReport& report) {
    nlohmann::json j;
    j["avg_err_on_units"] = report.avg_err_on_units;
    j["avg_err_on_zeros"] = report.avg_err_on_zeros;
    j["max_err"] = report.max_err;
    nlohmann::json rows = nlohmann::json::array();
    for (int r : metric::kBlockOrder) {
        nlohmann::json row = nlohmann::json::array();
        for (int c : metric::kBlockOrder) row.push_back(report.deltas[static_cast<size_t>(r) * 16 + c]);
        rows.push_back(row);
    }
    j["deltas"] = rows;
    return j.dump(2);
}

std::vector<std::pair<metric::PairIndex, metric::PairIndex>> admissible_pairs(
    const ExperimentalMatrix& exp, double threshold) {
    std::vector<std::pair<metric::PairIndex, metric::PairIndex>> out;
    for (int r = 0; r < 16; ++r) {
        for (int c = 0; c < 16; ++c) {
            if (r == c) continue;
            if (std::abs(exp.at(r, c)) <= threshold) {
                out.emplace_back(metric::PairIndex::from_lex(r), metric::PairIndex::from_lex(c));
            }
        }
    }
    return out;
}

}  // namespace chinos::shots
