#include "doctest.h"

#include <cmath>
#include <sstream>

#include "chinos/shots.hpp"

using namespace chinos;
using namespace chinos::shots;

namespace {

constexpr double kPi = 3.14159265358979323846;

const char* kDataDir = CHINOS_DATA_DIR;

std::string bundled_path() { return std::string(kDataDir) + "/ibmq_manila_g.csv"; }

}  // namespace

TEST_CASE("noise-free estimation of a unit entry") {
    ShotConfig cfg;
    cfg.shots = 4096;
    cfg.seed = 7;
    const ShotEstimate est = estimate_overlap(metric::PairIndex{2, 2}, metric::PairIndex{3, 0}, 0.0, cfg);
    CHECK(est.expected == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(est.estimate == doctest::Approx(1.0));
    CHECK(est.stderr_est == doctest::Approx(0.0));
}

TEST_CASE("estimation is deterministic under a fixed seed") {
    ShotConfig cfg;
    cfg.shots = 2048;
    cfg.seed = 123;
    const metric::PairIndex row{0, 0};
    const metric::PairIndex col{1, 2};
    const ShotEstimate a = estimate_overlap(row, col, kPi / 3.0, cfg);
    const ShotEstimate b = estimate_overlap(row, col, kPi / 3.0, cfg);
    CHECK(a.estimate == b.estimate);
}

TEST_CASE("depolarizing layers mix exactly toward 1/4") {
    // After four layers: (1-p)^4 |G|^2 + (1 - (1-p)^4)/4; the identity part
    // is invariant under the unitaries, so the channel is trace preserving.
    for (double p : {0.0, 0.01, 0.1, 0.5}) {
        const NoiseModel noise = p > 0.0 ? NoiseModel::depolarizing(p) : NoiseModel::none();
        for (double theta : {0.0, kPi / 3.0}) {
            const metric::MetricMatrix g = metric::metric_matrix(theta);
            for (int r : {0, 5, 9}) {
                for (int c : {0, 2, 6}) {
                    const double want = std::pow(1.0 - p, 4) * std::norm(g.at(r, c)) +
                                        (1.0 - std::pow(1.0 - p, 4)) / 4.0;
                    const double got = noisy_population(metric::PairIndex::from_lex(r),
                                                        metric::PairIndex::from_lex(c), theta, noise);
                    CHECK(got == doctest::Approx(want).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("calibrated depolarizing strength hits the measured headline") {
    const double p = calibrated_depolarizing_p();
    const double pop = noisy_population(metric::PairIndex{2, 2}, metric::PairIndex{3, 0}, 0.0,
                                        NoiseModel::depolarizing(p));
    CHECK(pop == doctest::Approx(0.964).epsilon(1e-12));
}

TEST_CASE("estimates concentrate around the expected population") {
    ShotConfig cfg;
    cfg.shots = 8192;
    int hits = 0;
    const metric::PairIndex row{0, 0};
    const metric::PairIndex col{1, 2};  // |G|^2 = cos^2(pi/6) = 3/4 at pi/3
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        cfg.seed = seed;
        const ShotEstimate est = estimate_overlap(row, col, kPi / 3.0, cfg);
        if (std::abs(est.estimate - est.expected) <= 4.0 * est.stderr_est) ++hits;
    }
    CHECK(hits >= 49);
}

TEST_CASE("ingesting the bundled experimental matrix") {
    const ExperimentalMatrix m = ingest_experimental_file(bundled_path());
    CHECK(m.at(0, 0) == doctest::Approx(0.97));
    CHECK(m.at(4 * 1 + 3, 4 * 0 + 1) == doctest::Approx(-0.97));  // row 13, col 01
    CHECK(m.at(4 * 1 + 0, 4 * 0 + 3) == doctest::Approx(0.28));   // row 10, col 03

    // Dot decimals and comma separators parse the same way.
    std::stringstream ss;
    for (int r = 0; r < 16; ++r) {
        for (int c = 0; c < 16; ++c) {
            if (c) ss << ",";
            ss << m.at(metric::kBlockOrder[static_cast<size_t>(r)],
                       metric::kBlockOrder[static_cast<size_t>(c)]);
        }
        ss << "\n";
    }
    const ExperimentalMatrix again = ingest_experimental(ss);
    for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c) CHECK(again.at(r, c) == doctest::Approx(m.at(r, c)));
}

TEST_CASE("experimental parser rejects malformed input") {
    std::stringstream truncated("0,97;0,98\n");
    CHECK_THROWS_AS(ingest_experimental(truncated), ShapeError);

    // Magnitudes above the 1 + 0.05 slack are rejected with a location.
    std::stringstream huge;
    for (int r = 0; r < 16; ++r) {
        for (int c = 0; c < 16; ++c) huge << (c ? ";" : "") << (r == 0 && c == 2 ? "1,20" : "0,10");
        huge << "\n";
    }
    CHECK_THROWS_AS(ingest_experimental(huge), ParseError);

    std::stringstream junk;
    for (int r = 0; r < 16; ++r) {
        for (int c = 0; c < 16; ++c) junk << (c ? ";" : "") << (r == 3 && c == 5 ? "x,y" : "0,10");
        junk << "\n";
    }
    CHECK_THROWS_AS(ingest_experimental(junk), ParseError);
    try {
        junk.clear();
        junk.seekg(0);
        ingest_experimental(junk);
    } catch (const ParseError& e) {
        CHECK(e.row == 4);
        CHECK(e.col == 5);
    }
}

TEST_CASE("error report") {
    const metric::MetricMatrix theory = metric::metric_matrix(0.0);
    const ExperimentalMatrix exp = ingest_experimental_file(bundled_path());

    // Theory against itself is error free.
    ExperimentalMatrix self;
    for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c) self.at(r, c) = theory.at(r, c).real();
    const ErrorReport clean = error_report(theory, self);
    CHECK(clean.avg_err_on_units == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(clean.avg_err_on_zeros == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(clean.max_err == doctest::Approx(0.0).epsilon(1e-13));

    const ErrorReport rep = error_report(theory, exp);
    // Regression pins for the bundled transcription.
    CHECK(rep.avg_err_on_units == doctest::Approx(1.99 / 64.0).epsilon(1e-12));
    CHECK(rep.avg_err_on_zeros == doctest::Approx(0.185625).epsilon(1e-12));
    CHECK(rep.max_err == doctest::Approx(0.28).epsilon(1e-12));
    CHECK(rep.avg_err_on_zeros >= 0.10);
    CHECK(rep.avg_err_on_zeros <= 0.24);

    // Only moduli enter: flipping every sign changes nothing.
    ExperimentalMatrix flipped = exp;
    for (double& v : flipped.entries) v = -v;
    const ErrorReport rep2 = error_report(theory, flipped);
    CHECK(rep2.avg_err_on_units == doctest::Approx(rep.avg_err_on_units).epsilon(1e-14));
    CHECK(rep2.avg_err_on_zeros == doctest::Approx(rep.avg_err_on_zeros).epsilon(1e-14));

    const std::string json = error_report_json(rep);
    CHECK(json.find("avg_err_on_units") != std::string::npos);
    CHECK(json.find("deltas") != std::string::npos);
}

TEST_CASE("admissible pairs under the relaxed orthogonality") {
    const ExperimentalMatrix exp = ingest_experimental_file(bundled_path());
    CHECK(admissible_pairs(exp, 1.0).size() == 240);
    CHECK(admissible_pairs(exp, 1e-12).empty());
    // Eight zero-class cells sit at 0.26-0.28 and drop out at 0.25.
    CHECK(admissible_pairs(exp, 0.25).size() == 184);
}
