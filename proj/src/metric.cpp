#include "chinos/metric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace chinos::metric {

namespace {

int lex_of(int outer, int inner) { return 4 * outer + inner; }

// Inner-label convention: the flip layer of the first-applied operator is
// conjugated through the CNOT, so label (j1, j0) selects X^(j1 xor j0) on
// qubit 1 and X^j0 on qubit 0.
int conjugated_inner(int j) {
    const int j1 = j >> 1;
    const int j0 = j & 1;
    return ((j1 ^ j0) << 1) | j0;
}

}  // namespace

const std::array<int, 16> kBlockOrder = {
    lex_of(0, 0), lex_of(2, 2), lex_of(1, 2), lex_of(3, 0),
    lex_of(1, 3), lex_of(3, 1), lex_of(0, 1), lex_of(2, 3),
    lex_of(0, 2), lex_of(2, 0), lex_of(1, 0), lex_of(3, 2),
    lex_of(1, 1), lex_of(3, 3), lex_of(0, 3), lex_of(2, 1),
};

const std::array<std::array<int, 4>, 4> kCanonicalSets = {{
    {lex_of(0, 0), lex_of(2, 2), lex_of(1, 2), lex_of(3, 0)},
    {lex_of(1, 3), lex_of(3, 1), lex_of(0, 1), lex_of(2, 3)},
    {lex_of(0, 2), lex_of(2, 0), lex_of(1, 0), lex_of(3, 2)},
    {lex_of(1, 1), lex_of(3, 3), lex_of(0, 3), lex_of(2, 1)},
}};

const std::array<std::array<int, 2>, 8> kCanonicalPairs = {{
    {lex_of(0, 0), lex_of(2, 2)},
    {lex_of(1, 2), lex_of(3, 0)},
    {lex_of(1, 3), lex_of(3, 1)},
    {lex_of(0, 1), lex_of(2, 3)},
    {lex_of(0, 2), lex_of(2, 0)},
    {lex_of(1, 0), lex_of(3, 2)},
    {lex_of(1, 1), lex_of(3, 3)},
    {lex_of(0, 3), lex_of(2, 1)},
}};

PairIndex PairIndex::parse(const std::string& label) {
    if (label.size() != 2 || label[0] < '0' || label[0] > '3' || label[1] < '0' || label[1] > '3') {
        throw ValidationError("pair label must be two digits in 0..3: " + label);
    }
    return {label[0] - '0', label[1] - '0'};
}

std::vector<StateVector> product_states(double theta) {
    const modes::OperatorFamily fam = modes::bell_family(theta);
    const StateVector vac = StateVector::basis_state(Basis::Qubit2, 0);
    std::vector<StateVector> inner_states;
    inner_states.reserve(4);
    for (int j = 0; j < 4; ++j) inner_states.push_back(apply(fam.ops[static_cast<size_t>(conjugated_inner(j))], vac));
    std::vector<StateVector> out;
    out.reserve(16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out.push_back(apply(fam.ops[static_cast<size_t>(i)], inner_states[static_cast<size_t>(j)]));
    return out;
}

MetricMatrix metric_matrix(double theta, Order order) {
    if (theta < -kExactTol || theta > 2.0 * 3.14159265358979323846 + kExactTol) {
        throw ValidationError("theta must lie in [0, 2*pi]");
    }
    const std::vector<StateVector> w = product_states(theta);
    MetricMatrix g;
    g.theta = theta;
    g.order = order;
    for (int r = 0; r < 16; ++r) {
        for (int c = 0; c < 16; ++c) {
            const int col = order == Order::BobFirst ? c : lex_of(c % 4, c / 4);
            g.at(r, c) = overlap(w[static_cast<size_t>(r)], w[static_cast<size_t>(col)]);
        }
    }
    return g;
}

BlockDecomposition block_decomposition(const MetricMatrix& g) {
    // |entry| = 1 equivalence classes.
    std::vector<int> cls(16, -1);
    int n_cls = 0;
    for (int r = 0; r < 16; ++r) {
        if (cls[static_cast<size_t>(r)] >= 0) continue;
        const int id = n_cls++;
        cls[static_cast<size_t>(r)] = id;
        for (int c = 0; c < 16; ++c) {
            if (std::abs(std::abs(g.at(r, c)) - 1.0) <= 1e-9) {
                if (cls[static_cast<size_t>(c)] >= 0 && cls[static_cast<size_t>(c)] != id) {
                    throw DecompositionMismatchError("unit-modulus classes are not an equivalence partition");
                }
                cls[static_cast<size_t>(c)] = id;
            }
        }
    }

    auto class_of = [&](int lex) { return cls[static_cast<size_t>(lex)]; };
    BlockDecomposition out;

    // At theta = 0 the classes are the four sets; in between they are the
    // eight pairs. Anything else means the matrix lost its structure.
    bool classes_are_pairs = true;
    for (const auto& p : kCanonicalPairs) {
        if (class_of(p[0]) != class_of(p[1])) classes_are_pairs = false;
    }
    if (classes_are_pairs && n_cls == 8) {
        for (const auto& p : kCanonicalPairs) out.pairs.push_back({p[0], p[1]});
        for (const auto& s : kCanonicalSets) out.sets.push_back({s[0], s[1], s[2], s[3]});
        // Guard: every pair must really be one class.
        for (int k = 0; k < 8; ++k) {
            if (class_of(kCanonicalPairs[static_cast<size_t>(k)][0]) !=
                class_of(kCanonicalPairs[static_cast<size_t>(k)][1])) {
                throw DecompositionMismatchError("pair partition differs from the expected one");
            }
        }
        return out;
    }
    if (n_cls == 4) {
        // theta = 0: classes must be exactly the sets; pairs merge into them.
        for (const auto& s : kCanonicalSets) {
            const int id = class_of(s[0]);
            for (int member : s) {
                if (class_of(member) != id) {
                    throw DecompositionMismatchError("set partition differs from the expected one");
                }
            }
            out.sets.push_back({s[0], s[1], s[2], s[3]});
        }
        for (const auto& s : kCanonicalSets) out.pairs.push_back({s[0], s[1], s[2], s[3]});
        return out;
    }
    throw DecompositionMismatchError("metric has " + std::to_string(n_cls) +
                                     " unit-modulus classes; expected 4 or 8");
}

std::vector<PairIndex> orthogonal_guesses(const MetricMatrix& g, PairIndex alice_guess, double threshold) {
    std::vector<PairIndex> out;
    for (int c = 0; c < 16; ++c) {
        if (c == alice_guess.lex()) continue;
        if (std::abs(g.at(alice_guess.lex(), c)) <= threshold) out.push_back(PairIndex::from_lex(c));
    }
    return out;
}

double payoff(const MetricMatrix& g, PairIndex guess, int a0, int b0) {
    return std::norm(g.at(guess, PairIndex{a0, b0}));
}

namespace {

int pair_class_of_lex(int lex) {
    for (int k = 0; k < 8; ++k) {
        if (kCanonicalPairs[static_cast<size_t>(k)][0] == lex || kCanonicalPairs[static_cast<size_t>(k)][1] == lex) return k;
    }
    throw ValidationError("lex index out of range");
}

int set_class_of_lex(int lex) { return pair_class_of_lex(lex) / 2; }

}  // namespace

TwoQubitReport two_qubit_probabilities(double theta, Order order, int b0, double orthogonality_threshold) {
    if (b0 < 0 || b0 > 3) throw ValidationError("b0 must lie in 0..3");
    const MetricMatrix g = metric_matrix(theta, order);
    TwoQubitReport rep;
    rep.theta = theta;
    rep.order = order;
    rep.b0 = b0;

    auto pair_rep = [&](int pair_idx) { return kCanonicalPairs[static_cast<size_t>(pair_idx)][0]; };
    auto avg_payoff_over_a0 = [&](int guess_lex) {
        double s = 0.0;
        for (int a0 = 0; a0 < 4; ++a0) s += std::norm(g.at(guess_lex, lex_of(a0, b0)));
        return s / 4.0;
    };

    if (order == Order::BobFirst) {
        // Alice uniform over the eight pairs; Bob observes her guess, keeps
        // b0 fixed and best-responds over the pairs orthogonal to it.
        double f_a = 0.0;
        double f_b = 0.0;
        rep.bob_response.resize(8);
        for (int pa = 0; pa < 8; ++pa) {
            f_a += avg_payoff_over_a0(pair_rep(pa)) / 8.0;
            double best = -1.0;
            std::vector<int> argmax;
            for (int pb = 0; pb < 8; ++pb) {
                if (pb == pa) continue;
                if (std::abs(g.at(pair_rep(pa), pair_rep(pb))) > orthogonality_threshold) continue;
                const double v = avg_payoff_over_a0(pair_rep(pb));
                if (v > best + 1e-12) {
                    best = v;
                    argmax = {pb};
                } else if (v > best - 1e-12) {
                    argmax.push_back(pb);
                }
            }
            if (argmax.empty()) throw ValidationError("no orthogonal response pair available");
            rep.bob_response[static_cast<size_t>(pa)] = argmax;
            f_b += best / 8.0;
        }
        rep.avg_f_a = f_a;
        rep.avg_f_b = f_b;
    } else {
        // Alice knows her own choice a0 and draws one of its two winning
        // sets; Bob reads the set off her guess and takes the other one.
        // Column (a0, b) of the Alice-first matrix holds the state built
        // from (b, a0); payoffs average over Bob's b uniform.
        double f_a = 0.0;
        double f_b = 0.0;
        for (int a0 = 0; a0 < 4; ++a0) {
            std::vector<int> winning;
            for (int b = 0; b < 4; ++b) {
                const int s = set_class_of_lex(lex_of(b, a0));
                if (std::find(winning.begin(), winning.end(), s) == winning.end()) winning.push_back(s);
            }
            if (winning.size() != 2) throw ValidationError("expected two winning sets per choice");
            for (int pick = 0; pick < 2; ++pick) {
                const int alice_set = winning[static_cast<size_t>(pick)];
                const int bob_set = winning[static_cast<size_t>(1 - pick)];
                for (int b = 0; b < 4; ++b) {
                    const int col = lex_of(a0, b);
                    f_a += std::norm(g.at(kCanonicalSets[static_cast<size_t>(alice_set)][0], col)) / 32.0;
                    f_b += std::norm(g.at(kCanonicalSets[static_cast<size_t>(bob_set)][0], col)) / 32.0;
                }
            }
        }
        rep.avg_f_a = f_a;
        rep.avg_f_b = f_b;
    }

    rep.p_a = rep.avg_f_a / (rep.avg_f_a + rep.avg_f_b);
    rep.p_b = rep.avg_f_b / (rep.avg_f_a + rep.avg_f_b);
    return rep;
}

PurityRelation purity_relation(double theta) {
    const TwoQubitReport rep = two_qubit_probabilities(theta, Order::BobFirst);
    const modes::OperatorFamily fam = modes::bell_family(theta);
    const StateVector vac = StateVector::basis_state(Basis::Qubit2, 0);
    const StateVector single = apply(fam.ops[0], vac);
    const DensityMatrix rho1 = partial_trace_qubit0(pure_density(single));
    PurityRelation out;
    out.purity = purity(rho1);
    out.rhs = 3.0 - 2.0 * out.purity;
    out.ratio = rep.p_b / rep.p_a;
    return out;
}

cx symbolic_entry(double theta, PairIndex row, PairIndex col) {
    const double c = std::cos(theta / 2.0);
    const cx s{0.0, std::sin(theta / 2.0)};
    const int pr = pair_class_of_lex(row.lex());
    const int pc = pair_class_of_lex(col.lex());
    if (pr == pc) return cx{1.0, 0.0};
    const int r = pr % 4;
    const int q = pc % 4;
    if (pr / 4 != pc / 4) return cx{0.0, 0.0};  // different 8-blocks
    // Within a block the pair couplings are P0-P1: c, P0-P2: s, P1-P3: s,
    // P2-P3: -c (rows first index), with the conjugate below the diagonal.
    if ((r == 0 && q == 1) || (r == 1 && q == 0)) return cx{c, 0.0};
    if (r == 0 && q == 2) return s;
    if (r == 2 && q == 0) return -s;
    if (r == 1 && q == 3) return s;
    if (r == 3 && q == 1) return -s;
    if ((r == 2 && q == 3) || (r == 3 && q == 2)) return cx{-c, 0.0};
    return cx{0.0, 0.0};
}

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

void write_metric_csv(std::ostream& out, const MetricMatrix& g) {
    out << "G";
    for (int c : kBlockOrder) {
        const std::string lbl = PairIndex::from_lex(c).label();
        out << "," << lbl << "_re," << lbl << "_im";
    }
    out << "\n";
    for (int r : kBlockOrder) {
        out << PairIndex::from_lex(r).label();
        for (int c : kBlockOrder) {
            const cx z = g.at(r, c);
            out << "," << fmt_double(z.real()) << "," << fmt_double(z.imag());
        }
        out << "\n";
    }
}

MetricMatrix read_metric_csv(std::istream& in) {
    MetricMatrix g;
    std::string line;
    if (!std::getline(in, line)) throw ShapeError("empty metric csv");
    int row_count = 0;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string tok;
        if (!std::getline(ss, tok, ',')) throw ParseError("missing row label", lineno, 0);
        const int r = PairIndex::parse(tok).lex();
        for (int k = 0; k < 16; ++k) {
            std::string re_tok, im_tok;
            if (!std::getline(ss, re_tok, ',') || !std::getline(ss, im_tok, ',')) {
                throw ShapeError("metric csv row has fewer than 16 complex entries");
            }
            try {
                g.at(r, kBlockOrder[static_cast<size_t>(k)]) = cx{std::stod(re_tok), std::stod(im_tok)};
            } catch (const std::exception&) {
                throw ParseError("bad numeric field", lineno, 1 + 2 * k);
            }
        }
        ++row_count;
    }
    if (row_count != 16) throw ShapeError("metric csv must have 16 data rows");
    return g;
}

std::string metric_json(const MetricMatrix& g) {
    nlohmann::json j;
    j["theta"] = g.theta;
    j["order"] = g.order == Order::BobFirst ? "bob_first" : "alice_first";
    std::vector<std::string> labels;
    for (int idx : kBlockOrder) labels.push_back(PairIndex::from_lex(idx).label());
    j["labels"] = labels;
    nlohmann::json rows = nlohmann::json::array();
    for (int r : kBlockOrder) {
        nlohmann::json row = nlohmann::json::array();
        for (int c : kBlockOrder) {
            const cx z = g.at(r, c);
            row.push_back({z.real(), z.imag()});
        }
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j.dump(2);
}

}  // namespace chinos::metric
