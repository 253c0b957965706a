#pragma once

// Two-qubit game engine: the 16x16 metric matrix of two-operator states, its
// set/pair block structure, orthogonality-constrained guessing, payoffs and
// normalized winning probabilities.

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "chinos/modes.hpp"
#include "chinos/qstate.hpp"

namespace chinos::metric {

// Ordered pair of operator indices labeling the state O_outer O_inner |00>.
struct PairIndex {
    int outer = 0;  // applied last
    int inner = 0;  // applied first

    int lex() const { return 4 * outer + inner; }
    std::string label() const { return std::to_string(outer) + std::to_string(inner); }
    static PairIndex from_lex(int idx) { return {idx / 4, idx % 4}; }
    static PairIndex parse(const std::string& label);
    bool operator==(const PairIndex&) const = default;
};

enum class Order { BobFirst, AliceFirst };

// Output permutation grouping the canonical lexicographic indices into the
// documented sets: 00 22 12 30 | 13 31 01 23 | 02 20 10 32 | 11 33 03 21.
extern const std::array<int, 16> kBlockOrder;

// The four mutually orthogonal sets and the eight pairs refining them
// (pairs k and k+1 union to set k/2).
extern const std::array<std::array<int, 4>, 4> kCanonicalSets;   // lex indices
extern const std::array<std::array<int, 2>, 8> kCanonicalPairs;  // lex indices

struct MetricMatrix {
    double theta = 0.0;
    Order order = Order::BobFirst;
    std::array<cx, 256> entries{};  // canonical lexicographic (row, col) order

    cx at(int row_lex, int col_lex) const { return entries[static_cast<size_t>(row_lex) * 16 + col_lex]; }
    cx& at(int row_lex, int col_lex) { return entries[static_cast<size_t>(row_lex) * 16 + col_lex]; }
    cx at(PairIndex r, PairIndex c) const { return at(r.lex(), c.lex()); }
};

// Gram matrix G[(i1,j1),(i2,j2)] = <00| Oin_j1^dag O_i1^dag O_i2 Oin_j2 |00>
// over the sixteen states O_i Oin_j |00>. The inner operator of every product
// carries the CNOT-conjugated flip layer (label (j1, j0) -> (j1 xor j0, j0));
// this is the labeling under which the matrix is block diagonal in the
// documented sets and pairs. With Order::AliceFirst the column index pair is
// swapped: G~[(i,j),(a0,b0)] = G[(i,j),(b0,a0)].
MetricMatrix metric_matrix(double theta, Order order = Order::BobFirst);

// The sixteen product states in canonical order, as used by metric_matrix.
std::vector<StateVector> product_states(double theta);

struct BlockDecomposition {
    std::vector<std::vector<int>> sets;   // 4 groups of 4 lex indices
    std::vector<std::vector<int>> pairs;  // 8 groups of 2 lex indices
};

// Pairs are the |entry| = 1 equivalence classes; sets are their canonical
// unions. Throws DecompositionMismatchError when the classes do not match the
// expected partition (they merge at theta = pi, where |sin(theta/2)| = 1).
BlockDecomposition block_decomposition(const MetricMatrix& g);

// All pair indices q with |G[alice_guess, q]| <= threshold.
std::vector<PairIndex> orthogonal_guesses(const MetricMatrix& g, PairIndex alice_guess,
                                          double threshold = kExactTol);

// f = |G[guess, (a0,b0)]|^2.
double payoff(const MetricMatrix& g, PairIndex guess, int a0, int b0);

struct TwoQubitReport {
    double theta = 0.0;
    Order order = Order::BobFirst;
    int b0 = 0;                      // Bob's fixed inner choice (BobFirst protocol)
    double avg_f_a = 0.0;
    double avg_f_b = 0.0;
    double p_a = 0.0;
    double p_b = 0.0;
    // Bob's argmax response pairs per Alice pair (pair indices 0..7).
    std::vector<std::vector<int>> bob_response;
};

// Protocol probabilities. BobFirst: Alice guesses uniformly over the pairs,
// Bob fixes b0, observes her guess and best-responds over the orthogonal
// pairs; P_A = <f_A> / (<f_A> + <f_B>). AliceFirst: Alice draws one of the
// winning sets for her own choice, Bob exploits the revealed set, which
// balances the game.
TwoQubitReport two_qubit_probabilities(double theta, Order order = Order::BobFirst, int b0 = 0,
                                       double orthogonality_threshold = kExactTol);

struct PurityRelation {
    double ratio = 0.0;  // P_B / P_A
    double rhs = 0.0;    // 3 - 2 tr(rho1^2)
    double purity = 0.0;
};

// P_B/P_A against 3 - 2 tr(rho1^2), with rho1 the reduced density matrix of a
// single-operator state O_a |00> (every a gives the same spectrum).
PurityRelation purity_relation(double theta);

// Expected entry of the symbolic table: 1 on pairs, +-cos(theta/2) and
// +-i sin(theta/2) on the documented couplings, 0 elsewhere.
cx symbolic_entry(double theta, PairIndex row, PairIndex col);

// CSV with a header row of pair labels in the documented order and two
// columns (re, im) per entry; parseable by read_metric_csv.
void write_metric_csv(std::ostream& out, const MetricMatrix& g);
MetricMatrix read_metric_csv(std::istream& in);

std::string metric_json(const MetricMatrix& g);

}  // namespace chinos::metric
