#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "bqg/graph.hpp"
#include "bqg/spectrum.hpp"

namespace bqg {

// Closed nonbacktracking walk counts eta_l for l = 1..max_length.
// "Closed" means the vertex sequence returns to its start; consecutive
// undirected edges must differ, but the closing edge may repeat the first
// (tails allowed).
struct WalkSeries {
    std::vector<std::uint64_t> eta;  // eta[l-1] = count at length l
    int max_length = 0;
    int edge_count = 0;
    int vertex_count = 0;
    int max_degree = 0;

    std::uint64_t at(int l) const;
};

enum class WalkMethod { oracle, hashimoto };

// Exhaustive depth-first count of closed nonbacktracking walks of length l
// with designated start vertex.  Hard budget on extension steps.
std::uint64_t enumerate_closed_nb_walks(const Graph& g, int l,
                                        std::uint64_t step_budget = 100000000ull);

// B[d][d'] = 1 iff head(d) = tail(d') and d' != reverse(d), indexed like
// directed_edges(g).
std::vector<std::vector<std::uint8_t>> hashimoto_matrix(const Graph& g);

// Same count through powers of the Hashimoto matrix.
std::uint64_t count_via_hashimoto(const Graph& g, int l);

// Walks whose designated start is the midpoint of edge e; equals the number
// of vertex-started closed walks whose first edge is e (both orientations).
std::uint64_t per_edge_midpoint_counts(const Graph& g, int e, int l);

WalkSeries walk_series(const Graph& g, int max_length,
                       WalkMethod method = WalkMethod::hashimoto);

// Per-edge counts for l = 2, 4, ..., max_length.
std::vector<std::uint64_t> per_edge_series(const Graph& g, int e, int max_length);
std::vector<std::vector<std::uint64_t>> all_per_edge_series(const Graph& g, int max_length);

struct GeneratingValue {
    Complex value;
    double tail_bound;
};

// N_E + sum of eta_l z^{l/2} up to the recorded truncation, with a geometric
// tail bound (infinite when the bound's ratio reaches 1).
GeneratingValue generating_function(const WalkSeries& ws, Complex z);

enum class CbNormalization {
    edge_count,  // constant term N_E = m_R m_B (matches brute-force counts)
    paper_half,  // constant term m_R m_B / 2
};

// Rational closed form of the complete-bipartite generating function,
// evaluated in the variable that carries z^{l/2}.
Complex complete_bipartite_closed_form(int m_b, int m_r, Complex z,
                                       CbNormalization norm = CbNormalization::edge_count);

}  // namespace bqg
