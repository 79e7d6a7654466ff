#include "bqg/walks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bqg {

namespace {

using BigMatrix = std::vector<std::vector<unsigned __int128>>;

BigMatrix big_multiply(const BigMatrix& a, const BigMatrix& b) {
    const std::size_t n = a.size();
    BigMatrix out(n, std::vector<unsigned __int128>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            const unsigned __int128 aik = a[i][k];
            for (std::size_t j = 0; j < n; ++j) out[i][j] += aik * b[k][j];
        }
    return out;
}

std::uint64_t to_u64(unsigned __int128 value) {
    if (value > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("walk count exceeds 64 bits");
    return static_cast<std::uint64_t>(value);
}

// B^{l-1} in exact integer arithmetic.
BigMatrix hashimoto_power(const Graph& g, int l) {
    auto b01 = hashimoto_matrix(g);
    const std::size_t n = b01.size();
    BigMatrix b(n, std::vector<unsigned __int128>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b[i][j] = b01[i][j];

    BigMatrix power(n, std::vector<unsigned __int128>(n, 0));
    for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
    for (int step = 0; step < l - 1; ++step) power = big_multiply(power, b);
    return power;
}

}  // namespace

std::uint64_t WalkSeries::at(int l) const {
    if (l < 1 || l > max_length) throw std::out_of_range("walk length outside recorded range");
    return eta[l - 1];
}

std::uint64_t enumerate_closed_nb_walks(const Graph& g, int l, std::uint64_t step_budget) {
    if (l < 1) throw std::invalid_argument("walk length must be positive");
    if (l > 20) throw std::invalid_argument("length too large for exhaustive enumeration");

    std::uint64_t steps = 0;
    std::uint64_t count = 0;

    // Iterative DFS over (current vertex, previous edge) states.
    struct Frame {
        int vertex;
        int prev_edge;
        std::size_t next_neighbor;
    };
    std::vector<Frame> stack;
    stack.reserve(l + 1);

    for (int start = 0; start < g.vertex_count(); ++start) {
        stack.clear();
        stack.push_back(Frame{start, -1, 0});
        while (!stack.empty()) {
            Frame& frame = stack.back();
            int depth = static_cast<int>(stack.size()) - 1;
            if (depth == l) {
                if (frame.vertex == start) ++count;
                stack.pop_back();
                continue;
            }
            const auto& neighbors = g.neighbors(frame.vertex);
            bool advanced = false;
            while (frame.next_neighbor < neighbors.size()) {
                int next = neighbors[frame.next_neighbor++];
                int edge = g.edge_index(frame.vertex, next);
                if (edge == frame.prev_edge) continue;
                if (++steps > step_budget)
                    throw std::runtime_error("length too large: enumeration budget exhausted");
                stack.push_back(Frame{next, edge, 0});
                advanced = true;
                break;
            }
            if (!advanced && frame.next_neighbor >= neighbors.size()) stack.pop_back();
        }
    }
    return count;
}

std::vector<std::vector<std::uint8_t>> hashimoto_matrix(const Graph& g) {
    auto dirs = directed_edges(g);
    const std::size_t n = dirs.size();
    std::vector<std::vector<std::uint8_t>> b(n, std::vector<std::uint8_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (dirs[i].head != dirs[j].tail) continue;
            if (dirs[j].head == dirs[i].tail && dirs[j].underlying == dirs[i].underlying)
                continue;  // reversal
            b[i][j] = 1;
        }
    return b;
}

std::uint64_t count_via_hashimoto(const Graph& g, int l) {
    if (l < 1) throw std::invalid_argument("walk length must be positive");
    auto dirs = directed_edges(g);
    auto power = hashimoto_power(g, l);
    unsigned __int128 total = 0;
    for (std::size_t first = 0; first < dirs.size(); ++first)
        for (std::size_t last = 0; last < dirs.size(); ++last)
            if (dirs[last].head == dirs[first].tail) total += power[first][last];
    return to_u64(total);
}

std::uint64_t per_edge_midpoint_counts(const Graph& g, int e, int l) {
    if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("edge index out of range");
    if (l % 2 != 0) throw std::invalid_argument("per-edge counts are defined for even lengths");
    auto dirs = directed_edges(g);
    auto power = hashimoto_power(g, l);
    unsigned __int128 total = 0;
    for (std::size_t first : {static_cast<std::size_t>(2 * e), static_cast<std::size_t>(2 * e + 1)})
        for (std::size_t last = 0; last < dirs.size(); ++last)
            if (dirs[last].head == dirs[first].tail) total += power[first][last];
    return to_u64(total);
}

WalkSeries walk_series(const Graph& g, int max_length, WalkMethod method) {
    WalkSeries ws;
    ws.max_length = max_length;
    ws.edge_count = g.edge_count();
    ws.vertex_count = g.vertex_count();
    for (int v = 0; v < g.vertex_count(); ++v) ws.max_degree = std::max(ws.max_degree, g.degree(v));
    ws.eta.resize(max_length, 0);

    if (method == WalkMethod::oracle) {
        for (int l = 1; l <= max_length; ++l) ws.eta[l - 1] = enumerate_closed_nb_walks(g, l);
        return ws;
    }

    auto dirs = directed_edges(g);
    auto b01 = hashimoto_matrix(g);
    const std::size_t n = dirs.size();
    BigMatrix b(n, std::vector<unsigned __int128>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b[i][j] = b01[i][j];

    BigMatrix power(n, std::vector<unsigned __int128>(n, 0));
    for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
    for (int l = 1; l <= max_length; ++l) {
        // power = B^{l-1} at the top of each iteration.
        unsigned __int128 total = 0;
        for (std::size_t first = 0; first < n; ++first)
            for (std::size_t last = 0; last < n; ++last)
                if (dirs[last].head == dirs[first].tail) total += power[first][last];
        ws.eta[l - 1] = to_u64(total);
        if (l < max_length) power = big_multiply(power, b);
    }
    return ws;
}

std::vector<std::uint64_t> per_edge_series(const Graph& g, int e, int max_length) {
    if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("edge index out of range");
    return all_per_edge_series(g, max_length)[e];
}

std::vector<std::vector<std::uint64_t>> all_per_edge_series(const Graph& g, int max_length) {
    auto dirs = directed_edges(g);
    auto b01 = hashimoto_matrix(g);
    const std::size_t n = dirs.size();
    BigMatrix b(n, std::vector<unsigned __int128>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b[i][j] = b01[i][j];

    std::vector<std::vector<std::uint64_t>> out(g.edge_count());
    BigMatrix power(n, std::vector<unsigned __int128>(n, 0));
    for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
    for (int l = 1; l + 1 <= max_length; ++l) {
        power = big_multiply(power, b);  // B^l; counts at length l+1 use B^l
        if ((l + 1) % 2 == 0) {
            for (int e = 0; e < g.edge_count(); ++e) {
                unsigned __int128 total = 0;
                for (std::size_t first :
                     {static_cast<std::size_t>(2 * e), static_cast<std::size_t>(2 * e + 1)})
                    for (std::size_t last = 0; last < n; ++last)
                        if (dirs[last].head == dirs[first].tail) total += power[first][last];
                out[e].push_back(to_u64(total));
            }
        }
    }
    return out;
}

GeneratingValue generating_function(const WalkSeries& ws, Complex z) {
    Complex value = static_cast<double>(ws.edge_count);
    Complex even_power = 1.0;  // z^{l/2} for even l
    Complex root = std::sqrt(z);
    for (int l = 2; l <= ws.max_length; l += 2) {
        even_power *= z;
        if (ws.at(l) != 0) value += static_cast<double>(ws.at(l)) * even_power;
    }
    // Odd lengths only occur off the bipartite case; add them via sqrt(z).
    Complex odd_power = root;
    for (int l = 1; l <= ws.max_length; l += 2) {
        if (ws.at(l) != 0) value += static_cast<double>(ws.at(l)) * odd_power;
        odd_power *= z;
    }

    // Geometric tail from eta_l <= N_V d_max delta^{l-1}, delta = d_max - 1.
    const double delta = std::max(1, ws.max_degree - 1);
    const double r = delta * delta * std::abs(z);
    double tail = std::numeric_limits<double>::infinity();
    if (r < 1.0) {
        int half_terms = ws.max_length / 2;  // discarded terms start at l = 2*half_terms + 2
        tail = ws.vertex_count * ws.max_degree / delta * std::pow(r, half_terms + 1) /
               (1.0 - r);
    }
    return GeneratingValue{value, tail};
}

Complex complete_bipartite_closed_form(int m_b, int m_r, Complex z, CbNormalization norm) {
    if (m_b < 1 || m_r < 1) throw std::invalid_argument("classes must be nonempty");
    const double a = static_cast<double>(m_r - 1) * (m_b - 1);
    const double mrb = static_cast<double>(m_r) * m_b;

    Complex denom_geo = 1.0 - a * z;
    Complex denom_alt = 1.0 + z;
    double scale = 1.0 + std::abs(a * z);
    if (std::abs(denom_geo) < 1e-12 * scale || std::abs(denom_alt) < 1e-12)
        throw PoleError("pole of the rational generating function");

    Complex constant = norm == CbNormalization::edge_count ? mrb : mrb / 2.0;
    if (a == 0.0) return constant;  // no closed nonbacktracking walks
    Complex coeff = 2.0 * mrb * a / (1.0 + a);
    return constant + coeff * (a * z * z / denom_geo + z * z / denom_alt);
}

}  // namespace bqg
