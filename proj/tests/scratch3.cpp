#include <cstdio>
#include <complex>
#include "bqg/graph.hpp"
#include "bqg/identity.hpp"
#include "bqg/laplacian.hpp"
#include "bqg/spectrum.hpp"
#include "bqg/tree.hpp"
#include "bqg/walks.hpp"
using namespace bqg;

static Graph cube() {
    std::vector<std::pair<int,int>> edges;
    for (int v = 0; v < 8; ++v) for (int bit : {1,2,4}) if ((v^bit) > v) edges.emplace_back(v, v^bit);
    return Graph(8, edges);
}

// wrap-forbidding enumeration (closing edge must differ from first edge)
static std::uint64_t enumerate_tailless(const Graph& g, int l) {
    std::uint64_t count = 0;
    struct Frame { int vertex; int prev_edge; std::size_t next; };
    std::vector<Frame> stack;
    for (int start = 0; start < g.vertex_count(); ++start) {
        stack.clear();
        stack.push_back({start, -1, 0});
        std::vector<int> first_edge_stack{-1};
        while (!stack.empty()) {
            Frame& f = stack.back();
            int depth = (int)stack.size() - 1;
            if (depth == l) {
                if (f.vertex == start && f.prev_edge != first_edge_stack[1]) ++count;
                stack.pop_back(); first_edge_stack.pop_back();
                continue;
            }
            const auto& nb = g.neighbors(f.vertex);
            bool adv = false;
            while (f.next < nb.size()) {
                int nxt = nb[f.next++];
                int e = g.edge_index(f.vertex, nxt);
                if (e == f.prev_edge) continue;
                stack.push_back({nxt, e, 0});
                first_edge_stack.push_back(depth == 0 ? e : first_edge_stack.back());
                adv = true;
                break;
            }
            if (!adv && f.next >= nb.size()) { stack.pop_back(); first_edge_stack.pop_back(); }
        }
    }
    return count;
}

int main() {
    setvbuf(stdout, nullptr, _IONBF, 0);
    BiregularProfile prof{3, 2};  // dR=3, dB=2 -> delta (2,1)

    // counts sanity for subdivided cube and K(3,2)
    Graph sc = subdivide_edges(cube());
    Graph k32 = complete_bipartite(3, 2);
    std::printf("subdiv cube counts l=2..12 (hashimoto): ");
    for (int l = 2; l <= 12; l += 2) std::printf("%llu ", (unsigned long long)count_via_hashimoto(sc, l));
    std::printf("\nsubdiv cube counts l=2..12 (oracle):    ");
    for (int l = 2; l <= 12; l += 2) std::printf("%llu ", (unsigned long long)enumerate_closed_nb_walks(sc, l));
    std::printf("\nsubdiv cube tailless l=2..12:           ");
    for (int l = 2; l <= 12; l += 2) std::printf("%llu ", (unsigned long long)enumerate_tailless(sc, l));
    std::printf("\nK(3,2) counts tails    l=2..12: ");
    for (int l = 2; l <= 12; l += 2) std::printf("%llu ", (unsigned long long)count_via_hashimoto(k32, l));
    std::printf("\nK(3,2) counts tailless l=2..12: ");
    for (int l = 2; l <= 12; l += 2) std::printf("%llu ", (unsigned long long)enumerate_tailless(k32, l));
    std::printf("\nK(2,3) counts tails    l=2..12: ");
    Graph k23 = complete_bipartite(2, 3);
    for (int l = 2; l <= 12; l += 2) std::printf("%llu ", (unsigned long long)count_via_hashimoto(k23, l));
    std::printf("\n");

    for (Complex lam : {Complex(2,8), Complex(9,40)}) {
        auto ms = multipliers(lam, prof);
        Complex mu = ms.mu_minus;
        Complex factor = uv_integral(lam, prof) / wronskian(lam, prof);
        std::printf("lam=(%g,%g) mu=(%.10e,%.10e) |mu|=%.3e\n", lam.real(), lam.imag(), mu.real(), mu.imag(), std::abs(mu));
        for (const Graph* gp : {&k32, &sc}) {
            const Graph& g = *gp;
            auto qs = quantum_spectrum(delta_spectrum(g), g);
            Complex tr_true = trace_series(qs, lam, 3000000).value;
            double tail = trace_series(qs, lam, 3000000).tail_bound;
            Complex tr_closed = trace_closed_form(qs, lam).value;
            // tails-allowed P
            auto ws = walk_series(g, 24, WalkMethod::hashimoto);
            Complex p_tails = generating_function(ws, mu).value;
            // tailless P
            Complex p_tailless = (double)g.edge_count();
            { Complex pw = 1.0; for (int l = 2; l <= 12; l += 2) { pw *= mu; p_tailless += (double)enumerate_tailless(g, l) * pw; } }
            Complex main_tails = p_tails * factor;
            Complex main_tailless = p_tailless * factor;
            std::printf("  g(NV=%d): closed-series=%.2e (tail %.1e)\n", g.vertex_count(),
                        std::abs(tr_closed - tr_true), tail);
            std::printf("    mainform tails:    |P*f - tr| = %.3e\n", std::abs(main_tails - tr_true));
            std::printf("    mainform tailless: |P*f - tr| = %.3e\n", std::abs(main_tailless - tr_true));
        }
    }
    return 0;
}
