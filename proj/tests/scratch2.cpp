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

typedef std::complex<long double> CL;
static CL trace_closed_ld(const std::vector<double>& alphas_interior, int ne, int nv, CL lam) {
    CL om = sqrt(lam);
    CL cw = cos(om), sw = sin(om);
    CL sum = 0;
    for (double a : alphas_interior) sum += CL(1)/(cw - CL(cosl((long double)a)));
    return CL(ne-nv)/(CL(2)*lam) + sw/om/CL(2)*sum - CL(ne-nv+2)*cw/(CL(2)*om*sw);
}
static CL comptrace_ld(int mb, int mr, CL lam) {
    CL om = sqrt(lam); CL cw = cos(om), sw = sin(om);
    long double ds = (mb-1)+(mr-1), pr = (long double)mb*mr, vs = mb+mr;
    return CL(pr-vs)/(CL(2)*lam) + CL(ds)*sw/(CL(2)*om*cw) - CL(pr-vs+2)*cw/(CL(2)*om*sw);
}
static CL mu_minus_ld(CL lam, int dr, int db) {
    CL om = sqrt(lam); CL c = cos(om), s = sin(om)/om, cp = -om*sin(om);
    CL tr = c*c*(CL(1)+CL(1)/CL(dr*db)) + s*cp*(CL(1)/CL(dr)+CL(1)/CL(db));
    CL det = CL(1)/CL(dr*db);
    CL w = sqrt(tr*tr/CL(4)-det);
    CL r1 = tr/CL(2)+w, r2 = tr/CL(2)-w;
    if (abs(r1) < abs(r2)) std::swap(r1, r2);
    return det/r1;
}

int main() {
    setvbuf(stdout, nullptr, _IONBF, 0);
    Graph g = subdivide_edges(cube());
    IdentityLab lab(g, 20);
    for (Complex lam : {Complex(9,40), Complex(4,15), Complex(2,8), Complex(-30,0), Complex(-120,0), Complex(6,25)}) {
        auto ms = multipliers(lam, lab.profile());
        auto rep = lab.key1_residual(lam);
        std::printf("lam=(%g,%g) |mu|=%.3e residual=%.3e bound=%.3e\n", lam.real(), lam.imag(),
                    std::abs(ms.mu_minus), rep.residual, rep.truncation_bound);
    }
    // long double decomposition at 9+40i
    auto ds = delta_spectrum(g);
    auto qs = quantum_spectrum(ds, g);
    std::vector<double> ai = qs.alpha_interior();
    CL lam(9.0L, 40.0L);
    CL trg = trace_closed_ld(ai, g.edge_count(), g.vertex_count(), lam);
    CL trcb = comptrace_ld(3, 2, lam);
    CL mu = mu_minus_ld(lam, 2, 1);
    auto ws = lab.walks();
    CL pg = CL(24);
    { CL p = 1; for (int l = 2; l <= 20; l += 2) { p *= mu; pg += CL((long double)ws.at(l))*p; } }
    long double a = 2.0L; // (mr-1)(mb-1) for K(3,2): (2-1)*(3-1)=2
    CL pcb = CL(6) + CL(2*6)*CL(a)/(CL(1)+CL(a))*(CL(a)*mu*mu/(CL(1)-CL(a)*mu) + mu*mu/(CL(1)+mu));
    CL lhs = pg*trcb, rhs = pcb*trg;
    std::printf("LD: trg=(%.18Lf,%.18Lf)\n", trg.real(), trg.imag());
    std::printf("LD: residual=%.3Le\n", (long double)abs(lhs-rhs));
    // double-pipeline values for comparison
    auto trg_d = trace_closed_form(qs, Complex(9,40)).value;
    auto trcb_d = trace_complete_bipartite(3, 2, Complex(9,40)).value;
    std::printf("trg double err=%.3Le trcb double err=%.3Le\n",
                (long double)abs(CL(trg_d.real(), trg_d.imag())-trg),
                (long double)abs(CL(trcb_d.real(), trcb_d.imag())-trcb));
    auto mu_d = multipliers(Complex(9,40), lab.profile()).mu_minus;
    std::printf("mu double err=%.3Le  |mu|=%.3Le\n", (long double)abs(CL(mu_d.real(), mu_d.imag())-mu), (long double)abs(mu));
    return 0;
}
