// Command-line front end: spectra, traces, multipliers, bands, walk counts,
// identity verification, generating-function extension, and plane sweeps.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bqg/cli_util.hpp"
#include "bqg/graph.hpp"
#include "bqg/identity.hpp"
#include "bqg/laplacian.hpp"
#include "bqg/spectrum.hpp"
#include "bqg/tree.hpp"
#include "bqg/walks.hpp"

namespace {

using bqg::Complex;
using bqg::Config;
using bqg::format_double;
using nlohmann::json;

struct Output {
    std::string path;  // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + path);
        out << text;
    }
};

std::string csv_row(const std::vector<std::string>& cells) {
    std::string row;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) row += ",";
        row += cells[i];
    }
    row += "\n";
    return row;
}

json trace_to_json(const bqg::TraceValue& tv, bool with_tail) {
    json out;
    out["lambda_re"] = tv.lambda.real();
    out["lambda_im"] = tv.lambda.imag();
    out["value_re"] = tv.value.real();
    out["value_im"] = tv.value.imag();
    if (with_tail) out["tail_bound"] = tv.tail_bound;
    return out;
}

int run_spectrum(const std::string& graph_path, double lambda_max, const Config& config,
                 const Output& output) {
    bqg::Graph g = bqg::load_graph(graph_path);
    auto ds = bqg::delta_spectrum(g, config.cluster_tol);
    auto qs = bqg::quantum_spectrum(ds, g);

    json doc;
    doc["vertex_count"] = g.vertex_count();
    doc["edge_count"] = g.edge_count();
    doc["special_multiplicity"] = qs.special_multiplicity;
    auto& delta = doc["delta"] = json::array();
    for (std::size_t i = 0; i < ds.values.size(); ++i)
        delta.push_back({{"nu", ds.values[i]}, {"multiplicity", ds.multiplicities[i]}});
    auto& evs = doc["eigenvalues"] = json::array();
    for (const auto& [lambda, mult] : bqg::eigenvalues_in_window(qs, lambda_max))
        evs.push_back({{"lambda", lambda}, {"multiplicity", mult}});
    output.write(doc.dump(2) + "\n");
    return 0;
}

int run_trace(const std::string& graph_path, const std::string& lambda_text,
              const std::string& method, const Config& config, const Output& output) {
    Complex lambda = bqg::parse_complex(lambda_text);
    bqg::Graph g = bqg::load_graph(graph_path);
    auto qs = bqg::quantum_spectrum(bqg::delta_spectrum(g, config.cluster_tol), g);

    json doc;
    doc["lambda"] = bqg::format_complex(lambda);
    if (method == "closed" || method == "both")
        doc["closed"] = trace_to_json(bqg::trace_closed_form(qs, lambda), false);
    if (method == "series" || method == "both")
        doc["series"] = trace_to_json(bqg::trace_series(qs, lambda, config.series_m_max), true);
    output.write(doc.dump(2) + "\n");
    return 0;
}

int run_multipliers(int delta_r, int delta_b, double re_min, double re_max, double step,
                    double im, const Output& output) {
    bqg::BiregularProfile profile{delta_r + 1, delta_b + 1};
    std::string text =
        "lambda_re,lambda_im,mu_minus_re,mu_minus_im,mu_plus_re,mu_plus_im,trT_re,trT_im,in_"
        "band\n";
    for (double re = re_min; re <= re_max + 0.5 * step; re += step) {
        auto ms = bqg::multipliers(Complex(re, im), profile);
        text += csv_row({format_double(re), format_double(im),
                         format_double(ms.mu_minus.real()), format_double(ms.mu_minus.imag()),
                         format_double(ms.mu_plus.real()), format_double(ms.mu_plus.imag()),
                         format_double(ms.tr_t.real()), format_double(ms.tr_t.imag()),
                         ms.in_band ? "1" : "0"});
    }
    output.write(text);
    return 0;
}

int run_bands(int delta_r, int delta_b, double lambda_max, double step, const Output& output) {
    bqg::BiregularProfile profile{delta_r + 1, delta_b + 1};
    auto bands = bqg::band_scan(profile, 0.0, lambda_max, step);
    std::string text = "band_index,lambda_lo,lambda_hi\n";
    for (std::size_t i = 0; i < bands.size(); ++i)
        text += csv_row({std::to_string(i), format_double(bands[i].lower),
                         format_double(bands[i].upper)});
    output.write(text);
    return 0;
}

int run_walks(const std::string& graph_path, int max_length, const std::string& method,
              const Output& output) {
    bqg::Graph g = bqg::load_graph(graph_path);

    json doc;
    auto& lengths = doc["lengths"] = json::array();
    for (int l = 1; l <= max_length; ++l) lengths.push_back(l);
    if (method == "both") {
        auto oracle = bqg::walk_series(g, max_length, bqg::WalkMethod::oracle);
        auto fast = bqg::walk_series(g, max_length, bqg::WalkMethod::hashimoto);
        if (oracle.eta != fast.eta)
            throw std::runtime_error("oracle and Hashimoto counts disagree");
        auto& counts = doc["counts"] = json::array();
        for (auto c : fast.eta) counts.push_back(c);
        doc["method"] = "both";
    } else {
        auto ws = bqg::walk_series(g, max_length,
                                   method == "oracle" ? bqg::WalkMethod::oracle
                                                      : bqg::WalkMethod::hashimoto);
        auto& counts = doc["counts"] = json::array();
        for (auto c : ws.eta) counts.push_back(c);
        doc["method"] = method;
    }
    output.write(doc.dump(2) + "\n");
    return 0;
}

int run_verify(const std::string& graph_path, const std::vector<std::string>& lambda_texts,
               const Config& config, const Output& output) {
    bqg::Graph g = bqg::load_graph(graph_path);
    bqg::IdentityLab lab(g, config.walk_truncation);

    json doc = json::array();
    bool all_pass = true;
    for (const auto& text : lambda_texts) {
        auto report = lab.key1_residual(bqg::parse_complex(text));
        all_pass = all_pass && report.pass;
        doc.push_back({{"lambda", bqg::format_complex(report.lambda)},
                       {"mu_minus", bqg::format_complex(report.mu_minus)},
                       {"lhs_re", report.lhs.real()},
                       {"lhs_im", report.lhs.imag()},
                       {"rhs_re", report.rhs.real()},
                       {"rhs_im", report.rhs.imag()},
                       {"residual", report.residual},
                       {"truncation_bound", report.truncation_bound},
                       {"verdict", report.pass ? "pass" : "fail"}});
    }
    output.write(doc.dump(2) + "\n");
    return all_pass ? 0 : 1;
}

int run_extend_p(const std::string& graph_path, double re_min, double re_max, double im_min,
                 double im_max, double step, const Config& config, const Output& output) {
    bqg::Graph g = bqg::load_graph(graph_path);
    bqg::IdentityLab lab(g, config.walk_truncation);

    std::string text = "z_re,z_im,P_re,P_im,lambda_re,lambda_im,sheet\n";
    for (double re = re_min; re <= re_max + 0.5 * step; re += step) {
        for (double im = im_min; im <= im_max + 0.5 * step; im += step) {
            Complex z(re, im);
            std::vector<std::string> cells{format_double(re), format_double(im)};
            try {
                auto point = bqg::psi_invert(z, lab.profile());
                Complex p = lab.extended_p(z);
                cells.push_back(format_double(p.real()));
                cells.push_back(format_double(p.imag()));
                cells.push_back(format_double(point.lambda.real()));
                cells.push_back(format_double(point.lambda.imag()));
                cells.push_back(point.branch == bqg::Sheet::mu_minus_sheet ? "minus" : "plus");
            } catch (const std::exception&) {
                cells.insert(cells.end(), {"nan", "nan", "nan", "nan", "excluded"});
            }
            text += csv_row(cells);
        }
    }
    output.write(text);
    return 0;
}

int run_sweep(const std::string& graph_path, double re_min, double re_max, double im_min,
              double im_max, double step, const Config& config, const Output& output) {
    bqg::Graph g = bqg::load_graph(graph_path);
    auto part = bqg::bipartite_partition(g);
    auto profile = bqg::biregular_profile(g, part);
    auto qs = bqg::quantum_spectrum(bqg::delta_spectrum(g, config.cluster_tol), g);
    const int m_b = profile.delta_r() + 1;
    const int m_r = profile.delta_b() + 1;

    std::vector<Complex> grid;
    for (double re = re_min; re <= re_max + 0.5 * step; re += step)
        for (double im = im_min; im <= im_max + 0.5 * step; im += step) {
            double shifted = im;
            if (im == 0.0) shifted = config.band_epsilon * (1.0 + std::abs(re));
            grid.emplace_back(re, shifted);
        }

    std::vector<std::string> rows(grid.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            Complex lambda = grid[i];
            auto ms = bqg::multipliers(lambda, profile);
            std::vector<std::string> cells{format_double(lambda.real()),
                                           format_double(lambda.imag())};
            try {
                Complex tr_g = bqg::trace_closed_form(qs, lambda).value;
                Complex tr_cb = bqg::trace_complete_bipartite(m_b, m_r, lambda).value;
                cells.push_back(format_double(tr_g.real()));
                cells.push_back(format_double(tr_g.imag()));
                cells.push_back(format_double(tr_cb.real()));
                cells.push_back(format_double(tr_cb.imag()));
            } catch (const bqg::PoleError&) {
                cells.insert(cells.end(), {"nan", "nan", "nan", "nan"});
            }
            cells.push_back(format_double(ms.mu_minus.real()));
            cells.push_back(format_double(ms.mu_minus.imag()));
            cells.push_back(format_double(ms.mu_plus.real()));
            cells.push_back(format_double(ms.mu_plus.imag()));
            cells.push_back(bqg::in_band(Complex(lambda.real(), 0.0), profile) ? "1" : "0");
            rows[i] = csv_row(cells);
        }
    };

    int threads = std::max(1, config.threads);
    if (threads == 1 || grid.size() < 2 * static_cast<std::size_t>(threads)) {
        work(0, grid.size());
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (grid.size() + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            std::size_t begin = t * chunk;
            std::size_t end = std::min(grid.size(), begin + chunk);
            if (begin < end) pool.emplace_back(work, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    std::string text =
        "lambda_re,lambda_im,trG_re,trG_im,trCB_re,trCB_im,mu_minus_re,mu_minus_im,mu_plus_re,"
        "mu_plus_im,in_band\n";
    for (const auto& row : rows) text += row;
    output.write(text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"biregular quantum graph toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "key=value configuration file");

    std::string graph_path;
    std::string out_path;
    std::string lambda_text = "1+1i";
    std::vector<std::string> lambda_list;
    std::string method = "both";
    double lambda_max = 40.0;
    int max_length = 12;
    int delta_r = 2, delta_b = 1;
    double re_min = 0.0, re_max = 10.0, im_min = 0.0, im_max = 0.0, step = 0.5, im = 0.0;
    int truncation = 0;
    long m_max = 0;
    int threads = 0;

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of the graph operator");
    spectrum->add_option("--graph", graph_path, "graph JSON file")->required();
    spectrum->add_option("--lambda-max", lambda_max, "window upper bound");
    spectrum->add_option("--out", out_path, "output file (default stdout)");

    auto* trace = app.add_subcommand("trace", "resolvent trace at one point");
    trace->add_option("--graph", graph_path)->required();
    trace->add_option("--lambda", lambda_text, "complex point, e.g. 2+3i")->required();
    trace->add_option("--method", method)->check(CLI::IsMember({"closed", "series", "both"}));
    trace->add_option("--m-max", m_max, "series shift cutoff");
    trace->add_option("--out", out_path);

    auto* multipliers = app.add_subcommand("multipliers", "transfer multipliers on a line");
    multipliers->add_option("--delta-r", delta_r)->required();
    multipliers->add_option("--delta-b", delta_b)->required();
    multipliers->add_option("--re-min", re_min)->required();
    multipliers->add_option("--re-max", re_max)->required();
    multipliers->add_option("--step", step)->required();
    multipliers->add_option("--im", im, "imaginary part of the line");
    multipliers->add_option("--out", out_path);

    auto* bands = app.add_subcommand("bands", "spectral band intervals");
    bands->add_option("--delta-r", delta_r)->required();
    bands->add_option("--delta-b", delta_b)->required();
    bands->add_option("--lambda-max", lambda_max)->required();
    bands->add_option("--step", step);
    bands->add_option("--out", out_path);

    auto* walks = app.add_subcommand("walks", "closed nonbacktracking walk counts");
    walks->add_option("--graph", graph_path)->required();
    walks->add_option("--max-length", max_length)->required();
    walks->add_option("--method", method)->check(CLI::IsMember({"oracle", "hashimoto", "both"}));
    walks->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "trace/walk identity reports");
    verify->add_option("--graph", graph_path)->required();
    verify->add_option("--lambda", lambda_list, "complex points (repeatable)")->required();
    verify->add_option("--truncation", truncation, "walk series truncation");
    verify->add_option("--out", out_path);

    auto* extendp = app.add_subcommand("extendP", "generating function through the multiplier map");
    extendp->add_option("--graph", graph_path)->required();
    extendp->add_option("--re-min", re_min)->required();
    extendp->add_option("--re-max", re_max)->required();
    extendp->add_option("--im-min", im_min)->required();
    extendp->add_option("--im-max", im_max)->required();
    extendp->add_option("--step", step)->required();
    extendp->add_option("--out", out_path);

    auto* sweep = app.add_subcommand("sweep", "trace and multiplier data over a rectangle");
    sweep->add_option("--graph", graph_path)->required();
    sweep->add_option("--re-min", re_min)->required();
    sweep->add_option("--re-max", re_max)->required();
    sweep->add_option("--im-min", im_min)->required();
    sweep->add_option("--im-max", im_max)->required();
    sweep->add_option("--step", step)->required();
    sweep->add_option("--threads", threads, "worker threads");
    sweep->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        Config config;
        if (!config_path.empty()) config = bqg::load_config(config_path);
        if (truncation > 0) config.walk_truncation = truncation;
        if (m_max > 0) config.series_m_max = m_max;
        if (threads > 0) config.threads = threads;
        bqg::apply_thread_env(config);
        config.validate();
        Output output{out_path.empty() ? config.output_path : out_path};

        if (*spectrum) return run_spectrum(graph_path, lambda_max, config, output);
        if (*trace) return run_trace(graph_path, lambda_text, method, config, output);
        if (*multipliers)
            return run_multipliers(delta_r, delta_b, re_min, re_max, step, im, output);
        if (*bands) return run_bands(delta_r, delta_b, lambda_max, step, output);
        if (*walks) return run_walks(graph_path, max_length, method, output);
        if (*verify) return run_verify(graph_path, lambda_list, config, output);
        if (*extendp)
            return run_extend_p(graph_path, re_min, re_max, im_min, im_max, step, config, output);
        if (*sweep)
            return run_sweep(graph_path, re_min, re_max, im_min, im_max, step, config, output);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
