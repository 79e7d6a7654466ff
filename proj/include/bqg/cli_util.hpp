#pragma once

#include <complex>
#include <string>

namespace bqg {

// Runtime configuration shared by the CLI subcommands.  Loaded from
// key=value lines; QGSPEC_THREADS caps `threads` when set.
struct Config {
    double abs_tol = 1e-8;
    double rel_tol = 1e-9;
    double cluster_tol = 1e-8;
    int walk_truncation = 20;
    long series_m_max = 100000;
    double band_epsilon = 1e-9;
    std::string output_path;  // empty = stdout
    int threads = 1;

    void validate() const;
};

Config load_config(const std::string& path);
// Applies the QGSPEC_THREADS cap to a parsed or default config.
void apply_thread_env(Config& config);

// Parses "a+bi" / "a-bi" / "a" / "bi" forms.
std::complex<double> parse_complex(const std::string& text);
std::string format_complex(std::complex<double> z);

// Shortest representation that round-trips through double.
std::string format_double(double x);

}  // namespace bqg
