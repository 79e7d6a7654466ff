#include "bqg/cli_util.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bqg {

void Config::validate() const {
    if (abs_tol <= 0.0 || rel_tol <= 0.0 || cluster_tol <= 0.0 || band_epsilon <= 0.0)
        throw std::invalid_argument("tolerances must be positive");
    if (walk_truncation < 2 || walk_truncation > 20 || walk_truncation % 2 != 0)
        throw std::invalid_argument("walk truncation must be an even length in [2, 20]");
    if (series_m_max < 1) throw std::invalid_argument("series m_max must be positive");
    if (threads < 1) throw std::invalid_argument("thread count must be positive");
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    Config config;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            std::ostringstream msg;
            msg << "config line " << line_no << ": expected key=value";
            throw std::runtime_error(msg.str());
        }
        auto trim = [](std::string s) {
            auto a = s.find_first_not_of(" \t");
            auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "abs_tol") config.abs_tol = std::stod(value);
            else if (key == "rel_tol") config.rel_tol = std::stod(value);
            else if (key == "cluster_tol") config.cluster_tol = std::stod(value);
            else if (key == "walk_truncation") config.walk_truncation = std::stoi(value);
            else if (key == "series_m_max") config.series_m_max = std::stol(value);
            else if (key == "band_epsilon") config.band_epsilon = std::stod(value);
            else if (key == "output_path") config.output_path = value;
            else if (key == "threads") config.threads = std::stoi(value);
            else {
                std::ostringstream msg;
                msg << "config line " << line_no << ": unknown key '" << key << "'";
                throw std::runtime_error(msg.str());
            }
        } catch (const std::invalid_argument&) {
            std::ostringstream msg;
            msg << "config line " << line_no << ": cannot parse value '" << value << "'";
            throw std::runtime_error(msg.str());
        }
    }
    config.validate();
    return config;
}

void apply_thread_env(Config& config) {
    if (const char* env = std::getenv("QGSPEC_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) config.threads = std::min(config.threads, cap);
    }
}

std::complex<double> parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty complex literal");

    // Split at the sign that separates real and imaginary parts (skip a
    // leading sign and exponent signs).
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
            split = i;  // last such sign separates the parts
    }

    auto parse_part = [](const std::string& part) {
        std::size_t used = 0;
        double value = std::stod(part, &used);
        if (used != part.size()) throw std::invalid_argument("trailing characters");
        return value;
    };

    try {
        if (s.back() == 'i' || s.back() == 'I') {
            std::string imag_part = s.substr(0, s.size() - 1);
            if (split == std::string::npos) {
                if (imag_part.empty() || imag_part == "+") return {0.0, 1.0};
                if (imag_part == "-") return {0.0, -1.0};
                return {0.0, parse_part(imag_part)};
            }
            std::string re = s.substr(0, split);
            std::string im = s.substr(split, s.size() - 1 - split);
            if (im == "+") im = "1";
            if (im == "-") im = "-1";
            return std::complex<double>(parse_part(re), parse_part(im));
        }
        return std::complex<double>(parse_part(s), 0.0);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse complex number '" + text +
                                    "' (expected forms: 2.5, 1+2i, -3e-2-0.5i)");
    }
}

std::string format_double(double x) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", x);
    double parsed = std::strtod(buffer, nullptr);
    if (parsed == x) {
        // Try shorter forms for readability while keeping round-tripping.
        for (int prec = 1; prec < 17; ++prec) {
            char shorter[40];
            std::snprintf(shorter, sizeof(shorter), "%.*g", prec, x);
            if (std::strtod(shorter, nullptr) == x) return shorter;
        }
    }
    return buffer;
}

std::string format_complex(std::complex<double> z) {
    std::string out = format_double(z.real());
    if (z.imag() >= 0.0 || std::isnan(z.imag())) out += "+";
    out += format_double(z.imag());
    out += "i";
    return out;
}

}  // namespace bqg
