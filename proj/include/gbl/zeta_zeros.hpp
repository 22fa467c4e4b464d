// zeta_zeros.hpp
// Ordered imaginary parts of nontrivial Riemann zeta zeros, loaded from
// external tables. The Riemann Hypothesis is assumed throughout, so every
// zero is rho = 1/2 + i*gamma and 1 - rho is its conjugate.
//
// File format: plain text, one decimal value per line, '#' lines and
// blank lines ignored, values strictly increasing and positive.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gbl/errors.hpp"

namespace gbl {

struct ZeroTable {
    std::vector<double> gammas; // strictly increasing, all > 0
    std::string source;

    std::size_t size() const { return gammas.size(); }
    bool empty() const { return gammas.empty(); }
};

// rho = 1/2 + i*gamma on the critical line.
inline std::complex<double> rho(double gamma) {
    return {0.5, gamma};
}

// Companion zero 1 - rho; equals conj(rho) exactly since beta = 1/2.
inline std::complex<double> rho_companion(double gamma) {
    return {0.5, -gamma};
}

// Bucket index M with M-1 < gamma <= M. Partitions (0, inf) without
// gaps or overlaps.
inline std::uint64_t zero_bucket(double gamma) {
    return static_cast<std::uint64_t>(std::ceil(gamma));
}

// Parse the first max_count zeros from `path`. Ordering violations and
// non-positive entries carry the offending line number.
inline ZeroTable load_zeros(const std::string& path, std::size_t max_count) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open zeros file: " + path);
    ZeroTable table;
    table.source = path;
    table.gammas.reserve(max_count);
    std::string line;
    long line_no = 0;
    double prev = 0.0;
    while (table.gammas.size() < max_count && std::getline(in, line)) {
        ++line_no;
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ss(line);
        double gamma;
        if (!(ss >> gamma))
            throw data_error("zeros file: unparsable value at line " +
                                 std::to_string(line_no),
                             line_no);
        if (!(gamma > 0.0))
            throw data_error("zeros file: non-positive zero at line " +
                                 std::to_string(line_no),
                             line_no);
        if (gamma <= prev)
            throw data_error("zeros file: non-monotone ordering at line " +
                                 std::to_string(line_no),
                             line_no);
        table.gammas.push_back(gamma);
        prev = gamma;
    }
    return table;
}

} // namespace gbl
