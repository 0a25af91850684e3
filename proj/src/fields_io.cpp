#include "korteweg/fields_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace korteweg {

namespace {

// 17 significant digits round-trip a double exactly
std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void check_open(const std::ofstream& out, const std::string& path) {
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
}

}  // namespace

void write_amplitude_csv(const AmplitudeCurve& curve, const std::string& path) {
    if (curve.coord.size() != curve.value.size())
        throw std::invalid_argument("write_amplitude_csv: size mismatch");
    for (size_t m = 1; m < curve.coord.size(); ++m)
        if (!(curve.coord[m] > curve.coord[m - 1]) && !(curve.coord[m] < curve.coord[m - 1]))
            throw std::invalid_argument("write_amplitude_csv: coordinates not monotone");
    std::ofstream out(path, std::ios::binary);
    check_open(out, path);
    out << "y,F\n";
    for (size_t m = 0; m < curve.coord.size(); ++m)
        out << fmt17(curve.coord[m]) << ',' << fmt17(curve.value[m]) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

AmplitudeCurve read_amplitude_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty file: " + path);
    AmplitudeCurve curve;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw std::runtime_error("bad row in " + path);
        curve.coord.push_back(std::strtod(line.substr(0, comma).c_str(), nullptr));
        curve.value.push_back(std::strtod(line.substr(comma + 1).c_str(), nullptr));
    }
    return curve;
}

void write_field_csv(const ComplexField& field, const std::string& path) {
    const Grid2D& g = field.grid;
    std::ofstream out(path, std::ios::binary);
    check_open(out, path);
    out << "x,y,re,im\n";
    for (int i = 0; i < g.n1(); ++i)
        for (int j = 0; j < g.n2(); ++j) {
            const Vec2 q = g.point(i, j);
            const complexd v = field.at(i, j);
            out << fmt17(q.x) << ',' << fmt17(q.y) << ',' << fmt17(v.real()) << ','
                << fmt17(v.imag()) << '\n';
        }
    if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

void write_pgm_impl(const Grid2D& g, const std::vector<double>& mag, const std::string& path) {
    double peak = 0.0;
    for (double v : mag) peak = std::max(peak, v);
    if (peak <= 0.0) peak = 1.0;
    std::ofstream out(path, std::ios::binary);
    check_open(out, path);
    out << "P5\n" << g.n1() << ' ' << g.n2() << "\n255\n";
    std::vector<unsigned char> row(static_cast<size_t>(g.n1()));
    for (int j = g.n2() - 1; j >= 0; --j) {  // +coord2 points up in the image
        for (int i = 0; i < g.n1(); ++i) {
            const double v = mag[static_cast<size_t>(g.index(i, j))] / peak;
            row[static_cast<size_t>(i)] =
                static_cast<unsigned char>(std::lround(255.0 * std::clamp(v, 0.0, 1.0)));
        }
        out.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

void write_field_pgm(const Grid2D& g, const std::vector<complexd>& values,
                     const std::string& path) {
    if (values.size() != static_cast<size_t>(g.node_count()))
        throw std::invalid_argument("write_field_pgm: field size mismatch");
    std::vector<double> mag(values.size());
    for (size_t m = 0; m < values.size(); ++m) mag[m] = std::abs(values[m]);
    write_pgm_impl(g, mag, path);
}

void write_field_pgm(const Grid2D& g, const std::vector<double>& values,
                     const std::string& path) {
    if (values.size() != static_cast<size_t>(g.node_count()))
        throw std::invalid_argument("write_field_pgm: field size mismatch");
    std::vector<double> mag(values.size());
    for (size_t m = 0; m < values.size(); ++m) mag[m] = std::abs(values[m]);
    write_pgm_impl(g, mag, path);
}

}  // namespace korteweg
