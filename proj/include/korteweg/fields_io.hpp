#pragma once

#include <string>
#include <vector>

#include "korteweg/grid.hpp"

namespace korteweg {

// One sampled amplitude curve, e.g. |S| along a coordinate axis.
struct AmplitudeCurve {
    std::vector<double> coord;
    std::vector<double> value;
};

// Header "y,F", one row per sample, 17 significant digits (round-trip exact),
// newline-terminated. Sample coordinates must be strictly monotone.
void write_amplitude_csv(const AmplitudeCurve& curve, const std::string& path);

AmplitudeCurve read_amplitude_csv(const std::string& path);

// Node coordinates plus real/imag parts, header "x,y,re,im".
void write_field_csv(const ComplexField& field, const std::string& path);

// 8-bit binary graymap (P5) of |values| on the grid, linearly scaled to 0..255.
// Rows run along the second grid coordinate; real fields pass magnitude too.
void write_field_pgm(const Grid2D& g, const std::vector<complexd>& values,
                     const std::string& path);
void write_field_pgm(const Grid2D& g, const std::vector<double>& values,
                     const std::string& path);

}  // namespace korteweg
