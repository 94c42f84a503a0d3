#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pw/types.hpp"

namespace pw::detail {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussRule& gauss16();

/// Appends composite Gauss-Legendre nodes for [a, b] split into `panels` equal panels.
void append_panels(double a, double b, std::size_t panels, const GaussRule& rule,
                   std::vector<double>& nodes, std::vector<double>& weights);

/// In-place DFT. sign = -1: sum_j x_j e^{-2 pi i jk/N}; sign = +1: e^{+2 pi i jk/N}.
/// Unnormalized in both directions.
void fft_inplace(std::vector<Complex>& data, int sign);

std::size_t next_pow2(std::size_t n);

/// printf("%.12e"), the export format for every floating-point column.
std::string format_e12(double x);

}  // namespace pw::detail
