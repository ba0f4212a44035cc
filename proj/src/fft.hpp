#pragma once

#include <complex>
#include <vector>

namespace conformal_heat::detail {

// Unnormalized in-place DFT: sum_j x_j exp(sign * 2 pi i j k / n), sign = -1
// (forward) or +1 (backward).
void dft_in_place(std::vector<std::complex<double>>& buffer, int sign);

} // namespace conformal_heat::detail
