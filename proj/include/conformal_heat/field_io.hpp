#pragma once

// Text formats shared by the command-line tool.
//
// Field files are CSV with '#' header lines carrying the geometry:
//
//   # conformal-heat field
//   # layout=factored            (or grid2d)
//   # dim=3
//   # grid=-16,16,2048
//   # nphi=256                   (grid2d only)
//   m,s_index,re,im              (angle_index,s_index,re,im for grid2d)
//   1,0,0,0
//   ...
//
// Missing rows are zeros. Numbers are written with 17 significant digits so
// that output is byte-for-byte reproducible.

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "conformal_heat/kernels.hpp"
#include "conformal_heat/log_radial.hpp"
#include "conformal_heat/spherical.hpp"

namespace conformal_heat {

struct GridSpec {
  double s_min = -16.0;
  double s_max = 16.0;
  std::size_t n = 2048;
  std::optional<std::size_t> n_phi;
};

// Components of a factored file, one per degree.
using FactoredSet = std::vector<FactoredField>;

struct FieldFile {
  std::variant<FactoredSet, GridField2D> field;
  // Extra '#' lines written after the geometry, e.g. the applied operator.
  std::vector<std::string> annotations;

  int dim() const;
};

// "%.17g"
std::string format_number(double x);

// Parses "a,b,c" into doubles; throws ParseError.
std::vector<double> parse_number_list(const std::string& text);

// "re" or "re,im"
Complex parse_complex(const std::string& text);

// "smin,smax,n[,nphi]"
GridSpec parse_grid(const std::string& text);

// Header values override nothing: the file must be self-describing except
// where fallbacks are given (dim and grid from the command line).
FieldFile read_field(std::istream& in, std::optional<int> fallback_dim = std::nullopt,
                     std::optional<GridSpec> fallback_grid = std::nullopt);

void write_field(std::ostream& out, const FieldFile& file);

struct KernelPoint {
  double r;
  double r_prime;
  double t;
};

// CSV with header r,r_prime,t; '#' lines ignored.
std::vector<KernelPoint> read_kernel_points(std::istream& in);

} // namespace conformal_heat
