#include "conformal_heat/field_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "conformal_heat/errors.hpp"

namespace conformal_heat {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, sep)) {
    out.push_back(trim(item));
  }
  if (!text.empty() && text.back() == sep) {
    out.emplace_back();
  }
  return out;
}

double parse_double(const std::string& text) {
  const std::string t = trim(text);
  double value = 0.0;
  const auto* begin = t.data();
  const auto* end = t.data() + t.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (t.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("not a number: '" + t + "'");
  }
  return value;
}

long long parse_index(const std::string& text) {
  const double v = parse_double(text);
  if (v != std::floor(v) || std::abs(v) > 1e15) {
    throw ParseError("not an integer index: '" + text + "'");
  }
  return static_cast<long long>(v);
}

std::string format_grid(const LogRadialGrid& grid) {
  return format_number(grid.s_min()) + "," + format_number(grid.s_max()) + "," +
         std::to_string(grid.size());
}

struct Header {
  std::map<std::string, std::string> values;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

Header read_table(std::istream& in) {
  Header header;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) {
      continue;
    }
    if (t.front() == '#') {
      const auto eq = t.find('=');
      if (eq != std::string::npos) {
        header.values[trim(t.substr(1, eq - 1))] = trim(t.substr(eq + 1));
      }
      continue;
    }
    auto cells = split(t, ',');
    if (header.columns.empty()) {
      header.columns = std::move(cells);
      continue;
    }
    if (cells.size() != header.columns.size()) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(header.columns.size()) + " columns");
    }
    header.rows.push_back(std::move(cells));
  }
  if (in.bad()) {
    throw ParseError("read failure");
  }
  return header;
}

} // namespace

int FieldFile::dim() const {
  if (const auto* set = std::get_if<FactoredSet>(&field)) {
    if (set->empty()) {
      throw DomainError("FieldFile: empty factored set");
    }
    return set->front().dim();
  }
  return 2;
}

std::string format_number(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", x == 0.0 ? 0.0 : x);
  return buffer;
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) {
    out.push_back(parse_double(item));
  }
  return out;
}

Complex parse_complex(const std::string& text) {
  const auto v = parse_number_list(text);
  if (v.size() == 1) {
    return {v[0], 0.0};
  }
  if (v.size() == 2) {
    return {v[0], v[1]};
  }
  throw ParseError("expected 're' or 're,im', got '" + text + "'");
}

GridSpec parse_grid(const std::string& text) {
  const auto v = parse_number_list(text);
  if (v.size() != 3 && v.size() != 4) {
    throw ParseError("expected 'smin,smax,n[,nphi]', got '" + text + "'");
  }
  auto count = [&](double x) {
    if (x != std::floor(x) || x < 1.0) {
      throw ParseError("grid sizes must be positive integers: '" + text + "'");
    }
    return static_cast<std::size_t>(x);
  };
  GridSpec spec{v[0], v[1], count(v[2]), std::nullopt};
  if (v.size() == 4) {
    spec.n_phi = count(v[3]);
  }
  return spec;
}

FieldFile read_field(std::istream& in, std::optional<int> fallback_dim,
                     std::optional<GridSpec> fallback_grid) {
  const Header table = read_table(in);
  auto lookup = [&](const std::string& key) -> std::optional<std::string> {
    const auto it = table.values.find(key);
    if (it == table.values.end()) {
      return std::nullopt;
    }
    return it->second;
  };

  std::optional<GridSpec> spec = fallback_grid;
  if (auto g = lookup("grid")) {
    const auto n_phi = spec ? spec->n_phi : std::nullopt;
    spec = parse_grid(*g);
    if (!spec->n_phi) {
      spec->n_phi = n_phi;
    }
  }
  if (auto p = lookup("nphi")) {
    if (!spec) {
      throw ParseError("field file: nphi given without grid");
    }
    spec->n_phi = static_cast<std::size_t>(parse_index(*p));
  }
  if (!spec) {
    throw ParseError("field file: no grid geometry (header '# grid=' or --grid)");
  }
  std::optional<int> dim = fallback_dim;
  if (auto d = lookup("dim")) {
    dim = static_cast<int>(parse_index(*d));
  }
  const std::string layout = lookup("layout").value_or("factored");

  if (table.columns.size() != 4) {
    throw ParseError("field file: expected 4 columns");
  }

  try {
    if (layout == "grid2d") {
      if (dim && *dim != 2) {
        throw ParseError("field file: grid2d layout requires dim=2");
      }
      if (!spec->n_phi) {
        throw ParseError("field file: grid2d layout requires nphi");
      }
      const LogRadialGrid grid(2, spec->s_min, spec->s_max, spec->n);
      GridField2D field(*spec->n_phi, grid);
      std::set<std::pair<long long, long long>> seen;
      for (const auto& row : table.rows) {
        const long long a = parse_index(row[0]);
        const long long j = parse_index(row[1]);
        if (a < 0 || j < 0 || a >= static_cast<long long>(field.n_phi()) ||
            j >= static_cast<long long>(grid.size())) {
          throw ParseError("field file: index out of range");
        }
        if (!seen.insert({a, j}).second) {
          throw ParseError("field file: duplicate row");
        }
        field.at(static_cast<std::size_t>(a), static_cast<std::size_t>(j)) = {
            parse_double(row[2]), parse_double(row[3])};
      }
      return {std::move(field), {}};
    }
    if (layout != "factored") {
      throw ParseError("field file: unknown layout '" + layout + "'");
    }
    if (!dim) {
      throw ParseError("field file: no dimension (header '# dim=' or --dim)");
    }
    const LogRadialGrid grid(*dim, spec->s_min, spec->s_max, spec->n);
    std::map<long long, RadialSamples> components;
    std::set<std::pair<long long, long long>> seen;
    for (const auto& row : table.rows) {
      const long long m = parse_index(row[0]);
      const long long j = parse_index(row[1]);
      if (m < 0 || m > 100000 || j < 0 || j >= static_cast<long long>(grid.size())) {
        throw ParseError("field file: index out of range");
      }
      if (!seen.insert({m, j}).second) {
        throw ParseError("field file: duplicate row");
      }
      auto [it, inserted] = components.try_emplace(m, grid);
      it->second.values[static_cast<std::size_t>(j)] = {parse_double(row[2]),
                                                        parse_double(row[3])};
    }
    FactoredSet set;
    for (auto& [m, radial] : components) {
      if (*dim == 1) {
        set.push_back(FactoredField::parity(static_cast<int>(m), std::move(radial)));
      } else {
        set.emplace_back(static_cast<int>(m), std::move(radial));
      }
    }
    if (set.empty()) {
      throw ParseError("field file: no samples");
    }
    return {std::move(set), {}};
  } catch (const DomainError& e) {
    throw ParseError(std::string("field file: ") + e.what());
  }
}

void write_field(std::ostream& out, const FieldFile& file) {
  out << "# conformal-heat field\n";
  if (const auto* set = std::get_if<FactoredSet>(&file.field)) {
    const auto& grid = set->front().radial().grid;
    out << "# layout=factored\n"
        << "# dim=" << grid.dim() << '\n'
        << "# grid=" << format_grid(grid) << '\n';
    for (const auto& a : file.annotations) {
      out << "# " << a << '\n';
    }
    out << "m,s_index,re,im\n";
    for (const auto& component : *set) {
      const auto& v = component.radial().values;
      for (std::size_t j = 0; j < v.size(); ++j) {
        out << component.degree() << ',' << j << ',' << format_number(v[j].real()) << ','
            << format_number(v[j].imag()) << '\n';
      }
    }
    return;
  }
  const auto& field = std::get<GridField2D>(file.field);
  out << "# layout=grid2d\n"
      << "# dim=2\n"
      << "# grid=" << format_grid(field.grid()) << '\n'
      << "# nphi=" << field.n_phi() << '\n';
  for (const auto& a : file.annotations) {
    out << "# " << a << '\n';
  }
  out << "angle_index,s_index,re,im\n";
  for (std::size_t a = 0; a < field.n_phi(); ++a) {
    for (std::size_t j = 0; j < field.grid().size(); ++j) {
      const auto& v = field.at(a, j);
      out << a << ',' << j << ',' << format_number(v.real()) << ','
          << format_number(v.imag()) << '\n';
    }
  }
}

std::vector<KernelPoint> read_kernel_points(std::istream& in) {
  const Header table = read_table(in);
  if (table.columns.empty()) {
    return {};
  }
  const std::vector<std::string> expected = {"r", "r_prime", "t"};
  if (table.columns != expected) {
    throw ParseError("kernel points: expected header 'r,r_prime,t'");
  }
  std::vector<KernelPoint> points;
  points.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    points.push_back({parse_double(row[0]), parse_double(row[1]), parse_double(row[2])});
  }
  return points;
}

} // namespace conformal_heat
