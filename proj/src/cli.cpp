#include "conformal_heat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "conformal_heat/errors.hpp"
#include "conformal_heat/kernels.hpp"
#include "conformal_heat/verification.hpp"

namespace conformal_heat {

namespace {

constexpr std::size_t kDefaultNPhi = 256;

std::string format_complex(Complex z) {
  return format_number(z.real()) + "," + format_number(z.imag());
}

std::string describe(const G0Exponent& e) {
  return format_complex(e.z1) + "," + format_complex(e.z2) + "," + format_complex(e.z3);
}

G0Exponent parse_exponent(const std::string& text) {
  const auto v = parse_number_list(text);
  if (v.size() != 6) {
    throw ParseError("--exponent expects six numbers z1re,z1im,z2re,z2im,z3re,z3im");
  }
  return {{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}};
}

KernelPoint parse_point(const std::string& text) {
  const auto v = parse_number_list(text);
  if (v.size() != 3) {
    throw ParseError("--point expects r,r_prime,t");
  }
  return {v[0], v[1], v[2]};
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) {
    throw ParseError("cannot open '" + path + "'");
  }
  buffer << file.rdbuf();
  return buffer.str();
}

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (!config.out || *config.out == "-") {
    out << text;
    return;
  }
  std::ofstream file(*config.out, std::ios::binary);
  if (!file) {
    throw ParseError("cannot write '" + *config.out + "'");
  }
  file << text;
  if (!file) {
    throw ParseError("write failed for '" + *config.out + "'");
  }
}

std::string format_of(const RunConfig& config, const char* fallback) {
  const std::string f = config.format.value_or(fallback);
  if (f != "csv" && f != "json") {
    throw ParseError("--format must be csv or json");
  }
  return f;
}

int cmd_kernel(const RunConfig& config, std::istream& in, std::ostream& out) {
  if (!config.dim) {
    throw ParseError("kernel: --dim is required");
  }
  if (!config.z) {
    throw ParseError("kernel: --z is required");
  }
  const int dim = *config.dim;
  const ComplexTime z(*config.z);
  require_kernel_regime(z);

  std::vector<KernelPoint> points;
  if (config.in) {
    std::istringstream stream(read_input(*config.in, in));
    points = read_kernel_points(stream);
  }
  for (const auto& p : config.points) {
    points.push_back(parse_point(p));
  }

  const bool closed = config.closed_form && (dim == 1 || dim == 2 || dim == 4);
  const char* route = closed ? "closed_form" : "series";
  std::vector<Complex> values;
  values.reserve(points.size());
  for (const auto& p : points) {
    values.push_back(evaluate_kernel({dim, z, p.r, p.r_prime, p.t, config.tol}, closed));
  }

  std::ostringstream text;
  if (format_of(config, "csv") == "json") {
    nlohmann::ordered_json doc;
    doc["dim"] = dim;
    doc["z"] = {z.z().real(), z.z().imag()};
    doc["tol"] = config.tol;
    doc["route"] = route;
    doc["rows"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < points.size(); ++i) {
      doc["rows"].push_back({{"r", points[i].r},
                             {"r_prime", points[i].r_prime},
                             {"t", points[i].t},
                             {"re_K", values[i].real()},
                             {"im_K", values[i].imag()}});
    }
    text << doc.dump(2) << '\n';
  } else {
    text << "# dim=" << dim << '\n'
         << "# z=" << format_complex(z.z()) << '\n'
         << "# tol=" << format_number(config.tol) << '\n'
         << "# route=" << route << '\n'
         << "r,r_prime,t,re_K,im_K\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
      text << format_number(points[i].r) << ',' << format_number(points[i].r_prime) << ','
           << format_number(points[i].t) << ',' << format_complex(values[i]) << '\n';
    }
  }
  emit(config, text.str(), out);
  return kExitOk;
}

template <class Op>
FieldFile transform(const FieldFile& input, Op&& op) {
  if (const auto* set = std::get_if<FactoredSet>(&input.field)) {
    FactoredSet result;
    result.reserve(set->size());
    for (const auto& component : *set) {
      result.push_back(op(component));
    }
    return {std::move(result), {}};
  }
  return {op(std::get<GridField2D>(input.field)), {}};
}

int cmd_apply(const RunConfig& config, std::istream& in, std::ostream& out) {
  const int selected = static_cast<int>(config.exponent.has_value()) +
                       static_cast<int>(config.z.has_value()) +
                       static_cast<int>(config.t.has_value());
  if (selected != 1) {
    throw ParseError("apply: give exactly one of --exponent, --z, --t");
  }
  if (!config.in) {
    throw ParseError("apply: --in is required ('-' for stdin)");
  }
  std::optional<GridSpec> grid = config.grid;
  if (grid && !grid->n_phi) {
    grid->n_phi = kDefaultNPhi;
  }
  std::istringstream stream(read_input(*config.in, in));
  const FieldFile input = read_field(stream, config.dim, grid);

  FieldFile result;
  std::vector<std::string> notes;
  if (config.t) {
    const double t = *config.t;
    const LogRadialGrid& g = std::holds_alternative<FactoredSet>(input.field)
                                 ? std::get<FactoredSet>(input.field).front().radial().grid
                                 : std::get<GridField2D>(input.field).grid();
    bool aligned = true;
    try {
      aligned_shift(t, g);
    } catch (const MisalignedShiftError&) {
      aligned = false;
    }
    if (aligned) {
      result = transform(input, [&](const auto& f) { return apply_scaling_direct(t, f); });
    } else {
      const auto e = G0Exponent::scaling(t);
      result = transform(input, [&](const auto& f) { return apply_exp_g0(e, f); });
    }
    notes.push_back("operation=scaling t=" + format_number(t));
    notes.push_back(std::string("route=") + (aligned ? "direct" : "spectral"));
  } else if (config.z && config.quadrature) {
    const ComplexTime z(*config.z);
    require_kernel_regime(z);
    result = transform(input, [&](const auto& f) { return apply_kernel_quadrature(f, z); });
    notes.push_back("operation=heat z=" + format_complex(*config.z));
    notes.push_back("route=quadrature");
  } else {
    const G0Exponent e = config.exponent ? *config.exponent : G0Exponent::heat(*config.z);
    result = transform(input, [&](const auto& f) { return apply_exp_g0(e, f); });
    notes.push_back("operation=exp_g0 exponent=" + describe(e));
    notes.push_back(std::string("regime=") + to_string(is_bounded(e)));
    notes.push_back("route=spectral");
  }
  result.annotations = std::move(notes);

  std::ostringstream text;
  write_field(text, result);
  emit(config, text.str(), out);
  return kExitOk;
}

std::vector<std::string> requested_suites(const RunConfig& config) {
  std::vector<std::string> names;
  for (const auto& entry : config.suites) {
    std::istringstream stream(entry);
    std::string item;
    while (std::getline(stream, item, ',')) {
      if (!item.empty()) {
        names.push_back(item);
      }
    }
  }
  if (names.empty()) {
    return suite_names();
  }
  for (const auto& n : names) {
    const auto& known = suite_names();
    if (std::find(known.begin(), known.end(), n) == known.end()) {
      throw ParseError("unknown suite '" + n + "'");
    }
  }
  return names;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  const std::string format = format_of(config, "json");
  const auto names = requested_suites(config);
  std::vector<SuiteReport> reports;
  bool all_passed = true;
  for (const auto& n : names) {
    reports.push_back(run_suite(n));
    all_passed = all_passed && reports.back().passed();
  }

  std::ostringstream text;
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["passed"] = all_passed;
    doc["suites"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
      nlohmann::ordered_json suite;
      suite["suite"] = r.suite;
      suite["passed"] = r.passed();
      suite["seconds"] = r.seconds;
      suite["max_defect"] = r.max_defect();
      suite["checks"] = nlohmann::ordered_json::array();
      for (const auto& c : r.checks) {
        suite["checks"].push_back({{"name", c.name},
                                   {"defect", c.defect},
                                   {"tolerance", c.tolerance},
                                   {"passed", c.passed}});
      }
      doc["suites"].push_back(std::move(suite));
    }
    text << doc.dump(2) << '\n';
  } else {
    text << "suite,check,defect,tolerance,passed\n";
    for (const auto& r : reports) {
      for (const auto& c : r.checks) {
        text << r.suite << ',' << c.name << ',' << format_number(c.defect) << ','
             << format_number(c.tolerance) << ',' << (c.passed ? "true" : "false") << '\n';
      }
    }
  }
  emit(config, text.str(), out);
  return all_passed ? kExitOk : kExitSuiteFailure;
}

} // namespace

double default_tolerance() {
  const char* env = std::getenv(kToleranceEnvVar);
  if (env == nullptr) {
    return kDefaultTolerance;
  }
  try {
    const auto v = parse_number_list(env);
    if (v.size() == 1 && v[0] > 0.0) {
      return v[0];
    }
  } catch (const ParseError&) {
  }
  return kDefaultTolerance;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Heat semigroups and conformal symmetries on sampled radial data",
               "conformal-heat"};
  app.require_subcommand(1);

  RunConfig config;
  config.tol = default_tolerance();
  std::optional<std::string> grid_text;
  std::optional<std::string> z_text;
  std::optional<std::string> exponent_text;

  app.add_option("--dim", config.dim, "Ambient dimension N")->check(CLI::Range(1, 64));
  app.add_option("--grid", grid_text, "smin,smax,n[,nphi]");
  app.add_option("--z", z_text, "Complex time re[,im]");
  app.add_option("--exponent", exponent_text, "z1re,z1im,z2re,z2im,z3re,z3im");
  app.add_option("--t", config.t, "Dilation parameter");
  app.add_option("--tol", config.tol, "Tolerance (default 1e-10, or $CONFORMAL_HEAT_TOL)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--closed-form", config.closed_form, "Use closed forms for N = 1, 2, 4");
  app.add_flag("--quadrature", config.quadrature, "apply --z by kernel quadrature");
  app.add_option("--suite", config.suites, "Suites to run (repeatable or comma separated)");
  app.add_option("--format", config.format, "csv or json");
  app.add_option("--in", config.in, "Input file, '-' for stdin");
  app.add_option("--out", config.out, "Output file (default stdout)");
  app.add_option("--point", config.points, "Kernel point r,r_prime,t (repeatable)");

  app.add_subcommand("kernel", "Evaluate the heat kernel at points")->fallthrough();
  app.add_subcommand("apply", "Apply an operator to a sampled field")->fallthrough();
  app.add_subcommand("verify", "Run the verification suites")->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitIoError;
  }
  config.subcommand = app.get_subcommands().front()->get_name();

  try {
    if (grid_text) {
      config.grid = parse_grid(*grid_text);
    }
    if (z_text) {
      config.z = parse_complex(*z_text);
    }
    if (exponent_text) {
      config.exponent = parse_exponent(*exponent_text);
    }
    if (config.subcommand == "kernel") {
      return cmd_kernel(config, in, out);
    }
    if (config.subcommand == "apply") {
      return cmd_apply(config, in, out);
    }
    return cmd_verify(config, out);
  } catch (const InvalidRegimeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidRegime;
  } catch (const MisalignedShiftError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidRegime;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIoError;
  }
}

} // namespace conformal_heat
