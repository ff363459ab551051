// Command-line front end for the discrete Sobolev toolkit.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dsop/asymptotics.hpp"
#include "dsop/config.hpp"
#include "dsop/errors.hpp"
#include "dsop/ordering.hpp"
#include "dsop/report.hpp"
#include "dsop/roots.hpp"
#include "dsop/sobolev.hpp"
#include "dsop/verify.hpp"

namespace {

using namespace dsop;

enum Exit { ok = 0, condition_fails = 1, invalid = 2, math_error = 3 };

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_construct(const std::string& config, std::size_t n, const std::string& out) {
  const ConfigDoc doc = load_config(config);
  const SobolevSpec spec = to_spec(doc);
  for (const auto& w : spec.warnings()) std::cerr << "warning: " << w << '\n';
  std::vector<std::string> coeffs;
  if (doc.mode == Mode::exact)
    coeffs = to_strings(sobolev_poly_exact(n, spec));
  else
    coeffs = to_strings(sobolev_poly<double>(n, spec));
  write_file(out, nlohmann::json(coeffs).dump() + "\n");
  std::cout << "degree=" << n << " d*=" << spec.d_star() << '\n';
  return ok;
}

int cmd_check_order(const std::string& config) {
  const SobolevSpec spec = to_spec(load_config(config));
  const OrderCheck check = is_sequentially_ordered(spec);
  std::cout << check.describe() << '\n';
  return check.ordered ? ok : condition_fails;
}

int cmd_zeros(const std::string& config, std::size_t n, double radius) {
  const SobolevSpec spec = to_spec(load_config(config));
  if (n == 0) throw PreconditionError("zeros need n >= 1");
  const QPoly s = sobolev_poly_exact(n, spec);
  const auto roots = all_roots_float(s);
  std::cout << "i,re,im\n";
  for (std::size_t i = 0; i < roots.size(); ++i)
    std::cout << i + 1 << ',' << format_double(roots[i].real()) << ',' << format_double(roots[i].imag()) << '\n';

  const bool sip_shape = spec.is_laguerre() && spec.points().size() == spec.masses().size();
  ZeroReport report = theorem1_evaluate(n, spec);
  if (sip_shape && is_sequentially_ordered(spec).ordered) report = attraction_check(n, spec, radius);
  std::cout << to_json(report) << '\n';
  return ok;
}

int cmd_theorem1(const std::string& config, std::size_t n_max) {
  const SobolevSpec spec = to_spec(load_config(config));
  bool failed = false;
  for (const auto& r : theorem1_sweep(n_max, spec)) {
    std::cout << summary_line(r) << '\n';
    failed = failed || r.status == BoundStatus::fail;
  }
  return failed ? condition_fails : ok;
}

int cmd_asymptotics(const std::string& config, const std::string& x, const std::vector<std::size_t>& ns,
                    const std::string& csv) {
  const SobolevSpec spec = to_spec(load_config(config));
  const RatioReport report = ratio_trajectory(spec, parse_rational(x), ns);
  write_file(csv, to_csv(report));
  std::cout << "exponent=" << format_double(report.exponent) << '\n';
  return ok;
}

int cmd_plot(const std::string& csv, const std::string& svg) {
  const auto rows = parse_ratio_csv(read_file(csv));
  std::vector<std::pair<double, double>> points;
  for (const auto& r : rows) points.emplace_back(static_cast<double>(r.n), r.abs_error);
  write_file(svg, loglog_svg(points, "|S_n(x)/L_n(x) - limit|", "n", "absolute error"));
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete Sobolev orthogonal polynomials: construction and checks"};
  app.require_subcommand(1);

  std::string config, out, x, csv, svg;
  std::size_t n = 0, n_max = 0;
  double radius = 0.5;
  std::vector<std::size_t> ns;

  auto* construct = app.add_subcommand("construct", "write the coefficients of S_n");
  construct->add_option("-c,--config", config)->required();
  construct->add_option("-n,--n", n)->required();
  construct->add_option("-o,--out", out)->required();

  auto* check = app.add_subcommand("check-order", "test the sequential order condition");
  check->add_option("-c,--config", config)->required();

  auto* zeros = app.add_subcommand("zeros", "roots of S_n and the zero report");
  zeros->add_option("-c,--config", config)->required();
  zeros->add_option("-n,--n", n)->required();
  zeros->add_option("-r,--radius", radius);

  auto* theorem = app.add_subcommand("theorem1", "sign-change bound for n = 1..n-max");
  theorem->add_option("-c,--config", config)->required();
  theorem->add_option("--n-max", n_max)->required();

  auto* asym = app.add_subcommand("asymptotics", "ratio trajectory S_n(x)/L_n(x) as CSV");
  asym->add_option("-c,--config", config)->required();
  asym->add_option("-x,--x", x)->required();
  asym->add_option("--ns", ns)->required()->delimiter(',');
  asym->add_option("--csv", csv)->required();

  auto* plot = app.add_subcommand("plot", "log-log SVG of an asymptotics CSV");
  plot->add_option("--csv", csv)->required();
  plot->add_option("--svg", svg)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : invalid;
  }

  try {
    if (*construct) return cmd_construct(config, n, out);
    if (*check) return cmd_check_order(config);
    if (*zeros) return cmd_zeros(config, n, radius);
    if (*theorem) return cmd_theorem1(config, n_max);
    if (*asym) return cmd_asymptotics(config, x, ns, csv);
    if (*plot) return cmd_plot(csv, svg);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return invalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return math_error;
  }
  return ok;
}
