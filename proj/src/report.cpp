#include "dsop/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "dsop/errors.hpp"
#include "dsop/verify.hpp"

namespace dsop {

namespace {

nlohmann::ordered_json complex_json(std::complex<double> z) {
  return nlohmann::ordered_json::array({format_double(z.real()), format_double(z.imag())});
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

double parse_double(const std::string& s, std::size_t line) {
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ValidationError("line " + std::to_string(line) + ": bad number '" + s + "'");
  return v;
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string to_json(const ZeroReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["d_star"] = r.d_star;
  j["sign_changes_in_hull"] = r.sign_changes;
  j["bound"] = r.bound;
  j["status"] = to_string(r.status);
  j["pass"] = r.pass;
  auto roots = nlohmann::ordered_json::array();
  for (const auto& z : r.roots) roots.push_back(complex_json(z));
  j["roots"] = roots;
  auto nearest = nlohmann::ordered_json::array();
  for (const auto& m : r.per_mass_nearest)
    nearest.push_back({{"c", to_string(m.c)}, {"distance", format_double(m.distance)}, {"root", complex_json(m.root)}});
  j["per_mass_nearest"] = nearest;
  if (!r.roots.empty()) {
    j["within_radius"] = r.within_radius;
    j["positive_real"] = r.positive_real;
    j["max_distance_to_half_line"] = format_double(r.max_distance_to_half_line);
    j["min_separation"] = format_double(r.min_separation);
  }
  return j.dump(2);
}

std::string csv_header() { return "n,d_star,sign_changes,bound,status,within_radius,positive_real"; }

std::string to_csv_row(const ZeroReport& r) {
  std::ostringstream out;
  out << r.n << ',' << r.d_star << ',' << r.sign_changes << ',' << r.bound << ',' << to_string(r.status) << ','
      << r.within_radius << ',' << r.positive_real;
  return out.str();
}

std::vector<RatioRow> parse_ratio_csv(std::string_view text) {
  std::vector<RatioRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      if (line != "n,ratio_re,ratio_im,limit_re,limit_im,abs_error")
        throw ValidationError("line 1: unexpected CSV header");
      header = false;
      continue;
    }
    const auto cells = split(line, ',');
    if (cells.size() != 6) throw ValidationError("line " + std::to_string(number) + ": expected 6 columns");
    RatioRow r;
    const double n = parse_double(cells[0], number);
    if (n < 0 || n != std::floor(n)) throw ValidationError("line " + std::to_string(number) + ": bad n");
    r.n = static_cast<std::size_t>(n);
    r.ratio = {parse_double(cells[1], number), parse_double(cells[2], number)};
    r.limit = {parse_double(cells[3], number), parse_double(cells[4], number)};
    r.abs_error = parse_double(cells[5], number);
    rows.push_back(r);
  }
  if (header) throw ValidationError("empty CSV");
  return rows;
}

std::string loglog_svg(const std::vector<std::pair<double, double>>& points, std::string_view title,
                       std::string_view x_label, std::string_view y_label) {
  std::vector<std::pair<double, double>> logs;
  for (const auto& [x, y] : points)
    if (x > 0 && y > 0 && std::isfinite(x) && std::isfinite(y)) logs.emplace_back(std::log10(x), std::log10(y));

  constexpr double width = 640, height = 420, left = 70, right = 20, top = 40, bottom = 60;
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (!logs.empty()) {
    x0 = std::floor(std::min_element(logs.begin(), logs.end())->first);
    x1 = std::ceil(std::max_element(logs.begin(), logs.end())->first);
    auto [lo, hi] = std::minmax_element(logs.begin(), logs.end(),
                                        [](const auto& a, const auto& b) { return a.second < b.second; });
    y0 = std::floor(lo->second);
    y1 = std::ceil(hi->second);
  }
  if (x1 <= x0) x1 = x0 + 1;
  if (y1 <= y0) y1 = y0 + 1;
  auto px = [&](double v) { return left + (v - x0) / (x1 - x0) * (width - left - right); };
  auto py = [&](double v) { return height - bottom - (v - y0) / (y1 - y0) * (height - top - bottom); };

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
    << escape(title) << "</text>\n";
  s << "<g stroke=\"black\" stroke-width=\"1\">\n";
  s << "<line x1=\"" << left << "\" y1=\"" << height - bottom << "\" x2=\"" << width - right << "\" y2=\""
    << height - bottom << "\"/>\n";
  s << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << height - bottom << "\"/>\n";
  s << "</g>\n<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (double e = x0; e <= x1; e += 1)
    s << "<text x=\"" << fmt(px(e)) << "\" y=\"" << height - bottom + 16 << "\" text-anchor=\"middle\">1e"
      << static_cast<int>(e) << "</text>\n";
  for (double e = y0; e <= y1; e += 1)
    s << "<text x=\"" << left - 6 << "\" y=\"" << fmt(py(e) + 4) << "\" text-anchor=\"end\">1e" << static_cast<int>(e)
      << "</text>\n";
  s << "<text x=\"" << width / 2 << "\" y=\"" << height - 16 << "\" text-anchor=\"middle\">" << escape(x_label)
    << "</text>\n";
  s << "<text x=\"16\" y=\"" << height / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << height / 2
    << ")\">" << escape(y_label) << "</text>\n</g>\n";
  if (!logs.empty()) {
    s << "<polyline fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < logs.size(); ++i)
      s << (i ? " " : "") << fmt(px(logs[i].first)) << ',' << fmt(py(logs[i].second));
    s << "\"/>\n";
    for (const auto& [x, y] : logs)
      s << "<circle cx=\"" << fmt(px(x)) << "\" cy=\"" << fmt(py(y)) << "\" r=\"3.5\" fill=\"#1f5fa8\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace dsop
