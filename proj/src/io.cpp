#include "birkhoff/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace birkhoff {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string unquote(std::string v) {
  if (v.size() >= 2 && ((v.front() == '"' && v.back() == '"') ||
                        (v.front() == '\'' && v.back() == '\'')))
    return v.substr(1, v.size() - 2);
  return v;
}

double to_number(const std::string& v, const std::string& key) {
  // strtod instead of stod: subnormal values parse instead of throwing
  const char* begin = v.c_str();
  char* end = nullptr;
  const double out = std::strtod(begin, &end);
  if (end == begin || end != begin + v.size())
    throw std::invalid_argument("bad number for '" + key + "': " + v);
  if (std::isinf(out) && v.find("inf") == std::string::npos)
    throw std::invalid_argument("number out of range for '" + key + "': " + v);
  return out;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

DomainSpec parse_domain_text(const std::string& text) {
  std::istringstream in(text);
  std::string line, type;
  bool has_radius = false, has_a = false, has_b = false, has_c0 = false;
  double radius = 0, a = 0, b = 0, c0 = 0;
  std::vector<DomainSpec::Harmonic> harmonics;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("domain file line " +
                                  std::to_string(line_no) +
                                  ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = unquote(trim(line.substr(eq + 1)));
    if (key == "type") {
      type = value;
    } else if (key == "radius") {
      radius = to_number(value, key);
      has_radius = true;
    } else if (key == "a") {
      a = to_number(value, key);
      has_a = true;
    } else if (key == "b") {
      b = to_number(value, key);
      has_b = true;
    } else if (key == "c0") {
      c0 = to_number(value, key);
      has_c0 = true;
    } else if (key == "harmonic") {
      std::istringstream hv(value);
      double k_raw = 0, ak = 0, bk = 0;
      if (!(hv >> k_raw >> ak >> bk))
        throw std::invalid_argument(
            "domain file line " + std::to_string(line_no) +
            ": harmonic needs 'k a_k b_k'");
      std::string rest;
      if (hv >> rest)
        throw std::invalid_argument("domain file line " +
                                    std::to_string(line_no) +
                                    ": trailing junk after harmonic");
      const int k = static_cast<int>(k_raw);
      if (k != k_raw)
        throw std::invalid_argument("domain file line " +
                                    std::to_string(line_no) +
                                    ": harmonic index must be an integer");
      harmonics.push_back({k, ak, bk});
    } else {
      throw std::invalid_argument("domain file line " +
                                  std::to_string(line_no) +
                                  ": unknown key '" + key + "'");
    }
  }
  if (type == "disc") {
    if (!has_radius)
      throw std::invalid_argument("domain file: disc needs 'radius'");
    if (has_a || has_b || has_c0 || !harmonics.empty())
      throw std::invalid_argument("domain file: stray fields for disc");
    return DomainSpec::disc(radius);
  }
  if (type == "ellipse") {
    if (!has_a || !has_b)
      throw std::invalid_argument("domain file: ellipse needs 'a' and 'b'");
    if (has_radius || has_c0 || !harmonics.empty())
      throw std::invalid_argument("domain file: stray fields for ellipse");
    return DomainSpec::ellipse(a, b);
  }
  if (type == "fourier") {
    if (!has_c0)
      throw std::invalid_argument("domain file: fourier needs 'c0'");
    if (has_radius || has_a || has_b)
      throw std::invalid_argument("domain file: stray fields for fourier");
    return DomainSpec::fourier(c0, std::move(harmonics));
  }
  throw std::invalid_argument(type.empty()
                                  ? "domain file: missing 'type'"
                                  : "domain file: unknown type '" + type + "'");
}

DomainSpec load_domain_file(const std::string& path) {
  return parse_domain_text(read_file(path));
}

std::string domain_hash(const DomainSpec& spec) {
  const std::string canon = spec.canonical_string();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::string format_csv(const CsvTable& table) {
  std::ostringstream out;
  for (const auto& c : table.comments) out << "# " << c << "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? "," : "") << table.columns[i];
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << format_double(row[i]);
    out << "\n";
  }
  return out.str();
}

CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      table.comments.push_back(line.substr(2));
      continue;
    }
    if (line[0] == '#') {
      table.comments.push_back(line.substr(1));
      continue;
    }
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!header_seen) {
      table.columns = cells;
      header_seen = true;
      continue;
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) row.push_back(to_number(trim(c), "csv cell"));
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string format_json(const CsvTable& table) {
  nlohmann::json j;
  j["meta"] = table.comments;
  j["columns"] = table.columns;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i)
      obj[table.columns[i]] = row[i];
    rows.push_back(std::move(obj));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string render_svg_polyline(const std::vector<std::complex<double>>& pts,
                                const SvgOptions& options) {
  if (pts.size() < 2)
    throw std::invalid_argument("svg polyline needs at least 2 points");
  double xmin = pts[0].real(), xmax = xmin, ymin = pts[0].imag(), ymax = ymin;
  auto absorb = [&](const std::complex<double>& p) {
    xmin = std::min(xmin, p.real());
    xmax = std::max(xmax, p.real());
    ymin = std::min(ymin, p.imag());
    ymax = std::max(ymax, p.imag());
  };
  for (const auto& p : pts) absorb(p);
  for (const auto& p : options.outline) absorb(p);
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
  const double margin = 40.0, box = 800.0;
  const double scale = (box - 2 * margin) / span;
  const double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
  auto tx = [&](const std::complex<double>& p) {
    return box / 2 + scale * (p.real() - cx);
  };
  auto ty = [&](const std::complex<double>& p) {
    return box / 2 - scale * (p.imag() - cy);  // y up
  };
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n"
      << "  <rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  char buf[64];
  auto fmt = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return std::string(buf);
  };
  if (!options.outline.empty()) {
    out << "  <polygon fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\" "
           "points=\"";
    for (const auto& p : options.outline)
      out << fmt(tx(p)) << "," << fmt(ty(p)) << " ";
    out << "\"/>\n";
  }
  out << "  <polyline fill=\"none\" stroke=\"#003366\" stroke-width=\"1.5\" "
         "points=\"";
  for (const auto& p : pts) out << fmt(tx(p)) << "," << fmt(ty(p)) << " ";
  out << "\"/>\n";
  if (options.mark_endpoints) {
    out << "  <circle cx=\"" << fmt(tx(pts.front())) << "\" cy=\""
        << fmt(ty(pts.front()))
        << "\" r=\"5\" fill=\"#007700\"><title>start</title></circle>\n";
    out << "  <circle cx=\"" << fmt(tx(pts.back())) << "\" cy=\""
        << fmt(ty(pts.back()))
        << "\" r=\"5\" fill=\"#bb0000\"><title>end</title></circle>\n";
  }
  if (!options.caption.empty())
    out << "  <text x=\"20\" y=\"780\" font-family=\"monospace\" "
           "font-size=\"16\">"
        << options.caption << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace birkhoff
