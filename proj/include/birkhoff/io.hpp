// File ingestion and emission: domain spec files, CSV tables with provenance
// comments, their JSON mirror, and standalone SVG figures.
#pragma once

#include <complex>
#include <string>
#include <vector>

#include "birkhoff/domain.hpp"

namespace birkhoff {

// Flat key-value format: `type = disc|ellipse|fourier` plus the fields the
// type needs (`radius`; `a`, `b`; `c0` and repeated `harmonic = k a_k b_k`).
// Blank lines and `#` comments are ignored; unknown keys are rejected.
DomainSpec parse_domain_text(const std::string& text);
DomainSpec load_domain_file(const std::string& path);

// FNV-1a of the canonical spec description, as fixed-width hex.
std::string domain_hash(const DomainSpec& spec);

struct CsvTable {
  std::vector<std::string> comments;  // emitted as "# <line>"
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// Values are printed with %.17g, so parse/format round-trips byte-exactly.
std::string format_csv(const CsvTable& table);
CsvTable parse_csv(const std::string& text);

// Same table as an array of objects keyed by the CSV column names.
std::string format_json(const CsvTable& table);

struct SvgOptions {
  std::string caption;
  bool mark_endpoints = true;
  std::vector<std::complex<double>> outline;  // optional closed curve
};

// Standalone SVG 1.1, polyline auto-scaled into an 800x800 view box.
std::string render_svg_polyline(const std::vector<std::complex<double>>& pts,
                                const SvgOptions& options = {});

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace birkhoff
