#include "dunkl_lab/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <vector>

#include "dunkl_lab/error.hpp"

namespace dunkl_lab::io {

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Reads the header and then every nonblank row as `columns` doubles.
std::vector<std::vector<double>> read_table(std::istream& in, const std::string& header, std::size_t columns) {
  std::string line;
  if (!std::getline(in, line)) throw InputError("empty CSV input");
  if (trim(line) != header) throw InputError("expected CSV header '" + header + "', got '" + trim(line) + "'");
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      cell = trim(cell);
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(v)) {
        throw InputError("line " + std::to_string(line_no) + ": '" + cell + "' is not a finite number");
      }
      row.push_back(v);
    }
    if (row.size() != columns) {
      throw InputError("line " + std::to_string(line_no) + ": expected " + std::to_string(columns) +
                       " columns, got " + std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

LogGrid grid_from_points(const std::vector<double>& r) {
  if (r.size() < 16) throw InputError("need at least 16 radial samples, got " + std::to_string(r.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!(r[i] > 0.0)) throw InputError("radii must be positive");
    if (i > 0 && !(r[i] > r[i - 1])) throw InputError("radii must be strictly increasing");
  }
  LogGrid grid(r.front(), r.back(), r.size());
  const double h = grid.log_step();
  for (std::size_t i = 1; i < r.size(); ++i) {
    const double step = std::log(r[i] / r[i - 1]);
    if (std::abs(step - h) > 1e-9 * std::max(h, 1.0)) {
      throw InputError("radii are not geometric: step " + std::to_string(i) + " differs from the mean log step");
    }
  }
  return grid;
}

}  // namespace

void write_radial_csv(std::ostream& out, const SampledRadialFunction& f) {
  out << "r,re,im\n";
  for (std::size_t i = 0; i < f.grid.size(); ++i) {
    out << format_number(f.grid[i]) << ',' << format_number(f.values[i].real()) << ','
        << format_number(f.values[i].imag()) << '\n';
  }
}

SampledRadialFunction read_radial_csv(std::istream& in, BesselOrder order) {
  const auto rows = read_table(in, "r,re,im", 3);
  std::vector<double> r;
  std::vector<complex> v;
  for (const auto& row : rows) {
    r.push_back(row[0]);
    v.emplace_back(row[1], row[2]);
  }
  return SampledRadialFunction(grid_from_points(r), std::move(v), order);
}

void write_line_csv(std::ostream& out, const SampledLineFunction& f) {
  out << "r,re,im\n";
  for (std::size_t k = f.grid.size(); k-- > 0;) {
    out << format_number(-f.grid[k]) << ',' << format_number(f.negative[k].real()) << ','
        << format_number(f.negative[k].imag()) << '\n';
  }
  for (std::size_t i = 0; i < f.grid.size(); ++i) {
    out << format_number(f.grid[i]) << ',' << format_number(f.positive[i].real()) << ','
        << format_number(f.positive[i].imag()) << '\n';
  }
}

SampledLineFunction read_line_csv(std::istream& in, BesselOrder order) {
  const auto rows = read_table(in, "r,re,im", 3);
  std::map<double, complex> pos;
  std::map<double, complex> neg;
  for (const auto& row : rows) {
    if (row[0] == 0.0) throw InputError("line samples must avoid t = 0");
    auto& side = row[0] > 0.0 ? pos : neg;
    if (!side.emplace(std::abs(row[0]), complex(row[1], row[2])).second) {
      throw InputError("duplicate sample at t = " + format_number(row[0]));
    }
  }
  if (pos.size() != neg.size()) throw InputError("line samples are not symmetric under t -> -t");
  std::vector<double> r;
  std::vector<complex> p;
  std::vector<complex> n;
  auto it = neg.begin();
  for (const auto& [radius, value] : pos) {
    if (std::abs(it->first - radius) > 1e-12 * radius) {
      throw InputError("line samples are not symmetric under t -> -t");
    }
    r.push_back(radius);
    p.push_back(value);
    n.push_back(it->second);
    ++it;
  }
  return SampledLineFunction(grid_from_points(r), std::move(p), std::move(n), order);
}

void write_polar_csv(std::ostream& out, const PolarField& f) {
  out << "r,theta,re,im\n";
  for (std::size_t i = 0; i < f.radial.size(); ++i) {
    for (std::size_t m = 0; m < f.angular_count; ++m) {
      const complex v = f.at(i, m);
      out << format_number(f.radial[i]) << ',' << format_number(f.theta(m)) << ','
          << format_number(v.real()) << ',' << format_number(v.imag()) << '\n';
    }
  }
}

PolarField read_polar_csv(std::istream& in) {
  const auto rows = read_table(in, "r,theta,re,im", 4);
  if (rows.empty()) throw InputError("no polar samples");
  std::size_t angles = 0;
  while (angles < rows.size() && rows[angles][0] == rows[0][0]) ++angles;
  if (rows.size() % angles != 0) throw InputError("polar samples do not form an r x theta table");
  const std::size_t radii = rows.size() / angles;
  std::vector<double> r(radii);
  std::vector<complex> values(rows.size());
  for (std::size_t i = 0; i < radii; ++i) {
    r[i] = rows[i * angles][0];
    for (std::size_t m = 0; m < angles; ++m) {
      const auto& row = rows[i * angles + m];
      const double expected = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(angles);
      if (row[0] != r[i] || std::abs(row[1] - expected) > 1e-9) {
        throw InputError("polar rows must be r-major with theta_m = 2 pi m / M");
      }
      values[i * angles + m] = complex(row[2], row[3]);
    }
  }
  return PolarField(grid_from_points(r), angles, std::move(values));
}

}  // namespace dunkl_lab::io
