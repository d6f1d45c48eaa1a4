#pragma once

#include <iosfwd>
#include <string>

#include "dunkl_lab/dunkl.hpp"
#include "dunkl_lab/measures.hpp"

namespace dunkl_lab::io {

/// Header `r,re,im`, one sample per line, 17 significant digits.
void write_radial_csv(std::ostream& out, const SampledRadialFunction& f);
/// Rows must lie on a geometric grid (constant ratio to 1e-9 relative).
/// Throws InputError on anything malformed.
SampledRadialFunction read_radial_csv(std::istream& in, BesselOrder order);

/// Header `r,re,im` with signed r: the rows -r_{N-1} .. -r_0 then r_0 .. r_{N-1}.
void write_line_csv(std::ostream& out, const SampledLineFunction& f);
/// Accepts the rows in any order as long as {|r|} is one geometric grid
/// sampled at both signs.
SampledLineFunction read_line_csv(std::istream& in, BesselOrder order);

/// Header `r,theta,re,im`, r-major, theta_m = 2 pi m / M.
void write_polar_csv(std::ostream& out, const PolarField& f);
PolarField read_polar_csv(std::istream& in);

/// %.17g
std::string format_number(double x);

}  // namespace dunkl_lab::io
