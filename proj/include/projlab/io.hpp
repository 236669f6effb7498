#pragma once

// Text formats for point sets (PSET v1) and dyadic measures (DMEAS v1).

#include "projlab/entropy.hpp"
#include "projlab/pointsets.hpp"

#include <iosfwd>
#include <string>

namespace projlab {

/// "PSET v1 n=<level> count=<k>" followed by k lines "<u> <v>".
void write_pointset(std::ostream& out, const LatticePointSet& set);
std::string format_pointset(const LatticePointSet& set);
/// Throws ParseError carrying the 1-based line number.
LatticePointSet read_pointset(std::istream& in);
LatticePointSet parse_pointset(const std::string& text);

/// "DMEAS v1 d=<1|2> n=<level>" followed by "<i> [<j>] <mass>", mass in %.17g.
void write_measure(std::ostream& out, const DyadicMeasure& mu);
std::string format_measure(const DyadicMeasure& mu);
DyadicMeasure read_measure(std::istream& in);
DyadicMeasure parse_measure(const std::string& text);

/// File helpers; IO failures throw std::runtime_error (not ParseError).
LatticePointSet load_pointset(const std::string& path);
DyadicMeasure load_measure(const std::string& path);
void save_text(const std::string& path, const std::string& text);
std::string load_text(const std::string& path);

}  // namespace projlab
