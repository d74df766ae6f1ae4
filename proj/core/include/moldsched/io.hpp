#pragma once

#include <iosfwd>
#include <string>

#include "moldsched/model.hpp"

namespace moldsched {

// Instance file format (plain text, whitespace separated; lines whose first
// non-blank character is '#' are comments):
//   line 1:       m n
//   next n lines: id weight p(1) p(2) ... p(m)
// Ids must be dense 0..n-1 in file order.  Numbers may use decimal or
// scientific notation and are written back with 17 significant digits so a
// round trip is bit exact.
Instance read_instance(std::istream& in);
Instance load_instance(const std::string& path);
void write_instance(std::ostream& out, const Instance& instance);
void save_instance(const std::string& path, const Instance& instance);

// Schedule file format:
//   line 1:       n
//   next n lines: id start allot
Schedule read_schedule(std::istream& in);
Schedule load_schedule(const std::string& path);
void write_schedule(std::ostream& out, const Schedule& schedule);
void save_schedule(const std::string& path, const Schedule& schedule);

// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

}  // namespace moldsched
