#include "moldsched/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace moldsched {

namespace {

// Reads the next line that carries data, skipping blanks and '#' comments.
bool next_data_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  std::ostringstream msg;
  msg << "line " << line_no << ": " << what;
  throw std::runtime_error(msg.str());
}

std::ifstream open_for_read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path + " for reading");
  return in;
}

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  return out;
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

Instance read_instance(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_data_line(in, line, line_no)) fail(line_no, "missing header 'm n'");

  Instance instance;
  int n = 0;
  {
    std::istringstream header(line);
    if (!(header >> instance.m >> n)) fail(line_no, "expected 'm n'");
    std::string extra;
    if (header >> extra) fail(line_no, "trailing tokens after 'm n'");
  }
  if (instance.m < 1) fail(line_no, "m must be >= 1");
  if (n < 1) fail(line_no, "n must be >= 1");

  instance.tasks.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (!next_data_line(in, line, line_no)) fail(line_no, "missing task line");
    std::istringstream row(line);
    MoldableTask task;
    if (!(row >> task.id >> task.weight)) fail(line_no, "expected 'id weight p(1..m)'");
    task.profile.resize(static_cast<std::size_t>(instance.m));
    for (int k = 0; k < instance.m; ++k)
      if (!(row >> task.profile[static_cast<std::size_t>(k)]))
        fail(line_no, "profile needs exactly m entries");
    std::string extra;
    if (row >> extra) fail(line_no, "trailing tokens after profile");
    if (task.id != i) fail(line_no, "task ids must be dense 0..n-1 in file order");
    instance.tasks.push_back(std::move(task));
  }

  const auto problems = check_instance(instance);
  if (!problems.empty()) throw std::runtime_error("bad instance: " + problems.front());
  return instance;
}

Instance load_instance(const std::string& path) {
  auto in = open_for_read(path);
  try {
    return read_instance(in);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_instance(std::ostream& out, const Instance& instance) {
  out << instance.m << ' ' << instance.tasks.size() << '\n';
  for (const auto& task : instance.tasks) {
    out << task.id << ' ' << format_double(task.weight);
    for (double p : task.profile) out << ' ' << format_double(p);
    out << '\n';
  }
}

void save_instance(const std::string& path, const Instance& instance) {
  auto out = open_for_write(path);
  write_instance(out, instance);
}

Schedule read_schedule(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_data_line(in, line, line_no)) fail(line_no, "missing header 'n'");

  int n = 0;
  {
    std::istringstream header(line);
    if (!(header >> n)) fail(line_no, "expected task count");
  }
  if (n < 0) fail(line_no, "negative task count");

  Schedule schedule;
  schedule.placements.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (!next_data_line(in, line, line_no)) fail(line_no, "missing placement line");
    std::istringstream row(line);
    Placement pl;
    if (!(row >> pl.task_id >> pl.start >> pl.allot))
      fail(line_no, "expected 'id start allot'");
    schedule.placements.push_back(pl);
  }
  return schedule;
}

Schedule load_schedule(const std::string& path) {
  auto in = open_for_read(path);
  try {
    return read_schedule(in);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_schedule(std::ostream& out, const Schedule& schedule) {
  out << schedule.placements.size() << '\n';
  for (const auto& pl : schedule.placements)
    out << pl.task_id << ' ' << format_double(pl.start) << ' ' << pl.allot << '\n';
}

void save_schedule(const std::string& path, const Schedule& schedule) {
  auto out = open_for_write(path);
  write_schedule(out, schedule);
}

}  // namespace moldsched
