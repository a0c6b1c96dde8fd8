#ifndef ESSLAB_CSV_HPP
#define ESSLAB_CSV_HPP

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "esslab/errors.hpp"

namespace esslab {

/// A table with `#` comment lines, a header row and numeric or text cells.
struct Table {
  std::vector<std::string> comments;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  static std::string cell(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
  }

  void add(const std::vector<double>& values) {
    std::vector<std::string> r;
    r.reserve(values.size());
    for (double v : values) r.push_back(cell(v));
    add_text(std::move(r));
  }
  void add_text(std::vector<std::string> r) {
    if (r.size() != header.size()) throw Error("row width does not match header");
    rows.push_back(std::move(r));
  }

  std::string to_csv() const {
    std::string out;
    for (const auto& c : comments) out += "# " + c + "\n";
    auto line = [&out](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += cells[i];
      }
      out += '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out;
  }
};

/// Writes to `path`, or to stdout when the path is empty or "-".
inline void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw ConfigError("cannot open output file '" + path + "'");
  f << text;
  if (!f) throw ConfigError("failed writing '" + path + "'");
}

}  // namespace esslab

#endif  // ESSLAB_CSV_HPP
