#pragma once

// Point-set input files.
//
//   # comment
//   hamming <n> <q>        body: one word per line; digits without separators when q <= 10,
//                          otherwise n space-separated symbols
//   johnson <nu> <d>       body: d space-separated 0-based elements per line
//   symmetric <n>          body: n space-separated 0-based images (one-line notation)

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ddr/empirics.hpp"
#include "ddr/error.hpp"
#include "ddr/spaces.hpp"

namespace ddr {

struct InputDocument {
  SpaceDescriptor space;
  std::vector<Point> elements;
  std::string source;

  PointSet point_set() const { return PointSet(space, elements); }
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline bool parse_int(const std::string& s, int& out) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  try {
    long v = std::stol(s, &pos);
    if (pos != s.size() || v < INT32_MIN || v > INT32_MAX) return false;
    out = static_cast<int>(v);
  } catch (const std::logic_error&) {
    return false;
  }
  return true;
}

}  // namespace detail

inline InputDocument parse_input_text(const std::string& text, const std::string& source = "<string>") {
  InputDocument doc;
  doc.source = source;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  std::map<Point, int> seen;
  auto where = [&] { return source + ":" + std::to_string(lineno) + ": "; };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto tokens = detail::split_ws(line);

    if (!have_header) {
      std::vector<int> params;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        int v = 0;
        if (!detail::parse_int(tokens[i], v)) throw Error(ErrorKind::malformed_header, where() + "bad parameter '" + tokens[i] + "'");
        params.push_back(v);
      }
      Family family;
      if (tokens[0] == "hamming") family = Family::hamming;
      else if (tokens[0] == "johnson") family = Family::johnson;
      else if (tokens[0] == "symmetric") family = Family::symmetric;
      else throw Error(ErrorKind::malformed_header, where() + "unknown family '" + tokens[0] + "'");
      try {
        doc.space = make_space(family, params);
      } catch (const Error& e) {
        throw Error(ErrorKind::invalid_parameters, where() + e.what());
      }
      have_header = true;
      continue;
    }

    const auto& space = doc.space;
    std::vector<int> entries;
    if (space.family == Family::hamming && space.q <= 10 && tokens.size() == 1) {
      for (char c : tokens[0]) {
        if (c < '0' || c > '9') throw Error(ErrorKind::malformed_line, where() + "non-digit symbol '" + std::string(1, c) + "'");
        entries.push_back(c - '0');
      }
    } else {
      for (const auto& tok : tokens) {
        int v = 0;
        if (!detail::parse_int(tok, v)) throw Error(ErrorKind::malformed_line, where() + "bad entry '" + tok + "'");
        entries.push_back(v);
      }
    }
    Point p;
    switch (space.family) {
      case Family::hamming: p = Point::word(std::move(entries)); break;
      case Family::johnson: p = Point::block(std::move(entries)); break;
      case Family::symmetric: p = Point::permutation(std::move(entries)); break;
    }
    try {
      validate_point(space, p);
    } catch (const Error& e) {
      throw Error(ErrorKind::malformed_line, where() + e.what());
    }
    if (auto [it, inserted] = seen.emplace(p, lineno); !inserted)
      throw Error(ErrorKind::duplicate_element, where() + "repeats the element on line " + std::to_string(it->second));
    doc.elements.push_back(std::move(p));
  }
  if (!have_header) throw Error(ErrorKind::malformed_header, source + ": missing header line");
  if (doc.elements.empty()) throw Error(ErrorKind::malformed_line, source + ": no elements");
  return doc;
}

inline InputDocument parse_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io_error, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input_text(buf.str(), path);
}

/// Inverse of parse_input_text.
inline std::string format_input(const PointSet& set) {
  const auto& space = set.space();
  std::ostringstream out;
  switch (space.family) {
    case Family::hamming: out << "hamming " << space.n << ' ' << space.q << '\n'; break;
    case Family::johnson: out << "johnson " << space.n << ' ' << space.d << '\n'; break;
    case Family::symmetric: out << "symmetric " << space.n << '\n'; break;
  }
  const bool packed = space.family == Family::hamming && space.q <= 10;
  for (const auto& p : set.elements()) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!packed && i > 0) out << ' ';
      out << p[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ddr
