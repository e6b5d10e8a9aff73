#include "mulex/mg_format.hpp"

#include "mulex/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace mulex {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

unsigned long parse_natural(const std::string& tok, unsigned long max, const char* what) {
  unsigned long v = 0;
  const auto* end = tok.data() + tok.size();
  auto [p, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || p != end) throw FormatError(std::string("bad ") + what + ": '" + tok + "'");
  if (v > max) throw FormatError(std::string(what) + " out of range: " + tok);
  return v;
}

bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

Multigraph parse_mg(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw FormatError("empty .mg input");
  auto head = tokens_of(line);
  if (head.size() != 2 || head[0] != "n") throw FormatError("first line must be 'n <N>'");
  const auto n = parse_natural(head[1], 4096, "vertex count");
  if (n == 0) throw FormatError("vertex count must be at least 1");
  Multigraph g(n);
  for (Vertex i = 0; i + 1 < n; ++i) {
    if (!next_content_line(in, line)) {
      throw FormatError("expected " + std::to_string(n - 1) + " weight rows, got " +
                        std::to_string(i));
    }
    auto row = tokens_of(line);
    if (row.size() != n - 1 - i) {
      throw FormatError("row " + std::to_string(i + 1) + " must hold " + std::to_string(n - 1 - i) +
                        " weights");
    }
    for (std::size_t k = 0; k < row.size(); ++k) {
      g.set_weight(i, static_cast<Vertex>(i + 1 + k),
                   static_cast<Weight>(parse_natural(row[k], 255, "weight")));
    }
  }
  if (next_content_line(in, line)) throw FormatError("trailing content after weight rows");
  return g;
}

Multigraph parse_mg(const std::string& text) {
  std::istringstream in(text);
  return parse_mg(in);
}

Multigraph read_mg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return parse_mg(in);
}

std::string to_mg(const Multigraph& g) {
  std::ostringstream out;
  const auto n = static_cast<Vertex>(g.order());
  out << "n " << n << '\n';
  for (Vertex i = 0; i + 1 < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (j > i + 1) out << ' ';
      out << static_cast<unsigned>(g.weight(i, j));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace mulex
