#include <charconv>
#include <sstream>
#include <unordered_map>

#include "bowtie/error.hpp"
#include "bowtie/hypergraph.hpp"

namespace bowtie {

namespace {

/// Splits a line into integer tokens; reports the byte column of a bad token.
std::vector<int> parse_ints(const std::string& line, std::size_t line_no) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc{} || ptr != line.data() + j) {
      throw ParseError("expected an integer, got '" + line.substr(i, j - i) + "'", line_no, i + 1);
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

bool is_blank_or_comment(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

Hypergraph parse_hypergraph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  int n = 0;
  int k = 0;
  std::vector<KSet> edges;
  std::vector<std::size_t> edge_lines;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    const auto values = parse_ints(line, line_no);
    if (!have_header) {
      if (values.size() != 2) throw ParseError("header must be 'n k'", line_no);
      n = values[0];
      k = values[1];
      if (n < 0 || n > kMaxVertices) throw ParseError("vertex count out of range", line_no);
      if (k < 1 || (k > n && n != 0)) throw ParseError("uniformity must lie in [1..n]", line_no);
      have_header = true;
      continue;
    }
    if (values.size() != static_cast<std::size_t>(k)) {
      throw ParseError("edge has " + std::to_string(values.size()) + " labels, expected " + std::to_string(k), line_no);
    }
    try {
      edges.push_back(KSet::from_elements(values, n));
    } catch (const InputError& e) {
      throw ParseError(e.what(), line_no);
    }
    edge_lines.push_back(line_no);
  }
  if (!have_header) throw ParseError("missing 'n k' header", line_no + 1);
  std::unordered_map<KSet, std::size_t, KSetHash> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!seen.emplace(edges[i], i).second) throw ParseError("repeated edge " + edges[i].to_string(), edge_lines[i]);
  }
  return Hypergraph(n, k, std::move(edges));
}

Hypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h, std::string_view comment) {
  if (!comment.empty()) {
    std::istringstream lines{std::string(comment)};
    std::string line;
    while (std::getline(lines, line)) out << "# " << line << '\n';
  }
  out << h.order() << ' ' << h.uniformity() << '\n';
  for (const KSet& e : h.edges()) {
    bool first = true;
    for (int v : e.elements()) {
      if (!first) out << ' ';
      out << v;
      first = false;
    }
    out << '\n';
  }
}

std::string to_text(const Hypergraph& h, std::string_view comment) {
  std::ostringstream os;
  write_hypergraph(os, h, comment);
  return os.str();
}

}  // namespace bowtie
