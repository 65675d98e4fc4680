#include "signed_extremal/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

#include "signed_extremal/errors.hpp"

namespace sx {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long parse_int(std::string_view field, std::size_t line_no, const char* what) {
  std::string_view digits = field;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  long value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
    throw ParseError(line_no, std::string("expected integer ") + what + ", got '" +
                                  std::string(field) + "'");
  return value;
}

}  // namespace

SignedGraph parse_graph(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (!lines[i].empty() && lines[i].back() == '\r')
      throw ParseError(i + 1, "CR line ending; the format uses LF only");

  if (lines.empty() || split_fields(lines[0]).empty()) throw ParseError(1, "missing header 'n m'");
  auto header = split_fields(lines[0]);
  if (header.size() != 2) throw ParseError(1, "header must be 'n m'");
  const long n = parse_int(header[0], 1, "vertex count");
  const long m = parse_int(header[1], 1, "edge count");
  if (n < 1) throw ParseError(1, "vertex count must be at least 1");
  if (m < 0 || m > n * (n - 1) / 2) throw ParseError(1, "edge count out of range for n");

  std::vector<SignedEdge> edges;
  std::vector<char> seen(static_cast<std::size_t>(n * n), 0);
  for (long k = 0; k < m; ++k) {
    const std::size_t line_no = static_cast<std::size_t>(k) + 2;
    if (line_no > lines.size()) throw ParseError(line_no, "missing edge line");
    auto f = split_fields(lines[line_no - 1]);
    if (f.size() != 3) throw ParseError(line_no, "edge line must be 'u v s'");
    long u = parse_int(f[0], line_no, "vertex");
    long v = parse_int(f[1], line_no, "vertex");
    long s = parse_int(f[2], line_no, "sign");
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(line_no, "vertex out of range");
    if (u == v) throw ParseError(line_no, "loop");
    if (s != 1 && s != -1) throw ParseError(line_no, "sign must be +1 or -1");
    if (seen[u * n + v]) throw ParseError(line_no, "duplicate edge");
    seen[u * n + v] = seen[v * n + u] = 1;
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<int>(s)});
  }
  for (std::size_t i = static_cast<std::size_t>(m) + 1; i < lines.size(); ++i)
    if (!split_fields(lines[i]).empty()) throw ParseError(i + 1, "unexpected content after edges");
  return SignedGraph(static_cast<int>(n), edges);
}

SignedGraph read_graph(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_graph(text);
}

SignedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return read_graph(in);
}

std::string format_graph(const SignedGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

void write_graph(std::ostream& out, const SignedGraph& g) {
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const auto& e : edges) out << e.u << ' ' << e.v << ' ' << (e.sign > 0 ? "+1" : "-1") << '\n';
}

void write_graph_file(const std::string& path, const SignedGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_graph(out, g);
}

}  // namespace sx
