#include "grpwl/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "grpwl/error.hpp"

namespace grpwl {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

std::uint64_t parse_uint(const std::string& tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
    parse_error(line, "expected a non-negative integer, got '" + tok + "'");
  return v;
}

std::uint64_t parse_field(const std::string& tok, const std::string& key, std::size_t line) {
  if (tok.rfind(key + "=", 0) != 0) parse_error(line, "expected " + key + "=<value>");
  return parse_uint(tok.substr(key.size() + 1), line);
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

}  // namespace

Group read_cayley(std::istream& in) {
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(in, line)) parse_error(1, "empty input");
  auto head = split_ws(line);
  if (head.size() != 3 || head[0] != "cayley" || head[1] != "v1")
    parse_error(1, "expected header 'cayley v1 n=<order>'");
  std::uint64_t n = parse_field(head[2], "n", 1);
  if (n == 0 || n > (1u << 16)) parse_error(1, "order out of range");
  std::vector<Element> table;
  table.reserve(n * n);
  for (std::uint64_t r = 0; r < n; ++r) {
    ++lineno;
    if (!std::getline(in, line)) parse_error(lineno, "missing table row");
    auto toks = split_ws(line);
    if (toks.size() != n)
      parse_error(lineno, "row has " + std::to_string(toks.size()) + " entries, expected " +
                              std::to_string(n));
    for (const auto& t : toks) {
      std::uint64_t v = parse_uint(t, lineno);
      if (v >= n) parse_error(lineno, "entry " + t + " out of range");
      table.push_back(static_cast<Element>(v));
    }
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (!blank(line)) parse_error(lineno, "trailing content after table");
  }
  return validate_cayley(n, std::move(table));
}

void write_cayley(std::ostream& out, const Group& g) {
  const std::size_t n = g.order();
  out << "cayley v1 n=" << n << "\n";
  std::string row;
  for (std::size_t a = 0; a < n; ++a) {
    row.clear();
    for (std::size_t b = 0; b < n; ++b) {
      if (b) row += ' ';
      row += std::to_string(g.mul(static_cast<Element>(a), static_cast<Element>(b)));
    }
    row += '\n';
    out << row;
  }
}

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(in, line)) parse_error(1, "empty input");
  auto head = split_ws(line);
  if (head.size() != 4 || head[0] != "graph" || head[1] != "v1")
    parse_error(1, "expected header 'graph v1 n=<vertices> m=<edges>'");
  std::uint64_t n = parse_field(head[2], "n", 1);
  std::uint64_t m = parse_field(head[3], "m", 1);
  if (n > (1u << 16)) parse_error(1, "too many vertices");
  Graph g(n);
  std::uint64_t seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    auto first = line.find_first_not_of(" \t");
    if (line[first] == '#') {
      std::istringstream ls(line);
      std::string hash, word;
      ls >> hash >> word;
      if (hash == "#" && word == "label") {
        std::string vtok, rest;
        ls >> vtok;
        std::getline(ls, rest);
        rest.erase(0, rest.find_first_not_of(" \t"));
        while (!rest.empty() && (rest.back() == '\r' || rest.back() == ' ')) rest.pop_back();
        if (vtok.empty() || rest.empty()) parse_error(lineno, "label line needs a vertex and a string");
        std::uint64_t v = parse_uint(vtok, lineno);
        if (v >= n) parse_error(lineno, "label vertex out of range");
        g.set_label(static_cast<Vertex>(v), rest);
      }
      continue;
    }
    auto toks = split_ws(line);
    if (toks.size() != 2) parse_error(lineno, "expected 'u v'");
    std::uint64_t u = parse_uint(toks[0], lineno), v = parse_uint(toks[1], lineno);
    if (u >= n || v >= n) parse_error(lineno, "edge endpoint out of range");
    if (++seen > m) parse_error(lineno, "more edges than declared");
    try {
      g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } catch (const Error& e) {
      parse_error(lineno, e.what());
    }
  }
  if (seen != m)
    parse_error(lineno, "declared " + std::to_string(m) + " edges, found " + std::to_string(seen));
  return g;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "graph v1 n=" << g.num_vertices() << " m=" << g.num_edges() << "\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (!g.label(v).empty()) out << "# label " << v << " " << g.label(v) << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

Structure read_structure(std::istream& in) {
  std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::istringstream is(all);
  if (all.rfind("cayley", 0) == 0) return read_cayley(is);
  if (all.rfind("graph", 0) == 0) return read_graph(is);
  parse_error(1, "unknown file type (expected 'cayley v1' or 'graph v1')");
}

std::string read_file_bytes(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  return std::string((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
}

void write_file_bytes(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  f << bytes;
  if (!f) throw Error(ErrorCode::kInvalidArgument, "write failed for " + path);
}

Structure read_structure_file(const std::string& path) {
  std::istringstream is(read_file_bytes(path));
  return read_structure(is);
}

std::string to_text(const Group& g) {
  std::ostringstream os;
  write_cayley(os, g);
  return os.str();
}

std::string to_text(const Graph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

}  // namespace grpwl
