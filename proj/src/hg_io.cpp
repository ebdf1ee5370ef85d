#include "hgpeel/hg_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

namespace hgpeel {

namespace {

[[noreturn]] void parse_error(std::size_t line_no, const std::string& msg) {
  throw HypergraphError(HypergraphErrc::kParse, "line " + std::to_string(line_no) + ": " + msg);
}

// Parses whitespace-separated unsigned integers from one line.
std::vector<std::uint64_t> parse_uints(const std::string& line, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  const char* p = line.data();
  const char* end = p + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p == end) break;
    std::uint64_t value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc{}) parse_error(line_no, "expected an unsigned integer");
    out.push_back(value);
    p = next;
  }
  return out;
}

}  // namespace

Hypergraph read_hg(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  unsigned r = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Vertex> flat;
  std::size_t edges_read = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.front() == '#') continue;
    auto values = parse_uints(line, line_no);
    if (values.empty()) continue;
    if (!have_header) {
      if (values.size() != 3) parse_error(line_no, "header must be 'r n m'");
      r = static_cast<unsigned>(values[0]);
      n = values[1];
      m = values[2];
      if (r < 2) parse_error(line_no, "r must be >= 2");
      flat.reserve(m * r);
      have_header = true;
      continue;
    }
    if (values.size() != r) parse_error(line_no, "edge line must have exactly r ids");
    if (edges_read == m) parse_error(line_no, "more edge lines than declared");
    for (auto v : values) {
      if (v >= n) {
        throw HypergraphError(HypergraphErrc::kVertexOutOfRange,
                              "line " + std::to_string(line_no) + ": vertex id out of range");
      }
      flat.push_back(static_cast<Vertex>(v));
    }
    ++edges_read;
  }
  if (!have_header) parse_error(line_no, "missing header");
  if (edges_read != m) parse_error(line_no, "fewer edge lines than declared");
  return Hypergraph::from_flat(r, n, std::move(flat));
}

Hypergraph read_hg(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_hg(in);
}

void write_hg(std::ostream& out, const Hypergraph& h) {
  std::string buf;
  buf.reserve(64 + h.flat_edges().size() * 8);
  char num[24];
  auto put = [&](std::uint64_t v) {
    auto [end, ec] = std::to_chars(num, num + sizeof num, v);
    buf.append(num, end);
  };
  put(h.r());
  buf += ' ';
  put(h.num_vertices());
  buf += ' ';
  put(h.num_edges());
  buf += '\n';
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    auto edge = h.edge(static_cast<EdgeIndex>(e));
    for (std::size_t i = 0; i < edge.size(); ++i) {
      if (i) buf += ' ';
      put(edge[i]);
    }
    buf += '\n';
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

void write_hg(const std::filesystem::path& path, const Hypergraph& h) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_hg(out, h);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace hgpeel
