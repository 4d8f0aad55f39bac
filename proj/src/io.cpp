#include "multipole/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "multipole/core.hpp"

namespace multipole::io {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

int sixbits(char c) {
  if (c < 63 || c > 126) throw Error(std::string("invalid graph6 character '") + c + "'");
  return c - 63;
}

// Decodes N(n) and advances the cursor past it.
long long read_order(std::string_view s, std::size_t& pos) {
  if (pos >= s.size()) throw Error("missing graph order");
  if (s[pos] != 126) return sixbits(s[pos++]);
  int width = 3;
  ++pos;
  if (pos < s.size() && s[pos] == 126) {
    width = 6;
    ++pos;
  }
  if (pos + width > s.size()) throw Error("truncated graph order");
  long long n = 0;
  for (int i = 0; i < width; ++i) n = (n << 6) | sixbits(s[pos++]);
  return n;
}

void write_order(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

int checked_order(long long n) {
  if (n > max_vertices) throw Error("graph order " + std::to_string(n) + " exceeds the supported maximum");
  return static_cast<int>(n);
}

}  // namespace

SimpleGraph parse_graph6(std::string_view text) {
  std::string_view s = strip(text);
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  std::size_t pos = 0;
  const int n = checked_order(read_order(s, pos));
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (s.size() - pos != bytes)
    throw Error("graph6 length mismatch: expected " + std::to_string(bytes) + " data bytes, got " +
                std::to_string(s.size() - pos));
  SimpleGraph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sixbits(s[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) g.add_link(i, j);
    }
  // Padding bits must be zero in canonical graph6.
  for (; k < bytes * 6; ++k)
    if ((sixbits(s[pos + k / 6]) >> (5 - k % 6)) & 1) throw Error("graph6 padding bits are not zero");
  return g;
}

std::string serialize_graph6(const SimpleGraph& g) {
  const int n = g.order();
  std::string out;
  write_order(out, n);
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = used = 0;
      }
    }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

SimpleGraph parse_sparse6(std::string_view text) {
  std::string_view s = strip(text);
  if (s.starts_with(">>sparse6<<")) s.remove_prefix(11);
  if (s.empty() || s.front() != ':') throw Error("sparse6 data must start with ':'");
  std::size_t pos = 1;
  const int n = checked_order(read_order(s, pos));
  int width = 0;
  while ((1LL << width) < n) ++width;

  SimpleGraph g(n);
  std::size_t bitpos = pos * 6;
  const std::size_t total = s.size() * 6;
  auto next_bit = [&]() -> int {
    const int byte = sixbits(s[bitpos / 6]);
    const int b = (byte >> (5 - bitpos % 6)) & 1;
    ++bitpos;
    return b;
  };
  long long v = 0;
  while (bitpos + 1 + width <= total) {
    const int b = next_bit();
    long long x = 0;
    for (int i = 0; i < width; ++i) x = (x << 1) | next_bit();
    if (b) ++v;
    if (x > v) {
      v = x;
    } else if (v < n) {
      if (x == v) throw Error("sparse6 loops are not supported");
      if (g.adjacent(static_cast<int>(x), static_cast<int>(v))) throw Error("sparse6 multi-edges are not supported");
      g.add_link(static_cast<int>(x), static_cast<int>(v));
    }
  }
  return g;
}

SimpleGraph parse_graph(std::string_view text) {
  std::string_view s = strip(text);
  if (s.starts_with(">>sparse6<<") || s.starts_with(":")) return parse_sparse6(s);
  return parse_graph6(s);
}

std::vector<GraphInstance> read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::vector<GraphInstance> out;
  const std::string stem = std::filesystem::path(path).stem().string();
  std::string line;
  while (std::getline(in, line)) {
    if (strip(line).empty()) continue;
    out.push_back({parse_graph(line), stem});
  }
  if (out.empty()) throw Error(path + " contains no graphs");
  if (out.size() > 1)
    for (std::size_t i = 0; i < out.size(); ++i) out[i].name = stem + "#" + std::to_string(i);
  return out;
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
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

int to_int(std::string_view t, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size())
    throw Error("line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(t) + "'");
  return value;
}

}  // namespace

Multipole parse_mpole(std::string_view text) {
  enum class Stage { Magic, K, Vertices, Semi, EdgesHeader, Edges, Done } stage = Stage::Magic;
  int k = 0, n = 0;
  std::vector<int> semi;
  std::vector<Link> links;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tok = tokens(line);
    if (tok.empty()) continue;
    auto fail = [&](const std::string& what) {
      return Error("line " + std::to_string(line_no) + ": " + what);
    };
    switch (stage) {
      case Stage::Magic:
        if (tok.size() != 2 || tok[0] != "mpole" || tok[1] != "1") throw fail("expected 'mpole 1'");
        stage = Stage::K;
        break;
      case Stage::K:
        if (tok.size() != 2 || tok[0] != "k") throw fail("expected 'k <k>'");
        k = to_int(tok[1], line_no);
        if (k < 1) throw fail("k must be positive");
        stage = Stage::Vertices;
        break;
      case Stage::Vertices:
        if (tok.size() != 2 || tok[0] != "vertices") throw fail("expected 'vertices <n>'");
        n = to_int(tok[1], line_no);
        if (n < 0 || n > max_vertices) throw fail("vertex count out of range");
        stage = Stage::Semi;
        break;
      case Stage::Semi:
        if (tok[0] != "semi") throw fail("expected 'semi ...'");
        if (static_cast<int>(tok.size()) - 1 != n)
          throw fail("semi lists " + std::to_string(tok.size() - 1) + " counts for " + std::to_string(n) + " vertices");
        for (std::size_t i = 1; i < tok.size(); ++i) {
          semi.push_back(to_int(tok[i], line_no));
          if (semi.back() < 0) throw fail("negative semiedge count");
        }
        stage = Stage::EdgesHeader;
        break;
      case Stage::EdgesHeader:
        if (tok.size() != 1 || tok[0] != "edges") throw fail("expected 'edges'");
        stage = Stage::Edges;
        break;
      case Stage::Edges:
        if (tok.size() == 1 && tok[0] == "end") {
          stage = Stage::Done;
          break;
        }
        if (tok.size() != 2) throw fail("expected '<u> <v>' or 'end'");
        {
          const int u = to_int(tok[0], line_no), v = to_int(tok[1], line_no);
          if (u < 0 || v >= n || u >= v) throw fail("edge must satisfy 0 <= u < v < n");
          links.push_back({u, v});
        }
        break;
      case Stage::Done:
        throw fail("content after 'end'");
    }
  }
  if (stage != Stage::Done) throw Error("unexpected end of .mpole data (missing 'end'?)");

  SimpleGraph g(n, links);
  for (int v = 0; v < n; ++v)
    if (g.degree(v) + semi[v] != k)
      throw Error("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v) + semi[v]) +
                  ", expected k = " + std::to_string(k));
  return Multipole(std::move(g), std::move(semi), k);
}

std::string serialize_mpole(const Multipole& m) {
  if (!m.k) throw Error("cannot serialize a multipole without a target degree");
  std::ostringstream out;
  out << "mpole 1\nk " << *m.k << "\nvertices " << m.order() << "\nsemi";
  for (int c : m.semi) out << ' ' << c;
  out << "\nedges\n";
  for (const Link& l : m.links.links()) out << l.u << ' ' << l.v << '\n';
  out << "end\n";
  return out.str();
}

Multipole read_mpole_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_mpole(buf.str());
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << contents;
}

}  // namespace multipole::io
