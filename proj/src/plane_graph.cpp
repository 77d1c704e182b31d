#include "triblock/plane_graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

#include "triblock/error.hpp"

namespace triblock {

PlaneGraph PlaneGraph::build(int n, std::vector<std::vector<Vertex>> rotations) {
  if (n < 1) throw Error(ErrorKind::InvalidGraph, "a plane graph needs at least one vertex");
  if (static_cast<int>(rotations.size()) != n) {
    throw Error(ErrorKind::InconsistentRotation,
                "expected " + std::to_string(n) + " rotations, got " +
                    std::to_string(rotations.size()));
  }

  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    auto sorted = rotations[v];
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      Vertex w = sorted[i];
      if (w == v) throw Error(ErrorKind::InvalidGraph, "loop at vertex " + std::to_string(v));
      if (w < 0 || w >= n) {
        throw Error(ErrorKind::InvalidGraph, "neighbour " + std::to_string(w) + " of vertex " +
                                                 std::to_string(v) + " out of range");
      }
      if (i > 0 && sorted[i - 1] == w) {
        throw Error(ErrorKind::InvalidGraph, "duplicate neighbour " + std::to_string(w) +
                                                 " at vertex " + std::to_string(v));
      }
      if (v < w) edges.emplace_back(v, w);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : rotations[v]) {
      const auto& back = rotations[w];
      if (std::find(back.begin(), back.end(), v) == back.end()) {
        throw Error(ErrorKind::InconsistentRotation,
                    std::to_string(w) + " is in the rotation of " + std::to_string(v) +
                        " but not vice versa");
      }
    }
  }

  PlaneGraph pg;
  pg.graph_ = Graph(n, std::move(edges));
  if (!pg.graph_.is_connected()) throw Error(ErrorKind::Disconnected, "graph is not connected");
  pg.rotations_ = std::move(rotations);

  pg.offset_.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    pg.offset_[v + 1] = pg.offset_[v] + static_cast<int>(pg.rotations_[v].size());
  }
  const int num_darts = pg.offset_[n];
  pg.darts_.resize(num_darts);
  pg.edge_of_.resize(num_darts);
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < pg.rotations_[v].size(); ++i) {
      int d = pg.offset_[v] + static_cast<int>(i);
      pg.darts_[d] = {v, pg.rotations_[v][i]};
      pg.edge_of_[d] = *pg.graph_.edge_id(v, pg.rotations_[v][i]);
    }
  }
  pg.twin_.resize(num_darts);
  pg.next_.resize(num_darts);
  for (int d = 0; d < num_darts; ++d) {
    const auto [u, v] = pg.darts_[d];
    pg.twin_[d] = pg.dart_id(v, u);
    const auto& rot = pg.rotations_[v];
    auto pos = std::find(rot.begin(), rot.end(), u) - rot.begin();
    auto succ = (pos + 1) % static_cast<long>(rot.size());
    pg.next_[d] = pg.offset_[v] + static_cast<int>(succ);
  }

  pg.face_of_.assign(num_darts, -1);
  for (int start = 0; start < num_darts; ++start) {
    if (pg.face_of_[start] >= 0) continue;
    Face face;
    const int id = static_cast<int>(pg.faces_.size());
    int d = start;
    do {
      pg.face_of_[d] = id;
      face.walk.push_back(d);
      face.vertices.push_back(pg.darts_[d].tail);
      face.edge_set.push_back(pg.edge_of_[d]);
      d = pg.next_[d];
    } while (d != start);
    std::sort(face.edge_set.begin(), face.edge_set.end());
    face.edge_set.erase(std::unique(face.edge_set.begin(), face.edge_set.end()),
                        face.edge_set.end());
    pg.faces_.push_back(std::move(face));
  }
  if (num_darts == 0) pg.faces_.push_back(Face{});  // lone vertex: one empty face

  const int euler = n - pg.size() + pg.num_faces();
  if (euler != 2) {
    throw Error(ErrorKind::NonPlanarEmbedding,
                "rotation system is not planar: n - m + f = " + std::to_string(euler));
  }
  return pg;
}

int PlaneGraph::dart_id(Vertex u, Vertex v) const {
  const auto& rot = rotations_[u];
  auto it = std::find(rot.begin(), rot.end(), v);
  if (it == rot.end()) {
    throw Error(ErrorKind::InvalidGraph,
                "no dart " + std::to_string(u) + "->" + std::to_string(v));
  }
  return offset_[u] + static_cast<int>(it - rot.begin());
}

std::array<int, 2> PlaneGraph::faces_of_edge(int edge_id) const {
  const Edge& e = graph_.edge(edge_id);
  return {face_of_[dart_id(e.u, e.v)], face_of_[dart_id(e.v, e.u)]};
}

PlaneGraph build_plane_graph(int n, std::vector<std::vector<Vertex>> rotations) {
  return PlaneGraph::build(n, std::move(rotations));
}

std::span<const Face> faces(const PlaneGraph& pg) { return pg.faces(); }

// ---------------------------------------------------------------------------
// Native format

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

struct Line {
  int number;
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.push_back({number, line});
    pos = end + 1;
  }
  return out;
}

std::vector<long> parse_ints(const Line& line, std::string_view s) {
  std::vector<long> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i >= s.size()) break;
    long value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
    if (ec != std::errc{} || (ptr != s.data() + s.size() && *ptr != ' ' && *ptr != '\t')) {
      throw ParseError(line.number, "expected integer in '" + std::string(line.text) + "'");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - s.data());
  }
  return out;
}

bool is_header(const Line& line) { return line.text.rfind("planegraph", 0) == 0; }

PlaneGraph parse_document(std::span<const Line> lines) {
  if (lines.empty()) throw ParseError(0, "empty input");
  if (lines[0].text != "planegraph 1") {
    throw ParseError(lines[0].number, "expected header 'planegraph 1'");
  }
  if (lines.size() < 2) throw ParseError(lines[0].number, "missing '<n> <m>' line");
  auto counts = parse_ints(lines[1], lines[1].text);
  if (counts.size() != 2 || counts[0] < 1 || counts[1] < 0) {
    throw ParseError(lines[1].number, "expected '<n> <m>' with n >= 1");
  }
  const int n = static_cast<int>(counts[0]);
  const long m = counts[1];
  if (static_cast<long>(lines.size()) - 2 != n) {
    throw ParseError(lines.back().number, "expected " + std::to_string(n) +
                                              " vertex lines, found " +
                                              std::to_string(lines.size() - 2));
  }
  std::vector<std::vector<Vertex>> rotations(n);
  std::vector<char> seen(n, 0);
  long degree_sum = 0;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const Line& line = lines[i];
    auto colon = line.text.find(':');
    if (colon == std::string_view::npos) throw ParseError(line.number, "expected '<v>: ...'");
    auto head = parse_ints(line, trim(line.text.substr(0, colon)));
    if (head.size() != 1 || head[0] < 0 || head[0] >= n) {
      throw ParseError(line.number, "bad vertex id");
    }
    const int v = static_cast<int>(head[0]);
    if (seen[v]) throw ParseError(line.number, "vertex " + std::to_string(v) + " listed twice");
    seen[v] = 1;
    for (long w : parse_ints(line, line.text.substr(colon + 1))) {
      if (w < 0 || w >= n) throw ParseError(line.number, "neighbour out of range");
      rotations[v].push_back(static_cast<Vertex>(w));
    }
    degree_sum += static_cast<long>(rotations[v].size());
  }
  if (degree_sum != 2 * m) {
    throw ParseError(lines[1].number, "edge count " + std::to_string(m) +
                                          " does not match rotations (" +
                                          std::to_string(degree_sum) + " dart entries)");
  }
  return PlaneGraph::build(n, std::move(rotations));
}

}  // namespace

std::vector<PlaneGraph> parse_native_all(std::string_view text) {
  auto lines = content_lines(text);
  std::vector<PlaneGraph> out;
  std::size_t begin = 0;
  while (begin < lines.size()) {
    if (!is_header(lines[begin])) {
      throw ParseError(lines[begin].number, "expected header 'planegraph 1'");
    }
    std::size_t end = begin + 1;
    while (end < lines.size() && !is_header(lines[end])) ++end;
    out.push_back(parse_document(std::span(lines).subspan(begin, end - begin)));
    begin = end;
  }
  return out;
}

PlaneGraph parse_native(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(0, "empty input");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (is_header(lines[i])) throw ParseError(lines[i].number, "more than one graph in input");
  }
  return parse_document(lines);
}

std::string to_native(const PlaneGraph& pg, std::string_view comment) {
  std::ostringstream out;
  out << "planegraph 1\n";
  if (!comment.empty()) {
    std::istringstream in{std::string(comment)};
    for (std::string line; std::getline(in, line);) out << "# " << line << '\n';
  }
  out << pg.order() << ' ' << pg.size() << '\n';
  for (Vertex v = 0; v < pg.order(); ++v) {
    out << v << ':';
    for (Vertex w : pg.rotation(v)) out << ' ' << w;
    out << '\n';
  }
  return out.str();
}

PlaneGraph read_native_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_native(buf.str());
}

void write_native_file(const std::string& path, const PlaneGraph& pg) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Parse, "cannot write " + path);
  out << to_native(pg);
}

// ---------------------------------------------------------------------------
// DOT

std::string export_dot(const PlaneGraph& pg) {
  std::ostringstream out;
  out << "graph planegraph {\n";
  out << "  // n=" << pg.order() << " m=" << pg.size() << " f=" << pg.num_faces()
      << "; rotation lists neighbours counterclockwise\n";
  for (Vertex v = 0; v < pg.order(); ++v) {
    out << "  " << v << " [rotation=\"";
    for (std::size_t i = 0; i < pg.rotation(v).size(); ++i) {
      if (i) out << ' ';
      out << pg.rotation(v)[i];
    }
    out << "\"];\n";
  }
  for (const Edge& e : pg.graph().edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

PlaneGraph parse_dot(std::string_view text) {
  std::vector<std::pair<int, std::vector<Vertex>>> nodes;
  std::vector<Edge> edges;
  int number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (auto c = line.find("//"); c != std::string_view::npos) line = trim(line.substr(0, c));
    if (line.empty() || line.rfind("graph", 0) == 0 || line == "}") continue;
    Line ln{number, line};
    if (auto arrow = line.find("--"); arrow != std::string_view::npos) {
      auto semi = line.find(';');
      auto a = parse_ints(ln, trim(line.substr(0, arrow)));
      auto b = parse_ints(ln, trim(line.substr(arrow + 2, semi - arrow - 2)));
      if (a.size() != 1 || b.size() != 1) throw ParseError(number, "bad edge statement");
      edges.emplace_back(static_cast<Vertex>(a[0]), static_cast<Vertex>(b[0]));
      continue;
    }
    auto open = line.find("[rotation=\"");
    auto close = line.find("\"]");
    if (open == std::string_view::npos || close == std::string_view::npos) {
      throw ParseError(number, "unrecognised statement");
    }
    auto id = parse_ints(ln, trim(line.substr(0, open)));
    if (id.size() != 1) throw ParseError(number, "bad node id");
    auto rot = parse_ints(ln, line.substr(open + 11, close - open - 11));
    nodes.emplace_back(static_cast<int>(id[0]), std::vector<Vertex>(rot.begin(), rot.end()));
  }
  const int n = static_cast<int>(nodes.size());
  std::vector<std::vector<Vertex>> rotations(n);
  for (auto& [v, rot] : nodes) {
    if (v < 0 || v >= n) throw ParseError(0, "node ids must be 0..n-1");
    rotations[v] = std::move(rot);
  }
  PlaneGraph pg = PlaneGraph::build(n, std::move(rotations));
  std::sort(edges.begin(), edges.end());
  if (!std::equal(edges.begin(), edges.end(), pg.graph().edges().begin(),
                  pg.graph().edges().end())) {
    throw ParseError(0, "edge statements disagree with node rotations");
  }
  return pg;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<Vertex>> rotation_from_drawing(std::span<const Point2> points,
                                                       std::span<const Edge> edges) {
  const int n = static_cast<int>(points.size());
  std::vector<std::vector<Vertex>> rot(n);
  for (const Edge& e : edges) {
    rot[e.u].push_back(e.v);
    rot[e.v].push_back(e.u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto angle = [&](Vertex w) {
      return std::atan2(points[w].y - points[v].y, points[w].x - points[v].x);
    };
    std::sort(rot[v].begin(), rot[v].end(),
              [&](Vertex a, Vertex b) { return angle(a) < angle(b); });
  }
  return rot;
}

PlaneGraph plane_graph_from_drawing(std::span<const Point2> points,
                                    std::span<const Edge> edges) {
  return PlaneGraph::build(static_cast<int>(points.size()), rotation_from_drawing(points, edges));
}

}  // namespace triblock
