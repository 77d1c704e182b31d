#include "triblock/patterns.hpp"

#include <algorithm>
#include <charconv>

#include "triblock/error.hpp"

namespace triblock {

std::string ThetaPattern::name() const {
  if (k == 6 && chord_distance == 3) return "theta6-1";
  if (k == 6 && chord_distance == 2) return "theta6-2";
  return "theta:" + std::to_string(k) + ":" + std::to_string(chord_distance);
}

ThetaPattern theta_pattern(int k, int d) {
  if (k < 4) throw Error(ErrorKind::ParameterOutOfRange, "theta pattern needs k >= 4");
  if (d < 2 || d > k / 2) {
    throw Error(ErrorKind::ParameterOutOfRange,
                "chord distance must lie in [2, " + std::to_string(k / 2) + "]");
  }
  std::vector<Edge> es;
  for (int i = 0; i < k; ++i) es.emplace_back(i, (i + 1) % k);
  es.emplace_back(0, d);
  return ThetaPattern{k, d, Graph(k, std::move(es))};
}

std::vector<ThetaPattern> theta_family(int k) {
  if (k < 4) throw Error(ErrorKind::ParameterOutOfRange, "theta family needs k >= 4");
  std::vector<ThetaPattern> out;
  for (int d = 2; d <= k / 2; ++d) out.push_back(theta_pattern(k, d));
  return out;
}

namespace {

/// Backtracking matcher. Pattern vertices are placed in an order where each
/// vertex (after the first of its component) has an already placed
/// neighbour, so candidates come from that neighbour's host adjacency.
class Matcher {
 public:
  Matcher(const Graph& host, const Graph& pattern) : host_(host), pattern_(pattern) {
    const int k = pattern.order();
    std::vector<char> placed(k, 0);
    anchor_.assign(k, -1);
    for (int step = 0; step < k; ++step) {
      // Prefer the unplaced vertex with most placed neighbours, then degree.
      int best = -1;
      int best_links = -1;
      for (Vertex p = 0; p < k; ++p) {
        if (placed[p]) continue;
        int links = 0;
        for (Vertex q : pattern.neighbors(p)) links += placed[q];
        if (best < 0 || links > best_links ||
            (links == best_links && pattern.degree(p) > pattern.degree(best))) {
          best = p;
          best_links = links;
        }
      }
      for (Vertex q : pattern.neighbors(best)) {
        if (placed[q]) {
          anchor_[best] = q;
          break;
        }
      }
      placed[best] = 1;
      order_.push_back(best);
    }
    map_.assign(k, -1);
    used_.assign(host.order(), 0);
  }

  /// Optionally pin the first two pattern vertices of `order` beforehand.
  bool pin(Vertex p, Vertex h) {
    if (used_[h] || host_.degree(h) < pattern_.degree(p)) return false;
    map_[p] = h;
    used_[h] = 1;
    return true;
  }

  void unpin(Vertex p) {
    used_[map_[p]] = 0;
    map_[p] = -1;
  }

  bool search(std::size_t depth = 0) {
    if (depth == order_.size()) return true;
    const Vertex p = order_[depth];
    if (map_[p] >= 0) return consistent(p, map_[p]) && search(depth + 1);
    auto try_host = [&](Vertex h) {
      if (used_[h] || host_.degree(h) < pattern_.degree(p) || !consistent(p, h)) return false;
      map_[p] = h;
      used_[h] = 1;
      if (search(depth + 1)) return true;
      used_[h] = 0;
      map_[p] = -1;
      return false;
    };
    if (anchor_[p] >= 0 && map_[anchor_[p]] >= 0) {
      for (Vertex h : host_.neighbors(map_[anchor_[p]])) {
        if (try_host(h)) return true;
      }
    } else {
      for (Vertex h = 0; h < host_.order(); ++h) {
        if (try_host(h)) return true;
      }
    }
    return false;
  }

  EmbeddingWitness witness() const { return {map_}; }

 private:
  bool consistent(Vertex p, Vertex h) const {
    for (Vertex q : pattern_.neighbors(p)) {
      if (map_[q] >= 0 && !host_.has_edge(h, map_[q])) return false;
    }
    return true;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::vector<Vertex> order_;
  std::vector<Vertex> anchor_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
};

bool fits(const Graph& host, const Graph& pattern) {
  return pattern.order() <= host.order() && pattern.size() <= host.size();
}

}  // namespace

std::optional<EmbeddingWitness> contains_subgraph(const Graph& host, const Graph& pattern) {
  if (!fits(host, pattern)) return std::nullopt;
  Matcher m(host, pattern);
  if (m.search()) return m.witness();
  return std::nullopt;
}

std::optional<EmbeddingWitness> contains_subgraph_through(const Graph& host,
                                                          const Graph& pattern, Edge anchor) {
  if (!fits(host, pattern) || !host.has_edge(anchor.u, anchor.v)) return std::nullopt;
  for (const Edge& pe : pattern.edges()) {
    for (int flip = 0; flip < 2; ++flip) {
      Matcher m(host, pattern);
      const Vertex a = flip ? pe.v : pe.u;
      const Vertex b = flip ? pe.u : pe.v;
      if (!m.pin(a, anchor.u)) continue;
      if (!m.pin(b, anchor.v)) continue;
      if (m.search()) return m.witness();
    }
  }
  return std::nullopt;
}

bool is_free(const Graph& host, const Graph& pattern) {
  return !contains_subgraph(host, pattern).has_value();
}

bool verify_witness(const Graph& host, const Graph& pattern, const EmbeddingWitness& witness) {
  if (static_cast<int>(witness.mapping.size()) != pattern.order()) return false;
  std::vector<char> used(host.order(), 0);
  for (Vertex h : witness.mapping) {
    if (h < 0 || h >= host.order() || used[h]) return false;
    used[h] = 1;
  }
  for (const Edge& e : pattern.edges()) {
    if (!host.has_edge(witness.mapping[e.u], witness.mapping[e.v])) return false;
  }
  return true;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> da, db;
  for (Vertex v = 0; v < a.order(); ++v) da.push_back(a.degree(v));
  for (Vertex v = 0; v < b.order(); ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  // Same order and size: an edge-preserving injection is a bijection on edges.
  return contains_subgraph(a, b).has_value();
}

namespace {

int parse_int(std::string_view s, std::string_view full) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::InvalidName, "bad pattern name '" + std::string(full) + "'");
  }
  return value;
}

}  // namespace

PatternSet parse_pattern(std::string_view name) {
  if (name == "theta6-1") return {"theta6-1", {theta_pattern(6, 3).graph}};
  if (name == "theta6-2") return {"theta6-2", {theta_pattern(6, 2).graph}};
  if (name.rfind("theta-family:", 0) == 0) {
    const int k = parse_int(name.substr(13), name);
    PatternSet set{std::string(name), {}};
    for (auto& t : theta_family(k)) set.members.push_back(t.graph);
    return set;
  }
  if (name.rfind("theta:", 0) == 0) {
    auto rest = name.substr(6);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorKind::InvalidName, "expected theta:<k>:<d>, got '" + std::string(name) + "'");
    }
    auto t = theta_pattern(parse_int(rest.substr(0, colon), name),
                           parse_int(rest.substr(colon + 1), name));
    return {std::string(name), {t.graph}};
  }
  throw Error(ErrorKind::InvalidName, "unknown pattern '" + std::string(name) + "'");
}

std::optional<PatternMatch> find_pattern(const Graph& host, const PatternSet& patterns) {
  for (std::size_t i = 0; i < patterns.members.size(); ++i) {
    if (auto w = contains_subgraph(host, patterns.members[i])) {
      return PatternMatch{static_cast<int>(i), std::move(*w)};
    }
  }
  return std::nullopt;
}

bool is_free(const Graph& host, const PatternSet& patterns) {
  return !find_pattern(host, patterns).has_value();
}

}  // namespace triblock
