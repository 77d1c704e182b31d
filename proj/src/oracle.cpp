#include "triblock/oracle.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <future>
#include <map>
#include <set>
#include <thread>

#include "triblock/error.hpp"

namespace triblock {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(const Graph& g) {
  BoostGraph bg(g.order());
  int id = 0;
  for (const Edge& e : g.edges()) {
    auto [d, ok] = boost::add_edge(e.u, e.v, bg);
    boost::put(boost::edge_index, bg, d, id++);
  }
  return bg;
}

bool euler_rejects(const Graph& g) { return g.order() >= 3 && g.size() > 3 * g.order() - 6; }

}  // namespace

bool is_planar(const Graph& g) {
  if (euler_rejects(g)) return false;
  BoostGraph bg = to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

PlaneGraph planar_embedding(const Graph& g) {
  if (!g.is_connected()) throw Error(ErrorKind::Disconnected, "graph is disconnected");
  if (euler_rejects(g)) throw Error(ErrorKind::NonPlanarEmbedding, "graph is not planar");
  BoostGraph bg = to_boost(g);
  std::vector<std::vector<BoostEdge>> storage(g.order());
  auto embedding = boost::make_iterator_property_map(
      storage.begin(), boost::get(boost::vertex_index, bg));
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                           boost::boyer_myrvold_params::embedding = embedding)) {
    throw Error(ErrorKind::NonPlanarEmbedding, "graph is not planar");
  }
  std::vector<std::vector<Vertex>> rot(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    for (const BoostEdge& e : storage[v]) {
      const auto s = static_cast<Vertex>(boost::source(e, bg));
      const auto t = static_cast<Vertex>(boost::target(e, bg));
      rot[v].push_back(s == v ? t : s);
    }
  }
  return PlaneGraph::build(g.order(), std::move(rot));
}

namespace {

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalForm run() {
    std::vector<int> colour(n_, 0);
    refine(colour);
    search(colour);
    return best_;
  }

 private:
  /// Colour refinement with canonical renumbering: new colours are ranks of
  /// (old colour, sorted neighbour colours).
  void refine(std::vector<int>& colour) const {
    int classes = count_classes(colour);
    while (true) {
      std::vector<std::pair<int, std::vector<int>>> sig(n_);
      for (Vertex v = 0; v < n_; ++v) {
        sig[v].first = colour[v];
        for (Vertex w : g_.neighbors(v)) sig[v].second.push_back(colour[w]);
        std::sort(sig[v].second.begin(), sig[v].second.end());
      }
      auto sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (Vertex v = 0; v < n_; ++v) {
        colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
                                     sorted.begin());
      }
      const int now = static_cast<int>(sorted.size());
      if (now == classes) return;
      classes = now;
    }
  }

  static int count_classes(const std::vector<int>& colour) {
    std::set<int> s(colour.begin(), colour.end());
    return static_cast<int>(s.size());
  }

  bool twins(Vertex a, Vertex b) const {
    for (Vertex w = 0; w < n_; ++w) {
      if (w == a || w == b) continue;
      if (g_.has_edge(a, w) != g_.has_edge(b, w)) return false;
    }
    return true;
  }

  void search(const std::vector<int>& colour) {
    std::vector<int> size(n_, 0);
    for (int c : colour) ++size[c];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      consider_leaf(colour);
      return;
    }
    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n_; ++v) {
      if (colour[v] != target) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(u, v); })) continue;
      tried.push_back(v);
      std::vector<int> next(n_);
      for (Vertex w = 0; w < n_; ++w) next[w] = 2 * colour[w] + (w == v ? 0 : 1);
      refine(next);
      search(next);
    }
  }

  void consider_leaf(const std::vector<int>& perm) {
    const int bits = n_ * (n_ - 1) / 2;
    CanonicalKey key((bits + 63) / 64, 0);
    std::vector<Vertex> inv(n_);
    for (Vertex v = 0; v < n_; ++v) inv[perm[v]] = v;
    int bit = 0;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j, ++bit) {
        if (g_.has_edge(inv[i], inv[j])) key[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
      }
    }
    if (best_.perm.empty() || key > best_.key) {
      best_.key = std::move(key);
      best_.perm = perm;
    }
  }

  const Graph& g_;
  int n_;
  CanonicalForm best_;
};

using Level = std::set<CanonicalKey>;

Graph graph_from_key(int n, const CanonicalKey& key) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if (key[bit / 64] >> (63 - bit % 64) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(n, std::move(edges));
}

struct Expansion {
  Level children;
  long explored = 0;
};

Expansion expand(int n, const PatternSet& patterns, std::vector<const CanonicalKey*> parents) {
  Expansion out;
  std::set<CanonicalKey> rejected;
  for (const CanonicalKey* key : parents) {
    const Graph g = graph_from_key(n, *key);
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (g.has_edge(a, b)) continue;
        ++out.explored;
        Graph child = g.with_edge(a, b);
        if (euler_rejects(child)) continue;
        bool contains = false;
        for (const Graph& member : patterns.members) {
          if (contains_subgraph_through(child, member, Edge(a, b))) {
            contains = true;
            break;
          }
        }
        if (contains) continue;
        CanonicalKey ck = Canonizer(child).run().key;
        if (out.children.count(ck) || rejected.count(ck)) continue;
        if (is_planar(child)) {
          out.children.insert(std::move(ck));
        } else {
          rejected.insert(std::move(ck));
        }
      }
    }
  }
  return out;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return Canonizer(g).run(); }

Graph canonical_graph(const Graph& g) {
  return graph_from_key(g.order(), canonical_form(g).key);
}

OracleResult max_edges(int n, const PatternSet& patterns, const OracleOptions& options) {
  if (n < 1) throw Error(ErrorKind::ParameterOutOfRange, "n must be >= 1");
  if (n > options.cap && !options.force) {
    throw Error(ErrorKind::CapExceeded,
                "n = " + std::to_string(n) + " exceeds cap " + std::to_string(options.cap));
  }
  const auto start = std::chrono::steady_clock::now();
  OracleResult result;
  result.n = n;
  result.pattern = patterns.name;

  Level level{canonical_form(Graph(n, {})).key};
  int edges = 0;
  const int jobs = std::max(1, options.jobs);
  while (true) {
    std::vector<const CanonicalKey*> parents;
    for (const auto& key : level) parents.push_back(&key);
    std::vector<std::future<Expansion>> futures;
    const std::size_t chunk = (parents.size() + jobs - 1) / jobs;
    for (std::size_t lo = 0; lo < parents.size(); lo += chunk) {
      std::vector<const CanonicalKey*> part(parents.begin() + lo,
                                            parents.begin() + std::min(parents.size(), lo + chunk));
      futures.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, expand,
                                   n, std::cref(patterns), std::move(part)));
    }
    Level next;
    for (auto& f : futures) {
      Expansion e = f.get();
      result.explored += e.explored;
      next.merge(e.children);
    }
    if (next.empty()) break;
    level = std::move(next);
    ++edges;
  }

  result.max_edges = edges;
  result.witness_classes = static_cast<long>(level.size());
  for (const auto& key : level) {
    if (static_cast<int>(result.witnesses.size()) >= options.witness_cap) break;
    result.witnesses.push_back(graph_from_key(n, key));
  }
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

OracleResult max_edges(int n, const Graph& pattern, const OracleOptions& options) {
  return max_edges(n, PatternSet{"custom", {pattern}}, options);
}

}  // namespace triblock
