#include "explab/stallings.hpp"

#include <algorithm>
#include <deque>

#include "explab/errors.hpp"

namespace explab {

namespace {

struct Edge {
  int from;
  int to;
  Letter label;
  ReducedWord deco;
  bool alive = true;
};

// One orientation of an edge as seen from a vertex.
struct HalfEdge {
  int edge;
  int code;  // label read when leaving the vertex
  int target;
  ReducedWord deco;
};

class Folder {
 public:
  explicit Folder(int rank) : rank_(rank) { add_vertex(); }

  int add_vertex() {
    incident_.emplace_back();
    alive_.push_back(true);
    return static_cast<int>(incident_.size()) - 1;
  }

  void add_edge(int from, int to, Letter label, ReducedWord deco) {
    const int id = static_cast<int>(edges_.size());
    edges_.push_back({from, to, label, std::move(deco)});
    incident_[from].push_back(id);
    if (to != from) incident_[to].push_back(id);
  }

  void fold() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int u = 0; u < static_cast<int>(incident_.size()); ++u) {
        if (alive_[u] && fold_at(u)) {
          changed = true;
          break;
        }
      }
    }
  }

  bool free() const { return free_; }

  std::vector<HalfEdge> half_edges(int u) const {
    std::vector<HalfEdge> out;
    for (int id : incident_[u]) {
      const Edge& e = edges_[id];
      if (!e.alive) continue;
      if (e.from == u) out.push_back({id, e.label.code(), e.to, e.deco});
      if (e.to == u) out.push_back({id, e.label.inverse().code(), e.from, invert(e.deco)});
    }
    return out;
  }

  std::size_t vertex_slots() const { return incident_.size(); }

 private:
  bool fold_at(int u) {
    auto halves = half_edges(u);
    for (std::size_t i = 0; i < halves.size(); ++i) {
      for (std::size_t j = i + 1; j < halves.size(); ++j) {
        if (halves[i].code == halves[j].code) {
          identify(halves[i], halves[j]);
          return true;
        }
      }
    }
    return false;
  }

  void kill(int id) {
    edges_[id].alive = false;
    for (int v : {edges_[id].from, edges_[id].to}) {
      auto& inc = incident_[v];
      inc.erase(std::remove(inc.begin(), inc.end(), id), inc.end());
    }
  }

  void identify(HalfEdge keep, HalfEdge drop) {
    if (keep.target == drop.target) {
      if (keep.deco != drop.deco) free_ = false;
      kill(drop.edge);
      return;
    }
    if (drop.target == 0) std::swap(keep, drop);  // never move the base state
    const int v1 = keep.target;
    const int v2 = drop.target;
    // Gauge shift at v2 so the dropped edge coincides with the kept one.
    const ReducedWord sigma = concat(invert(keep.deco), drop.deco);
    const ReducedWord sigma_inv = invert(sigma);
    kill(drop.edge);
    for (int id : std::vector<int>(incident_[v2])) {
      Edge& e = edges_[id];
      if (e.from == v2) {
        e.from = v1;
        e.deco = concat(sigma, e.deco);
      }
      if (e.to == v2) {
        e.to = v1;
        e.deco = concat(e.deco, sigma_inv);
      }
      auto& inc = incident_[v1];
      if (std::find(inc.begin(), inc.end(), id) == inc.end()) inc.push_back(id);
    }
    incident_[v2].clear();
    alive_[v2] = false;
  }

  int rank_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
  std::vector<bool> alive_;
  bool free_ = true;
};

}  // namespace

SubgroupGraph SubgroupGraph::build(int rank, const std::vector<ReducedWord>& generators) {
  if (generators.empty()) throw InvalidArgument("stallings_build: generator list is empty");
  if (rank < 1 || rank > kMaxRank) throw InvalidArgument("stallings_build: rank out of range");
  Folder folder(rank);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const ReducedWord& w = generators[i];
    if (w.min_rank() > rank) throw InvalidArgument("stallings_build: generator outside F_rank");
    if (w.empty()) continue;
    int prev = 0;
    for (std::size_t j = 0; j < w.length(); ++j) {
      const int next = (j + 1 == w.length()) ? 0 : folder.add_vertex();
      ReducedWord deco = j == 0 ? ReducedWord::generator(static_cast<int>(i)) : ReducedWord{};
      folder.add_edge(prev, next, w[j], std::move(deco));
      prev = next;
    }
  }
  folder.fold();

  SubgroupGraph g;
  g.rank_ = rank;
  g.generators_ = generators;
  g.generators_free_ = folder.free();

  // Renumber reachable states in BFS order from the base, letters in code order.
  std::vector<int> index(folder.vertex_slots(), kNone);
  std::vector<int> order{0};
  index[0] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    auto halves = folder.half_edges(order[head]);
    std::sort(halves.begin(), halves.end(), [](const HalfEdge& a, const HalfEdge& b) { return a.code < b.code; });
    for (const auto& h : halves) {
      if (index[h.target] == kNone) {
        index[h.target] = static_cast<int>(order.size());
        order.push_back(h.target);
      }
    }
  }
  const auto n = order.size();
  g.target_.assign(n, std::vector<int>(static_cast<std::size_t>(2 * rank), kNone));
  g.deco_.assign(n, std::vector<ReducedWord>(static_cast<std::size_t>(2 * rank)));
  for (std::size_t s = 0; s < n; ++s) {
    for (const auto& h : folder.half_edges(order[s])) {
      g.target_[s][h.code] = index[h.target];
      g.deco_[s][h.code] = h.deco;
    }
  }

  g.dist_.assign(n, kNone);
  g.dist_[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int s = queue.front();
    queue.pop_front();
    for (int t : g.target_[s]) {
      if (t != kNone && g.dist_[t] == kNone) {
        g.dist_[t] = g.dist_[s] + 1;
        queue.push_back(t);
      }
    }
  }
  return g;
}

std::size_t SubgroupGraph::edge_count() const {
  std::size_t half = 0;
  for (const auto& row : target_) {
    half += static_cast<std::size_t>(std::count_if(row.begin(), row.end(), [](int t) { return t != kNone; }));
  }
  return half / 2;
}

int SubgroupGraph::subgroup_rank() const {
  return static_cast<int>(edge_count()) - static_cast<int>(state_count()) + 1;
}

bool SubgroupGraph::member(std::span<const Letter> word) const {
  int s = 0;
  for (Letter x : word) {
    if (x.generator() >= rank_) return false;
    s = target_[s][x.code()];
    if (s == kNone) return false;
  }
  return s == 0;
}

std::optional<ReducedWord> SubgroupGraph::rewrite(const ReducedWord& w) const {
  if (!generators_free_) throw NotFree("subgroup generators satisfy a relation; rewriting is not unique");
  int s = 0;
  ReducedWord out;
  for (Letter x : w.letters()) {
    if (x.generator() >= rank_) return std::nullopt;
    const int t = target_[s][x.code()];
    if (t == kNone) return std::nullopt;
    out = concat(out, deco_[s][x.code()]);
    s = t;
  }
  if (s != 0) return std::nullopt;
  return out;
}

ReducedWord SubgroupGraph::coset_canonical_rep(const ReducedWord& g) const {
  // x lies in gH iff x labels a path from the Schreier-graph state of g^-1
  // back to the base. Off the core that path is forced (it retraces the
  // unread suffix); inside the core take the shortlex-least shortest path.
  const ReducedWord g_inv = invert(g);
  int s = 0;
  std::size_t read = 0;
  for (; read < g_inv.length(); ++read) {
    const Letter x = g_inv[read];
    const int t = x.generator() < rank_ ? target_[s][x.code()] : kNone;
    if (t == kNone) break;
    s = t;
  }
  std::vector<Letter> path;
  for (std::size_t i = g_inv.length(); i > read; --i) path.push_back(g_inv[i - 1].inverse());
  while (s != 0) {
    for (int code = 0; code < 2 * rank_; ++code) {
      const int t = target_[s][code];
      if (t != kNone && dist_[t] == dist_[s] - 1) {
        path.push_back(Letter::from_code(code));
        s = t;
        break;
      }
    }
  }
  return ReducedWord(path);
}

std::vector<MalnormalWitness> malnormal_violations(const SubgroupGraph& graph, int bound) {
  if (bound < 1) throw InvalidArgument("malnormal_violations: bound must be >= 1");
  const auto words = enumerate_words(graph.rank(), bound);
  std::vector<const ReducedWord*> members;
  for (const auto& w : words) {
    if (!w.empty() && graph.member(w)) members.push_back(&w);
  }
  std::vector<MalnormalWitness> out;
  for (const auto& g : words) {
    if (graph.member(g)) continue;
    const ReducedWord g_inv = invert(g);
    for (const ReducedWord* h : members) {
      if (graph.member(concat(concat(g, *h), g_inv))) out.push_back({g, *h});
    }
  }
  return out;
}

}  // namespace explab
