#include "cluster/explorer.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_map>

#include "cluster/error.hpp"
#include "cluster/io.hpp"
#include "cluster/parallel.hpp"

namespace cluster {

std::string variable_key(const IntVec& g, const MultiPoly& f) {
  std::string s = "g=(";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(g[i]);
  }
  return s + ");F=" + f.to_string();
}

std::string variable_key(const ExchangeMatrix& b0, const VariableRef& ref) {
  if (ref.index >= b0.size()) throw InvalidArgument("variable index out of range");
  const PatternState s = evolve(b0, ref.word);
  return variable_key(s.g.column(ref.index), s.fpolys[ref.index]);
}

std::optional<std::size_t> ExchangeGraph::find_variable(const std::string& key) const {
  auto it = variable_index.find(key);
  if (it == variable_index.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ExchangeGraph::find_variable(const VariableRef& ref) const {
  return find_variable(variable_key(initial, ref));
}

namespace {

std::string seed_key(const std::vector<std::string>& keys, const IntMat& b) {
  const std::size_t n = keys.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return keys[x] < keys[y]; });
  std::string s;
  for (std::size_t i : order) s += keys[i] + "|";
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) s += std::to_string(b(order[r], order[c])) + (c + 1 < n ? " " : ";");
  return s;
}

// Everything a child seed needs, computed independently of the shared graph.
struct Expansion {
  std::optional<PatternState> state;
  std::string new_var_key;
  std::string key;
};

class Builder {
 public:
  Builder(const ExchangeMatrix& b0, const ExploreOptions& opts) : opts_(opts), n_(b0.size()) {
    graph_.initial = b0;
    EvolveOptions eo;
    eo.max_terms = opts.max_terms;
    PatternState s = initial_state(b0, eo);
    std::vector<std::string> keys;
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < n_; ++i) {
      keys.push_back(variable_key(s.g.column(i), s.fpolys[i]));
      vars.push_back(intern(keys.back(), s, i));
    }
    add_seed(std::move(s), vars, seed_key(keys, b0.matrix()));
  }

  ExchangeGraph run() {
    std::vector<std::size_t> frontier{0};
    bool truncated = false;
    while (!frontier.empty()) {
      const std::size_t tasks = frontier.size() * n_;
      std::vector<Expansion> out(tasks);
      auto expand = [&](std::size_t t) {
        const std::size_t u = frontier[t / n_], k = t % n_;
        Expansion& e = out[t];
        e.state = step(*states_.at(u), k, opts_.max_terms);
        const PatternState& st = *e.state;
        std::vector<std::string> keys;
        for (std::size_t i = 0; i < n_; ++i) {
          if (i == k)
            keys.push_back(variable_key(st.g.column(k), st.fpolys[k]));
          else
            keys.push_back(graph_.variables[graph_.seeds[u].vars[i]].key);
        }
        e.new_var_key = keys[k];
        e.key = seed_key(keys, st.b.matrix());
      };
      if (opts_.parallel)
        parallel_for(tasks, expand);
      else
        serial_for(tasks, expand);

      std::vector<std::size_t> next;
      for (std::size_t t = 0; t < tasks; ++t) {
        const std::size_t u = frontier[t / n_], k = t % n_;
        Expansion& e = out[t];
        auto it = seed_index_.find(e.key);
        std::size_t v;
        if (it != seed_index_.end()) {
          v = it->second;
        } else if (graph_.seeds.size() >= opts_.max_seeds || e.state->word.size() > opts_.max_depth) {
          truncated = true;
          continue;
        } else {
          std::vector<std::size_t> vars = graph_.seeds[u].vars;
          vars[k] = intern(e.new_var_key, *e.state, k);
          v = add_seed(std::move(*e.state), vars, e.key);
          next.push_back(v);
        }
        graph_.seeds[u].neighbors[k] = v;
        if (edge_set_.insert({std::min(u, v), std::max(u, v)}).second) graph_.edges.push_back({u, v, k});
      }
      for (std::size_t u : frontier) states_.erase(u);
      frontier = std::move(next);
    }
    graph_.complete = !truncated;
    return std::move(graph_);
  }

 private:
  std::size_t intern(const std::string& key, const PatternState& s, std::size_t col) {
    auto [it, inserted] = graph_.variable_index.try_emplace(key, graph_.variables.size());
    if (inserted)
      graph_.variables.push_back({key, s.g.column(col), s.d.column(col), s.fpolys[col], {s.word, col}});
    return it->second;
  }

  std::size_t add_seed(PatternState s, const std::vector<std::size_t>& vars, const std::string& key) {
    const std::size_t id = graph_.seeds.size();
    graph_.seeds.push_back({vars, s.b, s.word, key, s.c, s.g, s.d, s.f,
                            std::vector<std::size_t>(n_, ExchangeGraph::npos)});
    seed_index_.emplace(key, id);
    states_.emplace(id, std::make_unique<PatternState>(std::move(s)));
    return id;
  }

  ExploreOptions opts_;
  std::size_t n_;
  ExchangeGraph graph_{ExchangeMatrix(IntMat{{0}}), {}, {}, {}, false, {}};
  std::unordered_map<std::string, std::size_t> seed_index_;
  std::unordered_map<std::size_t, std::unique_ptr<PatternState>> states_;
  std::set<std::pair<std::size_t, std::size_t>> edge_set_;
};

}  // namespace

ExchangeGraph explore(const ExchangeMatrix& b0, const ExploreOptions& opts) {
  if (opts.max_seeds < 1 || opts.max_depth < 1) throw InvalidArgument("exploration bounds must be at least 1");
  return Builder(b0, opts).run();
}

ClusterComplex cluster_complex(const ExchangeGraph& g) {
  if (!g.complete) throw RequiresComplete("cluster complex needs a complete exchange graph");
  ClusterComplex c;
  for (const auto& v : g.variables) c.vertices.push_back(v.key);
  for (const auto& s : g.seeds) {
    auto f = s.vars;
    std::sort(f.begin(), f.end());
    c.facets.push_back(std::move(f));
  }
  return c;
}

std::optional<std::vector<std::size_t>> find_common_cluster(const ExchangeGraph& g, std::size_t a, std::size_t b) {
  if (!g.complete) throw RequiresComplete("common-cluster search needs a complete exchange graph");
  for (const auto& s : g.seeds) {
    const bool ha = std::find(s.vars.begin(), s.vars.end(), a) != s.vars.end();
    const bool hb = std::find(s.vars.begin(), s.vars.end(), b) != s.vars.end();
    if (ha && hb) {
      auto f = s.vars;
      std::sort(f.begin(), f.end());
      return f;
    }
  }
  return std::nullopt;
}

std::optional<ExchangeWitness> find_exchange_witness(const ExchangeGraph& g, std::size_t a, std::size_t b) {
  if (!g.complete) throw RequiresComplete("exchange-witness search needs a complete exchange graph");
  for (const auto& e : g.edges) {
    const auto& u = g.seeds[e.from].vars;
    const auto& v = g.seeds[e.to].vars;
    const std::size_t out = u[e.direction];
    std::size_t in = ExchangeGraph::npos;
    for (std::size_t x : v)
      if (std::find(u.begin(), u.end(), x) == u.end()) in = x;
    std::size_t sa = e.from, sb = e.to;
    if (out == b && in == a) std::swap(sa, sb);
    else if (!(out == a && in == b)) continue;
    std::vector<std::size_t> common;
    for (std::size_t x : u)
      if (x != out) common.push_back(x);
    std::sort(common.begin(), common.end());
    return ExchangeWitness{common, sa, sb};
  }
  return std::nullopt;
}

std::string to_dot(const ExchangeGraph& g) {
  std::string s = "graph exchange {\n";
  for (std::size_t i = 0; i < g.seeds.size(); ++i) {
    std::string label;
    for (std::size_t v : g.seeds[i].vars) label += (label.empty() ? "" : ",") + std::to_string(v);
    s += "  s" + std::to_string(i) + " [label=\"{" + label + "}\"];\n";
  }
  for (const auto& e : g.edges)
    s += "  s" + std::to_string(e.from) + " -- s" + std::to_string(e.to) + " [label=\"" +
         std::to_string(e.direction + 1) + "\"];\n";
  return s + "}\n";
}

nlohmann::json to_json(const ExchangeGraph& g) {
  nlohmann::json vars = nlohmann::json::array();
  for (const auto& v : g.variables)
    vars.push_back({{"key", v.key},
                    {"g", v.g},
                    {"d", v.d},
                    {"F", v.f.to_string()},
                    {"word", word_to_string(v.ref.word)},
                    {"index", v.ref.index + 1}});
  nlohmann::json seeds = nlohmann::json::array();
  for (const auto& s : g.seeds) seeds.push_back({{"word", word_to_string(s.word)}, {"variables", s.vars}});
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"direction", e.direction + 1}});
  return {{"status", g.complete ? "complete" : "truncated"},
          {"seed_count", g.seeds.size()},
          {"variable_count", g.variables.size()},
          {"variables", vars},
          {"seeds", seeds},
          {"edges", edges}};
}

nlohmann::json to_json(const ClusterComplex& c) { return {{"vertices", c.vertices}, {"facets", c.facets}}; }

}  // namespace cluster
