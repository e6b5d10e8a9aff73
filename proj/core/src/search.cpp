#include "mulex/search.hpp"

#include "mulex/combinatorics.hpp"
#include "mulex/errors.hpp"
#include "mulex/families.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace mulex {

std::string to_string(Objective o) { return o == Objective::product ? "product" : "sum"; }

std::string to_string(Family f) {
  switch (f) {
    case Family::all: return "all";
    case Family::D: return "D";
    case Family::C: return "C";
    case Family::NC: return "NC";
    case Family::W: return "W";
  }
  return "all";
}

Objective parse_objective(const std::string& s) {
  if (s == "product") return Objective::product;
  if (s == "sum") return Objective::sum;
  throw std::invalid_argument("unknown objective: " + s);
}

Family parse_family(const std::string& s) {
  if (s == "all") return Family::all;
  if (s == "D") return Family::D;
  if (s == "C") return Family::C;
  if (s == "NC") return Family::NC;
  if (s == "W") return Family::W;
  throw std::invalid_argument("unknown family: " + s);
}

namespace {

struct Window {
  std::vector<std::uint32_t> pairs;
  std::uint64_t bound = 0;
};

struct Problem {
  std::size_t n = 0;
  std::size_t m = 0;
  Objective objective = Objective::product;
  Family family = Family::all;
  std::uint64_t cap = 0;
  std::vector<std::uint32_t> order;
  std::vector<Window> windows;
  std::vector<std::vector<std::uint32_t>> windows_of;
};

void add_windows(Problem& p, std::uint32_t s, std::uint64_t q) {
  if (p.n < s) return;
  for_each_combination(static_cast<std::uint32_t>(p.n), s, [&](std::span<const std::uint32_t> x) {
    Window w;
    w.bound = q;
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = i + 1; j < x.size(); ++j) {
        w.pairs.push_back(static_cast<std::uint32_t>(Multigraph::pair_index(p.n, x[i], x[j])));
      }
    }
    p.windows.push_back(std::move(w));
    return true;
  });
}

Problem make_problem(std::size_t n, std::uint32_t s, std::uint64_t q, const SearchOptions& opts, bool counting) {
  if (n == 0) throw std::invalid_argument("search needs n >= 1");
  if (s < 2) throw std::invalid_argument("search needs s >= 2");
  Problem p;
  p.n = n;
  p.m = n * (n - 1) / 2;
  p.objective = opts.objective;
  p.family = counting ? Family::all : opts.family;
  if (p.family == Family::all) {
    if (n < s && opts.weight_cap == 0) {
      throw std::invalid_argument("n < s leaves F(n,s,q) unbounded; give a weight cap or n >= s");
    }
    p.cap = opts.weight_cap ? std::min<std::uint64_t>(opts.weight_cap, q) : q;
    if (n < s) p.cap = opts.weight_cap;
    add_windows(p, s, q);
  } else {
    p.cap = opts.weight_cap ? std::min<std::uint64_t>(opts.weight_cap, 3) : 3;
    add_windows(p, 4, 15);
    add_windows(p, 3, 8);
    if (!((s == 4 && q == 15) || (s == 3 && q == 8))) add_windows(p, s, q);
  }
  if (p.cap > 255) throw std::invalid_argument("weight cap above 255");
  if (!counting && p.objective == Objective::product && p.cap > 1 &&
      static_cast<double>(p.m) * std::log2(static_cast<double>(p.cap)) > 62.0) {
    throw std::invalid_argument("product search space exceeds 64-bit products");
  }

  p.order.resize(p.m);
  std::iota(p.order.begin(), p.order.end(), 0);
  if (opts.order == EdgeOrder::reverse) {
    std::reverse(p.order.begin(), p.order.end());
  } else if (opts.order == EdgeOrder::colex) {
    std::vector<std::pair<std::pair<Vertex, Vertex>, std::uint32_t>> keyed;
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = x + 1; y < n; ++y) {
        keyed.push_back({{y, x}, static_cast<std::uint32_t>(Multigraph::pair_index(n, x, y))});
      }
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 0; i < keyed.size(); ++i) p.order[i] = keyed[i].second;
  }
  p.windows_of.assign(p.m, {});
  for (std::uint32_t wi = 0; wi < p.windows.size(); ++wi) {
    for (auto e : p.windows[wi].pairs) p.windows_of[e].push_back(wi);
  }
  return p;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r *= b;
  return r;
}

// max product of k naturals <= cap with sum <= budget
std::uint64_t balanced_product(std::uint64_t budget, std::uint64_t k, std::uint64_t cap) {
  if (k == 0) return 1;
  if (budget >= k * cap) return ipow(cap, k);
  const std::uint64_t base = budget / k;
  const std::uint64_t extra = budget % k;
  return ipow(base + 1, extra) * ipow(base, k - extra);
}

struct Shared {
  std::atomic<std::uint64_t> incumbent{0};
  std::atomic<bool> have_incumbent{false};
  std::atomic<std::uint64_t> nodes{0};
  std::uint64_t budget = 0;
};

class Dfs {
 public:
  Dfs(const Problem& p, Shared& shared, bool counting, bool prune)
      : p_(p),
        shared_(shared),
        counting_(counting),
        prune_(prune),
        w_(p.m, 0),
        assigned_(p.m, false),
        wsum_(p.windows.size(), 0),
        wfree_(p.windows.size(), 0),
        limit_(p.m, 0) {
    for (std::size_t i = 0; i < p.windows.size(); ++i) wfree_[i] = p.windows[i].pairs.size();
  }

  std::uint64_t limit(std::uint32_t e) const {
    std::uint64_t l = p_.cap;
    for (auto wi : p_.windows_of[e]) l = std::min(l, p_.windows[wi].bound - wsum_[wi]);
    return l;
  }

  bool fits(std::uint32_t e, std::uint64_t w) const {
    for (auto wi : p_.windows_of[e]) {
      if (wsum_[wi] + w > p_.windows[wi].bound) return false;
    }
    return w <= p_.cap;
  }

  void assign(std::uint32_t e, Weight w) {
    w_[e] = w;
    assigned_[e] = true;
    for (auto wi : p_.windows_of[e]) {
      wsum_[wi] += w;
      --wfree_[wi];
    }
    psum_ += w;
    pprod_stack_.push_back(pprod_);
    pprod_ *= w;
  }

  void unassign(std::uint32_t e) {
    const Weight w = w_[e];
    assigned_[e] = false;
    for (auto wi : p_.windows_of[e]) {
      wsum_[wi] -= w;
      ++wfree_[wi];
    }
    psum_ -= w;
    pprod_ = pprod_stack_.back();
    pprod_stack_.pop_back();
    w_[e] = 0;
  }

  void run(std::size_t pos) {
    tick();
    if (pos == p_.m) {
      leaf();
      return;
    }
    const std::uint32_t e = p_.order[pos];
    const std::uint64_t lim = limit(e);
    if (counting_ && pos + 1 == p_.m) {
      count_ += lim + 1;
      return;
    }
    if (prune_ && !counting_ && shared_.have_incumbent.load(std::memory_order_relaxed) &&
        bound() < shared_.incumbent.load(std::memory_order_relaxed)) {
      return;
    }
    for (std::uint64_t w = lim + 1; w-- > 0;) {
      assign(e, static_cast<Weight>(w));
      run(pos + 1);
      unassign(e);
    }
  }

  std::uint64_t count() const { return count_; }
  std::uint64_t local_nodes() const { return nodes_; }

  bool found = false;
  std::uint64_t best = 0;
  std::map<std::string, std::vector<Weight>> optima;
  bool truncated = false;
  std::size_t keep_cap = 0;

 private:
  void tick() {
    ++nodes_;
    if ((nodes_ & 0xfff) == 0) {
      const auto total = shared_.nodes.fetch_add(0x1000, std::memory_order_relaxed) + 0x1000;
      if (shared_.budget && total > shared_.budget) throw BudgetExceeded("node budget exceeded", total);
    }
  }

  std::uint64_t bound() {
    std::uint64_t base = p_.objective == Objective::product ? pprod_ : psum_;
    for (std::uint32_t e = 0; e < p_.m; ++e) {
      if (assigned_[e]) continue;
      limit_[e] = limit(e);
      if (p_.objective == Objective::product) {
        base *= limit_[e];
      } else {
        base += limit_[e];
      }
    }
    std::uint64_t best_bound = base;
    if (base == 0) return 0;
    for (std::size_t wi = 0; wi < p_.windows.size(); ++wi) {
      if (wfree_[wi] < 2) continue;
      const std::uint64_t budget = p_.windows[wi].bound - wsum_[wi];
      std::uint64_t inside = p_.objective == Objective::product ? 1 : 0;
      for (auto e : p_.windows[wi].pairs) {
        if (assigned_[e]) continue;
        if (p_.objective == Objective::product) {
          inside *= limit_[e];
        } else {
          inside += limit_[e];
        }
      }
      std::uint64_t cand;
      if (p_.objective == Objective::product) {
        const std::uint64_t bal = balanced_product(budget, wfree_[wi], p_.cap);
        if (bal >= inside) continue;
        cand = base / inside * bal;
      } else {
        if (budget >= inside) continue;
        cand = base - inside + budget;
      }
      best_bound = std::min(best_bound, cand);
    }
    return best_bound;
  }

  bool family_ok() const {
    if (p_.family == Family::all || p_.family == Family::D) return true;
    Multigraph g(p_.n, w_);
    switch (p_.family) {
      case Family::C: return in_C(g);
      case Family::NC: return in_NC(g);
      case Family::W: return in_W(g);
      default: return true;
    }
  }

  void leaf() {
    if (counting_) {
      ++count_;
      return;
    }
    const std::uint64_t value = p_.objective == Objective::product ? pprod_ : psum_;
    if (found && value < best) return;
    if (shared_.have_incumbent.load(std::memory_order_relaxed) &&
        value < shared_.incumbent.load(std::memory_order_relaxed)) {
      return;
    }
    if (!family_ok()) return;
    if (!found || value > best) {
      found = true;
      best = value;
      optima.clear();
      truncated = false;
    }
    raise_incumbent(value);
    std::string key;
    if (p_.n <= kDefaultCanonicalLimit) {
      key = canonical_key(Multigraph(p_.n, w_));
    } else {
      key.assign(w_.begin(), w_.end());
      if (keep_cap && optima.size() >= keep_cap && !optima.count(key)) {
        truncated = true;
        return;
      }
    }
    if (!optima.count(key)) {
      if (p_.n <= kDefaultCanonicalLimit) {
        optima.emplace(key, std::vector<Weight>(key.begin(), key.end()));
      } else {
        optima.emplace(key, w_);
      }
    }
  }

  void raise_incumbent(std::uint64_t v) {
    std::uint64_t cur = shared_.incumbent.load();
    while (cur < v && !shared_.incumbent.compare_exchange_weak(cur, v)) {
    }
    shared_.have_incumbent.store(true);
  }

  const Problem& p_;
  Shared& shared_;
  bool counting_;
  bool prune_;
  std::vector<Weight> w_;
  std::vector<bool> assigned_;
  std::vector<std::uint64_t> wsum_;
  std::vector<std::uint64_t> wfree_;
  std::vector<std::uint64_t> limit_;
  std::uint64_t psum_ = 0;
  std::uint64_t pprod_ = 1;
  std::vector<std::uint64_t> pprod_stack_;
  std::uint64_t count_ = 0;
  std::uint64_t nodes_ = 0;
};

// Feasible assignments of the first `depth` positions, in DFS order.
std::vector<std::vector<Weight>> prefixes(const Problem& p, std::size_t depth) {
  std::vector<std::vector<Weight>> out;
  Shared dummy;
  Dfs d(p, dummy, true, false);
  std::vector<Weight> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == depth) {
      out.push_back(cur);
      return;
    }
    const std::uint32_t e = p.order[pos];
    const std::uint64_t lim = d.limit(e);
    for (std::uint64_t w = lim + 1; w-- > 0;) {
      d.assign(e, static_cast<Weight>(w));
      cur.push_back(static_cast<Weight>(w));
      rec(pos + 1);
      cur.pop_back();
      d.unassign(e);
    }
  };
  rec(0);
  return out;
}

struct RunOutput {
  std::vector<std::unique_ptr<Dfs>> workers;
  std::uint64_t nodes = 0;
};

RunOutput run_search(const Problem& p, const SearchOptions& opts, bool counting, std::size_t keep_cap) {
  Shared shared;
  shared.budget = opts.node_budget;
  RunOutput out;
  const unsigned threads = std::max(1u, opts.threads);
  const std::size_t depth = threads > 1 ? std::min<std::size_t>(3, p.m > 1 ? p.m - 1 : 0) : 0;
  const auto tasks = depth ? prefixes(p, depth) : std::vector<std::vector<Weight>>{{}};
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;

  for (unsigned t = 0; t < threads; ++t) {
    out.workers.push_back(std::make_unique<Dfs>(p, shared, counting, opts.prune));
    out.workers.back()->keep_cap = keep_cap;
  }
  auto work = [&](Dfs& d) {
    try {
      for (std::size_t i = next++; i < tasks.size(); i = next++) {
        const auto& pre = tasks[i];
        for (std::size_t k = 0; k < pre.size(); ++k) d.assign(p.order[k], pre[k]);
        d.run(pre.size());
        for (std::size_t k = pre.size(); k-- > 0;) d.unassign(p.order[k]);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mu);
      if (!error) error = std::current_exception();
      next = tasks.size();
    }
  };
  if (threads == 1) {
    work(*out.workers[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, std::ref(*out.workers[t]));
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  for (const auto& w : out.workers) out.nodes += w->local_nodes();
  return out;
}

}  // namespace

CountResult count_F(std::size_t n, std::uint32_t s, std::uint64_t q, const SearchOptions& opts) {
  if (n < s) throw std::invalid_argument("count_F needs n >= s (F(n,s,q) is infinite otherwise)");
  SearchOptions o = opts;
  o.weight_cap = 0;
  const Problem p = make_problem(n, s, q, o, true);
  CountResult r{n, s, q, 0, true, 0};
  RunOutput out = run_search(p, o, true, 0);
  for (const auto& w : out.workers) r.count += static_cast<unsigned long>(w->count());
  r.nodes_explored = out.nodes;
  return r;
}

ExtremalResult extremal(std::size_t n, std::uint32_t s, std::uint64_t q, const SearchOptions& opts) {
  const Problem p = make_problem(n, s, q, opts, false);
  RunOutput out = run_search(p, opts, false, opts.witness_cap);
  ExtremalResult r;
  r.objective = opts.objective;
  r.family = opts.family;
  r.n = n;
  r.s = s;
  r.q = q;
  r.nodes_explored = out.nodes;

  bool any = false;
  std::uint64_t best = 0;
  for (const auto& w : out.workers) {
    if (w->found && (!any || w->best > best)) {
      best = w->best;
      any = true;
    }
  }
  if (!any) return r;
  r.value = static_cast<unsigned long>(best);
  std::map<std::string, std::vector<Weight>> merged;
  for (const auto& w : out.workers) {
    if (!w->found || w->best != best) continue;
    r.witnesses_truncated = r.witnesses_truncated || w->truncated;
    for (const auto& [k, v] : w->optima) merged.emplace(k, v);
  }
  for (const auto& [k, v] : merged) {
    if (opts.witness_cap && r.witnesses.size() >= opts.witness_cap) {
      r.witnesses_truncated = true;
      break;
    }
    r.witnesses.emplace_back(n, v);
  }
  return r;
}

std::vector<Multigraph> extremal_set(std::size_t n, std::uint32_t s, std::uint64_t q, SearchOptions opts) {
  if (n > kDefaultCanonicalLimit) throw std::invalid_argument("extremal_set needs n <= 10");
  opts.witness_cap = 0;
  return extremal(n, s, q, opts).witnesses;
}

bool ViolationDecomposition::cross_checks_ok() const {
  return std::all_of(cross_checks.begin(), cross_checks.end(), [](const CrossCheck& c) { return c.ok; });
}

ViolationDecomposition violation_decomposition(const Multigraph& g) {
  const auto n = static_cast<Vertex>(g.order());
  ViolationDecomposition d;
  std::vector<bool> used(n, false);
  if (!is_sq_graph(g, 3, 8)) {
    for_each_combination(n, 3, [&](std::span<const std::uint32_t> x) {
      if (used[x[0]] || used[x[1]] || used[x[2]]) return true;
      if (window_sum(g, x) >= 9) {
        d.triples.push_back({x[0], x[1], x[2]});
        for (auto v : x) used[v] = true;
      }
      return true;
    });
  }
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (used[x] || used[y]) continue;
      if (g.weight(x, y) >= 4) {
        d.pairs.push_back({x, y});
        used[x] = used[y] = true;
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!used[v]) d.remainder.push_back(v);
  }
  d.remainder_in_D = d.remainder.empty() || in_D(g.induced(d.remainder));
  if (is_sq_graph(g, 4, 15) && !d.remainder_in_D) {
    throw InvariantViolation("remainder of the violation decomposition is not in D");
  }

  std::size_t block = 0;
  for (const auto& t : d.triples) {
    for (Vertex z = 0; z < n; ++z) {
      if (z == t[0] || z == t[1] || z == t[2]) continue;
      const auto m = window_metrics(g, std::span<const Vertex>(t.data(), 3), z);
      d.cross_checks.push_back({block, z, m.sum, m.product, m.sum > 6 || m.product <= 8});
    }
    ++block;
  }
  for (const auto& e : d.pairs) {
    for (Vertex z = 0; z < n; ++z) {
      if (z == e[0] || z == e[1]) continue;
      const auto m = window_metrics(g, std::span<const Vertex>(e.data(), 2), z);
      d.cross_checks.push_back({block, z, m.sum, m.product, m.sum > 4 || m.product <= 4});
    }
    ++block;
  }
  return d;
}

bool arithgeom_holds() {
  for (unsigned a = 0; a <= 4; ++a) {
    for (unsigned b = 0; a + b <= 4; ++b) {
      if (a * b > 4) return false;
    }
  }
  for (unsigned a = 0; a <= 6; ++a) {
    for (unsigned b = 0; a + b <= 6; ++b) {
      for (unsigned c = 0; a + b + c <= 6; ++c) {
        if (a * b * c > 8) return false;
      }
    }
  }
  return true;
}

}  // namespace mulex
