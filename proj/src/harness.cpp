#include "cfclab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "cfclab/alpha.hpp"
#include "cfclab/coloring.hpp"
#include "cfclab/construct.hpp"
#include "cfclab/error.hpp"
#include "cfclab/families.hpp"
#include "cfclab/graph_io.hpp"
#include "cfclab/solver.hpp"
#include "json.hpp"

namespace cfclab {

const char* to_string(CheckId id) {
  switch (id) {
    case CheckId::observation1: return "observation1";
    case CheckId::theorem1: return "theorem1";
    case CheckId::theorem2: return "theorem2";
    case CheckId::corollary1: return "corollary1";
    case CheckId::corollary2: return "corollary2";
    case CheckId::lemma1: return "lemma1";
    case CheckId::lemma2: return "lemma2";
    case CheckId::lemma3: return "lemma3";
    case CheckId::lemma4: return "lemma4";
    case CheckId::lemma5: return "lemma5";
    case CheckId::lemma6: return "lemma6";
    case CheckId::lemma7: return "lemma7";
    case CheckId::lemma8: return "lemma8";
    case CheckId::lemma9: return "lemma9";
    case CheckId::lemma10: return "lemma10";
    case CheckId::lemma11: return "lemma11";
    case CheckId::example1: return "example1";
    case CheckId::remark1: return "remark1";
    case CheckId::remark2: return "remark2";
  }
  return "?";
}

std::optional<CheckId> parse_check_id(const std::string& name) {
  for (CheckId id : all_check_ids())
    if (name == to_string(id)) return id;
  return std::nullopt;
}

std::vector<CheckId> all_check_ids() {
  return {CheckId::observation1, CheckId::theorem1,  CheckId::theorem2, CheckId::corollary1,
          CheckId::corollary2,   CheckId::lemma1,    CheckId::lemma2,   CheckId::lemma3,
          CheckId::lemma4,       CheckId::lemma5,    CheckId::lemma6,   CheckId::lemma7,
          CheckId::lemma8,       CheckId::lemma9,    CheckId::lemma10,  CheckId::lemma11,
          CheckId::example1,     CheckId::remark1,   CheckId::remark2};
}

namespace {

int ceil_log2(int x) {
  int t = 0;
  while ((1 << t) < x) ++t;
  return t;
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

void parallel_for(size_t count, int threads, const std::function<void(size_t)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr first_error;
  std::mutex err_mu;
  auto worker = [&]() {
    while (!stop.load()) {
      size_t i = next.fetch_add(1);
      if (i >= count) break;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!first_error) first_error = std::current_exception();
        stop.store(true);
      }
    }
  };
  std::vector<std::thread> pool;
  int spawn = std::min<int>(threads, static_cast<int>(count));
  pool.reserve(spawn);
  for (int i = 0; i < spawn; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

bool theorem2_hypothesis_holds(const Graph& t) {
  return 2 * max_degree(t) >= independence_number(t).value + 2;
}

// Random trees biased toward a heavy hub so that large qualifying instances
// appear; uniform labeled trees almost never satisfy the degree hypothesis
// past small n.
std::vector<Graph> sample_qualifying_trees(std::uint64_t seed, int count, int max_n) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  long long attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > 200000) fail(ErrKind::InternalInvariant, "qualifying-tree sampler stalled");
    int n = 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 2));
    Graph t;
    if (rng() % 2 == 0) {
      t = random_tree(n, rng());
    } else {
      int half = std::max(1, n / 2);
      int hub_deg = std::min(n - 1, half + static_cast<int>(rng() % static_cast<std::uint64_t>(half)));
      std::vector<std::pair<int, int>> pairs;
      for (int i = 1; i <= hub_deg; ++i) pairs.push_back({0, i});
      for (int v = hub_deg + 1; v < n; ++v)
        pairs.push_back({1 + static_cast<int>(rng() % static_cast<std::uint64_t>(v - 1)), v});
      t = Graph::from_edge_list(n, pairs);
    }
    if (theorem2_hypothesis_holds(t)) out.push_back(std::move(t));
  }
  return out;
}

// Subtree by repeated random leaf deletion, keeping at least two vertices.
Graph random_subtree(const Graph& tree, std::mt19937_64& rng) {
  std::vector<char> alive(tree.n(), 1);
  int alive_count = tree.n();
  int deletions = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(tree.n() - 2));
  for (int step = 0; step < deletions && alive_count > 2; ++step) {
    std::vector<int> leaves;
    for (int v = 0; v < tree.n(); ++v) {
      if (!alive[v]) continue;
      int deg = 0;
      for (int w : tree.neighbors(v)) deg += alive[w];
      if (deg <= 1) leaves.push_back(v);
    }
    int pick = leaves[rng() % leaves.size()];
    alive[pick] = 0;
    --alive_count;
  }
  std::vector<int> keep;
  for (int v = 0; v < tree.n(); ++v)
    if (alive[v]) keep.push_back(v);
  std::vector<int> inv(tree.n(), -1);
  for (size_t i = 0; i < keep.size(); ++i) inv[keep[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : tree.edges())
    if (alive[e.u] && alive[e.v]) pairs.push_back({inv[e.u], inv[e.v]});
  return Graph::from_edge_list(static_cast<int>(keep.size()), pairs);
}

}  // namespace

Corpus::Corpus(HarnessBounds bounds) : bounds_(bounds) {}

const std::vector<Graph>& Corpus::connected_graphs() {
  std::lock_guard<std::mutex> lock(mu_);
  if (!graphs_ready_) {
    if (bounds_.max_n_graphs > 7) fail(ErrKind::CorpusTooLarge, "graph corpus supports n <= 7");
    for (int n = 2; n <= bounds_.max_n_graphs; ++n)
      for (Graph& g : enumerate_connected_graphs(n)) graphs_.push_back(std::move(g));
    graphs_ready_ = true;
  }
  return graphs_;
}

const std::vector<Graph>& Corpus::trees() {
  std::lock_guard<std::mutex> lock(mu_);
  if (!trees_ready_) {
    if (bounds_.max_n_trees > 12) fail(ErrKind::CorpusTooLarge, "tree corpus supports n <= 12");
    for (int n = 2; n <= bounds_.max_n_trees; ++n)
      for (Graph& t : enumerate_trees(n)) trees_.push_back(std::move(t));
    trees_ready_ = true;
  }
  return trees_;
}

int Corpus::cfc(const Graph& g) {
  std::string form = canonical_form(g, 10);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cfc_memo_.find(form);
    if (it != cfc_memo_.end()) return it->second.first;
  }
  int value = cfc_exact(g).value;
  std::lock_guard<std::mutex> lock(mu_);
  cfc_memo_.insert({std::move(form), {value, g}});
  return value;
}

int Corpus::alpha(const Graph& g) {
  std::string form = canonical_form(g, 10);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = alpha_memo_.find(form);
    if (it != alpha_memo_.end()) return it->second;
  }
  int value = independence_number(g).value;
  std::lock_guard<std::mutex> lock(mu_);
  alpha_memo_.insert({std::move(form), value});
  return value;
}

std::pair<long long, long long> Corpus::spot_check(std::uint64_t seed, double fraction) {
  std::vector<std::pair<int, Graph>> entries;
  {
    std::lock_guard<std::mutex> lock(mu_);
    entries.reserve(cfc_memo_.size());
    for (const auto& [form, entry] : cfc_memo_) entries.push_back(entry);
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return graph_to_text(a.second) < graph_to_text(b.second); });
  std::mt19937_64 rng(seed);
  long long samples = 0, agreed = 0;
  for (const auto& [value, graph] : entries) {
    if (rng() % 1000 >= static_cast<std::uint64_t>(fraction * 1000)) continue;
    ++samples;
    if (cfc_exact(graph).value == value) ++agreed;
  }
  return {samples, agreed};
}

namespace {

std::vector<Instance> build_instances(CheckId id, Corpus& corpus, std::uint64_t seed) {
  std::vector<Instance> out;
  auto push_graphs = [&](auto filter) {
    for (const Graph& g : corpus.connected_graphs())
      if (filter(g)) out.push_back({g, std::nullopt, "", 0, 0});
  };
  switch (id) {
    case CheckId::observation1:
    case CheckId::theorem1:
    case CheckId::lemma3:
      push_graphs([](const Graph&) { return true; });
      break;
    case CheckId::corollary1:
      for (const Graph& g : corpus.connected_graphs())
        if (corpus.alpha(g) == 2) out.push_back({g, std::nullopt, "", 0, 0});
      break;
    case CheckId::corollary2:
      for (const Graph& t : corpus.trees()) out.push_back({t, std::nullopt, "", 0, 0});
      break;
    case CheckId::lemma1:
      push_graphs([](const Graph& g) {
        return g.n() >= 3 && !has_cut_vertex(g) && !is_complete(g);
      });
      break;
    case CheckId::lemma2:
      push_graphs([](const Graph& g) { return is_two_edge_connected(g) && !is_complete(g); });
      break;
    case CheckId::lemma4:
      push_graphs([](const Graph& g) { return !cut_edges(g).empty(); });
      break;
    case CheckId::lemma5:
      for (const Graph& g : corpus.connected_graphs())
        if (!cut_edges(g).empty() && h_value(g) >= 2) out.push_back({g, std::nullopt, "", 0, 0});
      break;
    case CheckId::lemma6:
      for (int m = 1; m <= 10; ++m)
        out.push_back({path_graph(m), std::nullopt, "m=" + std::to_string(m), m, 0});
      break;
    case CheckId::lemma7:
      for (const Graph& t : corpus.trees())
        if (max_degree(t) >= 3) out.push_back({t, std::nullopt, "", 0, 0});
      break;
    case CheckId::lemma8:
      for (const Graph& t : corpus.trees())
        if (t.n() >= 4) out.push_back({t, std::nullopt, "", 0, 0});
      break;
    case CheckId::lemma9: {
      int cap = std::min(corpus.bounds().max_n_trees, 9);
      size_t index = 0;
      for (const Graph& t : corpus.trees()) {
        if (t.n() < 3 || t.n() > cap) continue;
        std::mt19937_64 rng(seed * 1000003ull + index);
        for (int s = 0; s < 5; ++s)
          out.push_back({t, random_subtree(t, rng), "sample=" + std::to_string(s), 0, 0});
        ++index;
      }
      break;
    }
    case CheckId::lemma10:
      for (int k = 3; k <= 8; ++k)
        out.push_back({H_graph(k), std::nullopt, "k=" + std::to_string(k), k, k <= 5 ? 1 : 0});
      break;
    case CheckId::lemma11:
      for (int k = 3; k <= 8; ++k)
        out.push_back({Q_graph(k), std::nullopt, "k=" + std::to_string(k), k, k <= 5 ? 1 : 0});
      break;
    case CheckId::example1:
      for (int l = 3; l <= 6; ++l)
        for (int k = 2; k <= l; ++k)
          out.push_back({G_lk_graph(8, l, k), std::nullopt,
                         "l=" + std::to_string(l) + " k=" + std::to_string(k), l, k});
      break;
    case CheckId::remark1:
      for (int k = 3; k <= 4; ++k)
        out.push_back({remark1_tree(k), std::nullopt, "k=" + std::to_string(k), k, 0});
      break;
    case CheckId::remark2:
      out.push_back({remark2_tree(3), std::nullopt, "k=3", 3, 0});
      break;
    case CheckId::theorem2: {
      for (const Graph& t : corpus.trees())
        if (theorem2_hypothesis_holds(t))
          out.push_back({t, std::nullopt, "exhaustive", 0, 0});
      for (Graph& t : sample_qualifying_trees(seed, 100, 40))
        out.push_back({std::move(t), std::nullopt, "random", 0, 1});
      // hypothesis-filter validation: sharp below the bound, non-necessary above
      out.push_back({remark1_tree(3), std::nullopt, "sharpness k=3", 3, 2});
      out.push_back({remark1_tree(4), std::nullopt, "sharpness k=4", 4, 2});
      out.push_back({remark2_tree(3), std::nullopt, "non-necessity k=3", 3, 3});
      break;
    }
  }
  return out;
}

}  // namespace

bool evaluate_instance(CheckId id, const Instance& inst, Corpus& corpus, std::string* details) {
  const Graph& g = inst.graph;
  std::ostringstream why;
  bool ok = true;
  auto report = [&](bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      why << what << "; ";
    }
  };
  switch (id) {
    case CheckId::observation1: {
      int a = corpus.alpha(g), n = g.n();
      report(1 <= a && a <= n - 1, "alpha=" + std::to_string(a) + " outside [1, n-1]");
      report((a == 1) == is_complete(g), "alpha=1 iff complete violated");
      report((a == n - 1) == is_star(g), "alpha=n-1 iff star violated");
      break;
    }
    case CheckId::theorem1: {
      int a = corpus.alpha(g), c = corpus.cfc(g), n = g.n();
      report(1 <= c && c <= a && a <= n - 1,
             "chain 1<=cfc<=alpha<=n-1 broken: cfc=" + std::to_string(c) +
                 " alpha=" + std::to_string(a));
      report((c == 1) == is_complete(g), "cfc=1 iff complete violated");
      report((c == n - 1) == is_star(g), "cfc=n-1 iff star violated");
      report((c == 1) == (a == 1), "cfc=1 iff alpha=1 violated");
      report((c == n - 1) == (a == n - 1), "cfc=n-1 iff alpha=n-1 violated");
      break;
    }
    case CheckId::theorem2: {
      int delta = max_degree(g);
      if (inst.b <= 1) {
        report(theorem2_hypothesis_holds(g), "instance lost the hypothesis");
        try {
          Construction con = color_tree_via_theorem2(g);
          report(con.coloring.palette_size == delta, "construction palette != maxdeg");
        } catch (const Error& e) {
          report(false, std::string("construction failed: ") + e.what());
        }
        if (inst.b == 0 || g.m() <= 20) {
          int c = corpus.cfc(g);
          report(c == delta, "cfc=" + std::to_string(c) + " != maxdeg=" + std::to_string(delta));
        }
      } else if (inst.b == 2) {
        int c = corpus.cfc(g);
        report(!theorem2_hypothesis_holds(g), "sharpness tree unexpectedly qualifies");
        report(c > delta, "cfc=" + std::to_string(c) + " not above maxdeg=" + std::to_string(delta));
      } else {
        int c = corpus.cfc(g);
        report(!theorem2_hypothesis_holds(g), "non-necessity tree unexpectedly qualifies");
        report(c == delta, "cfc=" + std::to_string(c) + " != maxdeg=" + std::to_string(delta));
      }
      break;
    }
    case CheckId::corollary1: {
      int c = corpus.cfc(g);
      report(c == 2, "alpha=2 but cfc=" + std::to_string(c));
      break;
    }
    case CheckId::corollary2: {
      int delta = max_degree(g), a = corpus.alpha(g), c = corpus.cfc(g);
      report(delta <= c && c <= a, "chain maxdeg<=cfc<=alpha broken: " + std::to_string(delta) +
                                       "," + std::to_string(c) + "," + std::to_string(a));
      if (delta == a) report(c == delta, "maxdeg=alpha but cfc differs");
      break;
    }
    case CheckId::lemma1:
    case CheckId::lemma2: {
      int c = corpus.cfc(g);
      report(c == 2, "cfc=" + std::to_string(c) + " != 2");
      break;
    }
    case CheckId::lemma3: {
      int c = corpus.cfc(g), n = g.n();
      report(1 <= c && c <= n - 1, "cfc=" + std::to_string(c) + " outside [1, n-1]");
      report((c == 1) == is_complete(g), "cfc=1 iff complete violated");
      report((c == n - 1) == is_star(g), "cfc=n-1 iff star violated");
      break;
    }
    case CheckId::lemma4: {
      int h = h_value(g), c = corpus.cfc(g);
      report(h <= c && c <= h + 1,
             "h=" + std::to_string(h) + " cfc=" + std::to_string(c) + " outside sandwich");
      break;
    }
    case CheckId::lemma5: {
      int h = h_value(g), c = corpus.cfc(g);
      if (satisfies_lemma5(g))
        report(c == h, "condition holds but cfc=" + std::to_string(c) + " != h=" + std::to_string(h));
      break;
    }
    case CheckId::lemma6: {
      int m = g.m(), c = corpus.cfc(g);
      report(c == ceil_log2(m + 1), "path m=" + std::to_string(m) + " cfc=" + std::to_string(c) +
                                        " != " + std::to_string(ceil_log2(m + 1)));
      break;
    }
    case CheckId::lemma7: {
      int delta = max_degree(g), c = corpus.cfc(g), d = diameter(g), n = g.n();
      double lower = std::max(static_cast<double>(delta), std::log2(static_cast<double>(d)));
      double upper = (delta - 2) * std::log2(static_cast<double>(n)) / (std::log2(delta) - 1.0);
      report(lower <= c + 1e-9, "lower bound " + std::to_string(lower) + " above cfc");
      report(c <= upper + 1e-9, "upper bound " + std::to_string(upper) + " below cfc");
      break;
    }
    case CheckId::lemma8: {
      int n = g.n(), delta = max_degree(g), c = corpus.cfc(g);
      for (int t = 1; 2 * t + 2 <= n; ++t)
        report((c == n - t) == (delta == n - t),
               "t=" + std::to_string(t) + ": cfc=n-t iff maxdeg=n-t violated");
      break;
    }
    case CheckId::lemma9: {
      int big = corpus.cfc(g), small = corpus.cfc(*inst.aux);
      report(small <= big, "subtree cfc=" + std::to_string(small) + " exceeds tree cfc=" +
                               std::to_string(big));
      break;
    }
    case CheckId::lemma10:
    case CheckId::lemma11: {
      int k = inst.a;
      try {
        ColoredGraph colored = id == CheckId::lemma10 ? color_H(k) : color_Q(k);
        report(colored.coloring.palette_size == k, "fixed coloring palette != k");
      } catch (const Error& e) {
        report(false, std::string("fixed coloring failed: ") + e.what());
      }
      if (inst.b) {
        int c = corpus.cfc(g);
        report(c == k, "cfc=" + std::to_string(c) + " != k=" + std::to_string(k));
      }
      break;
    }
    case CheckId::example1: {
      int l = inst.a, k = inst.b;
      int a = corpus.alpha(g), c = corpus.cfc(g);
      report(a == l, "alpha=" + std::to_string(a) + " != l=" + std::to_string(l));
      report(c == k, "cfc=" + std::to_string(c) + " != k=" + std::to_string(k));
      break;
    }
    case CheckId::remark1: {
      int k = inst.a;
      int a = corpus.alpha(g), delta = max_degree(g), c = corpus.cfc(g);
      report(a == 2 * k - 3, "alpha != 2k-3");
      report(delta == k - 1, "maxdeg != k-1");
      report(2 * delta == a + 1, "maxdeg != (alpha+1)/2");
      report(c == k, "cfc != k");
      report(c > delta, "cfc not above maxdeg");
      break;
    }
    case CheckId::remark2: {
      int k = inst.a;
      int a = corpus.alpha(g), delta = max_degree(g), c = corpus.cfc(g);
      report(a == 2 * k - 1, "alpha != 2k-1");
      report(delta == k, "maxdeg != k");
      report(2 * delta < a + 2, "hypothesis unexpectedly holds");
      report(c == delta, "cfc != maxdeg");
      break;
    }
  }
  if (!ok && details) {
    std::ostringstream full;
    full << why.str() << "n=" << g.n() << " m=" << g.m();
    if (!inst.tag.empty()) full << " [" << inst.tag << "]";
    *details = full.str();
  }
  return ok;
}

CheckReport run_check_with(Corpus& corpus, const CheckSpec& spec, int threads) {
  auto t0 = std::chrono::steady_clock::now();
  CheckReport report;
  report.id = spec.id;
  std::vector<Instance> instances = build_instances(spec.id, corpus, spec.seed);
  report.instances = static_cast<long long>(instances.size());
  std::vector<char> failed(instances.size(), 0);
  std::vector<std::string> details(instances.size());
  parallel_for(instances.size(), threads, [&](size_t i) {
    if (!evaluate_instance(spec.id, instances[i], corpus, &details[i])) failed[i] = 1;
  });
  report.passed = true;
  // deterministic counterexample: least canonical form among failures
  std::string best_form;
  for (size_t i = 0; i < instances.size(); ++i) {
    if (!failed[i]) continue;
    report.passed = false;
    std::string form = canonical_form(instances[i].graph, 10) + "|" + instances[i].tag;
    if (!report.counterexample || form < best_form) {
      best_form = form;
      report.counterexample = Counterexample{instances[i], details[i]};
    }
  }
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

Report run_check(const CheckSpec& spec, int threads) {
  Corpus corpus(spec.bounds);
  Report report;
  report.bounds = spec.bounds;
  report.seed = spec.seed;
  report.threads = threads;
  auto t0 = std::chrono::steady_clock::now();
  report.checks.push_back(run_check_with(corpus, spec, threads));
  report.all_passed = report.checks.back().passed;
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

Report run_all(const HarnessBounds& bounds, std::uint64_t seed, int threads) {
  Corpus corpus(bounds);
  Report report;
  report.bounds = bounds;
  report.seed = seed;
  report.threads = threads;
  auto t0 = std::chrono::steady_clock::now();
  for (CheckId id : all_check_ids()) {
    report.checks.push_back(run_check_with(corpus, CheckSpec{id, bounds, seed}, threads));
    if (!report.checks.back().passed) report.all_passed = false;
  }
  auto [samples, agreed] = corpus.spot_check(seed);
  report.memo_spot_samples = samples;
  report.memo_spot_agreed = agreed;
  if (samples != agreed) report.all_passed = false;
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

namespace {

nlohmann::json report_json(const Report& report) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["bounds"] = {{"max_n_graphs", report.bounds.max_n_graphs},
                 {"max_n_trees", report.bounds.max_n_trees}};
  j["seed"] = report.seed;
  j["threads"] = report.threads;
  j["all_passed"] = report.all_passed;
  j["memo_spot_check"] = {{"samples", report.memo_spot_samples},
                          {"agreed", report.memo_spot_agreed}};
  j["wall_ms"] = report.wall_ms;
  j["checks"] = nlohmann::json::array();
  for (const CheckReport& check : report.checks) {
    nlohmann::json c;
    c["id"] = to_string(check.id);
    c["instances"] = check.instances;
    c["passed"] = check.passed;
    c["wall_ms"] = check.wall_ms;
    if (check.counterexample) {
      nlohmann::json ce;
      ce["graph"] = graph_to_text(check.counterexample->instance.graph);
      if (check.counterexample->instance.aux)
        ce["aux_graph"] = graph_to_text(*check.counterexample->instance.aux);
      ce["tag"] = check.counterexample->instance.tag;
      ce["details"] = check.counterexample->details;
      c["counterexample"] = ce;
    } else {
      c["counterexample"] = nullptr;
    }
    j["checks"].push_back(c);
  }
  return j;
}

}  // namespace

std::string report_to_json(const Report& report) { return report_json(report).dump(2); }

std::string report_to_csv(const Report& report) {
  std::ostringstream out;
  out << "id,instances,passed,wall_ms,details\n";
  for (const CheckReport& check : report.checks) {
    std::string details = check.counterexample ? check.counterexample->details : "";
    std::replace(details.begin(), details.end(), ',', ';');
    std::replace(details.begin(), details.end(), '\n', ' ');
    out << to_string(check.id) << "," << check.instances << "," << (check.passed ? "pass" : "FAIL")
        << "," << check.wall_ms << "," << details << "\n";
  }
  return out.str();
}

std::string report_to_text(const Report& report) {
  std::ostringstream out;
  for (const CheckReport& check : report.checks) {
    out << (check.passed ? "[pass] " : "[FAIL] ") << to_string(check.id) << "  instances="
        << check.instances << "  wall_ms=" << static_cast<long long>(check.wall_ms) << "\n";
    if (check.counterexample) {
      out << "       counterexample (" << check.counterexample->instance.tag
          << "): " << check.counterexample->details << "\n";
      std::istringstream graph_lines(graph_to_text(check.counterexample->instance.graph));
      std::string line;
      while (std::getline(graph_lines, line)) out << "         " << line << "\n";
    }
  }
  out << "memo spot check: " << report.memo_spot_agreed << "/" << report.memo_spot_samples
      << " agreed\n";
  out << (report.all_passed ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT") << "\n";
  return out.str();
}

}  // namespace cfclab
