#include "cobox/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <ostream>
#include <sstream>

#include "cobox/blocks.hpp"
#include "cobox/cointerval.hpp"
#include "cobox/cover.hpp"
#include "cobox/generate.hpp"
#include "cobox/oracle.hpp"

namespace cobox {

namespace {

// Pinned limits.
constexpr double kPathSeconds = 1.0;
constexpr double kOracleSeconds = 300.0;
constexpr double kLargeSeconds = 60.0;
constexpr int kPathMax = 60;
constexpr int kTreeMax = 9;
constexpr int kRandomSmall = 500;
constexpr int kRandomSmallMax = 12;
constexpr int kBoundsInstances = 1000;
constexpr int kBoundsMax = 300;
constexpr int kOrderingPairs = 1000;
constexpr int kOrderingMax = 12;
constexpr int kRandomAnts = 1000;
constexpr int kUnionPairs = 200;
// Exhaustive enumeration over orderings runs up to this size; above it the
// block-graph oracle uses big-ant candidates.
constexpr int kGeneralOracleMax = 9;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

struct Recorded {
  Graph g;
  CoverResult result;
};

struct Instance {
  std::string label;
  Graph g;
};

std::vector<Instance> oracle_corpus(Rng& rng) {
  std::vector<Instance> out;
  for (int n = 1; n <= kTreeMax; ++n) {
    int k = 0;
    for (Graph& t : free_trees(n)) out.push_back({"tree n=" + std::to_string(n) + " #" + std::to_string(k++), std::move(t)});
  }
  for (int i = 0; i < kRandomSmall; ++i) {
    const int n = static_cast<int>(rng.uniform(1, kRandomSmallMax));
    const std::uint64_t seed = rng.next();
    const bool forest = rng.uniform(0, 3) == 0;
    Graph g = forest ? random_block_forest(n, seed) : random_block_graph(n, seed);
    out.push_back({std::string(forest ? "forest" : "block") + " n=" + std::to_string(n) + " seed=" + std::to_string(seed),
                   std::move(g)});
  }
  return out;
}

std::string clip(const std::vector<std::string>& lines) {
  if (lines.empty()) return "";
  std::string out = "; first: " + lines.front();
  if (lines.size() > 1) out += " (+" + std::to_string(lines.size() - 1) + " more)";
  return out;
}

// Oracle value for g. Small graphs are solved twice, once by exhaustive
// enumeration and once from big-ant candidates; a disagreement is reported.
int oracle_value(const Graph& g, bool threshold, std::vector<std::string>& notes, const std::string& label) {
  auto solve = [&](const OracleOptions& o) { return threshold ? brute_cothdim(g, o) : brute_coboxicity(g, o); };
  const int fast = solve(OracleOptions{});
  if (g.vertex_count() <= kGeneralOracleMax) {
    OracleOptions general;
    general.use_big_ants = false;
    const int slow = solve(general);
    if (slow != fast) notes.push_back(label + ": exhaustive oracle " + std::to_string(slow) + " vs big-ant oracle " + std::to_string(fast));
    return slow;
  }
  return fast;
}

// Literal form of the ordering condition over all triples.
bool ordering_condition_holds(const Graph& h, const std::vector<Vertex>& order) {
  const std::size_t n = order.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!h.adjacent(order[j], order[k])) continue;
      for (std::size_t i = 0; i < j; ++i) {
        if (!h.adjacent(order[i], order[k])) return false;
      }
    }
  }
  return true;
}

VertexSet random_clique(const Graph& g, Rng& rng) {
  std::vector<Vertex> order = random_ordering(g, rng);
  VertexSet q;
  for (Vertex x : order) {
    if (std::all_of(q.begin(), q.end(), [&](Vertex y) { return g.adjacent(x, y); })) q.push_back(x);
  }
  normalize(q);
  return q;
}

struct Runner {
  AcceptanceOptions options;
  std::vector<CriterionResult> results;
  std::vector<Recorded> emitted;         // criteria 1-4, for criterion 5
  std::vector<Recorded> corpus_covers;   // criterion 2, for criterion 9

  void record(int id, std::string title, const std::function<std::pair<bool, std::string>()>& body) {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    const auto start = Clock::now();
    try {
      auto [ok, detail] = body();
      r.passed = ok;
      r.detail = std::move(detail);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = since(start);
    results.push_back(std::move(r));
  }

  void run() {
    Rng master(options.seed);

    record(1, "path formula", [&] {
      std::vector<std::string> bad;
      const auto start = Clock::now();
      for (int n = 2; n <= kPathMax; ++n) {
        const Graph p = path_graph(n);
        CoverResult res = min_cointerval_cover(p);
        if (static_cast<int>(res.cover.size()) != path_coboxicity(n)) {
          bad.push_back("P" + std::to_string(n) + " gave " + std::to_string(res.cover.size()));
        }
        emitted.push_back({p, std::move(res)});
      }
      const double t = since(start);
      const bool ok = bad.empty() && t < kPathSeconds;
      return std::pair{ok, "n=2.." + std::to_string(kPathMax) + ", mismatches " + std::to_string(bad.size()) +
                               ", algorithm time " + std::to_string(t) + " s (limit " + std::to_string(kPathSeconds) +
                               ")" + clip(bad)};
    });

    Rng corpus_rng(master.next());
    const std::vector<Instance> corpus = oracle_corpus(corpus_rng);
    std::size_t trees = 0;
    for (const Instance& inst : corpus) trees += inst.label.rfind("tree", 0) == 0 ? 1 : 0;

    auto oracle_criterion = [&](bool threshold) {
      std::vector<std::string> bad;
      const auto start = Clock::now();
      for (const Instance& inst : corpus) {
        CoverResult res = threshold ? min_threshold_cover(inst.g) : min_cointerval_cover(inst.g);
        const int algo = static_cast<int>(res.cover.size());
        const int oracle = oracle_value(inst.g, threshold, bad, inst.label);
        if (algo != oracle) bad.push_back(inst.label + ": algorithm " + std::to_string(algo) + " vs oracle " + std::to_string(oracle));
        if (threshold) {
          const int cobox_oracle = brute_coboxicity(inst.g);
          if (cobox_oracle > oracle) bad.push_back(inst.label + ": oracle co-boxicity exceeds oracle threshold value");
        } else {
          corpus_covers.push_back({inst.g, res});
        }
        emitted.push_back({inst.g, std::move(res)});
      }
      const double t = since(start);
      return std::pair{bad.empty() && t < kOracleSeconds,
                       std::to_string(trees) + " free trees up to " + std::to_string(kTreeMax) + " vertices + " +
                           std::to_string(corpus.size() - trees) + " random block graphs up to " +
                           std::to_string(kRandomSmallMax) + " vertices, mismatches " + std::to_string(bad.size()) +
                           clip(bad)};
    };
    record(2, "co-boxicity oracle equivalence", [&] { return oracle_criterion(false); });
    record(3, "threshold oracle equivalence", [&] { return oracle_criterion(true); });

    record(4, "cobox <= cothdim <= 2 cobox", [&] {
      Rng rng(master.next());
      std::vector<std::string> bad;
      for (int i = 0; i < kBoundsInstances; ++i) {
        const int n = static_cast<int>(rng.uniform(1, kBoundsMax));
        const std::uint64_t seed = rng.next();
        const Graph g = rng.uniform(0, 3) == 0 ? random_block_forest(n, seed) : random_block_graph(n, seed);
        CoverResult co = min_cointerval_cover(g);
        CoverResult th = min_threshold_cover(g);
        const auto a = co.cover.size();
        const auto b = th.cover.size();
        if (!(a <= b && b <= 2 * a)) {
          bad.push_back("n=" + std::to_string(n) + " seed=" + std::to_string(seed) + ": " + std::to_string(a) + ", " + std::to_string(b));
        }
        emitted.push_back({g, std::move(co)});
        emitted.push_back({g, std::move(th)});
      }
      return std::pair{bad.empty(), std::to_string(kBoundsInstances) + " graphs up to " + std::to_string(kBoundsMax) +
                                        " vertices, violations " + std::to_string(bad.size()) + clip(bad)};
    });

    record(5, "cover validity", [&] {
      std::vector<std::string> bad;
      std::size_t elements = 0;
      for (const Recorded& rec : emitted) {
        const std::string tag = "n=" + std::to_string(rec.g.vertex_count()) + " " + to_string(rec.result.cover.kind);
        const VerificationReport report = verify_cover(rec.g, rec.result.cover);
        if (!report.valid()) bad.push_back(tag + ": verify_cover failed");
        for (const std::string& p : audit_cover(rec.g, rec.result)) bad.push_back(tag + ": " + p);
        const BlockDecomposition bd = block_decomposition(rec.g);
        for (const CoverElement& el : rec.result.cover.elements) {
          ++elements;
          const bool inside = el.ant && std::any_of(bd.blocks.begin(), bd.blocks.end(), [&](const VertexSet& b) {
                                return std::includes(b.begin(), b.end(), el.ant->block.begin(), el.ant->block.end());
                              });
          if (!inside) bad.push_back(tag + ": element is not based on a clique inside a block");
        }
      }
      return std::pair{bad.empty(), std::to_string(emitted.size()) + " covers, " + std::to_string(elements) +
                                        " elements, problems " + std::to_string(bad.size()) + clip(bad)};
    });

    record(6, "sigma-subgraphs are co-interval", [&] {
      Rng rng(master.next());
      std::vector<std::string> bad;
      for (int i = 0; i < kOrderingPairs; ++i) {
        const int n = static_cast<int>(rng.uniform(1, kOrderingMax));
        const double p = 0.1 + 0.8 * rng.unit();
        const Graph g = random_graph(n, p, rng.next());
        const std::vector<Vertex> order = random_ordering(g, rng);
        const EdgeSubgraph s = sigma_subgraph(g, order);
        const Graph h = s.as_graph();
        std::vector<Vertex> restricted;
        for (Vertex x : order) {
          if (h.has_vertex(x)) restricted.push_back(x);
        }
        if (!is_cointerval(h)) bad.push_back("pair " + std::to_string(i) + ": not co-interval");
        if (!ordering_condition_holds(h, restricted)) bad.push_back("pair " + std::to_string(i) + ": ordering condition fails");
      }
      return std::pair{bad.empty(), std::to_string(kOrderingPairs) + " (graph, ordering) pairs up to " +
                                        std::to_string(kOrderingMax) + " vertices, failures " + std::to_string(bad.size()) + clip(bad)};
    });

    record(7, "big ants are co-interval, Q_u threshold", [&] {
      Rng rng(master.next());
      std::vector<std::string> bad;
      int done = 0;
      while (done < kRandomAnts) {
        const bool block_host = done % 2 == 0;
        const Graph g = block_host ? random_block_graph(static_cast<int>(rng.uniform(2, 30)), rng.next())
                                   : random_graph(static_cast<int>(rng.uniform(2, 12)), 0.2 + 0.6 * rng.unit(), rng.next());
        VertexSet q;
        if (block_host) {
          const BlockDecomposition bd = block_decomposition(g);
          q = bd.blocks[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(bd.blocks.size()) - 1))];
        } else {
          q = random_clique(g, rng);
        }
        if (q.size() < 2) continue;
        const auto pick = [&] { return q[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(q.size()) - 1))]; };
        const Vertex u = pick();
        const Vertex v = pick();
        const std::string tag = std::string(block_host ? "block" : "general") + " ant " + std::to_string(done);
        const BigAnt pair_ant{q, u, v};
        const Graph h = big_ant(g, pair_ant).as_graph();
        if (!is_cointerval(h)) bad.push_back(tag + ": Q_{u,v} not co-interval");
        if (!represents_cointerval(h, cointerval_representation(g, pair_ant))) bad.push_back(tag + ": ant layout breaks contract");
        if (!represents_cointerval(h, cointerval_representation(h))) bad.push_back(tag + ": ordering layout breaks contract");
        const BigAnt single{q, u, u};
        const Graph hu = big_ant(g, single).as_graph();
        if (!is_threshold(hu)) bad.push_back(tag + ": Q_u not threshold");
        if (!represents_cointerval(hu, cointerval_representation(g, single))) bad.push_back(tag + ": Q_u layout breaks contract");
        ++done;
      }
      return std::pair{bad.empty(), std::to_string(kRandomAnts) + " ants over block and general hosts, failures " +
                                        std::to_string(bad.size()) + clip(bad)};
    });

    record(8, "additivity over disjoint union", [&] {
      Rng rng(master.next());
      std::vector<std::string> bad;
      for (int i = 0; i < kUnionPairs; ++i) {
        const Graph a = random_block_forest(static_cast<int>(rng.uniform(1, 80)), rng.next());
        const Graph b = random_block_forest(static_cast<int>(rng.uniform(1, 80)), rng.next());
        const int whole = coboxicity(disjoint_union(a, b));
        const int parts = coboxicity(a) + coboxicity(b);
        if (whole != parts) bad.push_back("pair " + std::to_string(i) + ": " + std::to_string(whole) + " vs " + std::to_string(parts));
      }
      return std::pair{bad.empty(), std::to_string(kUnionPairs) + " pairs, mismatches " + std::to_string(bad.size()) + clip(bad)};
    });

    record(9, "box representation contract", [&] {
      std::vector<std::string> bad;
      for (const Recorded& rec : corpus_covers) {
        const BoxRepresentation boxes = cover_to_box_representation(rec.g, rec.result.cover);
        const int expected = std::max<int>(1, static_cast<int>(rec.result.cover.size()));
        if (boxes.dimension != expected || !represents_complement(rec.g, boxes)) {
          bad.push_back("n=" + std::to_string(rec.g.vertex_count()) + " m=" + std::to_string(rec.g.edge_count()));
        }
      }
      return std::pair{bad.empty() && !corpus_covers.empty(),
                       std::to_string(corpus_covers.size()) + " corpus instances, all vertex pairs, failures " +
                           std::to_string(bad.size()) + clip(bad)};
    });

    record(10, "large instance", [&] {
      const Graph g = random_block_graph(options.large_n, master.next());
      CoverOptions opts;
      opts.record_components = false;
      opts.check_invariants = true;
      std::ostringstream detail;
      bool ok = true;
      for (CoverKind kind : {CoverKind::cointerval, CoverKind::threshold}) {
        const auto start = Clock::now();
        const CoverResult res = kind == CoverKind::cointerval ? min_cointerval_cover(g, opts) : min_threshold_cover(g, opts);
        const double t = since(start);
        bool progress = true;
        for (const IterationTrace& tr : res.traces) progress = progress && !tr.removed.empty();
        EdgeList covered;
        for (const CoverElement& el : res.cover.elements) covered.insert(covered.end(), el.subgraph.edges.begin(), el.subgraph.edges.end());
        std::sort(covered.begin(), covered.end());
        covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
        const bool complete = covered == g.edges();
        ok = ok && progress && complete && t < kLargeSeconds;
        detail << to_string(kind) << " size " << res.cover.size() << " in " << t << " s" << (complete ? "" : " (edges missed)")
               << (progress ? "" : " (empty removal)") << "; ";
      }
      detail << "n=" << options.large_n << ", limit " << kLargeSeconds << " s each";
      return std::pair{ok, detail.str()};
    });
  }
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  Runner runner;
  runner.options = options;
  runner.run();
  return runner.results;
}

std::string format_result(const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
  return std::string(r.passed ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.title + ": " + r.detail + " (" +
         secs + " s)";
}

bool print_acceptance(const std::vector<CriterionResult>& results, std::ostream& out) {
  bool all = true;
  for (const CriterionResult& r : results) {
    out << format_result(r) << '\n';
    all = all && r.passed;
  }
  out << (all ? "all criteria passed" : "some criteria failed") << '\n';
  return all;
}

}  // namespace cobox
