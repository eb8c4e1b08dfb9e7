// Batch front end: ingestion, validation, construction, sampling, reports.
// Exit codes: 0 success, 2 invalid input syntax, 3 mathematical validation
// failure. JSON is the machine surface; with --out the JSON goes to the
// file and a human summary to stdout, otherwise the JSON itself is printed.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <mutex>
#include <thread>

#include "hftwo/complex.hpp"
#include "hftwo/diagram.hpp"
#include "hftwo/diagram_json.hpp"
#include "hftwo/differential.hpp"
#include "hftwo/generators.hpp"
#include "hftwo/monodromy.hpp"

using json = nlohmann::ordered_json;
using namespace hftwo;

namespace {

struct Options {
  std::string input;
  std::string sigma;
  std::string sides;
  std::string endcircle = "top";
  std::string out;
  std::string complex_json;
  int samples = 100;
  uint64_t seed = 1;
  int max_coeff = 2;
  uint64_t budget = 5000;
};

int threads_cap() {
  if (const char* env = std::getenv("HFTWO_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  return hw > 0 ? hw : 1;
}

// Deterministic parallel map over [0, n).
template <class Fn>
void parallel_for(int n, Fn fn) {
  int nt = std::min(threads_cap(), n > 0 ? n : 1);
  if (nt <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int t = 0; t < nt; ++t)
    pool.emplace_back([&]() {
      while (true) {
        int i = next.fetch_add(1);
        if (i >= n) break;
        fn(i);
      }
    });
  for (auto& th : pool) th.join();
}

int emit(const Options& opt, const json& report, int code) {
  std::string text = report.dump(1) + "\n";
  if (!opt.out.empty()) {
    std::ofstream f(opt.out);
    f << text;
    std::cout << report.value("command", "") << ": "
              << (code == 0 ? "ok" : "FAIL") << " (report in " << opt.out
              << ")\n";
  } else {
    std::cout << text;
  }
  return code;
}

struct Loaded {
  ExtendedGrid eg;
  Monodromy mono;
  EndcircleConvention conv;
};

// Returns exit code 0 on success; fills `out`.
int load_inputs(const Options& opt, Loaded& out, json& report,
                bool need_sigma = true) {
  std::ifstream f(opt.input);
  if (!f) {
    report["error"] = "cannot open input file '" + opt.input + "'";
    return 2;
  }
  std::stringstream buf;
  buf << f.rdbuf();
  GridError gerr;
  auto parsed = parse_grid(buf.str(), gerr);
  if (!parsed) {
    report["error"] = "grid parse: " + gerr.message;
    return 2;
  }
  std::string sides = !opt.sides.empty() ? opt.sides : parsed->sides;
  auto eg = extend_grid(parsed->grid, sides, gerr);
  if (!eg) {
    report["error"] = "extend: " + gerr.message;
    return 2;
  }
  out.eg = *eg;
  out.conv = opt.endcircle == "bottom" ? EndcircleConvention::Bottom
                                       : EndcircleConvention::Top;
  if (!need_sigma) return 0;
  if (opt.sigma.empty()) {
    report["error"] = "missing --sigma";
    return 2;
  }
  std::string serr;
  auto mono = parse_sigma(opt.sigma, parsed->grid.n, serr);
  if (!mono) {
    report["error"] = "sigma parse: " + serr;
    return 2;
  }
  out.mono = *mono;
  return 0;
}

json diagram_summary(const AdaptedDiagram& d) {
  json s;
  s["n"] = d.n();
  s["genus"] = d.surf.genus();
  s["euler_characteristic"] = d.surf.euler_characteristic();
  s["alpha_curves"] = d.alpha.size();
  s["beta_curves"] = d.beta.size();
  s["faces_upstairs"] = d.surf.faces.size();
  s["elementary_domains"] = d.domains.size();
  int octs = 0;
  for (const auto& dom : d.domains) octs += dom.octagon_face >= 0 ? 1 : 0;
  s["octagonal_domains"] = octs;
  s["basepoints"] = d.basepoints.size();
  s["intersection_points"] = d.crossings.size();
  s["generator_count"] = u128_str(permanent_count(d));
  return s;
}

json homology_json(const HomologyReport& r) {
  json j;
  j["rank"] = r.rank;
  j["free_summands"] = r.free_summands;
  j["f2_summands"] = r.f2_summands;
  if (r.reduced) {
    j["divisible"] = r.divisible;
    if (r.divisible) {
      j["reduced_rank"] = r.reduced_rank;
      j["reduced_free_summands"] = r.reduced_free;
      j["reduced_f2_summands"] = r.reduced_f2;
    }
  }
  return j;
}

int cmd_validate(const Options& opt) {
  json report;
  report["command"] = "validate";
  Loaded in;
  if (int rc = load_inputs(opt, in, report)) return emit(opt, report, rc);
  if (auto w = validate_wirtinger(in.eg.base, in.mono)) {
    report["failure"] = {{"check", "wirtinger"}, {"witness", w->message}};
    return emit(opt, report, 3);
  }
  if (auto t = validate_transitive(in.mono)) {
    report["failure"] = {{"check", "transitivity"}, {"witness", t->message}};
    return emit(opt, report, 3);
  }
  DiagramError derr;
  auto d = build_diagram(in.eg, in.mono, in.conv, derr);
  if (!d) {
    report["failure"] = {{"check", derr.check}, {"witness", derr.message}};
    return emit(opt, report, 3);
  }
  auto checks = validate_properties(*d);
  json jc = json::array();
  for (const auto& c : checks)
    jc.push_back({{"name", c.name},
                  {"pass", c.pass},
                  {"details", c.details}});
  report["checks"] = jc;
  report["summary"] = diagram_summary(*d);
  bool ok = all_pass(checks);
  report["pass"] = ok;
  return emit(opt, report, ok ? 0 : 3);
}

int cmd_build(const Options& opt, bool stats_only) {
  json report;
  report["command"] = stats_only ? "stats" : "build";
  Loaded in;
  if (int rc = load_inputs(opt, in, report)) return emit(opt, report, rc);
  DiagramError derr;
  auto d = build_diagram(in.eg, in.mono, in.conv, derr);
  if (!d) {
    report["failure"] = {{"check", derr.check}, {"witness", derr.message}};
    return emit(opt, report, 3);
  }
  report["summary"] = diagram_summary(*d);
  // Sectors discovered on a sample of generators.
  {
    SectorTable table(*d);
    std::mt19937_64 rng(opt.seed);
    std::set<std::string> sectors;
    for (int i = 0; i < opt.samples; ++i)
      sectors.insert(table.sector_of(*d, sample_generator(*d, rng)));
    report["sectors_sampled"] = sectors.size();
  }
  if (!stats_only) {
    std::string dj = diagram_to_json(*d);
    if (!opt.out.empty()) {
      std::ofstream f(opt.out);
      f << dj << "\n";
      report["diagram_written"] = opt.out;
      std::cout << report.dump(1) << "\n";
      return 0;
    }
    std::cout << dj << "\n";
    return 0;
  }
  return emit(opt, report, 0);
}

int cmd_export(const Options& opt) {
  json report;
  report["command"] = "export";
  Loaded in;
  if (int rc = load_inputs(opt, in, report)) return emit(opt, report, rc);
  DiagramError derr;
  auto d = build_diagram(in.eg, in.mono, in.conv, derr);
  if (!d) {
    report["failure"] = {{"check", derr.check}, {"witness", derr.message}};
    return emit(opt, report, 3);
  }
  std::string dj = diagram_to_json(*d);
  if (!opt.out.empty()) {
    std::ofstream f(opt.out);
    f << dj << "\n";
    std::cout << "export: ok (" << opt.out << ")\n";
  } else {
    std::cout << dj << "\n";
  }
  return 0;
}

int cmd_dsq_sample(const Options& opt) {
  json report;
  report["command"] = "dsq-sample";
  Loaded in;
  if (int rc = load_inputs(opt, in, report)) return emit(opt, report, rc);
  DiagramError derr;
  auto d = build_diagram(in.eg, in.mono, in.conv, derr);
  if (!d) {
    report["failure"] = {{"check", derr.check}, {"witness", derr.message}};
    return emit(opt, report, 3);
  }
  std::vector<Generator> xs;
  std::mt19937_64 rng(opt.seed);
  for (int i = 0; i < opt.samples; ++i) xs.push_back(sample_generator(*d, rng));
  std::vector<int> fails(xs.size(), 0);
  std::vector<long long> terms(xs.size(), 0);
  DifferentialEngine engine(*d);
  // Mod-2 reduced boundaries, memoized across samples (targets repeat).
  using Reduced = std::vector<std::pair<std::vector<int>, int>>;
  std::map<std::vector<int>, Reduced> memo;
  std::mutex memo_mu;
  auto boundary_of = [&](const Generator& g) -> Reduced {
    {
      std::lock_guard<std::mutex> lock(memo_mu);
      auto it = memo.find(g.point_on_alpha);
      if (it != memo.end()) return it->second;
    }
    std::map<std::pair<std::vector<int>, int>, int> acc;
    for (const auto& t : engine.enumerate(g))
      acc[{t.y.point_on_alpha, t.upower}] ^= 1;
    Reduced r;
    for (auto& [key, parity] : acc)
      if (parity) r.emplace_back(key.first, key.second);
    std::lock_guard<std::mutex> lock(memo_mu);
    memo.emplace(g.point_on_alpha, r);
    return r;
  };
  parallel_for(static_cast<int>(xs.size()), [&](int i) {
    auto first = boundary_of(xs[i]);
    terms[i] = static_cast<long long>(first.size());
    std::map<std::pair<std::vector<int>, int>, int> acc;
    for (const auto& [y, w1] : first) {
      Generator gy;
      gy.point_on_alpha = y;
      for (const auto& [z, w2] : boundary_of(gy)) {
        int w = w1 + w2;
        if (w >= 2) continue;
        acc[{z, w}] ^= 1;
      }
    }
    for (auto& [k, parity] : acc)
      if (parity) fails[i] = 1;
  });
  int nfail = 0;
  long long nterms = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    nfail += fails[i];
    nterms += terms[i];
  }
  report["samples"] = xs.size();
  report["seed"] = opt.seed;
  report["boundary_terms_total"] = nterms;
  report["dsq_failures"] = nfail;
  report["pass"] = nfail == 0;
  return emit(opt, report, nfail == 0 ? 0 : 3);
}

int cmd_oracle_check(const Options& opt) {
  json report;
  report["command"] = "oracle-check";
  Loaded in;
  if (int rc = load_inputs(opt, in, report)) return emit(opt, report, rc);
  DiagramError derr;
  auto d = build_diagram(in.eg, in.mono, in.conv, derr);
  if (!d) {
    report["failure"] = {{"check", derr.check}, {"witness", derr.message}};
    return emit(opt, report, 3);
  }
  std::vector<Generator> xs;
  std::mt19937_64 rng(opt.seed);
  for (int i = 0; i < opt.samples; ++i) xs.push_back(sample_generator(*d, rng));
  std::vector<int> mismatch(xs.size(), 0), vacuum_bad(xs.size(), 0),
      entry2(xs.size(), 0), incomplete(xs.size(), 0);
  DifferentialEngine engine(*d);
  parallel_for(static_cast<int>(xs.size()), [&](int i) {
    auto fast = engine.enumerate(xs[i]);
    auto oracle = oracle_search(*d, xs[i], opt.max_coeff, 1, 1);
    if (!oracle.complete) {
      incomplete[i] = 1;
      return;
    }
    if (term_keys(fast) != term_keys(oracle.terms)) mismatch[i] = 1;
    for (const auto& t : oracle.terms)
      for (long long v : t.domain)
        if (v >= 2) entry2[i] = 1;
    auto vac = oracle_search(*d, xs[i], opt.max_coeff, 0, 1);
    if (!vac.complete) incomplete[i] = 1;
    // Only the constant domain may appear.
    for (const auto& t : vac.terms) {
      bool zero = true;
      for (long long v : t.domain) zero = zero && v == 0;
      if (!zero) vacuum_bad[i] = 1;
    }
    if (vac.terms.size() != 1) vacuum_bad[i] = 1;
  });
  int nm = 0, nv = 0, n2 = 0, ni = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    nm += mismatch[i];
    nv += vacuum_bad[i];
    n2 += entry2[i];
    ni += incomplete[i];
  }
  report["samples"] = xs.size();
  report["seed"] = opt.seed;
  report["max_coeff"] = opt.max_coeff;
  report["mismatches"] = nm;
  report["mu0_vacuum_violations"] = nv;
  report["entry2_domains"] = n2;
  report["incomplete_searches"] = ni;
  bool ok = nm == 0 && nv == 0 && n2 == 0 && ni == 0;
  report["pass"] = ok;
  return emit(opt, report, ok ? 0 : 3);
}

int cmd_homology(const Options& opt) {
  json report;
  report["command"] = "homology";
  if (!opt.complex_json.empty()) {
    std::ifstream f(opt.complex_json);
    if (!f) {
      report["error"] = "cannot open complex file";
      return emit(opt, report, 2);
    }
    std::stringstream buf;
    buf << f.rdbuf();
    std::string err;
    auto c = complex_from_json(buf.str(), err);
    if (!c) {
      report["error"] = err;
      return emit(opt, report, 2);
    }
    if (auto w = verify_d_squared(*c)) {
      report["failure"] = {{"check", "d-squared"},
                           {"witness", "from " + std::to_string(w->from) +
                                           " to " + std::to_string(w->to)}};
      return emit(opt, report, 3);
    }
    report["homology"] = homology_json(homology(*c));
    return emit(opt, report, 0);
  }
  Loaded in;
  if (int rc = load_inputs(opt, in, report)) return emit(opt, report, rc);
  DiagramError derr;
  auto d = build_diagram(in.eg, in.mono, in.conv, derr);
  if (!d) {
    report["failure"] = {{"check", derr.check}, {"witness", derr.message}};
    return emit(opt, report, 3);
  }
  std::mt19937_64 rng(opt.seed);
  Generator seed_gen = sample_generator(*d, rng);
  auto built = build_sector_complex(*d, seed_gen, opt.budget);
  report["streamed_generators"] = built.streamed;
  if (built.skipped_budget) {
    report["status"] = "skipped: budget";
    return emit(opt, report, 0);
  }
  if (auto w = verify_d_squared(*built.complex)) {
    report["failure"] = {{"check", "d-squared"},
                         {"witness", built.complex->gens[w->from]}};
    return emit(opt, report, 3);
  }
  auto h = homology(*built.complex);
  report["sector"] = built.complex->sector;
  report["sector_size"] = built.complex->size();
  report["homology"] = homology_json(h);
  report["reduced"] = homology_json(lemma23_reduce(h, 2 * d->n()));
  return emit(opt, report, 0);
}

int cmd_monodromy_search(const Options& opt) {
  json report;
  report["command"] = "monodromy-search";
  Loaded in;
  if (int rc = load_inputs(opt, in, report, false)) return emit(opt, report, rc);
  auto all = enumerate_monodromies(in.eg.base);
  json list = json::array();
  for (const auto& m : all) list.push_back(sigma_string(m));
  report["count"] = all.size();
  report["monodromies"] = list;
  return emit(opt, report, 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adapted Heegaard diagrams of simple triple branched covers "
               "and their U^2-truncated Floer complexes"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool with_input = true) {
    if (with_input)
      sub->add_option("input", opt.input, "grid description file")->required();
    sub->add_option("--sigma", opt.sigma, "column transpositions, e.g. '12 12 13 13'");
    sub->add_option("--sides", opt.sides, "2n side letters (U/D then L/R)");
    sub->add_option("--endcircle", opt.endcircle, "top|bottom")
        ->check(CLI::IsMember({"top", "bottom"}));
    sub->add_option("--samples", opt.samples, "sample count");
    sub->add_option("--seed", opt.seed, "RNG seed");
    sub->add_option("--max-coeff", opt.max_coeff, "oracle coefficient bound");
    sub->add_option("--budget", opt.budget, "generator budget for homology");
    sub->add_option("--out", opt.out, "write the JSON report here");
  };

  add_common(app.add_subcommand("validate", "validate grid, monodromy and diagram"));
  add_common(app.add_subcommand("build", "build the diagram and print it"));
  add_common(app.add_subcommand("stats", "construction summary"));
  add_common(app.add_subcommand("export", "write the diagram cell complex"));
  add_common(app.add_subcommand("dsq-sample", "check d^2=0 on sampled generators"));
  add_common(app.add_subcommand("oracle-check",
                                "fast enumerator vs bounded oracle"));
  auto* hom = app.add_subcommand("homology", "homology of a sector or complex");
  add_common(hom, false);
  hom->add_option("input", opt.input, "grid description file");
  hom->add_option("--complex-json", opt.complex_json,
                  "direct mode: read an hftwo-complex JSON file");
  add_common(app.add_subcommand("monodromy-search",
                                "all consistent transitive monodromies"));

  CLI11_PARSE(app, argc, argv);
  try {
    if (app.got_subcommand("validate")) return cmd_validate(opt);
    if (app.got_subcommand("build")) return cmd_build(opt, false);
    if (app.got_subcommand("stats")) return cmd_build(opt, true);
    if (app.got_subcommand("export")) return cmd_export(opt);
    if (app.got_subcommand("dsq-sample")) return cmd_dsq_sample(opt);
    if (app.got_subcommand("oracle-check")) return cmd_oracle_check(opt);
    if (app.got_subcommand("homology")) return cmd_homology(opt);
    if (app.got_subcommand("monodromy-search")) return cmd_monodromy_search(opt);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
