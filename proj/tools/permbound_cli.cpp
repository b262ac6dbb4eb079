// permbound: metric diameters of permutation families cut out by restriction
// graphs.
//
// Exit codes: 0 success, 1 parse/usage error, 2 semantic rejection (cyclic
// graph, empty family), 3 enumeration limit exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permbound/extremal.hpp"
#include "permbound/families.hpp"
#include "permbound/generators.hpp"
#include "permbound/graph.hpp"
#include "permbound/io.hpp"
#include "permbound/oracle.hpp"
#include "permbound/permutation.hpp"

namespace pb = permbound;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRejected = 2;
constexpr int kExitLimit = 3;

int default_limit() {
  const char* env = std::getenv("PERMBOUND_LIMIT");
  if (env == nullptr || *env == '\0') return pb::kDefaultExhaustiveLimit;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 1 || value > 20)
    throw pb::ParseError(std::string("PERMBOUND_LIMIT must be an integer in [1, 20], got '") + env + "'");
  return static_cast<int>(value);
}

json perm_json(const pb::Permutation& p) { return json(std::vector<int>(p.values().begin(), p.values().end())); }

std::string join_vertices(const std::vector<pb::Vertex>& vs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(vs[i]);
  }
  return out;
}

std::string pair_set_string(const std::vector<std::pair<int, int>>& pairs) {
  std::string out = "{";
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (k > 0) out += ",";
    out += "(" + std::to_string(pairs[k].first) + "," + std::to_string(pairs[k].second) + ")";
  }
  return out + "}";
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

struct Options {
  std::string input;
  std::string metric = "linf";
  bool witness = false;
  bool as_json = false;
  std::optional<int> limit;
  std::optional<int> n;
  std::string descents;
  std::string descent_text;
  bool all = false;
  std::string h;
  std::string sigma;
  std::string set_path;
  double p = 0.3;
  std::uint64_t seed = 1;

  int effective_limit() const { return limit ? *limit : default_limit(); }
};

int cmd_validate(const Options& o) {
  const pb::RestrictionGraph g = pb::read_graph_file(o.input);
  const auto cycle = pb::find_cycle(g);
  if (o.as_json) {
    json j{{"acyclic", !cycle}, {"n", g.size()}, {"edges", g.edge_count()}};
    j["cycle"] = cycle ? json(*cycle) : json(nullptr);
    print_json(j);
  } else if (!cycle) {
    std::cout << "acyclic; n=" << g.size() << "; " << g.edge_count() << " edges\n";
  } else {
    std::cout << "cyclic; n=" << g.size() << "; " << g.edge_count() << " edges; witness "
              << join_vertices(*cycle, "→") << "\n";
  }
  return cycle ? kExitRejected : kExitOk;
}

int cmd_enumerate(const Options& o) {
  const pb::RestrictionGraph g = pb::read_graph_file(o.input);
  const int limit = o.effective_limit();
  const bool acyclic = pb::is_acyclic(g);
  if (!acyclic) std::cerr << "warning: graph is cyclic; its permutation family is empty\n";
  const auto family = pb::enumerate_family(g, limit);
  if (o.as_json) {
    json members = json::array();
    for (const auto& p : family) members.push_back(perm_json(p));
    print_json({{"n", g.size()}, {"count", family.size()}, {"family", members}});
  } else {
    for (const auto& p : family) std::cout << p.to_string() << "\n";
    std::cout << "count=" << family.size() << "\n";
  }
  return acyclic ? kExitOk : kExitRejected;
}

int cmd_diameter(const Options& o) {
  const pb::RestrictionGraph g = pb::read_graph_file(o.input);
  const pb::Metric metric = pb::parse_metric(o.metric);
  if (!pb::is_acyclic(g)) throw pb::CyclicGraph(*pb::find_cycle(g));
  const pb::DiameterReport r =
      metric == pb::Metric::Linf ? pb::linf_diameter(g) : pb::kendall_diameter(g, o.effective_limit());
  if (o.as_json) {
    json j{{"metric", pb::to_string(r.metric)},
           {"bound", r.bound},
           {"attained", r.attained},
           {"method", pb::to_string(r.method)}};
    j["witness"] = r.witness ? json::array({perm_json(r.witness->first), perm_json(r.witness->second)})
                             : json(nullptr);
    if (metric == pb::Metric::Kendall) j["incomparable_pairs"] = pb::kendall_upper_bound(g);
    print_json(j);
    return kExitOk;
  }
  std::cout << "metric: " << pb::to_string(r.metric) << "\n"
            << "bound: " << r.bound << "\n"
            << "attained: " << (r.attained ? "yes" : "no") << "\n"
            << "method: " << pb::to_string(r.method) << "\n";
  if (metric == pb::Metric::Kendall) std::cout << "incomparable pairs: " << pb::kendall_upper_bound(g) << "\n";
  if (o.witness) {
    if (r.witness) {
      std::cout << "witness: " << r.witness->first.to_string() << "\n"
                << "witness: " << r.witness->second.to_string() << "\n";
    } else {
      std::cout << "witness: none\n";
    }
  }
  return kExitOk;
}

int cmd_dimension(const Options& o) {
  const pb::RestrictionGraph g = pb::read_graph_file(o.input);
  const auto realizer = pb::dimension_at_most_two(g);
  if (o.as_json) {
    json j{{"dim_le_2", realizer.has_value()}};
    if (realizer) {
      j["realizer"] = {realizer->first, realizer->second};
      j["permutations"] = {perm_json(pb::from_linear_extension(realizer->first)),
                           perm_json(pb::from_linear_extension(realizer->second))};
    }
    print_json(j);
    return kExitOk;
  }
  std::cout << "dim<=2: " << (realizer ? "yes" : "no") << "\n";
  if (realizer) {
    std::cout << "ext1: " << join_vertices(realizer->first, " ") << "\n"
              << "ext2: " << join_vertices(realizer->second, " ") << "\n"
              << "sigma: " << pb::from_linear_extension(realizer->first).to_string() << "\n"
              << "rho: " << pb::from_linear_extension(realizer->second).to_string() << "\n";
  }
  return kExitOk;
}

struct DescentRow {
  pb::DescentSet d;
  std::int64_t closed_form;
  std::int64_t generic;
};

DescentRow descent_row(const pb::DescentSet& d, pb::Metric metric, int limit) {
  const pb::RestrictionGraph g = pb::descent_to_graph(d);
  if (metric == pb::Metric::Linf) return {d, pb::descent_linf_closed_form(d), pb::linf_diameter_bound(g)};
  return {d, pb::descent_kendall_closed_form(d), pb::kendall_diameter(g, limit).bound};
}

int cmd_descent(const Options& o) {
  const pb::Metric metric = pb::parse_metric(o.metric);
  const int limit = o.effective_limit();
  std::vector<DescentRow> rows;
  if (o.all) {
    if (!o.n) throw pb::ParseError("--all needs --n");
    if (*o.n < 1 || *o.n > 20) throw pb::ParseError("--n must be in [1, 20] with --all");
    const int n = *o.n;
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<int> positions;
      for (int i = 1; i < n; ++i)
        if (mask >> (i - 1) & 1) positions.push_back(i);
      rows.push_back(descent_row(pb::DescentSet(n, positions), metric, limit));
    }
  } else if (!o.descent_text.empty()) {
    rows.push_back(descent_row(pb::parse_descent_set(o.descent_text), metric, limit));
  } else {
    if (!o.n) throw pb::ParseError("descent needs --n (or --set)");
    std::vector<int> positions;
    std::istringstream in(o.descents);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.find_first_not_of(" \t") == std::string::npos) continue;
      try {
        positions.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw pb::ParseError("bad descent position '" + item + "'");
      }
    }
    try {
      rows.push_back(descent_row(pb::DescentSet(*o.n, positions), metric, limit));
    } catch (const pb::InvalidArgument& e) {
      throw pb::ParseError(e.what());
    }
  }

  if (o.as_json) {
    json out = json::array();
    for (const auto& r : rows)
      out.push_back({{"n", r.d.size()},
                     {"descents", r.d.positions()},
                     {"metric", pb::to_string(metric)},
                     {"closed_form", r.closed_form},
                     {"generic", r.generic},
                     {"agree", r.closed_form == r.generic}});
    print_json(rows.size() == 1 && !o.all ? out[0] : out);
    return kExitOk;
  }
  if (!o.all) {
    const auto& r = rows.front();
    std::cout << r.d.to_string() << "\n"
              << "metric: " << pb::to_string(metric) << "\n"
              << "closed form: " << r.closed_form << "\n"
              << "generic: " << r.generic << "\n"
              << "agree: " << (r.closed_form == r.generic ? "yes" : "no") << "\n";
    return kExitOk;
  }
  std::size_t agree = 0;
  std::cout << "descents\tclosed_form\tgeneric\tagree\n";
  for (const auto& r : rows) {
    std::string set = "{" + join_vertices(r.d.positions(), ",") + "}";
    std::cout << set << "\t" << r.closed_form << "\t" << r.generic << "\t"
              << (r.closed_form == r.generic ? "yes" : "no") << "\n";
    agree += r.closed_form == r.generic;
  }
  std::cout << "agree " << agree << "/" << rows.size() << "\n";
  return kExitOk;
}

int cmd_hessenberg(const Options& o) {
  const pb::HessenbergFunction h = pb::parse_hessenberg(o.h);
  if (!o.sigma.empty()) {
    const pb::Permutation sigma = pb::parse_permutation(o.sigma);
    if (sigma.size() != h.size()) throw pb::ParseError("sigma and h differ in length");
    const auto s = pb::h_inversion_set(sigma, h);
    if (o.as_json) {
      json pairs = json::array();
      for (auto [i, j] : s.pairs) pairs.push_back({i, j});
      print_json({{"h", h.values()}, {"sigma", perm_json(sigma)}, {"pairs", pairs}});
    } else {
      std::cout << h.to_string() << "\n"
                << "sigma: " << sigma.to_string() << "\n"
                << "Inv_h: " << pair_set_string(s.pairs) << "\n";
    }
    return kExitOk;
  }
  if (o.set_path.empty()) throw pb::ParseError("hessenberg needs --sigma or --set");

  std::ifstream in(o.set_path);
  if (!in) throw pb::ParseError("cannot open " + o.set_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const pb::HInversionSet s = pb::parse_h_inversion_set(h, buf.str());
  const auto family = pb::hessenberg_family(h, s, o.effective_limit());

  json j{{"h", h.values()}, {"size", family.size()}};
  json members = json::array();
  for (const auto& p : family) members.push_back(perm_json(p));
  j["family"] = members;
  int code = kExitOk;
  if (family.empty()) {
    j["spread"] = nullptr;
    j["oracle"] = nullptr;
    code = kExitRejected;
  } else {
    const auto ext = pb::inversion_extremes(family);
    const auto oracle = pb::brute_diameter(family, pb::Metric::Kendall);
    const std::int64_t spread = family.size() == 1 ? 0 : ext.spread();
    j["top"] = perm_json(ext.top);
    j["bottom"] = perm_json(ext.bottom);
    j["unique_extremes"] = ext.top_unique && ext.bottom_unique;
    j["spread"] = spread;
    j["oracle"] = oracle.value;
    j["agree"] = spread == oracle.value;
  }
  if (o.as_json) {
    print_json(j);
    return code;
  }
  std::cout << h.to_string() << "\n"
            << "S: " << pair_set_string(s.pairs) << "\n";
  for (const auto& p : family) std::cout << p.to_string() << "\n";
  std::cout << "count=" << family.size() << "\n";
  if (family.empty()) {
    std::cout << "family is empty\n";
    return code;
  }
  std::cout << "max inversions: " << j["top"].dump() << "\n"
            << "min inversions: " << j["bottom"].dump() << "\n"
            << "unique extremes: " << (j["unique_extremes"].get<bool>() ? "yes" : "no") << "\n"
            << "l(x)-l(w): " << j["spread"].get<std::int64_t>() << "\n"
            << "oracle kendall diameter: " << j["oracle"].get<std::int64_t>() << "\n"
            << "agree: " << (j["agree"].get<bool>() ? "yes" : "no") << "\n";
  return code;
}

int cmd_generate(const Options& o) {
  if (!o.n || *o.n < 1) throw pb::ParseError("generate needs --n >= 1");
  if (o.p < 0.0 || o.p > 1.0) throw pb::ParseError("--p must lie in [0, 1]");
  std::mt19937_64 rng(o.seed);
  const pb::RestrictionGraph g = pb::random_dag(*o.n, o.p, rng);
  if (o.as_json)
    print_json(pb::graph_to_json(g));
  else
    std::cout << pb::format_edge_list(g);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metric diameters of permutation families defined by restriction graphs"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) { sub->add_flag("--json", o.as_json, "Emit JSON"); };
  auto add_limit = [&](CLI::App* sub) {
    sub->add_option("--limit", o.limit, "Enumeration limit on n (default 8 or $PERMBOUND_LIMIT)")
        ->check(CLI::Range(1, 20));
  };

  auto* validate = app.add_subcommand("validate", "Check that a graph is acyclic");
  validate->add_option("input", o.input, "Edge-list or JSON graph file")->required();
  add_common(validate);

  auto* enumerate = app.add_subcommand("enumerate", "List every permutation satisfying a graph");
  enumerate->add_option("input", o.input, "Edge-list or JSON graph file")->required();
  add_limit(enumerate);
  add_common(enumerate);

  auto* diameter = app.add_subcommand("diameter", "Maximum distance within the family");
  diameter->add_option("input", o.input, "Edge-list or JSON graph file")->required();
  diameter->add_option("--metric", o.metric, "linf or kendall")->check(CLI::IsMember({"linf", "kendall"}));
  diameter->add_flag("--witness", o.witness, "Print an extremal pair");
  add_limit(diameter);
  add_common(diameter);

  auto* dimension = app.add_subcommand("dimension", "Decide whether the poset has dimension <= 2");
  dimension->add_option("input", o.input, "Edge-list or JSON graph file")->required();
  add_common(dimension);

  auto* descent = app.add_subcommand("descent", "Closed forms for descent-set families");
  descent->add_option("--n", o.n, "Permutation length");
  descent->add_option("--descents", o.descents, "Comma separated descent positions");
  descent->add_option("--set", o.descent_text, "Descent set as 'n=5; D={1,3}' or JSON");
  descent->add_option("--metric", o.metric, "linf or kendall")->check(CLI::IsMember({"linf", "kendall"}));
  descent->add_flag("--all", o.all, "Tabulate every descent set of size n");
  add_limit(descent);
  add_common(descent);

  auto* hessenberg = app.add_subcommand("hessenberg", "h-inversion sets and their families");
  hessenberg->set_help_flag("--help", "Print this help message and exit");
  hessenberg->add_option("--h", o.h, "Hessenberg function, e.g. 2,3,4,4")->required();
  auto* sigma_opt = hessenberg->add_option("--sigma", o.sigma, "Permutation ('2 4 1 3' or 2413)");
  auto* set_opt = hessenberg->add_option("--set", o.set_path, "File of h-inversion pairs 'i j'");
  sigma_opt->excludes(set_opt);
  hessenberg->add_option("--metric", o.metric, "Only kendall is supported")->check(CLI::IsMember({"kendall"}));
  add_limit(hessenberg);
  add_common(hessenberg);

  auto* generate = app.add_subcommand("generate", "Random acyclic restriction graph");
  generate->add_option("--n", o.n, "Number of vertices")->required();
  generate->add_option("--p", o.p, "Edge probability for each forward pair");
  generate->add_option("--seed", o.seed, "RNG seed");
  add_common(generate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(o);
    if (enumerate->parsed()) return cmd_enumerate(o);
    if (diameter->parsed()) return cmd_diameter(o);
    if (dimension->parsed()) return cmd_dimension(o);
    if (descent->parsed()) return cmd_descent(o);
    if (hessenberg->parsed()) return cmd_hessenberg(o);
    if (generate->parsed()) return cmd_generate(o);
  } catch (const pb::CyclicGraph& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRejected;
  } catch (const pb::NotAdmissible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRejected;
  } catch (const pb::LimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const pb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
