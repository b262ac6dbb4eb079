#include "permbound/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace permbound {

namespace {

RestrictionGraph build(long long n, const std::vector<std::pair<long long, long long>>& raw) {
  if (n < 1) throw ParseError("vertex count must be positive, got " + std::to_string(n));
  if (n > 1'000'000) throw ParseError("vertex count too large: " + std::to_string(n));
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (auto [u, v] : raw) {
    for (long long x : {u, v})
      if (x < 1 || x > n)
        throw ParseError("vertex " + std::to_string(x) + " outside [1, " + std::to_string(n) + "]");
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u));
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return RestrictionGraph(static_cast<int>(n), edges);
}

RestrictionGraph parse_json_graph(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    std::vector<std::pair<long long, long long>> raw;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a two-element array");
      raw.emplace_back(e[0].get<long long>(), e[1].get<long long>());
    }
    return build(j.at("n").get<long long>(), raw);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what());
  }
}

}  // namespace

RestrictionGraph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty input");
  if (text[first] == '{') return parse_json_graph(text);

  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<long long> n;
  std::vector<std::pair<long long, long long>> raw;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    std::string extra;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!n) {
      long long value = 0;
      if (!(fields >> value) || (fields >> extra)) throw ParseError(where + "expected vertex count");
      n = value;
      continue;
    }
    long long u = 0, v = 0;
    if (!(fields >> u >> v) || (fields >> extra)) throw ParseError(where + "expected 'u v'");
    raw.emplace_back(u, v);
  }
  if (!n) throw ParseError("missing vertex count");
  return build(*n, raw);
}

RestrictionGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string format_edge_list(const RestrictionGraph& g) {
  std::string out = std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.from) + " " + std::to_string(e.to) + "\n";
  return out;
}

nlohmann::json graph_to_json(const RestrictionGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.from, e.to});
  return {{"n", g.size()}, {"edges", std::move(edges)}};
}

}  // namespace permbound
