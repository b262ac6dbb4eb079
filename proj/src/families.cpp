#include "permbound/families.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace permbound {

DescentSet::DescentSet(int n, std::vector<int> positions) : n_(n), positions_(std::move(positions)) {
  if (n < 1) throw InvalidArgument("descent set needs n >= 1");
  std::sort(positions_.begin(), positions_.end());
  positions_.erase(std::unique(positions_.begin(), positions_.end()), positions_.end());
  for (int i : positions_)
    if (i < 1 || i > n - 1)
      throw InvalidArgument("descent position " + std::to_string(i) + " outside [1, " +
                            std::to_string(n - 1) + "]");
}

bool DescentSet::contains(int i) const {
  return std::binary_search(positions_.begin(), positions_.end(), i);
}

std::string DescentSet::to_string() const {
  std::string out = "n=" + std::to_string(n_) + "; D={";
  for (std::size_t k = 0; k < positions_.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(positions_[k]);
  }
  return out + "}";
}

RestrictionGraph descent_to_graph(const DescentSet& d) {
  std::vector<Edge> edges;
  for (int i = 1; i < d.size(); ++i)
    edges.push_back(d.contains(i) ? Edge{i, i + 1} : Edge{i + 1, i});
  return RestrictionGraph(d.size(), edges);
}

DescentSet descent_set_of(const Permutation& sigma) {
  std::vector<int> positions;
  for (int i = 1; i < sigma.size(); ++i)
    if (sigma.at(i) > sigma.at(i + 1)) positions.push_back(i);
  return DescentSet(std::max(sigma.size(), 1), std::move(positions));
}

Division division_of(const DescentSet& d) {
  Division div;
  div.n = d.size();
  for (int i = 1; i < d.size(); ++i) {
    const bool desc = d.contains(i);
    if (!div.runs.empty() && div.descending.back() == desc) {
      ++div.runs.back();
    } else {
      div.runs.push_back(1);
      div.descending.push_back(desc);
    }
  }
  return div;
}

int descent_linf_closed_form(const DescentSet& d) {
  const Division div = division_of(d);
  const auto& l = div.runs;
  const std::size_t m = l.size();
  if (m <= 1) return 0;

  int smallest = std::min(l.front(), l.back());
  for (std::size_t i = 0; i < m; ++i) {
    if (l[i] >= 2) smallest = std::min(smallest, l[i]);
    if (i + 1 < m) smallest = std::min(smallest, l[i] + l[i + 1]);
  }
  return d.size() - 1 - smallest;
}

std::vector<int> turning_points(const DescentSet& d) {
  std::vector<int> a{0};
  for (int i = 1; i + 1 <= d.size() - 1; ++i)
    if (d.contains(i) != d.contains(i + 1)) a.push_back(i);
  a.push_back(d.size());
  return a;
}

std::int64_t descent_kendall_closed_form(const DescentSet& d) {
  if (division_of(d).runs.size() <= 1) return 0;
  const auto a = turning_points(d);
  const std::int64_t n = d.size();
  std::int64_t total = 0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) total += (a[i + 1] - a[i]) * (n - a[i + 1] + 1);
  return total;
}

HessenbergFunction::HessenbergFunction(std::vector<int> h) : h_(std::move(h)) {
  const int n = size();
  if (n < 1) throw InvalidArgument("Hessenberg function needs n >= 1");
  for (int i = 1; i <= n; ++i) {
    const int hi = h_[i - 1];
    if (hi < i || hi > n)
      throw InvalidArgument("Hessenberg value h_" + std::to_string(i) + " = " + std::to_string(hi) +
                            " outside [" + std::to_string(i) + ", " + std::to_string(n) + "]");
    if (i > 1 && hi < h_[i - 2]) throw InvalidArgument("Hessenberg function must be nondecreasing");
  }
}

HessenbergFunction HessenbergFunction::descent(int n) {
  std::vector<int> h(n);
  for (int i = 1; i <= n; ++i) h[i - 1] = std::min(i + 1, n);
  return HessenbergFunction(std::move(h));
}

int HessenbergFunction::at(int i) const {
  if (i < 1 || i > size()) throw VertexOutOfRange(i, size());
  return h_[i - 1];
}

std::string HessenbergFunction::to_string() const {
  std::string out = "h=";
  for (std::size_t k = 0; k < h_.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(h_[k]);
  }
  return out;
}

HInversionSet make_h_inversion_set(const HessenbergFunction& h, std::vector<std::pair<int, int>> pairs) {
  for (auto [i, j] : pairs) {
    if (i < 1 || j > h.size() || !h.admits(i, j))
      throw InvalidArgument("pair (" + std::to_string(i) + "," + std::to_string(j) +
                            ") is not admitted by " + h.to_string());
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return {h.size(), std::move(pairs)};
}

HInversionSet h_inversion_set(const Permutation& sigma, const HessenbergFunction& h) {
  if (sigma.size() != h.size()) throw SizeMismatch(sigma.size(), h.size());
  HInversionSet s{h.size(), {}};
  for (int i = 1; i <= h.size(); ++i)
    for (int j = i + 1; j <= h.at(i); ++j)
      if (sigma.at(i) > sigma.at(j)) s.pairs.emplace_back(i, j);
  return s;
}

RestrictionGraph hessenberg_graph(const HessenbergFunction& h, const HInversionSet& s) {
  if (s.n != h.size()) throw SizeMismatch(s.n, h.size());
  std::vector<Edge> edges;
  for (int i = 1; i <= h.size(); ++i)
    for (int j = i + 1; j <= h.at(i); ++j) {
      const bool inverted = std::binary_search(s.pairs.begin(), s.pairs.end(), std::make_pair(i, j));
      edges.push_back(inverted ? Edge{i, j} : Edge{j, i});
    }
  return RestrictionGraph(h.size(), edges);
}

std::vector<Permutation> hessenberg_family(const HessenbergFunction& h, const HInversionSet& s, int limit) {
  const int n = h.size();
  if (s.n != n) throw SizeMismatch(s.n, n);
  if (n > limit) throw LimitExceeded(n, limit);
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 1);
  std::vector<Permutation> family;
  do {
    Permutation sigma(values);
    if (h_inversion_set(sigma, h) == s) family.push_back(std::move(sigma));
  } while (std::next_permutation(values.begin(), values.end()));
  return family;
}

InversionExtremes inversion_extremes(std::span<const Permutation> family) {
  if (family.empty()) throw NotAdmissible("empty family");
  std::size_t top = 0, bottom = 0;
  std::int64_t top_count = 0, bottom_count = 0;
  std::int64_t top_inv = inversion_number(family[0]), bottom_inv = top_inv;
  for (std::size_t k = 0; k < family.size(); ++k) {
    const std::int64_t inv = inversion_number(family[k]);
    if (inv > top_inv) {
      top_inv = inv;
      top = k;
      top_count = 0;
    }
    if (inv == top_inv) ++top_count;
    if (inv < bottom_inv) {
      bottom_inv = inv;
      bottom = k;
      bottom_count = 0;
    }
    if (inv == bottom_inv) ++bottom_count;
  }
  return {family[top], family[bottom], top_count == 1, bottom_count == 1};
}

std::int64_t hessenberg_kendall_diameter(const HessenbergFunction& h, const HInversionSet& s, int limit) {
  const auto family = hessenberg_family(h, s, limit);
  if (family.empty()) throw NotAdmissible("D_h(S; n) is empty");
  if (family.size() == 1) return 0;
  const InversionExtremes ext = inversion_extremes(family);
  if (!ext.top_unique || !ext.bottom_unique)
    throw NonUniqueExtremes("inversion-number extremes of D_h(S; n) are not unique");
  return ext.spread();
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool looks_like_json(std::string_view s) { return !trim(s).empty() && trim(s).front() == '{'; }

nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

// Comma separated integers; an empty string is an empty list.
std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  text = trim(text);
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw ParseError("expected an integer, got '" + std::string(item) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

template <typename F>
auto rethrow_as_parse_error(F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

DescentSet parse_descent_set(std::string_view text) {
  return rethrow_as_parse_error([&] {
    if (looks_like_json(text)) {
      const auto j = parse_json(text);
      return DescentSet(j.at("n").get<int>(), j.at("descents").get<std::vector<int>>());
    }
    // n=5; D={1,3}
    const std::string_view body = trim(text);
    const auto semi = body.find(';');
    if (semi == std::string_view::npos) throw ParseError("expected 'n=<int>; D={...}'");
    const std::string_view n_part = trim(body.substr(0, semi));
    const std::string_view d_part = trim(body.substr(semi + 1));
    if (n_part.substr(0, 2) != "n=") throw ParseError("expected 'n=<int>'");
    const auto n = parse_int_list(n_part.substr(2));
    if (n.size() != 1) throw ParseError("expected a single n");
    if (d_part.substr(0, 3) != "D={" || d_part.back() != '}') throw ParseError("expected 'D={...}'");
    return DescentSet(n[0], parse_int_list(d_part.substr(3, d_part.size() - 4)));
  });
}

HessenbergFunction parse_hessenberg(std::string_view text) {
  return rethrow_as_parse_error([&] {
    if (looks_like_json(text)) return HessenbergFunction(parse_json(text).at("h").get<std::vector<int>>());
    std::string_view body = trim(text);
    if (body.substr(0, 2) == "h=") body.remove_prefix(2);
    auto values = parse_int_list(body);
    if (values.empty()) throw ParseError("empty Hessenberg function");
    return HessenbergFunction(std::move(values));
  });
}

HInversionSet parse_h_inversion_set(const HessenbergFunction& h, std::string_view text) {
  return rethrow_as_parse_error([&] {
    std::vector<std::pair<int, int>> pairs;
    if (looks_like_json(text)) {
      const auto j = parse_json(text);
      for (const auto& p : j.at("pairs")) pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
      return make_h_inversion_set(h, std::move(pairs));
    }
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      const std::string_view l = trim(line);
      if (l.empty() || l.front() == '#') continue;
      std::istringstream fields{std::string(l)};
      int i = 0, j = 0;
      std::string extra;
      if (!(fields >> i >> j) || (fields >> extra)) throw ParseError("expected 'i j', got '" + std::string(l) + "'");
      pairs.emplace_back(i, j);
    }
    return make_h_inversion_set(h, std::move(pairs));
  });
}

}  // namespace permbound
