#include "permbound/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

namespace permbound {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n || seen[v])
      throw NotABijection("not a permutation of [" + std::to_string(n) + "]: value " +
                          std::to_string(v));
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::reversal(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v));
}

int Permutation::at(Vertex i) const {
  if (i < 1 || i > size()) throw VertexOutOfRange(i, size());
  return values_[i - 1];
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) inv[values_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(values_[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  constexpr std::string_view kSeparators = " ,\t";
  const auto first = text.find_first_not_of(" \t\r\n");
  const auto last = text.find_last_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty permutation");
  const std::string_view body = text.substr(first, last - first + 1);

  std::vector<int> values;
  if (body.find_first_of(kSeparators) == std::string_view::npos) {
    // Compact digit form.
    if (body.size() > 9) throw ParseError("compact permutation form requires n <= 9");
    for (char c : body) {
      if (c < '1' || c > '9') throw ParseError("bad permutation '" + std::string(text) + "'");
      values.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while ((pos = body.find_first_not_of(kSeparators, pos)) != std::string_view::npos) {
      int v = 0;
      const char* begin = body.data() + pos;
      auto [ptr, ec] = std::from_chars(begin, body.data() + body.size(), v);
      if (ec != std::errc() || ptr == begin) throw ParseError("bad permutation '" + std::string(text) + "'");
      values.push_back(v);
      pos = static_cast<std::size_t>(ptr - body.data());
    }
  }
  try {
    return Permutation(std::move(values));
  } catch (const NotABijection& e) {
    throw ParseError(e.what());
  }
}

Permutation compose(const Permutation& sigma, const Permutation& rho) {
  if (sigma.size() != rho.size()) throw SizeMismatch(sigma.size(), rho.size());
  std::vector<int> out(sigma.size());
  for (int k = 1; k <= sigma.size(); ++k) out[k - 1] = sigma.at(rho.at(k));
  return Permutation(std::move(out));
}

bool satisfies(const Permutation& sigma, const RestrictionGraph& g) {
  if (sigma.size() != g.size()) throw SizeMismatch(sigma.size(), g.size());
  auto v = sigma.values();
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return v[e.from - 1] > v[e.to - 1]; });
}

int linf_distance(const Permutation& sigma, const Permutation& rho) {
  if (sigma.size() != rho.size()) throw SizeMismatch(sigma.size(), rho.size());
  int best = 0;
  auto a = sigma.values();
  auto b = rho.values();
  for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, std::abs(a[i] - b[i]));
  return best;
}

std::int64_t kendall_distance(const Permutation& sigma, const Permutation& rho) {
  if (sigma.size() != rho.size()) throw SizeMismatch(sigma.size(), rho.size());
  auto a = sigma.values();
  auto b = rho.values();
  std::int64_t discordant = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if ((a[i] < a[j]) != (b[i] < b[j])) ++discordant;
  return discordant;
}

namespace {

std::int64_t merge_count(std::vector<int>& v, std::vector<int>& scratch, std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::int64_t count = merge_count(v, scratch, lo, mid) + merge_count(v, scratch, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      count += static_cast<std::int64_t>(mid - i);
      scratch[k++] = v[j++];
    } else {
      scratch[k++] = v[i++];
    }
  }
  while (i < mid) scratch[k++] = v[i++];
  while (j < hi) scratch[k++] = v[j++];
  std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo), scratch.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return count;
}

}  // namespace

std::int64_t inversion_number(const Permutation& sigma) {
  std::vector<int> v(sigma.values().begin(), sigma.values().end());
  std::vector<int> scratch(v.size());
  return merge_count(v, scratch, 0, v.size());
}

std::string_view to_string(Metric m) { return m == Metric::Linf ? "linf" : "kendall"; }

Metric parse_metric(std::string_view text) {
  if (text == "linf") return Metric::Linf;
  if (text == "kendall") return Metric::Kendall;
  throw ParseError("unknown metric '" + std::string(text) + "' (expected linf or kendall)");
}

std::int64_t distance(Metric m, const Permutation& sigma, const Permutation& rho) {
  return m == Metric::Linf ? linf_distance(sigma, rho) : kendall_distance(sigma, rho);
}

Permutation from_linear_extension(std::span<const Vertex> order) {
  const int n = static_cast<int>(order.size());
  std::vector<int> values(n, 0);
  for (int k = 0; k < n; ++k) {
    const Vertex v = order[k];
    if (v < 1 || v > n || values[v - 1] != 0)
      throw NotABijection("linear extension is not a listing of [" + std::to_string(n) + "]");
    values[v - 1] = n - k;
  }
  return Permutation(std::move(values));
}

}  // namespace permbound
