#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permbound/graph.hpp"

namespace permbound {

// One-line notation sigma_1 ... sigma_n. Always a bijection [n] -> [n].
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

  static Permutation identity(int n);
  static Permutation reversal(int n);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  // sigma_i for a 1-based position i.
  int at(Vertex i) const;
  std::span<const int> values() const noexcept { return values_; }

  Permutation inverse() const;

  // "1 4 2 3"
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> values_;
};

// Space separated integers, or the compact digit form ("1423") when n <= 9.
Permutation parse_permutation(std::string_view text);

// (sigma o rho)_k = sigma_{rho_k}.
Permutation compose(const Permutation& sigma, const Permutation& rho);

bool satisfies(const Permutation& sigma, const RestrictionGraph& g);

int linf_distance(const Permutation& sigma, const Permutation& rho);

// Number of discordant position pairs, by direct pair counting.
std::int64_t kendall_distance(const Permutation& sigma, const Permutation& rho);

// |{(i < j) : sigma_i > sigma_j}|, merge-sort count.
std::int64_t inversion_number(const Permutation& sigma);

enum class Metric { Linf, Kendall };

std::string_view to_string(Metric m);
Metric parse_metric(std::string_view text);

std::int64_t distance(Metric m, const Permutation& sigma, const Permutation& rho);

// sigma_{v_k} = n + 1 - k, so earlier vertices receive larger values.
Permutation from_linear_extension(std::span<const Vertex> order);

}  // namespace permbound
