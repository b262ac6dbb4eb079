#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permbound/graph.hpp"
#include "permbound/oracle.hpp"
#include "permbound/permutation.hpp"

namespace permbound {

// ---------------------------------------------------------------------------
// Descent sets
// ---------------------------------------------------------------------------

class DescentSet {
public:
  DescentSet() = default;
  // positions must lie in [1, n - 1]; duplicates collapse.
  DescentSet(int n, std::vector<int> positions);

  int size() const noexcept { return n_; }
  const std::vector<int>& positions() const noexcept { return positions_; }
  bool contains(int i) const;

  // "n=5; D={1,3}"
  std::string to_string() const;

  friend bool operator==(const DescentSet&, const DescentSet&) = default;

private:
  int n_ = 1;
  std::vector<int> positions_;
};

// Edge i -> i+1 for a descent at i, i+1 -> i otherwise.
RestrictionGraph descent_to_graph(const DescentSet& d);

DescentSet descent_set_of(const Permutation& sigma);

// Maximal blocks of the descent indicator over positions 1..n-1: runs[t] is
// the length of block t and descending[t] tells whether it is a block of
// descents. The lengths sum to n - 1 (the empty division for n = 1). This is
// the indexing under which n - 1 - min({l_1, l_m} u {l_i >= 2} u
// {l_i + l_{i+1}}) equals the generic bound max_k (n - 1 - |R(k)| - |R^-1(k)|):
// |R(k)| + |R^-1(k)| is the length of the block left of k plus the block
// right of k, merged when both sides lie in the same block.
struct Division {
  int n = 1;
  std::vector<int> runs;
  std::vector<bool> descending;
};

Division division_of(const DescentSet& d);

// Closed-form l-inf diameter of {sigma : Des(sigma) = d}. A single block (or
// n = 1) is a one-element family and gives 0.
int descent_linf_closed_form(const DescentSet& d);

// Candidate turning points: 0, every i in [1, n-2] where the descent
// indicator changes between i and i+1, and n.
std::vector<int> turning_points(const DescentSet& d);

// sum_{i<k} (a_{i+1} - a_i)(n - a_{i+1} + 1) over turning_points(d); 0 for a
// one-element family. This does not in general match the true Kendall
// diameter; it is kept as stated so that the disagreement can be measured.
std::int64_t descent_kendall_closed_form(const DescentSet& d);

// ---------------------------------------------------------------------------
// Hessenberg functions and h-inversion sets
// ---------------------------------------------------------------------------

class HessenbergFunction {
public:
  HessenbergFunction() = default;
  // Requires n >= 1, i <= h_i <= n and h nondecreasing; throws InvalidArgument.
  explicit HessenbergFunction(std::vector<int> h);

  // h_i = min(i + 1, n); h-inversion sets are then descent sets.
  static HessenbergFunction descent(int n);

  int size() const noexcept { return static_cast<int>(h_.size()); }
  int at(int i) const;
  const std::vector<int>& values() const noexcept { return h_; }
  bool admits(int i, int j) const { return i < j && j <= at(i); }

  // "h=2,3,4,5,5"
  std::string to_string() const;

  friend bool operator==(const HessenbergFunction&, const HessenbergFunction&) = default;

private:
  std::vector<int> h_;
};

struct HInversionSet {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;  // sorted, i < j <= h_i

  friend bool operator==(const HInversionSet&, const HInversionSet&) = default;
};

// Validates pairs against h and sorts them. Throws InvalidArgument.
HInversionSet make_h_inversion_set(const HessenbergFunction& h, std::vector<std::pair<int, int>> pairs);

// {(i, j) : i < j, sigma_i > sigma_j, j <= h_i}.
HInversionSet h_inversion_set(const Permutation& sigma, const HessenbergFunction& h);

// D_h(S; n) as a restriction graph: i -> j for (i, j) in S, j -> i for every
// other admitted pair.
RestrictionGraph hessenberg_graph(const HessenbergFunction& h, const HInversionSet& s);

// {sigma in S_n : Inv_h(sigma) = s} by filtering S_n, lexicographic.
std::vector<Permutation> hessenberg_family(const HessenbergFunction& h, const HInversionSet& s,
                                           int limit = kDefaultExhaustiveLimit);

struct InversionExtremes {
  Permutation top;     // maximum inversion number
  Permutation bottom;  // minimum inversion number
  bool top_unique = true;
  bool bottom_unique = true;
  std::int64_t spread() const { return inversion_number(top) - inversion_number(bottom); }
};

// First maximiser and minimiser in family order. Throws NotAdmissible on an
// empty family.
InversionExtremes inversion_extremes(std::span<const Permutation> family);

// l(x) - l(w) for the unique inversion-maximal x and inversion-minimal w of
// D_h(S; n). 0 for a singleton; NotAdmissible if empty; NonUniqueExtremes
// when either extreme is tied.
std::int64_t hessenberg_kendall_diameter(const HessenbergFunction& h, const HInversionSet& s,
                                         int limit = kDefaultExhaustiveLimit);

// ---------------------------------------------------------------------------
// Text forms
// ---------------------------------------------------------------------------

// "n=5; D={1,3}" or {"n":5,"descents":[1,3]}.
DescentSet parse_descent_set(std::string_view text);
// "h=2,3,4,5,5", "2,3,4,5,5" or {"h":[2,3,4,5,5]}.
HessenbergFunction parse_hessenberg(std::string_view text);
// Pairs as "i j" lines ('#' comments allowed) or {"pairs":[[i,j],...]}.
HInversionSet parse_h_inversion_set(const HessenbergFunction& h, std::string_view text);

}  // namespace permbound
