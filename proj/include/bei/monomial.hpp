#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "bei/common.hpp"

// Squarefree monomials (as variable supports) and squarefree monomial
// ideals with antichain generator lists. Variable indices follow the
// convention x_i -> i-1, y_i -> n+i-1 in a ring of 2n variables.

namespace bei {

using SquarefreeMonomial = VarSet;

inline int var_x(int i, int n) {
  (void)n;
  return i - 1;
}
inline int var_y(int i, int n) { return n + i - 1; }

namespace detail {

inline bool monomial_less(const VarSet& a, const VarSet& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return a.to_list() < b.to_list();
}

}  // namespace detail

class MonomialIdeal {
 public:
  MonomialIdeal() : nvars_(0) {}

  MonomialIdeal(int nvars, std::vector<VarSet> gens) : nvars_(nvars) {
    if (nvars < 0 || nvars > kMaxVariables)
      throw size_limit_error("variable count out of range (cap " +
                             std::to_string(kMaxVariables) + ")");
    gens_ = minimalize_list(std::move(gens));
  }

  static MonomialIdeal zero(int nvars) { return MonomialIdeal(nvars, {}); }

  int nvars() const { return nvars_; }
  bool is_zero() const { return gens_.empty(); }
  const std::vector<VarSet>& generators() const { return gens_; }

  bool operator==(const MonomialIdeal&) const = default;

  // I + <x_v>
  MonomialIdeal plus_variable(int v) const {
    auto gens = gens_;
    gens.push_back(VarSet::single(v));
    return MonomialIdeal(nvars_, std::move(gens));
  }

  // I + <x_v : v in vars> as degree-1 generators
  MonomialIdeal plus_variables(VarSet vars) const {
    auto gens = gens_;
    for (int v : vars.to_list()) {
      if (v >= nvars_) throw error("variable index out of range");
      gens.push_back(VarSet::single(v));
    }
    return MonomialIdeal(nvars_, std::move(gens));
  }

  // I : x_v  (squarefree colon: drop v from generators containing it)
  MonomialIdeal colon_variable(int v) const {
    auto gens = gens_;
    VarSet x = VarSet::single(v);
    for (auto& m : gens) m = m.minus(x);
    return MonomialIdeal(nvars_, std::move(gens));
  }

 private:
  // Keep only the inclusion-minimal supports; an empty support means the
  // unit ideal, which never arises from our constructions but is still
  // handled (it minimalizes to the single unit generator).
  static std::vector<VarSet> minimalize_list(std::vector<VarSet> gens) {
    std::sort(gens.begin(), gens.end(), detail::monomial_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<VarSet> keep;
    for (const auto& m : gens) {
      bool divisible = false;
      for (const auto& k : keep)
        if (k.subset_of(m)) {
          divisible = true;
          break;
        }
      if (!divisible) keep.push_back(m);
    }
    return keep;
  }

  int nvars_;
  std::vector<VarSet> gens_;
};

inline MonomialIdeal minimalize(const MonomialIdeal& ideal) {
  return ideal;  // the representation is always minimal
}

// Pairwise lcm of generators; correct for monomial ideals.
inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars())
    throw error("intersect: variable count mismatch");
  std::vector<VarSet> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& ma : a.generators())
    for (const auto& mb : b.generators()) gens.push_back(ma | mb);
  return MonomialIdeal(a.nvars(), std::move(gens));
}

// Monomial as a readable product, e.g. "x1*y2" in a ring of 2n variables.
inline std::string monomial_str(const VarSet& m, int n) {
  if (m.empty()) return "1";
  std::string out;
  for (int v : m.to_list()) {
    if (!out.empty()) out += "*";
    out += (v < n) ? "x" + std::to_string(v + 1)
                   : "y" + std::to_string(v - n + 1);
  }
  return out;
}

}  // namespace bei
