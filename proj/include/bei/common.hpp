#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Shared scalar types, error hierarchy and the two bitset carriers used
// throughout: VertexSet over graph vertices (labels 1..n, n <= 64) and
// VarSet over ring variables (indices 0..2n-1, 2n <= 128).

namespace bei {

using Int = boost::multiprecision::cpp_int;

inline constexpr int kMaxVertices = 64;
inline constexpr int kMaxVariables = 128;

struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input outside the supported desk-scale bounds (vertex/variable caps,
// oracle matrix guards).
struct size_limit_error : error {
  explicit size_limit_error(const std::string& msg) : error(msg) {}
};

// Malformed DSL or JSON input; `position` is a 0-based offset when known.
struct parse_error : error {
  parse_error(const std::string& msg, std::size_t position)
      : error(msg + " at position " + std::to_string(position)),
        position(position) {}
  std::size_t position;
};

// A realization request that provably has no solution.
struct infeasible_error : error {
  explicit infeasible_error(const std::string& msg) : error(msg) {}
};

// Reduction of a series with zero numerator (zero ring).
struct zero_quotient_error : error {
  explicit zero_quotient_error(const std::string& msg) : error(msg) {}
};

// No composition rule applies to an expression node.
struct rule_error : error {
  explicit rule_error(const std::string& msg) : error(msg) {}
};

// ---------------------------------------------------------------------------
// VertexSet: subset of {1, .., n}, n <= 64. Bit v-1 encodes vertex v.

struct VertexSet {
  std::uint64_t bits = 0;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t raw) : bits(raw) {}

  static VertexSet all(int n) {
    return VertexSet(n == 64 ? ~0ull : ((1ull << n) - 1));
  }
  static VertexSet single(int v) { return VertexSet(1ull << (v - 1)); }

  bool contains(int v) const { return (bits >> (v - 1)) & 1u; }
  void add(int v) { bits |= 1ull << (v - 1); }
  void remove(int v) { bits &= ~(1ull << (v - 1)); }
  int count() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  int min_vertex() const { return std::countr_zero(bits) + 1; }

  bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
  VertexSet operator|(VertexSet o) const { return VertexSet(bits | o.bits); }
  VertexSet operator&(VertexSet o) const { return VertexSet(bits & o.bits); }
  VertexSet minus(VertexSet o) const { return VertexSet(bits & ~o.bits); }
  bool operator==(const VertexSet&) const = default;
  auto operator<=>(const VertexSet&) const = default;

  std::vector<int> to_list() const {
    std::vector<int> out;
    for (std::uint64_t m = bits; m;) {
      int b = std::countr_zero(m);
      out.push_back(b + 1);
      m &= m - 1;
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// VarSet: subset of {0, .., 2n-1}, used as a squarefree monomial support.

struct VarSet {
  std::array<std::uint64_t, 2> w{0, 0};

  constexpr VarSet() = default;

  static VarSet single(int v) {
    VarSet s;
    s.w[v >> 6] = 1ull << (v & 63);
    return s;
  }

  bool contains(int v) const { return (w[v >> 6] >> (v & 63)) & 1u; }
  void add(int v) { w[v >> 6] |= 1ull << (v & 63); }
  void remove(int v) { w[v >> 6] &= ~(1ull << (v & 63)); }
  int count() const { return std::popcount(w[0]) + std::popcount(w[1]); }
  bool empty() const { return w[0] == 0 && w[1] == 0; }

  bool subset_of(const VarSet& o) const {
    return (w[0] & ~o.w[0]) == 0 && (w[1] & ~o.w[1]) == 0;
  }
  bool intersects(const VarSet& o) const {
    return (w[0] & o.w[0]) != 0 || (w[1] & o.w[1]) != 0;
  }
  VarSet operator|(const VarSet& o) const {
    VarSet s;
    s.w[0] = w[0] | o.w[0];
    s.w[1] = w[1] | o.w[1];
    return s;
  }
  VarSet minus(const VarSet& o) const {
    VarSet s;
    s.w[0] = w[0] & ~o.w[0];
    s.w[1] = w[1] & ~o.w[1];
    return s;
  }
  bool operator==(const VarSet&) const = default;
  auto operator<=>(const VarSet&) const = default;

  std::vector<int> to_list() const {
    std::vector<int> out;
    for (int blk = 0; blk < 2; ++blk)
      for (std::uint64_t m = w[blk]; m;) {
        int b = std::countr_zero(m);
        out.push_back(blk * 64 + b);
        m &= m - 1;
      }
    return out;
  }
};

// ---------------------------------------------------------------------------
// Exact binomial coefficients.

inline Int binomial(const Int& n, int k) {
  if (k < 0) return 0;
  Int num = 1, den = 1;
  for (int i = 1; i <= k; ++i) {
    num *= n - (k - i);
    den *= i;
  }
  if (den == 0) return 0;
  return num / den;  // always exact
}

inline Int binomial(int n, int k) { return binomial(Int(n), k); }

}  // namespace bei
