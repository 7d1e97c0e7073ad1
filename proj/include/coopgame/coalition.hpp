#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace coopgame {

using AgentId = int;

/// A coalition over agents {0..n-1}, encoded as a bitmask (bit i = agent i).
/// Coalitions are iterated in ascending mask order everywhere; witnesses and
/// tie-breaks refer to that order.
class Coalition {
 public:
  constexpr Coalition() = default;
  explicit constexpr Coalition(std::uint32_t mask) : mask_(mask) {}

  static constexpr Coalition empty() { return Coalition(0); }
  static constexpr Coalition grand(int n) { return Coalition((1u << n) - 1u); }
  static constexpr Coalition single(AgentId i) { return Coalition(1u << i); }

  constexpr std::uint32_t mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  constexpr bool is_empty() const { return mask_ == 0; }
  constexpr bool contains(AgentId i) const { return (mask_ >> i) & 1u; }
  constexpr bool subset_of(Coalition other) const { return (mask_ & ~other.mask_) == 0; }

  constexpr Coalition complement(int n) const {
    return Coalition(~mask_ & ((1u << n) - 1u));
  }
  constexpr Coalition operator|(Coalition o) const { return Coalition(mask_ | o.mask_); }
  constexpr Coalition operator&(Coalition o) const { return Coalition(mask_ & o.mask_); }
  constexpr Coalition minus(Coalition o) const { return Coalition(mask_ & ~o.mask_); }
  constexpr Coalition with(AgentId i) const { return Coalition(mask_ | (1u << i)); }
  constexpr Coalition without(AgentId i) const { return Coalition(mask_ & ~(1u << i)); }

  std::vector<AgentId> members() const {
    std::vector<AgentId> out;
    for (std::uint32_t m = mask_; m != 0; m &= m - 1)
      out.push_back(std::countr_zero(m));
    return out;
  }

  /// Set notation with 1-based agent labels, e.g. "{1,3}".
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (AgentId i : members()) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
    return s + "}";
  }

  friend constexpr bool operator==(Coalition, Coalition) = default;
  friend constexpr auto operator<=>(Coalition a, Coalition b) { return a.mask_ <=> b.mask_; }

 private:
  std::uint32_t mask_ = 0;
};

constexpr std::uint32_t coalition_count(int n) { return 1u << n; }

/// All submasks of `mask` in ascending order, including 0 and mask itself.
inline std::vector<std::uint32_t> submasks_ascending(std::uint32_t mask) {
  std::vector<std::uint32_t> out;
  std::uint32_t sub = 0;
  while (true) {
    out.push_back(sub);
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
  return out;
}

}  // namespace coopgame
