#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

namespace lexhit {

// Dense vertex index; index i precedes index j in the vertex order exactly
// when i < j.
using VertexId = std::uint32_t;

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

// Subset of a fixed universe {0, ..., n-1}. One inline word covers universes
// of up to 64 vertices; larger universes spill into a heap-allocated tail.
// The representation is invisible in the API and all operations are linear
// in the universe word count.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(std::size_t universe_size) : n_(universe_size) {
    if (n_ > kWordBits) tail_.assign(word_count() - 1, 0);
  }

  VertexSet(std::size_t universe_size, std::initializer_list<VertexId> members)
      : VertexSet(universe_size) {
    for (VertexId v : members) insert(v);
  }

  static VertexSet full(std::size_t universe_size) {
    VertexSet s(universe_size);
    const std::size_t words = s.word_count();
    for (std::size_t w = 0; w < words; ++w) s.word(w) = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  std::size_t universe_size() const { return n_; }

  bool contains(VertexId v) const {
    return v < n_ && ((word(v >> kWordShift) >> (v & kWordMask)) & 1u) != 0;
  }

  void insert(VertexId v) {
    require_member_range(v);
    word(v >> kWordShift) |= std::uint64_t{1} << (v & kWordMask);
  }

  void erase(VertexId v) {
    require_member_range(v);
    word(v >> kWordShift) &= ~(std::uint64_t{1} << (v & kWordMask));
  }

  void clear() {
    head_ = 0;
    for (auto& w : tail_) w = 0;
  }

  std::size_t count() const {
    std::size_t c = std::popcount(head_);
    for (std::uint64_t w : tail_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    if (head_ != 0) return false;
    for (std::uint64_t w : tail_)
      if (w != 0) return false;
    return true;
  }

  // Smallest member, or kNoVertex for the empty set.
  VertexId first() const {
    const std::size_t words = word_count();
    for (std::size_t w = 0; w < words; ++w) {
      if (word(w) != 0)
        return static_cast<VertexId>(w * kWordBits + std::countr_zero(word(w)));
    }
    return kNoVertex;
  }

  VertexSet& operator|=(const VertexSet& o) {
    require_same_universe(o);
    head_ |= o.head_;
    for (std::size_t i = 0; i < tail_.size(); ++i) tail_[i] |= o.tail_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    require_same_universe(o);
    head_ &= o.head_;
    for (std::size_t i = 0; i < tail_.size(); ++i) tail_[i] &= o.tail_[i];
    return *this;
  }

  // Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    require_same_universe(o);
    head_ &= ~o.head_;
    for (std::size_t i = 0; i < tail_.size(); ++i) tail_[i] &= ~o.tail_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool intersects(const VertexSet& o) const {
    require_same_universe(o);
    if ((head_ & o.head_) != 0) return true;
    for (std::size_t i = 0; i < tail_.size(); ++i)
      if ((tail_[i] & o.tail_[i]) != 0) return true;
    return false;
  }

  bool is_subset_of(const VertexSet& o) const {
    require_same_universe(o);
    if ((head_ & ~o.head_) != 0) return false;
    for (std::size_t i = 0; i < tail_.size(); ++i)
      if ((tail_[i] & ~o.tail_[i]) != 0) return false;
    return true;
  }

  bool operator==(const VertexSet& o) const {
    return n_ == o.n_ && head_ == o.head_ && tail_ == o.tail_;
  }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  // Size of the intersection, without materializing it.
  std::size_t intersection_count(const VertexSet& o) const {
    require_same_universe(o);
    std::size_t c = std::popcount(head_ & o.head_);
    for (std::size_t i = 0; i < tail_.size(); ++i)
      c += std::popcount(tail_[i] & o.tail_[i]);
    return c;
  }

  template <typename F>
  void for_each(F&& f) const {
    const std::size_t words = word_count();
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = word(w);
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<VertexId>(w * kWordBits + b));
        bits &= bits - 1;
      }
    }
  }

  std::vector<VertexId> elements() const {
    std::vector<VertexId> out;
    out.reserve(count());
    for_each([&](VertexId v) { out.push_back(v); });
    return out;
  }

  // Same members over a larger universe.
  VertexSet padded(std::size_t universe_size) const {
    if (universe_size < n_)
      throw std::invalid_argument("VertexSet: cannot shrink universe");
    VertexSet out(universe_size);
    out.head_ = head_;
    for (std::size_t i = 0; i < tail_.size(); ++i) out.tail_[i] = tail_[i];
    return out;
  }

  friend std::strong_ordering lex_compare(const VertexSet& s, const VertexSet& t);

 private:
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t kWordShift = 6;
  static constexpr std::size_t kWordMask = 63;

  std::size_t word_count() const { return (n_ + kWordBits - 1) / kWordBits; }

  std::uint64_t& word(std::size_t i) { return i == 0 ? head_ : tail_[i - 1]; }
  std::uint64_t word(std::size_t i) const { return i == 0 ? head_ : tail_[i - 1]; }

  // Clear bits at positions >= n_ in the top word.
  void trim() {
    if (n_ == 0) {
      head_ = 0;
      return;
    }
    const std::size_t used = n_ & kWordMask;
    if (used != 0) word(word_count() - 1) &= (std::uint64_t{1} << used) - 1;
  }

  void require_member_range(VertexId v) const {
    if (v >= n_) throw std::out_of_range("VertexSet: vertex index out of range");
  }

  void require_same_universe(const VertexSet& o) const {
    if (n_ != o.n_)
      throw std::invalid_argument("VertexSet: mismatched universe sizes");
  }

  std::size_t n_ = 0;
  std::uint64_t head_ = 0;
  std::vector<std::uint64_t> tail_;
};

// Lexicographic order induced by the vertex order: S precedes T exactly when
// the smallest-index element of S delta T belongs to S. Total order on the
// subsets of one universe.
inline std::strong_ordering lex_compare(const VertexSet& s, const VertexSet& t) {
  s.require_same_universe(t);
  const std::size_t words = s.word_count();
  for (std::size_t w = 0; w < words; ++w) {
    const std::uint64_t diff = s.word(w) ^ t.word(w);
    if (diff != 0) {
      const std::uint64_t lowest = diff & (~diff + 1);
      return (s.word(w) & lowest) != 0 ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

struct LexLess {
  bool operator()(const VertexSet& a, const VertexSet& b) const {
    return lex_compare(a, b) == std::strong_ordering::less;
  }
};

}  // namespace lexhit
