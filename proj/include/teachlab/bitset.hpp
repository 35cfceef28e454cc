#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace teachlab {

/// Instances are numbered 1..n; instance x lives at bit position x-1.
using Instance = int;

/**
 * Fixed-size bit vector. Sizes up to 64 keep their single word inline;
 * larger sizes use a multi-word layout. Bits beyond size() are always zero,
 * so equality and hashing can work word by word.
 *
 * The tag parameter only separates otherwise identical types (a concept
 * labeling vs. a set of instances) so they cannot be mixed by accident.
 */
template <class Tag>
class BasicBitSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  BasicBitSet() = default;

  explicit BasicBitSet(int size) : size_(size) {
    if (size < 0) throw std::invalid_argument("bit set size must be nonnegative");
    if (size > kWordBits) heap_.assign(words_for(size), 0);
  }

  /// Builds a set over [n] from 1-based instance numbers.
  static BasicBitSet from_instances(int n, std::initializer_list<Instance> xs) {
    return from_instances(n, std::vector<Instance>(xs));
  }

  static BasicBitSet from_instances(int n, const std::vector<Instance>& xs) {
    BasicBitSet s(n);
    for (Instance x : xs) s.insert(x);
    return s;
  }

  /// Parses a 0/1 string; character j (0-based) is position j.
  static BasicBitSet from_string(std::string_view bits) {
    BasicBitSet s(static_cast<int>(bits.size()));
    for (int j = 0; j < s.size_; ++j) {
      char c = bits[static_cast<std::size_t>(j)];
      if (c == '1')
        s.set(j);
      else if (c != '0')
        throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
    return s;
  }

  static BasicBitSet full(int size) {
    BasicBitSet s(size);
    for (int w = 0; w < s.word_count(); ++w) s.data()[w] = ~Word{0};
    s.trim();
    return s;
  }

  /// Reinterprets the same bits under another tag.
  template <class OtherTag>
  BasicBitSet<OtherTag> retag() const {
    BasicBitSet<OtherTag> out(size_);
    for (int w = 0; w < word_count(); ++w) out.data()[w] = data()[w];
    return out;
  }

  int size() const { return size_; }
  int word_count() const { return words_for(size_); }
  const Word* data() const { return size_ <= kWordBits ? &inline_ : heap_.data(); }
  Word* data() { return size_ <= kWordBits ? &inline_ : heap_.data(); }

  bool test(int pos) const { return (data()[pos / kWordBits] >> (pos % kWordBits)) & 1U; }
  void set(int pos) { data()[pos / kWordBits] |= Word{1} << (pos % kWordBits); }
  void set(int pos, bool value) { value ? set(pos) : reset(pos); }
  void reset(int pos) { data()[pos / kWordBits] &= ~(Word{1} << (pos % kWordBits)); }
  void flip(int pos) { data()[pos / kWordBits] ^= Word{1} << (pos % kWordBits); }

  // 1-based instance view.
  bool contains(Instance x) const { return test(checked(x)); }
  void insert(Instance x) { set(checked(x)); }
  void erase(Instance x) { reset(checked(x)); }

  int count() const {
    int c = 0;
    for (int w = 0; w < word_count(); ++w) c += std::popcount(data()[w]);
    return c;
  }

  bool none() const {
    for (int w = 0; w < word_count(); ++w)
      if (data()[w] != 0) return false;
    return true;
  }
  bool any() const { return !none(); }

  /// First set position at or after `from`, or size() when there is none.
  int find_next(int from) const {
    if (from >= size_) return size_;
    int w = from / kWordBits;
    Word cur = data()[w] & (~Word{0} << (from % kWordBits));
    const int nw = word_count();
    while (true) {
      if (cur != 0) return w * kWordBits + std::countr_zero(cur);
      if (++w >= nw) return size_;
      cur = data()[w];
    }
  }
  int find_first() const { return find_next(0); }

  /// Last set position, or -1 when empty.
  int find_last() const {
    for (int w = word_count() - 1; w >= 0; --w) {
      if (data()[w] != 0) return w * kWordBits + (kWordBits - 1 - std::countl_zero(data()[w]));
    }
    return -1;
  }

  /// Calls f(pos) for every set position in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (int w = 0; w < word_count(); ++w) {
      Word cur = data()[w];
      while (cur != 0) {
        f(w * kWordBits + std::countr_zero(cur));
        cur &= cur - 1;
      }
    }
  }

  /// Members as ascending 1-based instances.
  std::vector<Instance> instances() const {
    std::vector<Instance> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int pos) { out.push_back(pos + 1); });
    return out;
  }

  std::string to_string() const {
    std::string s(static_cast<std::size_t>(size_), '0');
    for_each([&](int pos) { s[static_cast<std::size_t>(pos)] = '1'; });
    return s;
  }

  BasicBitSet& operator|=(const BasicBitSet& o) {
    same_size(o);
    for (int w = 0; w < word_count(); ++w) data()[w] |= o.data()[w];
    return *this;
  }
  BasicBitSet& operator&=(const BasicBitSet& o) {
    same_size(o);
    for (int w = 0; w < word_count(); ++w) data()[w] &= o.data()[w];
    return *this;
  }
  BasicBitSet& operator^=(const BasicBitSet& o) {
    same_size(o);
    for (int w = 0; w < word_count(); ++w) data()[w] ^= o.data()[w];
    return *this;
  }
  /// Removes every position set in o.
  BasicBitSet& subtract(const BasicBitSet& o) {
    same_size(o);
    for (int w = 0; w < word_count(); ++w) data()[w] &= ~o.data()[w];
    return *this;
  }

  friend BasicBitSet operator|(BasicBitSet a, const BasicBitSet& b) { return a |= b; }
  friend BasicBitSet operator&(BasicBitSet a, const BasicBitSet& b) { return a &= b; }
  friend BasicBitSet operator^(BasicBitSet a, const BasicBitSet& b) { return a ^= b; }
  BasicBitSet operator~() const {
    BasicBitSet out(*this);
    for (int w = 0; w < word_count(); ++w) out.data()[w] = ~out.data()[w];
    out.trim();
    return out;
  }

  bool intersects(const BasicBitSet& o) const {
    for (int w = 0; w < word_count(); ++w)
      if (data()[w] & o.data()[w]) return true;
    return false;
  }
  bool is_subset_of(const BasicBitSet& o) const {
    for (int w = 0; w < word_count(); ++w)
      if (data()[w] & ~o.data()[w]) return false;
    return true;
  }

  friend bool operator==(const BasicBitSet& a, const BasicBitSet& b) {
    if (a.size_ != b.size_) return false;
    for (int w = 0; w < a.word_count(); ++w)
      if (a.data()[w] != b.data()[w]) return false;
    return true;
  }

  /// Orders by size, then by the position strings read left to right.
  friend bool operator<(const BasicBitSet& a, const BasicBitSet& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    for (int w = 0; w < a.word_count(); ++w) {
      Word x = a.data()[w], y = b.data()[w];
      if (x != y) {
        Word low = (x ^ y) & (~(x ^ y) + 1);
        return (y & low) != 0;
      }
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(size_) * 0x9E3779B97F4A7C15ULL;
    for (int w = 0; w < word_count(); ++w) {
      h ^= data()[w] + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

 private:
  static int words_for(int size) { return size <= kWordBits ? 1 : (size + kWordBits - 1) / kWordBits; }

  int checked(Instance x) const {
    if (x < 1 || x > size_)
      throw std::out_of_range("instance " + std::to_string(x) + " outside [1," + std::to_string(size_) + "]");
    return x - 1;
  }

  void same_size(const BasicBitSet& o) const {
    if (o.size_ != size_) throw std::invalid_argument("bit set size mismatch");
  }

  void trim() {
    int rem = size_ % kWordBits;
    if (size_ == 0) {
      inline_ = 0;
    } else if (rem != 0) {
      data()[word_count() - 1] &= (Word{1} << rem) - 1;
    }
  }

  int size_ = 0;
  Word inline_ = 0;
  std::vector<Word> heap_;
};

struct BitSetHash {
  template <class Tag>
  std::size_t operator()(const BasicBitSet<Tag>& s) const {
    return s.hash();
  }
};

}  // namespace teachlab
