#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ghdist/error.hpp"

namespace ghdist {

/// Block label of each element; a restricted growth string (RGS) has
/// label[0] == 0 and label[i] <= 1 + max(label[0..i-1]).
using Rgs = std::vector<std::uint32_t>;

/// Partition of {0..n-1} into non-empty blocks, stored canonically: each
/// block sorted, blocks ordered by smallest element.
class Partition {
 public:
  Partition() = default;

  static Partition from_rgs(std::span<const std::uint32_t> rgs) {
    Partition p;
    for (std::size_t i = 0; i < rgs.size(); ++i) {
      if (rgs[i] > p.blocks_.size() || (i == 0 && rgs[i] != 0))
        throw Error(Errc::syntax_error, "not a restricted growth string at position " + std::to_string(i), {i});
      if (rgs[i] == p.blocks_.size()) p.blocks_.emplace_back();
      p.blocks_[rgs[i]].push_back(i);
    }
    p.n_ = rgs.size();
    return p;
  }

  /// Canonicalizes arbitrary blocks; they must be non-empty, disjoint and
  /// cover 0..n-1.
  static Partition from_blocks(std::size_t n, std::vector<std::vector<std::size_t>> blocks) {
    std::vector<int> seen(n, 0);
    for (auto& b : blocks) {
      if (b.empty()) throw Error(Errc::empty_subset, "partition block is empty");
      for (auto v : b) {
        if (v >= n) throw Error(Errc::index_out_of_range, "partition element " + std::to_string(v) + " out of range", {v});
        if (seen[v]++) throw Error(Errc::syntax_error, "element " + std::to_string(v) + " in two blocks", {v});
      }
      std::sort(b.begin(), b.end());
    }
    for (std::size_t v = 0; v < n; ++v)
      if (!seen[v]) throw Error(Errc::syntax_error, "element " + std::to_string(v) + " not covered", {v});
    std::sort(blocks.begin(), blocks.end());
    Partition p;
    p.n_ = n;
    p.blocks_ = std::move(blocks);
    return p;
  }

  std::size_t element_count() const noexcept { return n_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }

  Rgs rgs() const {
    Rgs r(n_);
    for (std::size_t b = 0; b < blocks_.size(); ++b)
      for (auto v : blocks_[b]) r[v] = static_cast<std::uint32_t>(b);
    return r;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<std::size_t>> blocks_;
};

/// Streams every partition of {0..n-1} into exactly m blocks as restricted
/// growth strings in lexicographic order, in O(n) memory.
///
/// An optional fixed prefix restricts the stream to strings starting with
/// it; the streams of all completable prefixes of a given length partition
/// the full stream, in order.
///
///   for (PartitionEnumerator e(n, m); !e.done(); e.advance()) use(e.rgs());
class PartitionEnumerator {
 public:
  PartitionEnumerator(std::size_t n, std::size_t m, std::span<const std::uint32_t> prefix = {})
      : n_(n), m_(m), fixed_(prefix.size()), label_(n), prefix_max_(n) {
    if (m < 1 || m > n)
      throw Error(Errc::invalid_m, "block count " + std::to_string(m) + " outside 1.." + std::to_string(n), {m, n});
    if (prefix.size() > n) throw Error(Errc::syntax_error, "prefix longer than the ground set");
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      const std::uint32_t bound = i == 0 ? 0 : prefix_max_[i - 1] + 1;
      if (prefix[i] > bound || prefix[i] >= m) {
        done_ = true;
        return;
      }
      label_[i] = prefix[i];
      prefix_max_[i] = i == 0 ? prefix[i] : std::max(prefix_max_[i - 1], prefix[i]);
    }
    const std::size_t start = std::max<std::size_t>(fixed_, 1);
    if (fixed_ == 0) label_[0] = prefix_max_[0] = 0;
    if (needed_after(start - 1) > n_ - start) {
      done_ = true;
      return;
    }
    fill_from(start);
  }

  bool done() const noexcept { return done_; }
  std::span<const std::uint32_t> rgs() const noexcept { return label_; }

  void advance() {
    const std::size_t lo = std::max<std::size_t>(fixed_, 1);
    for (std::size_t i = n_; i-- > lo;) {
      const std::uint32_t cap = std::min<std::uint32_t>(prefix_max_[i - 1] + 1, static_cast<std::uint32_t>(m_ - 1));
      if (label_[i] >= cap) continue;
      const std::uint32_t next = label_[i] + 1;
      const std::uint32_t top = std::max(prefix_max_[i - 1], next);
      if ((m_ - 1) - top > n_ - 1 - i) continue;
      label_[i] = next;
      prefix_max_[i] = top;
      fill_from(i + 1);
      return;
    }
    done_ = true;
  }

 private:
  std::size_t needed_after(std::size_t i) const { return (m_ - 1) - prefix_max_[i]; }

  // Lexicographically smallest completion: zeros, then the new labels
  // needed to reach m blocks packed at the end.
  void fill_from(std::size_t start) {
    for (std::size_t j = start; j < n_; ++j) {
      const std::size_t slots = n_ - j;
      if (needed_after(j - 1) >= slots)
        label_[j] = prefix_max_[j - 1] + 1;
      else
        label_[j] = 0;
      prefix_max_[j] = std::max(prefix_max_[j - 1], label_[j]);
    }
  }

  std::size_t n_;
  std::size_t m_;
  std::size_t fixed_;
  Rgs label_;
  Rgs prefix_max_;
  bool done_ = false;
};

/// All RGS prefixes of the given length that extend to a partition of
/// {0..n-1} into exactly m blocks, in lexicographic order.
inline std::vector<Rgs> completable_prefixes(std::size_t n, std::size_t m, std::size_t length) {
  if (m < 1 || m > n)
    throw Error(Errc::invalid_m, "block count " + std::to_string(m) + " outside 1.." + std::to_string(n), {m, n});
  length = std::min(length, n);
  std::vector<Rgs> out;
  Rgs cur;
  auto rec = [&](auto&& self, std::uint32_t top) -> void {
    const std::size_t pos = cur.size();
    if (pos == length) {
      if ((m - 1) - top <= n - pos) out.push_back(cur);
      return;
    }
    const std::uint32_t cap = pos == 0 ? 0 : std::min<std::uint32_t>(top + 1, static_cast<std::uint32_t>(m - 1));
    for (std::uint32_t c = 0; c <= cap; ++c) {
      cur.push_back(c);
      self(self, std::max(top, c));
      cur.pop_back();
    }
  };
  if (length == 0) return {Rgs{}};
  rec(rec, 0);
  return out;
}

}  // namespace ghdist
