#pragma once

// Reduced words for the longest element w0.
//
// Positions k are 1-based. k1_successor returns the literal index N+1 when a
// letter does not recur.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lusztig/cartan.hpp"

namespace lusztig {

using Letters = std::vector<int>;

inline Letters parse_word(std::string_view text) {
  Letters out;
  for (Int x : parse_int_list(text)) out.push_back(static_cast<int>(x));
  return out;
}

inline std::string format_word(std::span<const int> letters) {
  std::string s;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(letters[i]);
  }
  return s;
}

/// beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}) for every prefix of the letters.
inline std::vector<RootVec> beta_roots(const CartanSpec& cartan, std::span<const int> letters) {
  std::vector<RootVec> out;
  out.reserve(letters.size());
  for (std::size_t k = 0; k < letters.size(); ++k)
    out.push_back(apply_word(cartan, letters.first(k), cartan.simple_root(letters[k])));
  return out;
}

inline bool is_reduced_w0(const CartanSpec& cartan, std::span<const int> letters) {
  for (int x : letters) cartan.check_letter(x);
  const auto n_pos = positive_roots(cartan).size();
  if (letters.size() != n_pos) return false;
  std::set<RootVec> seen;
  for (const auto& b : beta_roots(cartan, letters))
    if (!b.all_nonnegative() || !seen.insert(b).second) return false;
  return true;
}

/// A reduced expression for w0 bound to its Cartan data.
class ReducedWord {
 public:
  ReducedWord(CartanSpec cartan, Letters letters) : cartan_(std::move(cartan)), letters_(std::move(letters)) {
    if (!is_reduced_w0(cartan_, letters_))
      throw NotReducedError("(" + format_word(letters_) + ") is not a reduced expression for w0");
  }

  [[nodiscard]] const CartanSpec& cartan() const noexcept { return cartan_; }
  [[nodiscard]] const Letters& letters() const noexcept { return letters_; }
  [[nodiscard]] int length() const noexcept { return static_cast<int>(letters_.size()); }
  [[nodiscard]] int rank() const noexcept { return cartan_.rank(); }
  /// Letter i_k, 1-based position.
  [[nodiscard]] int letter(int k) const {
    check_position(k);
    return letters_[static_cast<std::size_t>(k - 1)];
  }
  /// Letters i_1..i_m as a span (m may be 0).
  [[nodiscard]] std::span<const int> prefix(int m) const {
    return std::span<const int>(letters_).first(static_cast<std::size_t>(m));
  }
  /// Letters i_from..i_to inclusive (empty when from > to).
  [[nodiscard]] std::span<const int> segment(int from, int to) const {
    if (from > to) return {};
    return std::span<const int>(letters_).subspan(static_cast<std::size_t>(from - 1),
                                                   static_cast<std::size_t>(to - from + 1));
  }

  void check_position(int k) const {
    if (k < 1 || k > length())
      throw IndexRangeError("position " + std::to_string(k) + " out of range 1.." +
                            std::to_string(length()));
  }

  friend bool operator==(const ReducedWord& a, const ReducedWord& b) {
    return a.letters_ == b.letters_ && a.cartan_ == b.cartan_;
  }

 private:
  CartanSpec cartan_;
  Letters letters_;
};

inline std::vector<RootVec> beta_roots(const ReducedWord& word) {
  return beta_roots(word.cartan(), word.letters());
}

/// k(1): the next position after k carrying the same letter, or N+1.
inline int k1_successor(const ReducedWord& word, int k) {
  word.check_position(k);
  const int n = word.length();
  for (int j = k + 1; j <= n; ++j)
    if (word.letter(j) == word.letter(k)) return j;
  return n + 1;
}

/// Lexicographic depth-first enumeration of the reduced words of w0.
///
/// The state is w(rho) for the suffix w still to be spelled; i is a left
/// descent of w exactly when <w(rho), alpha_i^vee> < 0, and the walk ends at
/// rho. Each call to next() yields one word; the object is single-consumer.
class ReducedWordEnumerator {
 public:
  explicit ReducedWordEnumerator(CartanSpec cartan, std::optional<std::size_t> limit = std::nullopt)
      : cartan_(std::move(cartan)), limit_(limit) {
    n_ = positive_roots(cartan_).size();  // also rejects non-finite types
    stack_.push_back(Frame{-cartan_.rho(), 1});
  }

  std::optional<Letters> next() {
    if (limit_ && emitted_ >= *limit_) return std::nullopt;
    while (!stack_.empty()) {
      Frame& top = stack_.back();
      if (prefix_.size() == n_) {
        Letters out = prefix_;
        pop();
        ++emitted_;
        return out;
      }
      int letter = top.next_letter;
      while (letter <= cartan_.rank() && top.state.at(letter) >= 0) ++letter;
      if (letter > cartan_.rank()) {
        pop();
        continue;
      }
      top.next_letter = letter + 1;
      WeightVec child = reflect(cartan_, letter, top.state);
      prefix_.push_back(letter);
      stack_.push_back(Frame{std::move(child), 1});
    }
    return std::nullopt;
  }

 private:
  struct Frame {
    WeightVec state;
    int next_letter;
  };
  void pop() {
    stack_.pop_back();
    if (!prefix_.empty()) prefix_.pop_back();
  }

  CartanSpec cartan_;
  std::optional<std::size_t> limit_;
  std::size_t n_ = 0;
  std::size_t emitted_ = 0;
  std::vector<Frame> stack_;
  Letters prefix_;
};

inline std::vector<Letters> enumerate_reduced_words(const CartanSpec& cartan,
                                                    std::optional<std::size_t> limit = std::nullopt) {
  std::vector<Letters> out;
  ReducedWordEnumerator e(cartan, limit);
  while (auto w = e.next()) out.push_back(std::move(*w));
  return out;
}

/// One reduced word for w0: a walk that picks a uniformly random left descent
/// at every step.
template <class Rng>
Letters random_reduced_word(const CartanSpec& cartan, Rng& rng) {
  WeightVec state = -cartan.rho();
  Letters out;
  std::vector<int> descents;
  for (;;) {
    descents.clear();
    for (int i = 1; i <= cartan.rank(); ++i)
      if (state.at(i) < 0) descents.push_back(i);
    if (descents.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, descents.size() - 1);
    const int letter = descents[pick(rng)];
    out.push_back(letter);
    state = reflect(cartan, letter, state);
  }
  return out;
}

/// `count` distinct reduced words drawn with a seeded walk, returned in
/// lexicographic order. Stops early if `max_attempts` draws pass without
/// reaching the count (small groups).
inline std::vector<Letters> sample_reduced_words(const CartanSpec& cartan, std::size_t count, std::uint64_t seed,
                                                 std::size_t max_attempts = 0) {
  if (max_attempts == 0) max_attempts = 50 * count + 1000;
  std::mt19937_64 rng(seed);
  std::set<Letters> found;
  for (std::size_t attempt = 0; attempt < max_attempts && found.size() < count; ++attempt)
    found.insert(random_reduced_word(cartan, rng));
  return {found.begin(), found.end()};
}

/// First reduced word of w0 in lexicographic order (greedy smallest descent).
inline Letters longest_word(const CartanSpec& cartan) {
  ReducedWordEnumerator e(cartan, 1);
  return *e.next();
}

/// lambda^* = -w0(lambda).
inline WeightVec weight_star(const CartanSpec& cartan, const WeightVec& lambda) {
  cartan.check_rank(lambda);
  const Letters w0 = longest_word(cartan);
  return -apply_word(cartan, w0, lambda);
}

inline bool is_dominant(const WeightVec& lambda) { return lambda.all_nonnegative(); }

}  // namespace lusztig
