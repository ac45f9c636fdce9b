#pragma once

// Cartan matrices and exact reflection arithmetic.
//
// Convention: a(i, j) = <alpha_j, alpha_i^vee>. Weights are stored in the
// fundamental-weight basis, roots in the simple-root basis and coroots in the
// simple-coroot basis, so <varpi_l, alpha_r^vee> = delta_lr and
// alpha_j = sum_i a(i, j) varpi_i. Letters are 1-based.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lusztig/error.hpp"
#include "lusztig/int_matrix.hpp"

namespace lusztig {

struct WeightTag {};
struct CorootTag {};
struct RootTag {};

/// Integer coordinate vector in a fixed basis; the tag names the basis.
template <class Tag>
class Coords {
 public:
  Coords() = default;
  explicit Coords(std::size_t rank) : v_(rank, 0) {}
  explicit Coords(IntVec v) : v_(std::move(v)) {}
  Coords(std::initializer_list<Int> v) : v_(v) {}

  static Coords basis(std::size_t rank, int letter) {
    Coords c(rank);
    c.v_.at(static_cast<std::size_t>(letter - 1)) = 1;
    return c;
  }

  [[nodiscard]] std::size_t size() const noexcept { return v_.size(); }
  [[nodiscard]] const IntVec& coords() const noexcept { return v_; }
  // 1-based coordinate access, matching letters.
  [[nodiscard]] Int at(int letter) const { return v_.at(static_cast<std::size_t>(letter - 1)); }
  Int& operator[](std::size_t i) { return v_[i]; }
  Int operator[](std::size_t i) const { return v_[i]; }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](Int x) { return x == 0; });
  }
  [[nodiscard]] bool all_nonnegative() const {
    return std::all_of(v_.begin(), v_.end(), [](Int x) { return x >= 0; });
  }
  [[nodiscard]] bool all_nonpositive() const {
    return std::all_of(v_.begin(), v_.end(), [](Int x) { return x <= 0; });
  }

  Coords& operator+=(const Coords& o) {
    check_same(o);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
  }
  Coords& operator-=(const Coords& o) {
    check_same(o);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
  }
  friend Coords operator+(Coords a, const Coords& b) { return a += b; }
  friend Coords operator-(Coords a, const Coords& b) { return a -= b; }
  friend Coords operator-(Coords a) {
    for (auto& x : a.v_) x = -x;
    return a;
  }
  friend Coords operator*(Int s, Coords a) {
    for (auto& x : a.v_) x *= s;
    return a;
  }
  friend bool operator==(const Coords&, const Coords&) = default;
  friend auto operator<=>(const Coords&, const Coords&) = default;

 private:
  void check_same(const Coords& o) const {
    if (o.v_.size() != v_.size())
      throw RankMismatchError("coordinate vectors of different rank: " +
                              std::to_string(v_.size()) + " vs " + std::to_string(o.v_.size()));
  }
  IntVec v_;
};

using WeightVec = Coords<WeightTag>;
using CorootVec = Coords<CorootTag>;
using RootVec = Coords<RootTag>;

class CartanSpec {
 public:
  /// Validates the generalized-Cartan-matrix axioms; finiteness is only
  /// checked by positive_roots().
  explicit CartanSpec(IntMatrix a, std::string label = {}) : a_(std::move(a)), label_(std::move(label)) {
    if (!a_.is_square() || a_.rows() == 0)
      throw InvalidCartanError("Cartan matrix must be square and non-empty");
    const std::size_t n = a_.rows();
    for (std::size_t i = 0; i < n; ++i) {
      if (a_(i, i) != 2)
        throw InvalidCartanError("diagonal entry a(" + std::to_string(i + 1) + "," +
                                 std::to_string(i + 1) + ") must be 2");
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (a_(i, j) > 0)
          throw InvalidCartanError("off-diagonal entry a(" + std::to_string(i + 1) + "," +
                                   std::to_string(j + 1) + ") must be <= 0");
        if ((a_(i, j) == 0) != (a_(j, i) == 0))
          throw InvalidCartanError("a(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                   ") and a(" + std::to_string(j + 1) + "," +
                                   std::to_string(i + 1) + ") must vanish together");
      }
    }
  }

  [[nodiscard]] int rank() const noexcept { return static_cast<int>(a_.rows()); }
  /// a(i, j) = <alpha_j, alpha_i^vee>, 1-based letters.
  [[nodiscard]] Int a(int i, int j) const {
    check_letter(i);
    check_letter(j);
    return a_(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
  }
  [[nodiscard]] const IntMatrix& matrix() const noexcept { return a_; }
  [[nodiscard]] const std::string& label() const noexcept { return label_; }

  [[nodiscard]] bool is_simply_laced() const { return a_ == a_.transposed(); }

  /// Cartan matrix of the Langlands dual root datum.
  [[nodiscard]] CartanSpec dual() const {
    return CartanSpec(a_.transposed(), label_.empty() ? std::string{} : label_ + "^dual");
  }

  void check_letter(int i) const {
    if (i < 1 || i > rank())
      throw LetterRangeError("letter " + std::to_string(i) + " out of range 1.." +
                             std::to_string(rank()));
  }

  template <class Tag>
  void check_rank(const Coords<Tag>& x) const {
    if (x.size() != static_cast<std::size_t>(rank()))
      throw RankMismatchError("vector of length " + std::to_string(x.size()) +
                              " does not match rank " + std::to_string(rank()));
  }

  [[nodiscard]] RootVec simple_root(int i) const {
    check_letter(i);
    return RootVec::basis(a_.rows(), i);
  }
  [[nodiscard]] CorootVec simple_coroot(int i) const {
    check_letter(i);
    return CorootVec::basis(a_.rows(), i);
  }
  [[nodiscard]] WeightVec fundamental_weight(int i) const {
    check_letter(i);
    return WeightVec::basis(a_.rows(), i);
  }
  /// Sum of fundamental weights.
  [[nodiscard]] WeightVec rho() const { return WeightVec(IntVec(a_.rows(), 1)); }

  /// Root in the weight basis: alpha_j = sum_i a(i, j) varpi_i.
  [[nodiscard]] WeightVec root_to_weight(const RootVec& r) const {
    check_rank(r);
    return WeightVec(a_ * r.coords());
  }

  friend bool operator==(const CartanSpec& x, const CartanSpec& y) { return x.a_ == y.a_; }

 private:
  IntMatrix a_;
  std::string label_;
};

/// Cartan matrix of a finite type, Bourbaki numbering.
inline CartanSpec cartan_from_type(char family, int rank) {
  const auto bad = [&] {
    return InvalidCartanError(std::string("invalid finite type (") + family + "," +
                              std::to_string(rank) + ")");
  };
  bool ok = false;
  switch (family) {
    case 'A': ok = rank >= 1; break;
    case 'B':
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: break;
  }
  if (!ok) throw bad();

  const auto n = static_cast<std::size_t>(rank);
  IntMatrix a(n, n);
  const auto link = [&](std::size_t i, std::size_t j, Int aij = -1, Int aji = -1) {
    a(i, j) = aij;
    a(j, i) = aji;
  };
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;

  switch (family) {
    case 'A':
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1, -1, -2);  // alpha_n short
      break;
    case 'C':
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1, -2, -1);  // alpha_n long
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      // 1-3-4-5-6(-7-8) with 2 attached to 4
      link(0, 2);
      link(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2, -1, -2);
      link(2, 3);
      break;
    case 'G':
      link(0, 1, -3, -1);  // alpha_1 short
      break;
  }
  return CartanSpec(std::move(a), std::string(1, family) + std::to_string(rank));
}

namespace detail {

inline Int parse_int(std::string_view s, std::string_view what) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  Int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw Error("cannot parse integer '" + std::string(s) + "' in " + std::string(what));
  return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace detail

/// Comma-separated integers, e.g. "2,3,2,1".
inline IntVec parse_int_list(std::string_view text) {
  IntVec out;
  if (text.find_first_not_of(' ') == std::string_view::npos) return out;
  for (auto tok : detail::split(text, ',')) out.push_back(detail::parse_int(tok, text));
  return out;
}

/// Type label such as "A3", "G2", "E8".
inline CartanSpec parse_cartan_label(std::string_view label) {
  if (label.size() < 2) throw InvalidCartanError("invalid Cartan type label '" + std::string(label) + "'");
  const char family = label.front();
  Int rank = 0;
  try {
    rank = detail::parse_int(label.substr(1), label);
  } catch (const Error&) {
    throw InvalidCartanError("invalid Cartan type label '" + std::string(label) + "'");
  }
  return cartan_from_type(family, static_cast<int>(rank));
}

/// Semicolon-separated rows of comma-separated integers.
inline CartanSpec parse_cartan_matrix(std::string_view text) {
  std::vector<IntVec> rows;
  for (auto row : detail::split(text, ';')) rows.push_back(parse_int_list(row));
  const std::size_t n = rows.size();
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw InvalidCartanError("Cartan matrix row " + std::to_string(i + 1) + " has " +
                               std::to_string(rows[i].size()) + " entries, expected " +
                               std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rows[i][j];
  }
  return CartanSpec(std::move(a));
}

inline Int pairing(const WeightVec& lambda, const CorootVec& c) {
  if (lambda.size() != c.size())
    throw RankMismatchError("pairing of vectors with ranks " + std::to_string(lambda.size()) +
                            " and " + std::to_string(c.size()));
  Int s = 0;
  for (std::size_t l = 0; l < lambda.size(); ++l) s += lambda[l] * c[l];
  return s;
}

/// <r, c> for a root and a coroot, sum_{i,j} c_i a(i,j) r_j.
inline Int pairing(const CartanSpec& cartan, const RootVec& r, const CorootVec& c) {
  cartan.check_rank(r);
  cartan.check_rank(c);
  return pairing(cartan.root_to_weight(r), c);
}

/// s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i.
inline WeightVec reflect(const CartanSpec& cartan, int i, WeightVec lambda) {
  cartan.check_letter(i);
  cartan.check_rank(lambda);
  const Int p = lambda.at(i);
  if (p == 0) return lambda;
  for (int j = 1; j <= cartan.rank(); ++j) lambda[static_cast<std::size_t>(j - 1)] -= p * cartan.a(j, i);
  return lambda;
}

/// s_i(r) = r - <r, alpha_i^vee> alpha_i.
inline RootVec reflect(const CartanSpec& cartan, int i, RootVec r) {
  cartan.check_letter(i);
  cartan.check_rank(r);
  Int p = 0;
  for (int j = 1; j <= cartan.rank(); ++j) p += cartan.a(i, j) * r.at(j);
  r[static_cast<std::size_t>(i - 1)] -= p;
  return r;
}

/// s_i(c) = c - <alpha_i, c> alpha_i^vee; on basis vectors
/// s_i(alpha_l^vee) = alpha_l^vee - a(l, i) alpha_i^vee.
inline CorootVec reflect(const CartanSpec& cartan, int i, CorootVec c) {
  cartan.check_letter(i);
  cartan.check_rank(c);
  Int p = 0;
  for (int l = 1; l <= cartan.rank(); ++l) p += c.at(l) * cartan.a(l, i);
  c[static_cast<std::size_t>(i - 1)] -= p;
  return c;
}

inline WeightVec reflect_weight(const CartanSpec& cartan, int i, const WeightVec& x) {
  return reflect(cartan, i, x);
}
inline CorootVec reflect_coroot(const CartanSpec& cartan, int i, const CorootVec& x) {
  return reflect(cartan, i, x);
}
inline RootVec reflect_root(const CartanSpec& cartan, int i, const RootVec& x) {
  return reflect(cartan, i, x);
}

enum class WordOrder {
  /// s_{w1} is applied first, s_{wm} last: s_{wm} ... s_{w1}(x).
  LeftmostFirst,
  /// s_{wm} is applied first: s_{w1} ... s_{wm}(x), the usual reading of a word.
  RightmostFirst,
};

template <class Tag>
Coords<Tag> apply_word(const CartanSpec& cartan, std::span<const int> word, Coords<Tag> x,
                       WordOrder order = WordOrder::RightmostFirst) {
  for (int letter : word) cartan.check_letter(letter);
  if (order == WordOrder::LeftmostFirst) {
    for (int letter : word) x = reflect(cartan, letter, std::move(x));
  } else {
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = reflect(cartan, *it, std::move(x));
  }
  return x;
}

inline int default_root_cap(const CartanSpec& cartan) { return 10 * cartan.rank() * cartan.rank(); }

/// Positive roots as the closure of the simple roots under simple reflections,
/// sorted lexicographically. `cap` bounds the number of closure rounds.
inline constexpr Int kRootCoordinateGuard = Int{1} << 40;

inline std::vector<RootVec> positive_roots(const CartanSpec& cartan, std::optional<int> cap = std::nullopt) {
  const int rounds_allowed = cap.value_or(default_root_cap(cartan));
  std::set<RootVec> roots;
  std::vector<RootVec> frontier;
  for (int i = 1; i <= cartan.rank(); ++i) {
    roots.insert(cartan.simple_root(i));
    frontier.push_back(cartan.simple_root(i));
  }
  int rounds = 0;
  while (!frontier.empty()) {
    if (rounds++ >= rounds_allowed)
      throw NonFiniteTypeError("positive root closure exceeded " + std::to_string(rounds_allowed) +
                               " rounds: possibly non-finite type");
    std::vector<RootVec> next;
    for (const auto& r : frontier)
      for (int i = 1; i <= cartan.rank(); ++i) {
        // Finite-type roots have tiny coefficients; huge ones mean runaway
        // growth, and stopping here keeps the next reflection from overflowing.
        for (Int x : r.coords())
          if (x > kRootCoordinateGuard)
            throw NonFiniteTypeError("positive root coordinates exceeded " + std::to_string(kRootCoordinateGuard) +
                                     ": not of finite type");
        RootVec s = reflect(cartan, i, r);
        if (s.all_nonnegative() && !s.is_zero() && roots.insert(s).second) next.push_back(std::move(s));
      }
    frontier = std::move(next);
  }
  return {roots.begin(), roots.end()};
}

}  // namespace lusztig
