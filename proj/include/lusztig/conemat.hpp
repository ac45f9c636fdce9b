#pragma once

// Matrix calculus attached to a reduced word i = (i_1, ..., i_N) for w0.
//
// All matrices are N x N over the integers and indexed by word positions.
// Public functions take 1-based positions; matrix storage is 0-based.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lusztig/cartan.hpp"
#include "lusztig/int_matrix.hpp"
#include "lusztig/weyl.hpp"

namespace lusztig {

namespace detail {
inline std::size_t ix(int position) { return static_cast<std::size_t>(position - 1); }
}  // namespace detail

/// V_jk = 1 iff j <= k and i_j = i_k.
inline IntMatrix matrix_V(const ReducedWord& word) {
  const int n = word.length();
  IntMatrix v(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j)
    for (int k = j; k <= n; ++k)
      if (word.letter(j) == word.letter(k)) v(detail::ix(j), detail::ix(k)) = 1;
  return v;
}

/// Inverse of V: unit diagonal and -1 at (j, j(1)).
inline IntMatrix matrix_W(const ReducedWord& word) {
  const int n = word.length();
  IntMatrix w = IntMatrix::identity(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const int next = k1_successor(word, j);
    if (next <= n) w(detail::ix(j), detail::ix(next)) = -1;
  }
  return w;
}

/// Matrix of the tropicalized lifting map: -1 on the diagonal and
/// -a(i_j, i_k) above it.
inline IntMatrix matrix_S(const ReducedWord& word) {
  const int n = word.length();
  const auto& cartan = word.cartan();
  IntMatrix s(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    s(detail::ix(j), detail::ix(j)) = -1;
    for (int k = j + 1; k <= n; ++k) s(detail::ix(j), detail::ix(k)) = -cartan.a(word.letter(j), word.letter(k));
  }
  return s;
}

/// T_jk = <s_{i_{j+1}} ... s_{i_{k-1}} alpha_{i_k}, alpha_{i_j}^vee> above the
/// diagonal, -1 on it, evaluated with the given Cartan data. Passing the dual
/// Cartan matrix gives the transposed-convention variant.
inline IntMatrix matrix_T_with(const CartanSpec& cartan, const ReducedWord& word) {
  const int n = word.length();
  IntMatrix t(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    t(detail::ix(j), detail::ix(j)) = -1;
    for (int k = j + 1; k <= n; ++k) {
      const RootVec r = apply_word(cartan, word.segment(j + 1, k - 1), cartan.simple_root(word.letter(k)));
      t(detail::ix(j), detail::ix(k)) = pairing(cartan, r, cartan.simple_coroot(word.letter(j)));
    }
  }
  return t;
}

inline IntMatrix matrix_T(const ReducedWord& word) { return matrix_T_with(word.cartan(), word); }

/// T re-derived with the transposed Cartan matrix.
inline IntMatrix matrix_T_transposed_cartan(const ReducedWord& word) {
  return matrix_T_with(word.cartan().dual(), word);
}

/// C_jk = <s_{i_{j+1}} ... s_{i_k} varpi_{i_k}, alpha_{i_j}^vee> for j <= k.
inline IntMatrix matrix_C(const ReducedWord& word) {
  const int n = word.length();
  const auto& cartan = word.cartan();
  IntMatrix c(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    // Walk j downwards, applying one more reflection each step.
    WeightVec x = cartan.fundamental_weight(word.letter(k));
    for (int j = k; j >= 1; --j) {
      if (j < k) x = reflect(cartan, word.letter(j + 1), x);
      c(detail::ix(j), detail::ix(k)) = x.at(word.letter(j));
    }
  }
  return c;
}

/// epsilon_l = max(0, -<s_{i_1} ... s_{i_k} varpi_{i_k}, alpha_l^vee>).
inline WeightVec epsilon_values(const ReducedWord& word, int k) {
  word.check_position(k);
  const auto& cartan = word.cartan();
  WeightVec x = apply_word(cartan, word.prefix(k), cartan.fundamental_weight(word.letter(k)));
  WeightVec eps(static_cast<std::size_t>(cartan.rank()));
  for (std::size_t l = 0; l < x.size(); ++l) eps[l] = x[l] <= 0 ? -x[l] : 0;
  return eps;
}

/// mu_k = sum_l epsilon_l varpi_l.
inline WeightVec mu_weight(const ReducedWord& word, int k) { return epsilon_values(word, k); }

/// String of the lowest weight vector: v_k = <s_{i_{k-1}} ... s_{i_1} lambda, alpha_{i_k}^vee>.
inline IntVec lowest_string(const ReducedWord& word, const WeightVec& lambda) {
  const auto& cartan = word.cartan();
  cartan.check_rank(lambda);
  if (!is_dominant(lambda))
    throw NotDominantError("weight (" + join(lambda.coords()) + ") is not dominant");
  IntVec v;
  v.reserve(static_cast<std::size_t>(word.length()));
  WeightVec x = lambda;
  for (int letter : word.letters()) {
    v.push_back(x.at(letter));
    x = reflect(cartan, letter, x);
  }
  return v;
}

/// Column k is lowest_string(mu_k).
inline IntMatrix matrix_P(const ReducedWord& word) {
  std::vector<IntVec> cols;
  for (int k = 1; k <= word.length(); ++k) cols.push_back(lowest_string(word, mu_weight(word, k)));
  return IntMatrix::from_columns(cols);
}

/// Spanning vectors of the Lusztig cone. Columns with k(1) = N+1 are the
/// lowest-weight strings of varpi_{i_k}; the others are -C + P.
inline IntMatrix matrix_X(const ReducedWord& word) {
  const int n = word.length();
  const IntMatrix c = matrix_C(word);
  const IntMatrix p = matrix_P(word);
  const auto& cartan = word.cartan();
  IntMatrix x(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    if (k1_successor(word, k) == n + 1) {
      const IntVec s = lowest_string(word, cartan.fundamental_weight(word.letter(k)));
      for (int j = 1; j <= n; ++j) x(detail::ix(j), detail::ix(k)) = s[detail::ix(j)];
    } else {
      for (int j = 1; j <= n; ++j)
        x(detail::ix(j), detail::ix(k)) = p(detail::ix(j), detail::ix(k)) - c(detail::ix(j), detail::ix(k));
    }
  }
  return x;
}

/// -1 at k = j and k = j(1), -a(i_j, i_k) strictly between, 0 elsewhere.
inline IntMatrix matrix_Ltilde(const ReducedWord& word) {
  const int n = word.length();
  const auto& cartan = word.cartan();
  IntMatrix lt(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const int next = k1_successor(word, j);
    lt(detail::ix(j), detail::ix(j)) = -1;
    if (next <= n) lt(detail::ix(j), detail::ix(next)) = -1;
    for (int k = j + 1; k < next; ++k) lt(detail::ix(j), detail::ix(k)) = -cartan.a(word.letter(j), word.letter(k));
  }
  return lt;
}

/// Inequality matrix of the Lusztig cone as a subset of Z^N. Rows with
/// j(1) <= N are those of Ltilde; a row with j(1) = N+1 has a single 1 at the
/// position k with beta_k = alpha_{i_j}.
inline IntMatrix matrix_L(const ReducedWord& word) {
  const int n = word.length();
  IntMatrix l = matrix_Ltilde(word);
  const auto betas = beta_roots(word);
  for (int j = 1; j <= n; ++j) {
    if (k1_successor(word, j) <= n) continue;
    const RootVec target = word.cartan().simple_root(word.letter(j));
    const auto it = std::find(betas.begin(), betas.end(), target);
    if (it == betas.end())
      throw std::logic_error("matrix_L: no position k with beta_k = alpha_" +
                             std::to_string(word.letter(j)) + " for row " + std::to_string(j));
    for (int k = 1; k <= n; ++k) l(detail::ix(j), detail::ix(k)) = 0;
    l(detail::ix(j), static_cast<std::size_t>(it - betas.begin())) = 1;
  }
  return l;
}

/// True when s_{i_1} ... s_{i_{j-1}}(alpha_{i_j}^vee) is a simple coroot.
inline bool maps_to_simple_coroot(const ReducedWord& word, int j) {
  word.check_position(j);
  const auto& cartan = word.cartan();
  const CorootVec c = apply_word(cartan, word.prefix(j - 1), cartan.simple_coroot(word.letter(j)));
  Int sum = 0;
  for (Int x : c.coords()) {
    if (x < 0) return false;
    sum += x;
  }
  return sum == 1;
}

/// The Lusztig cone read directly off its definition: one inequality
/// c_p + c_p' + sum_{p<q<p'} a(i_p, i_q) c_q <= 0 per pair of consecutive
/// occurrences p < p' of a letter, plus nonnegativity.
class LusztigConeInequalities {
 public:
  explicit LusztigConeInequalities(const ReducedWord& word) : n_(static_cast<std::size_t>(word.length())) {
    const auto& cartan = word.cartan();
    std::vector<int> last_seen(static_cast<std::size_t>(cartan.rank()) + 1, 0);
    for (int q = 1; q <= word.length(); ++q) {
      const int letter = word.letter(q);
      if (const int p = last_seen[static_cast<std::size_t>(letter)]; p != 0) {
        IntVec row(n_, 0);
        row[detail::ix(p)] = 1;
        row[detail::ix(q)] = 1;
        for (int r = p + 1; r < q; ++r) row[detail::ix(r)] = cartan.a(letter, word.letter(r));
        pairs_.push_back({p, q});
        rows_.push_back(std::move(row));
      }
      last_seen[static_cast<std::size_t>(letter)] = q;
    }
  }

  [[nodiscard]] bool contains(const IntVec& c) const {
    check_length(c);
    for (Int x : c)
      if (x < 0) return false;
    for (const auto& row : rows_) {
      Int s = 0;
      for (std::size_t q = 0; q < n_; ++q) s += row[q] * c[q];
      if (s > 0) return false;
    }
    return true;
  }

  /// Consecutive-occurrence pairs (p, p'), 1-based, in scan order.
  [[nodiscard]] const std::vector<std::pair<int, int>>& pairs() const noexcept { return pairs_; }
  [[nodiscard]] const std::vector<IntVec>& rows() const noexcept { return rows_; }

  void check_length(const IntVec& c) const {
    if (c.size() != n_)
      throw LengthMismatchError("point of length " + std::to_string(c.size()) + ", expected " +
                                std::to_string(n_));
  }

 private:
  std::size_t n_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<IntVec> rows_;
};

inline bool in_lusztig_cone_def(const ReducedWord& word, const IntVec& c) {
  return LusztigConeInequalities(word).contains(c);
}

struct Membership {
  bool inside = false;
  IntVec coefficients;  // L * c
};

inline Membership membership_L(const IntMatrix& l, const IntVec& c) {
  if (c.size() != l.cols())
    throw LengthMismatchError("point of length " + std::to_string(c.size()) + ", expected " +
                              std::to_string(l.cols()));
  Membership m;
  m.coefficients = l * c;
  m.inside = std::all_of(m.coefficients.begin(), m.coefficients.end(), [](Int x) { return x >= 0; });
  return m;
}

/// Membership through the simplicial description {c : L c >= 0}; the
/// coefficients express c in the columns of X.
inline Membership in_lusztig_cone_L(const ReducedWord& word, const IntVec& c) {
  return membership_L(matrix_L(word), c);
}

}  // namespace lusztig
