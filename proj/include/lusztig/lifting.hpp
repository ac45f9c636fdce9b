#pragma once

// Monomial geometric liftings attached to a reduced word, and the affine map
// from string parameters to Lusztig parameters they tropicalize to.

#include <string>
#include <vector>

#include "lusztig/conemat.hpp"
#include "lusztig/tropical.hpp"

namespace lusztig {

inline std::vector<std::string> indexed_variables(const std::string& stem, int count) {
  std::vector<std::string> vars;
  for (int k = 1; k <= count; ++k) vars.push_back(stem + std::to_string(k));
  return vars;
}

/// Component k is t_k^{-1} prod_{j>k} t_j^{-a(i_k, i_j)}: the lifting in the
/// Langlands-dual orientation, so that stacking the tropicalized components
/// gives matrix_S.
inline std::vector<SubtractionFreeExpr> zeta_monomials(const ReducedWord& word) {
  const int n = word.length();
  const auto vars = indexed_variables("t", n);
  std::vector<SubtractionFreeExpr> out;
  for (int k = 1; k <= n; ++k) {
    IntVec e(static_cast<std::size_t>(n), 0);
    e[detail::ix(k)] = -1;
    for (int j = k + 1; j <= n; ++j) e[detail::ix(j)] = -word.cartan().a(word.letter(k), word.letter(j));
    out.push_back(SubtractionFreeExpr::monomial(vars, e));
  }
  return out;
}

/// Component k is u_k^{-1} prod_{j>k} u_j^{<s_{i_{j-1}} ... s_{i_{k+1}} alpha_{i_k}, alpha_{i_j}^vee>},
/// the pairing taken in the dual root datum to match zeta_monomials.
inline std::vector<SubtractionFreeExpr> zeta_inverse_monomials(const ReducedWord& word) {
  const int n = word.length();
  const CartanSpec dual = word.cartan().dual();
  const auto vars = indexed_variables("u", n);
  std::vector<SubtractionFreeExpr> out;
  for (int k = 1; k <= n; ++k) {
    IntVec e(static_cast<std::size_t>(n), 0);
    e[detail::ix(k)] = -1;
    RootVec r = dual.simple_root(word.letter(k));
    for (int j = k + 1; j <= n; ++j) {
      if (j > k + 1) r = reflect(dual, word.letter(j - 1), r);
      e[detail::ix(j)] = pairing(dual, r, dual.simple_coroot(word.letter(j)));
    }
    out.push_back(SubtractionFreeExpr::monomial(vars, e));
  }
  return out;
}

/// Componentwise tropicalization of a monomial map, stacked as rows.
inline IntMatrix stacked_tropicalization(const std::vector<SubtractionFreeExpr>& components) {
  return monomial_exponent_matrix(components);
}

/// Constant term of string_to_lusztig_affine: -S * lowest_string(lambda).
inline IntVec lusztig_affine_constant(const ReducedWord& word, const WeightVec& lambda) {
  IntVec l = matrix_S(word) * lowest_string(word, lambda);
  for (auto& x : l) x = -x;
  return l;
}

/// l = -S * lowest_string(lambda^*): the Lusztig parameter of the image of the
/// highest weight vector, i.e. the constant of the corollary formula written
/// for the weight lambda.
inline IntVec lusztig_constant_for_corollary(const ReducedWord& word, const WeightVec& lambda) {
  return lusztig_affine_constant(word, weight_star(word.cartan(), lambda));
}

/// Affine map from string parameters to Lusztig parameters inverting the
/// string-side map attached to lambda:
///   t'_k = l_k - t_k - sum_{j>k} a(i_k, i_j) t_j,  l = -S * lowest_string(lambda).
/// It sends lowest_string(lambda) to 0.
inline IntVec string_to_lusztig_affine(const ReducedWord& word, const WeightVec& lambda, const IntVec& t) {
  if (t.size() != static_cast<std::size_t>(word.length()))
    throw LengthMismatchError("string of length " + std::to_string(t.size()) + ", expected " +
                              std::to_string(word.length()));
  IntVec out = matrix_S(word) * t;
  const IntVec l = lusztig_affine_constant(word, lambda);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += l[k];
  return out;
}

/// Inverse of string_to_lusztig_affine: t = T t' + lowest_string(lambda).
inline IntVec lusztig_to_string_affine(const ReducedWord& word, const WeightVec& lambda, const IntVec& tprime) {
  if (tprime.size() != static_cast<std::size_t>(word.length()))
    throw LengthMismatchError("parameter of length " + std::to_string(tprime.size()) + ", expected " +
                              std::to_string(word.length()));
  IntVec out = matrix_T(word) * tprime;
  const IntVec v = lowest_string(word, lambda);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += v[k];
  return out;
}

}  // namespace lusztig
