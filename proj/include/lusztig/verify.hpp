#pragma once

// Per-word verification harness: builds every matrix for a reduced word and
// checks the identities relating them. Failures are recorded with a witness,
// never thrown.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lusztig/conemat.hpp"
#include "lusztig/lifting.hpp"

namespace lusztig {

struct CheckResult {
  bool pass = true;
  std::string witness;  // empty when passing
};

/// Outcome of S*T = I under the two Cartan conventions.
struct ConventionOutcome {
  bool primary = false;
  bool transposed_cartan = false;
  bool coincide = false;  // simply-laced: both conventions give the same T
};

struct ConeReport {
  CartanSpec cartan;
  Letters word;
  std::vector<std::pair<std::string, IntMatrix>> matrices;
  std::vector<std::pair<std::string, CheckResult>> checks;
  ConventionOutcome conventions;

  [[nodiscard]] bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second.pass; });
  }
  [[nodiscard]] const CheckResult& check(const std::string& name) const {
    for (const auto& [n, r] : checks)
      if (n == name) return r;
    throw std::out_of_range("no check named " + name);
  }
  [[nodiscard]] const IntMatrix& matrix(const std::string& name) const {
    for (const auto& [n, m] : matrices)
      if (n == name) return m;
    throw std::out_of_range("no matrix named " + name);
  }
};

/// Names of the checks in report order.
inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "triangularity",      "WV_identity",        "ST_identity",        "ST_convention",
      "VinvS_Ltilde",       "SinvV_negC",         "Ltilde_SinvV_identity", "C_nonnegative",
      "P_nonnegative",      "X_nonnegative",      "LX_identity",        "last_occurrence_columns",
      "simple_coroot_PC",   "string_equalities",  "zeta_S",             "zeta_inverse_T",
      "affine_translation", "cone_equality",
  };
  return names;
}

inline const std::vector<std::string>& matrix_names() {
  static const std::vector<std::string> names = {"V", "W", "S", "T", "C", "P", "X", "Ltilde", "L"};
  return names;
}

struct BoxSpec {
  Int lo = -3;
  Int hi = 5;
  /// Exhaustive when the box has at most this many points, else sampled.
  std::uint64_t exhaustive_limit = 5'000'000;
  std::uint64_t sample_points = 100'000;

  /// The box [-r, r+2]^N.
  static BoxSpec radius(Int r) { return BoxSpec{-r, r + 2}; }
  /// Radius 3 up to N = 6, radius 2 beyond (sampled once the box is too large).
  static BoxSpec default_for(int n) { return radius(n <= 6 ? 3 : 2); }
};

struct VerifyOptions {
  /// nullopt: BoxSpec::default_for(N). Disabled when `check_cone` is false.
  std::optional<BoxSpec> box;
  bool check_cone = true;
  int string_weights = 20;
  Int weight_max = 3;
  std::uint64_t seed = 1;
};

namespace detail {

inline CheckResult compare(const IntMatrix& got, const IntMatrix& want, const std::string& what) {
  const std::string diff = first_difference(got, want);
  if (diff.empty()) return {};
  return {false, what + ": " + diff};
}

inline CheckResult nonnegative(const IntMatrix& m, const std::string& name) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) < 0)
        return {false, name + " entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                           ") = " + std::to_string(m(r, c))};
  return {};
}

inline CheckResult upper_triangular_with_diagonal(const IntMatrix& m, Int diag, const std::string& name) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m(r, r) != diag)
      return {false, name + " diagonal entry " + std::to_string(r + 1) + " = " + std::to_string(m(r, r))};
    for (std::size_t c = 0; c < r; ++c)
      if (m(r, c) != 0)
        return {false, name + " below-diagonal entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                           ") = " + std::to_string(m(r, c))};
  }
  return {};
}

inline std::string vec(const IntVec& v) { return "(" + join(v) + ")"; }

/// Walks the box exhaustively or samples it; stops at the first disagreement.
inline CheckResult cone_box_check(const ReducedWord& word, const IntMatrix& l, const IntMatrix& x,
                                  const BoxSpec& box, std::uint64_t seed) {
  const auto n = static_cast<std::size_t>(word.length());
  const LusztigConeInequalities definition(word);
  const auto side = static_cast<std::uint64_t>(box.hi - box.lo + 1);
  bool exhaustive = true;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > box.exhaustive_limit / side) {
      exhaustive = false;
      break;
    }
    total *= side;
  }

  const auto test_point = [&](const IntVec& c) -> std::optional<CheckResult> {
    const bool by_def = definition.contains(c);
    const Membership by_l = membership_L(l, c);
    if (by_def != by_l.inside)
      return CheckResult{false, "point " + vec(c) + ": definition says " + (by_def ? "inside" : "outside") +
                                    ", L-test says " + (by_l.inside ? "inside" : "outside")};
    if (by_l.inside) {
      if (x * by_l.coefficients != c)
        return CheckResult{false, "point " + vec(c) + ": X(Lc) = " + vec(x * by_l.coefficients)};
      if (std::any_of(c.begin(), c.end(), [](Int v) { return v < 0; }))
        return CheckResult{false, "point " + vec(c) + " has Lc >= 0 but a negative coordinate"};
    }
    return std::nullopt;
  };

  IntVec c(n, box.lo);
  if (exhaustive) {
    for (;;) {
      if (auto bad = test_point(c)) return *bad;
      std::size_t i = 0;
      while (i < n && c[i] == box.hi) c[i++] = box.lo;
      if (i == n) break;
      ++c[i];
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Int> coord(box.lo, box.hi);
    for (std::uint64_t s = 0; s < box.sample_points; ++s) {
      for (auto& v : c) v = coord(rng);
      if (auto bad = test_point(c)) return *bad;
    }
    // X columns are the cone's generators; always include them.
    for (std::size_t k = 0; k < n; ++k)
      if (auto bad = test_point(x.column(k))) return *bad;
  }
  return {};
}

}  // namespace detail

/// Seeded dominant weights with coordinates in {0..max_coord}.
inline std::vector<WeightVec> random_dominant_weights(int rank, std::size_t count, Int max_coord,
                                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Int> coord(0, max_coord);
  std::vector<WeightVec> out;
  for (std::size_t s = 0; s < count; ++s) {
    WeightVec w(static_cast<std::size_t>(rank));
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = coord(rng);
    out.push_back(std::move(w));
  }
  return out;
}

inline ConeReport verify_word(const ReducedWord& word, const VerifyOptions& options = {}) {
  ConeReport report{word.cartan(), word.letters(), {}, {}, {}};
  const int n = word.length();
  const auto nn = static_cast<std::size_t>(n);
  const IntMatrix id = IntMatrix::identity(nn);
  const auto& cartan = word.cartan();

  const IntMatrix V = matrix_V(word), W = matrix_W(word), S = matrix_S(word), T = matrix_T(word),
                  C = matrix_C(word), P = matrix_P(word), X = matrix_X(word), Lt = matrix_Ltilde(word);
  std::optional<IntMatrix> L;
  std::string l_error;
  try {
    L = matrix_L(word);
  } catch (const std::exception& e) {
    l_error = e.what();
  }
  report.matrices = {{"V", V}, {"W", W}, {"S", S}, {"T", T}, {"C", C}, {"P", P}, {"X", X}, {"Ltilde", Lt}};
  if (L) report.matrices.emplace_back("L", *L);

  auto& checks = report.checks;
  const auto add = [&](const std::string& name, CheckResult r) { checks.emplace_back(name, std::move(r)); };
  const auto first_failure = [](std::initializer_list<CheckResult> rs) {
    for (const auto& r : rs)
      if (!r.pass) return r;
    return CheckResult{};
  };

  add("triangularity", first_failure({detail::upper_triangular_with_diagonal(V, 1, "V"),
                                      detail::upper_triangular_with_diagonal(W, 1, "W"),
                                      detail::upper_triangular_with_diagonal(S, -1, "S"),
                                      detail::upper_triangular_with_diagonal(T, -1, "T"),
                                      detail::upper_triangular_with_diagonal(C, 1, "C")}));
  add("WV_identity", detail::compare(W * V, id, "W*V vs I"));
  const CheckResult st = first_failure({detail::compare(S * T, id, "S*T vs I"), detail::compare(T * S, id, "T*S vs I")});
  add("ST_identity", st);

  const IntMatrix T_dual = matrix_T_transposed_cartan(word);
  report.conventions.primary = st.pass;
  report.conventions.transposed_cartan = (S * T_dual == id) && (T_dual * S == id);
  report.conventions.coincide = T_dual == T;
  {
    const auto& cv = report.conventions;
    CheckResult r;
    if (cv.coincide) {
      if (!cv.primary) r = {false, "no convention gives S*T = I"};
    } else if (cv.primary == cv.transposed_cartan) {
      r = {false, cv.primary ? "both conventions pass although T differs"
                             : "neither the primary nor the transposed-Cartan T inverts S"};
    }
    add("ST_convention", r);
  }

  add("VinvS_Ltilde", detail::compare(W * S, Lt, "V^-1 S vs Ltilde"));
  add("SinvV_negC", detail::compare(T * V, -C, "S^-1 V vs -C"));
  add("Ltilde_SinvV_identity", detail::compare(Lt * (T * V), id, "Ltilde S^-1 V vs I"));
  add("C_nonnegative", detail::nonnegative(C, "C"));
  add("P_nonnegative", detail::nonnegative(P, "P"));
  add("X_nonnegative", detail::nonnegative(X, "X"));
  if (L)
    add("LX_identity", detail::compare(*L * X, id, "L*X vs I"));
  else
    add("LX_identity", {false, l_error});

  {
    CheckResult r;
    for (int k = 1; k <= n && r.pass; ++k) {
      if (k1_successor(word, k) != n + 1) continue;
      const auto kk = static_cast<std::size_t>(k - 1);
      if (P.column(kk) != C.column(kk))
        r = {false, "column " + std::to_string(k) + ": P " + detail::vec(P.column(kk)) + " vs C " +
                        detail::vec(C.column(kk))};
      else if (const IntVec s = lowest_string(word, cartan.fundamental_weight(word.letter(k))); X.column(kk) != s)
        r = {false, "column " + std::to_string(k) + ": X " + detail::vec(X.column(kk)) +
                        " vs lowest string " + detail::vec(s)};
    }
    add("last_occurrence_columns", r);
  }

  {
    CheckResult r;
    for (int j = 1; j <= n && r.pass; ++j) {
      if (!maps_to_simple_coroot(word, j)) continue;
      for (int k = 1; k <= n; ++k) {
        const auto jj = static_cast<std::size_t>(j - 1), kk = static_cast<std::size_t>(k - 1);
        if (P(jj, kk) != C(jj, kk)) {
          r = {false, "row " + std::to_string(j) + " (simple coroot), column " + std::to_string(k) + ": P = " +
                          std::to_string(P(jj, kk)) + ", C = " + std::to_string(C(jj, kk))};
          break;
        }
      }
    }
    add("simple_coroot_PC", r);
  }

  {
    CheckResult r;
    if (!L) {
      r = {false, l_error};
    } else {
      const auto weights = random_dominant_weights(cartan.rank(), static_cast<std::size_t>(options.string_weights),
                                                   options.weight_max, options.seed);
      for (const auto& lambda : weights) {
        const IntVec v = lowest_string(word, lambda);
        const IntVec lv = *L * v;
        for (int j = 1; j <= n && r.pass; ++j)
          if (k1_successor(word, j) <= n && lv[static_cast<std::size_t>(j - 1)] != 0)
            r = {false, "row " + std::to_string(j) + " . lowest_string" + detail::vec(lambda.coords()) + " = " +
                            std::to_string(lv[static_cast<std::size_t>(j - 1)])};
        if (!r.pass) break;
      }
    }
    add("string_equalities", r);
  }

  add("zeta_S", detail::compare(stacked_tropicalization(zeta_monomials(word)), S, "trop(zeta) vs S"));
  add("zeta_inverse_T",
      detail::compare(stacked_tropicalization(zeta_inverse_monomials(word)), T, "trop(zeta^-1) vs T"));

  {
    CheckResult r;
    for (int k = 1; k <= n && r.pass; ++k) {
      if (k1_successor(word, k) == n + 1) continue;
      const auto kk = static_cast<std::size_t>(k - 1);
      const WeightVec mu = mu_weight(word, k);
      const IntVec image = string_to_lusztig_affine(word, mu, X.column(kk));
      if (image != V.column(kk)) {
        r = {false, "column " + std::to_string(k) + ": image of X column " + detail::vec(image) +
                        " vs V column " + detail::vec(V.column(kk))};
        break;
      }
      const IntVec zero = string_to_lusztig_affine(word, mu, lowest_string(word, mu));
      if (std::any_of(zero.begin(), zero.end(), [](Int v) { return v != 0; }))
        r = {false, "column " + std::to_string(k) + ": image of lowest_string(mu_k) is " + detail::vec(zero)};
    }
    add("affine_translation", r);
  }

  if (!options.check_cone) {
    add("cone_equality", {});
  } else if (!L) {
    add("cone_equality", {false, l_error});
  } else {
    const BoxSpec box = options.box.value_or(BoxSpec::default_for(n));
    add("cone_equality", detail::cone_box_check(word, *L, X, box, options.seed));
  }
  return report;
}

/// Verifies many words, fanning out over threads; reports come back in the
/// order of `words`.
inline std::vector<ConeReport> verify_words(const CartanSpec& cartan, const std::vector<Letters>& words,
                                            const VerifyOptions& options = {}, unsigned threads = 0) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, words.size())));
  std::vector<std::optional<ConeReport>> slots(words.size());
  std::vector<std::exception_ptr> errors(words.size());
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < words.size(); i += threads) {
          try {
            slots[i] = verify_word(ReducedWord(cartan, words[i]), options);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
  }
  std::vector<ConeReport> out;
  out.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

}  // namespace lusztig
