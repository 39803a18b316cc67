#pragma once

// Reference computations that share no code with the engine. Each one is a
// direct transcription of a definition, written for clarity, not speed.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cotq/coalgebra.hpp"
#include "cotq/scalar.hpp"

namespace cotq::testing {

/// Product of the words a^i c^j and a^k c^l, normal ordered by repeatedly
/// rewriting the leftmost "ca" to "ac" and paying a factor q^-1 each time.
struct WordProduct {
  GaussianRational coeff;
  std::int64_t a = 0;
  std::int64_t c = 0;
};

inline WordProduct rewrite_product(std::int64_t i, std::int64_t j, std::int64_t k, std::int64_t l,
                                   const GaussianRational& q) {
  std::string word = std::string(i, 'a') + std::string(j, 'c') + std::string(k, 'a') +
                     std::string(l, 'c');
  GaussianRational coeff(1);
  const GaussianRational q_inv = GaussianRational(1) / q;
  for (;;) {
    const auto pos = word.find("ca");
    if (pos == std::string::npos) break;
    word[pos] = 'a';
    word[pos + 1] = 'c';
    coeff = coeff * q_inv;
  }
  WordProduct out{coeff, 0, 0};
  for (char ch : word) (ch == 'a' ? out.a : out.c) += 1;
  return out;
}

using IndexTriple = std::array<std::int64_t, 3>;

/// (Delta ⊗ id)Delta(x_n) - (id ⊗ Delta)Delta(x_n) for the divided power rule
/// restricted to indices in [lo, hi], computed with integer multiplicities.
inline std::map<IndexTriple, long> truncated_coassociator(std::int64_t n, std::int64_t lo,
                                                          std::int64_t hi) {
  auto in_range = [&](std::int64_t x) { return lo <= x && x <= hi; };
  std::map<IndexTriple, long> diff;
  for (std::int64_t i = lo; i <= hi; ++i) {
    const std::int64_t j = n - i;
    if (!in_range(j)) continue;
    // left: split the first factor x_i
    for (std::int64_t a = lo; a <= hi; ++a) {
      if (in_range(i - a)) diff[{a, i - a, j}] += 1;
    }
    // right: split the second factor x_j
    for (std::int64_t b = lo; b <= hi; ++b) {
      if (in_range(j - b)) diff[{i, b, j - b}] -= 1;
    }
  }
  std::erase_if(diff, [](const auto& entry) { return entry.second == 0; });
  return diff;
}

/// Determinant by cofactor expansion along the first row.
inline GaussianRational cofactor_det(const std::vector<std::vector<GaussianRational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return GaussianRational(1);
  if (n == 1) return m[0][0];
  GaussianRational det;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<GaussianRational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<GaussianRational> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    const GaussianRational term = m[0][col] * cofactor_det(minor);
    det = (col % 2 == 0) ? det + term : det - term;
  }
  return det;
}

/// Sylvester's criterion using cofactor determinants of every leading block.
inline bool cofactor_positive_definite(const std::vector<std::vector<GaussianRational>>& m) {
  for (std::size_t k = 1; k <= m.size(); ++k) {
    std::vector<std::vector<GaussianRational>> lead;
    for (std::size_t r = 0; r < k; ++r) lead.emplace_back(m[r].begin(), m[r].begin() + k);
    const GaussianRational d = cofactor_det(lead);
    if (!d.is_real() || d.re().sign() <= 0) return false;
  }
  return true;
}

/// pi_g(Delta(phi)) by direct summation over basis terms:
///   sum over phi = sum c_b b, Delta(b) = sum d x⊗y, g = sum e_h h of
///   c_b d conj(e_h) <h, y> x.
inline Element direct_simple_apply(const Coalgebra& coalgebra, const SesquilinearForm& form,
                                   const Element& g, const Element& phi) {
  Element out = coalgebra.zero();
  for (const auto& [b, cb] : phi.terms()) {
    const TensorElement delta = coalgebra.comul(b);
    for (const auto& [xy, d] : delta.terms()) {
      for (const auto& [h, eh] : g.terms()) {
        const GaussianRational p = form.pair_basis(h, xy[1]);
        if (p.is_zero()) continue;
        out.add_term(xy[0], cb * d * eh.conj() * p);
      }
    }
  }
  return out;
}

}  // namespace cotq::testing
