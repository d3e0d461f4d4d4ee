#pragma once

// Dense univariate polynomials over Q, coefficient of S^t at index t.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nashcar/rational.hpp"

namespace nashcar {

using QPoly = std::vector<Rat>;

void trim(QPoly& p);
std::int64_t degree(const QPoly& p);  // -1 for the zero polynomial
QPoly derivative(const QPoly& p);
QPoly multiply(const QPoly& a, const QPoly& b);
QPoly monic(const QPoly& p);
/// (quotient, remainder); b must be nonzero.
std::pair<QPoly, QPoly> divide(const QPoly& a, const QPoly& b);
QPoly gcd(QPoly a, QPoly b);  // monic
Rat evaluate(const QPoly& p, const Rat& x);
QPoly add(const QPoly& a, const QPoly& b);
QPoly subtract(const QPoly& a, const QPoly& b);

/// (s, t) with s*a + t*b = 1; a and b must be coprime.
std::pair<QPoly, QPoly> bezout(const QPoly& a, const QPoly& b);

/// Yun decomposition p = c * prod_k A_k^k with A_k squarefree and pairwise
/// coprime; entry k-1 holds A_k (constant 1 when absent).
std::vector<QPoly> squarefree_decomposition(const QPoly& p);

/// Rational roots of p (each once). Gives up (nullopt) when the constant or
/// leading coefficient is too large to enumerate divisors.
std::optional<std::vector<Rat>> rational_roots(const QPoly& p);

}  // namespace nashcar
