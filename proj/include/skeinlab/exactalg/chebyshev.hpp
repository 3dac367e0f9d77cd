#pragma once

#include <skeinlab/error.hpp>
#include <skeinlab/exactalg/unipoly.hpp>

#include <utility>

namespace skeinlab::exactalg {

/// First-kind Chebyshev polynomial normalized by T_k(x + 1/x) = x^k + x^-k,
/// so T_0 = 2, T_1 = x, T_{k+1} = x T_k - T_{k-1}.
inline UniPoly cheb_T(int k) {
  if (k < 0) throw PreconditionError("cheb_T: negative index");
  UniPoly prev = UniPoly::constant(2);
  if (k == 0) return prev;
  UniPoly cur = UniPoly::x();
  for (int i = 1; i < k; ++i) prev = std::exchange(cur, UniPoly::x() * cur - prev);
  return cur;
}

/// Second-kind (color) Chebyshev polynomial: e_0 = 1, e_1 = z,
/// e_{i+1} = z e_i - e_{i-1}.
inline UniPoly cheb_e(int i) {
  if (i < 0) throw PreconditionError("cheb_e: negative index");
  UniPoly prev = UniPoly::constant(1);
  if (i == 0) return prev;
  UniPoly cur = UniPoly::x();
  for (int j = 1; j < i; ++j) prev = std::exchange(cur, UniPoly::x() * cur - prev);
  return cur;
}

}  // namespace skeinlab::exactalg
