#include "parcs/grid.hpp"

#include <cmath>

namespace parcs {

double Grid::norm(std::span<const double> a) const { return std::sqrt(ip(a, a)); }

Grid build_grid(double L, int Nx, double T, int Nt) {
  if (L <= 0.0 || T <= 0.0) fail(ErrorKind::NonPositiveDimension, "L and T must be positive");
  if (Nx < 3 || Nt < 2) fail(ErrorKind::TooCoarse, "need Nx >= 3 and Nt >= 2");
  Grid g;
  g.L = L;
  g.Nx = Nx;
  g.h = L / (Nx + 1);
  g.T = T;
  g.Nt = Nt;
  g.tau = T / Nt;
  return g;
}

Subdomain make_subdomain(const Grid& g, double lo, double hi) {
  if (!(0.0 <= lo && lo < hi && hi <= g.L))
    fail(ErrorKind::NonPositiveDimension, "subdomain endpoints must satisfy 0 <= lo < hi <= L");
  Subdomain s;
  s.lo = lo;
  s.hi = hi;
  // First/last node strictly inside (lo,hi). Nudge by a relative epsilon so
  // endpoints that coincide with a node are excluded deterministically.
  const double eps = 1e-12 * g.L;
  s.node_lo = static_cast<int>(std::floor((lo + eps) / g.h)) + 1;
  s.node_hi = static_cast<int>(std::ceil((hi - eps) / g.h)) - 1;
  if (s.node_lo < 1) s.node_lo = 1;
  if (s.node_hi > g.Nx) s.node_hi = g.Nx;
  if (s.node_count() < 3)
    fail(ErrorKind::TooCoarse, "subdomain must contain at least 3 grid nodes");
  return s;
}

bool compactly_included(const Subdomain& inner, const Subdomain& outer, int margin_cells) {
  return inner.node_lo - outer.node_lo >= margin_cells &&
         outer.node_hi - inner.node_hi >= margin_cells;
}

}  // namespace parcs
