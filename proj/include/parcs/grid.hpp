#pragma once

#include <span>
#include <vector>

#include "parcs/errors.hpp"

namespace parcs {

// Uniform 1D mesh on (0,L) with Nx interior nodes x_j = j*h, j = 1..Nx,
// h = L/(Nx+1), plus a uniform partition of (0,T) into Nt steps of size tau.
// Homogeneous Dirichlet values at x_0 = 0 and x_{Nx+1} = L are implicit and
// never stored. All discrete inner products live here.
struct Grid {
  double L = 0.0;
  int Nx = 0;
  double h = 0.0;
  double T = 0.0;
  int Nt = 0;
  double tau = 0.0;

  double x(int j) const { return h * j; }          // j in 1..Nx
  double t(int m) const { return tau * m; }        // m in 0..Nt

  // h-weighted L2 inner product over interior nodes.
  double ip(std::span<const double> a, std::span<const double> b) const {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
    return h * s;
  }
  double norm(std::span<const double> a) const;
};

Grid build_grid(double L, int Nx, double T, int Nt);

// Open interval (lo,hi) in space units together with its interior node range
// on a grid. node_lo..node_hi (1-based, inclusive) are the nodes strictly
// inside the interval; a subdomain must hold at least 3 of them.
struct Subdomain {
  double lo = 0.0;
  double hi = 0.0;
  int node_lo = 0;  // first node with lo < x_j
  int node_hi = -1; // last node with x_j < hi
  int node_count() const { return node_hi - node_lo + 1; }
  bool contains(double x) const { return lo < x && x < hi; }
};

Subdomain make_subdomain(const Grid& g, double lo, double hi);

// Discrete compact-inclusion test: the closed node range of `inner` sits
// strictly inside the node range of `outer` with at least `margin_cells`
// grid cells to spare on each side.
bool compactly_included(const Subdomain& inner, const Subdomain& outer, int margin_cells = 1);

}  // namespace parcs
