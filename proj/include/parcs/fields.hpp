#pragma once

#include <span>
#include <string>
#include <vector>

#include "parcs/grid.hpp"

namespace parcs {

// Dense scalar field over all time levels 0..Nt and interior nodes 1..Nx.
// Space index is 0-based internally (j = 0 stores node 1).
struct SpaceTimeField {
  int Nt = 0;
  int Nx = 0;
  std::vector<double> data;  // (Nt+1) * Nx

  SpaceTimeField() = default;
  SpaceTimeField(int nt, int nx, double value = 0.0) : Nt(nt), Nx(nx), data((nt + 1) * nx, value) {}
  double& operator()(int m, int j) { return data[static_cast<std::size_t>(m) * Nx + j]; }
  double operator()(int m, int j) const { return data[static_cast<std::size_t>(m) * Nx + j]; }
  std::span<double> level(int m) { return {data.data() + static_cast<std::size_t>(m) * Nx, static_cast<std::size_t>(Nx)}; }
  std::span<const double> level(int m) const {
    return {data.data() + static_cast<std::size_t>(m) * Nx, static_cast<std::size_t>(Nx)};
  }
};

// An (n+1)-component spatial state, flattened component-major.
struct State {
  int ncomp = 0;
  int Nx = 0;
  std::vector<double> data;

  State() = default;
  State(int ncomp_, int nx) : ncomp(ncomp_), Nx(nx), data(static_cast<std::size_t>(ncomp_) * nx, 0.0) {}
  std::span<double> comp(int i) { return {data.data() + static_cast<std::size_t>(i) * Nx, static_cast<std::size_t>(Nx)}; }
  std::span<const double> comp(int i) const {
    return {data.data() + static_cast<std::size_t>(i) * Nx, static_cast<std::size_t>(Nx)};
  }
};

double dot_state(const Grid& g, const State& a, const State& b);
double norm_state(const Grid& g, const State& a);
double sup_norm(const State& a);

// Space-time array of the (n+1)-component state over all time levels.
struct TrajectoryField {
  int Nt = 0;
  int ncomp = 0;
  int Nx = 0;
  std::vector<double> data;  // (Nt+1) * ncomp * Nx

  TrajectoryField() = default;
  TrajectoryField(int nt, int ncomp_, int nx)
      : Nt(nt), ncomp(ncomp_), Nx(nx),
        data(static_cast<std::size_t>(nt + 1) * ncomp_ * nx, 0.0) {}

  std::span<double> comp(int m, int i) {
    return {data.data() + (static_cast<std::size_t>(m) * ncomp + i) * Nx, static_cast<std::size_t>(Nx)};
  }
  std::span<const double> comp(int m, int i) const {
    return {data.data() + (static_cast<std::size_t>(m) * ncomp + i) * Nx, static_cast<std::size_t>(Nx)};
  }
  State state_at(int m) const;
  void set_state(int m, const State& s);
  double sup_abs() const;
  bool all_finite() const;
};

// Control values on the omega_0 node range, all time levels. The forward
// step to level m consumes values[m]; levels 0 and Nt stay zero for every
// control produced by the optimality relation.
struct ControlField {
  int Nt = 0;
  int node_lo = 0;  // 1-based first node of omega_0
  int nx = 0;       // node count of omega_0
  std::vector<double> data;  // (Nt+1) * nx

  ControlField() = default;
  ControlField(int nt, int node_lo_, int nx_)
      : Nt(nt), node_lo(node_lo_), nx(nx_), data(static_cast<std::size_t>(nt + 1) * nx_, 0.0) {}
  std::span<double> level(int m) { return {data.data() + static_cast<std::size_t>(m) * nx, static_cast<std::size_t>(nx)}; }
  std::span<const double> level(int m) const {
    return {data.data() + static_cast<std::size_t>(m) * nx, static_cast<std::size_t>(nx)};
  }
  double sup_abs() const;
};

// CSV export with columns (t,x,component,value), RFC-4180, 17 significant digits.
std::string trajectory_csv(const Grid& g, const TrajectoryField& tf);
std::string control_csv(const Grid& g, const ControlField& u);

}  // namespace parcs
