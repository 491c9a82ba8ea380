#pragma once

#include <Eigen/Dense>
#include <vector>

#include "parcs/fields.hpp"
#include "parcs/geometry.hpp"

namespace parcs {

// The coupling map k: {1..n} -> {0..n}. Component i is driven by component
// k(i); iterating k from any node reaches the controlled root 0. Star
// coupling is the special case k == 0.
struct CouplingTree {
  int n = 0;
  std::vector<int> k;      // k[i-1] = parent of component i
  std::vector<int> depth;  // depth[i-1] = m(i), chain length to the root

  int parent(int i) const { return k[i - 1]; }
  int m_of(int i) const { return depth[i - 1]; }
  bool is_star() const;
  std::vector<int> children_of(int j) const;  // {i : k(i) = j}
  // Nodes ordered root-outward so that parent(i) always precedes i.
  std::vector<int> topo_order() const;
};

CouplingTree validate_tree(const std::vector<int>& k);

// Space-time coupling and reaction coefficients with their class parameters.
// a[i-1] is a_{i,k(i)}; c[j] is the diagonal coefficient of component j.
struct CoefficientSet {
  std::vector<SpaceTimeField> a;  // size n
  std::vector<SpaceTimeField> c;  // size n+1
  double M = 0.0;
  double delta = 0.0;

  int n() const { return static_cast<int>(a.size()); }
};

// Membership in the class E_{M,delta}: sup-norm bounds, support of a_i inside
// omega_i, lower bound delta on omega_under_i, constant sign on omega_tilde_i.
// Failures are report entries; worst-case margins are always included.
ValidationReport check_class_membership(const Grid& g, const CoefficientSet& coeffs,
                                        const SubdomainFamily& fam, double M, double delta);

// Kalman controllability matrix [B, A0*B, ..., A0^n*B] for the constant
// coefficient counterexamples.
Eigen::MatrixXd kalman_matrix(const Eigen::MatrixXd& A0, const Eigen::VectorXd& B);

// Numerical rank: number of singular values above tol * sigma_max.
int kalman_rank(const Eigen::MatrixXd& K, double tol = 1e-10);

// Orthonormal basis (columns) of the orthogonal complement of the Kalman
// column space; empty matrix when the pair is full rank.
Eigen::MatrixXd unobservable_directions(const Eigen::MatrixXd& A0, const Eigen::VectorXd& B,
                                        double tol = 1e-10);

}  // namespace parcs
