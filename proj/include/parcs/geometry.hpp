#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parcs/grid.hpp"

namespace parcs {

struct CouplingTree;  // coupling.hpp

// A union of disjoint node-index ranges [lo,hi], kept sorted. This is the
// discrete image of interval arithmetic on subdomains; every hypothesis
// check below reduces to operations on these sets.
struct NodeSet {
  struct Piece {
    int lo;
    int hi;
    int count() const { return hi - lo + 1; }
  };
  std::vector<Piece> pieces;

  static NodeSet of(const Subdomain& s);
  bool empty() const { return pieces.empty(); }
  int count() const;
  bool contains(int j) const;
  NodeSet intersect(const NodeSet& other) const;
  NodeSet subtract(const NodeSet& other) const;
  // The piece containing [lo,hi] entirely, if any.
  std::optional<Piece> enclosing_piece(int lo, int hi) const;
};

struct ValidationCheck {
  std::string name;
  bool pass = false;
  std::string detail;
  std::vector<NodeSet::Piece> witness;  // nonempty node ranges backing a pass
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_pass() const;
  std::string summary() const;
};

// Subdomain families entering the coupling hypotheses. Index conventions:
// omega[i-1] is the coupling support of component i (i = 1..n); omega_under
// and omega_tilde are indexed 0..n. The tilde-in-under compact inclusions
// are construction invariants; the star/tree relations are report material.
struct SubdomainFamily {
  Subdomain omega0;
  std::vector<Subdomain> omega;        // size n
  std::vector<Subdomain> omega_under;  // size n+1
  std::vector<Subdomain> omega_tilde;  // size n+1

  int n() const { return static_cast<int>(omega.size()); }
  const Subdomain& omega_of(int i) const { return i == 0 ? omega0 : omega[i - 1]; }

  static SubdomainFamily build(const Grid& g, Subdomain omega0, std::vector<Subdomain> omega,
                               std::vector<Subdomain> omega_under,
                               std::vector<Subdomain> omega_tilde);
};

// Star hypotheses: (omega_i ∩ omega_0) \ U_{j != 0,i} omega_j is nonempty
// and compactly contains omega_under_i, for every i = 1..n.
ValidationReport check_star_hypotheses(const Grid& g, const SubdomainFamily& fam);

// Tree hypotheses: the ancestor-chain intersections D_i are nonempty, stay
// nonempty after removing sibling supports, compactly contain omega_under_i,
// and the omega_under chain is nested toward the root.
ValidationReport check_tree_hypotheses(const Grid& g, const SubdomainFamily& fam,
                                       const CouplingTree& tree);

// C2 cutoff on the grid: zero outside omega_under, equal to sign on
// omega_tilde, quintic smoothstep flanks in between, |value| <= 1.
std::vector<double> build_cutoff(const Grid& g, const Subdomain& omega_under,
                                 const Subdomain& omega_tilde, int sign);

// Quintic smoothstep: C2 monotone ramp with S(0)=0, S(1)=1, S'(0)=S'(1)=S''(0)=S''(1)=0.
inline double smoothstep5(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

}  // namespace parcs
