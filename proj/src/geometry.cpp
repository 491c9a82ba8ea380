#include "parcs/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "parcs/coupling.hpp"

namespace parcs {

NodeSet NodeSet::of(const Subdomain& s) {
  NodeSet r;
  if (s.node_hi >= s.node_lo) r.pieces.push_back({s.node_lo, s.node_hi});
  return r;
}

int NodeSet::count() const {
  int c = 0;
  for (const auto& p : pieces) c += p.count();
  return c;
}

bool NodeSet::contains(int j) const {
  for (const auto& p : pieces)
    if (p.lo <= j && j <= p.hi) return true;
  return false;
}

NodeSet NodeSet::intersect(const NodeSet& other) const {
  NodeSet r;
  for (const auto& a : pieces)
    for (const auto& b : other.pieces) {
      int lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
      if (lo <= hi) r.pieces.push_back({lo, hi});
    }
  std::sort(r.pieces.begin(), r.pieces.end(),
            [](const Piece& x, const Piece& y) { return x.lo < y.lo; });
  return r;
}

NodeSet NodeSet::subtract(const NodeSet& other) const {
  NodeSet r;
  for (const auto& a : pieces) {
    std::vector<Piece> cur{a};
    for (const auto& b : other.pieces) {
      std::vector<Piece> next;
      for (const auto& c : cur) {
        if (b.hi < c.lo || b.lo > c.hi) {
          next.push_back(c);
          continue;
        }
        if (c.lo < b.lo) next.push_back({c.lo, b.lo - 1});
        if (b.hi < c.hi) next.push_back({b.hi + 1, c.hi});
      }
      cur = std::move(next);
    }
    r.pieces.insert(r.pieces.end(), cur.begin(), cur.end());
  }
  std::sort(r.pieces.begin(), r.pieces.end(),
            [](const Piece& x, const Piece& y) { return x.lo < y.lo; });
  return r;
}

std::optional<NodeSet::Piece> NodeSet::enclosing_piece(int lo, int hi) const {
  for (const auto& p : pieces)
    if (p.lo <= lo && hi <= p.hi) return p;
  return std::nullopt;
}

bool ValidationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks)
    os << (c.pass ? "[pass] " : "[FAIL] ") << c.name << (c.detail.empty() ? "" : ": " + c.detail)
       << "\n";
  return os.str();
}

SubdomainFamily SubdomainFamily::build(const Grid& g, Subdomain omega0,
                                       std::vector<Subdomain> omega,
                                       std::vector<Subdomain> omega_under,
                                       std::vector<Subdomain> omega_tilde) {
  (void)g;
  SubdomainFamily fam;
  fam.omega0 = omega0;
  fam.omega = std::move(omega);
  fam.omega_under = std::move(omega_under);
  fam.omega_tilde = std::move(omega_tilde);
  const std::size_t n = fam.omega.size();
  if (fam.omega_under.size() != n + 1 || fam.omega_tilde.size() != n + 1)
    fail(ErrorKind::SchemaError, "omega_under/omega_tilde must have n+1 entries");
  for (std::size_t j = 0; j <= n; ++j) {
    if (!compactly_included(fam.omega_tilde[j], fam.omega_under[j], 1))
      fail(ErrorKind::MarginTooSmall,
           "omega_tilde[" + std::to_string(j) + "] must sit compactly inside omega_under[" +
               std::to_string(j) + "]");
  }
  return fam;
}

namespace {

ValidationCheck inclusion_check(const std::string& name, const Subdomain& inner,
                                const NodeSet& outer) {
  ValidationCheck c;
  c.name = name;
  auto piece = outer.enclosing_piece(inner.node_lo, inner.node_hi);
  if (piece && piece->lo <= inner.node_lo - 1 && piece->hi >= inner.node_hi + 1) {
    c.pass = true;
    c.witness.push_back(*piece);
  } else {
    c.pass = false;
    c.detail = piece ? "inclusion holds but without one-cell margin"
                     : "inner node range not contained in a single piece";
  }
  return c;
}

ValidationCheck nonempty_check(const std::string& name, const NodeSet& set) {
  ValidationCheck c;
  c.name = name;
  c.pass = !set.empty();
  if (c.pass)
    c.witness = set.pieces;
  else
    c.detail = "no grid nodes in the set";
  return c;
}

}  // namespace

ValidationReport check_star_hypotheses(const Grid& g, const SubdomainFamily& fam) {
  (void)g;
  ValidationReport rep;
  const int n = fam.n();
  for (int i = 1; i <= n; ++i) {
    NodeSet w = NodeSet::of(fam.omega[i - 1]).intersect(NodeSet::of(fam.omega0));
    for (int j = 1; j <= n; ++j)
      if (j != i) w = w.subtract(NodeSet::of(fam.omega[j - 1]));
    rep.checks.push_back(
        nonempty_check("star: (omega_" + std::to_string(i) + " * omega_0) \\ others nonempty", w));
    rep.checks.push_back(inclusion_check(
        "star: omega_under_" + std::to_string(i) + " compactly inside", fam.omega_under[i], w));
  }
  return rep;
}

ValidationReport check_tree_hypotheses(const Grid& g, const SubdomainFamily& fam,
                                       const CouplingTree& tree) {
  (void)g;
  ValidationReport rep;
  const int n = fam.n();
  {
    ValidationCheck c;
    c.name = "tree: omega_under_0 compactly inside omega_0";
    c.pass = compactly_included(fam.omega_under[0], fam.omega0, 1);
    if (c.pass) c.witness.push_back({fam.omega0.node_lo, fam.omega0.node_hi});
    rep.checks.push_back(c);
  }
  for (int i = 1; i <= n; ++i) {
    // D_i: intersection along the ancestor chain i, k(i), ..., 0.
    NodeSet d = NodeSet::of(fam.omega[i - 1]);
    int node = i;
    while (node != 0) {
      node = tree.parent(node);
      d = d.intersect(NodeSet::of(fam.omega_of(node)));
    }
    rep.checks.push_back(nonempty_check("tree: D_" + std::to_string(i) + " nonempty", d));

    NodeSet e = d;
    for (int j = 1; j <= n; ++j)
      if (j != i && tree.parent(j) == tree.parent(i)) e = e.subtract(NodeSet::of(fam.omega[j - 1]));
    rep.checks.push_back(
        nonempty_check("tree: D_" + std::to_string(i) + " minus siblings nonempty", e));
    rep.checks.push_back(inclusion_check(
        "tree: omega_under_" + std::to_string(i) + " compactly inside", fam.omega_under[i], e));

    ValidationCheck chain;
    chain.name = "tree: omega_under_" + std::to_string(i) + " compactly inside omega_under_" +
                 std::to_string(tree.parent(i));
    chain.pass = compactly_included(fam.omega_under[i], fam.omega_under[tree.parent(i)], 1);
    if (!chain.pass) chain.detail = "nesting chain broken";
    rep.checks.push_back(chain);
  }
  return rep;
}

std::vector<double> build_cutoff(const Grid& g, const Subdomain& omega_under,
                                 const Subdomain& omega_tilde, int sign) {
  if (!compactly_included(omega_tilde, omega_under, 1))
    fail(ErrorKind::MarginTooSmall, "omega_tilde must sit compactly inside omega_under");
  std::vector<double> gamma(g.Nx, 0.0);
  const double s = sign >= 0 ? 1.0 : -1.0;
  for (int j = omega_under.node_lo; j <= omega_under.node_hi; ++j) {
    const double x = g.x(j);
    double v;
    if (x < omega_tilde.lo)
      v = smoothstep5((x - omega_under.lo) / (omega_tilde.lo - omega_under.lo));
    else if (x > omega_tilde.hi)
      v = smoothstep5((omega_under.hi - x) / (omega_under.hi - omega_tilde.hi));
    else
      v = 1.0;
    gamma[j - 1] = s * v;
  }
  return gamma;
}

}  // namespace parcs
