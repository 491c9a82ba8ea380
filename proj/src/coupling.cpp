#include "parcs/coupling.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace parcs {

bool CouplingTree::is_star() const {
  return std::all_of(k.begin(), k.end(), [](int p) { return p == 0; });
}

std::vector<int> CouplingTree::children_of(int j) const {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (k[i - 1] == j) out.push_back(i);
  return out;
}

std::vector<int> CouplingTree::topo_order() const {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(),
                   [this](int a, int b) { return depth[a - 1] < depth[b - 1]; });
  return order;
}

CouplingTree validate_tree(const std::vector<int>& k) {
  const int n = static_cast<int>(k.size());
  CouplingTree t;
  t.n = n;
  t.k = k;
  t.depth.assign(n, 0);
  for (int i = 1; i <= n; ++i) {
    if (k[i - 1] < 0 || k[i - 1] > n)
      fail(ErrorKind::SchemaError, "k(" + std::to_string(i) + ") out of range");
    if (k[i - 1] == i) fail(ErrorKind::SelfLoop, "k(" + std::to_string(i) + ") = " + std::to_string(i));
    std::vector<bool> seen(n + 1, false);
    int node = i, steps = 0;
    while (node != 0) {
      if (seen[node])
        fail(ErrorKind::CyclicCoupling, "orbit of " + std::to_string(i) + " revisits node " +
                                            std::to_string(node));
      seen[node] = true;
      node = k[node - 1];
      ++steps;
      if (steps > n)
        fail(ErrorKind::CyclicCoupling, "orbit of " + std::to_string(i) + " does not reach 0");
    }
    t.depth[i - 1] = steps;
  }
  return t;
}

namespace {
ValidationCheck bound_check(const std::string& name, double value, double bound, bool pass) {
  ValidationCheck c;
  c.name = name;
  c.pass = pass;
  std::ostringstream os;
  os << "value=" << value << " bound=" << bound;
  c.detail = os.str();
  return c;
}
}  // namespace

ValidationReport check_class_membership(const Grid& g, const CoefficientSet& coeffs,
                                        const SubdomainFamily& fam, double M, double delta) {
  ValidationReport rep;
  const int n = coeffs.n();
  for (int j = 0; j <= n; ++j) {
    double sup = 0.0;
    for (double v : coeffs.c[j].data) sup = std::max(sup, std::abs(v));
    rep.checks.push_back(
        bound_check("class: sup|c_" + std::to_string(j) + "| <= M", sup, M, sup <= M));
  }
  for (int i = 1; i <= n; ++i) {
    const auto& a = coeffs.a[i - 1];
    const Subdomain& omega_i = fam.omega[i - 1];
    const Subdomain& under_i = fam.omega_under[i];
    const Subdomain& tilde_i = fam.omega_tilde[i];

    double sup = 0.0, sup_outside = 0.0;
    double min_under = std::numeric_limits<double>::infinity();
    double sign_min = std::numeric_limits<double>::infinity();
    double sign_max = -std::numeric_limits<double>::infinity();
    for (int m = 0; m <= g.Nt; ++m)
      for (int j = 1; j <= g.Nx; ++j) {
        const double v = a(m, j - 1);
        sup = std::max(sup, std::abs(v));
        if (!omega_i.contains(g.x(j))) sup_outside = std::max(sup_outside, std::abs(v));
        if (under_i.node_lo <= j && j <= under_i.node_hi)
          min_under = std::min(min_under, std::abs(v));
        if (tilde_i.node_lo <= j && j <= tilde_i.node_hi) {
          sign_min = std::min(sign_min, v);
          sign_max = std::max(sign_max, v);
        }
      }
    const std::string tag = "a_" + std::to_string(i);
    rep.checks.push_back(bound_check("class: sup|" + tag + "| <= M", sup, M, sup <= M));
    rep.checks.push_back(bound_check("class: " + tag + " = 0 outside omega_" + std::to_string(i),
                                     sup_outside, 0.0, sup_outside == 0.0));
    rep.checks.push_back(bound_check("class: |" + tag + "| >= delta on omega_under",
                                     min_under, delta, min_under >= delta));
    const bool const_sign = (sign_min > 0.0) || (sign_max < 0.0);
    rep.checks.push_back(bound_check("class: " + tag + " constant sign on omega_tilde",
                                     sign_min, sign_max, const_sign));
  }
  return rep;
}

Eigen::MatrixXd kalman_matrix(const Eigen::MatrixXd& A0, const Eigen::VectorXd& B) {
  const Eigen::Index d = B.size();
  Eigen::MatrixXd K(d, d);
  Eigen::VectorXd col = B;
  for (Eigen::Index j = 0; j < d; ++j) {
    K.col(j) = col;
    col = A0 * col;
  }
  return K;
}

int kalman_rank(const Eigen::MatrixXd& K, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(K);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * sv(0)) ++r;
  return r;
}

Eigen::MatrixXd unobservable_directions(const Eigen::MatrixXd& A0, const Eigen::VectorXd& B,
                                        double tol) {
  const Eigen::MatrixXd K = kalman_matrix(A0, B);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(K, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  const int r = kalman_rank(K, tol);
  const Eigen::Index d = K.rows();
  Eigen::MatrixXd basis(d, d - r);
  for (Eigen::Index j = r; j < d; ++j) basis.col(j - r) = svd.matrixU().col(j);
  (void)sv;
  return basis;
}

}  // namespace parcs
