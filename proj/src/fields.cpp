#include "parcs/fields.hpp"

#include <cmath>
#include <cstdio>

namespace parcs {

double dot_state(const Grid& g, const State& a, const State& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i) s += a.data[i] * b.data[i];
  return g.h * s;
}

double norm_state(const Grid& g, const State& a) { return std::sqrt(dot_state(g, a, a)); }

double sup_norm(const State& a) {
  double m = 0.0;
  for (double v : a.data) m = std::max(m, std::abs(v));
  return m;
}

State TrajectoryField::state_at(int m) const {
  State s(ncomp, Nx);
  const std::size_t off = static_cast<std::size_t>(m) * ncomp * Nx;
  std::copy(data.begin() + off, data.begin() + off + static_cast<std::size_t>(ncomp) * Nx,
            s.data.begin());
  return s;
}

void TrajectoryField::set_state(int m, const State& s) {
  const std::size_t off = static_cast<std::size_t>(m) * ncomp * Nx;
  std::copy(s.data.begin(), s.data.end(), data.begin() + off);
}

double TrajectoryField::sup_abs() const {
  double m = 0.0;
  for (double v : data) m = std::max(m, std::abs(v));
  return m;
}

bool TrajectoryField::all_finite() const {
  for (double v : data)
    if (!std::isfinite(v)) return false;
  return true;
}

double ControlField::sup_abs() const {
  double m = 0.0;
  for (double v : data) m = std::max(m, std::abs(v));
  return m;
}

namespace {
void append_sci(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  out += buf;
}
}  // namespace

std::string trajectory_csv(const Grid& g, const TrajectoryField& tf) {
  std::string out = "t,x,component,value\r\n";
  for (int m = 0; m <= tf.Nt; ++m)
    for (int i = 0; i < tf.ncomp; ++i) {
      auto row = tf.comp(m, i);
      for (int j = 0; j < tf.Nx; ++j) {
        append_sci(out, g.t(m));
        out += ',';
        append_sci(out, g.x(j + 1));
        out += ',';
        out += std::to_string(i);
        out += ',';
        append_sci(out, row[j]);
        out += "\r\n";
      }
    }
  return out;
}

std::string control_csv(const Grid& g, const ControlField& u) {
  std::string out = "t,x,value\r\n";
  for (int m = 0; m <= u.Nt; ++m) {
    auto row = u.level(m);
    for (int j = 0; j < u.nx; ++j) {
      append_sci(out, g.t(m));
      out += ',';
      append_sci(out, g.x(u.node_lo + j));
      out += ',';
      append_sci(out, row[j]);
      out += "\r\n";
    }
  }
  return out;
}

}  // namespace parcs
