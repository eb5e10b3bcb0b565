#include "cyop/log_series.hpp"

#include <algorithm>
#include <sstream>

namespace cyop {

LogSeries::LogSeries(std::vector<PowerSeries> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw CyopError("LogSeries: parts must be non-empty");
  int n = parts_[0].trunc_order();
  for (const auto& p : parts_)
    if (p.trunc_order() != n) throw CyopError("LogSeries: parts must share one truncation order");
}

LogSeries LogSeries::log_power(int j, int trunc_order) {
  std::vector<PowerSeries> parts(j + 1, PowerSeries(trunc_order));
  parts[j] = PowerSeries::constant(1, trunc_order);
  return LogSeries(std::move(parts));
}

bool LogSeries::is_zero() const {
  for (const auto& p : parts_)
    if (!p.is_zero()) return false;
  return true;
}

bool LogSeries::is_log_free() const {
  for (int j = 1; j <= log_degree(); ++j)
    if (!parts_[j].is_zero()) return false;
  return true;
}

LogSeries LogSeries::trimmed() const {
  int k = log_degree();
  while (k > 0 && parts_[k].is_zero()) --k;
  return LogSeries(std::vector<PowerSeries>(parts_.begin(), parts_.begin() + k + 1));
}

LogSeries LogSeries::truncated(int order) const {
  std::vector<PowerSeries> parts;
  parts.reserve(parts_.size());
  for (const auto& p : parts_) parts.push_back(p.truncated(order));
  return LogSeries(std::move(parts));
}

LogSeries LogSeries::operator-() const {
  LogSeries r = *this;
  for (auto& p : r.parts_) p = -p;
  return r;
}

LogSeries operator+(const LogSeries& a, const LogSeries& b) {
  int deg = std::max(a.log_degree(), b.log_degree());
  int n = std::min(a.trunc_order(), b.trunc_order());
  std::vector<PowerSeries> parts(deg + 1, PowerSeries(n));
  for (int j = 0; j <= deg; ++j) {
    if (j <= a.log_degree()) parts[j] += a.part(j).truncated(n);
    if (j <= b.log_degree()) parts[j] += b.part(j).truncated(n);
  }
  return LogSeries(std::move(parts));
}

LogSeries operator-(const LogSeries& a, const LogSeries& b) { return a + (-b); }

LogSeries operator*(const LogSeries& a, const LogSeries& b) {
  // log^i/i! * log^j/j! = C(i+j, i) log^{i+j}/(i+j)!.
  int deg = a.log_degree() + b.log_degree();
  int n = std::min(a.trunc_order(), b.trunc_order());
  std::vector<PowerSeries> parts(deg + 1, PowerSeries(n));
  for (int i = 0; i <= a.log_degree(); ++i) {
    if (a.part(i).is_zero()) continue;
    for (int j = 0; j <= b.log_degree(); ++j) {
      if (b.part(j).is_zero()) continue;
      Rational binom(binomial(Int(i + j), i));
      parts[i + j] += ps_mul(a.part(i), b.part(j)).scaled(binom);
    }
  }
  return LogSeries(std::move(parts));
}

bool operator==(const LogSeries& a, const LogSeries& b) {
  // Semantic equality to the common truncation order.
  int deg = std::max(a.log_degree(), b.log_degree());
  int n = std::min(a.trunc_order(), b.trunc_order());
  for (int j = 0; j <= deg; ++j)
    for (int k = 0; k <= n; ++k)
      if (a.part(j)[k] != b.part(j)[k]) return false;
  return true;
}

LogSeries LogSeries::scaled(const Rational& k) const {
  LogSeries r = *this;
  for (auto& p : r.parts_) p = p.scaled(k);
  return r;
}

LogSeries LogSeries::scaled_by(const PowerSeries& s) const {
  LogSeries r = *this;
  for (auto& p : r.parts_) p = ps_mul(p, s);
  return r;
}

LogSeries LogSeries::divided_by(const PowerSeries& s) const {
  PowerSeries inv = ps_reciprocal(s);
  return scaled_by(inv);
}

std::string LogSeries::str(int max_terms) const {
  std::ostringstream out;
  bool first = true;
  for (int j = 0; j <= log_degree(); ++j) {
    if (parts_[j].is_zero() && log_degree() > 0) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << parts_[j].str("z", max_terms) << ")";
    if (j >= 1) {
      out << "*log(z)";
      if (j >= 2) out << "^" << j << "/" << j << "!";
    }
  }
  return out.str();
}

LogSeries ls_theta(const LogSeries& f) {
  std::vector<PowerSeries> parts(f.log_degree() + 1, PowerSeries(f.trunc_order()));
  for (int j = 0; j <= f.log_degree(); ++j) {
    parts[j] = ps_theta(f.part(j));
    if (j + 1 <= f.log_degree()) parts[j] += f.part(j + 1);
  }
  return LogSeries(std::move(parts));
}

LogSeries ls_theta_falling(const LogSeries& f, int k) {
  LogSeries r = f;
  for (int j = 0; j < k; ++j) {
    // (theta - j) r
    r = ls_theta(r) - r.scaled(Rational(j));
  }
  return r;
}

LogSeries ls_shift_up(const LogSeries& f, int k) {
  std::vector<PowerSeries> parts;
  parts.reserve(f.log_degree() + 1);
  for (const auto& p : f.parts()) parts.push_back(p.shifted_up(k));
  return LogSeries(std::move(parts));
}

LogSeries z_wronskian(const LogSeries& f, const LogSeries& g) {
  return f * ls_theta(g) - ls_theta(f) * g;
}

}  // namespace cyop
