#pragma once

#include <vector>

#include "cyop/series.hpp"

namespace cyop {

/// Solution-shaped object sum_j f_j(z) log(z)^j / j!, stored as the list of
/// analytic parts f_0..f_k (factorial-normalized, all with one truncation
/// order). theta = z d/dz acts without leaving the class, which is why all
/// internal calculus here is done with theta rather than d/dz.
class LogSeries {
 public:
  LogSeries() : parts_(1, PowerSeries()) {}
  explicit LogSeries(std::vector<PowerSeries> parts);
  LogSeries(const PowerSeries& analytic) : parts_{analytic} {}

  static LogSeries log_power(int j, int trunc_order);  // log(z)^j / j!

  int log_degree() const { return static_cast<int>(parts_.size()) - 1; }
  int trunc_order() const { return parts_[0].trunc_order(); }
  const PowerSeries& part(int j) const {
    static const PowerSeries zero;
    return (j >= 0 && j <= log_degree()) ? parts_[j] : zero;
  }
  const std::vector<PowerSeries>& parts() const { return parts_; }

  /// Analytic part f_0.
  const PowerSeries& analytic() const { return parts_[0]; }
  bool is_zero() const;
  bool is_log_free() const;
  /// Drops vanishing top log parts.
  LogSeries trimmed() const;
  LogSeries truncated(int order) const;

  LogSeries operator-() const;
  friend LogSeries operator+(const LogSeries& a, const LogSeries& b);
  friend LogSeries operator-(const LogSeries& a, const LogSeries& b);
  friend LogSeries operator*(const LogSeries& a, const LogSeries& b);
  friend bool operator==(const LogSeries& a, const LogSeries& b);

  LogSeries scaled(const Rational& k) const;
  LogSeries scaled_by(const PowerSeries& s) const;   // multiply by analytic series
  LogSeries divided_by(const PowerSeries& s) const;  // divide by unit analytic series

  std::string str(int max_terms = 6) const;

 private:
  std::vector<PowerSeries> parts_;
};

/// theta f, using theta(f_j log^j/j!) = (theta f_j) log^j/j! + f_j log^{j-1}/(j-1)!.
LogSeries ls_theta(const LogSeries& f);
/// Falling factorial theta(theta-1)...(theta-k+1) f, i.e. z^k f^(k).
LogSeries ls_theta_falling(const LogSeries& f, int k);
/// Multiplication by z^k.
LogSeries ls_shift_up(const LogSeries& f, int k);
/// z (f g' - f' g) = f theta(g) - theta(f) g.
LogSeries z_wronskian(const LogSeries& f, const LogSeries& g);

}  // namespace cyop
