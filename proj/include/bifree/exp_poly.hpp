#pragma once

// Exponential polynomials sum_i p_i(t) exp(rho_i t) with rational data, and
// the moments of free unitary Brownian motion.

#include <map>
#include <string>
#include <vector>

#include "bifree/rational.hpp"

namespace bifree {

class ExpPoly {
 public:
  // Adds poly(t) * exp(rate * t); poly[k] is the coefficient of t^k.
  void add(const std::vector<Rational>& poly, const Rational& rate);

  // rate -> polynomial coefficients; rates distinct, polynomials nonzero.
  const std::map<Rational, std::vector<Rational>>& terms() const { return terms_; }
  Rational taylor_coefficient(std::size_t k) const;
  double evaluate(double t) const;
  // e.g. "(1 - t) * exp(-t)", "exp(-1/2*t)", "1".
  std::string render() const;

  friend bool operator==(const ExpPoly&, const ExpPoly&) = default;

 private:
  std::map<Rational, std::vector<Rational>> terms_;
};

// phi(U(t)^n) = sum_{k<n} (-1)^k t^k/k! n^{k-1} C(n, k+1) exp(-n t/2); n = 0 gives 1.
ExpPoly ubm_moment(unsigned n);
double ubm_eval(unsigned n, double t);

}  // namespace bifree
