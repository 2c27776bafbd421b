#include "bifree/exp_poly.hpp"

#include <cmath>

#include "bifree/errors.hpp"

namespace bifree {

namespace {

void trim(std::vector<Rational>& poly) {
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
}

Rational factorial(std::size_t k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(f);
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

std::string monomial(const Rational& c, std::size_t k) {
  const std::string power = k == 0 ? "" : k == 1 ? "t" : "t^" + std::to_string(k);
  if (k == 0) return to_string(c);
  if (c == 1) return power;
  return to_string(c) + "*" + power;
}

std::string render_poly(const std::vector<Rational>& poly, bool& single) {
  std::string out;
  std::size_t count = 0;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (poly[k] == 0) continue;
    const Rational c = poly[k];
    if (count == 0) {
      out = monomial(c, k);
    } else {
      out += c < 0 ? " - " : " + ";
      out += monomial(abs(c), k);
    }
    ++count;
  }
  single = count == 1;
  return out;
}

}  // namespace

void ExpPoly::add(const std::vector<Rational>& poly, const Rational& rate) {
  auto& target = terms_[rate];
  if (target.size() < poly.size()) target.resize(poly.size());
  for (std::size_t k = 0; k < poly.size(); ++k) target[k] += poly[k];
  trim(target);
  if (target.empty()) terms_.erase(rate);
}

Rational ExpPoly::taylor_coefficient(std::size_t k) const {
  Rational total = 0;
  for (const auto& [rate, poly] : terms_) {
    for (std::size_t j = 0; j < poly.size() && j <= k; ++j) {
      Rational power = 1;
      for (std::size_t e = 0; e < k - j; ++e) power *= rate;
      total += poly[j] * power / factorial(k - j);
    }
  }
  return total;
}

double ExpPoly::evaluate(double t) const {
  double total = 0;
  for (const auto& [rate, poly] : terms_) {
    double p = 0;
    for (std::size_t k = poly.size(); k-- > 0;) p = p * t + poly[k].get_d();
    total += p * std::exp(rate.get_d() * t);
  }
  return total;
}

std::string ExpPoly::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [rate, poly] = *it;
    bool single = false;
    std::string p = render_poly(poly, single);
    std::string term;
    if (rate == 0) {
      term = single ? p : "(" + p + ")";
    } else {
      const std::string e = rate == 1 ? "exp(t)" : rate == -1 ? "exp(-t)" : "exp(" + to_string(rate) + "*t)";
      if (p == "1") {
        term = e;
      } else {
        term = (single ? p : "(" + p + ")") + " * " + e;
      }
    }
    out += out.empty() ? term : " + " + term;
  }
  return out;
}

ExpPoly ubm_moment(unsigned n) {
  ExpPoly result;
  if (n == 0) {
    result.add({Rational(1)}, 0);
    return result;
  }
  std::vector<Rational> poly(n);
  const Rational n_q(n);
  Rational n_power = 1 / n_q;
  for (unsigned k = 0; k < n; ++k) {
    const Rational sign = k % 2 == 0 ? 1 : -1;
    poly[k] = sign * n_power * Rational(binomial(n, k + 1)) / factorial(k);
    n_power *= n_q;
  }
  Rational rate(-static_cast<long>(n), 2);
  rate.canonicalize();
  result.add(poly, rate);
  return result;
}

double ubm_eval(unsigned n, double t) {
  if (t < 0) throw DomainError("ubm_eval needs t >= 0");
  return ubm_moment(n).evaluate(t);
}

}  // namespace bifree
