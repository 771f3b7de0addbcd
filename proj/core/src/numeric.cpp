#include "origami/numeric.hpp"

namespace origami {

Integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

Integer to_integer(const Rational& q) {
  if (!is_integral(q)) throw std::domain_error("rational " + to_string(q) + " is not an integer");
  return numerator(q);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }
double to_double(const Integer& z) { return z.convert_to<double>(); }

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string GaussianRational::str() const {
  if (im == 0) return to_string(re);
  std::string s;
  if (re != 0) {
    s = to_string(re);
    if (im > 0) s += "+";
  }
  Rational a = im > 0 ? im : Rational(-im);
  if (im < 0) s += "-";
  if (a != 1) s += to_string(a);
  s += "i";
  return s;
}

}  // namespace origami
