#include "castelnuovo/fields.hpp"

#include "castelnuovo/errors.hpp"

namespace castelnuovo {

RationalField::Element RationalField::inv(const Element& x) const {
  if (x == 0) {
    throw InvalidArgument("division by zero in Q");
  }
  return 1 / x;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p > (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw InvalidArgument("F_p requires a prime p <= 2^31, got " + std::to_string(p));
  }
}

PrimeField::Element PrimeField::from_int(long long n) const {
  const long long m = static_cast<long long>(p_);
  return static_cast<Element>(((n % m) + m) % m);
}

PrimeField::Element PrimeField::from_big(const BigInt& n) const {
  BigInt r = n % p_;
  if (r < 0) {
    r += p_;
  }
  return r.convert_to<Element>();
}

PrimeField::Element PrimeField::from_rational(const Rational& x) const {
  const Element den = from_big(boost::multiprecision::denominator(x));
  if (den == 0) {
    throw InvalidArgument("denominator of " + x.str() + " vanishes mod " + std::to_string(p_));
  }
  return mul(from_big(boost::multiprecision::numerator(x)), inv(den));
}

PrimeField::Element PrimeField::pow(Element x, std::uint64_t e) const {
  Element result = 1 % p_;
  x %= p_;
  while (e > 0) {
    if (e & 1U) {
      result = mul(result, x);
    }
    x = mul(x, x);
    e >>= 1U;
  }
  return result;
}

PrimeField::Element PrimeField::inv(Element x) const {
  if (x % p_ == 0) {
    throw InvalidArgument("division by zero in " + name());
  }
  return pow(x, p_ - 2);
}

bool PrimeField::is_square(Element x) const {
  if (x == 0 || p_ == 2) {
    return true;
  }
  return pow(x, (p_ - 1) / 2) == 1;
}

QuadraticExtensionField::QuadraticExtensionField(std::uint64_t p) : base_(p), nonresidue_(0) {
  if (p == 2) {
    throw InvalidArgument("F_{p^2} as F_p[theta]/(theta^2 - n) needs an odd prime");
  }
  for (std::uint64_t n = 2; n < p; ++n) {
    if (!base_.is_square(n)) {
      nonresidue_ = n;
      break;
    }
  }
  // theta^2 - n is irreducible iff it has no root in F_p.
  for (std::uint64_t x = 0; x < p; ++x) {
    if (nonresidue_ == 0 || base_.mul(x, x) == nonresidue_) {
      throw InvalidArgument("failed to find an irreducible quadratic over " + base_.name());
    }
  }
}

QuadraticElement QuadraticExtensionField::add(const Element& x, const Element& y) const {
  return {base_.add(x.re, y.re), base_.add(x.im, y.im)};
}

QuadraticElement QuadraticExtensionField::sub(const Element& x, const Element& y) const {
  return {base_.sub(x.re, y.re), base_.sub(x.im, y.im)};
}

QuadraticElement QuadraticExtensionField::neg(const Element& x) const {
  return {base_.neg(x.re), base_.neg(x.im)};
}

QuadraticElement QuadraticExtensionField::mul(const Element& x, const Element& y) const {
  const auto re = base_.add(base_.mul(x.re, y.re),
                            base_.mul(nonresidue_, base_.mul(x.im, y.im)));
  const auto im = base_.add(base_.mul(x.re, y.im), base_.mul(x.im, y.re));
  return {re, im};
}

QuadraticElement QuadraticExtensionField::inv(const Element& x) const {
  // (a + b theta)^{-1} = (a - b theta) / (a^2 - n b^2)
  const auto norm = base_.sub(base_.mul(x.re, x.re), base_.mul(nonresidue_, base_.mul(x.im, x.im)));
  if (norm == 0) {
    throw InvalidArgument("division by zero in " + name());
  }
  const auto scale = base_.inv(norm);
  return {base_.mul(x.re, scale), base_.mul(base_.neg(x.im), scale)};
}

std::string QuadraticExtensionField::format(const Element& x) const {
  if (x.im == 0) {
    return std::to_string(x.re);
  }
  return std::to_string(x.re) + "+" + std::to_string(x.im) + "*t";
}

bool rational_sqrt(const Rational& x, Rational& root) {
  if (x < 0) {
    return false;
  }
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  const BigInt num_root = boost::multiprecision::sqrt(num);
  const BigInt den_root = boost::multiprecision::sqrt(den);
  if (num_root * num_root != num || den_root * den_root != den) {
    return false;
  }
  root = Rational(num_root, den_root);
  return true;
}

QuadraticNumberField::QuadraticNumberField(Rational discriminant)
    : discriminant_(std::move(discriminant)) {
  Rational root;
  if (rational_sqrt(discriminant_, root)) {
    throw InvalidArgument(discriminant_.str() + " is a rational square");
  }
}

SurdElement QuadraticNumberField::mul(const Element& x, const Element& y) const {
  return {x.a * y.a + discriminant_ * x.b * y.b, x.a * y.b + x.b * y.a};
}

SurdElement QuadraticNumberField::inv(const Element& x) const {
  const Rational norm = x.a * x.a - discriminant_ * x.b * x.b;
  if (norm == 0) {
    throw InvalidArgument("division by zero in " + name());
  }
  return {x.a / norm, -x.b / norm};
}

std::string QuadraticNumberField::format(const Element& x) const {
  if (x.b == 0) {
    return x.a.str();
  }
  const std::string surd = "sqrt(" + discriminant_.str() + ")";
  const std::string coefficient =
      x.b == 1 || x.b == -1 ? surd : Rational(abs(x.b)).str() + "*" + surd;
  const std::string sign = x.b < 0 ? "-" : "+";
  if (x.a == 0) {
    return (x.b < 0 ? "-" : "") + coefficient;
  }
  return x.a.str() + sign + coefficient;
}

}  // namespace castelnuovo
