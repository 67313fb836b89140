#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace castelnuovo {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact field arithmetic is routed through a field object so that runtime
/// moduli (F_p, F_{p^2}) and number fields share one set of algorithms.
template <typename F>
concept Field = std::equality_comparable<F> && requires(const F& field,
                                                        const typename F::Element& x,
                                                        long long n) {
  typename F::Element;
  { field.zero() } -> std::convertible_to<typename F::Element>;
  { field.one() } -> std::convertible_to<typename F::Element>;
  { field.from_int(n) } -> std::convertible_to<typename F::Element>;
  { field.add(x, x) } -> std::convertible_to<typename F::Element>;
  { field.sub(x, x) } -> std::convertible_to<typename F::Element>;
  { field.mul(x, x) } -> std::convertible_to<typename F::Element>;
  { field.neg(x) } -> std::convertible_to<typename F::Element>;
  { field.inv(x) } -> std::convertible_to<typename F::Element>;
  { field.is_zero(x) } -> std::convertible_to<bool>;
  { field.equal(x, x) } -> std::convertible_to<bool>;
  { field.contains(x) } -> std::convertible_to<bool>;
  { field.format(x) } -> std::convertible_to<std::string>;
  { field.name() } -> std::convertible_to<std::string>;
};

/// Finite fields additionally enumerate their elements by index.
template <typename F>
concept FiniteField = Field<F> && requires(const F& field, std::uint64_t index) {
  { field.size() } -> std::convertible_to<std::uint64_t>;
  { field.element(index) } -> std::convertible_to<typename F::Element>;
};

class RationalField {
 public:
  using Element = Rational;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long long n) const { return n; }
  Element add(const Element& x, const Element& y) const { return x + y; }
  Element sub(const Element& x, const Element& y) const { return x - y; }
  Element mul(const Element& x, const Element& y) const { return x * y; }
  Element neg(const Element& x) const { return -x; }
  Element inv(const Element& x) const;
  bool is_zero(const Element& x) const { return x == 0; }
  bool equal(const Element& x, const Element& y) const { return x == y; }
  bool contains(const Element&) const { return true; }
  std::string format(const Element& x) const { return x.str(); }
  std::string name() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// F_p for a prime p <= 2^31. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  using Element = std::uint64_t;

  /// Throws InvalidArgument unless p is a prime no larger than 2^31.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t characteristic() const noexcept { return p_; }
  std::uint64_t size() const noexcept { return p_; }
  Element element(std::uint64_t index) const { return index % p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long long n) const;
  Element from_big(const BigInt& n) const;
  /// Throws InvalidArgument when p divides the denominator.
  Element from_rational(const Rational& x) const;
  Element add(Element x, Element y) const { return (x + y) % p_; }
  Element sub(Element x, Element y) const { return (x + p_ - y) % p_; }
  Element mul(Element x, Element y) const { return (x * y) % p_; }
  Element neg(Element x) const { return x == 0 ? 0 : p_ - x; }
  Element pow(Element x, std::uint64_t e) const;
  Element inv(Element x) const;
  bool is_zero(Element x) const { return x == 0; }
  bool equal(Element x, Element y) const { return x == y; }
  bool contains(Element x) const { return x < p_; }
  /// Euler's criterion; zero counts as a square.
  bool is_square(Element x) const;
  std::string format(Element x) const { return std::to_string(x); }
  std::string name() const { return "F" + std::to_string(p_); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

/// a + b*theta in F_{p^2}.
struct QuadraticElement {
  std::uint64_t re = 0;
  std::uint64_t im = 0;

  QuadraticElement() = default;
  QuadraticElement(std::uint64_t r, std::uint64_t i = 0) : re(r), im(i) {}
  friend bool operator==(const QuadraticElement&, const QuadraticElement&) = default;
};

/// F_{p^2} = F_p[theta] / (theta^2 - n) for the least quadratic non-residue n
/// of an odd prime p. Irreducibility of theta^2 - n is verified at construction.
class QuadraticExtensionField {
 public:
  using Element = QuadraticElement;

  explicit QuadraticExtensionField(std::uint64_t p);

  const PrimeField& base() const noexcept { return base_; }
  std::uint64_t nonresidue() const noexcept { return nonresidue_; }
  std::uint64_t size() const noexcept { return base_.size() * base_.size(); }
  Element element(std::uint64_t index) const {
    return {index % base_.size(), (index / base_.size()) % base_.size()};
  }

  Element zero() const { return {}; }
  Element one() const { return {1, 0}; }
  Element from_int(long long n) const { return {base_.from_int(n), 0}; }
  Element embed(std::uint64_t x) const { return {x % base_.size(), 0}; }
  Element add(const Element& x, const Element& y) const;
  Element sub(const Element& x, const Element& y) const;
  Element mul(const Element& x, const Element& y) const;
  Element neg(const Element& x) const;
  Element inv(const Element& x) const;
  bool is_zero(const Element& x) const { return x.re == 0 && x.im == 0; }
  bool equal(const Element& x, const Element& y) const { return x == y; }
  bool contains(const Element& x) const {
    return base_.contains(x.re) && base_.contains(x.im);
  }
  std::string format(const Element& x) const;
  std::string name() const { return base_.name() + "^2"; }

  friend bool operator==(const QuadraticExtensionField&, const QuadraticExtensionField&) = default;

 private:
  PrimeField base_;
  std::uint64_t nonresidue_;
};

/// a + b*sqrt(D) over the rationals.
struct SurdElement {
  Rational a;
  Rational b;

  SurdElement() = default;
  SurdElement(Rational x, Rational y = 0) : a(std::move(x)), b(std::move(y)) {}
  friend bool operator==(const SurdElement&, const SurdElement&) = default;
};

/// Q(sqrt(D)) for a rational D that is not a rational square.
class QuadraticNumberField {
 public:
  using Element = SurdElement;

  /// Throws InvalidArgument when D is a square in Q (including 0).
  explicit QuadraticNumberField(Rational discriminant);

  const Rational& discriminant() const noexcept { return discriminant_; }

  Element zero() const { return {}; }
  Element one() const { return {1}; }
  Element from_int(long long n) const { return {Rational(n)}; }
  Element add(const Element& x, const Element& y) const { return {x.a + y.a, x.b + y.b}; }
  Element sub(const Element& x, const Element& y) const { return {x.a - y.a, x.b - y.b}; }
  Element mul(const Element& x, const Element& y) const;
  Element neg(const Element& x) const { return {-x.a, -x.b}; }
  Element inv(const Element& x) const;
  bool is_zero(const Element& x) const { return x.a == 0 && x.b == 0; }
  bool equal(const Element& x, const Element& y) const { return x == y; }
  bool contains(const Element&) const { return true; }
  std::string format(const Element& x) const;
  std::string name() const { return "Q(sqrt(" + discriminant_.str() + "))"; }

  friend bool operator==(const QuadraticNumberField&, const QuadraticNumberField&) = default;

 private:
  Rational discriminant_;
};

bool is_prime(std::uint64_t n);

/// Exact square root of a non-negative rational when it is a rational square.
bool rational_sqrt(const Rational& x, Rational& root);

static_assert(Field<RationalField>);
static_assert(FiniteField<PrimeField>);
static_assert(FiniteField<QuadraticExtensionField>);
static_assert(Field<QuadraticNumberField>);

}  // namespace castelnuovo

namespace Eigen {

template <>
struct NumTraits<castelnuovo::QuadraticElement> : GenericNumTraits<castelnuovo::QuadraticElement> {
  using Real = castelnuovo::QuadraticElement;
  using NonInteger = castelnuovo::QuadraticElement;
  using Nested = castelnuovo::QuadraticElement;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 0, RequireInitialization = 1,
         ReadCost = 2, AddCost = 2, MulCost = 8 };
};

template <>
struct NumTraits<castelnuovo::SurdElement> : GenericNumTraits<castelnuovo::SurdElement> {
  using Real = castelnuovo::SurdElement;
  using NonInteger = castelnuovo::SurdElement;
  using Nested = castelnuovo::SurdElement;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1,
         ReadCost = HugeCost, AddCost = HugeCost, MulCost = HugeCost };
};

}  // namespace Eigen
