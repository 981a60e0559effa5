#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace wlp {

// A monomial in a fixed number of variables, stored as its exponent vector.
// Exponents are small machine integers; big integers are confined to the
// linear algebra layer.
struct Monomial {
  std::vector<int> exponents;

  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : exponents(std::move(exps)) {}

  static Monomial one(int num_vars) {
    return Monomial(std::vector<int>(num_vars, 0));
  }
  static Monomial variable(int num_vars, int j, int power = 1);

  int num_vars() const { return static_cast<int>(exponents.size()); }
  int degree() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial times_variable(int j) const;

  // Human-readable form, e.g. "x0^2*x3"; "1" for the empty product.
  std::string str() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Canonical monomial order: graded first, ties broken on exponent vectors
// read from variable 0 upward with the larger exponent sorting earlier.
// Every basis, matrix and report in the project is indexed in this order.
bool canonical_less(const Monomial& a, const Monomial& b);

// Dimensions of the graded pieces of A = S/I, trailing zeros trimmed.
// h[0] = 1 for every Artinian quotient of a polynomial ring.
using HilbertFunction = std::vector<std::int64_t>;

// A monomial ideal held by an inclusion-minimal generating set in canonical
// order. Construction minimalizes and validates; the unit ideal (a degree-0
// generator) is rejected. num_vars == 0 encodes the trivial algebra K, which
// arises as the link of an isolated vertex.
class MonomialIdeal {
 public:
  MonomialIdeal(int num_vars, std::vector<Monomial> generators);

  int num_vars() const { return num_vars_; }
  const std::vector<Monomial>& generators() const { return gens_; }

  // Ideal membership: some generator divides m.
  bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int num_vars_ = 0;
  std::vector<Monomial> gens_;
};

// Named constructor mirroring MonomialIdeal's minimalizing constructor.
MonomialIdeal minimalize(std::vector<Monomial> gens, int num_vars);

// True iff every variable admits a pure-power generator, i.e. S/I is a
// finite-dimensional vector space.
bool is_artinian(const MonomialIdeal& ideal);

// All degree-deg monomials outside the ideal, in canonical order. These are
// the basis of A_deg. Requires an Artinian ideal.
std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal, int deg);

// The standard-monomial bases of every graded piece A_0, ..., A_d.
struct GradedBasis {
  std::vector<std::vector<Monomial>> by_degree;

  int socle_degree() const { return static_cast<int>(by_degree.size()) - 1; }
  // Basis of A_deg; empty above the socle degree.
  const std::vector<Monomial>& at(int deg) const;
  std::int64_t dim(int deg) const {
    return deg >= 0 && deg < static_cast<int>(by_degree.size())
               ? static_cast<std::int64_t>(by_degree[deg].size())
               : 0;
  }
};

GradedBasis graded_basis(const MonomialIdeal& ideal);

HilbertFunction hilbert_function(const MonomialIdeal& ideal);

// Largest degree d with A_d != 0.
int socle_degree(const MonomialIdeal& ideal);

// All standard monomials annihilated by every variable, ordered by degree
// then canonically.
std::vector<Monomial> socle(const MonomialIdeal& ideal);

// True iff the socle is concentrated in the top degree.
bool is_level(const MonomialIdeal& ideal);

// The ideal presenting A (x) B on the disjoint union of the variable blocks.
// The Hilbert function of the result is the coefficientwise product of the
// factors' Hilbert functions.
MonomialIdeal tensor_ideal(const MonomialIdeal& a, const MonomialIdeal& b);

// I plus all monomials of degree i+2, minimalized. Kills every graded piece
// above degree i+1 and leaves the lower ones untouched.
MonomialIdeal truncate_ideal(const MonomialIdeal& ideal, int i);

// (I : m) by monomial division. Rejects m in I (the quotient would be the
// unit ideal).
MonomialIdeal colon_ideal(const MonomialIdeal& ideal, const Monomial& m);

// Calls fn with every degree-deg exponent vector over num_vars variables,
// in canonical order.
void for_each_monomial(int num_vars, int deg,
                       const std::function<void(const Monomial&)>& fn);

}  // namespace wlp
