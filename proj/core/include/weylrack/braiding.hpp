// Rack-with-cocycle braided vector spaces and the Yetter-Drinfeld braiding of
// a conjugacy class with a one-dimensional centralizer character, on exact
// scalars. dim V = 1 throughout, so the basis g_i (x) v collapses to g_i and
// every braiding is a monomial matrix: one nonzero entry per column.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weylrack/classes.hpp"
#include "weylrack/rack.hpp"

namespace weylrack {

// exp(2 pi i k / m), held symbolically so equality checks are exact.
struct RootScalar {
  std::uint32_t order = 1;
  std::uint32_t exp = 0;  // reduced mod order

  static RootScalar one() { return {1, 0}; }
  static RootScalar minus_one() { return {2, 1}; }

  bool is_one() const { return exp % order == 0; }
  bool equals(const RootScalar& other) const;
  RootScalar times(const RootScalar& other) const;
};

// 2-cocycle on a rack, materialized on all ordered pairs.
struct Cocycle {
  int dim = 0;
  std::vector<RootScalar> q;  // q[x*dim + y]

  static Cocycle constant(int dim, const RootScalar& value);
  const RootScalar& at(int x, int y) const;
};

// q(x, y|>z) q(y,z) = q(x|>y, x|>z) q(x,z) for all triples; equivalent to
// the braid equation for the associated c_q.
bool cocycle_condition_holds(const FiniteRack& rack, const Cocycle& q);

// Monomial operator on basis pairs: column (i,j) = i*dim + j carries its
// unique nonzero row and scalar.
struct BraidingMatrix {
  int dim = 0;
  std::vector<std::uint32_t> row;   // size dim^2
  std::vector<RootScalar> scalar;  // size dim^2

  static BraidingMatrix identity(int dim);
  bool invertible() const;  // row is a permutation of the basis pairs
  bool equals(const BraidingMatrix& other) const;
};

// c_q(x (x) y) = q(x,y) (x|>y) (x) x.
BraidingMatrix rack_braiding(const FiniteRack& rack, const Cocycle& q);

// (C (x) I)(I (x) C)(C (x) I) = (I (x) C)(C (x) I)(I (x) C), evaluated on all
// dim^3 basis triples; nothing of size dim^3 x dim^3 is materialized.
bool check_braid_equation(const BraidingMatrix& c);

// Character of a centralizer, valued in roots of unity of a declared order.
struct Character {
  std::uint32_t order = 1;
  std::vector<SignedElem> domain;     // the centralizer elements
  std::vector<std::uint32_t> exps;    // exponent per domain element

  RootScalar value(const SignedElem& g) const;
  bool is_trivial() const;
  // chi(gh) = chi(g) chi(h) on every pair of the domain.
  bool multiplicative() const;
};

// All Z_2-valued characters of the subgroup generated by `elements`
// (including the trivial one), via the quotient by squares and commutators.
std::vector<Character> z2_characters(const std::vector<SignedElem>& elements);

// Braiding of M(O, chi) with dim V = 1 on the class numeration t_1..t_m:
// C(g_i (x) g_j) = chi(nu) g_{j'} (x) g_i where t_i g_j = g_{j'} nu,
// j' = index of t_i |> t_j, and nu is asserted to centralize the
// representative. With trivial chi this is the q = 1 rack braiding.
BraidingMatrix yd_braiding(const ConjClass& c, const Character& chi);

// One line per nonzero entry, column order: `i j k m` for entry
// exp(2 pi i k/m) at row i, column j, 1-based.
std::string braiding_coordinate_list(const BraidingMatrix& c);

}  // namespace weylrack
