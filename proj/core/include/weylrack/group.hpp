// Exact arithmetic in the signed permutation groups W(B_n) = Z_2^n : S_n and
// W(D_n) = K_n : S_n, where K_n is the even-coordinate-sum sublattice.
//
// Conventions used throughout:
//   * positions are 1-based at every external surface, 0-based internally;
//   * sigma(a)[i] = a[sigma^{-1}(i)] for the S_n action on sign vectors;
//   * over Z_2 every minus sign of the semidirect-product formulas is a plus;
//   * composition (p*q)(i) = p(q(i)), i.e. q acts first.
//
// Everything here is an immutable value; all operations are pure functions
// and safe to call concurrently.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace weylrack {

inline constexpr int kMaxRank = 12;
inline constexpr int kDefaultEnumCap = 7;
inline constexpr int kHardEnumCap = 9;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Permutation of {1..n} held in one-line notation: img[i] is the 0-based
// image of position i. Entries beyond n are zero so defaulted comparison
// is structural.
struct Perm {
  std::uint8_t n = 0;
  std::array<std::uint8_t, kMaxRank> img{};

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

  int size() const { return n; }
  // 0-based application.
  int operator()(int i) const { return img[static_cast<std::size_t>(i)]; }
};

Perm perm_identity(int n);
Perm perm_from_images(const std::vector<int>& one_based_images);
// (p*q)(i) = p(q(i)); q is applied first.
Perm perm_compose(const Perm& p, const Perm& q);
Perm perm_inverse(const Perm& p);
bool perm_is_identity(const Perm& p);
// Builds an n-point permutation out of disjoint cycles given 1-based.
Perm perm_from_cycles(int n, const std::vector<std::vector<int>>& cycles);
// Non-fixed cycles, each rotated least-first, ordered by least entry, 1-based.
std::vector<std::vector<int>> perm_cycles(const Perm& p);
// +1 for even permutations, -1 for odd; parity() returns 0/1.
int perm_parity(const Perm& p);

// Sign vector in Z_2^n; bit i-1 holds a_i.
struct SignVec {
  std::uint8_t n = 0;
  std::uint16_t bits = 0;

  bool operator==(const SignVec&) const = default;
  auto operator<=>(const SignVec&) const = default;

  int size() const { return n; }
  int bit(int i) const { return (bits >> i) & 1; }  // 0-based
  int coordinate_sum() const;                       // mod 2
};

SignVec sign_zero(int n);
SignVec sign_from_bits(const std::vector<int>& one_based_entries);
SignVec sign_add(const SignVec& a, const SignVec& b);
// sigma(a): result[i] = a[sigma^{-1}(i)].
SignVec act(const Perm& sigma, const SignVec& a);

// Which semidirect product we are working in.
struct GroupKind {
  enum class Family : std::uint8_t { B, D };

  Family family = Family::B;
  int n = 0;

  bool operator==(const GroupKind&) const = default;

  std::uint64_t order() const;
  bool contains(const struct SignedElem& x) const;
  char letter() const { return family == Family::B ? 'B' : 'D'; }
  // W(D_n) for n <= 3 is accepted but flagged; degenerate as a type-D group.
  bool small_rank_warning() const { return family == Family::D && n <= 3; }
};

GroupKind kind_b(int n);
GroupKind kind_d(int n);

// Group element (a, sigma) of H_n : S_n.
struct SignedElem {
  SignVec sign;
  Perm perm;

  bool operator==(const SignedElem&) const = default;
  auto operator<=>(const SignedElem&) const = default;

  int size() const { return perm.n; }
};

SignedElem elem_identity(int n);
SignedElem make_elem(SignVec a, Perm p);
bool elem_is_identity(const SignedElem& x);

// (a,sigma)(b,tau) = (a + sigma(b), sigma tau).
SignedElem multiply(const SignedElem& x, const SignedElem& y);
// (a,sigma)^{-1} = (sigma^{-1}(a), sigma^{-1}) over Z_2.
SignedElem inverse(const SignedElem& x);
// g |> x = g x g^{-1} = (b + tau(a) + tau sigma tau^{-1}(b), tau sigma tau^{-1})
// for g = (b,tau), x = (a,sigma).
SignedElem conjugate(const SignedElem& g, const SignedElem& x);

// Perfect index of an element inside W(B_n): lehmer_rank(perm) * 2^n + bits.
// Covers exactly 0 .. 2^n * n! - 1.
std::uint64_t packed_index(const SignedElem& x);
std::uint64_t factorial(int n);

// Multiset of (cycle length, sign parity over the cycle support), ordered by
// descending length then ascending parity so equality is structural.
struct SignedCycleType {
  std::vector<std::pair<int, int>> cycles;

  bool operator==(const SignedCycleType&) const = default;

  int total_length() const;
  bool all_even_positive() const;
  std::string to_string() const;  // e.g. "(3,1)(2,0)"
};

SignedCycleType sign_cycle_decompose(const SignedElem& x);

enum class Tri : std::uint8_t { Yes, No, NeedsOracle };

// Conjugacy test from signed cycle types alone. Exact for kind B. For kind D
// it answers NeedsOracle on equal all-even-all-positive types, where the
// B-class may split into two D-classes; the orbit oracle in classes.hpp is
// the ground truth there.
Tri same_class_fast(const SignedElem& x, const SignedElem& y, const GroupKind& k);

}  // namespace weylrack
