// The published explicit constructions: R/S families per permutation type,
// the fixed-point predicates for sq on common-permutation pairs, the
// exception-type tables of the two cited black-box theorems, and the class
// classifier that dispatches construction vs search.
//
// Pure constructors over immutable inputs; safe for parallel dispatch.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylrack/classes.hpp"
#include "weylrack/rack.hpp"

namespace weylrack {

// Cycle type of a permutation as multiplicities; mult[L] counts cycles of
// length L (fixed points included at L = 1).
struct PermType {
  std::vector<int> mult;  // index 0 unused

  bool operator==(const PermType&) const = default;

  int weight() const;                  // sum of L * mult[L]
  std::string to_string() const;       // e.g. "(1^2,3)"
  bool is(std::initializer_list<int> lengths) const;  // exact multiset match
};

PermType perm_type(const Perm& p);

// Exception lists of the two cited classification theorems, stored as data.
// The side conditions are recorded verbatim and never evaluated.
struct ExceptionEntry {
  std::string pattern;    // "(2,3)", "(1^{n-2},2)", ...
  std::string condition;  // "" or the literal side condition
  // Concrete entries match one multiset; parametric ones match per n.
  bool matches(const PermType& t, int n) const;
};

struct ExceptionTable {
  std::string theorem;  // citation label
  std::vector<ExceptionEntry> entries;

  bool contains(const PermType& t, int n) const;
};

const ExceptionTable& exception_table_1002();
const ExceptionTable& exception_table_1003();

// R/S families as printed, one constructor per proposition. Witness pairs
// sigma/tau are the designated ones. The returned class_rep is the family's
// base element; whether every member of R u S actually lies in that class is
// exactly what check_type_d audits against the orbit oracle.

// Type (1^{n-2},2), n > 3: R and S over the transpositions of S_3 with the
// constant / near-constant sign vectors selected by kind, parity and the
// parity of n. parity is the coordinate sum of the class's sign vectors.
DecompWitness build_witness_1n2_2(const GroupKind& k, int parity);
// Type (1^2,3) at n = 5, sigma = (1 2 3); the printed 4 + 4 sets.
DecompWitness build_witness_12_3(const GroupKind& k, int parity);
// Type (1,3) at n = 4, sigma = (1 2 3); the printed 4 + 4 sets.
DecompWitness build_witness_1_3(const GroupKind& k, int parity);
// Type (4) at n = 4 in W(D_4): all six 4-cycles over the all-zeros and
// all-ones sign vectors.
DecompWitness build_witness_4_cycle();
// Type (2,3) at n = 5, sigma = (1 2 3)(4 5); the printed 8 + 8 sets.
DecompWitness build_witness_2_3(const GroupKind& k, int parity);

// sigma(a) + sigma^2(a) = sigma(b) + sigma^2(b); requires sigma of type
// (1^{n-3},3). Equivalent to sq(a sigma, b sigma) = b sigma.
bool predicate_e11(const SignVec& a, const SignVec& b, const Perm& sigma);
// a + tau(a) + tau mu(a) + mu^2(a) = same for b; requires sigma = tau mu of
// type (2,3) with tau a transposition, mu a 3-cycle, disjoint supports.
bool predicate_e22(const SignVec& a, const SignVec& b, const Perm& tau, const Perm& mu);

enum class ClassVerdict : std::uint8_t {
  TypeDCertified,   // carries a witness that passed check_type_d
  SigmaTrivial,     // permutation part is the identity; outside the theorems
  OutOfPaperScope,  // n = 4 type without a published construction
  NotCertified,     // no verified construction and the search found nothing
};

struct ClassifyResult {
  ClassVerdict verdict;
  std::optional<DecompWitness> witness;
  std::optional<TypeDVerdict> witness_verdict;
  std::string citation;       // statement of record, or "plumbing"
  std::string route;          // "constructor", "character-split", "pair-closure", ""
  bool search_exhaustive = false;  // an empty search ran to completion
  // A certified class carries the infinite-dimension conclusion as a
  // citation-tagged flag; nothing is computed about Nichols algebras.
  bool infinite_dim_tag = false;
};

// Dispatch: sigma = 1 -> SigmaTrivial; a published family matching the type
// and class is tried first and must pass check_type_d to certify; otherwise
// the complete pair search decides. At n = 4 only the published W_4 types
// ((1^2,2), (1,3), (4)) are attempted; other types are out of scope.
ClassifyResult classify_class(const ConjClass& c, std::size_t search_bound = kDefaultSearchBound,
                              int cap = kDefaultEnumCap);

std::string classify_json(const ConjClass& c, const ClassifyResult& r);

}  // namespace weylrack
