// Finite racks, conjugation racks of conjugacy classes, subrack
// decompositions and the type-D certificate machinery.
//
// A decomposition of a rack X is a partition X = R |_| S into two subracks
// with x |> y in S and y |> x in R for x in R, y in S; X is of type D when
// additionally sq(sigma, tau) := sigma |> (tau |> (sigma |> tau)) != tau for
// some sigma in R, tau in S. Type D ascends from subracks to ambient racks.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "weylrack/classes.hpp"
#include "weylrack/group.hpp"

namespace weylrack {

// Rack on points 0..size-1 with op given by a table or a callback; tables are
// materialized only below kRackTableLimit points. Conjugation racks carry
// their class elements as labels.
class FiniteRack {
 public:
  static constexpr std::size_t kRackTableLimit = 4096;

  static FiniteRack from_table(std::vector<std::vector<int>> table);
  static FiniteRack from_callback(int size, std::function<int(int, int)> op);

  int size() const { return size_; }
  int op(int x, int y) const;   // x |> y
  int inv(int x, int z) const;  // the y with x |> y == z
  bool has_labels() const { return !labels_.empty(); }
  const SignedElem& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<SignedElem>& labels() const { return labels_; }

  // Self-distributivity on all triples plus bijectivity of every phi_x.
  bool satisfies_rack_axioms() const;

 private:
  friend FiniteRack conj_rack(const ConjClass& c);

  int size_ = 0;
  std::vector<std::int32_t> table_;            // size*size when materialized
  std::function<int(int, int)> op_;            // used when table_ is empty
  std::vector<SignedElem> labels_;
};

// Rack on the class elements in numeration order, with x |> y = x y x^{-1}.
FiniteRack conj_rack(const ConjClass& c);

// sq via three conjugations in the group.
SignedElem sq(const SignedElem& x, const SignedElem& y);
// One-shot closed form: sign part a + s(b) + st(a) + sts(b) + stst s^{-1}(a)
// + stst s^{-1} t^{-1}(b) + stst s^{-1} t^{-1} s^{-1}(a), permutation part
// stst s^{-1} t^{-1} s^{-1}, for x = (a,s), y = (b,t). Exists to be checked
// against sq, not to replace it.
SignedElem sq_closed_form(const SignedElem& x, const SignedElem& y);

bool is_subrack(const std::vector<int>& points, const FiniteRack& rack);

// Type-D witness: R and S with the designated pair, tied to the class the
// whole family is claimed to live in.
struct DecompWitness {
  GroupKind kind;
  std::vector<SignedElem> R;
  std::vector<SignedElem> S;
  SignedElem sigma;  // in R
  SignedElem tau;    // in S
  SignedElem class_rep;
};

// Clause-by-clause verdict of the decomposition axioms.
struct DecompVerdict {
  bool r_nonempty = false;
  bool s_nonempty = false;
  bool disjoint = false;
  bool r_closed = false;
  bool s_closed = false;
  bool cross_rs = false;  // x in R, y in S -> x |> y in S
  bool cross_sr = false;  // x in R, y in S -> y |> x in R
  std::string failure;    // first offending pair, empty when ok

  bool ok() const {
    return r_nonempty && s_nonempty && disjoint && r_closed && s_closed &&
           cross_rs && cross_sr;
  }
};

// Full type-D verdict: decomposition clauses, the sq clause, and oracle
// membership of every element of R u S in the witness class.
struct TypeDVerdict {
  DecompVerdict decomp;
  bool witnesses_in_sets = false;
  bool sq_moves = false;       // sq(sigma, tau) != tau
  bool membership = false;     // all of R u S in class_rep's class
  std::vector<std::string> non_members;
  SignedElem sq_value;

  bool ok() const { return decomp.ok() && witnesses_in_sets && sq_moves && membership; }
};

// Decomposition clauses on plain element sets; the operation is group
// conjugation, so no ambient rack is needed.
DecompVerdict check_decomposition(const std::vector<SignedElem>& R,
                                  const std::vector<SignedElem>& S);
// Index-set variant for synthetic racks.
DecompVerdict check_decomposition(const std::vector<int>& R, const std::vector<int>& S,
                                  const FiniteRack& rack);

// Verifies the witness against the class rack: decomposition clauses, the sq
// clause, and membership of all of R u S among the rack's class elements.
// Throws when sigma/tau are missing from R/S.
TypeDVerdict check_type_d(const DecompWitness& w, const FiniteRack& class_rack);
// Convenience: builds the class rack from the witness's class.
TypeDVerdict check_type_d(const DecompWitness& w, int cap = kDefaultEnumCap);

struct SearchOutcome {
  std::optional<DecompWitness> witness;
  // True when the pair scan ran to completion, making an empty result a
  // refutation: no subrack decomposition of any subrack certifies type D.
  bool exhaustive = false;
  std::string strategy;  // "character-split", "pair-closure", or ""
};

// The index-2 character splits of the class that are well defined: for each
// Z_2 character chi of the ambient group with chi(rep) = 0 and chi vanishing
// on the centralizer of the representative, the class falls into the two
// ker(chi)-suborbits R (containing rep) and S, each a subrack, exchanged
// correctly by the whole class. Empty when no character splits.
std::vector<std::pair<std::vector<SignedElem>, std::vector<SignedElem>>>
character_splits(const ConjClass& c);

inline constexpr std::size_t kDefaultSearchBound = 20000;

// Two-stage search.
//
// Stage one splits the class along a Z_2 character chi of the group whenever
// the label chi(g_i) of the transporting section element is well defined
// (chi vanishes on the centralizer of the representative) and chi(rep) = 0;
// the two label halves are then subracks exchanged correctly, and the scan
// looks for a moving sq pair, preferring the lexicographically least.
//
// Stage two scans pairs (rep, y): the pair certifies iff sq(rep, y) != y and
// rep, y fall in distinct orbits of the inner action of the subrack closure
// of {rep, y}. Because witnesses transport along the transitive conjugation
// action, scanning pairs anchored at the representative is complete: a class
// within the bound is of type D iff some pair certifies.
SearchOutcome search_type_d(const ConjClass& c, std::size_t bound = kDefaultSearchBound,
                            int cap = kDefaultEnumCap);

// Witness JSON:
// {"kind","n","class_rep","R":[...],"S":[...],"sigma","tau","sq_value","checks":{...}}
std::string witness_json(const DecompWitness& w, const TypeDVerdict& v);

}  // namespace weylrack
