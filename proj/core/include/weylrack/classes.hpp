// Conjugacy classes of W(B_n) / W(D_n) at desk scale: deterministic group
// enumeration, the breadth-first orbit oracle, centralizers and the coset
// section g_i |> rep = t_i used by the Yetter-Drinfeld braiding.
//
// Finished ConjClass values are immutable and freely shareable between
// threads; construction is single-writer.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weylrack/grammar.hpp"
#include "weylrack/group.hpp"

namespace weylrack {

// Conjugacy class with its BFS numeration t_1 = rep, t_2, ..., t_m and the
// transporting section g_i with g_i t_1 g_i^{-1} = t_i (g_1 = identity).
// Membership queries go through the sorted canonical-key array.
struct ConjClass {
  GroupKind kind;
  SignedElem rep;                      // lexicographically least element
  std::vector<SignedElem> order;       // BFS discovery order, order[0] == rep
  std::vector<SignedElem> section;     // section[i] |> rep == order[i]
  std::vector<std::string> sorted_keys;    // canonical keys, ascending
  std::vector<std::uint32_t> sorted_to_order;  // key position -> numeration index

  std::size_t size() const { return order.size(); }
  bool contains(const SignedElem& x) const;
  // Index into `order`, or nullopt when x is not a member.
  std::optional<std::uint32_t> index_of(const SignedElem& x) const;
  SignedCycleType type() const { return sign_cycle_decompose(rep); }
};

// Conjugation generators used by every BFS: adjacent transpositions with zero
// sign, plus one sign generator (e_1 for kind B, e_1+e_2 for kind D). Fixed
// order, so discovery orders and sections are reproducible.
std::vector<SignedElem> conjugation_generators(const GroupKind& k);

// All elements, ordered lexicographically by their grammar string.
// Throws when n exceeds the cap.
std::vector<SignedElem> enumerate_group(const GroupKind& k, int cap = kDefaultEnumCap);

// Class of x, numbered from the lexicographically least member.
ConjClass class_of(const SignedElem& x, const GroupKind& k, int cap = kDefaultEnumCap);

// Ground truth for same_class_fast.
bool same_class_oracle(const SignedElem& x, const SignedElem& y, const GroupKind& k,
                       int cap = kDefaultEnumCap);

std::vector<SignedElem> centralizer(const SignedElem& x, const GroupKind& k,
                                    int cap = kDefaultEnumCap);

struct ClassList {
  GroupKind kind;
  std::vector<ConjClass> classes;          // ordered by representative key
  std::vector<std::string> split_tags;     // "", or "1"/"2" on split types
};

// Partition of the whole group into classes; representatives are the
// lexicographic minima, split tags come from the empirical partition (two
// classes sharing one signed cycle type), never from a hard-coded rule.
ClassList all_classes(const GroupKind& k, int cap = kDefaultEnumCap);

// Class listing JSON, schema:
// {"kind","n","classes":[{"rep","size","signed_cycle_type","split_tag"}]}
std::string class_list_json(const ClassList& list);

}  // namespace weylrack
