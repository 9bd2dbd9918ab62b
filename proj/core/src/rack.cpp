#include "weylrack/rack.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include <json.hpp>

namespace weylrack {

namespace {

// Union-find over small dense index ranges.
struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(std::size_t size) : parent(size) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(b)] = a;
  }
};

std::vector<SignedElem> sorted_by_key(std::vector<SignedElem> v) {
  std::sort(v.begin(), v.end(), [](const SignedElem& a, const SignedElem& b) {
    return canonical_key(a) < canonical_key(b);
  });
  return v;
}

bool set_contains(const std::vector<SignedElem>& set, const SignedElem& x) {
  return std::find(set.begin(), set.end(), x) != set.end();
}

}  // namespace

FiniteRack FiniteRack::from_table(std::vector<std::vector<int>> table) {
  FiniteRack r;
  r.size_ = static_cast<int>(table.size());
  r.table_.reserve(table.size() * table.size());
  for (const auto& row : table) {
    if (row.size() != table.size()) throw Error("rack table is not square");
    for (const int v : row) {
      if (v < 0 || v >= r.size_) throw Error("rack table entry out of range");
      r.table_.push_back(v);
    }
  }
  return r;
}

FiniteRack FiniteRack::from_callback(int size, std::function<int(int, int)> op) {
  FiniteRack r;
  r.size_ = size;
  r.op_ = std::move(op);
  return r;
}

int FiniteRack::op(int x, int y) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(x) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(y)];
  return op_(x, y);
}

int FiniteRack::inv(int x, int z) const {
  if (!table_.empty()) {
    for (int y = 0; y < size_; ++y)
      if (op(x, y) == z) return y;
    throw Error("rack row is not surjective");
  }
  // For conjugation racks phi_x^{-1}(z) = x^{-1} z x; the callback closes
  // over the class, so invert through a linear probe only as fallback.
  for (int y = 0; y < size_; ++y)
    if (op_(x, y) == z) return y;
  throw Error("rack row is not surjective");
}

bool FiniteRack::satisfies_rack_axioms() const {
  std::vector<bool> hit(static_cast<std::size_t>(size_));
  for (int x = 0; x < size_; ++x) {
    std::fill(hit.begin(), hit.end(), false);
    for (int y = 0; y < size_; ++y) {
      const int z = op(x, y);
      if (hit[static_cast<std::size_t>(z)]) return false;  // phi_x not injective
      hit[static_cast<std::size_t>(z)] = true;
    }
  }
  for (int x = 0; x < size_; ++x)
    for (int y = 0; y < size_; ++y)
      for (int z = 0; z < size_; ++z)
        if (op(x, op(y, z)) != op(op(x, y), op(x, z))) return false;
  return true;
}

FiniteRack conj_rack(const ConjClass& c) {
  FiniteRack r;
  r.size_ = static_cast<int>(c.size());
  r.labels_ = c.order;
  if (c.size() < FiniteRack::kRackTableLimit) {
    r.table_.resize(c.size() * c.size());
    for (std::size_t x = 0; x < c.size(); ++x) {
      for (std::size_t y = 0; y < c.size(); ++y) {
        const auto idx = c.index_of(conjugate(c.order[x], c.order[y]));
        if (!idx) throw Error("conjugation left the class");
        r.table_[x * c.size() + y] = static_cast<std::int32_t>(*idx);
      }
    }
  } else {
    // On-demand op; the closure copies the class by value on purpose so the
    // rack stays self-contained.
    ConjClass cls = c;
    r.op_ = [cls](int x, int y) {
      const auto idx = cls.index_of(
          conjugate(cls.order[static_cast<std::size_t>(x)], cls.order[static_cast<std::size_t>(y)]));
      if (!idx) throw Error("conjugation left the class");
      return static_cast<int>(*idx);
    };
  }
  return r;
}

SignedElem sq(const SignedElem& x, const SignedElem& y) {
  return conjugate(x, conjugate(y, conjugate(x, y)));
}

SignedElem sq_closed_form(const SignedElem& x, const SignedElem& y) {
  if (x.size() != y.size()) throw Error("sq_closed_form: dimension mismatch");
  const Perm& s = x.perm;
  const Perm& t = y.perm;
  const Perm s_inv = perm_inverse(s);
  const Perm t_inv = perm_inverse(t);

  const Perm st = perm_compose(s, t);
  const Perm sts = perm_compose(st, s);
  const Perm stst = perm_compose(st, st);
  const Perm stst_s = perm_compose(stst, s_inv);
  const Perm stst_st = perm_compose(stst_s, t_inv);
  const Perm full = perm_compose(stst_st, s_inv);

  SignVec sign = x.sign;                       // a
  sign = sign_add(sign, act(s, y.sign));       // + s(b)
  sign = sign_add(sign, act(st, x.sign));      // + st(a)
  sign = sign_add(sign, act(sts, y.sign));     // + sts(b)
  sign = sign_add(sign, act(stst_s, x.sign));  // + stst s^{-1}(a)
  sign = sign_add(sign, act(stst_st, y.sign)); // + stst s^{-1} t^{-1}(b)
  sign = sign_add(sign, act(full, x.sign));    // + stst s^{-1} t^{-1} s^{-1}(a)
  return SignedElem{sign, full};
}

bool is_subrack(const std::vector<int>& points, const FiniteRack& rack) {
  std::vector<bool> member(static_cast<std::size_t>(rack.size()), false);
  for (const int p : points) member[static_cast<std::size_t>(p)] = true;
  for (const int x : points)
    for (const int y : points)
      if (!member[static_cast<std::size_t>(rack.op(x, y))]) return false;
  return true;
}

DecompVerdict check_decomposition(const std::vector<SignedElem>& R,
                                  const std::vector<SignedElem>& S) {
  DecompVerdict v;
  v.r_nonempty = !R.empty();
  v.s_nonempty = !S.empty();
  v.disjoint = true;
  for (const auto& x : R) {
    if (set_contains(S, x)) {
      v.disjoint = false;
      v.failure = "shared element " + print_element(x);
      break;
    }
  }
  auto closed = [&v](const std::vector<SignedElem>& set, const char* name) {
    for (const auto& x : set)
      for (const auto& y : set)
        if (!set_contains(set, conjugate(x, y))) {
          if (v.failure.empty())
            v.failure = std::string(name) + " not closed at " + print_element(x) + " |> " + print_element(y);
          return false;
        }
    return true;
  };
  v.r_closed = closed(R, "R");
  v.s_closed = closed(S, "S");
  v.cross_rs = true;
  v.cross_sr = true;
  for (const auto& x : R) {
    for (const auto& y : S) {
      if (!set_contains(S, conjugate(x, y))) {
        v.cross_rs = false;
        if (v.failure.empty())
          v.failure = "cross rule: " + print_element(x) + " |> " + print_element(y) + " leaves S";
      }
      if (!set_contains(R, conjugate(y, x))) {
        v.cross_sr = false;
        if (v.failure.empty())
          v.failure = "cross rule: " + print_element(y) + " |> " + print_element(x) + " leaves R";
      }
    }
  }
  return v;
}

DecompVerdict check_decomposition(const std::vector<int>& R, const std::vector<int>& S,
                                  const FiniteRack& rack) {
  DecompVerdict v;
  v.r_nonempty = !R.empty();
  v.s_nonempty = !S.empty();
  std::vector<int> in_part(static_cast<std::size_t>(rack.size()), 0);
  for (const int x : R) in_part[static_cast<std::size_t>(x)] |= 1;
  for (const int y : S) in_part[static_cast<std::size_t>(y)] |= 2;
  v.disjoint = std::none_of(in_part.begin(), in_part.end(), [](int m) { return m == 3; });
  auto part_of = [&in_part](int p) { return in_part[static_cast<std::size_t>(p)]; };
  v.r_closed = std::all_of(R.begin(), R.end(), [&](int x) {
    return std::all_of(R.begin(), R.end(), [&](int y) { return part_of(rack.op(x, y)) == 1; });
  });
  v.s_closed = std::all_of(S.begin(), S.end(), [&](int x) {
    return std::all_of(S.begin(), S.end(), [&](int y) { return part_of(rack.op(x, y)) == 2; });
  });
  v.cross_rs = true;
  v.cross_sr = true;
  for (const int x : R)
    for (const int y : S) {
      if (part_of(rack.op(x, y)) != 2) v.cross_rs = false;
      if (part_of(rack.op(y, x)) != 1) v.cross_sr = false;
    }
  return v;
}

TypeDVerdict check_type_d(const DecompWitness& w, const FiniteRack& class_rack) {
  if (!set_contains(w.R, w.sigma) || !set_contains(w.S, w.tau)) {
    throw Error("check_type_d: witness pair outside R/S");
  }
  TypeDVerdict v;
  v.witnesses_in_sets = true;
  v.decomp = check_decomposition(w.R, w.S);
  v.sq_value = sq(w.sigma, w.tau);
  v.sq_moves = !(v.sq_value == w.tau);

  // Membership of every element of R u S in the class the rack was built
  // from; the rack's labels are exactly the BFS orbit of the representative.
  std::vector<std::string> keys;
  keys.reserve(static_cast<std::size_t>(class_rack.size()));
  for (int i = 0; i < class_rack.size(); ++i) keys.push_back(canonical_key(class_rack.label(i)));
  std::sort(keys.begin(), keys.end());
  v.membership = true;
  auto audit = [&](const std::vector<SignedElem>& set) {
    for (const auto& x : set) {
      if (!std::binary_search(keys.begin(), keys.end(), canonical_key(x))) {
        v.membership = false;
        v.non_members.push_back(print_element(x));
      }
    }
  };
  audit(w.R);
  audit(w.S);
  return v;
}

TypeDVerdict check_type_d(const DecompWitness& w, int cap) {
  const ConjClass c = class_of(w.class_rep, w.kind, cap);
  return check_type_d(w, conj_rack(c));
}

namespace {

// Z_2 characters of W(B_n) restricted to what survives on kind D; evaluated
// on arbitrary group elements.
int chi_sign_sum(const SignedElem& g) { return g.sign.coordinate_sum(); }
int chi_perm_parity(const SignedElem& g) { return perm_parity(g.perm); }
int chi_product(const SignedElem& g) { return chi_sign_sum(g) ^ chi_perm_parity(g); }

std::optional<std::pair<std::vector<SignedElem>, std::vector<SignedElem>>>
character_split(const ConjClass& c, int (*chi)(const SignedElem&)) {
  if (chi(c.rep) != 0) return std::nullopt;
  // Label t_i by chi of its transporter; well-definedness is equivalent to
  // chi vanishing on the centralizer, checked through rediscoveries.
  const std::size_t m = c.size();
  std::vector<int> label(m);
  for (std::size_t i = 0; i < m; ++i) label[i] = chi(c.section[i]);
  const auto gens = conjugation_generators(c.kind);
  for (std::size_t j = 0; j < m; ++j) {
    for (const auto& g : gens) {
      const auto idx = c.index_of(conjugate(g, c.order[j]));
      if (!idx) return std::nullopt;
      if (label[*idx] != (chi(g) ^ label[j])) return std::nullopt;  // not well defined
    }
  }
  std::vector<SignedElem> R, S;
  for (std::size_t i = 0; i < m; ++i) (label[i] == 0 ? R : S).push_back(c.order[i]);
  if (R.empty() || S.empty()) return std::nullopt;
  return std::make_pair(sorted_by_key(std::move(R)), sorted_by_key(std::move(S)));
}

// Subrack closure of {x, y} with an inner-orbit union-find maintained along
// the way. Returns the closure and the find-structure, or nothing as soon as
// x and y fall into one orbit (no decomposition can separate them then).
struct ClosureResult {
  std::vector<SignedElem> points;
  std::vector<int> block;  // orbit block id per point
};

std::optional<ClosureResult> separating_closure(const SignedElem& x, const SignedElem& y) {
  std::vector<SignedElem> pts{x, y};
  std::unordered_map<std::uint64_t, int> index;
  index.emplace(packed_index(x), 0);
  index.emplace(packed_index(y), 1);
  UnionFind uf(2);

  // Each ordered pair (a, b) with both indices below a pass frontier is
  // applied exactly once; max(a, b) falls in exactly one [done, frontier).
  std::size_t done_until = 0;
  while (true) {
    const std::size_t frontier = pts.size();
    for (std::size_t a = 0; a < frontier; ++a) {
      for (std::size_t b = (a < done_until ? done_until : 0); b < frontier; ++b) {
        const SignedElem z = conjugate(pts[a], pts[b]);
        const std::uint64_t key = packed_index(z);
        auto [it, inserted] = index.emplace(key, static_cast<int>(pts.size()));
        if (inserted) {
          pts.push_back(z);
          uf.parent.push_back(static_cast<int>(uf.parent.size()));
        }
        uf.unite(static_cast<int>(b), it->second);  // b ~ a |> b
        if (uf.find(0) == uf.find(1)) return std::nullopt;
      }
    }
    if (pts.size() == frontier && done_until == frontier) break;
    done_until = frontier;
  }

  ClosureResult out;
  out.points = std::move(pts);
  out.block.resize(out.points.size());
  for (std::size_t i = 0; i < out.points.size(); ++i) out.block[i] = uf.find(static_cast<int>(i));
  return out;
}

std::vector<int (*)(const SignedElem&)> characters_for(const GroupKind& k) {
  if (k.family == GroupKind::Family::B) {
    return {&chi_sign_sum, &chi_perm_parity, &chi_product};
  }
  // Sign-sum parity vanishes identically on K_n : S_n.
  return {&chi_perm_parity};
}

}  // namespace

std::vector<std::pair<std::vector<SignedElem>, std::vector<SignedElem>>>
character_splits(const ConjClass& c) {
  std::vector<std::pair<std::vector<SignedElem>, std::vector<SignedElem>>> out;
  for (const auto chi : characters_for(c.kind)) {
    if (auto split = character_split(c, chi)) out.push_back(std::move(*split));
  }
  return out;
}

SearchOutcome search_type_d(const ConjClass& c, std::size_t bound, int cap) {
  (void)cap;
  if (c.size() > bound) {
    throw Error("search_type_d: class size " + std::to_string(c.size()) +
                " exceeds bound " + std::to_string(bound));
  }
  SearchOutcome out;
  if (c.size() < 2) {
    out.exhaustive = true;
    return out;
  }

  // Strategy 1: character split along the transporting section; scan the
  // halves for a moving sq pair, lexicographically least first.
  for (auto& [R, S] : character_splits(c)) {
    for (const auto& x : R) {
      for (const auto& y : S) {
        if (sq(x, y) == y) continue;
        DecompWitness w;
        w.kind = c.kind;
        w.R = R;
        w.S = S;
        w.sigma = x;
        w.tau = y;
        w.class_rep = c.rep;
        out.witness = std::move(w);
        out.strategy = "character-split";
        return out;
      }
    }
  }

  // Strategy 2: anchored pair scan. Conjugation by any group element is a
  // rack automorphism and acts transitively on the class, so scanning pairs
  // (rep, y) decides type D exactly.
  std::vector<SignedElem> others;
  others.reserve(c.size() - 1);
  for (std::size_t pos = 0; pos < c.size(); ++pos) {
    const SignedElem& y = c.order[c.sorted_to_order[pos]];
    if (y == c.rep) continue;
    others.push_back(y);
  }
  for (const SignedElem& y : others) {
    if (sq(c.rep, y) == y) continue;
    const auto closure = separating_closure(c.rep, y);
    if (!closure) continue;
    const int sblock = closure->block[1];  // block of y
    DecompWitness w;
    w.kind = c.kind;
    for (std::size_t i = 0; i < closure->points.size(); ++i) {
      (closure->block[i] == sblock ? w.S : w.R).push_back(closure->points[i]);
    }
    w.R = sorted_by_key(std::move(w.R));
    w.S = sorted_by_key(std::move(w.S));
    w.sigma = c.rep;
    w.tau = y;
    w.class_rep = c.rep;
    out.witness = std::move(w);
    out.strategy = "pair-closure";
    return out;
  }
  out.exhaustive = true;
  return out;
}

std::string witness_json(const DecompWitness& w, const TypeDVerdict& v) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(1, w.kind.letter());
  j["n"] = w.kind.n;
  j["class_rep"] = print_element(w.class_rep);
  auto dump_set = [](const std::vector<SignedElem>& set) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& x : set) arr.push_back(print_element(x));
    return arr;
  };
  j["R"] = dump_set(w.R);
  j["S"] = dump_set(w.S);
  j["sigma"] = print_element(w.sigma);
  j["tau"] = print_element(w.tau);
  j["sq_value"] = print_element(v.sq_value);
  nlohmann::ordered_json checks;
  checks["r_nonempty"] = v.decomp.r_nonempty;
  checks["s_nonempty"] = v.decomp.s_nonempty;
  checks["disjoint"] = v.decomp.disjoint;
  checks["r_closed"] = v.decomp.r_closed;
  checks["s_closed"] = v.decomp.s_closed;
  checks["cross_rs"] = v.decomp.cross_rs;
  checks["cross_sr"] = v.decomp.cross_sr;
  checks["sq_moves"] = v.sq_moves;
  checks["membership"] = v.membership;
  if (!v.non_members.empty()) checks["non_members"] = v.non_members;
  if (!v.decomp.failure.empty()) checks["first_failure"] = v.decomp.failure;
  checks["ok"] = v.ok();
  j["checks"] = checks;
  return j.dump(2);
}

}  // namespace weylrack
