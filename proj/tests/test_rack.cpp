#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "weylrack/classes.hpp"
#include "weylrack/constructions.hpp"
#include "weylrack/grammar.hpp"
#include "weylrack/rack.hpp"

using namespace weylrack;

namespace {

// Brute-force decision of type D for racks of at most 14 points: enumerate
// every subset, keep the subracks, and certify from first principles. A
// subrack certifies iff its inner-orbit partition separates some pair (x, y)
// with sq(x, y) = op(x, op(y, op(x, y))) != y; decompositions are exactly
// 2-colorings by orbit blocks. Independent of the pair-closure search.
bool brute_type_d(const FiniteRack& rack) {
  const int m = rack.size();
  REQUIRE(m <= 14);
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> pts;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) pts.push_back(i);
    bool closed = true;
    for (const int x : pts) {
      for (const int y : pts) {
        if (!(mask & (1u << rack.op(x, y)))) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (!closed) continue;

    // Inner-orbit union-find within the subrack.
    std::vector<int> parent(pts.size());
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&parent](int a) {
      while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)];
      return a;
    };
    std::vector<int> local(static_cast<std::size_t>(m), -1);
    for (std::size_t i = 0; i < pts.size(); ++i) local[static_cast<std::size_t>(pts[i])] = static_cast<int>(i);
    for (const int u : pts)
      for (const int v : pts) {
        const int a = find(local[static_cast<std::size_t>(v)]);
        const int b = find(local[static_cast<std::size_t>(rack.op(u, v))]);
        if (a != b) parent[static_cast<std::size_t>(b)] = a;
      }
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (find(static_cast<int>(i)) == find(static_cast<int>(j))) continue;
        const int x = pts[i];
        const int y = pts[j];
        if (rack.op(x, rack.op(y, rack.op(x, y))) != y) return true;
      }
  }
  return false;
}

FiniteRack subrack_as_table(const std::vector<SignedElem>& points) {
  std::vector<std::vector<int>> table(points.size(), std::vector<int>(points.size(), -1));
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j) {
      const SignedElem z = conjugate(points[i], points[j]);
      const auto it = std::find(points.begin(), points.end(), z);
      REQUIRE(it != points.end());
      table[i][j] = static_cast<int>(it - points.begin());
    }
  return FiniteRack::from_table(table);
}

}  // namespace

TEST_CASE("conj_rack: singleton class is the one-point rack") {
  const ConjClass c = class_of(elem_identity(3), kind_b(3));
  const FiniteRack r = conj_rack(c);
  CHECK(r.size() == 1);
  CHECK(r.op(0, 0) == 0);
}

TEST_CASE("conj_rack: 12-point class rack rows are permutations, axioms hold") {
  const ConjClass c = class_of(parse_element("0000;(1 2)"), kind_b(4));
  const FiniteRack r = conj_rack(c);
  REQUIRE(r.size() == 12);
  for (int x = 0; x < 12; ++x) {
    std::vector<bool> hit(12, false);
    for (int y = 0; y < 12; ++y) {
      const int z = r.op(x, y);
      CHECK_FALSE(hit[static_cast<std::size_t>(z)]);
      hit[static_cast<std::size_t>(z)] = true;
      CHECK(r.inv(x, z) == y);
    }
  }
  CHECK(r.satisfies_rack_axioms());
}

TEST_CASE("callback-backed racks: op, inv and axioms without a table") {
  const ConjClass c = class_of(parse_element("0000;(1 2)"), kind_b(4));
  const FiniteRack tabled = conj_rack(c);
  const FiniteRack lazy = FiniteRack::from_callback(
      static_cast<int>(c.size()), [c](int x, int y) {
        return static_cast<int>(*c.index_of(conjugate(
            c.order[static_cast<std::size_t>(x)], c.order[static_cast<std::size_t>(y)])));
      });
  CHECK(lazy.satisfies_rack_axioms());
  for (int x = 0; x < lazy.size(); ++x)
    for (int y = 0; y < lazy.size(); ++y) {
      CHECK(lazy.op(x, y) == tabled.op(x, y));
      CHECK(lazy.inv(x, lazy.op(x, y)) == y);
    }
}

TEST_CASE("rack axioms hold for every class rack of W(B4) and W(D4)") {
  for (const GroupKind k : {kind_b(4), kind_d(4)}) {
    for (const auto& c : all_classes(k).classes) {
      CHECK(conj_rack(c).satisfies_rack_axioms());
    }
  }
}

TEST_CASE("sq: idempotent diagonal and the published permutation examples") {
  const SignedElem x = parse_element("01100;(1 2 4)");
  CHECK(sq(x, x) == x);

  CHECK(sq(parse_element("00000;(1 2)"), parse_element("00000;(1 3)")) ==
        parse_element("00000;(1 2)"));
  CHECK(sq(parse_element("0000;(1 2 3 4)"), parse_element("0000;(1 2 4 3)")) ==
        parse_element("0000;(1 2 3 4)"));
}

TEST_CASE("sq closed form: zero-sign permutation part and full W(B3) sweep") {
  const SignedElem x = parse_element("00000;(1 2 3)");
  const SignedElem y = parse_element("00000;(2 4 5)");
  const SignedElem closed = sq_closed_form(x, y);
  CHECK(closed.sign.bits == 0);
  CHECK(closed == sq(x, y));

  const auto group = enumerate_group(kind_b(3));
  for (const auto& a : group)
    for (const auto& b : group) CHECK(sq_closed_form(a, b) == sq(a, b));

  std::mt19937_64 rng(23);
  const auto b5 = enumerate_group(kind_b(5));
  std::uniform_int_distribution<std::size_t> pick(0, b5.size() - 1);
  for (int i = 0; i < 20000; ++i) {
    const SignedElem& a = b5[pick(rng)];
    const SignedElem& b = b5[pick(rng)];
    CHECK(sq_closed_form(a, b) == sq(a, b));
  }
}

TEST_CASE("is_subrack: whole rack, singleton, published R family") {
  const ConjClass c = class_of(parse_element("0000;(1 2)"), kind_b(4));
  const FiniteRack r = conj_rack(c);
  std::vector<int> all(static_cast<std::size_t>(r.size()));
  std::iota(all.begin(), all.end(), 0);
  CHECK(is_subrack(all, r));
  CHECK(is_subrack({3}, r));

  const DecompWitness w = build_witness_12_3(kind_d(5), 0);
  const ConjClass base = class_of(w.R.front(), kind_d(5));
  const FiniteRack base_rack = conj_rack(base);
  std::vector<int> indices;
  for (const auto& x : w.R) {
    const auto idx = base.index_of(x);
    REQUIRE(idx.has_value());
    indices.push_back(static_cast<int>(*idx));
  }
  CHECK(is_subrack(indices, base_rack));
}

TEST_CASE("check_decomposition: degenerate and failing shapes") {
  const std::vector<SignedElem> r = {parse_element("000;(1 2)")};
  CHECK_FALSE(check_decomposition(r, r).disjoint);

  // Non-commuting singletons break the cross rule.
  const std::vector<SignedElem> s = {parse_element("000;(1 3)")};
  const DecompVerdict v = check_decomposition(r, s);
  CHECK(v.disjoint);
  CHECK_FALSE(v.cross_rs);
  CHECK_FALSE(v.ok());

  // Commuting singletons form a genuine decomposition.
  const std::vector<SignedElem> far = {parse_element("00000;(4 5)")};
  const std::vector<SignedElem> near = {parse_element("00000;(1 2)")};
  CHECK(check_decomposition(near, far).ok());
}

TEST_CASE("check_type_d: witness pair must sit inside R and S") {
  DecompWitness w;
  w.kind = kind_b(4);
  w.R = {parse_element("0000;(1 2)")};
  w.S = {parse_element("0000;(3 4)")};
  w.sigma = parse_element("0000;(1 3)");  // not in R
  w.tau = w.S.front();
  w.class_rep = w.R.front();
  CHECK_THROWS_AS(check_type_d(w), Error);
}

TEST_CASE("search_type_d: singleton class yields nothing, exhaustively") {
  const SearchOutcome out = search_type_d(class_of(elem_identity(4), kind_b(4)));
  CHECK_FALSE(out.witness.has_value());
  CHECK(out.exhaustive);
}

TEST_CASE("search_type_d: every returned witness passes the full checker") {
  const std::vector<std::pair<const char*, GroupKind>> cases = {
      {"00000;(1 2 3 4 5)", kind_b(5)}, {"0000;(1 2 3 4)", kind_d(4)},
      {"00000;(1 2 3)(4 5)", kind_b(5)}, {"00000;(1 2 3 4)", kind_b(5)},
  };
  for (const auto& [text, kind] : cases) {
    const ConjClass c = class_of(parse_element(text), kind);
    const SearchOutcome out = search_type_d(c);
    REQUIRE(out.witness.has_value());
    const TypeDVerdict v = check_type_d(*out.witness, conj_rack(c));
    CHECK(v.ok());
    CHECK((out.strategy == "character-split" || out.strategy == "pair-closure"));
  }
}

TEST_CASE("search_type_d: frozen refutations on the small hard classes") {
  // Type (1^{n-2},2) and (1^2,3)/(1,3) classes: the exhaustive pair scan
  // proves no subrack decomposition with a moving sq pair exists.
  const std::vector<std::pair<const char*, GroupKind>> refuted = {
      {"0000;(1 2)", kind_b(4)},
      {"000;(1 2 3)", kind_b(3)},
      {"0000;(1 2 3)", kind_b(4)},
      {"00000;(1 2)", kind_b(5)},
  };
  for (const auto& [text, kind] : refuted) {
    const SearchOutcome out = search_type_d(class_of(parse_element(text), kind));
    CHECK_FALSE(out.witness.has_value());
    CHECK(out.exhaustive);
  }
}

TEST_CASE("search verdict agrees with the all-subsets oracle on small classes") {
  // Every class of W(B3), W(D3) and W(D4) up to 14 points, plus the 12-point
  // classes of W(B4); both BFS generator families are exercised.
  std::vector<ConjClass> cases;
  for (const auto& c : all_classes(kind_b(3)).classes) cases.push_back(c);
  for (const auto& c : all_classes(kind_d(3)).classes) cases.push_back(c);
  for (const auto& c : all_classes(kind_d(4)).classes) {
    if (c.size() <= 14) cases.push_back(c);
  }
  for (const auto& c : all_classes(kind_b(4)).classes) {
    if (c.size() <= 12) cases.push_back(c);
  }
  REQUIRE(cases.size() >= 16);
  for (const auto& c : cases) {
    const bool brute = brute_type_d(conj_rack(c));
    const SearchOutcome out = search_type_d(c);
    CHECK(brute == out.witness.has_value());
  }
  // No class rack this small is of type D; the positive direction of the
  // oracle is exercised on a witness subrack in the ascent test below.
}

TEST_CASE("character splits of every W(B5) class are genuine decompositions") {
  std::size_t classes_with_splits = 0;
  for (const auto& c : all_classes(kind_b(5)).classes) {
    for (const auto& [r_half, s_half] : character_splits(c)) {
      ++classes_with_splits;
      CHECK(r_half.size() == c.size() / 2);
      CHECK(s_half.size() == c.size() / 2);
      CHECK(check_decomposition(r_half, s_half).ok());
      // The representative always lands in the kernel half.
      CHECK(std::find(r_half.begin(), r_half.end(), c.rep) != r_half.end());
    }
  }
  CHECK(classes_with_splits > 0);
}

TEST_CASE("all-subsets confirmation: the 20-point W(B5) transposition class") {
  // The type (1^3,2) class of W(B5) is the smallest class at n = 5 that the
  // pair search refutes. Confirm the refutation by enumerating all 2^20 - 1
  // subsets directly: no subrack admits a separated pair with moving sq.
  const ConjClass c = class_of(parse_element("00000;(1 2)"), kind_b(5));
  REQUIRE(c.size() == 20);
  const int m = 20;
  std::array<std::array<std::uint8_t, 20>, 20> op{};
  std::array<std::array<bool, 20>, 20> sq_moves{};
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      op[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = static_cast<std::uint8_t>(
          *c.index_of(conjugate(c.order[static_cast<std::size_t>(x)],
                                c.order[static_cast<std::size_t>(y)])));
      sq_moves[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          !(sq(c.order[static_cast<std::size_t>(x)], c.order[static_cast<std::size_t>(y)]) ==
            c.order[static_cast<std::size_t>(y)]);
    }

  std::uint32_t closed_subracks = 0;
  bool certificate_found = false;
  for (std::uint32_t mask = 1; mask < (1u << m) && !certificate_found; ++mask) {
    bool closed = true;
    for (std::uint32_t rest = mask; rest && closed; rest &= rest - 1) {
      const int x = __builtin_ctz(rest);
      for (std::uint32_t inner = mask; inner; inner &= inner - 1) {
        const int y = __builtin_ctz(inner);
        if (!((mask >> op[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) & 1)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    ++closed_subracks;

    // Inner-orbit partition of the subrack, then look for a separated
    // moving pair.
    std::array<int, 20> parent{};
    for (int i = 0; i < m; ++i) parent[static_cast<std::size_t>(i)] = i;
    const auto find = [&parent](int a) {
      while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)];
      return a;
    };
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      const int u = __builtin_ctz(rest);
      for (std::uint32_t inner = mask; inner; inner &= inner - 1) {
        const int v = __builtin_ctz(inner);
        const int a = find(v);
        const int b = find(op[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]);
        if (a != b) parent[static_cast<std::size_t>(b)] = a;
      }
    }
    for (std::uint32_t rest = mask; rest && !certificate_found; rest &= rest - 1) {
      const int x = __builtin_ctz(rest);
      for (std::uint32_t inner = mask; inner; inner &= inner - 1) {
        const int y = __builtin_ctz(inner);
        if (find(x) != find(y) && sq_moves[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) {
          certificate_found = true;
          break;
        }
      }
    }
  }
  CHECK_FALSE(certificate_found);
  CHECK(closed_subracks > 0);
  // Agreement with the pair search on the same class.
  const SearchOutcome out = search_type_d(c);
  CHECK_FALSE(out.witness.has_value());
  CHECK(out.exhaustive);
}

TEST_CASE("a witness's R u S is itself a type-D rack (ascent to the class checked)") {
  const ConjClass c = class_of(parse_element("0000;(1 2 3 4)"), kind_d(4));
  const SearchOutcome out = search_type_d(c);
  REQUIRE(out.witness.has_value());
  std::vector<SignedElem> both = out.witness->R;
  both.insert(both.end(), out.witness->S.begin(), out.witness->S.end());
  CHECK(brute_type_d(subrack_as_table(both)));
  // The same witness remains valid against the ambient class rack.
  CHECK(check_type_d(*out.witness, conj_rack(c)).ok());
}

TEST_CASE("corrupting a witness set flips the membership clause") {
  const ConjClass c = class_of(parse_element("00000;(1 2 3)(4 5)"), kind_b(5));
  const SearchOutcome out = search_type_d(c);
  REQUIRE(out.witness.has_value());
  DecompWitness bad = *out.witness;
  bad.S.back() = parse_element("10000;id");  // different class entirely
  const TypeDVerdict v = check_type_d(bad, conj_rack(c));
  CHECK_FALSE(v.membership);
  CHECK_FALSE(v.ok());
  CHECK((!v.non_members.empty()));
}

TEST_CASE("search bound is enforced") {
  const ConjClass c = class_of(parse_element("00000;(1 2 3 4 5)"), kind_b(5));
  CHECK_THROWS_AS(search_type_d(c, 10), Error);
}

TEST_CASE("witness JSON carries sets, pair, sq value and clause map") {
  const ConjClass c = class_of(parse_element("0000;(1 2 3 4)"), kind_d(4));
  const SearchOutcome out = search_type_d(c);
  REQUIRE(out.witness.has_value());
  const TypeDVerdict v = check_type_d(*out.witness, conj_rack(c));
  const std::string json = witness_json(*out.witness, v);
  for (const char* key : {"\"kind\"", "\"class_rep\"", "\"R\"", "\"S\"", "\"sigma\"",
                          "\"tau\"", "\"sq_value\"", "\"checks\"", "\"membership\""}) {
    CHECK(json.find(key) != std::string::npos);
  }
}
