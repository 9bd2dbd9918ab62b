#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include <json.hpp>

#include "weylrack/classes.hpp"
#include "weylrack/grammar.hpp"

using namespace weylrack;

namespace {

// Independent census oracle: the number of partitions of k, by the classic
// recurrence over largest parts, then sum_k p(k) p(n-k).
int partitions_with_max(int k, int max_part) {
  if (k == 0) return 1;
  if (max_part == 0) return 0;
  int total = 0;
  for (int take = 0; take * max_part <= k; ++take) {
    total += partitions_with_max(k - take * max_part, max_part - 1);
  }
  return total;
}

int partition_count(int k) { return partitions_with_max(k, k); }

int pair_of_partitions_count(int n) {
  int total = 0;
  for (int k = 0; k <= n; ++k) total += partition_count(k) * partition_count(n - k);
  return total;
}

}  // namespace

TEST_CASE("enumerate_group: orders and deterministic lex order") {
  CHECK(enumerate_group(kind_b(2)).size() == 8);
  CHECK(enumerate_group(kind_d(4)).size() == 192);
  CHECK(enumerate_group(kind_b(5)).size() == 3840);
  CHECK_THROWS_AS(enumerate_group(kind_b(8)), Error);  // default cap is 7

  const auto d3 = enumerate_group(kind_d(3));
  for (std::size_t i = 1; i < d3.size(); ++i) {
    CHECK(print_element(d3[i - 1]) < print_element(d3[i]));
  }
  for (const auto& x : d3) CHECK(x.sign.coordinate_sum() == 0);
}

TEST_CASE("class_of: identity is central") {
  const ConjClass c = class_of(elem_identity(4), kind_b(4));
  CHECK(c.size() == 1);
  CHECK(c.rep == elem_identity(4));
}

TEST_CASE("class_of rejects elements outside the group") {
  CHECK_THROWS_AS(class_of(parse_element("1000;id"), kind_d(4)), Error);
  CHECK_THROWS_AS(centralizer(parse_element("100;id"), kind_d(3)), Error);
}

TEST_CASE("class_of: transposition class of W(B4) has the two sign patterns") {
  const SignedElem x = parse_element("0000;(1 2)");
  const ConjClass c = class_of(x, kind_b(4));
  CHECK(c.size() == 12);
  // Every member is (b, (i j)) with b = 0 or b = e_i + e_j.
  for (const auto& t : c.order) {
    const auto cycles = perm_cycles(t.perm);
    REQUIRE(cycles.size() == 1);
    REQUIRE(cycles[0].size() == 2);
    const std::uint16_t support = static_cast<std::uint16_t>(
        (1u << (cycles[0][0] - 1)) | (1u << (cycles[0][1] - 1)));
    CHECK((t.sign.bits == 0 || t.sign.bits == support));
  }
  // Numeration starts at the canonical representative with identity section.
  CHECK(c.order.front() == c.rep);
  CHECK(elem_is_identity(c.section.front()));
}

TEST_CASE("class_of: W(D4) class of (1 2)(3 4) is smaller than its W(B4) class") {
  const SignedElem x = parse_element("0000;(1 2)(3 4)");
  const ConjClass in_b = class_of(x, kind_b(4));
  const ConjClass in_d = class_of(x, kind_d(4));
  CHECK(in_d.size() < in_b.size());
  CHECK(in_d.size() * 2 == in_b.size());  // split class
}

TEST_CASE("coset section certifies every member") {
  for (const char* text : {"0000;(1 2)", "0000;(1 2 3 4)", "0011;(1 2 3)"}) {
    const SignedElem x = parse_element(text);
    const ConjClass c = class_of(x, kind_b(4));
    REQUIRE(c.section.size() == c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      CHECK(conjugate(c.section[i], c.rep) == c.order[i]);
    }
  }
}

TEST_CASE("same_class_oracle: conjugates yes, sign-vector counterexample no") {
  const GroupKind b4 = kind_b(4);
  const auto group = enumerate_group(b4);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
  const SignedElem x = parse_element("0010;(1 2 3)");
  for (int i = 0; i < 20; ++i) {
    CHECK(same_class_oracle(x, conjugate(group[pick(rng)], x), b4));
  }
  CHECK_FALSE(same_class_oracle(parse_element("11;id"), parse_element("00;id"), kind_b(2)));
}

TEST_CASE("centralizer: identity, orbit-stabilizer, membership") {
  const GroupKind b4 = kind_b(4);
  CHECK(centralizer(elem_identity(4), b4).size() == b4.order());

  const SignedElem x = parse_element("0000;(1 2)");
  const auto centr = centralizer(x, b4);
  CHECK(centr.size() == 32);  // 384 / 12
  bool has_self = false, has_identity = false;
  for (const auto& g : centr) {
    has_self = has_self || g == x;
    has_identity = has_identity || elem_is_identity(g);
  }
  CHECK(has_self);
  CHECK(has_identity);
}

TEST_CASE("W(B6) enumerates in memory") {
  CHECK(enumerate_group(kind_b(6)).size() == 46080);
}

TEST_CASE("all_classes: partition, orbit-stabilizer, key order") {
  for (const GroupKind k : {kind_b(2), kind_b(3), kind_d(3), kind_b(4), kind_d(4), kind_b(5), kind_d(5)}) {
    const ClassList list = all_classes(k);
    std::uint64_t total = 0;
    std::set<std::string> seen;
    for (const auto& c : list.classes) {
      total += c.size();
      for (const auto& t : c.order) {
        CHECK(seen.insert(print_element(t)).second);  // disjoint
      }
      CHECK(c.size() * centralizer(c.rep, k).size() == k.order());
    }
    CHECK(total == k.order());
    for (std::size_t i = 1; i < list.classes.size(); ++i) {
      CHECK(canonical_key(list.classes[i - 1].rep) < canonical_key(list.classes[i].rep));
    }
  }
}

TEST_CASE("kind B: signed cycle type determines the class") {
  for (const GroupKind k : {kind_b(4), kind_b(5)}) {
    const ClassList list = all_classes(k);
    std::set<std::string> types;
    for (const auto& c : list.classes) {
      CHECK(types.insert(c.type().to_string()).second);
    }
  }
}

TEST_CASE("W(B4) census: exactly 20 classes, matching the pair-of-partitions oracle") {
  const ClassList list = all_classes(kind_b(4));
  CHECK(list.classes.size() == 20);
  CHECK(pair_of_partitions_count(4) == 20);
  CHECK(static_cast<int>(list.classes.size()) == pair_of_partitions_count(4));
}

TEST_CASE("split tags: only all-even-all-positive types split, tagged 1/2") {
  const ClassList list = all_classes(kind_d(4));
  std::map<std::string, int> split_counts;
  for (std::size_t i = 0; i < list.classes.size(); ++i) {
    const auto& tag = list.split_tags[i];
    if (!tag.empty()) {
      CHECK(list.classes[i].type().all_even_positive());
      split_counts[list.classes[i].type().to_string()]++;
      CHECK((tag == "1" || tag == "2"));
    }
  }
  CHECK(split_counts.size() == 2);  // (4) and (2,2)
  for (const auto& [type, count] : split_counts) CHECK(count == 2);
}

TEST_CASE("class listing JSON carries the documented fields in order") {
  const ClassList list = all_classes(kind_d(3));
  const auto j = nlohmann::ordered_json::parse(class_list_json(list));
  CHECK(j["kind"] == "D");
  CHECK(j["n"] == 3);
  CHECK(j.contains("warning"));  // degenerate rank flag
  REQUIRE(j["classes"].is_array());
  std::uint64_t total = 0;
  for (const auto& row : j["classes"]) {
    CHECK(row.contains("rep"));
    CHECK(row.contains("size"));
    CHECK(row.contains("signed_cycle_type"));
    CHECK(row.contains("split_tag"));
    total += row["size"].get<std::uint64_t>();
  }
  CHECK(total == kind_d(3).order());
}
