#include "weylrack/classes.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include <json.hpp>

namespace weylrack {

namespace {

void require_cap(const GroupKind& k, int cap) {
  const int limit = std::min(cap, kHardEnumCap);
  if (k.n > limit) {
    throw Error("enumeration cap exceeded: n = " + std::to_string(k.n) +
                " > cap " + std::to_string(limit));
  }
}

void require_member(const GroupKind& k, const SignedElem& x, const char* where) {
  if (!k.contains(x)) {
    throw Error(std::string(where) + ": element not in W(" + k.letter() +
                std::to_string(k.n) + ")");
  }
}

// Permutations of S_n ordered by their printed cycle string.
const std::vector<Perm>& sorted_perms(int n) {
  static std::vector<std::vector<Perm>> cache(kMaxRank + 1);
  auto& slot = cache[static_cast<std::size_t>(n)];
  if (!slot.empty()) return slot;

  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<std::pair<std::string, Perm>> keyed;
  keyed.reserve(factorial(n));
  do {
    Perm p = perm_from_images(images);
    keyed.emplace_back(print_element(SignedElem{sign_zero(n), p}), p);
  } while (std::next_permutation(images.begin(), images.end()));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  slot.reserve(keyed.size());
  for (auto& [key, p] : keyed) slot.push_back(p);
  return slot;
}

// BFS over conjugation starting from `start`, which must already be the
// lexicographically least member when a section is wanted.
ConjClass bfs_class(const SignedElem& start, const GroupKind& k) {
  const auto gens = conjugation_generators(k);
  ConjClass c;
  c.kind = k;
  c.rep = start;
  c.order.push_back(start);
  c.section.push_back(elem_identity(k.n));

  std::vector<std::uint64_t> seen;  // packed indices, sorted-on-demand copy below
  seen.push_back(packed_index(start));
  std::sort(seen.begin(), seen.end());

  std::deque<std::uint32_t> queue;
  queue.push_back(0);
  auto is_seen = [&seen](std::uint64_t key) {
    return std::binary_search(seen.begin(), seen.end(), key);
  };
  while (!queue.empty()) {
    const std::uint32_t at = queue.front();
    queue.pop_front();
    const SignedElem t = c.order[at];
    const SignedElem g_t = c.section[at];
    for (const auto& g : gens) {
      const SignedElem u = conjugate(g, t);
      const std::uint64_t key = packed_index(u);
      if (is_seen(key)) continue;
      seen.insert(std::lower_bound(seen.begin(), seen.end(), key), key);
      c.order.push_back(u);
      c.section.push_back(multiply(g, g_t));
      queue.push_back(static_cast<std::uint32_t>(c.order.size() - 1));
    }
  }

  // Certify the section while the parent chain is fresh.
  for (std::size_t i = 0; i < c.order.size(); ++i) {
    if (!(conjugate(c.section[i], c.rep) == c.order[i])) {
      throw Error("coset section certificate failed");
    }
  }

  std::vector<std::uint32_t> idx(c.order.size());
  std::iota(idx.begin(), idx.end(), 0u);
  std::vector<std::string> keys(c.order.size());
  for (std::size_t i = 0; i < c.order.size(); ++i) keys[i] = canonical_key(c.order[i]);
  std::sort(idx.begin(), idx.end(),
            [&keys](std::uint32_t a, std::uint32_t b) { return keys[a] < keys[b]; });
  c.sorted_keys.reserve(idx.size());
  c.sorted_to_order = idx;
  for (const std::uint32_t i : idx) c.sorted_keys.push_back(keys[i]);
  return c;
}

}  // namespace

bool ConjClass::contains(const SignedElem& x) const { return index_of(x).has_value(); }

std::optional<std::uint32_t> ConjClass::index_of(const SignedElem& x) const {
  const std::string key = canonical_key(x);
  const auto it = std::lower_bound(sorted_keys.begin(), sorted_keys.end(), key);
  if (it == sorted_keys.end() || *it != key) return std::nullopt;
  return sorted_to_order[static_cast<std::size_t>(it - sorted_keys.begin())];
}

std::vector<SignedElem> conjugation_generators(const GroupKind& k) {
  std::vector<SignedElem> gens;
  for (int i = 0; i + 1 < k.n; ++i) {
    gens.push_back(make_elem(sign_zero(k.n), perm_from_cycles(k.n, {{i + 1, i + 2}})));
  }
  SignVec flip = sign_zero(k.n);
  flip.bits = k.family == GroupKind::Family::B ? 0b01 : 0b11;
  gens.push_back(make_elem(flip, perm_identity(k.n)));
  return gens;
}

std::vector<SignedElem> enumerate_group(const GroupKind& k, int cap) {
  require_cap(k, cap);
  const auto& perms = sorted_perms(k.n);
  std::vector<SignedElem> out;
  out.reserve(k.order());
  const std::uint32_t top = 1u << k.n;
  for (std::uint32_t raw = 0; raw < top; ++raw) {
    // Bits string a_1..a_n ascends lexicographically with a_1 most significant.
    SignVec v = sign_zero(k.n);
    for (int i = 0; i < k.n; ++i) {
      if ((raw >> (k.n - 1 - i)) & 1) v.bits = static_cast<std::uint16_t>(v.bits | (1u << i));
    }
    if (k.family == GroupKind::Family::D && v.coordinate_sum() != 0) continue;
    for (const Perm& p : perms) out.push_back(SignedElem{v, p});
  }
  return out;
}

ConjClass class_of(const SignedElem& x, const GroupKind& k, int cap) {
  require_cap(k, cap);
  require_member(k, x, "class_of");
  // First sweep finds the set, second numbers it from the canonical rep;
  // sorted_keys is ascending, so position 0 is the class minimum.
  ConjClass sweep = bfs_class(x, k);
  const SignedElem rep = sweep.order[sweep.sorted_to_order[0]];
  if (rep == x) return sweep;
  return bfs_class(rep, k);
}

bool same_class_oracle(const SignedElem& x, const SignedElem& y, const GroupKind& k, int cap) {
  require_member(k, x, "same_class_oracle");
  require_member(k, y, "same_class_oracle");
  return class_of(x, k, cap).contains(y);
}

std::vector<SignedElem> centralizer(const SignedElem& x, const GroupKind& k, int cap) {
  require_member(k, x, "centralizer");
  std::vector<SignedElem> out;
  for (const auto& g : enumerate_group(k, cap)) {
    if (conjugate(g, x) == x) out.push_back(g);
  }
  return out;
}

ClassList all_classes(const GroupKind& k, int cap) {
  require_cap(k, cap);
  ClassList list{k, {}, {}};
  const auto everyone = enumerate_group(k, cap);
  std::vector<bool> visited(factorial(k.n) * (1ull << k.n), false);
  for (const auto& x : everyone) {
    const std::uint64_t key = packed_index(x);
    if (visited[key]) continue;
    // Lex enumeration means the first unvisited member is the class minimum.
    ConjClass c = bfs_class(x, k);
    for (const auto& t : c.order) visited[packed_index(t)] = true;
    list.classes.push_back(std::move(c));
  }

  // Split tags: types carrying more than one class get "1", "2", ... in
  // representative order; singleton types get "".
  std::map<std::string, std::vector<std::size_t>> by_type;
  for (std::size_t i = 0; i < list.classes.size(); ++i) {
    by_type[list.classes[i].type().to_string()].push_back(i);
  }
  list.split_tags.assign(list.classes.size(), "");
  for (const auto& [type, members] : by_type) {
    if (members.size() < 2) continue;
    for (std::size_t j = 0; j < members.size(); ++j) {
      list.split_tags[members[j]] = std::to_string(j + 1);
    }
  }
  return list;
}

std::string class_list_json(const ClassList& list) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(1, list.kind.letter());
  j["n"] = list.kind.n;
  if (list.kind.small_rank_warning()) {
    j["warning"] = "W(D_n) with n <= 3 is degenerate; results are exact but the group is not a type-D Weyl group";
  }
  j["classes"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < list.classes.size(); ++i) {
    const auto& c = list.classes[i];
    nlohmann::ordered_json item;
    item["rep"] = print_element(c.rep);
    item["size"] = c.size();
    nlohmann::ordered_json type = nlohmann::ordered_json::array();
    for (const auto& [len, par] : c.type().cycles) type.push_back({len, par});
    item["signed_cycle_type"] = type;
    item["split_tag"] = list.split_tags[i];
    j["classes"].push_back(item);
  }
  return j.dump(2);
}

}  // namespace weylrack
