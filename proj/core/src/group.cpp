#include "weylrack/group.hpp"

#include <algorithm>
#include <numeric>

namespace weylrack {

namespace {

void require_rank(int n) {
  if (n < 1 || n > kMaxRank) {
    throw Error("rank out of range: n = " + std::to_string(n));
  }
}

void require_same_n(int a, int b, const char* where) {
  if (a != b) {
    throw Error(std::string(where) + ": dimension mismatch (" +
                std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

Perm perm_identity(int n) {
  require_rank(n);
  Perm p;
  p.n = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) p.img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return p;
}

Perm perm_from_images(const std::vector<int>& one_based_images) {
  const int n = static_cast<int>(one_based_images.size());
  require_rank(n);
  Perm p;
  p.n = static_cast<std::uint8_t>(n);
  std::array<bool, kMaxRank> seen{};
  for (int i = 0; i < n; ++i) {
    const int v = one_based_images[static_cast<std::size_t>(i)];
    if (v < 1 || v > n) throw Error("permutation image out of range");
    if (seen[static_cast<std::size_t>(v - 1)]) throw Error("permutation image repeated");
    seen[static_cast<std::size_t>(v - 1)] = true;
    p.img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

Perm perm_compose(const Perm& p, const Perm& q) {
  require_same_n(p.n, q.n, "perm_compose");
  Perm r;
  r.n = p.n;
  for (int i = 0; i < p.n; ++i) r.img[static_cast<std::size_t>(i)] = p.img[q.img[static_cast<std::size_t>(i)]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r;
  r.n = p.n;
  for (int i = 0; i < p.n; ++i) r.img[p.img[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  return r;
}

bool perm_is_identity(const Perm& p) {
  for (int i = 0; i < p.n; ++i)
    if (p.img[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

Perm perm_from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  require_rank(n);
  Perm p = perm_identity(n);
  std::array<bool, kMaxRank> used{};
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const int from = cyc[i];
      const int to = cyc[(i + 1) % cyc.size()];
      if (from < 1 || from > n) throw Error("cycle entry out of range");
      if (used[static_cast<std::size_t>(from - 1)]) throw Error("cycles not disjoint");
      used[static_cast<std::size_t>(from - 1)] = true;
      p.img[static_cast<std::size_t>(from - 1)] = static_cast<std::uint8_t>(to - 1);
    }
  }
  return p;
}

std::vector<std::vector<int>> perm_cycles(const Perm& p) {
  std::vector<std::vector<int>> out;
  std::array<bool, kMaxRank> seen{};
  for (int start = 0; start < p.n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cyc;
    int cur = start;
    do {
      seen[static_cast<std::size_t>(cur)] = true;
      cyc.push_back(cur + 1);
      cur = p.img[static_cast<std::size_t>(cur)];
    } while (cur != start);
    if (cyc.size() > 1) out.push_back(std::move(cyc));
  }
  return out;  // already ordered by least entry, least-first rotation
}

int perm_parity(const Perm& p) {
  int transpositions = 0;
  std::array<bool, kMaxRank> seen{};
  for (int start = 0; start < p.n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int len = 0;
    int cur = start;
    do {
      seen[static_cast<std::size_t>(cur)] = true;
      ++len;
      cur = p.img[static_cast<std::size_t>(cur)];
    } while (cur != start);
    transpositions += len - 1;
  }
  return transpositions & 1;
}

int SignVec::coordinate_sum() const {
  return __builtin_popcount(static_cast<unsigned>(bits)) & 1;
}

SignVec sign_zero(int n) {
  require_rank(n);
  SignVec v;
  v.n = static_cast<std::uint8_t>(n);
  return v;
}

SignVec sign_from_bits(const std::vector<int>& one_based_entries) {
  const int n = static_cast<int>(one_based_entries.size());
  SignVec v = sign_zero(n);
  for (int i = 0; i < n; ++i) {
    const int b = one_based_entries[static_cast<std::size_t>(i)];
    if (b != 0 && b != 1) throw Error("sign entry must be 0 or 1");
    v.bits = static_cast<std::uint16_t>(v.bits | (b << i));
  }
  return v;
}

SignVec sign_add(const SignVec& a, const SignVec& b) {
  require_same_n(a.n, b.n, "sign_add");
  SignVec r = a;
  r.bits ^= b.bits;
  return r;
}

SignVec act(const Perm& sigma, const SignVec& a) {
  require_same_n(sigma.n, a.n, "act");
  SignVec r = sign_zero(a.n);
  // result[sigma(j)] = a[j], equivalent to result[i] = a[sigma^{-1}(i)].
  for (int j = 0; j < a.n; ++j) {
    if (a.bit(j)) r.bits = static_cast<std::uint16_t>(r.bits | (1u << sigma(j)));
  }
  return r;
}

std::uint64_t GroupKind::order() const {
  const std::uint64_t perms = factorial(n);
  const std::uint64_t signs = family == Family::B ? (1ull << n) : (1ull << (n - 1));
  return perms * signs;
}

bool GroupKind::contains(const SignedElem& x) const {
  if (x.size() != n) return false;
  if (family == Family::D && x.sign.coordinate_sum() != 0) return false;
  return true;
}

GroupKind kind_b(int n) {
  require_rank(n);
  if (n < 2) throw Error("rank must be at least 2");
  return GroupKind{GroupKind::Family::B, n};
}

GroupKind kind_d(int n) {
  require_rank(n);
  if (n < 2) throw Error("rank must be at least 2");
  return GroupKind{GroupKind::Family::D, n};
}

SignedElem elem_identity(int n) { return SignedElem{sign_zero(n), perm_identity(n)}; }

SignedElem make_elem(SignVec a, Perm p) {
  require_same_n(a.n, p.n, "make_elem");
  return SignedElem{a, p};
}

bool elem_is_identity(const SignedElem& x) {
  return x.sign.bits == 0 && perm_is_identity(x.perm);
}

SignedElem multiply(const SignedElem& x, const SignedElem& y) {
  require_same_n(x.size(), y.size(), "multiply");
  return SignedElem{sign_add(x.sign, act(x.perm, y.sign)), perm_compose(x.perm, y.perm)};
}

SignedElem inverse(const SignedElem& x) {
  Perm q = perm_inverse(x.perm);
  return SignedElem{act(q, x.sign), q};
}

SignedElem conjugate(const SignedElem& g, const SignedElem& x) {
  require_same_n(g.size(), x.size(), "conjugate");
  Perm rho = perm_compose(perm_compose(g.perm, x.perm), perm_inverse(g.perm));
  SignVec s = sign_add(sign_add(g.sign, act(g.perm, x.sign)), act(rho, g.sign));
  return SignedElem{s, rho};
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t packed_index(const SignedElem& x) {
  // Lehmer rank of the permutation, then the sign bits as low digits.
  const int n = x.size();
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (x.perm.img[static_cast<std::size_t>(j)] < x.perm.img[static_cast<std::size_t>(i)]) ++smaller;
    rank += static_cast<std::uint64_t>(smaller) * factorial(n - 1 - i);
  }
  return rank * (1ull << n) + x.sign.bits;
}

int SignedCycleType::total_length() const {
  int t = 0;
  for (const auto& [len, par] : cycles) t += len;
  return t;
}

bool SignedCycleType::all_even_positive() const {
  for (const auto& [len, par] : cycles)
    if (len % 2 != 0 || par != 0) return false;
  return true;
}

std::string SignedCycleType::to_string() const {
  std::string s;
  for (const auto& [len, par] : cycles) {
    s += "(" + std::to_string(len) + "," + std::to_string(par) + ")";
  }
  return s;
}

SignedCycleType sign_cycle_decompose(const SignedElem& x) {
  SignedCycleType t;
  std::array<bool, kMaxRank> seen{};
  for (int start = 0; start < x.size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int len = 0;
    int parity = 0;
    int cur = start;
    do {
      seen[static_cast<std::size_t>(cur)] = true;
      ++len;
      parity ^= x.sign.bit(cur);
      cur = x.perm(cur);
    } while (cur != start);
    t.cycles.emplace_back(len, parity);
  }
  std::sort(t.cycles.begin(), t.cycles.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  return t;
}

Tri same_class_fast(const SignedElem& x, const SignedElem& y, const GroupKind& k) {
  if (!k.contains(x) || !k.contains(y)) {
    throw Error("same_class_fast: element not in the designated group");
  }
  const SignedCycleType tx = sign_cycle_decompose(x);
  const SignedCycleType ty = sign_cycle_decompose(y);
  if (!(tx == ty)) return Tri::No;
  if (k.family == GroupKind::Family::B) return Tri::Yes;
  // Kind D: equal types with an odd or negative cycle force conjugacy; the
  // all-even-all-positive case may split and is left to the orbit oracle.
  if (!tx.all_even_positive()) return Tri::Yes;
  return Tri::NeedsOracle;
}

}  // namespace weylrack
