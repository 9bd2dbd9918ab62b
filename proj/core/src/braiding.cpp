#include "weylrack/braiding.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace weylrack {

namespace {

std::uint64_t lcm32(std::uint32_t a, std::uint32_t b) {
  return static_cast<std::uint64_t>(a) / std::gcd(a, b) * b;
}

}  // namespace

bool RootScalar::equals(const RootScalar& other) const {
  // Compare as fractions exp/order mod 1.
  return static_cast<std::uint64_t>(exp % order) * other.order ==
         static_cast<std::uint64_t>(other.exp % other.order) * order;
}

RootScalar RootScalar::times(const RootScalar& other) const {
  const std::uint64_t l = lcm32(order, other.order);
  const std::uint64_t e =
      (static_cast<std::uint64_t>(exp) * (l / order) +
       static_cast<std::uint64_t>(other.exp) * (l / other.order)) % l;
  return RootScalar{static_cast<std::uint32_t>(l), static_cast<std::uint32_t>(e)};
}

Cocycle Cocycle::constant(int dim, const RootScalar& value) {
  Cocycle c;
  c.dim = dim;
  c.q.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), value);
  return c;
}

const RootScalar& Cocycle::at(int x, int y) const {
  const std::size_t idx = static_cast<std::size_t>(x) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(y);
  if (idx >= q.size()) throw Error("cocycle entry missing");
  return q[idx];
}

bool cocycle_condition_holds(const FiniteRack& rack, const Cocycle& q) {
  if (q.dim != rack.size()) throw Error("cocycle dimension mismatch");
  const int d = rack.size();
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z) {
        const RootScalar lhs = q.at(x, rack.op(y, z)).times(q.at(y, z));
        const RootScalar rhs = q.at(rack.op(x, y), rack.op(x, z)).times(q.at(x, z));
        if (!lhs.equals(rhs)) return false;
      }
  return true;
}

BraidingMatrix BraidingMatrix::identity(int dim) {
  BraidingMatrix c;
  c.dim = dim;
  const std::size_t d2 = static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim);
  c.row.resize(d2);
  std::iota(c.row.begin(), c.row.end(), 0u);
  c.scalar.assign(d2, RootScalar::one());
  return c;
}

bool BraidingMatrix::invertible() const {
  std::vector<bool> hit(row.size(), false);
  for (const std::uint32_t r : row) {
    if (r >= row.size() || hit[r]) return false;
    hit[r] = true;
  }
  return true;
}

bool BraidingMatrix::equals(const BraidingMatrix& other) const {
  if (dim != other.dim || row != other.row) return false;
  for (std::size_t i = 0; i < scalar.size(); ++i)
    if (!scalar[i].equals(other.scalar[i])) return false;
  return true;
}

BraidingMatrix rack_braiding(const FiniteRack& rack, const Cocycle& q) {
  if (q.dim != rack.size()) throw Error("cocycle dimension mismatch");
  const int d = rack.size();
  BraidingMatrix c;
  c.dim = d;
  c.row.resize(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
  c.scalar.resize(c.row.size());
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      const std::size_t col = static_cast<std::size_t>(x) * static_cast<std::size_t>(d) + static_cast<std::size_t>(y);
      c.row[col] = static_cast<std::uint32_t>(rack.op(x, y) * d + x);
      c.scalar[col] = q.at(x, y);
    }
  return c;
}

bool check_braid_equation(const BraidingMatrix& c) {
  const int d = c.dim;
  // State (x, y, z) with an accumulated scalar; C acts on two chosen slots.
  struct State {
    int x, y, z;
    RootScalar s;
  };
  const auto apply12 = [&c, d](State st) {
    const std::size_t col = static_cast<std::size_t>(st.x) * static_cast<std::size_t>(d) + static_cast<std::size_t>(st.y);
    const std::uint32_t r = c.row[col];
    st.s = st.s.times(c.scalar[col]);
    st.x = static_cast<int>(r) / d;
    st.y = static_cast<int>(r) % d;
    return st;
  };
  const auto apply23 = [&c, d](State st) {
    const std::size_t col = static_cast<std::size_t>(st.y) * static_cast<std::size_t>(d) + static_cast<std::size_t>(st.z);
    const std::uint32_t r = c.row[col];
    st.s = st.s.times(c.scalar[col]);
    st.y = static_cast<int>(r) / d;
    st.z = static_cast<int>(r) % d;
    return st;
  };
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z) {
        const State start{x, y, z, RootScalar::one()};
        const State lhs = apply12(apply23(apply12(start)));
        const State rhs = apply23(apply12(apply23(start)));
        if (lhs.x != rhs.x || lhs.y != rhs.y || lhs.z != rhs.z || !lhs.s.equals(rhs.s)) {
          return false;
        }
      }
  return true;
}

RootScalar Character::value(const SignedElem& g) const {
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (domain[i] == g) return RootScalar{order, exps[i]};
  }
  throw Error("character evaluated outside its domain");
}

bool Character::is_trivial() const {
  return std::all_of(exps.begin(), exps.end(),
                     [this](std::uint32_t e) { return e % order == 0; });
}

bool Character::multiplicative() const {
  for (std::size_t i = 0; i < domain.size(); ++i)
    for (std::size_t j = 0; j < domain.size(); ++j) {
      const RootScalar lhs = value(multiply(domain[i], domain[j]));
      const RootScalar rhs = RootScalar{order, exps[i]}.times(RootScalar{order, exps[j]});
      if (!lhs.equals(rhs)) return false;
    }
  return true;
}

std::vector<Character> z2_characters(const std::vector<SignedElem>& elements) {
  if (elements.empty()) throw Error("z2_characters: empty domain");
  const std::size_t m = elements.size();
  std::unordered_map<std::uint64_t, int> index;
  for (std::size_t i = 0; i < m; ++i) index.emplace(packed_index(elements[i]), static_cast<int>(i));
  const auto at = [&](const SignedElem& g) {
    const auto it = index.find(packed_index(g));
    if (it == index.end()) throw Error("z2_characters: domain is not closed under multiplication");
    return it->second;
  };

  // N = <squares, commutators>; the quotient is elementary abelian of
  // exponent 2 and its characters are exactly the Z_2 characters.
  std::vector<bool> in_n(m, false);
  std::vector<int> work;
  auto push = [&](const SignedElem& g) {
    const int i = at(g);
    if (!in_n[static_cast<std::size_t>(i)]) {
      in_n[static_cast<std::size_t>(i)] = true;
      work.push_back(i);
    }
  };
  push(multiply(elements[0], inverse(elements[0])));  // identity
  for (const auto& g : elements) push(multiply(g, g));
  for (const auto& g : elements)
    for (const auto& h : elements)
      push(multiply(multiply(g, h), multiply(inverse(g), inverse(h))));
  for (std::size_t done = 0; done < work.size(); ++done) {
    const SignedElem& a = elements[static_cast<std::size_t>(work[done])];
    for (std::size_t other = 0; other < work.size(); ++other) {
      push(multiply(a, elements[static_cast<std::size_t>(work[other])]));
    }
  }

  // Coset labels, then coordinates over a greedy F_2 basis of the quotient.
  std::vector<int> coset(m, -1);
  std::vector<std::uint32_t> coords_of_coset;
  std::vector<int> coset_rep;
  for (std::size_t i = 0; i < m; ++i) {
    if (coset[i] >= 0) continue;
    const int label = static_cast<int>(coset_rep.size());
    coset_rep.push_back(static_cast<int>(i));
    coords_of_coset.push_back(0);  // fixed below
    for (std::size_t j = 0; j < m; ++j) {
      if (in_n[j]) coset[static_cast<std::size_t>(at(multiply(elements[i], elements[j])))] = label;
    }
    if (coset[i] != label) throw Error("z2_characters: coset labeling failed");
  }

  const std::size_t coset_count = coset_rep.size();
  std::vector<std::uint32_t> coords(coset_count, 0);
  std::vector<bool> spanned(coset_count, false);
  spanned[static_cast<std::size_t>(coset[static_cast<std::size_t>(at(multiply(elements[0], inverse(elements[0]))))])] = true;
  int rank = 0;
  for (std::size_t i = 0; i < coset_count; ++i) {
    if (spanned[i]) continue;
    // New basis vector: multiply every spanned coset by it.
    const int bit = rank++;
    std::vector<std::pair<std::size_t, std::uint32_t>> snapshot;
    for (std::size_t s = 0; s < coset_count; ++s)
      if (spanned[s]) snapshot.emplace_back(s, coords[s]);
    for (const auto& [s, v] : snapshot) {
      const SignedElem prod = multiply(elements[static_cast<std::size_t>(coset_rep[s])],
                                       elements[static_cast<std::size_t>(coset_rep[i])]);
      const std::size_t target = static_cast<std::size_t>(coset[static_cast<std::size_t>(at(prod))]);
      spanned[target] = true;
      coords[target] = v | (1u << bit);
    }
  }

  std::vector<Character> out;
  const std::uint32_t total = 1u << rank;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    Character chi;
    chi.order = 2;
    chi.domain = elements;
    chi.exps.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      chi.exps[i] = static_cast<std::uint32_t>(
          __builtin_popcount(mask & coords[static_cast<std::size_t>(coset[i])]) & 1);
    }
    if (!chi.multiplicative()) throw Error("z2_characters: construction is not multiplicative");
    out.push_back(std::move(chi));
  }
  return out;
}

BraidingMatrix yd_braiding(const ConjClass& c, const Character& chi) {
  const std::size_t m = c.size();
  if (!chi.multiplicative()) throw Error("yd_braiding: character is not multiplicative");
  for (const auto& g : chi.domain) {
    if (!(conjugate(g, c.rep) == c.rep)) {
      throw Error("yd_braiding: character domain must centralize the representative");
    }
  }

  BraidingMatrix out;
  out.dim = static_cast<int>(m);
  out.row.resize(m * m);
  out.scalar.resize(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto jp = c.index_of(conjugate(c.order[i], c.order[j]));
      if (!jp) throw Error("yd_braiding: conjugation left the class");
      // t_i g_j = g_{j'} nu with nu in the centralizer of the representative.
      const SignedElem nu =
          multiply(inverse(c.section[*jp]), multiply(c.order[i], c.section[j]));
      if (!(conjugate(nu, c.rep) == c.rep)) {
        throw Error("yd_braiding: nu does not centralize the representative");
      }
      const std::size_t col = i * m + j;
      out.row[col] = static_cast<std::uint32_t>(*jp * m + i);
      out.scalar[col] = chi.value(nu);
    }
  }
  return out;
}

std::string braiding_coordinate_list(const BraidingMatrix& c) {
  std::string out;
  for (std::size_t col = 0; col < c.row.size(); ++col) {
    out += std::to_string(c.row[col] + 1);
    out += ' ';
    out += std::to_string(col + 1);
    out += ' ';
    out += std::to_string(c.scalar[col].exp % c.scalar[col].order);
    out += ' ';
    out += std::to_string(c.scalar[col].order);
    out += '\n';
  }
  return out;
}

}  // namespace weylrack
