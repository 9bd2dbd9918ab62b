#include "weylrack/grammar.hpp"

#include <cctype>
#include <vector>

namespace weylrack {

std::string print_element(const SignedElem& x) {
  std::string out;
  out.reserve(static_cast<std::size_t>(x.size()) + 8);
  for (int i = 0; i < x.size(); ++i) out += x.sign.bit(i) ? '1' : '0';
  out += ';';
  const auto cycles = perm_cycles(x.perm);
  if (cycles.empty()) {
    out += "id";
    return out;
  }
  for (const auto& cyc : cycles) {
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cyc[i]);
    }
    out += ')';
  }
  return out;
}

SignedElem parse_element(std::string_view text) {
  std::size_t pos = 0;
  const std::size_t len = text.size();

  std::vector<int> bits;
  while (pos < len && (text[pos] == '0' || text[pos] == '1')) {
    bits.push_back(text[pos] - '0');
    ++pos;
  }
  if (bits.empty()) throw ParseError(pos, "expected sign bits '0'/'1'");
  if (pos >= len || text[pos] != ';') throw ParseError(pos, "expected ';' after sign bits");
  ++pos;
  const int n = static_cast<int>(bits.size());
  if (n > kMaxRank) throw ParseError(0, "rank exceeds supported maximum " + std::to_string(kMaxRank));

  if (text.compare(pos, 2, "id") == 0) {
    pos += 2;
    if (pos != len) throw ParseError(pos, "trailing characters after 'id'");
    return make_elem(sign_from_bits(bits), perm_identity(n));
  }

  std::vector<std::vector<int>> cycles;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  if (pos >= len) throw ParseError(pos, "expected cycles or 'id'");
  while (pos < len) {
    if (text[pos] != '(') throw ParseError(pos, "expected '('");
    ++pos;
    std::vector<int> cyc;
    while (true) {
      if (pos >= len || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw ParseError(pos, "expected cycle entry");
      }
      int value = 0;
      while (pos < len && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > kMaxRank) throw ParseError(pos, "cycle entry out of range");
        ++pos;
      }
      if (value < 1 || value > n) throw ParseError(pos - 1, "cycle entry out of range 1.." + std::to_string(n));
      if (used[static_cast<std::size_t>(value - 1)]) throw ParseError(pos - 1, "position " + std::to_string(value) + " reused");
      used[static_cast<std::size_t>(value - 1)] = true;
      cyc.push_back(value);
      if (pos < len && text[pos] == ' ') {
        ++pos;
        continue;
      }
      if (pos < len && text[pos] == ')') {
        ++pos;
        break;
      }
      throw ParseError(pos, "expected ' ' or ')'");
    }
    cycles.push_back(std::move(cyc));
  }
  return make_elem(sign_from_bits(bits), perm_from_cycles(n, cycles));
}

}  // namespace weylrack
