#include "weylrack/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "weylrack/braiding.hpp"
#include "weylrack/version.hpp"

namespace weylrack {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = false;
  std::string details;
};

ReportItem run_item(const std::string& id, const std::string& citation,
                    const std::function<Outcome()>& body) {
  ReportItem item;
  item.id = id;
  item.citation = citation;
  const auto start = Clock::now();
  try {
    const Outcome out = body();
    item.status = out.ok ? "pass" : "fail";
    item.details = out.details;
  } catch (const std::exception& e) {
    item.status = "fail";
    item.details = std::string("exception: ") + e.what();
  }
  item.wall_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return item;
}

std::string verdict_summary(const TypeDVerdict& v) {
  std::ostringstream os;
  os << "nonempty=" << (v.decomp.r_nonempty && v.decomp.s_nonempty ? "ok" : "FAIL")
     << " disjoint=" << (v.decomp.disjoint ? "ok" : "FAIL")
     << " subracks=" << (v.decomp.r_closed && v.decomp.s_closed ? "ok" : "FAIL")
     << " cross=" << (v.decomp.cross_rs && v.decomp.cross_sr ? "ok" : "FAIL")
     << " sq=" << (v.sq_moves ? "ok" : "FAIL")
     << " membership=" << (v.membership ? "ok" : "FAIL");
  if (!v.non_members.empty()) {
    os << " outside-class:";
    for (std::size_t i = 0; i < v.non_members.size() && i < 4; ++i) os << " " << v.non_members[i];
    if (v.non_members.size() > 4) os << " ... (" << v.non_members.size() << " total)";
  }
  return os.str();
}

// Runs fn(i) for i in [0, count) over the requested number of workers and
// returns results in index order.
template <typename Fn>
auto parallel_map(std::size_t count, int workers, Fn fn)
    -> std::vector<decltype(fn(std::size_t{0}))> {
  using R = decltype(fn(std::size_t{0}));
  std::vector<R> out(count);
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::future<void>> futures;
  const int lanes = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
  for (int lane = 0; lane < lanes; ++lane) {
    futures.push_back(std::async(std::launch::async, [&, lane]() {
      for (std::size_t i = static_cast<std::size_t>(lane); i < count;
           i += static_cast<std::size_t>(lanes)) {
        out[i] = fn(i);
      }
    }));
  }
  for (auto& f : futures) f.get();
  return out;
}

Outcome core_action_suite() {
  const int n = 4;
  std::vector<Perm> perms;
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  do {
    perms.push_back(perm_from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  std::size_t checked = 0;
  for (const Perm& s : perms)
    for (const Perm& t : perms)
      for (std::uint16_t raw = 0; raw < (1u << n); ++raw) {
        SignVec a = sign_zero(n);
        a.bits = raw;
        if (!(act(perm_compose(s, t), a) == act(s, act(t, a)))) {
          return {false, "action homomorphism failed"};
        }
        ++checked;
      }
  return {true, std::to_string(checked) + " (sigma,tau,a) triples"};
}

Outcome core_inverse_suite(int cap) {
  const GroupKind b4 = kind_b(4);
  std::size_t checked = 0;
  for (const auto& x : enumerate_group(b4, cap)) {
    const SignedElem inv = inverse(x);
    if (!elem_is_identity(multiply(x, inv)) || !elem_is_identity(multiply(inv, x))) {
      return {false, "inverse formula mismatch at " + print_element(x)};
    }
    // The formula value (sigma^{-1}(a), sigma^{-1}) against components.
    if (!(inv.perm == perm_inverse(x.perm)) ||
        !(inv.sign == act(perm_inverse(x.perm), x.sign))) {
      return {false, "inverse not in formula shape at " + print_element(x)};
    }
    ++checked;
  }
  return {true, std::to_string(checked) + " elements of W(B4)"};
}

Outcome core_conjugation_suite(int cap) {
  const GroupKind b4 = kind_b(4);
  const auto group = enumerate_group(b4, cap);
  std::size_t checked = 0;
  for (const auto& g : group)
    for (const auto& x : group) {
      if (!(conjugate(g, x) == multiply(multiply(g, x), inverse(g)))) {
        return {false, "conjugation formula mismatch at g=" + print_element(g) +
                           " x=" + print_element(x)};
      }
      ++checked;
    }
  return {true, std::to_string(checked) + " pairs of W(B4)"};
}

Outcome core_rack_axiom_suite(int cap) {
  const GroupKind b3 = kind_b(3);
  const auto group = enumerate_group(b3, cap);
  for (const auto& x : group)
    for (const auto& y : group)
      for (const auto& z : group) {
        if (!(conjugate(x, conjugate(y, z)) == conjugate(conjugate(x, y), conjugate(x, z)))) {
          return {false, "self-distributivity failed"};
        }
      }
  return {true, std::to_string(group.size() * group.size() * group.size()) +
                    " triples of W(B3)"};
}

Outcome core_k_closure_suite(int cap) {
  const GroupKind d4 = kind_d(4);
  const auto group = enumerate_group(d4, cap);
  for (const auto& x : group)
    for (const auto& y : group) {
      if (multiply(x, y).sign.coordinate_sum() != 0 ||
          conjugate(x, y).sign.coordinate_sum() != 0) {
        return {false, "K_n closure violated"};
      }
    }
  return {true, std::to_string(group.size() * group.size()) + " pairs of W(D4)"};
}

Outcome fast_vs_oracle(const GroupKind& k, int cap) {
  const ClassList list = all_classes(k, cap);
  std::size_t agree = 0;
  std::size_t needs = 0;
  for (std::size_t i = 0; i < list.classes.size(); ++i) {
    for (std::size_t j = 0; j < list.classes.size(); ++j) {
      const Tri fast = same_class_fast(list.classes[i].rep, list.classes[j].rep, k);
      const bool truth = i == j;  // distinct classes are disjoint
      if (fast == Tri::Yes && !truth) return {false, "false positive between class reps"};
      if (fast == Tri::No && truth) return {false, "false negative on a class rep"};
      if (fast == Tri::NeedsOracle) {
        ++needs;
        if (!sign_cycle_decompose(list.classes[i].rep).all_even_positive()) {
          return {false, "needs-oracle outside all-even-all-positive types"};
        }
      } else {
        ++agree;
      }
    }
  }
  return {true, std::to_string(agree) + " decided pairs, " + std::to_string(needs) +
                    " needs-oracle (all-even-positive only)"};
}

Outcome closed_form_sweep(bool include_b5, int cap) {
  const GroupKind b4 = kind_b(4);
  const auto group = enumerate_group(b4, cap);
  for (const auto& x : group)
    for (const auto& y : group) {
      if (!(sq_closed_form(x, y) == sq(x, y))) {
        return {false, "closed form mismatch at x=" + print_element(x) + " y=" + print_element(y)};
      }
    }
  std::string details = std::to_string(group.size() * group.size()) + " pairs of W(B4)";
  if (include_b5) {
    const auto b5 = enumerate_group(kind_b(5), cap);
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, b5.size() - 1);
    for (int trial = 0; trial < 100000; ++trial) {
      const SignedElem& x = b5[pick(rng)];
      const SignedElem& y = b5[pick(rng)];
      if (!(sq_closed_form(x, y) == sq(x, y))) {
        return {false, "closed form mismatch on W(B5) sample"};
      }
    }
    details += " + 100000 random pairs of W(B5)";
  }
  return {true, details};
}

Outcome e11_sweep() {
  const int n = 5;
  const Perm sigma = perm_from_cycles(n, {{1, 2, 3}});
  std::size_t checked = 0;
  for (std::uint16_t ra = 0; ra < (1u << n); ++ra)
    for (std::uint16_t rb = 0; rb < (1u << n); ++rb) {
      SignVec a = sign_zero(n);
      a.bits = ra;
      SignVec b = sign_zero(n);
      b.bits = rb;
      const bool fixed = sq(make_elem(a, sigma), make_elem(b, sigma)) == make_elem(b, sigma);
      if (predicate_e11(a, b, sigma) != fixed) {
        return {false, "equivalence broken at a/b bits " + std::to_string(ra) + "/" + std::to_string(rb)};
      }
      ++checked;
    }
  const SignVec a_bad = sign_from_bits({1, 1, 0, 0, 0});
  const SignVec b_bad = sign_from_bits({1, 0, 0, 0, 1});
  const SignVec a_bad2 = sign_from_bits({1, 1, 0, 0, 1});
  const SignVec b_bad2 = sign_from_bits({1, 0, 0, 0, 0});
  if (predicate_e11(a_bad, b_bad, sigma) || predicate_e11(a_bad2, b_bad2, sigma)) {
    return {false, "designated pairs unexpectedly satisfy the fixed-point identity"};
  }
  return {true, std::to_string(checked) + " sign pairs, designated pairs refute as printed"};
}

Outcome e22_sweep() {
  const int n = 5;
  const Perm tau = perm_from_cycles(n, {{4, 5}});
  const Perm mu = perm_from_cycles(n, {{1, 2, 3}});
  const Perm sigma = perm_compose(tau, mu);
  std::size_t checked = 0;
  for (std::uint16_t ra = 0; ra < (1u << n); ++ra)
    for (std::uint16_t rb = 0; rb < (1u << n); ++rb) {
      SignVec a = sign_zero(n);
      a.bits = ra;
      SignVec b = sign_zero(n);
      b.bits = rb;
      const bool fixed = sq(make_elem(a, sigma), make_elem(b, sigma)) == make_elem(b, sigma);
      if (predicate_e22(a, b, tau, mu) != fixed) {
        return {false, "equivalence broken at a/b bits " + std::to_string(ra) + "/" + std::to_string(rb)};
      }
      ++checked;
    }
  const SignVec a_bad = sign_from_bits({1, 1, 0, 0, 0});
  const SignVec b_bad = sign_from_bits({1, 0, 0, 0, 1});
  const SignVec a_bad2 = sign_from_bits({1, 1, 0, 0, 1});
  const SignVec b_bad2 = sign_from_bits({1, 0, 0, 0, 0});
  if (predicate_e22(a_bad, b_bad, tau, mu) || predicate_e22(a_bad2, b_bad2, tau, mu)) {
    return {false, "designated pairs unexpectedly satisfy the fixed-point identity"};
  }
  return {true, std::to_string(checked) + " sign pairs, designated pairs refute as printed"};
}

Outcome replay_witness(const DecompWitness& w, int cap) {
  const TypeDVerdict v = check_type_d(w, cap);
  return {v.ok(), verdict_summary(v)};
}

struct SweepRow {
  std::string rep;
  ClassVerdict verdict;
  std::string route;
  bool exhaustive = false;
};

Outcome classify_sweep(const GroupKind& k, const VerifyOptions& options) {
  const ClassList list = all_classes(k, options.cap);
  std::vector<std::size_t> targets;
  for (std::size_t i = 0; i < list.classes.size(); ++i) {
    const ConjClass& c = list.classes[i];
    if (perm_is_identity(c.rep.perm)) continue;
    if (k.n == 4) {
      const PermType t = perm_type(c.rep.perm);
      const bool one_three = t.is({1, 3});
      const bool four = t.is({4}) && c.rep.sign.coordinate_sum() == 0;
      if (!one_three && !four) continue;
    }
    targets.push_back(i);
  }
  const auto rows = parallel_map(targets.size(), options.parallel, [&](std::size_t pos) {
    const ConjClass& c = list.classes[targets[pos]];
    const ClassifyResult r = classify_class(c, options.search_bound, options.cap);
    return SweepRow{print_element(c.rep), r.verdict, r.route, r.search_exhaustive};
  });
  std::size_t certified = 0;
  std::ostringstream failures;
  for (const auto& row : rows) {
    if (row.verdict == ClassVerdict::TypeDCertified) {
      ++certified;
    } else {
      failures << " " << row.rep << (row.exhaustive ? " (refuted: exhaustive pair scan)" : " (no witness found)");
    }
  }
  std::ostringstream os;
  os << certified << "/" << rows.size() << " classes certified";
  if (certified != rows.size()) os << "; uncertified:" << failures.str();
  return {certified == rows.size(), os.str()};
}

Outcome exception_table_check(const ExceptionTable& table, std::size_t expected_entries) {
  if (table.entries.size() != expected_entries) {
    return {false, "table holds " + std::to_string(table.entries.size()) + " entries"};
  }
  std::string joined;
  for (const auto& e : table.entries) {
    joined += e.pattern;
    joined += " ";
  }
  return {true, joined};
}

}  // namespace

int Report::count(const std::string& status) const {
  return static_cast<int>(std::count_if(
      items.begin(), items.end(),
      [&status](const ReportItem& item) { return item.status == status; }));
}

std::string report_json(const Report& report) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["group"] = {{"kinds", report.kinds}, {"n_min", report.n_min}, {"n_max", report.n_max}};
  j["items"] = nlohmann::ordered_json::array();
  for (const auto& item : report.items) {
    nlohmann::ordered_json row;
    row["id"] = item.id;
    row["citation"] = item.citation;
    row["status"] = item.status;
    row["details"] = item.details;
    row["wall_ms"] = item.wall_ms;
    j["items"].push_back(row);
  }
  j["summary"] = {{"pass", report.count("pass")},
                  {"fail", report.count("fail")},
                  {"skip", report.count("skip")},
                  {"total", static_cast<int>(report.items.size())}};
  return j.dump(2);
}

Report run_paper_verification(const VerifyOptions& options) {
  Report report;
  report.kinds = std::string(options.kind_b ? "B" : "") + std::string(options.kind_d ? "D" : "");
  report.n_min = options.n_min;
  report.n_max = options.n_max;
  auto add = [&report](ReportItem item) { report.items.push_back(std::move(item)); };

  const bool has4 = options.n_min <= 4 && 4 <= options.n_max;
  const bool has5 = options.n_min <= 5 && 5 <= options.n_max;
  const int cap = options.cap;

  // Core arithmetic invariants.
  add(run_item("core.action", "plumbing", [] { return core_action_suite(); }));
  add(run_item("core.inverse", "inverse formula", [cap] { return core_inverse_suite(cap); }));
  add(run_item("core.conjugation", "conjugation formula", [cap] { return core_conjugation_suite(cap); }));
  add(run_item("core.rack-axioms", "rack axioms", [cap] { return core_rack_axiom_suite(cap); }));
  add(run_item("core.k-closure", "plumbing", [cap] { return core_k_closure_suite(cap); }));

  // Conjugacy criterion against the orbit oracle.
  for (const bool b : {true, false}) {
    if ((b && !options.kind_b) || (!b && !options.kind_d)) continue;
    for (int n = options.n_min; n <= options.n_max; ++n) {
      const GroupKind k = b ? kind_b(n) : kind_d(n);
      add(run_item(std::string("conjugacy.fast-vs-oracle.") + k.letter() + std::to_string(n),
                   "Lemma 1.001", [k, cap] { return fast_vs_oracle(k, cap); }));
    }
  }

  // Fixed-point machinery sweeps.
  add(run_item("sq.closed-form", "Lemma 1.21(i)",
               [has5, cap] { return closed_form_sweep(has5, cap); }));
  add(run_item("sq.e11", "Lemma 1.21(ii)", [] { return e11_sweep(); }));
  add(run_item("sq.e22", "Lemma 1.21(iii)", [] { return e22_sweep(); }));

  // Printed families, each through the full type-D checker.
  struct PropCase {
    std::string id;
    std::string citation;
    std::function<DecompWitness()> build;
    bool enabled;
  };
  std::vector<PropCase> cases;
  for (int n = std::max(4, options.n_min); n <= options.n_max; ++n) {
    for (const bool b : {false, true}) {
      const GroupKind k = b ? kind_b(n) : kind_d(n);
      if ((b && !options.kind_b) || (!b && !options.kind_d)) continue;
      for (const int parity : {0, 1}) {
        if (!b && parity == 1) continue;
        cases.push_back({std::string("prop-1.01.") + k.letter() + std::to_string(n) + ".p" + std::to_string(parity),
                         "Prop 1.01",
                         [k, parity] { return build_witness_1n2_2(k, parity); },
                         true});
      }
    }
  }
  if (has5) {
    if (options.kind_d)
      cases.push_back({"prop-1.22.D.p0", "Prop 1.22", [] { return build_witness_12_3(kind_d(5), 0); }, true});
    if (options.kind_b) {
      cases.push_back({"prop-1.22.B.p0", "Prop 1.22", [] { return build_witness_12_3(kind_b(5), 0); }, true});
      cases.push_back({"prop-1.22.B.p1", "Prop 1.22", [] { return build_witness_12_3(kind_b(5), 1); }, true});
    }
  }
  if (has4) {
    if (options.kind_d)
      cases.push_back({"prop-1.23.D.p0", "Prop 1.23", [] { return build_witness_1_3(kind_d(4), 0); }, true});
    if (options.kind_b) {
      cases.push_back({"prop-1.23.B.p0", "Prop 1.23", [] { return build_witness_1_3(kind_b(4), 0); }, true});
      cases.push_back({"prop-1.23.B.p1", "Prop 1.23", [] { return build_witness_1_3(kind_b(4), 1); }, true});
    }
    if (options.kind_d)
      cases.push_back({"prop-1.23''.D", "Prop 1.23''", [] { return build_witness_4_cycle(); }, true});
  }
  if (has5) {
    if (options.kind_d)
      cases.push_back({"prop-1.24.D.p0", "Prop 1.24", [] { return build_witness_2_3(kind_d(5), 0); }, true});
    if (options.kind_b) {
      cases.push_back({"prop-1.24.B.p0", "Prop 1.24", [] { return build_witness_2_3(kind_b(5), 0); }, true});
      cases.push_back({"prop-1.24.B.p1", "Prop 1.24", [] { return build_witness_2_3(kind_b(5), 1); }, true});
    }
  }
  for (const auto& pc : cases) {
    if (!pc.enabled) continue;
    add(run_item(pc.id, pc.citation, [&pc, cap] { return replay_witness(pc.build(), cap); }));
  }

  // Black-box exception tables held as data.
  add(run_item("tables.thm-1.002", "Thm 1.002",
               [] { return exception_table_check(exception_table_1002(), 8); }));
  add(run_item("tables.thm-1.003", "Thm 1.003",
               [] { return exception_table_check(exception_table_1003(), 3); }));

  // Classification sweeps.
  for (int n = std::max(4, options.n_min); n <= options.n_max && n <= 5; ++n) {
    for (const bool b : {true, false}) {
      if ((b && !options.kind_b) || (!b && !options.kind_d)) continue;
      const GroupKind k = b ? kind_b(n) : kind_d(n);
      ReportItem item = run_item(std::string("thm-1.8.sweep.") + k.letter() + std::to_string(n),
                                 "Thm 1.8", [&] { return classify_sweep(k, options); });
      add(item);
    }
  }

  // The headline dimension statement rides along as a citation tag.
  add(run_item("thm-2.6.dimension-tag", "Thm 2.6", [&report] {
    for (const auto& item : report.items) {
      if (item.id.rfind("thm-1.8.sweep.", 0) == 0 && item.status == "fail") {
        return Outcome{false,
                       "dim B = infinity is tagged only on certified classes; sweep has failures"};
      }
    }
    return Outcome{true, "every certified class carries the infinite-dimension citation tag"};
  }));

  return report;
}

}  // namespace weylrack
