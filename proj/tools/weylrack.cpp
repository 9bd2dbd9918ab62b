// weylrack CLI: desk-scale verification of signed-permutation conjugacy
// classes, their rack structure and braidings.
//
// Exit codes: 0 all checks passed, 1 any check failed or nothing found,
// 2 usage or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "weylrack/braiding.hpp"
#include "weylrack/classes.hpp"
#include "weylrack/constructions.hpp"
#include "weylrack/grammar.hpp"
#include "weylrack/rack.hpp"
#include "weylrack/report.hpp"
#include "weylrack/version.hpp"

namespace {

using namespace weylrack;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void print_usage() {
  std::cout <<
      R"(weylrack - signed permutation groups, conjugation racks, type-D certificates

Usage: weylrack <command> [arguments] [options]

Commands:
  class-info ELEMENT     signed cycle type, class size, centralizer size, split tag
  sq X Y                 sq(x,y) = x |> (y |> (x |> y)) and its fixed-point status
  search ELEMENT         type-D decomposition search over the element's class
  verify-paper           replay the published constructions and run the class sweep
  classes                list the conjugacy classes of one group as JSON
  braiding-check ELEMENT braid-equation checks for the class braidings

Elements use the grammar <bits>;<cycles>, e.g. 10001;(1 2 3)(4 5) or 00000;id.

Options:
  --kind {B,D}   group family (required whenever a group is involved)
  --n N | A..B   rank, or rank range for verify-paper (default 4..5)
  --kinds KS     verify-paper: any of B, D, BD (default BD)
  --json PATH    write the machine-readable report to PATH
  --parallel N   verify-paper: verify independent classes on N workers
  --cap N        enumeration cap (default 7, env WEYLRACK_CAP)
  --closed-form  sq: also evaluate the closed form and assert agreement
  --recheck      search: re-run the full verifier on the emitted witness
  --q {1,-1}     braiding-check: restrict to one constant cocycle
  --yd           braiding-check: include Yetter-Drinfeld braidings for all
                 Z2-valued centralizer characters
  --export PATH  braiding-check: write the last braiding as `i j exp order` lines

Exit codes: 0 all-pass, 1 any-fail, 2 usage error.
)";
}

struct Args {
  std::string command;
  std::vector<std::string> positional;
  std::map<std::string, std::string> flags;

  bool has(const std::string& name) const { return flags.count(name) > 0; }
  std::string get(const std::string& name, const std::string& fallback = "") const {
    const auto it = flags.find(name);
    return it == flags.end() ? fallback : it->second;
  }
};

const std::map<std::string, bool> kBooleanFlags = {
    {"--closed-form", true}, {"--recheck", true}, {"--yd", true}, {"--help", true}, {"-h", true}};

std::optional<Args> parse_args(int argc, char** argv) {
  Args args;
  if (argc < 2) return std::nullopt;
  args.command = argv[1];
  for (int i = 2; i < argc; ++i) {
    const std::string token = argv[i];
    if (token.rfind("--", 0) == 0 || token == "-h") {
      if (kBooleanFlags.count(token)) {
        args.flags[token] = "1";
        continue;
      }
      if (i + 1 >= argc) {
        std::cerr << "missing value for " << token << "\n";
        return std::nullopt;
      }
      args.flags[token] = argv[++i];
    } else {
      args.positional.push_back(token);
    }
  }
  return args;
}

int cap_from(const Args& args) {
  if (args.has("--cap")) return std::stoi(args.get("--cap"));
  if (const char* env = std::getenv("WEYLRACK_CAP")) return std::stoi(env);
  return kDefaultEnumCap;
}

GroupKind kind_from(const Args& args, int n) {
  const std::string kind = args.get("--kind");
  if (kind == "B") return kind_b(n);
  if (kind == "D") return kind_d(n);
  throw Error("--kind must be B or D");
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << body;
}

void maybe_write_report(const Args& args, const Report& report) {
  if (args.has("--json")) write_file(args.get("--json"), report_json(report));
}

Report single_item_report(const GroupKind& k, ReportItem item) {
  Report r;
  r.kinds = std::string(1, k.letter());
  r.n_min = k.n;
  r.n_max = k.n;
  r.items.push_back(std::move(item));
  return r;
}

int cmd_class_info(const Args& args) {
  if (args.positional.size() != 1) {
    std::cerr << "class-info needs exactly one element\n";
    return kExitUsage;
  }
  const SignedElem x = parse_element(args.positional[0]);
  const GroupKind k = kind_from(args, x.size());
  if (!k.contains(x)) {
    std::cerr << "element " << print_element(x) << " is not in W(" << k.letter() << k.n
              << ")" << (k.family == GroupKind::Family::D ? " (odd sign parity)" : "") << "\n";
    return kExitFail;
  }
  const int cap = cap_from(args);
  const ConjClass c = class_of(x, k, cap);
  const auto centr = centralizer(x, k, cap);

  std::string split_tag;
  if (k.family == GroupKind::Family::D && c.type().all_even_positive()) {
    SignVec flip = sign_zero(k.n);
    flip.bits = 1;
    const SignedElem peer = conjugate(make_elem(flip, perm_identity(k.n)), x);
    if (!c.contains(peer)) {
      const ConjClass other = class_of(peer, k, cap);
      split_tag = canonical_key(c.rep) < canonical_key(other.rep) ? "1" : "2";
    }
  }

  std::cout << "element:          " << print_element(x) << "\n";
  std::cout << "group:            W(" << k.letter() << k.n << ")\n";
  if (k.small_rank_warning()) {
    std::cout << "warning:          W(D_n) with n <= 3 is degenerate\n";
  }
  std::cout << "signed type:      " << c.type().to_string() << "\n";
  std::cout << "class size:       " << c.size() << "\n";
  std::cout << "class rep:        " << print_element(c.rep) << "\n";
  std::cout << "centralizer size: " << centr.size() << "\n";
  std::cout << "split tag:        " << (split_tag.empty() ? "-" : split_tag) << "\n";

  nlohmann::ordered_json details;
  details["element"] = print_element(x);
  details["signed_cycle_type"] = c.type().to_string();
  details["class_size"] = c.size();
  details["class_rep"] = print_element(c.rep);
  details["centralizer_size"] = centr.size();
  details["split_tag"] = split_tag;
  if (k.small_rank_warning()) details["warning"] = "degenerate W(D_n), n <= 3";
  ReportItem item{"class-info", "plumbing", "pass", details.dump(), 0.0};
  maybe_write_report(args, single_item_report(k, std::move(item)));
  return kExitPass;
}

int cmd_sq(const Args& args) {
  if (args.positional.size() != 2) {
    std::cerr << "sq needs exactly two elements\n";
    return kExitUsage;
  }
  const SignedElem x = parse_element(args.positional[0]);
  const SignedElem y = parse_element(args.positional[1]);
  const SignedElem value = sq(x, y);
  const bool fixed = value == y;
  std::cout << "sq:          " << print_element(value) << "\n";
  std::cout << "fixed-point: " << (fixed ? "yes" : "no") << "\n";
  bool ok = true;
  if (args.has("--closed-form")) {
    const SignedElem closed = sq_closed_form(x, y);
    std::cout << "closed-form: " << print_element(closed) << "\n";
    ok = closed == value;
    std::cout << "agreement:   " << (ok ? "yes" : "NO") << "\n";
  }
  if (args.has("--json")) {
    nlohmann::ordered_json details;
    details["x"] = print_element(x);
    details["y"] = print_element(y);
    details["sq"] = print_element(value);
    details["fixed_point"] = fixed;
    ReportItem item{"sq", "plumbing", ok ? "pass" : "fail", details.dump(), 0.0};
    Report r;
    r.kinds = "";
    r.n_min = r.n_max = x.size();
    r.items.push_back(std::move(item));
    write_file(args.get("--json"), report_json(r));
  }
  return ok ? kExitPass : kExitFail;
}

int cmd_search(const Args& args) {
  if (args.positional.size() != 1) {
    std::cerr << "search needs exactly one element\n";
    return kExitUsage;
  }
  const SignedElem x = parse_element(args.positional[0]);
  const GroupKind k = kind_from(args, x.size());
  if (!k.contains(x)) {
    std::cerr << "element is not in W(" << k.letter() << k.n << ")\n";
    return kExitFail;
  }
  const int cap = cap_from(args);
  const ConjClass c = class_of(x, k, cap);
  SearchOutcome outcome;
  try {
    outcome = search_type_d(c, kDefaultSearchBound, cap);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitFail;
  }
  if (!outcome.witness) {
    std::cout << "none found"
              << (outcome.exhaustive ? " (exhaustive pair scan: the class rack is not of type D)" : "")
              << "\n";
    return kExitFail;
  }
  TypeDVerdict verdict = check_type_d(*outcome.witness, conj_rack(c));
  if (args.has("--recheck")) {
    verdict = check_type_d(*outcome.witness, cap);  // independent rebuild
  }
  std::cout << witness_json(*outcome.witness, verdict) << "\n";
  if (args.has("--json")) {
    write_file(args.get("--json"), witness_json(*outcome.witness, verdict));
  }
  return verdict.ok() ? kExitPass : kExitFail;
}

int cmd_classes(const Args& args) {
  if (!args.has("--n")) {
    std::cerr << "classes needs --n\n";
    return kExitUsage;
  }
  const int n = std::stoi(args.get("--n"));
  const GroupKind k = kind_from(args, n);
  const ClassList list = all_classes(k, cap_from(args));
  const std::string json = class_list_json(list);
  std::cout << json << "\n";
  if (args.has("--json")) write_file(args.get("--json"), json);
  return kExitPass;
}

int cmd_verify_paper(const Args& args) {
  VerifyOptions options;
  options.cap = cap_from(args);
  if (args.has("--parallel")) options.parallel = std::stoi(args.get("--parallel"));
  const std::string kinds = args.get("--kinds", "BD");
  options.kind_b = kinds.find('B') != std::string::npos;
  options.kind_d = kinds.find('D') != std::string::npos;
  if (!options.kind_b && !options.kind_d) {
    std::cerr << "--kinds must mention B or D\n";
    return kExitUsage;
  }
  if (args.has("--n")) {
    const std::string range = args.get("--n");
    const auto dots = range.find("..");
    if (dots == std::string::npos) {
      options.n_min = options.n_max = std::stoi(range);
    } else {
      options.n_min = std::stoi(range.substr(0, dots));
      options.n_max = std::stoi(range.substr(dots + 2));
    }
  }

  const Report report = run_paper_verification(options);
  for (const auto& item : report.items) {
    std::cout << (item.status == "pass" ? "PASS" : (item.status == "skip" ? "SKIP" : "FAIL"))
              << "  " << item.id << "  [" << item.citation << "]  " << item.details << "\n";
  }
  std::cout << "summary: " << report.count("pass") << " pass, " << report.count("fail")
            << " fail, " << report.count("skip") << " skip\n";
  if (args.has("--json")) write_file(args.get("--json"), report_json(report));
  return report.all_pass() ? kExitPass : kExitFail;
}

int cmd_braiding_check(const Args& args) {
  if (args.positional.size() != 1) {
    std::cerr << "braiding-check needs exactly one element\n";
    return kExitUsage;
  }
  const SignedElem x = parse_element(args.positional[0]);
  const GroupKind k = kind_from(args, x.size());
  if (!k.contains(x)) {
    std::cerr << "element is not in W(" << k.letter() << k.n << ")\n";
    return kExitFail;
  }
  const int cap = cap_from(args);
  const ConjClass c = class_of(x, k, cap);
  const FiniteRack rack = conj_rack(c);

  bool all_ok = true;
  std::optional<BraidingMatrix> last;
  Report report;
  report.kinds = std::string(1, k.letter());
  report.n_min = report.n_max = k.n;

  std::vector<RootScalar> constants;
  const std::string q = args.get("--q");
  if (q.empty() || q == "1" || q == "+1") constants.push_back(RootScalar::one());
  if (q.empty() || q == "-1") constants.push_back(RootScalar::minus_one());
  if (constants.empty()) {
    std::cerr << "--q must be 1 or -1\n";
    return kExitUsage;
  }
  for (const auto& value : constants) {
    const BraidingMatrix m = rack_braiding(rack, Cocycle::constant(rack.size(), value));
    const bool ok = m.invertible() && check_braid_equation(m);
    all_ok = all_ok && ok;
    const std::string name = std::string("rack-braiding.q=") + (value.is_one() ? "+1" : "-1");
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "  dim " << m.dim << "^2\n";
    report.items.push_back({name, "plumbing", ok ? "pass" : "fail",
                            "class " + print_element(c.rep), 0.0});
    last = m;
  }

  if (args.has("--yd")) {
    const auto centr = centralizer(c.rep, k, cap);
    const auto characters = z2_characters(centr);
    for (std::size_t idx = 0; idx < characters.size(); ++idx) {
      const BraidingMatrix m = yd_braiding(c, characters[idx]);
      bool ok = m.invertible() && check_braid_equation(m);
      std::string note = "class " + print_element(c.rep);
      if (characters[idx].is_trivial()) {
        const BraidingMatrix plain =
            rack_braiding(rack, Cocycle::constant(rack.size(), RootScalar::one()));
        ok = ok && m.equals(plain);
        note += "; trivial character matches q=1 rack braiding";
      }
      all_ok = all_ok && ok;
      const std::string name = "yd-braiding.chi" + std::to_string(idx);
      std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "  dim " << m.dim << "^2\n";
      report.items.push_back({name, "plumbing", ok ? "pass" : "fail", note, 0.0});
      last = m;
    }
  }

  if (args.has("--export") && last) {
    write_file(args.get("--export"), braiding_coordinate_list(*last));
  }
  if (args.has("--json")) write_file(args.get("--json"), report_json(report));
  return all_ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  const auto args = parse_args(argc, argv);
  if (!args || args->command == "help" || args->has("--help") || args->has("-h")) {
    print_usage();
    return args ? kExitPass : kExitUsage;
  }
  try {
    if (args->command == "class-info") return cmd_class_info(*args);
    if (args->command == "sq") return cmd_sq(*args);
    if (args->command == "search") return cmd_search(*args);
    if (args->command == "classes") return cmd_classes(*args);
    if (args->command == "verify-paper") return cmd_verify_paper(*args);
    if (args->command == "braiding-check") return cmd_braiding_check(*args);
    std::cerr << "unknown command: " << args->command << "\n";
    print_usage();
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
