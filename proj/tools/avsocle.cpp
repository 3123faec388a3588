// Command-line front end: combinatorial invariants and socle reports for
// degenerate principal series of U(m,n), GL(n,C), GL(n,R), GL(n,H).
//
// Exit codes: 0 success (hypothesis-not-met reports are valid answers),
// 2 malformed input, 3 configured enumeration cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "avsocle/report.hpp"
#include "avsocle/selftest.hpp"
#include "avsocle/socle.hpp"

namespace {

using namespace avsocle;

struct Options {
  std::string subcommand;
  std::vector<std::string> positional;
  bool json = false;
  DeltaConvention convention = DeltaConvention::calibrated;
  long long max_size = 6;
  std::size_t max_s = 4;
  std::string out_file;
  std::optional<Permutation> tau;
};

const char* kUsage = R"(usage: avsocle <subcommand> [args] [flags]

subcommands:
  richardson <c>                     Young diagram Y(c) and its orbit dimension
  signed <c> <m> <n>                 signed Young diagrams of shape Y(c), signature (m,n)
  assvar <pair>                      associated-variety diagram and GK dimension of a pair
  normal <m> <n> <c>                 normal pairs over c and their diagrams
  range <pair> <h>                   good / weakly fair / mediocre classification
  decompose <m> <n> <k> <u> <h> <v>  maximal-GK constituents of nI^kappa_{m,n}[u;h;v]
  socle-u <m> <n> <k> <u> <h> <v>    socle of the U(m,n) principal series (integer labels)
  socle-glc <c>                      GL(n,C) canonical-bundle socle
  socle-glr <n> <c>                  GL(n,R) canonical-bundle socle
  socle-glh <n> <c>                  GL(n,H) canonical-bundle socle
  assumption-a <c>                   palindrome / involution condition record
  selftest [--max-size N]            exhaustive invariant suite

input forms: compositions "2,1,2" ("-" for empty), pairs "m=1,0 n=0,1",
rationals "p" or "p/q", rational lists "3/2,-1/2".

flags: --json        emit the JSON report on stdout
       --convention printed|calibrated   (default calibrated)
       --tau [..]    explicit sorting permutation for decompose
       --max-s N     cap on the kappa length for decompose (default 4)
       --max-size N  size bound for selftest (default 6)
       --out FILE    also write the JSON report to FILE
)";

Options parse_args(int argc, char** argv) {
  Options opt;
  if (argc < 2) throw invalid_input("missing subcommand");
  opt.subcommand = argv[1];
  for (int i = 2; i < argc; ++i) {
    std::string tok = argv[i];
    auto next = [&](const char* flag) -> std::string {
      if (i + 1 >= argc) throw invalid_input(std::string(flag) + " needs a value");
      return argv[++i];
    };
    if (tok == "--json") {
      opt.json = true;
    } else if (tok == "--convention") {
      opt.convention = parse_convention(next("--convention"));
    } else if (tok == "--max-size") {
      opt.max_size = detail::parse_ll(next("--max-size"));
    } else if (tok == "--max-s") {
      opt.max_s = static_cast<std::size_t>(detail::parse_ll(next("--max-s")));
    } else if (tok == "--out") {
      opt.out_file = next("--out");
    } else if (tok == "--tau") {
      opt.tau = Permutation::parse(next("--tau"));
    } else if (tok.rfind("--", 0) == 0) {
      throw invalid_input("unknown flag: " + tok);
    } else {
      opt.positional.push_back(std::move(tok));
    }
  }
  return opt;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  if (text.empty() || text == "-") return out;
  for (const auto& part : detail::split(text, ',')) out.push_back(Rat::parse(part));
  return out;
}

std::vector<long long> parse_int_list(const std::string& text) {
  std::vector<long long> out;
  if (text.empty() || text == "-") return out;
  for (const auto& part : detail::split(text, ',')) out.push_back(detail::parse_ll(part));
  return out;
}

const std::string& positional(const Options& opt, std::size_t i) {
  if (i >= opt.positional.size()) throw invalid_input("missing argument; see usage");
  return opt.positional[i];
}

void expect_count(const Options& opt, std::size_t count) {
  if (opt.positional.size() != count)
    throw invalid_input("wrong number of arguments; see usage");
}

// Pair text may arrive as one quoted token or as two tokens "m=.." "n=..";
// trailing arguments after the pair are left to the caller.
SignedPair parse_pair_args(const std::vector<std::string>& args, std::size_t& consumed) {
  std::string joined;
  consumed = 0;
  for (const auto& tok : args) {
    if (tok.rfind("m=", 0) != 0 && tok.rfind("n=", 0) != 0) break;
    if (!joined.empty()) joined += " ";
    joined += tok;
    ++consumed;
  }
  if (consumed == 0) throw invalid_input("expected a pair like m=1,0 n=0,1");
  return SignedPair::parse(joined);
}

struct Output {
  Json json = Json::object();
  std::vector<std::string> lines;
};

void emit(const Options& opt, const Output& out) {
  if (opt.json) {
    std::cout << out.json.dump(2) << "\n";
  } else {
    for (const auto& line : out.lines) std::cout << line << "\n";
  }
  if (!opt.out_file.empty()) {
    std::ofstream file(opt.out_file);
    if (!file) throw invalid_input("cannot open output file " + opt.out_file);
    file << out.json.dump(2) << "\n";
  }
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

void fill_socle_lines(Output& out, const SocleReport& report) {
  out.lines.push_back("group = " + report.group);
  out.lines.push_back("constituents = " +
                      std::to_string(report.constituents.size() + report.labels.size()));
  for (const auto& con : report.constituents)
    out.lines.push_back("  " + con.pair.to_string() + "  h=" + to_string(con.h) +
                        "  diagram=" + con.diagram.to_string());
  for (const auto& label : report.labels) out.lines.push_back("  " + label);
  out.lines.push_back("gk = " + std::to_string(report.gk_dim));
  if (report.verma_embedding) {
    out.lines.push_back("verma source = [" + to_string(report.verma_embedding->source_weight) + "]");
    out.lines.push_back("verma target = [" + to_string(report.verma_embedding->target_weight) + "]");
  }
}

Json socle_json(const SocleReport& report, Json input) {
  Json j = Json::object();
  j["group"] = report.group;
  j["input"] = std::move(input);
  j["status"] = "ok";
  Json body = to_json(report);
  j["constituents"] = body["constituents"];
  j["gk_dim"] = body["gk_dim"];
  if (body.contains("verma_embedding")) j["verma_embedding"] = body["verma_embedding"];
  j["extras"] = body["extras"];
  return j;
}

int run(const Options& opt) {
  Output out;

  if (opt.subcommand == "richardson") {
    expect_count(opt, 1);
    Composition c = Composition::parse(positional(opt, 0));
    YoungDiagram y = young_from_composition(c);
    long long dim = orbit_dimension(y);
    out.lines.push_back("Y = " + y.to_string() + "; dim O = " + std::to_string(dim));
    out.json["c"] = c.parts();
    out.json["young"] = y.to_string();
    out.json["orbit_dimension"] = dim;
  } else if (opt.subcommand == "signed") {
    expect_count(opt, 3);
    Composition c = Composition::parse(positional(opt, 0));
    long long m = detail::parse_ll(positional(opt, 1));
    long long n = detail::parse_ll(positional(opt, 2));
    YoungDiagram y = young_from_composition(c);
    auto list = enumerate_signed(y, m, n);
    out.lines.push_back("Y = " + y.to_string());
    out.lines.push_back("count = " + std::to_string(list.size()));
    for (const auto& t : list) out.lines.push_back(t.to_string());
    out.json["c"] = c.parts();
    out.json["m"] = m;
    out.json["n"] = n;
    out.json["young"] = y.to_string();
    out.json["count"] = list.size();
    Json arr = Json::array();
    for (const auto& t : list) arr.push_back(t.to_string());
    out.json["diagrams"] = std::move(arr);
  } else if (opt.subcommand == "assvar") {
    std::size_t consumed = 0;
    SignedPair pair = parse_pair_args(opt.positional, consumed);
    if (consumed != opt.positional.size()) throw invalid_input("unexpected extra arguments");
    SignedYoungDiagram d = associated_diagram(pair);
    long long gk = gk_dimension(pair);
    bool normal = is_normal(pair);
    out.lines.push_back("diagram = " + d.to_string());
    out.lines.push_back("gk = " + std::to_string(gk));
    out.lines.push_back("normal = " + bool_text(normal));
    out.json["pair"] = to_json(pair);
    out.json["diagram"] = d.to_string();
    out.json["gk_dim"] = gk;
    out.json["normal"] = normal;
  } else if (opt.subcommand == "normal") {
    expect_count(opt, 3);
    long long m = detail::parse_ll(positional(opt, 0));
    long long n = detail::parse_ll(positional(opt, 1));
    Composition c = Composition::parse(positional(opt, 2));
    auto table = normal_pair_diagrams(m, n, c);
    out.lines.push_back("count = " + std::to_string(table.size()));
    for (const auto& pd : table)
      out.lines.push_back("  " + pd.pair.to_string() + "  ->  " + pd.diagram.to_string());
    out.json["m"] = m;
    out.json["n"] = n;
    out.json["c"] = c.parts();
    out.json["count"] = table.size();
    out.json["pairs"] = to_json(table);
  } else if (opt.subcommand == "range") {
    std::size_t consumed = 0;
    SignedPair pair = parse_pair_args(opt.positional, consumed);
    if (consumed + 1 != opt.positional.size()) throw invalid_input("range needs <pair> <h>");
    DFMParam param{pair, parse_rat_list(opt.positional[consumed])};
    RangeFlags flags = range_flags(param);
    RangeLabel label = classify_range(param);
    out.lines.push_back(std::string("label = ") + to_string(label));
    out.lines.push_back("good = " + bool_text(flags.good));
    out.lines.push_back("weakly_fair = " + bool_text(flags.weakly_fair));
    out.lines.push_back("mediocre = " + bool_text(flags.mediocre));
    out.json = to_json(flags, param);
  } else if (opt.subcommand == "decompose") {
    expect_count(opt, 6);
    long long m = detail::parse_ll(positional(opt, 0));
    long long n = detail::parse_ll(positional(opt, 1));
    Composition kappa = Composition::parse(positional(opt, 2));
    DPSParam p(m, n, kappa, parse_rat_list(positional(opt, 3)), Rat::parse(positional(opt, 4)),
               parse_rat_list(positional(opt, 5)));
    MergedData md = merge_parameters(p, opt.convention);
    Permutation tau = opt.tau ? *opt.tau : least_sorting_permutation(md);
    auto cons = top_constituents(p, tau, opt.convention, opt.max_s);
    long long gk = cons.empty() ? 0 : gk_dimension(cons.front().pair);
    out.lines.push_back("tau = " + tau.to_string());
    out.lines.push_back("constituents = " + std::to_string(cons.size()));
    for (const auto& con : cons)
      out.lines.push_back("  " + con.pair.to_string() + "  h=" + to_string(con.h) +
                          "  diagram=" + con.diagram.to_string());
    out.lines.push_back("gk = " + std::to_string(gk));
    out.json["group"] = "U(" + std::to_string(m) + "," + std::to_string(n) + ")";
    Json input = Json::object();
    input["m"] = m;
    input["n"] = n;
    input["kappa"] = kappa.parts();
    input["u"] = to_json(p.u);
    input["h"] = to_json(p.h);
    input["v"] = to_json(p.v);
    out.json["input"] = std::move(input);
    out.json["convention"] = to_string(opt.convention);
    out.json["tau"] = tau.to_string();
    Json arr = Json::array();
    for (const auto& con : cons) arr.push_back(to_json(con));
    out.json["constituents"] = std::move(arr);
    out.json["gk_dim"] = gk;
  } else if (opt.subcommand == "socle-u") {
    expect_count(opt, 6);
    long long m = detail::parse_ll(positional(opt, 0));
    long long n = detail::parse_ll(positional(opt, 1));
    Composition kappa = Composition::parse(positional(opt, 2));
    std::vector<long long> u = parse_int_list(positional(opt, 3));
    long long h = detail::parse_ll(positional(opt, 4));
    std::vector<long long> v = parse_int_list(positional(opt, 5));
    Json input = Json::object();
    input["m"] = m;
    input["n"] = n;
    input["kappa"] = kappa.parts();
    input["u"] = u;
    input["h"] = h;
    input["v"] = v;
    SocleReport report = socle_u(m, n, kappa, u, h, v, opt.convention);
    fill_socle_lines(out, report);
    out.json = socle_json(report, std::move(input));
  } else if (opt.subcommand == "socle-glc") {
    expect_count(opt, 1);
    Composition c = Composition::parse(positional(opt, 0));
    SocleReport report = complex_socle(c);
    const auto& extras = std::get<ComplexExtras>(report.extras);
    out.lines.push_back("group = " + report.group);
    out.lines.push_back("assumption A: " + bool_text(extras.assumption_a));
    if (extras.assumption_a) {
      out.lines.push_back("socle = " + report.labels.front());
      out.lines.push_back("verma: uM_p(-2) -> uM_p(0)");
    } else {
      out.lines.push_back("no socle claim");
    }
    out.lines.push_back("gk = " + std::to_string(report.gk_dim));
    Json input = Json::object();
    input["c"] = c.parts();
    out.json = socle_json(report, std::move(input));
  } else if (opt.subcommand == "socle-glr" || opt.subcommand == "socle-glh") {
    expect_count(opt, 2);
    long long rank = detail::parse_ll(positional(opt, 0));
    Composition c = Composition::parse(positional(opt, 1));
    SocleReport report = opt.subcommand == "socle-glh" ? quaternionic_socle(rank, c)
                                                       : real_gl_socle(rank, c);
    fill_socle_lines(out, report);
    Json input = Json::object();
    input["n"] = rank;
    input["c"] = c.parts();
    out.json = socle_json(report, std::move(input));
  } else if (opt.subcommand == "assumption-a") {
    expect_count(opt, 1);
    Composition c = Composition::parse(positional(opt, 0));
    AssumptionA rec = assumption_a(c);
    out.lines.push_back("palindrome: " + bool_text(rec.palindrome));
    out.lines.push_back("involution: " + bool_text(rec.involution));
    out.lines.push_back("duflo: " + bool_text(rec.duflo));
    out.lines.push_back("assumption A: " + bool_text(rec.assumption_a));
    out.json["c"] = c.parts();
    out.json["palindrome"] = rec.palindrome;
    out.json["involution"] = rec.involution;
    out.json["duflo"] = rec.duflo;
    out.json["assumption_a"] = rec.assumption_a;
  } else if (opt.subcommand == "selftest") {
    expect_count(opt, 0);
    auto results = run_selftest(opt.max_size);
    bool all = true;
    Json arr = Json::array();
    for (const auto& r : results) {
      all = all && r.passed;
      out.lines.push_back((r.passed ? "ok   " : "FAIL ") + r.name +
                          (r.detail.empty() ? "" : ": " + r.detail));
      Json j = Json::object();
      j["name"] = r.name;
      j["passed"] = r.passed;
      if (!r.detail.empty()) j["detail"] = r.detail;
      arr.push_back(std::move(j));
    }
    out.lines.push_back(all ? "selftest: all checks passed" : "selftest: FAILURES");
    out.json["max_size"] = opt.max_size;
    out.json["passed"] = all;
    out.json["checks"] = std::move(arr);
    emit(opt, out);
    return all ? 0 : 1;
  } else {
    std::cerr << kUsage;
    return 2;
  }

  emit(opt, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  try {
    opt = parse_args(argc, argv);
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n" << kUsage;
    return 2;
  }
  try {
    return run(opt);
  } catch (const hypothesis_not_met& e) {
    Output out;
    out.lines.push_back(std::string("hypothesis not met: ") + e.what());
    out.json["status"] = "hypothesis-not-met";
    out.json["reason"] = e.what();
    try {
      emit(opt, out);
    } catch (const std::exception& inner) {
      std::cerr << "error: " << inner.what() << "\n";
      return 2;
    }
    return 0;
  } catch (const limit_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const unsupported_parameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
