#include "activity/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "activity/codec.hpp"
#include "activity/errors.hpp"
#include "activity/nbc.hpp"
#include "activity/serialize.hpp"
#include "activity/verify.hpp"

namespace activity::cli {

namespace {

struct Interval {
  long a = 0;
  long b = 0;
};

Interval parse_interval(const std::string& text) {
  const auto colon = text.find(':', text.empty() ? 0 : 1);
  if (colon == std::string::npos) throw DomainError("interval must look like a:b, got '" + text + "'");
  Interval iv;
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string sa = text.substr(0, colon), sb = text.substr(colon + 1);
    iv.a = std::stol(sa, &used_a);
    iv.b = std::stol(sb, &used_b);
    if (used_a != sa.size() || used_b != sb.size()) throw DomainError("");
  } catch (const std::logic_error&) {
    throw DomainError("interval must look like a:b, got '" + text + "'");
  }
  if (iv.a > iv.b) throw DomainError("interval " + text + " is empty");
  return iv;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(path + ": " + e.what());
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

struct NbcArgs {
  int n = 0;
  std::string interval;
  std::string order = "lex";
};

int run_nbc(const NbcArgs& a, std::ostream& out) {
  const Interval iv = parse_interval(a.interval);
  GainGraph g = complete_interval(a.n, iv.a, iv.b);
  if (a.order != "lex") g = apply_edge_order(g, read_json_file(a.order));
  const auto sets = enumerate_nbc_sets(g);
  const auto bases = nbc_bases(g);
  const ActivityVector vec = nbc_activity_vector(g);
  const IntPolynomial alpha = activity_poly_from_vector(vec);
  const auto chi = characteristic_poly(g);
  emit(out, Json{{"n", a.n},
                 {"interval", Json::array({iv.a, iv.b})},
                 {"order", a.order},
                 {"nbc_count", std::to_string(sets.size())},
                 {"basis_count", std::to_string(bases.size())},
                 {"activity_vector", to_json(vec)},
                 {"alpha", to_json(alpha)},
                 {"chi_full", to_json(chi.full)},
                 {"chi_reduced", to_json(chi.reduced)},
                 {"regions", to_json(alpha.evaluate(2))},
                 {"bounded", to_json(alpha.evaluate(0))}});
  return kExitOk;
}

struct TreesArgs {
  int n = 0;
  int colors = 1;
  std::string mode = "unrestricted";
  int k1 = 1;
  bool forests = false;
  std::optional<std::string> statistic;
  bool list = false;
};

int run_trees(const TreesArgs& a, std::ostream& out) {
  if (a.n < 1) throw DomainError("--n must be at least 1");
  if (a.k1 < 0 || a.k1 > a.colors) throw DomainError("--k1 must lie in 0..colors");
  const ForestClass cls{parse_forest_mode(a.mode), a.k1, a.colors - a.k1};
  Json report{{"n", a.n}, {"colors", a.colors}, {"class", to_string(cls.mode)}, {"k1", cls.k1}, {"k2", cls.k2},
              {"forests", a.forests}};
  const bool spanning = !a.forests;
  Json members = Json::array();
  BigInt count = 0;
  for_each_forest(a.n, a.colors, cls, spanning, [&](const ColoredForest& f) {
    count += 1;
    if (a.list) members.push_back(forest_to_json(f));
  });
  report["count"] = to_json(count);
  if (a.statistic) {
    if (a.forests) throw DomainError("--statistic applies to spanning trees only");
    const TreeStatistic s = parse_tree_statistic(*a.statistic);
    report["statistic"] = to_string(s);
    report["distribution"] = to_json(tree_statistic_vector(a.n, a.colors, cls, s));
  }
  if (a.list) report[a.forests ? "members" : "trees"] = members;
  emit(out, report);
  return kExitOk;
}

struct CodecArgs {
  std::string op;
  int n = 0;
  std::string tree_file;
  std::string word;
};

int run_codec(const CodecArgs& a, std::ostream& out) {
  const bool encode = a.op == "pruefer-encode" || a.op == "blue-encode";
  const Alphabet alphabet = a.op.rfind("pruefer", 0) == 0 ? Alphabet::kPruefer : Alphabet::kBlue;
  if (encode) {
    if (a.tree_file.empty()) throw DomainError(a.op + " needs --tree");
    const ColoredForest t = forest_from_json(read_json_file(a.tree_file));
    if (t.vertex_count() != a.n) throw DomainError("tree has " + std::to_string(t.vertex_count()) + " vertices, --n is " + std::to_string(a.n));
    const CodeWord w = alphabet == Alphabet::kPruefer ? pruefer_encode(t) : blue_encode(t);
    emit(out, Json{{"alphabet", alphabet == Alphabet::kPruefer ? "pruefer" : "blue"}, {"n", a.n}, {"word", w.to_string()}});
  } else {
    if (a.word.empty()) throw DomainError(a.op + " needs --word");
    const CodeWord w = CodeWord::parse(a.word, alphabet, a.n);
    emit(out, forest_to_json(alphabet == Alphabet::kPruefer ? pruefer_decode(w) : blue_decode(w)));
  }
  return kExitOk;
}

int run_covering_verify(const std::string& path, std::ostream& out) {
  const ParsedCovering parsed = covering_from_json(read_json_file(path));
  const CoveringSystem& sys = parsed.system;
  Json report = Json::object();
  const CoveringVerdict cv = verify_covering(sys);
  report["covering"] = cv.ok() ? "ok" : cv.describe();
  const ActivityVector c = cardinality_vector(sys);
  report["cardinality_vector"] = to_json(c);
  const auto from_c = activity_vector_from_cardinality(c, sys.rank());
  report["activity_from_cardinality"] = to_json(from_c.vector);
  report["feasible"] = from_c.feasible;
  bool ok = cv.ok() && from_c.feasible;
  if (cv.ok() && parsed.activity) {
    const ActivityVerdict av = verify_activity(sys, *parsed.activity);
    report["activity"] = av.ok() ? "ok" : av.describe();
    ok = ok && av.ok();
    if (av.ok()) {
      const auto id = check_cardinality_identity(sys, *parsed.activity);
      report["activity_vector"] = to_json(activity_vector(sys, *parsed.activity));
      report["cardinality_identity"] = id.ok;
      ok = ok && id.ok;
    }
  }
  report["verdict"] = ok ? "pass" : "fail";
  emit(out, report);
  return ok ? kExitOk : kExitMismatch;
}

int run_conjecture(int n, const std::string& variant, std::ostream& out) {
  const ConjectureReport rep = conjecture_report(n, parse_conjecture_variant(variant));
  emit(out, Json{{"n", rep.n},
                 {"variant", to_string(rep.variant)},
                 {"dist_consecutive", to_json(rep.dist_consecutive)},
                 {"dist_top", to_json(rep.dist_top)},
                 {"equal", rep.equal}});
  return kExitOk;
}

struct VerifyArgs {
  std::optional<std::string> target;
  std::optional<int> scale;
  std::optional<int> n;
  std::optional<std::string> interval;
  std::string variant = "restricted";
  int orders = 5;
};

VerificationReport run_target(const VerifyArgs& a) {
  const std::string name = canonical_target(*a.target);
  const auto need_n = [&]() {
    if (!a.n) throw DomainError("target " + name + " needs --n");
    return *a.n;
  };
  const auto need_interval = [&]() {
    if (!a.interval) throw DomainError("target " + name + " needs --interval");
    return parse_interval(*a.interval);
  };
  if (name == "covering-example") return verify_covering_example();
  if (name == "pure-counterexample") return verify_pure_counterexample();
  if (name == "codec-golden") return verify_codec_golden();
  if (name == "lbs-example") return verify_lbs_example();
  if (name == "linial") return verify_linial(need_n());
  if (name == "bounded-formula") return verify_bounded_formula(need_n());
  if (name == "shi") return verify_shi(need_n());
  if (name == "braid") return verify_braid(need_n());
  if (name == "codec-roundtrip") return verify_codec_roundtrip(need_n());
  if (name == "partition") return verify_partition(need_n());
  if (name == "lbs-rotation") return verify_lbs_rotation(need_n());
  if (name == "conjecture") return verify_conjecture(need_n(), parse_conjecture_variant(a.variant));
  if (name == "forest-count" || name == "tree-activity" || name == "order-invariance" ||
      name == "activity-identity") {
    const int n = need_n();
    const Interval iv = need_interval();
    if (name == "forest-count") return verify_forest_count(n, iv.a, iv.b);
    if (name == "tree-activity") return verify_tree_activity(n, iv.a, iv.b);
    if (name == "order-invariance") return verify_order_invariance(n, iv.a, iv.b, a.orders);
    return verify_activity_identity(n, iv.a, iv.b);
  }
  throw DomainError("unknown target '" + *a.target + "'");
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.scale.has_value() == a.target.has_value()) throw DomainError("verify needs exactly one of --target or --scale");
  if (a.scale) {
    const SuiteReport suite = verify_suite(*a.scale);
    emit(out, suite.to_json());
    return suite.verdict() == Verdict::kFail ? kExitMismatch : kExitOk;
  }
  const VerificationReport rep = run_target(a);
  emit(out, rep.to_json());
  return rep.verdict() == Verdict::kFail ? kExitMismatch : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact activity, NBC and tree-statistic verification", "activity"};
  app.require_subcommand(1);

  NbcArgs nbc;
  auto* nbc_cmd = app.add_subcommand("nbc", "NBC sets, activities and polynomials of K_n^[a,b]");
  nbc_cmd->add_option("--n", nbc.n, "vertex count")->required();
  nbc_cmd->add_option("--interval", nbc.interval, "gain interval a:b (use --interval=-1:2 for negative a)")->required();
  nbc_cmd->add_option("--order", nbc.order, "lex, or a JSON file listing [tail, head, gain] edges in order");

  TreesArgs trees;
  auto* trees_cmd = app.add_subcommand("trees", "count colored trees or forests of a class");
  trees_cmd->add_option("--n", trees.n, "vertex count")->required();
  trees_cmd->add_option("--colors", trees.colors, "total color count");
  trees_cmd->add_option("--class", trees.mode, "unrestricted|decreasing|increasing|non-decreasing|non-increasing");
  trees_cmd->add_option("--k1", trees.k1, "number of checked colors");
  trees_cmd->add_flag("--forests", trees.forests, "count forests instead of spanning trees");
  trees_cmd->add_option("--statistic", trees.statistic, "children-of-n|consecutive|consecutive-smallest-child");
  trees_cmd->add_flag("--list", trees.list, "also list every member");

  CodecArgs codec;
  auto* codec_cmd = app.add_subcommand("codec", "Pruefer and Blue codes of rooted labeled trees");
  codec_cmd->add_option("op", codec.op, "pruefer-encode|pruefer-decode|blue-encode|blue-decode")
      ->required()
      ->check(CLI::IsMember({"pruefer-encode", "pruefer-decode", "blue-encode", "blue-decode"}));
  codec_cmd->add_option("--n", codec.n, "vertex count")->required();
  auto* tree_opt = codec_cmd->add_option("--tree", codec.tree_file, "tree JSON file");
  auto* word_opt = codec_cmd->add_option("--word", codec.word, "comma separated word, e.g. b,5,b,2,4,b");
  tree_opt->excludes(word_opt);

  std::string covering_file;
  auto* covering_cmd = app.add_subcommand("covering", "covering systems");
  covering_cmd->require_subcommand(1);
  auto* covering_verify = covering_cmd->add_subcommand("verify", "check a covering system JSON file");
  covering_verify->add_option("file", covering_file, "covering system JSON")->required();

  int conj_n = 0;
  std::string conj_variant;
  auto* conj_cmd = app.add_subcommand("conjecture", "distributions behind the LBS conjecture");
  conj_cmd->add_option("--n", conj_n, "vertex count")->required();
  conj_cmd->add_option("--variant", conj_variant, "literal|restricted")
      ->required()
      ->check(CLI::IsMember({"literal", "restricted"}));

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run one verification target or the whole suite");
  verify_cmd->add_option("--target", verify.target, "target name");
  verify_cmd->add_option("--scale", verify.scale, "run the suite up to this n");
  verify_cmd->add_option("--n", verify.n, "vertex count");
  verify_cmd->add_option("--interval", verify.interval, "gain interval a:b");
  verify_cmd->add_option("--variant", verify.variant, "literal|restricted (conjecture target)");
  verify_cmd->add_option("--orders", verify.orders, "random edge orders (order-invariance target)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*nbc_cmd) return run_nbc(nbc, out);
    if (*trees_cmd) return run_trees(trees, out);
    if (*codec_cmd) return run_codec(codec, out);
    if (*covering_verify) return run_covering_verify(covering_file, out);
    if (*conj_cmd) return run_conjecture(conj_n, conj_variant, out);
    if (*verify_cmd) return run_verify(verify, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace activity::cli
