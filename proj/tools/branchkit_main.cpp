#include <CLI11.hpp>
#include <json.hpp>

#include <branchkit/verify.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace
{
  using json = nlohmann::ordered_json;
  using namespace branchkit;

  struct UsageError : std::runtime_error
  {
    using std::runtime_error::runtime_error;
  };

  /// Options shared by the subcommands; every flag mirrors a config key of
  /// the same name (without the leading dashes).
  struct Common
  {
    std::string config;
    std::string family = "gl";
    int n = 0;
    std::string lambda;
    std::string indexing = "signed";
    std::string output;
    long ambient_limit = 200000;
    long lambda_guard = 8;
    int threads = 0;
  };

  void add_common(CLI::App * sub, Common & c)
  {
    sub->add_option("--config", c.config, "JSON config file; flags override its keys");
    sub->add_option("--family", c.family, "algebra family: gl or sp");
    sub->add_option("--n", c.n, "rank parameter n");
    sub->add_option("--lambda", c.lambda, "highest weight, comma separated");
    sub->add_option("--indexing", c.indexing, "sp index convention: signed or one-based");
    sub->add_option("--output", c.output, "output path for the JSON artifact (default stdout)");
    sub->add_option("--ambient-limit", c.ambient_limit, "scale guard: ambient dimension bound");
    sub->add_option("--lambda-guard", c.lambda_guard, "scale guard: entry bound on lambda");
    sub->add_option("--threads", c.threads, "worker thread bound (results are independent of it)");
  }

  /// Fill every option the command line left untouched from the config file.
  void merge_config(CLI::App * sub, const std::string & path)
  {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw UsageError("config: cannot open " + path);
    json conf;
    try {
      conf = json::parse(in);
    } catch (const json::exception & e) {
      throw UsageError(std::string("config: ") + e.what());
    }
    if (!conf.is_object()) throw UsageError("config: top level must be an object");
    for (const auto & [key, value] : conf.items()) {
      CLI::Option * opt = sub->get_option_no_throw("--" + key);
      if (opt == nullptr) throw UsageError("config: unknown key " + key);
      if (opt->count() > 0) continue;
      if (value.is_array()) {
        std::string joined;
        for (const auto & item : value) {
          if (!joined.empty()) joined += ",";
          joined += item.dump();
        }
        opt->add_result(joined);
      } else if (value.is_string()) {
        opt->add_result(value.get<std::string>());
      } else {
        opt->add_result(value.dump());
      }
      opt->run_callback();
    }
  }

  std::vector<long> parse_lambda(const std::string & s)
  {
    if (s.empty()) throw UsageError("missing --lambda");
    std::vector<long> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t next = s.find(',', pos);
      std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      try {
        std::size_t used = 0;
        out.push_back(std::stol(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception &) {
        throw UsageError("invalid --lambda entry: " + tok);
      }
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    return out;
  }

  AlgebraSpec make_spec(const Common & c)
  {
    AlgebraSpec spec;
    if (c.family == "gl") spec.family = Family::GL;
    else if (c.family == "sp") spec.family = Family::SP;
    else throw UsageError("unknown --family: " + c.family);
    if (c.n <= 0) throw UsageError("missing or invalid --n");
    spec.n = c.n;
    if (c.indexing == "signed") spec.indexing = SpIndexing::SIGNED;
    else if (c.indexing == "one-based") spec.indexing = SpIndexing::ONE_BASED;
    else throw UsageError("unknown --indexing: " + c.indexing);
    return spec;
  }

  void check_scale_guard(const Common & c, const std::vector<long> & lam)
  {
    for (long x : lam)
      if (std::labs(x) > c.lambda_guard)
        throw UsageError("scale guard: |lambda_i| exceeds " + std::to_string(c.lambda_guard) +
                         " (raise --lambda-guard to proceed)");
  }

  void check_threads(const Common & c)
  {
    if (c.threads < 0) throw UsageError("--threads must be positive");
  }

  RealizeOptions realize_options(const Common & c)
  {
    RealizeOptions opts;
    opts.ambient_limit = c.ambient_limit;
    opts.use_cache = true; // only effective when BRANCHKIT_CACHE is set
    return opts;
  }

  void write_artifact(const json & doc, const std::string & path)
  {
    std::string text = doc.dump(2) + "\n";
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open output path " + path);
    out << text;
  }

  json header(const char * command, const Common & c, const std::vector<long> & lam)
  {
    json doc;
    doc["schema"] = "v1";
    doc["command"] = command;
    doc["family"] = c.family;
    doc["n"] = c.n;
    if (c.family == "sp") doc["indexing"] = c.indexing;
    doc["lambda"] = lam;
    return doc;
  }

  int cmd_patterns(const Common & c)
  {
    std::vector<long> lam = parse_lambda(c.lambda);
    AlgebraSpec spec = make_spec(c);
    if (!dominant(spec, lam)) throw UsageError("--lambda is not dominant for this family");
    json doc = header("patterns", c, lam);
    json list = json::array();
    if (spec.family == Family::GL) {
      for (const GTPattern & p : enumerate_gt_patterns(lam)) {
        json item;
        item["rows"] = p.rows;
        item["weight"] = pattern_weight(p);
        list.push_back(std::move(item));
      }
    } else {
      if (spec.indexing != SpIndexing::SIGNED)
        throw UsageError("patterns: sp patterns use the signed convention");
      for (const TypeCPattern & p : enumerate_c_patterns(lam)) {
        json item;
        item["rows"] = p.rows;
        item["primed"] = p.primed;
        item["weight"] = pattern_weight(p);
        list.push_back(std::move(item));
      }
    }
    doc["count"] = list.size();
    doc["patterns"] = std::move(list);
    write_artifact(doc, c.output);
    return 0;
  }

  OrderId parse_order(const std::string & s)
  {
    if (s == "rlex-gt") return OrderId::RLEX_GT;
    if (s == "middle-rlex") return OrderId::MIDDLE_RLEX;
    if (s == "weight-first") return OrderId::WEIGHT_FIRST;
    if (s == "degree-lex") return OrderId::DEGREE_LEX;
    if (s == "ropp-lex") return OrderId::ROPP_LEX;
    throw UsageError("unknown --order: " + s);
  }

  int cmd_gamma(const Common & c, const std::string & order_name)
  {
    std::vector<long> lam = parse_lambda(c.lambda);
    check_scale_guard(c, lam);
    AlgebraSpec spec = make_spec(c);
    if (!dominant(spec, lam)) throw UsageError("--lambda is not dominant for this family");
    OrderId id = parse_order(order_name);
    AlgebraData alg = build_algebra(spec);

    OrderSpec ord;
    Subalgebra sub;
    bool restricted = true;
    try {
      switch (id) {
        case OrderId::RLEX_GT:
          ord = make_restricted_order(alg, id);
          sub = build_subalgebra(alg, chain_kept_indices(spec, spec.n - 1));
          break;
        case OrderId::MIDDLE_RLEX: {
          ord = make_order(alg, id);
          std::set<int> kept;
          for (int k = 2; k <= spec.n - 1; ++k) kept.insert(k);
          sub = build_subalgebra(alg, kept);
          break;
        }
        case OrderId::DEGREE_LEX:
        case OrderId::WEIGHT_FIRST:
          ord = make_order(alg, id);
          sub = build_subalgebra(alg, chain_kept_indices(spec, spec.n - 1));
          break;
        case OrderId::ROPP_LEX:
          ord = make_order(alg, id);
          restricted = false;
          break;
      }
    } catch (const std::invalid_argument & e) {
      throw UsageError(std::string("--order incompatible with the algebra: ") + e.what());
    }

    RealizedModule mod = realize_irrep(alg, lam, realize_options(c));
    std::vector<Expo> ess = restricted ? essential_monomials(alg, mod, ord, true, &sub)
                                       : essential_monomials(alg, mod, ord, false);

    json doc = header("gamma", c, lam);
    doc["order"] = order_name;
    doc["restricted"] = restricted;
    json roots = json::array();
    for (int r : ord.roots) roots.push_back(element_label(alg, r));
    doc["roots"] = std::move(roots);
    json list = json::array();
    for (std::size_t k = 0; k < ess.size(); ++k) {
      const Expo & a = ess[k];
      std::vector<long> shift(static_cast<std::size_t>(spec.n), 0);
      long degree = 0;
      for (std::size_t p = 0; p < a.size(); ++p) {
        degree += a[p];
        std::vector<long> w = detail::element_weight_shift(alg, ord.roots[p]);
        for (std::size_t t = 0; t < shift.size(); ++t) shift[t] += a[p] * w[t];
      }
      json item;
      item["rank"] = k;
      item["exponents"] = a;
      item["degree"] = degree;
      item["weight_shift"] = shift;
      list.push_back(std::move(item));
    }
    doc["count"] = list.size();
    doc["monomials"] = std::move(list);
    write_artifact(doc, c.output);
    return 0;
  }

  BasisFamilyId parse_basis(const std::string & s)
  {
    if (s == "pi") return BasisFamilyId::PI;
    if (s == "xi-gl") return BasisFamilyId::XI_GL;
    if (s == "littelmann") return BasisFamilyId::LITTELMANN;
    if (s == "theta") return BasisFamilyId::THETA;
    if (s == "eta") return BasisFamilyId::ETA;
    if (s == "xi-sp") return BasisFamilyId::XI_SP;
    if (s == "zeta") return BasisFamilyId::ZETA;
    throw UsageError("unknown basis family: " + s);
  }

  json family_json(const BasisFamily & fam, const std::string & name)
  {
    json doc;
    doc["basis"] = name;
    doc["scheme"] = fam.scheme == PatternOrder::GL_LEX ? "gl-lex" : "sp-rowseq";
    doc["dimension"] = fam.vectors.size();
    json list = json::array();
    for (std::size_t j = 0; j < fam.vectors.size(); ++j) {
      json item;
      item["order_key"] = fam.order_keys[j];
      json coords = json::array();
      for (const auto & [i, val] : fam.vectors[j].entries) coords.push_back({i, rat_str(val)});
      item["coordinates"] = std::move(coords);
      list.push_back(std::move(item));
    }
    doc["vectors"] = std::move(list);
    return doc;
  }

  BasisFamily make_family(const AlgebraData & alg, const RealizedModule & mod, const Common & c,
                          const std::string & name)
  {
    BasisFamilyId id = parse_basis(name);
    if (id == BasisFamilyId::ZETA) {
      if (alg.spec.family != Family::SP || alg.spec.indexing != SpIndexing::SIGNED)
        throw UsageError("zeta: needs the signed sp convention");
      return build_family(build_zeta_rep(alg, mod.lambda));
    }
    return build_family(alg, mod, id);
  }

  int cmd_basis(const Common & c, const std::string & basis_name)
  {
    std::vector<long> lam = parse_lambda(c.lambda);
    check_scale_guard(c, lam);
    AlgebraSpec spec = make_spec(c);
    if (!dominant(spec, lam)) throw UsageError("--lambda is not dominant for this family");
    AlgebraData alg = build_algebra(spec);
    RealizedModule mod = realize_irrep(alg, lam, realize_options(c));
    BasisFamily fam;
    try {
      fam = make_family(alg, mod, c, basis_name);
    } catch (const std::invalid_argument & e) {
      throw UsageError(std::string("basis: ") + e.what());
    }
    json doc = header("basis", c, lam);
    doc.update(family_json(fam, basis_name));
    write_artifact(doc, c.output);
    return 0;
  }

  int cmd_transition(const Common & c, const std::string & source_name, const std::string & target_name)
  {
    std::vector<long> lam = parse_lambda(c.lambda);
    check_scale_guard(c, lam);
    AlgebraSpec spec = make_spec(c);
    if (!dominant(spec, lam)) throw UsageError("--lambda is not dominant for this family");
    if (source_name == "zeta" || target_name == "zeta")
      throw UsageError("transition: zeta is a coordinate family; pick module-valued families");
    AlgebraData alg = build_algebra(spec);
    RealizedModule mod = realize_irrep(alg, lam, realize_options(c));
    TransitionReport rep;
    try {
      rep = transition(make_family(alg, mod, c, source_name), make_family(alg, mod, c, target_name));
    } catch (const std::invalid_argument & e) {
      throw UsageError(std::string("transition: ") + e.what());
    }

    json doc = header("transition", c, lam);
    doc["source"] = source_name;
    doc["target"] = target_name;
    doc["scheme"] = rep.scheme == PatternOrder::GL_LEX ? "gl-lex" : "sp-rowseq";
    doc["triangular"] = rep.triangular;
    doc["diagonal_nonzero"] = rep.diagonal_nonzero;
    json viols = json::array();
    for (const auto & [j, i] : rep.violations) viols.push_back({j, i});
    doc["violations"] = std::move(viols);
    json matrix;
    matrix["size"] = rep.matrix.rows;
    json entries = json::array();
    for (int col = 0; col < rep.matrix.cols; ++col)
      for (const auto & [row, val] : rep.matrix.columns[static_cast<std::size_t>(col)])
        entries.push_back({row, col, rat_str(val)});
    matrix["entries"] = std::move(entries);
    doc["matrix"] = std::move(matrix);
    write_artifact(doc, c.output);
    return 0;
  }

  int cmd_verify(const Common & c, const std::string & suite_name, long lambda_max)
  {
    std::vector<std::string> names;
    if (suite_name == "all") {
      names = suite_names();
    } else {
      auto all = suite_names();
      if (std::find(all.begin(), all.end(), suite_name) == all.end())
        throw UsageError("unknown --suite: " + suite_name);
      names.push_back(suite_name);
    }
    SuiteOptions opt;
    opt.n = c.n;
    opt.lambda_max = lambda_max;

    json doc;
    doc["schema"] = "v1";
    doc["command"] = "verify";
    doc["suite"] = suite_name;
    if (opt.n > 0) doc["n"] = opt.n;
    if (opt.lambda_max >= 0) doc["lambda_max"] = opt.lambda_max;
    bool all_pass = true;
    json list = json::array();
    for (const std::string & name : names) {
      SuiteResult res = run_suite(name, opt);
      all_pass = all_pass && res.pass;
      json item;
      item["name"] = res.name;
      item["pass"] = res.pass;
      item["checks"] = res.checks;
      item["detail"] = res.detail;
      list.push_back(std::move(item));
    }
    doc["suites"] = std::move(list);
    doc["pass"] = all_pass;
    write_artifact(doc, c.output);
    return all_pass ? 0 : 2;
  }

  int cmd_export_algebra(const Common & c)
  {
    AlgebraSpec spec = make_spec(c);
    AlgebraData alg = build_algebra(spec);
    json doc;
    doc["schema"] = "v1";
    doc["command"] = "export-algebra";
    doc["family"] = c.family;
    doc["n"] = c.n;
    if (c.family == "sp") doc["indexing"] = c.indexing;
    doc["dimension"] = alg.dim();

    json elements = json::array();
    std::set<int> raising(alg.raising.begin(), alg.raising.end());
    std::set<int> cartan(alg.cartan.begin(), alg.cartan.end());
    for (int idx = 0; idx < alg.dim(); ++idx) {
      json item;
      item["index"] = idx;
      item["label"] = element_label(alg, idx);
      item["i"] = alg.basis[static_cast<std::size_t>(idx)].i;
      item["j"] = alg.basis[static_cast<std::size_t>(idx)].j;
      item["kind"] = cartan.count(idx) ? "cartan" : raising.count(idx) ? "raising" : "lowering";
      json w = json::array();
      for (const Rat & q : alg.weights[static_cast<std::size_t>(idx)]) w.push_back(rat_str(q));
      item["weight"] = std::move(w);
      elements.push_back(std::move(item));
    }
    doc["elements"] = std::move(elements);

    json brackets = json::array();
    for (int a = 0; a < alg.dim(); ++a)
      for (int b = a + 1; b < alg.dim(); ++b) {
        const LinComb & lc = bracket(alg, a, b);
        if (lc.empty()) continue;
        json item;
        item["a"] = a;
        item["b"] = b;
        json terms = json::array();
        for (const auto & [idx, coef] : lc) terms.push_back({idx, rat_str(coef)});
        item["terms"] = std::move(terms);
        brackets.push_back(std::move(item));
      }
    doc["brackets"] = std::move(brackets);
    write_artifact(doc, c.output);
    return 0;
  }
} // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"branchkit: exact bases and branching data for gl and sp modules"};
  app.require_subcommand(1);

  Common c_patterns, c_gamma, c_basis, c_transition, c_verify, c_export;
  std::string order_name, basis_name = "pi", source_name, target_name, suite_name = "all";
  long lambda_max = -1;

  CLI::App * patterns = app.add_subcommand("patterns", "enumerate the patterns indexing a basis");
  add_common(patterns, c_patterns);

  CLI::App * gamma = app.add_subcommand("gamma", "compute the essential/branching monomials");
  add_common(gamma, c_gamma);
  gamma->add_option("--order", order_name, "monomial order")->required();

  CLI::App * basis = app.add_subcommand("basis", "build one basis family of a module");
  add_common(basis, c_basis);
  basis->add_option("--basis", basis_name, "family: pi, xi-gl, littelmann, theta, eta, xi-sp, zeta");

  CLI::App * transition = app.add_subcommand("transition", "change of basis between two families");
  add_common(transition, c_transition);
  transition->add_option("--source", source_name, "source family")->required();
  transition->add_option("--target", target_name, "target family")->required();

  CLI::App * verify = app.add_subcommand("verify", "run the certification suites");
  add_common(verify, c_verify);
  verify->add_option("--suite", suite_name, "suite name or 'all'");
  verify->add_option("--lambda-max", lambda_max, "restrict the suite scope to small weights");

  CLI::App * export_algebra = app.add_subcommand("export-algebra", "dump the structure constants");
  add_common(export_algebra, c_export);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help
    app.exit(e);
    return 1;
  }

  try {
    if (patterns->parsed()) {
      merge_config(patterns, c_patterns.config);
      check_threads(c_patterns);
      return cmd_patterns(c_patterns);
    }
    if (gamma->parsed()) {
      merge_config(gamma, c_gamma.config);
      check_threads(c_gamma);
      return cmd_gamma(c_gamma, order_name);
    }
    if (basis->parsed()) {
      merge_config(basis, c_basis.config);
      check_threads(c_basis);
      return cmd_basis(c_basis, basis_name);
    }
    if (transition->parsed()) {
      merge_config(transition, c_transition.config);
      check_threads(c_transition);
      return cmd_transition(c_transition, source_name, target_name);
    }
    if (verify->parsed()) {
      merge_config(verify, c_verify.config);
      check_threads(c_verify);
      return cmd_verify(c_verify, suite_name, lambda_max);
    }
    if (export_algebra->parsed()) {
      merge_config(export_algebra, c_export.config);
      check_threads(c_export);
      return cmd_export_algebra(c_export);
    }
  } catch (const UsageError & e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception & e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
