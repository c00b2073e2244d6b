#include "falg/cli.hpp"

#include "falg/expr.hpp"
#include "falg/json_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace falg::cli {

namespace {

using Json = nlohmann::json;
namespace fj = falg::json;

struct Common {
  std::string backend = "rat";
  bool as_json = false;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fj::FormatError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw fj::FormatError(path + ": " + e.what());
  }
}

AlgebraFixture load_algebra(const std::string& spec, Backend b) {
  if (spec.rfind("builtin:", 0) == 0) return load_builtin(spec.substr(8), b);
  return fj::algebra_from_json(read_json(spec), b);
}

bool has_tail(const Json& j) { return j.is_object() && j.contains("tail"); }

BasisIndex default_max_index() {
  if (const char* env = std::getenv("FALG_MAX_INDEX")) {
    try {
      auto v = std::stoull(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    throw DomainError(std::string("FALG_MAX_INDEX must be a positive integer, got '") + env + "'");
  }
  return 16;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--backend", c.backend, "Scalar backend")
      ->check(CLI::IsMember({"int", "rat", "f64"}))
      ->capture_default_str();
  sub->add_flag("--json", c.as_json, "Emit JSON");
}

void print_report(const LawReport& r, bool as_json, std::ostream& out) {
  if (as_json) {
    Json laws = Json::array();
    for (const auto& l : r.laws) {
      Json entry = {{"law", l.law}, {"passed", l.passed}, {"cases", l.cases}};
      if (!l.passed) entry["counterexample"] = l.counterexample;
      laws.push_back(entry);
    }
    out << Json{{"algebra", r.algebra}, {"seed", r.seed}, {"trials", r.trials}, {"laws", laws},
                {"passed", r.all_passed()}}
               .dump()
        << '\n';
    return;
  }
  out << "algebra " << r.algebra << " (seed " << r.seed << ", " << r.trials << " trials)\n";
  for (const auto& l : r.laws) {
    out << (l.passed ? "PASS " : "FAIL ") << l.law << " (" << l.cases << " cases)";
    if (!l.passed) out << " counterexample " << l.counterexample;
    out << '\n';
  }
  out << (r.all_passed() ? "all laws hold\n" : "law violated\n");
}

void print_tail_vector(const TailVector& v, bool as_json, std::ostream& out) {
  if (as_json)
    out << fj::to_json(v).dump() << '\n';
  else
    out << v.prefix() << " tail " << v.tail() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free modules and algebras over a countable basis", "falg"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Common common;

  std::string algebra, expr_text;
  std::vector<std::string> binds;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression in an algebra");
  eval_cmd->add_option("--algebra", algebra, "builtin:<name> or JSON path")->required();
  eval_cmd->add_option("--expr", expr_text, "Expression")->required();
  eval_cmd->add_option("--bind", binds, "name=vector.json");
  add_common(eval_cmd, common);

  std::string map_path, vector_path;
  auto* apply_cmd = app.add_subcommand("apply", "Apply a map to a vector");
  apply_cmd->add_option("--map", map_path)->required();
  apply_cmd->add_option("--vector", vector_path)->required();
  add_common(apply_cmd, common);

  std::string outer_path, inner_path;
  auto* compose_cmd = app.add_subcommand("compose", "Compose two maps (outer o inner)");
  compose_cmd->add_option("--outer", outer_path)->required();
  compose_cmd->add_option("--inner", inner_path)->required();
  add_common(compose_cmd, common);

  std::vector<std::string> vector_paths;
  std::string tensor_path, tensor_map_path;
  std::size_t samples = 64;
  std::uint64_t seed = 0;
  auto* tensor_cmd = app.add_subcommand("tensor", "Pure tensor, or the map generated through a tensor");
  tensor_cmd->add_option("--vector", vector_paths, "Vector JSON (repeatable)")->required();
  tensor_cmd->add_option("--algebra", algebra, "Associative algebra for --tensor");
  tensor_cmd->add_option("--tensor", tensor_path, "2-tensor JSON");
  tensor_cmd->add_option("--map", tensor_map_path, "Map JSON");
  tensor_cmd->add_option("--samples", samples, "Associativity spot checks")->capture_default_str();
  tensor_cmd->add_option("--seed", seed)->capture_default_str();
  add_common(tensor_cmd, common);

  std::string norm_vector, norm_map;
  auto* norm_cmd = app.add_subcommand("norm", "l1 norm interval of a vector or map");
  auto* norm_source = norm_cmd->add_option_group("source");
  norm_source->add_option("--vector", norm_vector, "Tail vector JSON");
  norm_source->add_option("--map", norm_map, "Tail map JSON");
  norm_source->require_option(1);
  add_common(norm_cmd, common);

  auto* mul_cmd = app.add_subcommand("mul", "Certified product of two tail vectors");
  mul_cmd->add_option("--algebra", algebra)->required();
  mul_cmd->add_option("--vector", vector_paths)->required()->expected(2);
  add_common(mul_cmd, common);

  std::size_t trials = 100;
  std::optional<BasisIndex> max_index;
  auto* check_cmd = app.add_subcommand("check", "Randomized law check");
  check_cmd->add_option("--algebra", algebra)->required();
  check_cmd->add_option("--trials", trials)->capture_default_str();
  check_cmd->add_option("--seed", seed)->capture_default_str();
  check_cmd->add_option("--max-index", max_index);
  add_common(check_cmd, common);

  std::string functional_path;
  auto* dual_cmd = app.add_subcommand("dual", "Evaluate a dual functional on a vector");
  dual_cmd->add_option("--functional", functional_path)->required();
  dual_cmd->add_option("--vector", vector_path)->required();
  add_common(dual_cmd, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const Backend b = parse_backend(common.backend);

    if (eval_cmd->parsed()) {
      EvalEnv env{load_algebra(algebra, b), {}};
      for (const auto& bind : binds) {
        auto eq = bind.find('=');
        if (eq == std::string::npos || eq == 0) throw DomainError("--bind expects name=path, got '" + bind + "'");
        env.bindings.insert_or_assign(bind.substr(0, eq), fj::vector_from_json(read_json(bind.substr(eq + 1)), b));
      }
      auto v = eval(*parse_expr(expr_text), env);
      out << (common.as_json ? fj::to_json(v).dump() : to_string(v)) << '\n';
    } else if (apply_cmd->parsed()) {
      auto mj = read_json(map_path), vj = read_json(vector_path);
      if (has_tail(mj) || has_tail(vj)) {
        print_tail_vector(tm_apply(fj::tail_map_from_json(mj, b), fj::tail_vector_from_json(vj, b)),
                          common.as_json, out);
      } else {
        auto v = apply(fj::map_from_json(mj, b), fj::vector_from_json(vj, b));
        out << (common.as_json ? fj::to_json(v).dump() : to_string(v)) << '\n';
      }
    } else if (compose_cmd->parsed()) {
      auto oj = read_json(outer_path), ij = read_json(inner_path);
      if (has_tail(oj) || has_tail(ij))
        out << fj::to_json(tm_compose(fj::tail_map_from_json(oj, b), fj::tail_map_from_json(ij, b))).dump()
            << '\n';
      else
        out << fj::to_json(compose(fj::map_from_json(oj, b), fj::map_from_json(ij, b))).dump() << '\n';
    } else if (tensor_cmd->parsed()) {
      if (!tensor_path.empty()) {
        if (algebra.empty() || tensor_map_path.empty() || vector_paths.size() != 1)
          throw DomainError("tensor --tensor needs --algebra, --map and exactly one --vector");
        auto fixture = load_algebra(algebra, b);
        auto v = map_via_tensor(fixture.table, fj::tensor_from_json(read_json(tensor_path), b),
                                fj::map_from_json(read_json(tensor_map_path), b),
                                fj::vector_from_json(read_json(vector_paths[0]), b),
                                {samples, seed, default_max_index()});
        out << (common.as_json ? fj::to_json(v).dump() : to_string(v)) << '\n';
      } else {
        std::vector<Vector> xs;
        for (const auto& p : vector_paths) xs.push_back(fj::vector_from_json(read_json(p), b));
        out << fj::to_json(tensor_pure(xs)).dump() << '\n';
      }
    } else if (norm_cmd->parsed()) {
      auto interval = norm_vector.empty() ? tm_bound(fj::tail_map_from_json(read_json(norm_map), b))
                                          : tv_norm(fj::tail_vector_from_json(read_json(norm_vector), b));
      out << (common.as_json ? fj::to_json(interval).dump() : interval.to_string()) << '\n';
    } else if (mul_cmd->parsed()) {
      auto fixture = load_algebra(algebra, b);
      print_tail_vector(tv_mul(fixture.table, fj::tail_vector_from_json(read_json(vector_paths[0]), b),
                               fj::tail_vector_from_json(read_json(vector_paths[1]), b)),
                        common.as_json, out);
    } else if (check_cmd->parsed()) {
      auto fixture = load_algebra(algebra, b);
      auto report = check_laws(fixture.table, trials, max_index.value_or(default_max_index()), seed);
      print_report(report, common.as_json, out);
      return report.all_passed() ? 0 : 1;
    } else if (dual_cmd->parsed()) {
      auto s = dual_eval(fj::functional_from_json(read_json(functional_path), b),
                         fj::vector_from_json(read_json(vector_path), b));
      out << (common.as_json ? fj::to_json(s).dump() : s.to_string()) << '\n';
    }
    return 0;
  } catch (const PairBoundViolation& e) {
    err << "falg: check failed: " << e.what() << '\n';
    return 1;
  } catch (const NotAssociative& e) {
    err << "falg: check failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "falg: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace falg::cli
