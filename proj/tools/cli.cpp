#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <exception>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nonufd/nonufd.hpp>

namespace nonufd::cli {

namespace {

using nlohmann::ordered_json;

struct Config {
  std::string semiring;
  std::string output = "text";
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  unsigned long bound = 4;
  std::size_t max_nodes = RewriteBudget{}.max_nodes;
  std::size_t max_depth = RewriteBudget{}.max_depth;

  bool json() const { return output == "json"; }
};

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::vector<std::string> rendered_factors(const Factorization& f) {
  std::vector<std::string> out;
  for (const auto& p : f.factors) out.push_back(render(p));
  return out;
}

// "(T+1)(T^4+T^2+1)", with a leading unit when it is not one.
std::string render_product(const SemiringRef& r, const Factorization& f) {
  std::string out;
  if (!r->is_one(f.unit)) out = r->render_literal(f.unit) + "*";
  for (const auto& p : f.factors) out += "(" + render(p) + ")";
  return out;
}

std::string render_degrees(const std::vector<std::size_t>& degrees) {
  std::string out = "{";
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(degrees[i]);
  }
  return out + "}";
}

ordered_json capabilities_json(const Capabilities& c) {
  return {{"units_enumerable", c.units_enumerable},
          {"coefficients_enumerable_bounded", c.coefficients_enumerable_bounded},
          {"equality_complete", c.equality_complete}};
}

ordered_json certificate_json(const IrreducibilityCertificate& c) {
  ordered_json j = {{"factor", render(c.target)},
                    {"verdict", std::string(to_string(c.verdict))},
                    {"reason", std::string(to_string(c.reason))}};
  if (c.witness) {
    j["witness"] = ordered_json::array();
    j["witness"].push_back(render(c.witness->first));
    j["witness"].push_back(render(c.witness->second));
  }
  return j;
}

ordered_json report_json(const SemiringRef& r, const NonUfdReport& rep) {
  ordered_json j;
  j["semiring"] = rep.semiring_id;
  j["case"] = std::string(to_string(rep.kind));
  if (rep.partner && rep.partner_inverse) {
    j["partner"] = {{"a", r->render_literal(*rep.partner)}, {"a_inv", r->render_literal(*rep.partner_inverse)}};
  } else {
    j["partner"] = nullptr;
  }
  j["product"] = render(rep.product);
  j["factorizations"] = ordered_json::array();
  j["factorizations"].push_back(rendered_factors(rep.first));
  j["factorizations"].push_back(rendered_factors(rep.second));
  j["degree_multisets"] = ordered_json::array();
  j["degree_multisets"].push_back(rep.first_degrees);
  j["degree_multisets"].push_back(rep.second_degrees);
  ordered_json certs = ordered_json::array();
  for (const auto& c : rep.certificates) certs.push_back(certificate_json(c));
  j["certificates"] = std::move(certs);
  j["axioms"] = {{"seed", rep.axiom_seed},
                 {"samples", rep.axiom_samples},
                 {"passed", rep.axioms_passed},
                 {"unknown", rep.axiom_unknown},
                 {"digest", hex64(rep.axiom_digest)}};
  j["verdict"] = std::string(to_string(rep.verdict));
  if (!rep.failed_check.empty()) j["failed_check"] = rep.failed_check;
  return j;
}

ordered_json axioms_json(const AxiomReport& rep) {
  ordered_json laws = ordered_json::array();
  for (const auto& a : rep.results) {
    laws.push_back({{"name", a.name},
                    {"passed", a.passed()},
                    {"checked", a.checked},
                    {"failed", a.failed},
                    {"unknown", a.unknown},
                    {"counterexample", a.counterexample ? ordered_json(*a.counterexample) : ordered_json(nullptr)}});
  }
  return {{"semiring", rep.semiring_id},
          {"seed", rep.seed},
          {"samples", rep.samples},
          {"passed", rep.passed()},
          {"unknown_total", rep.unknown_total()},
          {"digest", hex64(rep.digest())},
          {"axioms", std::move(laws)}};
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

int cmd_list(const Config& cfg, const Registry& reg, std::ostream& out) {
  if (cfg.json()) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reg.all()) arr.push_back({{"id", r->id()}, {"flags", capabilities_json(r->capabilities())}});
    emit(out, arr);
    return kOk;
  }
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  for (const auto& r : reg.all()) {
    const auto c = r->capabilities();
    out << r->id() << "  units_enumerable=" << yn(c.units_enumerable)
        << " coefficients_enumerable_bounded=" << yn(c.coefficients_enumerable_bounded)
        << " equality_complete=" << yn(c.equality_complete) << "\n";
  }
  return kOk;
}

int cmd_eval(const Config& cfg, const Registry& reg, const std::vector<std::string>& exprs, std::ostream& out) {
  const SemiringRef r = reg.get(cfg.semiring);
  if (exprs.size() == 1) {
    const std::string text = render(parse(exprs[0], r));
    if (cfg.json()) {
      emit(out, {{"semiring", r->id()}, {"expression", exprs[0]}, {"result", text}});
    } else {
      out << text << "\n";
    }
    return kOk;
  }
  const Polynomial p = parse(exprs[0], r);
  const Polynomial q = parse(exprs[1], r);
  const Verdict v = poly_eq(p, q);
  if (cfg.json()) {
    emit(out, {{"semiring", r->id()},
               {"lhs", render(p)},
               {"rhs", render(q)},
               {"verdict", std::string(to_string(v))}});
  } else {
    out << to_string(v) << "\n";
  }
  return v == Verdict::Unknown ? kInconclusive : kOk;
}

int cmd_factor(const Config& cfg, const Registry& reg, const std::string& expr, std::ostream& out,
               std::ostream& err) {
  const SemiringRef r = reg.get(cfg.semiring);
  const Polynomial p = parse(expr, r);
  if (p.is_zero() || p.is_constant()) {
    err << "error: factor needs a nonconstant polynomial\n";
    return kUnsupported;
  }

  if (r->capabilities().coefficients_enumerable_bounded) {
    const auto all = all_factorizations(p, SplitOptions{cfg.bound, true});
    if (cfg.json()) {
      ordered_json facs = ordered_json::array();
      ordered_json degs = ordered_json::array();
      for (const auto& f : all) {
        facs.push_back(rendered_factors(f));
        degs.push_back(f.degree_multiset());
      }
      emit(out, {{"semiring", r->id()},
                 {"polynomial", render(p)},
                 {"mode", "exhaustive"},
                 {"bound", cfg.bound},
                 {"factorizations", std::move(facs)},
                 {"degree_multisets", std::move(degs)}});
    } else {
      out << "semiring: " << r->id() << "\n"
          << "polynomial: " << render(p) << "\n"
          << "mode: exhaustive (bound " << cfg.bound << ")\n"
          << "factorizations: " << all.size() << "\n";
      for (const auto& f : all) {
        out << "  " << render_product(r, f) << "  degrees " << render_degrees(f.degree_multiset()) << "\n";
      }
    }
    return kOk;
  }

  const auto cert = certify_by_shape(p);
  if (!cert) {
    err << "error: " << r->id()
        << " has no bounded coefficient enumeration and " << render(p)
        << " matches no certificate shape (T^n+unit, T^2+T+1, T^4+T^2+1)\n";
    return kUnsupported;
  }
  if (cfg.json()) {
    ordered_json j = {{"semiring", r->id()}, {"polynomial", render(p)}, {"mode", "certificate"}, {"bound", cfg.bound}};
    ordered_json c = certificate_json(*cert);
    c["argument"] = cert->argument;
    j["certificate"] = std::move(c);
    emit(out, j);
  } else {
    out << "semiring: " << r->id() << "\n"
        << "polynomial: " << render(p) << "\n"
        << "mode: certificate\n"
        << "certificate: " << to_string(cert->verdict) << " (" << to_string(cert->reason) << ")\n";
    if (cert->witness) {
      out << "witness: (" << render(cert->witness->first) << ")(" << render(cert->witness->second) << ")\n";
    }
    for (const auto& line : cert->argument) out << "  " << line << "\n";
  }
  return cert->verdict == CertVerdict::Unknown ? kInconclusive : kOk;
}

int cmd_verify(const Config& cfg, const Registry& reg, bool all, bool intro, std::ostream& out) {
  std::vector<SemiringRef> targets;
  if (all) {
    targets = reg.all();
  } else {
    targets.push_back(reg.get(cfg.semiring));
  }
  const VerifyOptions opts{cfg.seed, cfg.samples};
  ordered_json reports = ordered_json::array();
  bool inconclusive = false;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const auto& r = targets[i];
    const NonUfdReport rep = intro ? idempotent_demo(r, opts) : verify_non_ufd(r, opts);
    inconclusive |= rep.verdict != UfdVerdict::NotUFD;
    if (cfg.json()) {
      reports.push_back(report_json(r, rep));
    } else {
      if (i) out << "\n";
      out << render_text(rep);
    }
  }
  if (cfg.json()) emit(out, all ? reports : reports.front());
  return inconclusive ? kInconclusive : kOk;
}

int cmd_axioms(const Config& cfg, const Registry& reg, std::ostream& out) {
  const SemiringRef r = reg.get(cfg.semiring);
  const AxiomReport rep = check_axioms(*r, cfg.seed, cfg.samples);
  if (cfg.json()) {
    emit(out, axioms_json(rep));
  } else {
    out << rep.render_text();
  }
  if (!rep.passed()) return kInternal;
  return rep.unknown_total() ? kInconclusive : kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial algebras over strict semirings: factorization and non-UFD verification", "nonufd"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--semiring,-s", cfg.semiring, "semiring id (see list-semirings)");
  app.add_option("--output,-o", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cfg.seed, "sampling seed");
  app.add_option("--samples", cfg.samples, "sampled tuples for axiom checks")->check(CLI::PositiveNumber);
  app.add_option("--bound", cfg.bound, "coefficient bound for exhaustive factoring")->check(CLI::PositiveNumber);
  app.add_option("--max-nodes", cfg.max_nodes, "s0 rewrite budget: nodes")->check(CLI::PositiveNumber);
  app.add_option("--max-depth", cfg.max_depth, "s0 rewrite budget: search depth")->check(CLI::PositiveNumber);

  auto* list = app.add_subcommand("list-semirings", "registered semirings and capability flags");

  std::vector<std::string> exprs;
  auto* eval = app.add_subcommand("eval", "render one expression, or compare two");
  eval->add_option("exprs", exprs, "expression(s)")->required()->expected(1, 2);

  std::string factor_expr;
  auto* factor = app.add_subcommand("factor", "all factorizations within the bound, or a lemma certificate");
  factor->add_option("expr", factor_expr, "polynomial")->required();

  bool all = false;
  bool intro = false;
  auto* verify = app.add_subcommand("verify-theorem", "two factorizations of T^5+T^4+T^3+T^2+T+1 into irreducibles");
  verify->add_flag("--all", all, "every registered semiring, in registry order");
  verify->add_flag("--intro", intro, "use (T+1)(T^2+1) = (T+1)^3 instead (idempotent semirings)");

  auto* axioms = app.add_subcommand("check-axioms", "sampled semiring law checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  auto need_semiring = [&] {
    if (cfg.semiring.empty()) throw UsageError("--semiring is required");
  };

  try {
    const Registry reg = builtin_registry(RewriteBudget{cfg.max_nodes, cfg.max_depth});
    if (list->parsed()) return cmd_list(cfg, reg, out);
    if (verify->parsed()) {
      if (all == !cfg.semiring.empty()) throw UsageError("give exactly one of --semiring and --all");
      return cmd_verify(cfg, reg, all, intro, out);
    }
    need_semiring();
    if (eval->parsed()) return cmd_eval(cfg, reg, exprs, out);
    if (factor->parsed()) return cmd_factor(cfg, reg, factor_expr, out, err);
    if (axioms->parsed()) return cmd_axioms(cfg, reg, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return kUnsupported;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUnsupported;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

}  // namespace nonufd::cli
