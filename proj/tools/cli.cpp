#include "cli.hpp"

#include "opforge/bijections.hpp"
#include "opforge/manin.hpp"
#include "opforge/oracle.hpp"
#include "opforge/systems.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <set>

namespace opforge::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_known_system(const std::string& name, bool allow_L = true) {
  const auto& names = system_names();
  if (std::find(names.begin(), names.end(), name) == names.end() || (!allow_L && name == "L"))
    throw UsageError("unknown system '" + name + "'");
}

OperadPresentation lookup_operad(const std::string& name) {
  try {
    return catalog(name);
  } catch (const std::invalid_argument&) {
    throw UsageError("unknown operad '" + name + "'");
  }
}

json relation_list(const std::vector<Arity3Element>& rels, const OpSpace& ops) {
  json out = json::array();
  for (const auto& r : rels) out.push_back(format_relation(r, ops));
  return out;
}

// ----------------------------------------------------------------- commands

int cmd_criterion(const std::string& which, bool as_json, std::ostream& out) {
  std::vector<std::string> names;
  if (which == "all") names = single_op_catalog_names();
  else names = {lookup_operad(which).name};

  json reports = json::array();
  for (const auto& name : names) {
    const CriterionReport r = admits_nonsymmetric(catalog(name));
    if (as_json) {
      reports.push_back(to_json(r));
      continue;
    }
    out << r.operad_name << ": dim_R=" << r.dim_R << " dim_F=" << r.dim_F << " dim_P3=" << r.dim_P3
        << " admits=" << (r.admits ? "true" : "false") << "\n";
    for (const auto& g : r.F_generators) out << "  " << format_relation(g, r.ops) << "\n";
  }
  if (as_json) out << (which == "all" ? reports : reports.front()).dump(2) << "\n";
  return 0;
}

int cmd_manin(const std::string& name, bool as_json, std::ostream& out) {
  const OperadPresentation p = lookup_operad(name);
  if (p.ops.size() != 1) throw UsageError("manin needs a single-operation operad");
  const OperadPresentation w = white_product_as(p);
  const OperadPresentation q = symmetrize_quotient(w);
  const Subspace<Rat> rw = relation_space(w);
  const Subspace<Rat> rq = relation_space(q);
  const bool recovers = rq == relation_space(p);

  if (as_json) {
    json j{{"operad", p.name},
           {"white_product",
            {{"name", w.name},
             {"relations", relation_list(w.relations, w.ops)},
             {"dim_relations", rw.dim()},
             {"dim_3", rw.ambient_dim() - rw.dim()}}},
           {"quotient",
            {{"name", q.name},
             {"relations", relation_list(Basis3(q.ops).elements(rq), q.ops)},
             {"dim_relations", rq.dim()},
             {"dim_3", rq.ambient_dim() - rq.dim()},
             {"equals_operad", recovers}}}};
    out << j.dump(2) << "\n";
    return 0;
  }
  out << w.name << ": " << rw.dim() << " relations, dim(3) = " << rw.ambient_dim() - rw.dim() << "\n";
  for (const auto& r : w.relations) out << "  " << format_relation(r, w.ops) << "\n";
  out << q.name << ": " << rq.dim() << " relations, dim(3) = " << rq.ambient_dim() - rq.dim() << "\n";
  for (const auto& r : Basis3(q.ops).elements(rq)) out << "  " << format_relation(r, q.ops) << "\n";
  out << "quotient equals " << p.name << ": " << (recovers ? "true" : "false") << "\n";
  return 0;
}

int cmd_dims(const std::string& sys, int max_n, int oracle_max, bool csv, std::ostream& out) {
  require_known_system(sys);
  if (max_n < 1) throw UsageError("--max-n must be >= 1");
  const bool has_oracle = sys != "L";
  bool ok = true;
  if (csv) out << "n,grammar_count,formula,oracle_dim\n";
  else out << std::setw(3) << "n" << std::setw(14) << "grammar" << std::setw(14) << "formula" << std::setw(14) << "oracle" << "\n";
  for (int n = 1; n <= max_n; ++n) {
    const auto g = grammar_count(sys, n);
    const auto f = dim_formula(sys, n);
    std::string o;
    if (has_oracle && n <= oracle_max) {
      const auto d = bruteforce_dim(nc_presentation(sys), n);
      o = std::to_string(d);
      ok = ok && d == g;
    }
    ok = ok && g == f;
    if (csv) out << n << "," << g << "," << f << "," << o << "\n";
    else out << std::setw(3) << n << std::setw(14) << g << std::setw(14) << f << std::setw(14) << o << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_normal_forms(const std::string& sys, int n, std::ostream& out) {
  require_known_system(sys);
  if (n < 1) throw UsageError("arity must be >= 1");
  for (const auto& t : normal_forms(sys, n)) out << to_string(t) << "\n";
  return 0;
}

int cmd_bijection(const std::string& sys, int n, std::ostream& out) {
  require_known_system(sys, false);
  if (n < 1) throw UsageError("arity must be >= 1");
  out << format_correspondence(correspondence(sys, n));
  return 0;
}

std::string describe(const Overlap& ov, const RewriteSystem& sys) {
  return sys.rules[ov.rule_i].label() + "/" + sys.rules[ov.rule_j].label() + " at " +
         (ov.pos_j.empty() ? std::string("root") : ov.pos_j) + " " + to_string(ov.tree);
}

int cmd_confluence(const std::string& name, int max_arity, std::ostream& out) {
  require_known_system(name);
  if (max_arity < 3) throw UsageError("--max-arity must be >= 3");
  const RewriteSystem sys = system(name, std::max(max_arity, 3));
  const ConfluenceReport report = check_confluence(sys, max_arity);
  for (const auto& c : report.checks) {
    out << (c.pass ? "pass " : "FAIL ") << describe(c.overlap, sys) << "\n";
    if (!c.pass) out << "  left:  " << to_string(c.left_normal) << "\n  right: " << to_string(c.right_normal) << "\n";
  }
  out << name << ": " << report.checks.size() << " overlaps, " << report.failures() << " failures\n";
  return report.all_pass() ? 0 : 1;
}

int cmd_oracle(const std::string& name, int max_n, bool csv, std::ostream& out) {
  const OperadPresentation p = [&] {
    try {
      return nc_presentation(name);
    } catch (const std::invalid_argument&) {
      return lookup_operad(name);
    }
  }();
  if (max_n < 1) throw UsageError("--max-n must be >= 1");
  if (csv) out << oracle_csv_header() << "\n";
  for (int n = 1; n <= max_n; ++n) {
    const OracleResult r = bruteforce(p, n);
    if (csv) out << oracle_csv_row(p.name, r) << "\n";
    else out << p.name << " n=" << n << " free=" << r.free_dim << " ideal=" << r.ideal_rank << " dim=" << r.operad_dim << "\n";
  }
  return 0;
}

int cmd_certify(int max_n, std::ostream& out) {
  if (max_n < 1) throw UsageError("--max-n must be >= 1");
  const int cap = oracle_cap();
  bool ok = true;
  const auto verdict = [&](bool pass) {
    ok = ok && pass;
    return pass ? "ok" : "MISMATCH";
  };

  for (const std::string sys : {"Zin", "Bicom", "Flex", "AntiFlex"}) {
    const RewriteSystem rs = system(sys, std::max(max_n, 3));
    const OperadPresentation nc = nc_presentation(sys);
    for (int n = 1; n <= max_n; ++n) {
      const auto forms = normal_forms(sys, n);
      const auto g = grammar_count(sys, n);
      const auto f = dim_formula(sys, n);
      bool pass = forms.size() == g && g == f;
      out << sys << " n=" << n << " grammar=" << g << " formula=" << f;
      if (n <= 8) {
        std::set<PlanarTree> grammar_set(forms.begin(), forms.end());
        std::set<PlanarTree> filtered;
        for (const auto& t : all_trees(n, "xy"))
          if (is_normal(t, rs)) filtered.insert(t);
        out << " divisor-free=" << filtered.size();
        pass = pass && grammar_set.size() == forms.size() && grammar_set == filtered;
      }
      if (n <= cap) {
        const auto d = bruteforce_dim(nc, n);
        out << " oracle=" << d;
        pass = pass && d == g;
      }
      out << " " << verdict(pass) << "\n";
    }
    if (max_n >= 3) {
      const ConfluenceReport c = check_confluence(rs, max_n);
      out << sys << " confluence arity<=" << max_n << ": " << c.checks.size() << " overlaps, " << c.failures()
          << " failures " << verdict(c.all_pass()) << "\n";
    }
  }

  for (int n = 1; n <= max_n; ++n) {
    const auto g = grammar_count("L", n);
    const auto f = dim_formula("L", n);
    out << "L n=" << n << " grammar=" << g << " formula=" << f << " " << verdict(g == f) << "\n";
  }

  // No closed form for NcNov: the oracle must at least be monotone in n.
  const OperadPresentation nov = nc_presentation("NcNov");
  std::uint64_t previous = 0;
  for (int n = 1; n <= std::min(max_n, cap); ++n) {
    const auto d = bruteforce_dim(nov, n);
    out << "NcNov n=" << n << " oracle=" << d << " " << verdict(d >= previous) << "\n";
    previous = d;
  }

  out << "certify: " << (ok ? "all checks passed" : "FAILED") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arity-3 criterion, Manin products and nonsymmetric rewriting systems", "opforge"};
  app.require_subcommand(1, 1);

  std::string name;
  bool as_json = false;
  bool csv = false;
  int n = 0;
  int max_n = 0;
  int oracle_max = 0;
  int max_arity = 0;

  auto* criterion = app.add_subcommand("criterion", "Decide whether an operad admits a nonsymmetric version");
  criterion->add_option("operad", name, "Catalog name or 'all'")->required();
  criterion->add_flag("--json", as_json, "JSON output");

  auto* manin = app.add_subcommand("manin", "As∘P and its symmetrized quotient");
  manin->add_option("operad", name, "Catalog name")->required();
  manin->add_flag("--json", as_json, "JSON output");

  auto* dims = app.add_subcommand("dims", "Dimension table: grammar, formula, oracle");
  dims->add_option("system", name, "Zin, Bicom, Flex, AntiFlex or L")->required();
  dims->add_option("--max-n", max_n, "Largest arity")->required();
  dims->add_option("--oracle-max", oracle_max, "Largest arity checked by the oracle");
  dims->add_flag("--csv", csv, "CSV output");

  auto* forms = app.add_subcommand("normal-forms", "List normal forms");
  forms->add_option("system", name)->required();
  forms->add_option("n", n)->required();

  auto* bijection = app.add_subcommand("bijection", "Dump the bijection of the normal forms");
  bijection->add_option("system", name, "Zin, Bicom, Flex or AntiFlex")->required();
  bijection->add_option("n", n)->required();

  auto* confluence = app.add_subcommand("confluence", "Check every overlap up to an arity");
  confluence->add_option("system", name)->required();
  confluence->add_option("--max-arity", max_arity)->required();

  auto* certify = app.add_subcommand("certify", "Grammar, formula, oracle and confluence agreement");
  max_n = 6;
  certify->add_option("--max-n", max_n, "Largest arity")->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "Brute-force dimensions of a presentation");
  oracle->add_option("presentation", name, "System or catalog name")->required();
  oracle->add_option("--max-n", max_n, "Largest arity")->required();
  oracle->add_flag("--csv", csv, "CSV output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (criterion->parsed()) return cmd_criterion(name, as_json, out);
    if (manin->parsed()) return cmd_manin(name, as_json, out);
    if (dims->parsed()) return cmd_dims(name, max_n, oracle_max, csv, out);
    if (forms->parsed()) return cmd_normal_forms(name, n, out);
    if (bijection->parsed()) return cmd_bijection(name, n, out);
    if (confluence->parsed()) return cmd_confluence(name, max_arity, out);
    if (certify->parsed()) return cmd_certify(max_n, out);
    if (oracle->parsed()) return cmd_oracle(name, max_n, csv, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const OracleCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace opforge::cli
