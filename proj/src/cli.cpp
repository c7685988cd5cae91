#include "lienil/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lienil/catalog.hpp"
#include "lienil/cohomology.hpp"
#include "lienil/fock.hpp"
#include "lienil/parse.hpp"

namespace lienil {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json algebra_report(const LieAlgebra& l, std::vector<std::string> flags = {}) {
  json rep;
  rep["name"] = l.label();
  rep["dim"] = l.dim();
  json lcs = json::array(), ucs = json::array();
  for (const auto& s : lower_central_series(l)) lcs.push_back(s.dim());
  for (const auto& s : upper_central_series(l)) ucs.push_back(s.dim());
  rep["lcs_dims"] = lcs;
  rep["ucs_dims"] = ucs;
  auto cls = nilpotency_class(l);
  rep["class"] = cls ? json(*cls) : json("not nilpotent");
  rep["derived_dim"] = derived_subalgebra(l).dim();
  rep["center_dim"] = center(l).dim();
  CohomologyReport coh = cohomology_report(l);
  rep["multiplier_dim"] = coh.multiplier_dim;
  rep["corank"] = coh.corank;
  rep["identified_as"] = catalog::identify(l);
  rep["flags"] = flags;
  return rep;
}

void print_report_text(const json& rep, std::ostream& out) {
  out << "name:           " << rep["name"].get<std::string>() << "\n"
      << "dim:            " << rep["dim"] << "\n"
      << "lcs dims:       " << rep["lcs_dims"].dump() << "\n"
      << "ucs dims:       " << rep["ucs_dims"].dump() << "\n"
      << "class:          " << (rep["class"].is_string()
                                    ? rep["class"].get<std::string>()
                                    : std::to_string(rep["class"].get<long>()))
      << "\n"
      << "derived dim:    " << rep["derived_dim"] << "\n"
      << "center dim:     " << rep["center_dim"] << "\n"
      << "dim M:          " << rep["multiplier_dim"] << "\n"
      << "corank t:       " << rep["corank"] << "\n"
      << "identified as:  " << rep["identified_as"].get<std::string>() << "\n";
  for (const auto& f : rep["flags"]) out << "flag: " << f.get<std::string>() << "\n";
}

LieAlgebra load_algebra(const std::string& path) {
  return parse_algebra(read_file(path));
}

std::pair<LieAlgebra, std::vector<WeylElement>> load_realization(
    const std::string& path) {
  RealizationDocument doc = parse_realization(read_file(path));
  LieAlgebra l = doc.inline_algebra ? *doc.inline_algebra
                                    : catalog::get(doc.target_name).algebra;
  return {std::move(l), std::move(doc.assignment)};
}

// "(i,j)=SCALAR,..." -> antisymmetric n x n matrix
TwoCocycle parse_cocycle_spec(const std::string& spec, std::size_t n) {
  Matrix theta(n, n);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < spec.size() && std::isspace(static_cast<unsigned char>(spec[pos]))) ++pos;
  };
  while (true) {
    skip_ws();
    if (pos >= spec.size()) break;
    auto eq = spec.find('=', pos);
    if (spec[pos] != '(' || eq == std::string::npos)
      throw std::runtime_error("cocycle spec: expected \"(i,j)=SCALAR\" entries");
    std::size_t close = spec.find(')', pos);
    if (close == std::string::npos || close > eq)
      throw std::runtime_error("cocycle spec: unbalanced parentheses");
    std::size_t comma = spec.find(',', pos);
    if (comma == std::string::npos || comma > close)
      throw std::runtime_error("cocycle spec: expected \"(i,j)\"");
    std::size_t i = std::stoul(spec.substr(pos + 1, comma - pos - 1));
    std::size_t j = std::stoul(spec.substr(comma + 1, close - comma - 1));
    std::size_t end = spec.find(',', eq + 1);
    if (end == std::string::npos) end = spec.size();
    std::string value = spec.substr(eq + 1, end - eq - 1);
    if (i < 1 || j < 1 || i > n || j > n || i == j)
      throw std::runtime_error("cocycle spec: indices must satisfy 1 <= i != j <= dim");
    // reuse the expression scalar syntax, including bare i and a/b-free sums
    WeylElement e = parse_weyl_expression(value, 1);
    if (e.degree() > 0) throw std::runtime_error("cocycle spec: value must be a scalar");
    Scalar s = e.is_zero() ? Scalar(0) : e.terms().begin()->second;
    theta.at(i - 1, j - 1) = s;
    theta.at(j - 1, i - 1) = -s;
    pos = end + 1;
    if (end == spec.size()) break;
  }
  return TwoCocycle{theta};
}

std::string cocycle_to_string(const TwoCocycle& theta) {
  std::ostringstream os;
  bool first = true;
  const std::size_t n = theta.theta.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (theta.theta.at(i, j).is_zero()) continue;
      if (!first) os << ",";
      first = false;
      os << "(" << i + 1 << "," << j + 1 << ")=" << theta.theta.at(i, j);
    }
  return first ? "(zero cocycle)" : os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"lienil: exact invariants, extensions and operator "
               "realizations of nilpotent Lie algebras"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON");

  std::string file, name, cocycle_spec, target;
  long corank_value = 0;
  int bound = 2;
  std::size_t levels = 6;

  auto* c_check = app.add_subcommand("check", "parse and Jacobi-validate an algebra file");
  c_check->add_option("file", file)->required();
  auto* c_inv = app.add_subcommand("invariants", "series, class and cohomology report");
  c_inv->add_option("file", file)->required();
  auto* c_schur = app.add_subcommand("schur", "Schur multiplier dimension");
  c_schur->add_option("file", file)->required();
  auto* c_corank = app.add_subcommand("corank", "multiplier dimension and corank");
  c_corank->add_option("file", file)->required();
  auto* c_ident = app.add_subcommand("identify", "match against the built-in catalog");
  c_ident->add_option("file", file)->required();

  auto* c_cat = app.add_subcommand("catalog", "built-in algebra catalog");
  auto* c_cat_list = c_cat->add_subcommand("list", "list all entries");
  auto* c_cat_show = c_cat->add_subcommand("show", "show one entry");
  c_cat_show->add_option("name", name)->required();
  c_cat->require_subcommand(1);

  auto* c_classify = app.add_subcommand("classify", "corank table row with engine verdicts");
  c_classify->add_option("--corank", corank_value)->required();

  auto* c_extend = app.add_subcommand("extend", "central extension by an explicit cocycle");
  c_extend->add_option("file", file)->required();
  c_extend->add_option("--cocycle", cocycle_spec)->required();

  auto* c_search = app.add_subcommand("extend-search",
                                      "search cocycles reaching a target fingerprint");
  c_search->add_option("file", file)->required();
  c_search->add_option("--target", target)->required();
  c_search->add_option("--bound", bound);

  auto* c_verify = app.add_subcommand("verify", "check an operator realization");
  c_verify->add_option("file", file)->required();

  auto* c_fock = app.add_subcommand("fock-check",
                                    "numerical commutator oracle on truncated matrices");
  c_fock->add_option("file", file)->required();
  c_fock->add_option("--levels", levels);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*c_check) {
      try {
        LieAlgebra l = load_algebra(file);
        out << "ok: " << (l.label().empty() ? "unnamed" : l.label()) << ", dim "
            << l.dim() << ", Jacobi identity holds\n";
        return 0;
      } catch (const JacobiViolation& e) {
        err << "invalid algebra: " << e.what() << "\n";
        return 1;
      }
    }
    if (*c_inv) {
      json rep = algebra_report(load_algebra(file));
      if (as_json)
        out << rep.dump(2) << "\n";
      else
        print_report_text(rep, out);
      return 0;
    }
    if (*c_schur) {
      LieAlgebra l = load_algebra(file);
      if (as_json) {
        json rep;
        rep["name"] = l.label();
        rep["dim"] = l.dim();
        rep["multiplier_dim"] = schur_multiplier_dim(l);
        out << rep.dump(2) << "\n";
      } else {
        out << "dim M = " << schur_multiplier_dim(l) << "\n";
      }
      return 0;
    }
    if (*c_corank) {
      LieAlgebra l = load_algebra(file);
      CohomologyReport rep = cohomology_report(l);
      if (as_json) {
        json j;
        j["name"] = l.label();
        j["dim"] = l.dim();
        j["multiplier_dim"] = rep.multiplier_dim;
        j["corank"] = rep.corank;
        out << j.dump(2) << "\n";
      } else {
        out << "dim M = " << rep.multiplier_dim << ", t = " << rep.corank << "\n";
      }
      return 0;
    }
    if (*c_ident) {
      LieAlgebra l = load_algebra(file);
      std::string id = catalog::identify(l);
      if (as_json) {
        json j;
        j["name"] = l.label();
        j["identified_as"] = id;
        out << j.dump(2) << "\n";
      } else {
        out << id << "\n";
      }
      return id == "unknown" ? 1 : 0;
    }
    if (*c_cat_list) {
      if (as_json) {
        json j = json::array();
        for (const auto& e : catalog::list()) {
          json row;
          row["name"] = e.name;
          row["dim"] = e.algebra.dim();
          if (e.expected_corank) row["expected_corank"] = *e.expected_corank;
          j.push_back(row);
        }
        out << j.dump(2) << "\n";
      } else {
        for (const auto& e : catalog::list()) {
          out << e.name << "  dim " << e.algebra.dim();
          if (e.expected_corank) out << "  t=" << *e.expected_corank;
          out << "\n";
        }
      }
      return 0;
    }
    if (*c_cat_show) {
      catalog::CatalogEntry e = catalog::get(name);
      out << serialize_algebra(e.algebra);
      json rep = algebra_report(e.algebra);
      if (as_json)
        out << rep.dump(2) << "\n";
      else
        print_report_text(rep, out);
      return 0;
    }
    if (*c_classify) {
      auto table = catalog::corank_table();
      auto it = table.find(corank_value);
      if (it == table.end()) {
        err << "no table row for corank " << corank_value << "\n";
        return 1;
      }
      bool any_flag = false;
      json j = json::array();
      for (const auto& row : it->second) {
        any_flag = any_flag || row.flagged;
        if (as_json) {
          json r;
          r["name"] = row.name;
          r["expected"] = row.expected;
          r["computed"] = row.computed;
          r["flagged"] = row.flagged;
          j.push_back(r);
        } else {
          out << row.name << ": table t=" << row.expected << ", engine t="
              << row.computed << (row.flagged ? "  [FLAGGED: mismatch]" : "") << "\n";
        }
      }
      if (as_json) out << j.dump(2) << "\n";
      return any_flag ? 1 : 0;
    }
    if (*c_extend) {
      LieAlgebra l = load_algebra(file);
      TwoCocycle theta = parse_cocycle_spec(cocycle_spec, l.dim());
      if (!is_cocycle(l, theta)) {
        err << "not a 2-cocycle: the cocycle condition fails on some basis triple\n";
        return 1;
      }
      LieAlgebra ext = central_extension(l, theta);
      json rep = algebra_report(ext);
      if (as_json)
        out << rep.dump(2) << "\n";
      else {
        out << serialize_algebra(ext);
        print_report_text(rep, out);
      }
      return 0;
    }
    if (*c_search) {
      LieAlgebra l = load_algebra(file);
      Fingerprint want = fingerprint(catalog::get(target).algebra);
      auto found = find_extension_to(l, want, bound);
      if (!found) {
        out << "none\n";
        return 1;
      }
      if (as_json) {
        json j;
        j["cocycle"] = cocycle_to_string(*found);
        j["target"] = target;
        out << j.dump(2) << "\n";
      } else {
        out << "found cocycle: " << cocycle_to_string(*found) << "\n";
      }
      return 0;
    }
    if (*c_verify) {
      auto [l, assignment] = load_realization(file);
      RealizationReport rep = verify_realization(l, assignment);
      if (as_json) {
        json j;
        j["homomorphism"] = rep.is_homomorphism;
        j["faithful"] = rep.is_faithful;
        json mism = json::array();
        for (const auto& [i, jx, diff] : rep.mismatches) {
          json m;
          m["i"] = i;
          m["j"] = jx;
          m["difference"] = diff.str();
          mism.push_back(m);
        }
        j["mismatches"] = mism;
        out << j.dump(2) << "\n";
      } else {
        out << "homomorphism: " << (rep.is_homomorphism ? "yes" : "no")
            << ", faithful: " << (rep.is_faithful ? "yes" : "no") << "\n";
        for (const auto& [i, jx, diff] : rep.mismatches)
          out << "mismatch at [v" << i << ",v" << jx << "]: " << diff.str() << "\n";
      }
      return rep.is_homomorphism ? 0 : 1;
    }
    if (*c_fock) {
      auto [l, assignment] = load_realization(file);
      std::size_t modes = assignment.empty() ? 1 : assignment[0].modes();
      FockRep rep(modes, levels);
      bool all_ok = true;
      for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = i + 1; j < l.dim(); ++j) {
          WeylElement expected(modes);
          Vector c = l.basis_bracket(i, j);
          for (std::size_t k = 0; k < l.dim(); ++k)
            if (!c[k].is_zero()) expected += assignment[k].scaled(c[k]);
          SafeCheckReport r =
              safe_commutator_check(rep, assignment[i], assignment[j], expected);
          if (!r.checked) {
            out << "[v" << i + 1 << ",v" << j + 1 << "]: UNCHECKED (" << r.note << ")\n";
            all_ok = false;
          } else if (!r.agrees) {
            out << "[v" << i + 1 << ",v" << j + 1 << "]: MISMATCH on "
                << r.mismatch_columns.size() << " safe columns\n";
            all_ok = false;
          }
        }
      if (all_ok)
        out << "fock oracle: all commutators agree on the safe subspace (levels="
            << levels << ")\n";
      return all_ok ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const JacobiViolation& e) {
    err << "invalid algebra: " << e.what() << "\n";
    return 2;
  } catch (const catalog::UnknownName& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace lienil
