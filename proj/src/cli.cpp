#include "waring/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <variant>

#include "waring/black_box.hpp"
#include "waring/equivalence.hpp"
#include "waring/errors.hpp"
#include "waring/hitting_sets.hpp"
#include "waring/io.hpp"
#include "waring/lie_factor.hpp"
#include "waring/parallel.hpp"
#include "waring/polydep.hpp"
#include "waring/slices.hpp"

namespace waring {

namespace {

using nlohmann::json;

// Input problems the user can fix; mapped to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  unsigned threads = 1;
  std::optional<std::size_t> nvars;
};

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

SparsePoly load_poly(const std::string& path, std::optional<std::size_t> nvars) {
  return parse_poly_any(read_input(path), nvars);
}

json point_set_json(const PointSet& s) {
  json pts = json::array();
  for (const Vector& p : s.points) pts.push_back(vector_to_json(p));
  return json{{"n", s.n}, {"size", s.size()}, {"points", pts}};
}

void print_points(std::ostream& out, const PointSet& s) {
  for (const Vector& p : s.points) out << format_point(p) << "\n";
}

json lie_json(const LieBasis& b) {
  json basis = json::array();
  for (const QMatrix& m : b.basis) basis.push_back(matrix_to_json(m));
  return json{{"n", b.n}, {"dimension", b.dimension()}, {"basis", basis}};
}

json factorization_json(const LinearFactorization& f) {
  json forms = json::array();
  for (std::size_t i = 0; i < f.forms.size(); ++i) {
    forms.push_back(json{{"form", vector_to_json(f.forms[i])}, {"exponent", f.exponents[i]}});
  }
  return json{{"lambda", f.lambda.to_string()}, {"factors", forms}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tools for sums of powers of linear forms", "waring"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  std::size_t nvars = 0;
  app.add_flag("--json", opt.json, "Structured JSON output");
  app.add_option("--threads", opt.threads, "Worker thread cap")->check(CLI::PositiveNumber);
  app.add_option("--nvars", nvars, "Number of variables of the input polynomial")->check(CLI::PositiveNumber);

  std::function<void()> action;
  std::string file;

  // equiv
  auto* equiv = app.add_subcommand("equiv", "Is a cubic form a sum of n cubes over C or R");
  std::string field = "C";
  std::string mode = "det";
  std::uint64_t seed = 0;
  std::optional<unsigned> sample_bits;
  equiv->add_option("--field", field, "C or R")->check(CLI::IsMember({"C", "R"}));
  equiv->add_option("--mode", mode, "det or rand")->check(CLI::IsMember({"det", "rand"}));
  equiv->add_option("--seed", seed, "Seed of the randomized mode");
  equiv->add_option("--sample-bits", sample_bits, "Sample range 2^B of the randomized mode");
  equiv->add_option("FILE", file, "Polynomial file ('-' for stdin)")->required();
  equiv->callback([&] {
    action = [&] {
      const SparsePoly f = load_poly(file, opt.nvars);
      const Field fl = field == "C" ? Field::Complex : Field::Real;
      EquivalenceStats stats;
      const Verdict v = mode == "det" ? deterministic_equivalence(f, fl, &stats)
                                      : randomized_equivalence(f, fl, seed, sample_bits);
      if (opt.json) {
        json j{{"verdict", v.accept ? "ACCEPT" : "REJECT"},
               {"trace", v.trace ? json(to_string(*v.trace)) : json(nullptr)},
               {"field", field},
               {"mode", mode}};
        if (mode == "det") {
          j["moment_parameter"] = stats.moment_parameter ? json(*stats.moment_parameter) : json(nullptr);
          j["peak_bits"] = stats.peak_bits;
        } else {
          j["seed"] = seed;
        }
        out << j.dump() << "\n";
      } else {
        out << to_string(v) << "\n";
      }
    };
  });

  // equiv-q
  auto* equivq = app.add_subcommand("equiv-q", "Is f = P_d(A x) for an invertible rational A");
  unsigned degree = 0;
  equivq->add_option("-d", degree, "Degree")->required();
  equivq->add_option("FILE", file, "Polynomial file ('-' for stdin)")->required();
  equivq->callback([&] {
    action = [&] {
      const SparsePoly f = load_poly(file, opt.nvars);
      const LieEquivalence r = lie_equivalence_q(f, degree);
      if (opt.json) {
        json j{{"verdict", r.accept ? "ACCEPT" : "REJECT"}};
        if (r.accept) {
          j["A"] = matrix_to_json(r.a);
          json forms = json::array();
          for (const Vector& l : r.forms) forms.push_back(format_linear_form(l));
          j["forms"] = forms;
        } else {
          j["trace"] = to_string(r.reason);
          if (r.factor_failure) j["factorization"] = to_string(*r.factor_failure);
        }
        out << j.dump() << "\n";
        return;
      }
      if (!r.accept) {
        out << "REJECT trace=" << to_string(r.reason) << "\n";
        if (r.factor_failure) out << "factorization " << to_string(*r.factor_failure) << "\n";
        return;
      }
      out << "ACCEPT\nA\n" << format_matrix(r.a) << "forms\n";
      for (const Vector& l : r.forms) out << format_linear_form(l) << "\n";
    };
  });

  // pit
  auto* pit = app.add_subcommand("pit", "Zero test for sums of powers of independent forms");
  std::size_t n = 0;
  std::string poly_file;
  pit->add_option("-n", n, "Number of variables")->required()->check(CLI::PositiveNumber);
  pit->add_option("-d", degree, "Degree")->required();
  pit->add_option("--poly", poly_file, "Polynomial file, used as a black box")->required();
  pit->callback([&] {
    action = [&] {
      const SparsePoly f = load_poly(poly_file, n);
      const BlackBoxPoly box(n, degree, [f](std::span<const Rational> x) { return f.eval(x); });
      const PitResult r = pit_sum_of_powers(box, n, degree);
      if (opt.json) {
        out << json{{"verdict", r.nonzero ? "NONZERO" : "ZERO"},
                    {"witness", r.witness ? vector_to_json(*r.witness) : json(nullptr)},
                    {"evaluations", r.evaluations},
                    {"budget", pit_evaluation_budget(n, degree)}}
                   .dump()
            << "\n";
        return;
      }
      out << (r.nonzero ? "NONZERO" : "ZERO") << "\n";
      if (r.witness) out << "witness " << format_point(*r.witness) << "\n";
      out << "evaluations " << r.evaluations << "\n";
    };
  });

  // hitset
  auto* hitset = app.add_subcommand("hitset", "Emit a hitting set");
  hitset->require_subcommand(1);
  auto* hs_equiv = hitset->add_subcommand("equiv", "Hitting set for P_d-equivalent forms");
  hs_equiv->add_option("-n", n, "Number of variables")->required()->check(CLI::PositiveNumber);
  hs_equiv->add_option("-d", degree, "Degree")->required();
  hs_equiv->callback([&] {
    action = [&] {
      const PointSet s = equivalence_hitting_set(n, degree);
      if (opt.json) {
        json j = point_set_json(s);
        j["raw_size"] = equivalence_hitting_set_raw_size(n, degree);
        out << j.dump() << "\n";
      } else {
        print_points(out, s);
      }
    };
  });
  auto* hs_trans = hitset->add_subcommand("transversal", "Rank-preserving matrix family");
  std::size_t r_arg = 0;
  hs_trans->add_option("-n", n, "Number of rows")->required()->check(CLI::PositiveNumber);
  hs_trans->add_option("-r", r_arg, "Number of columns")->required()->check(CLI::PositiveNumber);
  hs_trans->callback([&] {
    action = [&] {
      if (r_arg > n) throw InputError("transversal family needs r <= n");
      const TransversalFamily fam = transversal_family(n, r_arg);
      if (opt.json) {
        json ms = json::array();
        for (const QMatrix& m : fam.matrices) ms.push_back(matrix_to_json(m));
        out << json{{"n", n}, {"r", r_arg}, {"matrices", ms}}.dump() << "\n";
        return;
      }
      for (std::size_t i = 0; i < fam.matrices.size(); ++i) {
        if (i > 0) out << "\n";
        out << format_matrix(fam.matrices[i]);
      }
    };
  });

  // essvars
  auto* essvars = app.add_subcommand("essvars", "Number of essential variables");
  bool blackbox = false;
  essvars->add_flag("--blackbox", blackbox, "Evaluate only (input promised to be a sum of powers)");
  essvars->add_option("FILE", file, "Polynomial file ('-' for stdin)")->required();
  essvars->callback([&] {
    action = [&] {
      const SparsePoly f = load_poly(file, opt.nvars);
      const std::size_t k = blackbox ? essential_variable_count(BlackBoxPoly::from_poly(f))
                                     : essential_variable_count(f);
      if (opt.json) {
        out << json{{"essential_variables", k}, {"blackbox", blackbox}}.dump() << "\n";
      } else {
        out << k << "\n";
      }
    };
  });

  // minvars
  auto* minvars = app.add_subcommand("minvars", "Change of variables to the essential ones");
  minvars->add_option("FILE", file, "Polynomial file ('-' for stdin)")->required();
  minvars->callback([&] {
    action = [&] {
      const VariableMinimization m = minimize_variables(load_poly(file, opt.nvars));
      if (opt.json) {
        out << json{{"t", m.t}, {"A", matrix_to_json(m.a)}, {"g", poly_to_json(m.g)}}.dump() << "\n";
      } else {
        out << "t " << m.t << "\nA\n" << format_matrix(m.a) << "g " << serialize_poly(m.g) << "\n";
      }
    };
  });

  // lie
  auto* lie = app.add_subcommand("lie", "Lie algebra of a product of linear forms");
  std::optional<unsigned> lie_degree;
  lie->add_flag("--blackbox", blackbox, "Evaluate on the lambda points only");
  lie->add_option("-d", lie_degree, "Degree bound of the black box (default: total degree)");
  lie->add_option("FILE", file, "Polynomial file ('-' for stdin)")->required();
  lie->callback([&] {
    action = [&] {
      const SparsePoly f = load_poly(file, opt.nvars);
      LieBasis b;
      if (blackbox) {
        const unsigned d = lie_degree.value_or(f.degree().value_or(0));
        b = lie_algebra_product_forms(
            BlackBoxPoly(f.nvars(), d, [f](std::span<const Rational> x) { return f.eval(x); }));
      } else {
        b = lie_algebra_dense(f);
      }
      if (opt.json) {
        out << lie_json(b).dump() << "\n";
        return;
      }
      out << "dimension " << b.dimension() << "\n";
      for (const QMatrix& m : b.basis) out << "\n" << format_matrix(m);
    };
  });

  // factor-forms
  auto* factor = app.add_subcommand("factor-forms", "Factor into independent rational linear forms");
  factor->add_option("FILE", file, "Polynomial file ('-' for stdin)")->required();
  factor->callback([&] {
    action = [&] {
      const FactorResult r = derand_lie_factor(load_poly(file, opt.nvars));
      if (const auto* f = std::get_if<LinearFactorization>(&r)) {
        if (opt.json) {
          json j = factorization_json(*f);
          j["status"] = "FACTORED";
          out << j.dump() << "\n";
        } else {
          out << f->to_string() << "\n";
        }
        return;
      }
      const std::string reason = to_string(std::get<FactorFailure>(r));
      if (opt.json) {
        out << json{{"status", "FAILED"}, {"reason", reason}}.dump() << "\n";
      } else {
        out << "FAILED reason=" << reason << "\n";
      }
    };
  });

  // slices
  auto* slices = app.add_subcommand("slices", "Dump the slices of a cubic form");
  slices->add_option("FILE", file, "Polynomial file ('-' for stdin)")->required();
  slices->callback([&] {
    action = [&] {
      const CubicSlices s = slices_of(load_poly(file, opt.nvars));
      if (opt.json) {
        json ms = json::array();
        for (const QMatrix& m : s.slices) ms.push_back(matrix_to_json(m));
        out << json{{"n", s.n}, {"slices", ms}}.dump() << "\n";
        return;
      }
      for (std::size_t i = 0; i < s.slices.size(); ++i) {
        if (i > 0) out << "\n";
        out << "slice " << i + 1 << "\n" << format_matrix(s.slices[i]);
      }
    };
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (app.exit(e, out, err) == 0) return 0;
    err << app.help();
    return 2;
  }
  if (nvars > 0) opt.nvars = nvars;
  set_thread_count(opt.threads);
  try {
    action();
    return 0;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    // ParseError, NotCubic, NotHomogeneous, DimensionMismatch and bad arguments
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace waring
