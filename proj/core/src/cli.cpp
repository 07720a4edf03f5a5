#include "ipts/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ipts/enumerate.hpp"
#include "ipts/errors.hpp"
#include "ipts/io.hpp"
#include "ipts/lp.hpp"
#include "ipts/staircase.hpp"
#include "ipts/tables.hpp"
#include "ipts/testset.hpp"

namespace ipts {

namespace {

std::string join(const IntVector& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << " ";
    out << v[i];
  }
  return out.str();
}

IntVector to_vector(const std::vector<std::string>& toks) {
  std::vector<Int> entries;
  entries.reserve(toks.size());
  for (const std::string& t : toks) {
    try {
      entries.emplace_back(t);
    } catch (const std::exception&) {
      throw ParseError("not an integer: '" + t + "'");
    }
  }
  return IntVector(std::move(entries));
}

IntMatrix write_rows(const std::vector<IntVector>& rows, std::size_t n) {
  IntMatrix m(rows.empty() ? 1 : rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  return m;
}

void write_basis(const std::string& path, const std::vector<IntVector>& rows,
                 std::size_t n, bool modern) {
  if (rows.empty()) {
    std::ostringstream out;
    if (modern)
      out << 0 << " " << n << "\n";
    else
      out << n << " " << 0 << "\n";
    write_file(path, out.str());
    return;
  }
  write_matrix(path, write_rows(rows, n), modern);
}

TermOrder order_for(const IntVector& cost, const std::string& tiebreak_spec) {
  if (tiebreak_spec.empty()) return TermOrder(cost);
  std::vector<std::size_t> perm;
  std::istringstream in(tiebreak_spec);
  std::string tok;
  while (std::getline(in, tok, ',')) perm.push_back(std::stoul(tok) - 1);
  return TermOrder(cost, perm);
}

// Equality system of a LattE file: inequality rows get one slack variable
// each, so fiber points correspond one-to-one to solutions of the original
// mixed system.
struct SlackSystem {
  IntMatrix matrix;
  IntVector rhs;
  std::size_t original_vars;
};

SlackSystem slack_form(const LatteSystem& sys) {
  const std::size_t m = sys.matrix.rows();
  const std::size_t n = sys.matrix.cols();
  std::vector<std::size_t> slack_rows;
  for (std::size_t i = 0; i < m; ++i)
    if (!sys.equalities.count(i)) slack_rows.push_back(i);
  IntMatrix a(m, n + slack_rows.size());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a.at(i, j) = sys.matrix.at(i, j);
  for (std::size_t s = 0; s < slack_rows.size(); ++s)
    a.at(slack_rows[s], n + s) = 1;
  return SlackSystem{std::move(a), sys.rhs, n};
}

struct CommonOpts {
  bool modern_header = false;
  std::string tiebreak;
};

int dispatch(const std::vector<std::string>& args) {
  CLI::App app{"test sets for integer programming in standard form"};
  app.require_subcommand(1);
  auto opts = std::make_shared<CommonOpts>();
  app.add_flag("--modern-header", opts->modern_header,
               "matrix files use a (nrows, ncols) header instead of (ncols, nrows)");

  std::string base, latte_path, table_path, output_path;
  std::vector<std::string> start_toks, rhs_toks, cell_toks, dim_toks, facet_specs,
      query_toks;
  bool vectors_only = false, use_lp = false, use_graver = false;

  CLI::App* c_groebner = app.add_subcommand("groebner", "write the Groebner basis of P and P.cost to P.gro");
  c_groebner->add_option("base", base)->required();
  c_groebner->add_option("--tiebreak", opts->tiebreak, "comma separated coordinate permutation, 1-based");

  CLI::App* c_hilbert = app.add_subcommand("hilbert", "write the Hilbert basis of P to P.hil");
  c_hilbert->add_option("base", base)->required();

  CLI::App* c_graver = app.add_subcommand("graver", "write the Graver basis of P to P.gra");
  c_graver->add_option("base", base)->required();

  CLI::App* c_minimize = app.add_subcommand("minimize", "solve one integer program; prints the optimum and its value");
  c_minimize->add_option("base", base);
  c_minimize->add_option("--start", start_toks, "feasible starting point");
  c_minimize->add_option("--rhs", rhs_toks, "right hand side (a feasible point is searched first)");
  c_minimize->add_option("--latte", latte_path, "LattE constraint file with a trailing cost row");
  c_minimize->add_option("--tiebreak", opts->tiebreak);

  CLI::App* c_cone = app.add_subcommand("cone", "print the Groebner cone inequalities of (P, P.cost)");
  c_cone->add_option("base", base)->required();
  c_cone->add_flag("--vectors", vectors_only, "print raw inequality normals instead");
  c_cone->add_option("--query", query_toks, "test whether a cost vector lies inside the cone");
  c_cone->add_option("--tiebreak", opts->tiebreak);

  CLI::App* c_maxopt = app.add_subcommand("maxopt", "write the maximally optimal points of (P, P.cost) to P.maxopt");
  c_maxopt->add_option("base", base)->required();
  c_maxopt->add_option("--tiebreak", opts->tiebreak);

  CLI::App* c_gap = app.add_subcommand("gap", "print the integer programming gap of (P, P.cost)");
  c_gap->add_option("base", base)->required();

  CLI::App* c_count = app.add_subcommand("count", "count the lattice points of one fiber");
  c_count->add_option("base", base);
  c_count->add_option("--rhs", rhs_toks);
  c_count->add_option("--latte", latte_path, "LattE constraint file");

  CLI::App* c_series = app.add_subcommand("series", "write the optimal-set series numerator of (P, P.cost) to P.series");
  c_series->add_option("base", base)->required();
  c_series->add_option("--tiebreak", opts->tiebreak);

  CLI::App* c_model = app.add_subcommand("model", "write the 0/1 marginal matrix of a hierarchical model");
  c_model->add_option("--dims", dim_toks)->required();
  c_model->add_option("--facets", facet_specs, "facets as comma separated 1-based indices")->required();
  c_model->add_option("--output", output_path)->required();

  CLI::App* c_bounds = app.add_subcommand("bounds", "table entry security bounds for one cell");
  c_bounds->add_option("--dims", dim_toks)->required();
  c_bounds->add_option("--facets", facet_specs)->required();
  c_bounds->add_option("--table", table_path)->required();
  c_bounds->add_option("--cell", cell_toks)->required();
  c_bounds->add_flag("--lp", use_lp, "real relaxation bounds instead of integer bounds");
  c_bounds->add_flag("--graver", use_graver, "use Graver augmentation instead of enumeration");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const bool modern = opts->modern_header;
  ProjectFiles files{base};

  auto load_order = [&]() {
    return order_for(read_cost(files.cost(), modern), opts->tiebreak);
  };

  if (c_groebner->parsed()) {
    IntMatrix a = read_matrix(files.matrix(), modern);
    GroebnerBasis g = groebner(a, load_order());
    write_basis(files.gro(), g.elements, a.cols(), modern);
    std::cerr << g.elements.size() << " elements written to " << files.gro() << "\n";
    return 0;
  }
  if (c_hilbert->parsed()) {
    IntMatrix a = read_matrix(files.matrix(), modern);
    HilbertBasis h = hilbert(a);
    write_basis(files.hil(), h.elements, a.cols(), modern);
    std::cerr << h.elements.size() << " elements written to " << files.hil() << "\n";
    return 0;
  }
  if (c_graver->parsed()) {
    IntMatrix a = read_matrix(files.matrix(), modern);
    GraverBasis gr = graver(a);
    write_basis(files.gra(), gr.elements, a.cols(), modern);
    std::cerr << gr.elements.size() << " elements written to " << files.gra() << "\n";
    return 0;
  }
  if (c_minimize->parsed()) {
    IntMatrix a(1, 1);
    IntVector cost;
    IntVector start;
    std::size_t report_vars = 0;
    if (!latte_path.empty()) {
      LatteSystem sys = read_latte(latte_path);
      if (!sys.cost)
        throw ParseError("latte file has no cost row; 'minimize' needs one");
      SlackSystem slack = slack_form(sys);
      a = slack.matrix;
      report_vars = slack.original_vars;
      cost = IntVector(a.cols());
      for (std::size_t j = 0; j < slack.original_vars; ++j) cost[j] = (*sys.cost)[j];
      auto feasible = find_feasible(Fiber{a, slack.rhs});
      if (!feasible) throw InfeasibleMarginalsError("no feasible solution");
      start = *feasible;
    } else {
      if (base.empty()) throw CLI::ValidationError("minimize", "need a base path or --latte");
      a = read_matrix(files.matrix(), modern);
      cost = read_cost(files.cost(), modern);
      report_vars = a.cols();
      if (!start_toks.empty()) {
        start = to_vector(start_toks);
      } else if (!rhs_toks.empty()) {
        auto feasible = find_feasible(Fiber{a, to_vector(rhs_toks)});
        if (!feasible) throw InfeasibleMarginalsError("no feasible solution");
        start = *feasible;
      } else {
        throw CLI::ValidationError("minimize", "need --start, --rhs, or --latte");
      }
    }
    GroebnerBasis g = groebner(a, order_for(cost, opts->tiebreak));
    IntVector best = reduce(start, g);
    IntVector shown(report_vars);
    for (std::size_t j = 0; j < report_vars; ++j) shown[j] = best[j];
    std::cout << join(shown) << "\n" << cost.dot(best) << "\n";
    return 0;
  }
  if (c_cone->parsed()) {
    IntMatrix a = read_matrix(files.matrix(), modern);
    GroebnerBasis g = groebner(a, load_order());
    if (!query_toks.empty()) {
      bool inside = cone_contains(groebner_cone(g), to_vector(query_toks));
      std::cout << (inside ? "inside" : "outside") << "\n";
      return 0;
    }
    for (const IntVector& normal : groebner_cone(g)) {
      if (vectors_only) {
        std::cout << join(normal) << "\n";
        continue;
      }
      std::ostringstream lhs, rhs;
      bool lfirst = true, rfirst = true;
      for (std::size_t i = 0; i < normal.size(); ++i) {
        if (normal[i] == 0) continue;
        std::ostringstream& side = normal[i] > 0 ? lhs : rhs;
        bool& first = normal[i] > 0 ? lfirst : rfirst;
        if (!first) side << " + ";
        first = false;
        Int coeff = abs_int(normal[i]);
        if (coeff != 1) side << coeff << " ";
        side << "c" << i + 1;
      }
      std::cout << (lfirst ? "0" : lhs.str()) << " > " << (rfirst ? "0" : rhs.str())
                << "\n";
    }
    return 0;
  }
  if (c_maxopt->parsed()) {
    IntMatrix a = read_matrix(files.matrix(), modern);
    GroebnerBasis g = groebner(a, load_order());
    std::vector<MaxOptimal> points = maximally_optimal(initial_ideal(g));
    write_file(files.maxopt(), format_maxopt(points, a.cols()));
    std::cerr << points.size() << " points written to " << files.maxopt() << "\n";
    return 0;
  }
  if (c_gap->parsed()) {
    IntMatrix a = read_matrix(files.matrix(), modern);
    IntVector cost = read_cost(files.cost(), modern);
    std::cout << ip_gap(a, cost) << "\n";
    return 0;
  }
  if (c_count->parsed()) {
    if (!latte_path.empty()) {
      LatteSystem sys = read_latte(latte_path);
      SlackSystem slack = slack_form(sys);
      std::cout << count_feasible(Fiber{slack.matrix, slack.rhs}) << "\n";
      return 0;
    }
    if (base.empty() || rhs_toks.empty())
      throw CLI::ValidationError("count", "need a base path with --rhs, or --latte");
    IntMatrix a = read_matrix(files.matrix(), modern);
    std::cout << count_feasible(Fiber{a, to_vector(rhs_toks)}) << "\n";
    return 0;
  }
  if (c_series->parsed()) {
    IntMatrix a = read_matrix(files.matrix(), modern);
    GroebnerBasis g = groebner(a, load_order());
    Polynomial num = hilbert_numerator(initial_ideal(g));
    write_file(files.series(), format_polynomial(num, a.cols()));
    std::cerr << num.terms.size() << " terms written to " << files.series() << "\n";
    return 0;
  }
  if (c_model->parsed() || c_bounds->parsed()) {
    TableShape shape;
    for (const std::string& t : dim_toks) shape.dims.push_back(std::stoul(t));
    HierarchicalModel model{shape, {}};
    for (const std::string& spec : facet_specs) {
      std::vector<std::size_t> facet;
      std::istringstream in(spec);
      std::string tok;
      while (std::getline(in, tok, ',')) facet.push_back(std::stoul(tok));
      model.facets.push_back(std::move(facet));
    }
    if (c_model->parsed()) {
      write_matrix(output_path, model_matrix(model), modern);
      return 0;
    }
    Table table = read_table(table_path, shape);
    std::vector<std::size_t> cell;
    for (const std::string& t : cell_toks) cell.push_back(std::stoul(t));
    if (use_lp) {
      auto [lo, hi] = lp_table_bounds(model, marginals(table, model), cell);
      std::cout << lo << " " << hi << "\n";
    } else {
      RatVector rb = marginals(table, model);
      IntVector b(rb.size());
      for (std::size_t i = 0; i < rb.size(); ++i) {
        if (denominator(rb[i]) != 1)
          throw ParseError("integer bounds need an integer table");
        b[i] = Int(numerator(rb[i]));
      }
      auto backend = use_graver ? BoundsBackend::graver : BoundsBackend::enumerate;
      auto [lo, hi] = table_bounds(model, b, cell, backend);
      std::cout << lo << " " << hi << "\n";
    }
    return 0;
  }
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  try {
    return dispatch(args);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ipts
