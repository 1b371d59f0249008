#include <fstream>
#include <memory>
#include <random>
#include <sstream>

#include "prlab/embed.hpp"
#include "prlab/error.hpp"
#include "prlab/folkman.hpp"
#include "prlab/matrix.hpp"
#include "prlab/omega.hpp"
#include "prlab/polyreg.hpp"
#include "prlab/rado.hpp"
#include "prlab/search.hpp"
#include "report.hpp"

namespace prlab::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Integer> parse_integer_list(const std::string& text) {
  std::vector<Integer> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) throw ParseError(0, "empty entry in list '" + text + "'");
    out.push_back(parse_integer(item.substr(b, item.find_last_not_of(" \t") - b + 1)));
  }
  if (out.empty()) throw ParseError(0, "empty list");
  return out;
}

std::vector<unsigned> parse_positive_list(const std::string& text) {
  std::vector<unsigned> out;
  for (const auto& v : parse_integer_list(text)) {
    auto small = to_int64(v);
    if (!small || *small < 1 || *small > 1000) throw Error("exponents must lie in [1, 1000]");
    out.push_back(static_cast<unsigned>(*small));
  }
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

json jcoloring(const Coloring& c) {
  json j;
  j["lo"] = c.lo();
  j["colors"] = c.colors();
  return j;
}

std::string color_classes(const Coloring& c) {
  std::vector<std::string> parts;
  for (int k = 1; k <= c.num_colors(); ++k) {
    std::vector<std::int64_t> xs;
    for (auto x = c.lo(); x <= c.hi(); ++x) {
      if (c(x) == k) xs.push_back(x);
    }
    parts.push_back(to_string(FiniteSet(xs)));
  }
  return join(parts, "/");
}

std::string tuple_text(const std::vector<std::int64_t>& xs) {
  std::vector<std::string> parts;
  for (auto x : xs) parts.push_back(std::to_string(x));
  return "(" + join(parts, ",") + ")";
}

json jverdict(const polyreg::PrVerdict& v) {
  json j;
  j["status"] = polyreg::to_string(v.status);
  j["rule"] = v.rule;
  j["reason"] = v.reason;
  j["reduct"] = v.reduct ? json(to_string(*v.reduct)) : json(nullptr);
  j["exclusive_set"] = v.exclusive_set;
  j["zero_sum_subset"] = v.zero_sum_subset;
  j["blocking_prime"] = v.blocking_prime ? json(*v.blocking_prime) : json(nullptr);
  return j;
}

int status_exit(polyreg::Status s) {
  switch (s) {
    case polyreg::Status::ipr_certified:
    case polyreg::Status::pr_certified: return kPositive;
    case polyreg::Status::not_pr_certified: return kNegative;
    case polyreg::Status::unknown: return kUnknown;
  }
  return kUnknown;
}

/// Shared --poly / --matrix / --ap / --injective options.
struct SystemArgs {
  std::string poly;
  std::string matrix_file;
  unsigned ap = 0;
  bool injective = false;

  void add(CLI::App* app) {
    auto* p = app->add_option("--poly", poly, "Polynomial equation P = 0");
    auto* m = app->add_option("--matrix", matrix_file, "File with an integer matrix (system Ax = 0)");
    auto* a = app->add_option("--ap", ap, "k-term arithmetic progressions")->check(CLI::Range(3u, 64u));
    p->excludes(m)->excludes(a);
    m->excludes(a);
    app->add_flag("--injective", injective, "Require pairwise distinct values");
  }

  search::SolutionSystem build() const {
    if (!poly.empty()) return search::SolutionSystem::from_poly(parse_poly(poly), injective);
    if (!matrix_file.empty()) return search::SolutionSystem::from_matrix(parse_matrix(read_file(matrix_file)), injective);
    if (ap) return search::SolutionSystem::arithmetic_progression(ap);
    throw Error("give one of --poly, --matrix or --ap");
  }
};

using Out = std::vector<Command>;

CLI::App* leaf(CLI::App& parent, Out& out, const std::string& name, const std::string& verb,
               const std::string& help, std::function<void(Report&)> run) {
  auto* sub = parent.add_subcommand(name, help);
  out.push_back({sub, verb, std::move(run)});
  return sub;
}

// ---------------------------------------------------------------- rado

void register_rado(CLI::App& root, Out& out) {
  {
    auto file = std::make_shared<std::string>();
    auto* sub = leaf(root, out, "check-matrix", "check-matrix", "Columns condition for an integer matrix",
                     [file](Report& r) {
                       auto m = parse_matrix(read_file(*file));
                       auto v = rado::columns_condition(m);
                       r.provenance = "columns condition: ordered block partition search with exact rational span tests";
                       r.bounds["max_columns"] = rado::kMaxColumns;
                       r.result["rows"] = m.rows();
                       r.result["cols"] = m.cols();
                       r.result["reachable_columns"] = v.reachable_columns;
                       if (!v.satisfied) {
                         r.verdict = "not_satisfied";
                         r.exit = kNegative;
                         r.line("reachable columns: " + std::to_string(v.reachable_columns.size()) + " of " +
                                std::to_string(m.cols()));
                         return;
                       }
                       r.verdict = "satisfied";
                       json blocks = json::array();
                       for (std::size_t t = 0; t < v.certificate->blocks.size(); ++t) {
                         json b;
                         json cols = json::array();
                         std::vector<std::string> names;
                         for (auto c : v.certificate->blocks[t]) {
                           cols.push_back(c + 1);
                           names.push_back("c" + std::to_string(c + 1));
                         }
                         b["columns"] = cols;
                         json comb = json::array();
                         std::vector<std::string> terms;
                         for (const auto& [c, q] : v.certificate->combinations[t]) {
                           comb.push_back({{"column", c + 1}, {"coefficient", to_string(q)}});
                           terms.push_back(to_string(q) + "*c" + std::to_string(c + 1));
                         }
                         b["combination"] = comb;
                         blocks.push_back(b);
                         r.line("B" + std::to_string(t + 1) + " = {" + join(names, ",") + "}" +
                                (t == 0 ? " sums to 0" : " sums to " + (terms.empty() ? "0" : join(terms, " + "))));
                       }
                       r.certificate = {{"blocks", blocks},
                                        {"verified", rado::verify_certificate(m, *v.certificate)}};
                     });
    sub->add_option("file", *file, "Matrix file")->required();
  }
  {
    auto text = std::make_shared<std::string>();
    auto* sub = leaf(root, out, "check-linear", "check-linear", "Partition regularity of a linear equation",
                     [text](Report& r) {
                       auto v = rado::linear_pr(parse_poly(*text));
                       r.provenance = "single-equation criterion: PR iff some nonempty coefficient subset sums to 0";
                       r.result["variables"] = v.variables;
                       r.result["coefficients"] = jints(v.coefficients);
                       if (v.pr) {
                         r.verdict = "PR";
                         std::vector<std::string> names;
                         for (auto i : v.subset) names.push_back(v.variables[i]);
                         r.certificate = {{"subset", names}};
                         r.line("J = {" + join(names, ",") + "}");
                       } else {
                         r.verdict = "not_PR";
                         r.exit = kNegative;
                         r.certificate = {{"blocking_prime", *v.blocking_prime}};
                         r.line("blocking prime: " + std::to_string(*v.blocking_prime));
                       }
                     });
    sub->add_option("poly", *text, "Homogeneous linear polynomial")->required();
  }
  {
    auto text = std::make_shared<std::string>();
    auto* sub = leaf(root, out, "check-affine", "check-affine", "Partition regularity of a linear equation with constant",
                     [text](Report& r) {
                       auto v = rado::affine_pr(parse_poly(*text));
                       r.provenance = "affine criterion: constant solution k >= 1, or integer root z plus a zero-sum subset";
                       r.result["coefficient_sum"] = jint(v.coefficient_sum);
                       r.result["constant"] = jint(v.constant);
                       r.result["k_excludes_zero"] = v.k_excludes_zero;
                       switch (v.kind) {
                         case rado::AffineVerdict::Kind::constant_solution:
                           r.verdict = "PR";
                           r.certificate = {{"rule", "constant_solution"}, {"k", jint(*v.k)}};
                           r.line("constant solution k = " + to_string(*v.k));
                           break;
                         case rado::AffineVerdict::Kind::shifted_zero_sum:
                           r.verdict = "PR";
                           r.certificate = {{"rule", "shifted_zero_sum"}, {"z", jint(*v.z)}, {"subset", v.subset}};
                           r.line("z = " + to_string(*v.z) + ", zero-sum subset of size " +
                                  std::to_string(v.subset.size()));
                           break;
                         case rado::AffineVerdict::Kind::not_pr:
                           r.verdict = "not_PR";
                           r.exit = kNegative;
                           break;
                       }
                     });
    sub->add_option("poly", *text, "Linear polynomial with nonzero constant")->required();
  }
  {
    auto p = std::make_shared<std::uint64_t>(), n = std::make_shared<std::uint64_t>();
    auto* sub = leaf(root, out, "smod", "smod", "Color of n in the smod(p) coloring", [p, n](Report& r) {
      auto c = rado::smod(*p, *n);
      r.verdict = "color";
      r.provenance = "n = a * p^k with gcd(a, p) = 1 has color a mod p";
      r.result["p"] = *p;
      r.result["n"] = *n;
      r.result["color"] = c;
      r.line("smod(" + std::to_string(*p) + ", " + std::to_string(*n) + ") = " + std::to_string(c));
    });
    sub->add_option("p", *p, "Prime")->required();
    sub->add_option("n", *n, "Positive integer")->required();
  }
  {
    auto list = std::make_shared<std::string>();
    auto* sub = leaf(root, out, "blocking-prime", "blocking-prime", "Smallest prime dividing no subset sum",
                     [list](Report& r) {
                       auto c = parse_integer_list(*list);
                       auto p = rado::blocking_prime(c);
                       r.provenance = "smallest prime dividing no nonzero subset sum";
                       r.result["coefficients"] = jints(c);
                       if (p) {
                         r.verdict = "prime";
                         r.result["prime"] = *p;
                         r.line("p = " + std::to_string(*p));
                       } else {
                         r.verdict = "none";
                         r.exit = kNegative;
                         auto j = rado::zero_sum_subset(c);
                         r.certificate = {{"zero_sum_subset", *j}};
                         r.line("a nonempty subset sums to 0");
                       }
                     });
    sub->add_option("coefficients", *list, "Comma-separated nonzero integers")->required();
  }
  {
    struct A {
      std::string poly, subset;
    };
    auto a = std::make_shared<A>();
    auto* sub = leaf(root, out, "parametric", "parametric", "Two-parameter solution family from a zero-sum subset",
                     [a](Report& r) {
                       auto p = parse_poly(a->poly);
                       std::vector<std::size_t> j;
                       for (const auto& v : parse_integer_list(a->subset)) {
                         auto small = to_int64(v);
                         if (!small || *small < 1) throw Error("subset indices are 1-based positive integers");
                         j.push_back(static_cast<std::size_t>(*small - 1));
                       }
                       auto s = rado::parametric_solution(p, j);
                       r.verdict = "verified";
                       r.provenance = "Bezout coefficients over the zero-sum subset; identity checked symbolically";
                       json assign = json::object();
                       for (std::size_t i = 0; i < s.variables.size(); ++i) {
                         assign[s.variables[i]] = to_string(s.assignment[i]);
                         r.line(s.variables[i] + " = " + to_string(s.assignment[i]));
                       }
                       std::vector<std::size_t> one_based;
                       for (auto i : s.subset) one_based.push_back(i + 1);
                       r.result = {{"variables", s.variables}, {"subset", one_based},     {"c", jint(s.c)},
                                   {"d", jint(s.d)},           {"m", jint(s.m)},          {"z", jint(s.z)},
                                   {"bezout", jints(s.bezout)}, {"offsets", jints(s.offsets)}, {"assignment", assign}};
                       r.line("c = " + to_string(s.c) + ", d = " + to_string(s.d) + ", m = " + to_string(s.m) +
                              ", z = " + to_string(s.z));
                     });
    sub->add_option("poly", a->poly, "Homogeneous linear polynomial")->required();
    sub->add_option("--subset", a->subset, "1-based indices of a zero-sum subset, in presentation order")->required();
  }
}

// ---------------------------------------------------------------- search

void register_search(CLI::App& root, const Globals& g, Out& out) {
  auto* grp = root.add_subcommand("search", "Exhaustive coloring search");
  grp->require_subcommand(1);
  {
    struct A {
      SystemArgs sys;
      std::int64_t n = 0;
      int r = 2;
    };
    auto a = std::make_shared<A>();
    auto* sub = leaf(*grp, out, "good-coloring", "search good-coloring", "Good r-coloring of [1, n]",
                     [a, &g](Report& r) {
                       auto s = a->sys.build();
                       search::SearchOptions opt{g.max_nodes, g.threads};
                       auto o = search::good_coloring(s, a->n, a->r, opt);
                       r.provenance = "complete backtracking over colorings of 1..n with lexicographically least result";
                       r.bounds = {{"n", a->n}, {"r", a->r}, {"max_nodes", g.max_nodes}};
                       r.result = {{"system", s.label}, {"nodes", o.nodes}};
                       switch (o.status) {
                         case search::SearchOutcome::Status::good_coloring:
                           r.verdict = "good_coloring";
                           r.certificate = jcoloring(*o.coloring);
                           r.line("coloring: " + to_string(*o.coloring));
                           r.line("classes: " + color_classes(*o.coloring));
                           break;
                         case search::SearchOutcome::Status::forced:
                           r.verdict = "forced";
                           r.exit = kNegative;
                           r.line("every " + std::to_string(a->r) + "-coloring of [1," + std::to_string(a->n) +
                                  "] has a monochromatic solution");
                           break;
                         case search::SearchOutcome::Status::node_limit:
                           r.verdict = "node_limit";
                           r.exit = kUnknown;
                           break;
                       }
                       r.line("nodes: " + std::to_string(o.nodes));
                     });
    a->sys.add(sub);
    sub->add_option("-n", a->n, "Interval [1, n]")->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{100000}));
    sub->add_option("-r", a->r, "Number of colors")->required()->check(CLI::Range(1, 64));
  }
  {
    struct A {
      SystemArgs sys;
      std::int64_t max = 0;
      int r = 2;
    };
    auto a = std::make_shared<A>();
    auto* sub = leaf(*grp, out, "forcing-number", "search forcing-number", "Least n forcing a monochromatic solution",
                     [a, &g](Report& r) {
                       auto s = a->sys.build();
                       search::SearchOptions opt{g.max_nodes, g.threads};
                       auto f = search::forcing_number(s, a->r, a->max, opt);
                       r.provenance = "complete backtracking for n = 1, 2, ... up to the bound";
                       r.bounds = {{"max", a->max}, {"r", a->r}, {"max_nodes", g.max_nodes}};
                       r.result = {{"system", s.label}, {"nodes", f.nodes}};
                       r.result["n"] = f.n ? json(*f.n) : json(nullptr);
                       if (f.last_good) {
                         r.certificate = jcoloring(*f.last_good);
                         r.line("good coloring of [1," + std::to_string(f.last_good->hi()) +
                                "]: " + color_classes(*f.last_good));
                       }
                       if (f.node_limit) {
                         r.verdict = "node_limit";
                         r.exit = kUnknown;
                       } else if (f.n) {
                         r.verdict = "forced";
                         r.lines.insert(r.lines.begin(), "forcing number: " + std::to_string(*f.n));
                       } else {
                         r.verdict = "none_within_bounds";
                         r.exit = kUnknown;
                       }
                     });
    a->sys.add(sub);
    sub->add_option("-r", a->r, "Number of colors")->required()->check(CLI::Range(1, 64));
    sub->add_option("--max", a->max, "Largest n to try")->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{100000}));
  }
  {
    struct A {
      SystemArgs sys;
      std::string file;
    };
    auto a = std::make_shared<A>();
    auto* sub = leaf(*grp, out, "witness", "search witness", "Least monochromatic solution under a coloring",
                     [a](Report& r) {
                       auto s = a->sys.build();
                       auto c = parse_coloring(read_file(a->file));
                       auto w = search::mono_witness(c, s);
                       r.provenance = "exhaustive scan of solutions inside the coloring's domain";
                       r.bounds = {{"domain", {c.lo(), c.hi()}}};
                       r.result = {{"system", s.label}, {"variables", s.variables}};
                       if (w) {
                         r.verdict = "monochromatic";
                         r.certificate = {{"assignment", *w}, {"color", c((*w)[0])}};
                         r.line("witness: " + tuple_text(*w) + " with color " + std::to_string(c((*w)[0])));
                       } else {
                         r.verdict = "none";
                         r.exit = kNegative;
                       }
                     });
    a->sys.add(sub);
    sub->add_option("--coloring", a->file, "Coloring file")->required();
  }

  auto* vdw = root.add_subcommand("vdw", "Van der Waerden tools");
  vdw->require_subcommand(1);
  {
    struct A {
      std::string file;
      unsigned random = 0;
    };
    auto a = std::make_shared<A>();
    auto* sub = leaf(*vdw, out, "extract325", "vdw extract325", "Monochromatic 3-AP in a 2-coloring of [0,324]",
                     [a, &g](Report& r) {
                       r.provenance = "block pigeonhole over 65 blocks of 5 (first 33 blocks examined)";
                       auto check = [](const Coloring& c, const search::Progression3& p) {
                         const auto& t = p.terms;
                         return t[1] > t[0] && t[2] - t[1] == t[1] - t[0] && c(t[0]) == c(t[1]) && c(t[1]) == c(t[2]);
                       };
                       if (a->random) {
                         std::mt19937_64 rng(g.seed);
                         unsigned ok = 0;
                         for (unsigned i = 0; i < a->random; ++i) {
                           std::vector<int> col(325);
                           for (auto& x : col) x = 1 + static_cast<int>(rng() & 1);
                           Coloring c(0, col);
                           if (check(c, search::vdw325_extract(c))) ++ok;
                         }
                         r.verdict = ok == a->random ? "all_valid" : "invalid_output";
                         r.exit = ok == a->random ? kPositive : kNegative;
                         r.bounds = {{"colorings", a->random}, {"seed", g.seed}};
                         r.result = {{"checked", a->random}, {"valid", ok}};
                         r.line(std::to_string(ok) + " of " + std::to_string(a->random) + " outputs validated");
                         return;
                       }
                       if (a->file.empty()) throw Error("give --coloring or --random");
                       auto c = parse_coloring(read_file(a->file), 0);
                       auto p = search::vdw325_extract(c);
                       r.verdict = check(c, p) ? "found" : "invalid_output";
                       r.exit = check(c, p) ? kPositive : kNegative;
                       r.result = {{"terms", p.terms}, {"rule", p.rule}, {"color", c(p.terms[0])}};
                       r.line("progression: " + tuple_text({p.terms.begin(), p.terms.end()}) + " (" + p.rule + ")");
                     });
    sub->add_option("--coloring", a->file, "Coloring file: 325 colors for 0..324");
    sub->add_option("--random", a->random, "Check this many random colorings instead (uses --seed)");
  }
}

// ---------------------------------------------------------------- folkman

void register_folkman(CLI::App& root, Out& out) {
  auto* grp = root.add_subcommand("folkman", "Finite sums");
  grp->require_subcommand(1);
  {
    auto set = std::make_shared<std::string>();
    auto* sub = leaf(*grp, out, "fs", "folkman fs", "All finite sums of a set", [set](Report& r) {
      auto s = parse_finite_set(*set);
      auto f = folkman::fs(s);
      r.verdict = "computed";
      r.provenance = "sums over all nonempty subsets";
      r.bounds["max_size"] = folkman::kMaxFsSize;
      r.result = {{"set", jset(s)}, {"fs", jset(f)}, {"size", f.size()}};
      r.line("FS = " + to_string(f));
    });
    sub->add_option("set", *set, "Comma-separated integers")->required();
  }
  {
    struct A {
      int n = 0;
      bool check = false;
    };
    auto a = std::make_shared<A>();
    auto* sub = leaf(*grp, out, "matrix", "folkman matrix", "Folkman matrix for n generators", [a](Report& r) {
      auto m = folkman::folkman_matrix(a->n);
      r.verdict = "computed";
      r.provenance = "rows indexed by nonempty subsets ordered by size, then lexicographically";
      json rows = json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(jints(m.row(i)));
      r.result = {{"n", a->n}, {"rows", rows}};
      std::istringstream text(to_string(m));
      for (std::string l; std::getline(text, l);) r.line(l);
      if (a->check) {
        auto v = rado::columns_condition(m);
        r.verdict = v.satisfied ? "satisfied" : "not_satisfied";
        r.exit = v.satisfied ? kPositive : kNegative;
        r.result["columns_condition"] = v.satisfied;
        r.line(std::string("columns condition: ") + (v.satisfied ? "satisfied" : "not satisfied"));
      }
    });
    sub->add_option("n", a->n, "Number of generators")->required();
    sub->add_flag("--check", a->check, "Also run the columns condition");
  }
  {
    struct A {
      std::string file, set;
    };
    auto a = std::make_shared<A>();
    auto* sub = leaf(*grp, out, "weak-mono", "folkman weak-mono", "Every sum colored like its largest summand",
                     [a](Report& r) {
                       auto c = parse_coloring(read_file(a->file));
                       auto s = parse_finite_set(a->set);
                       bool ok = folkman::weakly_monochromatic(c, s);
                       r.verdict = ok ? "weakly_monochromatic" : "not_weakly_monochromatic";
                       r.exit = ok ? kPositive : kNegative;
                       r.provenance = "checks every nonempty subset sum against its largest summand";
                       r.result = {{"set", jset(s)}, {"value", ok}};
                     });
    sub->add_option("--coloring", a->file, "Coloring file")->required();
    sub->add_option("--set", a->set, "Comma-separated positive integers")->required();
  }
}

// ---------------------------------------------------------------- poly

void register_poly(CLI::App& root, Out& out) {
  auto* grp = root.add_subcommand("poly", "Nonlinear partition regularity");
  grp->require_subcommand(1);
  auto simple = [&](const std::string& name, const std::string& help, std::function<void(const Poly&, Report&)> f) {
    auto text = std::make_shared<std::string>();
    auto* sub = leaf(*grp, out, name, "poly " + name, help, [text, f](Report& r) { f(parse_poly(*text), r); });
    sub->add_option("poly", *text, "Polynomial")->required();
  };
  simple("reduct", "Linear polynomial on the monomial coefficients", [](const Poly& p, Report& r) {
    auto q = polyreg::reduct(p);
    r.verdict = "computed";
    r.provenance = "coefficients of the monomials in presentation order on fresh variables y1..yk";
    r.result = {{"reduct", to_string(q)}};
    r.line("Red(P) = " + to_string(q));
  });
  simple("exclusive", "Sets of exclusive variables", [](const Poly& p, Report& r) {
    auto sets = polyreg::exclusive_sets(p);
    r.verdict = sets.empty() ? "none" : "found";
    r.exit = sets.empty() ? kNegative : kPositive;
    r.provenance = "one variable per monomial occurring in no other monomial";
    r.result = {{"sets", sets}};
    for (const auto& s : sets) r.line("{" + join(s, ",") + "}");
  });
  simple("check", "Sufficient and necessary partition regularity tests", [](const Poly& p, Report& r) {
    auto s = polyreg::sufficient_ipr(p);
    auto n = polyreg::necessary_check(p);
    polyreg::Status status = polyreg::Status::unknown;
    if (s.status == polyreg::Status::ipr_certified) {
      status = s.status;
    } else if (n.status == polyreg::Status::not_pr_certified) {
      status = n.status;
    }
    r.verdict = polyreg::to_string(status);
    r.exit = status_exit(status);
    r.provenance = "sufficient: partial degree 1, exclusive variables, PR reduct; necessary: homogeneous with PR reduct";
    r.result = {{"sufficient", jverdict(s)}, {"necessary", jverdict(n)}};
    r.line("sufficient: " + polyreg::to_string(s.status) + (s.reason.empty() ? "" : " (" + s.reason + ")"));
    r.line("necessary: " + polyreg::to_string(n.status) + (n.reason.empty() ? "" : " (" + n.reason + ")"));
  });
  simple("reciprocal", "(prod x_i^d) * P(1/x)", [](const Poly& p, Report& r) {
    auto q = polyreg::reciprocal(p);
    r.verdict = "computed";
    r.provenance = "reciprocal of a homogeneous polynomial; injective partition regularity transfers";
    r.result = {{"reciprocal", to_string(q)}};
    r.line(to_string(q));
  });
  simple("invariance", "Translation, dilation, additive and multiplicative checks", [](const Poly& p, Report& r) {
    auto f = polyreg::invariance(p);
    r.verdict = "computed";
    r.provenance = "exact polynomial identities";
    r.result = {{"translation", f.translation},
                {"dilation", f.dilation},
                {"additive", f.additive},
                {"multiplicative", f.multiplicative}};
    for (const auto& [k, v] : r.result.items()) r.line(k + ": " + (v.get<bool>() ? "yes" : "no"));
  });
  {
    struct A {
      std::string poly;
      bool negate = false;
      unsigned power = 0;
    };
    auto a = std::make_shared<A>();
    auto* sub = leaf(*grp, out, "transform", "poly transform", "Substitute -x or x^z", [a](Report& r) {
      auto p = parse_poly(a->poly);
      auto t = a->negate ? polyreg::transform(p, polyreg::TransformKind::negate_vars)
                         : polyreg::transform(p, polyreg::TransformKind::power, a->power);
      r.verdict = "computed";
      r.provenance = t.rule;
      r.result = {{"poly", to_string(t.poly)}, {"domain", t.domain}};
      r.line(to_string(t.poly) + "   (partition regularity transfers over " + t.domain + ")");
    });
    sub->add_option("poly", a->poly, "Polynomial")->required();
    auto* neg = sub->add_flag("--negate", a->negate, "P(-x1, ..., -xn)");
    auto* pow = sub->add_option("--power", a->power, "P(x1^z, ..., xn^z)")->check(CLI::Range(1u, 64u));
    neg->excludes(pow);
    sub->callback([sub, neg, pow] {
      if (neg->count() + pow->count() != 1) throw CLI::ValidationError("transform", "give --negate or --power");
      (void)sub;
    });
  }
  {
    struct A {
      std::string linear, subsets;
      int n = 0;
    };
    auto a = std::make_shared<A>();
    auto* sub = leaf(*grp, out, "construct3513", "poly construct3513", "sum a_i x_i Q_{F_i}(y) from a PR linear form",
                     [a](Report& r) {
                       std::vector<std::vector<int>> subsets;
                       for (const auto& part : split(a->subsets, '|')) {
                         std::vector<int> f;
                         if (!part.empty()) {
                           for (const auto& v : parse_integer_list(part)) {
                             auto small = to_int64(v);
                             if (!small) throw Error("subset element out of range");
                             f.push_back(static_cast<int>(*small));
                           }
                         }
                         subsets.push_back(f);
                       }
                       auto c = polyreg::construct_3513(parse_poly(a->linear), subsets, a->n);
                       r.verdict = polyreg::to_string(c.verdict.status);
                       r.exit = status_exit(c.verdict.status);
                       r.provenance = "products of y_j over given index sets multiplied into a PR linear form";
                       r.result = {{"poly", to_string(c.poly)}, {"verdict", jverdict(c.verdict)}};
                       r.line(to_string(c.poly));
                     });
    sub->add_option("--linear", a->linear, "Homogeneous linear polynomial")->required();
    sub->add_option("--subsets", a->subsets, "Subsets of 1..n separated by '|', e.g. \"1,2|3||1\"")->required();
    sub->add_option("-n", a->n, "Number of y variables")->required();
  }
  {
    struct A {
      std::string left, right;
    };
    auto a = std::make_shared<A>();
    auto* sub = leaf(*grp, out, "expsum", "poly expsum", "x1^n1...xh^nh - y1^m1...yk^mk", [a](Report& r) {
      auto l = parse_positive_list(a->left), rt = parse_positive_list(a->right);
      auto v = polyreg::exp_sum_ipr(l, rt);
      r.verdict = polyreg::to_string(v.status);
      r.exit = status_exit(v.status);
      r.provenance = "equal exponent sums with at least three variables";
      r.result = {{"poly", to_string(polyreg::exp_sum_poly(l, rt))}, {"verdict", jverdict(v)}};
      r.line(to_string(polyreg::exp_sum_poly(l, rt)));
      if (!v.reason.empty()) r.line(v.reason);
    });
    sub->add_option("--left", a->left, "Exponents n1,...,nh")->required();
    sub->add_option("--right", a->right, "Exponents m1,...,mk")->required();
  }
}

// ---------------------------------------------------------------- omega

void register_omega(CLI::App& root, Out& out) {
  using namespace prlab::omega;
  auto* grp = root.add_subcommand("omega", "Star-iterate term calculus");
  grp->require_subcommand(1);
  {
    auto text = std::make_shared<std::string>();
    auto* sub = leaf(*grp, out, "eval", "omega eval", "Canonical form and height", [text](Report& r) {
      auto t = parse_term(*text);
      auto f = canonical(t);
      r.verdict = "computed";
      r.provenance = "stars pushed to atoms, sums and products expanded";
      r.result = {{"canonical", to_string(f)}, {"height", height(f)}};
      r.line("canonical: " + to_string(f));
      r.line("height: " + std::to_string(height(f)));
    });
    sub->add_option("term", *text, "Term")->required();
  }
  {
    struct A {
      std::string a, b;
    };
    auto a = std::make_shared<A>();
    auto* sub = leaf(*grp, out, "eq", "omega eq", "Equality of canonical forms", [a](Report& r) {
      auto s = parse_term(a->a), t = parse_term(a->b);
      bool eq = term_eq(s, t);
      r.verdict = eq ? "equal" : "different";
      r.exit = eq ? kPositive : kNegative;
      r.provenance = "comparison of canonical forms";
      r.result = {{"left", to_string(canonical(s))}, {"right", to_string(canonical(t))}};
      r.line(to_string(canonical(s)) + (eq ? " == " : " != ") + to_string(canonical(t)));
    });
    sub->add_option("t1", a->a, "Term")->required();
    sub->add_option("t2", a->b, "Term")->required();
  }
  {
    auto text = std::make_shared<std::string>();
    auto* sub = leaf(*grp, out, "tensorized", "omega tensorized", "Tensorized tuple of terms", [text](Report& r) {
      std::vector<Term> terms;
      for (const auto& part : split(*text, ';')) terms.push_back(parse_term(part));
      auto t = tensorized(terms);
      r.verdict = "computed";
      r.provenance = "component i shifted by the sum of the heights before it";
      json comps = json::array();
      std::vector<std::string> texts;
      for (const auto& x : t) {
        comps.push_back(to_string(canonical(x)));
        texts.push_back(to_string(canonical(x)));
      }
      r.result = {{"components", comps}};
      r.line("(" + join(texts, ", ") + ")");
    });
    sub->add_option("terms", *text, "Terms separated by ';'")->required();
  }
  {
    struct A {
      std::string a, b;
    };
    auto a = std::make_shared<A>();
    auto* sub = leaf(*grp, out, "rpair", "omega rpair", "Tensor pair relation", [a](Report& r) {
      auto s = parse_term(a->a), t = parse_term(a->b);
      bool ok = tensor_pair_R(s, t);
      r.verdict = ok ? "related" : "not_related";
      r.exit = ok ? kPositive : kNegative;
      r.provenance = "second term natural or all its indeterminates at depth >= height of the first";
      r.result = {{"height_left", height(s)}, {"value", ok}};
    });
    sub->add_option("t1", a->a, "Term")->required();
    sub->add_option("t2", a->b, "Term")->required();
  }
  {
    struct A {
      std::string c, d;
      bool ledger = false;
    };
    auto a = std::make_shared<A>();
    auto* sub = leaf(*grp, out, "verify354", "omega verify354",
                     "Coefficient tables for sum c_i x_i = sum d_j y_j, checked symbolically", [a](Report& r) {
                       auto c = parse_integer_list(a->c), d = parse_integer_list(a->d);
                       auto t = verify_tables(c, d);
                       const bool ok = t.zero_check && t.distinct_check;
                       r.verdict = ok ? "verified" : "failed";
                       r.exit = ok ? kPositive : kNegative;
                       r.provenance = "xi_i = beta_i heart gamma, eta_j = beta heart gamma_j over one atom";
                       json tb = json::array(), tg = json::array();
                       for (const auto& row : t.table_beta) tb.push_back(jints(row));
                       for (const auto& row : t.table_gamma) tg.push_back(jints(row));
                       json xi = json::array(), eta = json::array();
                       for (const auto& x : t.xi) xi.push_back(to_string(canonical(x)));
                       for (const auto& x : t.eta) eta.push_back(to_string(canonical(x)));
                       json ledger = json::array();
                       for (const auto& e : t.ledger) {
                         ledger.push_back({{"indeterminate", to_string(e.indet)},
                                           {"summands", jints(e.summands)},
                                           {"total", jint(e.total)},
                                           {"text", e.text}});
                       }
                       r.result = {{"table_beta", tb},          {"table_gamma", tg},
                                   {"beta", to_string(canonical(t.beta))}, {"gamma", to_string(canonical(t.gamma))},
                                   {"xi", xi},                   {"eta", eta},
                                   {"zero_check", t.zero_check}, {"distinct_check", t.distinct_check},
                                   {"degenerate_side", t.degenerate_side}};
                       r.certificate = {{"ledger", ledger}};
                       r.line(std::string("zero_check: ") + (t.zero_check ? "pass" : "FAIL"));
                       r.line(std::string("distinct_check: ") + (t.distinct_check ? "pass" : "FAIL"));
                       if (a->ledger) {
                         for (const auto& e : t.ledger) r.line(e.text);
                       }
                     });
    sub->add_option("--c", a->c, "Positive coefficients c1,...,cn")->required();
    sub->add_option("--d", a->d, "Positive coefficients d1,...,dm")->required();
    sub->add_flag("--ledger", a->ledger, "Print one coefficient identity per indeterminate");
  }
}

// ---------------------------------------------------------------- embed

FiniteSet window_of(const std::string& text, unsigned length, std::int64_t window) {
  if (text.find("p=") == std::string::npos) return parse_finite_set(text);
  auto a = parse_periodic_set(text);
  if (window < 0) window = a.threshold() + a.period() * (static_cast<std::int64_t>(length) + 1);
  return FiniteSet(a.members(0, window));
}

std::vector<FiniteSet> parse_samples(const std::string& text) {
  std::vector<FiniteSet> out;
  for (const auto& part : split(text, '|')) out.push_back(parse_finite_set(part));
  return out;
}

void register_embed(CLI::App& root, Out& out) {
  using namespace prlab::embed;
  auto* grp = root.add_subcommand("embed", "Finite embeddability and mappability");
  grp->require_subcommand(1);
  {
    struct A {
      std::string finite, in, periodic, in_periodic;
    };
    auto a = std::make_shared<A>();
    auto* sub = leaf(*grp, out, "fe", "embed fe", "Finite embeddability", [a](Report& r) {
      if (!a->finite.empty()) {
        if (a->in.empty()) throw Error("--finite needs --in");
        auto f = parse_finite_set(a->finite), b = parse_finite_set(a->in);
        auto n = fe_shift(f, b);
        r.provenance = "least shift n >= 0 with n + F inside B";
        r.result = {{"shift", n ? json(*n) : json(nullptr)}};
        r.verdict = n ? "embeds" : "does_not_embed";
        r.exit = n ? kPositive : kNegative;
        if (n) r.line("shift: " + std::to_string(*n));
        return;
      }
      if (a->periodic.empty() || a->in_periodic.empty()) throw Error("give --finite/--in or --periodic/--in-periodic");
      auto pa = parse_periodic_set(a->periodic), pb = parse_periodic_set(a->in_periodic);
      bool ok = fe_periodic(pa, pb);
      r.provenance = "one shift below B's threshold, or a residue shift modulo the common period";
      r.result = {{"value", ok}};
      r.verdict = ok ? "embeds" : "does_not_embed";
      r.exit = ok ? kPositive : kNegative;
    });
    auto* f = sub->add_option("--finite", a->finite, "Finite set F");
    sub->add_option("--in", a->in, "Finite set B");
    auto* p = sub->add_option("--periodic", a->periodic, "Eventually periodic set A");
    sub->add_option("--in-periodic", a->in_periodic, "Eventually periodic set B");
    f->excludes(p);
  }
  {
    auto text = std::make_shared<std::string>();
    auto* sub = leaf(*grp, out, "classify", "embed classify", "Thick / syndetic / piecewise syndetic", [text](Report& r) {
      auto c = classify(parse_periodic_set(*text));
      r.verdict = "computed";
      r.provenance = "read off the residue set of the periodic tail";
      r.result = {{"thick", c.thick},
                  {"syndetic", c.syndetic},
                  {"piecewise_syndetic", c.piecewise_syndetic},
                  {"finite", c.finite}};
      for (const auto& [k, v] : r.result.items()) r.line(k + ": " + (v.get<bool>() ? "yes" : "no"));
    });
    sub->add_option("spec", *text, "Periodic set, e.g. \"p=2; residues={0}\"")->required();
  }
  {
    struct A {
      std::string spec;
      std::int64_t window = 0;
    };
    auto a = std::make_shared<A>();
    auto* sub = leaf(*grp, out, "bd", "embed bd", "Banach density", [a](Report& r) {
      r.verdict = "computed";
      if (a->spec.find("p=") != std::string::npos) {
        auto q = bd(parse_periodic_set(a->spec));
        r.provenance = "residue count over period";
        r.result = {{"bd", to_string(q)}};
        r.line("BD = " + to_string(q));
        return;
      }
      if (a->window < 1) throw Error("a finite set needs --window L");
      auto q = bd_window(parse_finite_set(a->spec), a->window);
      r.provenance = "largest share of an interval of the given length";
      r.bounds = {{"window", a->window}};
      r.result = {{"bd", to_string(q)}};
      r.line("max density over windows of length " + std::to_string(a->window) + " = " + to_string(q));
    });
    sub->add_option("spec", a->spec, "Periodic set or finite set")->required();
    sub->add_option("--window", a->window, "Window length for finite sets");
  }
  {
    struct A {
      std::string set, in, family = "affinity", bounds;
      std::int64_t hi = 20;
      unsigned degree = 1;
    };
    auto a = std::make_shared<A>();
    auto* sub = leaf(*grp, out, "fmap", "embed fmap", "A family member mapping F into B", [a](Report& r) {
      auto spec = make_family(parse_family(a->family), a->hi, a->degree);
      if (!a->bounds.empty()) spec = with_bounds(spec, a->bounds);
      auto f = parse_finite_set(a->set), b = parse_finite_set(a->in);
      auto w = fmap_witness(f, b, spec);
      r.provenance = "lexicographic search over the bounded parameter box";
      const auto names = spec.parameter_names();
      for (std::size_t i = 0; i < names.size(); ++i) r.bounds[names[i]] = {spec.bounds[i].lo, spec.bounds[i].hi};
      if (w.outcome == FmapResult::Outcome::witness) {
        r.verdict = "witness";
        json params = json::object();
        for (std::size_t i = 0; i < names.size(); ++i) params[names[i]] = w.params[i];
        r.certificate = {{"params", params}, {"function", spec.describe(w.params)}};
        std::vector<std::int64_t> image;
        for (auto x : f.elements()) image.push_back(*to_int64(spec.apply(w.params, x)));
        r.result = {{"image", image}};
        r.line(spec.describe(w.params) + " maps F to " + to_string(FiniteSet::from_unsorted(image)));
      } else {
        r.verdict = "none_within_bounds";
        r.exit = kUnknown;
      }
    });
    sub->add_option("--set", a->set, "Finite set F")->required();
    sub->add_option("--in", a->in, "Finite set B")->required();
    sub->add_option("--family", a->family,
                    "translation, proper-translation, homothety, power, exponential, affinity or polynomial");
    sub->add_option("--bounds", a->bounds, "Parameter ranges, e.g. a=1..10,b=0..20");
    sub->add_option("--max", a->hi, "Default upper bound for every parameter");
    sub->add_option("--degree", a->degree, "Degree for the polynomial family")->check(CLI::Range(1u, 8u));
  }
  {
    struct A {
      std::string spec;
      unsigned len = 3;
      std::int64_t window = -1;
    };
    auto a = std::make_shared<A>();
    auto* sub = leaf(*grp, out, "apmax", "embed apmax", "Arithmetic progression of a given length", [a](Report& r) {
      auto s = window_of(a->spec, a->len, a->window);
      auto ap = search::contains_ap(s, a->len);
      r.provenance = "least (start, step) over the window";
      r.bounds = {{"len", a->len}, {"window", s.empty() ? json(nullptr) : json({s.min(), s.max()})}};
      if (ap) {
        r.verdict = "found";
        r.certificate = {{"start", ap->first}, {"step", ap->second}};
        r.line("start " + std::to_string(ap->first) + ", step " + std::to_string(ap->second));
      } else {
        r.verdict = "none";
        r.exit = kNegative;
      }
    });
    sub->add_option("spec", a->spec, "Finite set or periodic set")->required();
    sub->add_option("--len", a->len, "Progression length")->required()->check(CLI::Range(1u, 1000u));
    sub->add_option("--window", a->window, "Largest element examined for periodic sets");
  }
  {
    struct A {
      std::string family, bounds, samples = "1,2|1,3,4|2,5";
      std::int64_t hi = 4;
      unsigned degree = 1;
    };
    auto a = std::make_shared<A>();
    auto* sub = leaf(*grp, out, "probe-family", "embed probe-family", "Search for composition and identity failures",
                     [a](Report& r) {
                       auto spec = make_family(parse_family(a->family), a->hi, a->degree);
                       if (!a->bounds.empty()) spec = with_bounds(spec, a->bounds);
                       auto samples = parse_samples(a->samples);
                       auto p = wellstructured_probe(spec, samples);
                       r.provenance = "bounded search over sampled sets; never certifies the whole family";
                       const auto names = spec.parameter_names();
                       for (std::size_t i = 0; i < names.size(); ++i) {
                         r.bounds[names[i]] = {spec.bounds[i].lo, spec.bounds[i].hi};
                       }
                       r.bounds["samples"] = json::array();
                       for (const auto& s : samples) r.bounds["samples"].push_back(jset(s));
                       r.result = {{"checks", p.checks},
                                   {"transitivity_counterexample",
                                    p.transitivity_counterexample ? json(*p.transitivity_counterexample) : json(nullptr)},
                                   {"reflexivity_counterexample",
                                    p.reflexivity_counterexample ? json(*p.reflexivity_counterexample) : json(nullptr)}};
                       if (p.transitivity_counterexample || p.reflexivity_counterexample) {
                         r.verdict = "counterexample";
                         r.exit = kNegative;
                         if (p.transitivity_counterexample) r.line("composition: " + *p.transitivity_counterexample);
                         if (p.reflexivity_counterexample) r.line("identity: " + *p.reflexivity_counterexample);
                       } else {
                         r.verdict = "none_found_within_bounds";
                         r.exit = kUnknown;
                       }
                       r.line("checks: " + std::to_string(p.checks));
                     });
    sub->add_option("--family", a->family, "Family name")->required();
    sub->add_option("--bounds", a->bounds, "Parameter ranges");
    sub->add_option("--max", a->hi, "Default upper bound for every parameter");
    sub->add_option("--degree", a->degree, "Degree for the polynomial family")->check(CLI::Range(1u, 8u));
    sub->add_option("--samples", a->samples, "Sample sets separated by '|'");
  }
}

}  // namespace

void register_commands(CLI::App& root, const Globals& globals, std::vector<Command>& out) {
  register_rado(root, out);
  register_search(root, globals, out);
  register_folkman(root, out);
  register_poly(root, out);
  register_omega(root, out);
  register_embed(root, out);
}

}  // namespace prlab::cli
