#include "cotq/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cotq/engine.hpp"
#include "cotq/instances.hpp"
#include "cotq/parser.hpp"
#include "cotq/serialize.hpp"
#include "cotq/verify.hpp"

namespace cotq::cli {

namespace {

/// Raised for semantically invalid flag values; mapped to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string coalgebra;
  std::string form;
  std::string symbol;
  std::string element;
  std::string window;
  std::string subset;
  std::string format = "text";
  std::string output;
  std::string scope = "all";
  std::uint64_t seed = 0;
  bool timing = false;
};

BasisWindow make_window(const Coalgebra& c, const std::string& text) {
  if (text.empty()) {
    if (c.is_finite()) return BasisWindow::full(c);
    throw UsageError("--window deg<=D is required for the infinite coalgebra '" + c.spec() + "'");
  }
  if (text == "full") {
    if (!c.is_finite()) {
      throw UsageError("--window full is only valid for finite coalgebras; use deg<=D for '" + c.spec() + "'");
    }
    return BasisWindow::full(c);
  }
  constexpr std::string_view prefix = "deg<=";
  if (text.rfind(prefix, 0) == 0) {
    const std::string bound = text.substr(prefix.size());
    std::int64_t d = 0;
    auto res = std::from_chars(bound.data(), bound.data() + bound.size(), d);
    if (!bound.empty() && res.ec == std::errc{} && res.ptr == bound.data() + bound.size()) {
      return BasisWindow::up_to_degree(c, d);
    }
  }
  throw UsageError("--window must be 'full' or 'deg<=D', got '" + text + "'");
}

ProjectionPair make_projection(const Coalgebra& c, const std::string& subset) {
  if (subset.empty()) return ProjectionPair::identity();
  const std::vector<BasisKey> keys = parse_key_list(subset, c);
  return ProjectionPair::of(std::set<BasisKey>(keys.begin(), keys.end()));
}

std::string render_grid(const BasisWindow& window, const ScalarGrid& grid) {
  std::vector<std::string> labels;
  for (const auto& k : window.keys()) labels.push_back(to_string(k));
  std::vector<std::vector<std::string>> cells(grid.size());
  std::size_t width = 1;
  for (const auto& l : labels) width = std::max(width, l.size());
  for (std::size_t r = 0; r < grid.size(); ++r) {
    for (const auto& z : grid[r]) {
      cells[r].push_back(to_string(z));
      width = std::max(width, cells[r].back().size());
    }
  }
  auto cell = [&](const std::string& s) { return s + std::string(width + 2 - s.size(), ' '); };
  std::string out = cell("");
  for (const auto& l : labels) out += cell(l);
  while (!out.empty() && out.back() == ' ') out.pop_back();
  out += "\n";
  for (std::size_t r = 0; r < grid.size(); ++r) {
    std::string line = cell(labels[r]);
    for (const auto& s : cells[r]) line += cell(s);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string csv_terms(const Element& e) {
  std::string out = "key,coeff\n";
  for (const auto& [k, c] : e.terms()) out += to_string(k) + "," + csv_scalar(c) + "\n";
  return out;
}

std::string csv_terms(const TensorElement& t) {
  std::string out = "key1,key2,coeff\n";
  for (const auto& [k, c] : t.terms()) out += to_string(k[0]) + "," + to_string(k[1]) + "," + csv_scalar(c) + "\n";
  return out;
}

std::string list_text() {
  return "coalgebras:\n"
         "  manin?q=<scalar>       Manin quantum plane, basis a^i c^j (q defaults to 2/3)\n"
         "  divpow                 divided power coalgebra, basis x_n, n >= 0\n"
         "  negdeg?M=<int>         negative degrees, basis x_n, |n| <= M\n"
         "  matrix?n=<int>         matrix coalgebra, basis E_i_j, 1 <= i,j <= n\n"
         "forms:\n"
         "  manin-orth?w=<family>  <a^i c^j, a^k c^l> = d(i,k) d(j,l) w(i)w(j)\n"
         "  manin-skew?mu=<family> <a^i c^j, a^k c^l> = d(i-j,k-l) mu(i)mu(j)mu(k)mu(l)\n"
         "  diag?w=<family>        <x_i, x_j> = w(i) d(i,j)\n"
         "  matrix-orth            E_i_j orthonormal\n"
         "  matrix-weighted?w=<family>  <E_i_j, E_r_s> = w(i+s) d(i-j,r-s)\n"
         "weights:\n"
         "  one, factorial, absfactorial, geom:<rational>, poly:<int>\n";
}

Json list_json() {
  Json j;
  j["coalgebras"] = {"manin?q=<scalar>", "divpow", "negdeg?M=<int>", "matrix?n=<int>"};
  j["forms"] = {"manin-orth?w=<family>", "manin-skew?mu=<family>", "diag?w=<family>", "matrix-orth",
                "matrix-weighted?w=<family>"};
  j["weights"] = {"one", "factorial", "absfactorial", "geom:<rational>", "poly:<int>"};
  return j;
}

struct Loaded {
  CoalgebraPtr coalgebra;
  FormPtr form;
};

Loaded load(const Options& o, bool need_form) {
  Loaded l;
  l.coalgebra = parse_coalgebra_spec(o.coalgebra);
  if (need_form) l.form = make_form(parse_form_spec(o.form), *l.coalgebra);
  return l;
}

OperatorHandle make_operator(const Loaded& l, const Options& o) {
  return OperatorHandle(l.coalgebra, l.form, parse_element(o.symbol, *l.coalgebra),
                        make_projection(*l.coalgebra, o.subset));
}

int execute(const std::string& command, const Options& o, std::ostream& out, bool color) {
  const bool json = o.format == "json";
  const bool csv = o.format == "csv";

  if (command == "list") {
    if (json) {
      out << list_json().dump(2) << "\n";
    } else {
      out << list_text();
    }
    return kOk;
  }

  if (command == "comul") {
    const Loaded l = load(o, false);
    const TensorElement t = comul_extend(*l.coalgebra, parse_element(o.element, *l.coalgebra));
    if (json) {
      out << to_json(t).dump(2) << "\n";
    } else if (csv) {
      out << csv_terms(t);
    } else {
      out << render_tensor(t) << "\n";
    }
    return kOk;
  }

  if (command == "apply") {
    const Loaded l = load(o, true);
    const Element e = co_toeplitz_apply(make_operator(l, o), parse_element(o.element, *l.coalgebra));
    if (json) {
      out << to_json(e).dump(2) << "\n";
    } else if (csv) {
      out << csv_terms(e);
    } else {
      out << render_element(e) << "\n";
    }
    return kOk;
  }

  if (command == "matrix") {
    const Loaded l = load(o, true);
    const BasisWindow window = make_window(*l.coalgebra, o.window);
    const MatrixResult m = operator_matrix(make_operator(l, o), window);
    if (json) {
      out << to_json(m).dump(2) << "\n";
    } else if (csv) {
      out << to_csv(m.window, m.entries);
    } else {
      out << render_grid(m.window, m.entries);
      if (!m.leakage.empty()) {
        out << "leakage:\n";
        for (const auto& leak : m.leakage) {
          out << "  " << to_string(leak.from) << " -> " << render_element(leak.escaped) << "\n";
        }
      }
    }
    return kOk;
  }

  if (command == "classify") {
    const Loaded l = load(o, true);
    const BasisWindow window = make_window(*l.coalgebra, o.window);
    const Classification c = classify_shift(make_operator(l, o), window);
    if (json) {
      out << to_json(c).dump(2) << "\n";
    } else if (csv) {
      std::string shifts;
      for (std::int64_t s : c.shifts) shifts += (shifts.empty() ? "" : " ") + std::to_string(s);
      out << "kind,degree,shifts\n" << to_string(c.kind) << "," << c.degree() << "," << shifts << "\n";
    } else {
      out << c.describe() << "\n";
    }
    return kOk;
  }

  if (command == "gram") {
    const Loaded l = load(o, true);
    const BasisWindow window = make_window(*l.coalgebra, o.window);
    const GramResult g = gram_matrix(*l.form, window);
    const bool pd = is_positive_definite(g.entries);
    if (json) {
      Json j;
      j["window"] = Json::array();
      for (const auto& k : window.keys()) j["window"].push_back(to_string(k));
      j["entries"] = Json::array();
      for (const auto& row : g.entries) {
        Json r = Json::array();
        for (const auto& z : row) r.push_back(to_json(z));
        j["entries"].push_back(std::move(r));
      }
      j["hermitian"] = g.hermitian;
      j["positive_definite"] = pd;
      out << j.dump(2) << "\n";
    } else if (csv) {
      out << to_csv(window, g.entries);
    } else {
      out << render_grid(window, g.entries);
      out << "hermitian: " << (g.hermitian ? "yes" : "no") << "\n";
      out << "positive-definite: " << (pd ? "yes" : "no") << "\n";
    }
    return kOk;
  }

  if (command == "verify") {
    VerifyOptions vo;
    vo.scope = o.scope;
    vo.seed = o.seed;
    const VerificationReport report = run_verification(vo);
    if (json) {
      out << to_json(report, o.timing).dump(2) << "\n";
    } else if (csv) {
      out << to_csv(report, o.timing);
    } else {
      out << to_text(report, o.timing, color);
    }
    return report.ok() ? kOk : kDomainError;
  }

  throw UsageError("no subcommand given");
}

void report_domain_error(std::ostream& err, const Error& e) {
  Json j;
  j["error"] = std::string(to_string(e.kind()));
  j["message"] = e.what();
  if (e.offset()) j["offset"] = *e.offset();
  err << j.dump() << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, bool color) {
  CLI::App app{"cotq: exact co-Toeplitz quantization of coalgebras", "cotq"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats = {"text", "json", "csv"};

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("-o,--output", o.output, "Write the result to this file instead of stdout");
  };
  auto add_operator = [&](CLI::App* sub, bool window) {
    sub->add_option("--coalgebra", o.coalgebra, "Coalgebra spec, e.g. divpow or negdeg?M=3")->required();
    sub->add_option("--form", o.form, "Form spec, e.g. diag?w=factorial")->required();
    sub->add_option("--symbol", o.symbol, "Symbol g of the operator C_g")->required();
    sub->add_option("--subset", o.subset, "Comma-separated basis keys spanning P (default: whole basis)");
    if (window) sub->add_option("--window", o.window, "'full' or 'deg<=D'");
    add_format(sub);
  };

  CLI::App* list = app.add_subcommand("list", "List coalgebras, forms and weight families");
  add_format(list);

  CLI::App* comul = app.add_subcommand("comul", "Comultiplication of an element");
  comul->add_option("--coalgebra", o.coalgebra, "Coalgebra spec")->required();
  comul->add_option("--element", o.element, "Element, e.g. \"2*x_1 + x_3\"")->required();
  add_format(comul);

  CLI::App* apply = app.add_subcommand("apply", "Apply a co-Toeplitz operator to an element");
  add_operator(apply, false);
  apply->add_option("--element", o.element, "Input element")->required();

  CLI::App* matrix = app.add_subcommand("matrix", "Matrix of a co-Toeplitz operator on a basis window");
  add_operator(matrix, true);

  CLI::App* classify = app.add_subcommand("classify", "Creation / annihilation / preservation class");
  add_operator(classify, true);

  CLI::App* gram = app.add_subcommand("gram", "Gram matrix, Hermiticity and positive definiteness");
  gram->add_option("--coalgebra", o.coalgebra, "Coalgebra spec")->required();
  gram->add_option("--form", o.form, "Form spec")->required();
  gram->add_option("--window", o.window, "'full' or 'deg<=D'");
  add_format(gram);

  CLI::App* verify = app.add_subcommand("verify", "Run the built-in verification suite");
  verify->add_option("--scope", o.scope, "all, manin, divpow, negdeg or matrix")
      ->check(CLI::IsMember({"all", "manin", "divpow", "negdeg", "matrix"}));
  verify->add_option("--seed", o.seed, "Seed for randomized checks");
  verify->add_flag("--timing", o.timing, "Include elapsed times (output is then not reproducible)");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run 'cotq --help' for usage\n";
    return kUsageError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (o.output.empty()) return execute(command, o, out, color);
    std::ostringstream buffer;
    const int code = execute(command, o, buffer, false);
    std::ofstream file(o.output, std::ios::binary);
    if (!file) throw UsageError("cannot open output file '" + o.output + "'");
    file << buffer.str();
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    report_domain_error(err, e);
    return kDomainError;
  }
}

}  // namespace cotq::cli
