#include "irrcert/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "irrcert/bivariate.hpp"
#include "irrcert/oracle.hpp"
#include "irrcert/report.hpp"

namespace irrcert {

namespace {

constexpr int kCertified = 0;
constexpr int kNotCertified = 1;
constexpr int kInputError = 2;

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

BigInt parse_integer(const std::string& text, const char* what) {
  BigInt v;
  if (text.empty() || v.set_str(text[0] == '+' ? text.substr(1) : text, 10) != 0)
    throw InputError(std::string("invalid integer for ") + what + ": '" + text + "'");
  return v;
}

std::pair<BigInt, BigInt> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw InputError("scan range must look like LO..HI, got '" + text + "'");
  BigInt lo = parse_integer(text.substr(0, dots), "--scan"), hi = parse_integer(text.substr(dots + 2), "--scan");
  if (lo > hi) throw InputError("scan range is empty: " + text);
  if (hi - lo > 200) throw InputError("scan range wider than 200 points: " + text);
  return {lo, hi};
}

DivisorClass parse_class(const std::string& text) {
  auto cls = parse_divisor_class(text);
  if (!cls) throw InputError("unknown divisor class '" + text + "' (admissible, unitary, any)");
  return *cls;
}

template <class Poly, class Parser>
Poly parse_or_explain(const std::string& text, Parser parser, std::ostream& err) {
  try {
    return parser(text);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n  " << text << "\n  " << std::string(e.position(), ' ') << "^\n";
    throw InputError("polynomial parse error");
  }
}

void emit(const CriterionReport& r, bool json, std::ostream& out) {
  if (json) out << to_json(r).dump(2) << "\n";
  else out << render_text(r);
}

struct CommonOptions {
  std::string cls = "admissible";
  unsigned long kmax = 16;
  int cap = 8;
  bool json = false;
  std::uint64_t seed = FactorConfig{}.seed;
};

void add_common(CLI::App* sub, CommonOptions& o) {
  sub->add_option("--class", o.cls, "divisor class: admissible, unitary or any")->capture_default_str();
  sub->add_option("--kmax", o.kmax, "largest k tried")->capture_default_str()->check(CLI::Range(1ul, 4096ul));
  sub->add_option("--cap", o.cap, "degree cap for exact factorization")->capture_default_str()->check(CLI::Range(1, 64));
  sub->add_flag("--json", o.json, "print the report as JSON");
  sub->add_option("--seed", o.seed, "seed for randomized integer factorization")->capture_default_str();
}

std::string format_factorization(const OracleFactorization& fac) {
  std::string s = to_string(fac.unit);
  for (const auto& [g, m] : fac.factors) {
    s += " * (" + print_canonical(g) + ")";
    if (m > 1) s += "^" + std::to_string(m);
  }
  return s;
}

int cmd_analyze(const std::string& poly, const std::optional<std::string>& a_text,
                const std::optional<std::string>& b_text, const std::optional<std::string>& scan,
                const CommonOptions& o, std::ostream& out, std::ostream& err) {
  const IntPoly f = parse_or_explain<IntPoly>(poly, parse_poly, err);
  if (f.degree() < 1) throw InputError("polynomial must have degree >= 1");
  const DivisorClass cls = parse_class(o.cls);
  FactorConfig cfg;
  cfg.seed = o.seed;
  if (a_text.has_value() != b_text.has_value()) throw InputError("--a and --b must be given together");
  if (a_text && scan) throw InputError("--scan cannot be combined with --a/--b");
  CriterionReport report;
  if (a_text) {
    const BigInt a = parse_integer(*a_text, "--a"), b = parse_integer(*b_text, "--b");
    if (a == b) throw InputError("--a and --b must differ");
    report = certify_point(f, a, b, o.kmax, cls, best_root_bound(f), cfg);
  } else {
    const auto [lo, hi] = parse_range(scan.value_or("-5..5"));
    ScanResult res = best_bound(f, lo, hi, lo, hi, o.kmax, cls, cfg);
    report = std::move(res.report);
  }
  emit(report, o.json, out);
  return report.certified() ? kCertified : kNotCertified;
}

int cmd_bivariate(const std::string& path, const std::string& g_text, const std::optional<std::string>& a_text,
                  const CommonOptions& o, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  BivarPoly f;
  try {
    f = parse_bivariate(buf.str());
  } catch (const ParseError& e) {
    err << "error: " << path << ": " << e.what() << "\n";
    throw InputError("bivariate parse error");
  }
  if (f.degree_y() < 1) throw InputError("polynomial is constant in Y");
  const RatPoly g = parse_or_explain<RatPoly>(g_text, parse_ratpoly, err);
  const DivisorClass cls = parse_class(o.cls);
  if (cls == DivisorClass::any) throw InputError("bivariate certificates use admissible or unitary divisors");

  CriterionReport report;
  auto scan_k = [&](const RatPoly& a) {
    CriterionReport last;
    for (unsigned long k = 1; k <= o.kmax; ++k) {
      last = certify_thm5(f, a, g, k, cls, o.cap);
      if (last.certified()) break;
    }
    return last;
  };
  if (a_text) {
    report = scan_k(parse_or_explain<RatPoly>(*a_text, parse_ratpoly, err));
  } else {
    report = cls == DivisorClass::admissible ? certify_coro6(f, g, o.cap) : CriterionReport{};
    if (!report.certified()) {
      CriterionReport fallback = scan_k(RatPoly{});
      if (fallback.certified() || cls != DivisorClass::admissible) report = std::move(fallback);
    }
  }
  emit(report, o.json, out);
  return report.certified() ? kCertified : kNotCertified;
}

int cmd_verify(const std::string& poly, unsigned long claimed, const CommonOptions& o, std::ostream& out,
               std::ostream& err) {
  const IntPoly f = parse_or_explain<IntPoly>(poly, parse_poly, err);
  if (f.is_zero()) throw InputError("the zero polynomial has no factorization");
  const OracleFactorization fac = count_irreducible_factors(f, o.cap);
  const bool ok = fac.count <= claimed;
  if (o.json) {
    nlohmann::ordered_json j;
    j["f"] = print_canonical(f);
    j["unit"] = to_string(fac.unit);
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& [g, m] : fac.factors) list.push_back({{"factor", print_canonical(g)}, {"multiplicity", m}});
    j["factors"] = list;
    j["count"] = fac.count;
    j["claimed_k"] = claimed;
    j["verified"] = ok;
    out << j.dump(2) << "\n";
  } else {
    out << "f = " << format_factorization(fac) << "\n";
    out << "irreducible factors (with multiplicity): " << fac.count << "\n";
    out << (ok ? "verified: " : "refuted: ") << fac.count << (ok ? " <= " : " > ") << claimed << "\n";
  }
  return ok ? kCertified : kNotCertified;
}

int cmd_plot(const std::string& poly, const std::string& a_text, const std::string& b_text, unsigned long k,
             const std::string& path, const CommonOptions& o, std::ostream& out, std::ostream& err) {
  const IntPoly f = parse_or_explain<IntPoly>(poly, parse_poly, err);
  if (f.degree() < 1) throw InputError("polynomial must have degree >= 1");
  const BigInt a = parse_integer(a_text, "--a"), b = parse_integer(b_text, "--b");
  FactorConfig cfg;
  cfg.seed = o.seed;
  const std::string svg = render_apollonius_svg(f, a, b, k, parse_class(o.cls), cfg);
  if (path == "-") {
    out << svg;
    return kCertified;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << svg)) throw InputError("cannot write " + path);
  out << "wrote " << path << "\n";
  return kCertified;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certificates bounding the number of irreducible factors of a polynomial"};
  app.name("irrcert");
  app.require_subcommand(1);

  CommonOptions opts;
  std::string poly, path, g_text, out_path;
  std::optional<std::string> a_text, b_text, scan, biv_a;
  std::string plot_a, plot_b;
  unsigned long claimed = 1, plot_k = 2;

  auto* analyze = app.add_subcommand("analyze", "certify at (a, b) or over a scanned square");
  analyze->add_option("poly", poly, "polynomial, e.g. 35x^4+12x^2+1")->required();
  analyze->add_option("--a", a_text, "integer a");
  analyze->add_option("--b", b_text, "integer b");
  analyze->add_option("--scan", scan, "scan a, b over LO..HI (default -5..5)");
  add_common(analyze, opts);

  auto* biv = app.add_subcommand("bivariate", "certify a polynomial in Y over Q[X]");
  biv->add_option("file", path, "file with lines 'i: <coefficient of Y^i>'")->required();
  biv->add_option("--g", g_text, "substituted polynomial b(X) = g(X)")->required();
  biv->add_option("--a", biv_a, "optional a(X); default uses a(X) = 0");
  add_common(biv, opts);

  auto* verify = app.add_subcommand("verify", "count irreducible factors exactly");
  verify->add_option("poly", poly, "polynomial")->required();
  verify->add_option("k", claimed, "claimed upper bound")->required();
  add_common(verify, opts);

  auto* plot = app.add_subcommand("plot", "write an SVG of the Apollonius circles");
  plot->add_option("poly", poly, "polynomial")->required();
  plot->add_option("--a", plot_a, "integer a")->required();
  plot->add_option("--b", plot_b, "integer b")->required();
  plot->add_option("--k", plot_k, "k for q_k")->capture_default_str()->check(CLI::Range(1ul, 4096ul));
  plot->add_option("--out", out_path, "output path, '-' for standard output")->required();
  add_common(plot, opts);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(poly, a_text, b_text, scan, opts, out, err);
    if (biv->parsed()) return cmd_bivariate(path, g_text, biv_a, opts, out, err);
    if (verify->parsed()) return cmd_verify(poly, claimed, opts, out, err);
    if (plot->parsed()) return cmd_plot(poly, plot_a, plot_b, plot_k, out_path, opts, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DegreeCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const FactorizationBudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace irrcert
