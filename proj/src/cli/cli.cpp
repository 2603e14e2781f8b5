#include "sidef/cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>

#include "sidef/darboux/darboux.hpp"
#include "sidef/families/family.hpp"
#include "sidef/numerics/numerics.hpp"
#include "sidef/operators/diffop.hpp"
#include "sidef/operators/singularity.hpp"
#include "sidef/polynomials/text.hpp"

namespace sidef::cli {

namespace {

using Json = nlohmann::ordered_json;

// Value rounded to the 12 digits that are printed.
double json_number(double x) { return std::strtod(format_double(x).c_str(), nullptr); }

Json json_numbers(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(json_number(x));
  return out;
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

double parse_double(std::string_view text) {
  const std::string s = trim(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw ArgumentError("not a finite number: '" + std::string(text) + "'");
  }
  return v;
}

long parse_long(std::string_view text) {
  const std::string s = trim(text);
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size()) throw ArgumentError("not an integer: '" + std::string(text) + "'");
  return v;
}

std::pair<std::string, std::string> split_colon(std::string_view text) {
  const auto c = text.find(':');
  if (c == std::string_view::npos || text.find(':', c + 1) != std::string_view::npos) {
    throw ArgumentError("expected lo:hi, got '" + std::string(text) + "'");
  }
  return {std::string(text.substr(0, c)), std::string(text.substr(c + 1))};
}

// Long options whose value starts with '-' and a digit would otherwise be
// read as a flag; join them as --opt=value.
std::vector<std::string> join_negative_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) == 0 && a.find('=') == std::string::npos && i + 1 < args.size()) {
      const std::string& v = args[i + 1];
      if (v.size() >= 2 && v[0] == '-' && (std::isdigit(static_cast<unsigned char>(v[1])) || v[1] == '.')) {
        out.push_back(a + "=" + v);
        ++i;
        continue;
      }
    }
    out.push_back(a);
  }
  return out;
}

struct FamilyArgs {
  std::string kind;
  std::string A;
  long m = 0;
  std::string series;

  void attach(CLI::App* sub) {
    sub->add_option("--kind", kind, "ho | morse | pt")->required();
    sub->add_option("--A", A, "family parameter as a or a/b (morse, pt)");
    sub->add_option("--m", m, "deformation index m >= 0")->required();
    sub->add_option("--series", series, "pt: phi4 | phi1; morse (deform only): phi1 | phi2 | phi4");
  }

  FamilyKind family_kind() const { return parse_family_kind(kind); }

  std::optional<Rational> a() const {
    if (A.empty()) return std::nullopt;
    return Rational::parse(A);
  }

  DeformedFamily make() const {
    const FamilyKind k = family_kind();
    PtSeries s = PtSeries::phi4;
    if (!series.empty()) {
      if (k != FamilyKind::pt) throw ArgumentError("--series applies to pt here");
      s = parse_pt_series(series);
    }
    return make_family(k, a(), m, s);
  }
};

Json family_meta(const DeformedFamily& fam) {
  Json meta;
  meta["kind"] = to_string(fam.kind);
  meta["A"] = fam.A ? Json(fam.A->str()) : Json(nullptr);
  meta["m"] = fam.m;
  meta["series"] = fam.kind == FamilyKind::pt ? Json(to_string(fam.series)) : Json(nullptr);
  return meta;
}

std::pair<double, double> default_range(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::ho: return {-6, 6};
    case FamilyKind::morse: return {-3, 6};
    case FamilyKind::pt: return {-8, 8};
  }
  return {-6, 6};
}

void require_format(const std::string& f) {
  if (f != "csv" && f != "json" && f != "text") throw ArgumentError("unknown format '" + f + "'");
}

// family ---------------------------------------------------------------------

struct FamilyCmd {
  FamilyArgs fa;
  std::string range;
  long samples = 600;
  std::string format = "csv";

  int run(std::ostream& out) const {
    if (format == "text") throw ArgumentError("family writes csv or json");
    require_format(format);
    if (samples < 2) throw ArgumentError("--samples must be at least 2");
    const DeformedFamily fam = fa.make();
    const auto [lo, hi] = range.empty() ? default_range(fam.kind) : parse_range(range);
    std::vector<double> xs, us;
    const auto last = static_cast<double>(samples - 1);
    for (long i = 0; i < samples; ++i) {
      const auto t = static_cast<double>(i);
      const double x = (lo * (last - t) + hi * t) / last;
      const double u = fam.potential(x);
      if (!std::isfinite(u)) throw EvaluationError("potential is not finite at x = " + format_double(x));
      xs.push_back(x);
      us.push_back(u);
    }
    if (format == "csv") {
      out << "x,U\n";
      for (std::size_t i = 0; i < xs.size(); ++i) out << format_double(xs[i]) << ',' << format_double(us[i]) << '\n';
      return ok;
    }
    Json j;
    j["analytic"] = {{"potential", fam.potential.str()}, {"ground_energy", fam.ground_energy.str()}};
    j["numeric"] = {{"x", json_numbers(xs)}, {"U", json_numbers(us)}};
    j["abs_errors"] = Json::object();
    Json meta = family_meta(fam);
    meta["range"] = {json_number(lo), json_number(hi)};
    meta["samples"] = samples;
    j["meta"] = meta;
    out << j.dump(2) << '\n';
    return ok;
  }
};

// spectrum -------------------------------------------------------------------

struct SpectrumCmd {
  FamilyArgs fa;
  long levels = 5;
  std::string grid;
  long points = 0;
  double tol = 0;
  std::string format = "json";

  // 1e-4 for ho; 1e-3 otherwise, 5e-3 for the shallowest bound level.
  static double tolerance(const DeformedFamily& fam, std::size_t i, std::size_t count) {
    if (fam.kind == FamilyKind::ho) return 1e-4;
    const auto bound = base_bound_count(fam.kind, fam.a_value());
    const bool shallowest = bound && i + 1 == count && static_cast<long>(count) == *bound + 1;
    return shallowest ? 5e-3 : 1e-3;
  }

  int run(std::ostream& out, std::ostream& err) const {
    require_format(format);
    if (format == "text") throw ArgumentError("spectrum writes json or csv");
    if (levels < 1) throw ArgumentError("--levels must be at least 1");
    if (tol < 0) throw ArgumentError("--tol must be nonnegative");
    const DeformedFamily fam = fa.make();
    Grid g = default_grid(fam.kind);
    if (!grid.empty()) {
      const auto [lo, hi] = parse_range(grid);
      g = Grid::make(lo, hi, g.n_points);
    }
    if (points != 0) g = Grid::make(g.x_lo, g.x_hi, points);

    const SpectrumList analytic = energy_spectrum(fam, levels);
    const std::size_t count = analytic.levels.size();
    const auto numeric = lowest_eigs(discretize(fam.potential, g), static_cast<long>(count));
    std::vector<double> exact, errors, tols;
    std::vector<std::string> exact_text;
    bool pass = true;
    for (std::size_t i = 0; i < count; ++i) {
      exact.push_back(analytic.levels[i].to_double());
      exact_text.push_back(analytic.levels[i].str());
      errors.push_back(std::abs(numeric[i] - exact.back()));
      tols.push_back(tol > 0 ? tol : tolerance(fam, i, count));
      if (!(errors.back() <= tols.back())) pass = false;
    }

    if (format == "csv") {
      out << "level,analytic,numeric,abs_error,tolerance\n";
      for (std::size_t i = 0; i < count; ++i) {
        out << i << ',' << format_double(exact[i]) << ',' << format_double(numeric[i]) << ','
            << format_double(errors[i]) << ',' << format_double(tols[i]) << '\n';
      }
    } else {
      Json j;
      j["analytic"] = json_numbers(exact);
      j["numeric"] = json_numbers(numeric);
      j["abs_errors"] = json_numbers(errors);
      Json meta = family_meta(fam);
      meta["analytic_exact"] = exact_text;
      meta["grid"] = {{"x_lo", json_number(g.x_lo)}, {"x_hi", json_number(g.x_hi)}, {"points", g.n_points}};
      meta["tolerances"] = json_numbers(tols);
      meta["truncated"] = analytic.truncated;
      meta["pass"] = pass;
      j["meta"] = meta;
      out << j.dump(2) << '\n';
    }
    if (analytic.truncated) {
      err << "note: only " << count << " bound levels exist for " << fam.label() << '\n';
    }
    if (!pass) {
      for (std::size_t i = 0; i < count; ++i) {
        if (!(errors[i] <= tols[i])) {
          err << "level " << i << ": |" << format_double(numeric[i]) << " - (" << exact_text[i]
              << ")| = " << format_double(errors[i]) << " exceeds " << format_double(tols[i]) << '\n';
        }
      }
      return verification_failure;
    }
    return ok;
  }
};

// verify-flag ----------------------------------------------------------------

struct VerifyFlagCmd {
  FamilyArgs fa;
  long n = 0;
  std::string sector = "all";

  int run(std::ostream& out, std::ostream& err) const {
    const DeformedFamily fam = fa.make();
    std::vector<Sector> which;
    if (sector == "all") {
      which = sectors(fam.kind);
    } else {
      which = {parse_sector(sector)};
    }
    out << "family: " << fam.label() << '\n';
    int status = ok;
    for (const Sector s : which) {
      out << "sector: " << to_string(s) << '\n';
      FlagBasis fb;
      try {
        fb = flag_basis(fam, n, s);
      } catch (const InternalConsistencyError& e) {
        out << "  invariant: no\n";
        err << "sector " << to_string(s) << ": " << e.what() << '\n';
        status = verification_failure;
        continue;
      }
      out << "  gauge: " << (fb.gauge.str().empty() ? "1" : fb.gauge.str()) << (fb.parity ? " * dz/dx" : "") << '\n';
      out << "  operator: " << fb.op.str() << '\n';
      out << "  basis:" << (fb.monomial_fallback ? " (monomial images)" : "") << '\n';
      for (std::size_t k = 0; k < fb.basis.size(); ++k) {
        out << "    [" << k << "] " << format_poly(fb.basis[k]);
        if (!fb.monomial_fallback) out << "  energy " << fb.energies[k].str();
        out << '\n';
      }
      out << "  invariant: yes\n";

      // Diagonal action on eigen-images; triangular spectrum on the fallback.
      std::optional<std::size_t> bad;
      if (fb.monomial_fallback) {
        auto diag = fb.echelon_diagonal;
        std::sort(diag.begin(), diag.end());
        for (std::size_t k = 0; k < diag.size() && !bad; ++k) {
          if (!(diag[k] == fb.energies[k])) bad = k;
        }
      } else {
        for (std::size_t r = 0; r < fb.basis.size() && !bad; ++r) {
          for (std::size_t c = 0; c < fb.basis.size(); ++c) {
            const Rational want = r == c ? fb.energies[c] : Rational(0);
            if (!(fb.matrix(r, c) == want)) {
              bad = c;
              break;
            }
          }
        }
      }
      if (bad) {
        out << "  spectrum: mismatch\n";
        err << "sector " << to_string(s) << ": offending element [" << *bad << "] " << format_poly(fb.basis[*bad])
            << '\n';
        status = verification_failure;
        continue;
      }
      out << "  spectrum:";
      auto spec = fb.energies;
      std::sort(spec.begin(), spec.end());
      for (const auto& e : spec) out << ' ' << e.str();
      out << '\n';
      if (fam.m == 1 && s == Sector::even) {
        if (const auto b = exceptional_shift(fb.basis)) {
          out << "  exceptional: span{1, (z - (" << b->str() << "))^2, ..., (z - (" << b->str() << "))^" << n << "}\n";
        }
      }
    }
    return status;
  }
};

// preservers -----------------------------------------------------------------

struct PreserversCmd {
  long n = 4;
  std::string window = "-2:4";

  int run(std::ostream& out, std::ostream& err) const {
    if (n < 2) throw ArgumentError("--n must be at least 2");
    const auto [lo_s, hi_s] = split_colon(window);
    const std::pair<long, long> w{parse_long(lo_s), parse_long(hi_s)};
    if (w.second < w.first) throw ArgumentError("--window needs dmin <= dmax");
    const auto space = preserver_space(n, w);
    out << "module: span{1, z^2, ..., z^" << n << "}\n";
    out << "window: " << w.first << ':' << w.second << '\n';
    out << "dimension: " << space.size() << '\n';
    out << "generators:\n";
    for (std::size_t k = 0; k < space.size(); ++k) out << "  [" << k << "] " << space[k].str() << '\n';

    const auto known = exceptional_generators(n);
    bool inside = true;
    try {
      for (const auto& g : known) laurent_vector(g, w);
    } catch (const ArgumentError&) {
      inside = false;
    }
    if (!inside) {
      out << "known generators: outside the window\n";
      return ok;
    }
    const bool same = reduced_span(known, w) == reduced_span(space, w);
    out << "known generators: " << (same ? "match" : "differ") << '\n';
    if (!same && n >= 4) {
      err << "preserver space differs from the span of the seven known generators\n";
      return verification_failure;
    }
    return ok;
  }
};

// classify -------------------------------------------------------------------

struct ClassifyCmd {
  std::string op;
  std::string P, Q;
  std::string Qm1, Qm2;
  std::string range;

  int run(std::ostream& out) const {
    RPoly p;
    RFunc q;
    if (!op.empty()) {
      if (!P.empty() || !Q.empty() || !Qm1.empty() || !Qm2.empty()) {
        throw ArgumentError("give either --op or --P/--Q, not both");
      }
      const auto t = parse_operator(op);
      p = t.P;
      q = t.Q;
    } else {
      if (P.empty()) throw ArgumentError("--P or --op is required");
      p = parse_poly(P);
      q = Q.empty() ? RFunc() : RFunc(parse_poly(Q));
      if (!Qm1.empty()) q += RFunc::power(-1, Rational::parse(Qm1));
      if (!Qm2.empty()) q += RFunc::power(-2, Rational::parse(Qm2));
    }
    const std::optional<Interval> hint = range.empty() ? std::nullopt : std::optional(parse_interval(range));
    const SingularityReport r = classify_singularity(p, q, hint);
    out << "P: " << format_poly(p) << '\n';
    out << "Q: " << q.str() << '\n';
    out << "case: " << to_string(r.which) << '\n';
    out << "rational roots:";
    if (r.roots.empty()) out << " none";
    for (const auto& x : r.roots) out << ' ' << x.str();
    out << '\n';
    if (r.p_negated) out << "note: P >= 0 everywhere, classified as -P\n";
    out << "range: " << r.range << '\n';
    out << "nonsingular: " << (r.nonsingular ? "yes" : "no") << '\n';
    if (r.failing_condition) out << "failing condition: " << *r.failing_condition << '\n';
    return ok;
  }
};

// deform ---------------------------------------------------------------------

struct DeformCmd {
  FamilyArgs fa;
  long states = 3;

  int run(std::ostream& out) const {
    const FamilyKind kind = fa.family_kind();
    if (kind == FamilyKind::morse && !fa.series.empty()) {
      // Other polynomial-type factorizations: classified, deformed only when nodeless.
      const auto A = fa.a();
      if (!A || A->sign() <= 0) throw ArgumentError("morse needs A > 0");
      const auto fd = morse_factorization<Rational>(parse_morse_series(fa.series), *A, fa.m);
      out << "family: morse A=" << A->str() << " m=" << fa.m << " series " << fa.series << '\n';
      out << "phi: " << fd.phi().str() << '\n';
      out << "factorization energy: " << fd.energy.str() << '\n';
      out << "darboux type: " << to_string(darboux_type(fd)) << '\n';
      require_nodeless(fd);
      out << "potential: " << deformed_potential(base_potential<Rational>(kind, *A), fd).str() << '\n';
      return ok;
    }
    const DeformedFamily fam = fa.make();
    out << "family: " << fam.label() << '\n';
    out << "base potential: " << fam.base.str() << '\n';
    out << "phi: " << fam.fdata.phi().str() << '\n';
    out << "factorization energy: " << fam.fdata.energy.str() << '\n';
    out << "darboux type: " << to_string(darboux_type(fam.fdata)) << '\n';
    out << "potential: " << fam.potential.str() << '\n';
    const auto bound = base_bound_count(fam.kind, fam.a_value());
    const long count = bound ? std::min(states, *bound + 1) : states;
    for (long k = 0; k < count; ++k) {
      const auto st = bound_state(fam, k);
      out << "state " << k << ": energy " << st.energy.str() << "  psi = " << st.psi.str() << '\n';
    }
    return ok;
  }
};

int classify_exception(std::ostream& err, const CLI::App& app) {
  try {
    throw;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return argument_error;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return precondition_failure;
  } catch (const EvaluationError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return precondition_failure;
  } catch (const ResourceError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return precondition_failure;
  } catch (const InternalConsistencyError& e) {
    err << "verification failed: " << e.what() << '\n';
    return verification_failure;
  } catch (const ConvergenceError& e) {
    err << "verification failed: " << e.what() << '\n';
    return verification_failure;
  }
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::string(buf) == "-0" ? "0" : buf;
}

std::pair<double, double> parse_range(std::string_view text) {
  const auto [a, b] = split_colon(text);
  const double lo = parse_double(a), hi = parse_double(b);
  if (!(lo < hi)) throw ArgumentError("range needs lo < hi, got '" + std::string(text) + "'");
  return {lo, hi};
}

Interval parse_interval(std::string_view text) {
  const auto [a, b] = split_colon(text);
  const std::string lo = trim(a), hi = trim(b);
  const bool lo_inf = lo == "-inf", hi_inf = hi == "inf" || hi == "+inf";
  if (lo_inf && hi_inf) return Interval::real_line();
  if (lo_inf) return Interval::at_most(Rational::parse(hi));
  if (hi_inf) return Interval::at_least(Rational::parse(lo));
  const Rational l = Rational::parse(lo), h = Rational::parse(hi);
  if (!(l < h)) throw ArgumentError("interval needs lo < hi, got '" + std::string(text) + "'");
  return Interval::closed(l, h);
}

OperatorText parse_operator(std::string_view text) {
  std::map<std::string, std::string> fields;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto semi = text.find(';', pos);
    const std::string part = trim(text.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos));
    if (!part.empty()) {
      const auto eq = part.find('=');
      if (eq == std::string::npos) throw ArgumentError("operator field without '=': '" + part + "'");
      const std::string key = trim(part.substr(0, eq));
      static const std::vector<std::string> keys{"P", "Q", "Qm1", "Qm2", "R", "Rm1", "Rm2"};
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
        throw ArgumentError("unknown operator field '" + key + "'");
      }
      if (!fields.emplace(key, part.substr(eq + 1)).second) throw ArgumentError("repeated operator field '" + key + "'");
    }
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  if (!fields.count("P")) throw ArgumentError("operator text needs P=");
  const auto poly = [&](const std::string& k) { return fields.count(k) ? RFunc(parse_poly(fields[k])) : RFunc(); };
  const auto inv = [&](const std::string& k, long d) {
    return fields.count(k) ? RFunc::power(d, Rational::parse(fields[k])) : RFunc();
  };
  return {parse_poly(fields["P"]), poly("Q") + inv("Qm1", -1) + inv("Qm2", -2),
          poly("R") + inv("Rm1", -1) + inv("Rm2", -2)};
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Algebraic Darboux deformations of shape-invariant potentials", "sidef"};
  app.require_subcommand(1);
  app.fallthrough(false);

  FamilyCmd family;
  auto* c_family = app.add_subcommand("family", "sample the deformed potential U(x)");
  family.fa.attach(c_family);
  c_family->add_option("--range", family.range, "x range lo:hi (default ho -6:6, morse -3:6, pt -8:8)");
  c_family->add_option("--samples", family.samples, "number of sample points (default 600)");
  c_family->add_option("--format", family.format, "csv | json (default csv)");

  SpectrumCmd spectrum;
  auto* c_spectrum = app.add_subcommand("spectrum", "analytic against finite-difference levels");
  spectrum.fa.attach(c_spectrum);
  c_spectrum->add_option("--levels", spectrum.levels, "number of lowest levels (default 5)");
  c_spectrum->add_option("--grid", spectrum.grid, "x range lo:hi of the grid");
  c_spectrum->add_option("--points", spectrum.points, "grid points");
  c_spectrum->add_option("--tol", spectrum.tol, "absolute tolerance for every level");
  c_spectrum->add_option("--format", spectrum.format, "json | csv (default json)");

  VerifyFlagCmd flag;
  auto* c_flag = app.add_subcommand("verify-flag", "certify the invariant polynomial flag exactly");
  flag.fa.attach(c_flag);
  c_flag->add_option("--n", flag.n, "flag level n >= m")->required();
  c_flag->add_option("--sector", flag.sector, "even | odd | all (default all)");

  PreserversCmd pres;
  auto* c_pres = app.add_subcommand("preservers", "operators preserving span{1, z^2, ..., z^n}");
  c_pres->add_option("--n", pres.n, "module degree (default 4)");
  c_pres->add_option("--window", pres.window, "Laurent support dmin:dmax (default -2:4)");

  ClassifyCmd cls;
  auto* c_cls = app.add_subcommand("classify", "singularity case of P d_zz + Q d_z");
  c_cls->add_option("--op", cls.op, "operator text P=..;Q=..;Qm1=..;Qm2=..");
  c_cls->add_option("--P", cls.P, "polynomial, comma-separated ascending coefficients");
  c_cls->add_option("--Q", cls.Q, "polynomial part of Q");
  c_cls->add_option("--Qm1", cls.Qm1, "coefficient of z^-1 in Q");
  c_cls->add_option("--Qm2", cls.Qm2, "coefficient of z^-2 in Q");
  c_cls->add_option("--range", cls.range, "range hint lo:hi (rational, -inf/inf allowed)");

  DeformCmd deform;
  auto* c_deform = app.add_subcommand("deform", "construct a deformation and report its data");
  deform.fa.attach(c_deform);
  c_deform->add_option("--states", deform.states, "bound states to print (default 3)");

  if (!args.empty() && !args.front().empty() && args.front()[0] != '-') {
    const auto subs = app.get_subcommands([](const CLI::App*) { return true; });
    const bool known = std::any_of(subs.begin(), subs.end(), [&](const CLI::App* a) { return a->get_name() == args.front(); });
    if (!known) {
      err << "error: unknown subcommand '" << args.front() << "'\n" << app.help();
      return argument_error;
    }
  }
  std::vector<std::string> rev = join_negative_values(args);
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return argument_error;
  }

  const CLI::App* sub = app.get_subcommands().front();
  try {
    if (sub == c_family) return family.run(out);
    if (sub == c_spectrum) return spectrum.run(out, err);
    if (sub == c_flag) return flag.run(out, err);
    if (sub == c_pres) return pres.run(out, err);
    if (sub == c_cls) return cls.run(out);
    return deform.run(out);
  } catch (...) {
    return classify_exception(err, *sub);
  }
}

}  // namespace sidef::cli
