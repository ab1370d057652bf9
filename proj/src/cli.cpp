#include "convpoly/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "convpoly/asymptotics.hpp"
#include "convpoly/family.hpp"
#include "convpoly/io.hpp"
#include "convpoly/triangle.hpp"

namespace convpoly {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string family;
  std::string f_list;
  std::string t = "2";
  std::string s = "1";
  unsigned N = 8;
  std::string format = "tsv";
  std::uint64_t seed = 1;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

class Session {
 public:
  Session(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  bool has_source() const { return !opt_.family.empty() || !opt_.f_list.empty(); }

  TruncatedSeries source(unsigned order, const std::string& fallback = {}) const {
    if (!opt_.family.empty() && !opt_.f_list.empty()) throw UsageError("give either --family or --f, not both");
    if (!opt_.f_list.empty()) {
      std::vector<Rational> e{Rational(0)};
      for (const auto& item : split(opt_.f_list, ',')) e.push_back(parse_rational(item));
      if (e.size() < order + 1) e.resize(order + 1, Rational(0));
      return TruncatedSeries::from_exponential(e);
    }
    const std::string name = opt_.family.empty() ? fallback : opt_.family;
    if (name.empty()) throw UsageError("a family source is required: --family NAME or --f f1,f2,...");
    CatalogParams params;
    params.t = parse_rational(opt_.t);
    params.s = parse_rational(opt_.s);
    try {
      return catalog_series(name, order, params);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  std::string source_name() const { return opt_.family; }

  bool json() const { return opt_.format == "json"; }

  void print_series(const TruncatedSeries& s) const {
    if (json()) {
      out_ << series_to_json(s).dump() << '\n';
      return;
    }
    for (std::size_t k = 0; k < s.coeffs().size(); ++k) out_ << (k ? "\t" : "") << to_string(s[k]);
    out_ << '\n';
  }

  void print_triangle(const LowerTriangle<Rational>& t) const {
    if (json())
      out_ << triangle_to_json(t).dump() << '\n';
    else
      out_ << triangle_to_tsv(t);
  }

  const Options& opt() const { return opt_; }
  std::ostream& out() const { return out_; }

 private:
  const Options& opt_;
  std::ostream& out_;
};

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-30, 30);
  std::uniform_int_distribution<int> den(1, 12);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

struct CheckResult {
  std::string name;
  unsigned instances = 0;
  unsigned failures = 0;
};

CheckResult verify_convolution(const Family& fam, std::mt19937_64& rng, unsigned pairs) {
  CheckResult r{"convolution"};
  for (unsigned i = 0; i < pairs; ++i) {
    const Rational x = random_rational(rng), y = random_rational(rng);
    for (unsigned n = 0; n <= fam.order(); ++n, ++r.instances)
      if (!is_zero(check_convolution(fam, n, x, y))) ++r.failures;
  }
  return r;
}

CheckResult verify_derived(const Family& fam, std::mt19937_64& rng, unsigned pairs) {
  CheckResult r{"derived"};
  for (unsigned i = 0; i < pairs; ++i) {
    const Rational x = random_rational(rng), y = random_rational(rng);
    for (unsigned n = 0; n <= fam.order(); ++n, ++r.instances)
      if (!is_zero(check_derived_convolution(fam, n, x, y))) ++r.failures;
  }
  return r;
}

CheckResult verify_tshift(const Family& fam, std::mt19937_64& rng, unsigned pairs) {
  CheckResult r{"tshift"};
  for (unsigned i = 0; i < pairs; ++i) {
    const Rational x = random_rational(rng), y = random_rational(rng), t = random_rational(rng);
    for (unsigned n = 0; n <= fam.order(); ++n, ++r.instances) {
      const auto res = check_shift_identities(fam, n, x, y, t);
      if (!is_zero(res.convolution) || !is_zero(res.derived)) ++r.failures;
    }
  }
  return r;
}

CheckResult verify_weak(const TruncatedSeries& f, const Family& fam, std::mt19937_64& rng, unsigned pairs) {
  CheckResult r{"weak"};
  std::vector<Rational> first;
  for (unsigned n = 1; n <= fam.order(); ++n) first.push_back(f.exponential(n));
  ++r.instances;
  if (!(family_from_weak_condition(first) == fam)) ++r.failures;
  for (unsigned i = 0; i < pairs; ++i) {
    const Rational x = random_rational(rng);
    for (unsigned n = 0; n <= fam.order(); ++n, ++r.instances)
      if (!is_zero(check_weak_convolution(fam, n, x))) ++r.failures;
  }
  return r;
}

CheckResult verify_rothe(unsigned n_max, std::mt19937_64& rng, unsigned triples) {
  CheckResult r{"rothe"};
  for (unsigned i = 0; i < triples; ++i) {
    const Rational x = random_rational(rng), y = random_rational(rng), t = random_rational(rng);
    for (unsigned n = 0; n <= n_max; ++n, ++r.instances)
      if (!is_zero(rothe_residual(x, y, t, n))) ++r.failures;
  }
  return r;
}

// f_{nk} = (-1)^{n-k} g_{(-k)(-n)} with g the compositional inverse of f.
CheckResult verify_duality(const TruncatedSeries& f, unsigned n_max) {
  CheckResult r{"duality"};
  const TruncatedSeries g = revert(f);
  for (long n = 0; n <= static_cast<long>(n_max); ++n)
    for (long k = 0; k <= static_cast<long>(n_max); ++k, ++r.instances) {
      const Rational sign = (n - k) % 2 == 0 ? 1 : -1;
      if (extended_value(f, n, k) != sign * extended_value(g, -k, -n)) ++r.failures;
    }
  return r;
}

CheckResult verify_lah(unsigned n_max) {
  CheckResult r{"lah"};
  const TruncatedSeries f = catalog_series("lah", 2 * n_max + 2);
  for (long n = -static_cast<long>(n_max); n <= static_cast<long>(n_max); ++n)
    for (long k = -static_cast<long>(n_max); k <= static_cast<long>(n_max); ++k, ++r.instances)
      if (extended_value(f, n, k) != extended_value(f, -k, -n)) ++r.failures;
  return r;
}

CheckResult verify_inverse(const TruncatedSeries& f, unsigned N) {
  CheckResult r{"inverse"};
  const TruncatedSeries g = revert(f);
  const auto F = triangle_from(f, N);
  const auto G = triangle_from(g, N);
  ++r.instances;
  if (!(triangle_mul(F, G) == identity_triangle(N))) ++r.failures;
  ++r.instances;
  if (!(ps_compose(g, f) == TruncatedSeries::z(f.order()))) ++r.failures;
  if (f[1] == 1) {
    ++r.instances;
    if (!(triangle_power(F, Rational(-1)) == G)) ++r.failures;
  }
  return r;
}

int report_checks(const Session& session, const std::vector<CheckResult>& results) {
  bool ok = true;
  Json arr = Json::array();
  for (const auto& r : results) {
    ok = ok && r.failures == 0;
    if (session.json()) {
      arr.push_back({{"check", r.name},
                     {"instances", r.instances},
                     {"failures", r.failures},
                     {"status", r.failures == 0 ? "PASS" : "FAIL"}});
    } else {
      session.out() << (r.failures == 0 ? "PASS" : "FAIL") << '\t' << r.name << '\t' << r.instances << " instances";
      if (r.failures) session.out() << ", " << r.failures << " nonzero residuals";
      session.out() << '\n';
    }
  }
  if (session.json()) session.out() << arr.dump() << '\n';
  return ok ? 0 : 1;
}

void tamper(Family& fam) {
  if (fam.order() < 2) throw UsageError("--tamper needs N >= 2");
  std::vector<XPolynomial> polys = fam.polys();
  polys[2] = polys[2] + XPolynomial::monomial(Rational(1, 7), 2);
  fam = Family(std::move(polys), std::nullopt, fam.name());
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact toolkit for convolution polynomials and their matrices", "convpoly"};
  app.require_subcommand(1);
  app.add_option("--family", opt.family, "Catalog family name")->group("Family");
  app.add_option("--f", opt.f_list, "Exponential coefficients f1,f2,... (zero padded to N)")->group("Family");
  app.add_option("--t", opt.t, "Parameter t of catalan-t")->group("Family");
  app.add_option("--s", opt.s, "Parameter s of s-step")->group("Family");
  app.add_option("-N", opt.N, "Order")->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--seed", opt.seed, "Seed for randomized checks");

  Session session(opt, out);
  std::function<int()> action;
  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  sub("triangle", "Convolution matrix rows 1..N")->callback([&] {
    action = [&] {
      session.print_triangle(triangle_from(session.source(opt.N), opt.N));
      return 0;
    };
  });

  sub("family", "Polynomials F_0(x)..F_N(x)")->callback([&] {
    action = [&] {
      const Family fam(family_from(session.source(opt.N), opt.N).polys(), std::nullopt, session.source_name());
      if (session.json()) {
        out << family_to_json(fam).dump() << '\n';
      } else {
        for (unsigned n = 0; n <= fam.order(); ++n) out << n << '\t' << polynomial_to_string(fam[n]) << '\n';
      }
      return 0;
    };
  });

  std::string outer_family, outer_f;
  auto* compose = sub("compose", "Matrix of g(f(z)), the product FG");
  compose->add_option("--outer", outer_family, "Catalog name of g");
  compose->add_option("--g", outer_f, "Exponential coefficients g1,g2,...");
  compose->callback([&] {
    action = [&] {
      Options g_opt = opt;
      g_opt.family = outer_family;
      g_opt.f_list = outer_f;
      if (outer_family.empty() && outer_f.empty()) throw UsageError("compose needs --outer NAME or --g g1,g2,...");
      const Session g_session(g_opt, out);
      const auto F = triangle_from(session.source(opt.N), opt.N);
      const auto G = triangle_from(g_session.source(opt.N), opt.N);
      session.print_triangle(triangle_mul(F, G));
      return 0;
    };
  });

  std::string q_text;
  bool check = false;
  auto* iterate = sub("iterate", "Fractional iterate f^[q]");
  iterate->add_option("-q", q_text, "Iteration exponent (rational)")->required();
  iterate->add_flag("--check", check, "Verify the round trip F^q -> F");
  iterate->callback([&] {
    action = [&] {
      const Rational q = parse_rational(q_text);
      const TruncatedSeries f = session.source(opt.N);
      const TruncatedSeries fq = iterate_series(f, q);
      session.print_series(fq);
      if (!check) return 0;
      const auto F = triangle_from(f, opt.N);
      const auto Fq = triangle_from(fq, opt.N);
      bool ok = Fq == triangle_power(F, q);
      if (!is_zero(q)) ok = ok && triangle_power(Fq, Rational(1) / q) == F;
      out << (ok ? "PASS" : "FAIL") << '\n';
      return ok ? 0 : 1;
    };
  });

  auto* revert_cmd = sub("revert", "Compositional inverse by Lagrange's formula");
  revert_cmd->add_flag("--check", check, "Verify g(f(z)) = f(g(z)) = z");
  revert_cmd->callback([&] {
    action = [&] {
      const TruncatedSeries f = session.source(opt.N);
      const TruncatedSeries g = revert(f);
      session.print_series(g);
      if (!check) return 0;
      const auto z = TruncatedSeries::z(f.order());
      const bool ok = ps_compose(g, f) == z && ps_compose(f, g) == z;
      out << (ok ? "PASS" : "FAIL") << '\n';
      return ok ? 0 : 1;
    };
  });

  std::string which;
  unsigned n_rothe = 6;
  unsigned samples = 20;
  bool do_tamper = false;
  auto* verify = sub("verify", "Exact identity checks at random rational points");
  verify->add_option("check", which, "Which identity")
      ->required()
      ->check(CLI::IsMember({"convolution", "derived", "tshift", "rothe", "duality", "lah", "inverse", "weak", "all"}));
  verify->add_option("-n", n_rothe, "Largest n for the Rothe identity");
  verify->add_option("--samples", samples, "Random points per check")->check(CLI::PositiveNumber);
  verify->add_flag("--tamper", do_tamper, "Corrupt F_2 before checking (negative control)");
  verify->callback([&] {
    action = [&] {
      std::mt19937_64 rng(opt.seed);
      const bool all = which == "all";
      std::vector<CheckResult> results;
      auto family = [&](const std::string& fallback) {
        Family fam = family_from(session.source(opt.N, fallback), opt.N);
        if (do_tamper) tamper(fam);
        return fam;
      };
      const std::string fallback = all ? "tree" : "";
      if (all || which == "convolution") results.push_back(verify_convolution(family(fallback), rng, samples));
      if (all || which == "derived") results.push_back(verify_derived(family(fallback), rng, samples));
      if (all || which == "tshift") results.push_back(verify_tshift(family(fallback), rng, samples));
      if (all || which == "weak")
        results.push_back(verify_weak(session.source(opt.N, fallback), family(fallback), rng, samples));
      if (all || which == "inverse") results.push_back(verify_inverse(session.source(opt.N, fallback), opt.N));
      if (all || which == "rothe") results.push_back(verify_rothe(n_rothe, rng, samples));
      if (all || which == "duality")
        results.push_back(verify_duality(session.source(2 * opt.N + 2, all ? "exp-minus-one" : "exp-minus-one"), opt.N));
      if (all || which == "lah") results.push_back(verify_lah(opt.N));
      return report_checks(session, results);
    };
  });

  std::vector<unsigned> ns;
  std::vector<double> xs;
  auto* asymp = sub("asymp", "Saddle-point approximation against exact values");
  asymp->add_option("-n", ns, "Values of n")->required()->delimiter(',');
  asymp->add_option("-x", xs, "Values of x")->required()->delimiter(',')->check(CLI::PositiveNumber);
  asymp->callback([&] {
    action = [&] {
      const unsigned n_max = *std::max_element(ns.begin(), ns.end());
      if (n_max == 0) throw UsageError("asymp needs n >= 1");
      const TruncatedSeries f = session.source(std::max({opt.N, n_max, 48U}));
      Json rows = Json::array();
      if (!session.json()) out << report_tsv_header() << '\n';
      for (unsigned n : ns)
        for (double x : xs) {
          const SaddleReport r = compare(f, n, x);
          if (session.json())
            rows.push_back(report_to_json(r));
          else
            out << report_to_tsv(r) << '\n';
          if (r.outside_validity) err << "warning: n=" << n << " x=" << x << " has y = n/x > 1/2\n";
        }
      if (session.json()) out << rows.dump() << '\n';
      return 0;
    };
  });

  sub("extend", "Polynomials f_{y(y-k)} in y for k = 0..N")->callback([&] {
    action = [&] {
      const TruncatedSeries f = session.source(opt.N + 1);
      Json rows = Json::array();
      for (unsigned k = 0; k <= opt.N; ++k) {
        const ExtendedEntry e = extended_entry(f, k);
        if (session.json())
          rows.push_back({{"k", k}, {"coeffs", series_to_json(TruncatedSeries(e.poly.coeffs().empty() ? std::vector<Rational>{0} : e.poly.coeffs()))["coeffs"]}});
        else
          out << k << '\t' << polynomial_to_string(e.poly, "y") << '\n';
      }
      if (session.json()) out << rows.dump() << '\n';
      return 0;
    };
  });

  sub("sigma", "Stirling polynomials sigma_1(x)..sigma_N(x)")->callback([&] {
    action = [&] {
      Json rows = Json::array();
      for (unsigned n = 1; n <= opt.N; ++n) {
        const XPolynomial p = stirling_polynomial(n);
        if (session.json())
          rows.push_back({{"n", n}, {"coeffs", series_to_json(TruncatedSeries(p.coeffs().empty() ? std::vector<Rational>{0} : p.coeffs()))["coeffs"]}});
        else
          out << n << '\t' << polynomial_to_string(p) << '\n';
      }
      if (session.json()) out << rows.dump() << '\n';
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const SaddleError& e) {
    err << "error: " << e.what() << " (last iterate " << e.last_iterate() << ")\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace convpoly
