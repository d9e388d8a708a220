// rq: reports on Ramanujan Cayley graphs of generalized quaternion groups.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rq/arith.hpp"
#include "rq/covalency.hpp"
#include "rq/dense_oracle.hpp"
#include "rq/kernels.hpp"
#include "rq/prime_families.hpp"
#include "rq/spectrum.hpp"
#include "rq/table2_fixture.hpp"

using json = nlohmann::ordered_json;
using namespace rq;

namespace {

constexpr double kDensityTolerance = 0.01;
constexpr std::uint64_t kPublishedXmax = 1'000'000'000'000ULL;

// Accepts plain integers and exact scientific forms such as 1e12 or 2.5e6.
std::uint64_t parse_count(const std::string& text) {
  const auto e = text.find_first_of("eE");
  if (e == std::string::npos) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
      throw CLI::ValidationError("not a non-negative integer: " + text);
    }
    return std::stoull(text);
  }
  std::string mant = text.substr(0, e);
  const std::string exps = text.substr(e + 1);
  if (mant.empty() || exps.empty() || exps.find_first_not_of("0123456789") != std::string::npos) {
    throw CLI::ValidationError("not a count: " + text);
  }
  int exp10 = std::stoi(exps);
  const auto dot = mant.find('.');
  if (dot != std::string::npos) {
    exp10 -= static_cast<int>(mant.size() - dot - 1);
    mant.erase(dot, 1);
  }
  if (mant.empty() || mant.find_first_not_of("0123456789") != std::string::npos || exp10 < 0 || exp10 > 19) {
    throw CLI::ValidationError("not an integral count: " + text);
  }
  const std::uint64_t limit = std::uint64_t{1} << 63;
  std::uint64_t v = std::stoull(mant);
  for (int i = 0; i < exp10; ++i) {
    if (v > limit / 10) throw CLI::ValidationError("count too large: " + text);
    v *= 10;
  }
  return v;
}

double round15(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::stod(buf);
}

// Character sums of integers come out as n +- 1e-15; report those as n.
double snap(double x) {
  const double n = std::round(x);
  return std::fabs(x - n) < kValueMergeTolerance ? n + 0.0 : x;
}

std::string fmt15(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

struct Output {
  bool as_json = true;
  json failures = json::array();

  int finish(const std::string& command, json params, json results) {
    if (as_json) {
      json env;
      env["command"] = command;
      env["parameters"] = std::move(params);
      env["results"] = std::move(results);
      env["tool_version"] = RQ_TOOL_VERSION;
      if (!failures.empty()) env["failures"] = failures;
      std::cout << env.dump(2) << "\n";
    } else if (!failures.empty()) {
      std::cerr << json{{"failures", failures}}.dump() << "\n";
    }
    return failures.empty() ? 0 : 1;
  }
};

json witness_json(const ExceptionalVerdict& v) {
  json out;
  out["status"] = to_string(v.status);
  out["exceptional"] = v.exceptional();
  if (v.spectral) {
    out["witness"] = {{"l1", v.spectral->l1},
                      {"l2", v.spectral->l2},
                      {"mu2", round15(v.spectral->mu2)},
                      {"ramanujan_bound", round15(v.spectral->bound)},
                      {"gap", round15(v.spectral->mu2 - v.spectral->bound)},
                      {"extended_precision", v.spectral->extended_precision}};
  }
  if (v.arithmetic) {
    json w = {{"r", v.arithmetic->r},
              {"c", v.arithmetic->c},
              {"k", v.arithmetic->k},
              {"c_in_family", v.arithmetic->c_in_family}};
    w["k_threshold"] = v.arithmetic->k_threshold ? json(*v.arithmetic->k_threshold) : json(nullptr);
    out["witness"] = w;
  }
  return out;
}

struct SpectrumArgs {
  std::string subset;
  int m = 0;
  std::string extremal;
  bool complete = false;
  bool oracle = false;
};

CayleySubset resolve_subset(const SpectrumArgs& a) {
  const int given = (a.subset.empty() ? 0 : 1) + (a.extremal.empty() ? 0 : 1) + (a.complete ? 1 : 0);
  if (given != 1) throw CLI::ValidationError("give exactly one of --subset, --extremal, --complete");
  if (!a.subset.empty()) return CayleySubset::parse(a.subset);
  if (a.m < 1) throw CLI::ValidationError("--m is required with --extremal / --complete");
  const OrderParam m(a.m);
  if (a.complete) return CayleySubset::complete(m);
  int l1 = 0, l2 = 0;
  char comma = 0;
  std::istringstream in(a.extremal);
  if (!(in >> l1 >> comma >> l2) || comma != ',' || !in.eof()) {
    throw CLI::ValidationError("--extremal expects l1,l2");
  }
  return extremal_subset(m, l1, l2);
}

int run_spectrum(const SpectrumArgs& a, Output& out) {
  const CayleySubset s = resolve_subset(a);
  const Spectrum spec = full_spectrum(s);
  const RamanujanVerdict v = ramanujan_verdict(s);
  const auto prof = s.profile();
  std::optional<double> deviation;
  if (a.oracle) {
    deviation = spectra_max_deviation(s);
    if (*deviation > kOracleTolerance) {
      out.failures.push_back({{"check", "dense_oracle"}, {"max_deviation", round15(*deviation)}});
    }
  }

  if (!out.as_json) {
    std::cout << "value,multiplicity\n";
    for (const auto& e : spec.entries()) std::cout << fmt15(snap(e.value)) << "," << e.multiplicity << "\n";
    return out.finish("spectrum", {}, {});
  }
  json params = {{"subset", s.to_literal()}, {"oracle", a.oracle}};
  json eig = json::array();
  for (const auto& e : spec.entries()) eig.push_back({{"value", round15(snap(e.value))}, {"multiplicity", e.multiplicity}});
  json res = {{"m", s.m()},
              {"degree", s.size()},
              {"covalency", {{"l", prof.l}, {"l1", prof.l1}, {"l2", prof.l2}, {"delta", prof.delta}}},
              {"generates", s.generates()},
              {"eigenvalues", eig},
              {"lambda", round15(snap(v.lambda))},
              {"ramanujan_bound", round15(v.bound)},
              {"ramanujan", v.ramanujan},
              {"extended_precision", v.extended_precision}};
  if (deviation) res["oracle_max_deviation"] = round15(*deviation);
  return out.finish("spectrum", params, res);
}

struct LboundArgs {
  int m = 0;
  std::string family = "s";
  bool exact = false;
  bool closed_form = false;
};

int run_lbound(const LboundArgs& a, Output& out) {
  if (a.exact == a.closed_form) throw CLI::ValidationError("give exactly one of --exact, --closed-form");
  const OrderParam m(a.m);
  const Family fam = a.family == "s" ? Family::kS : Family::kSPrime;
  const auto l0 = trivial_bound(a.m);
  json params = {{"m", a.m}, {"family", a.family}, {"method", a.exact ? "exact" : "closed-form"}};
  json res = {{"trivial_bound", l0}};
  if (a.exact) {
    res["ltilde"] = exact_ltilde(m, fam);
    res["basis"] = "exhaustive enumeration";
  } else if (fam == Family::kS || a.m % 2 == 0) {
    res["ltilde"] = l0;
    res["basis"] = "theorem";
  } else if (a.m >= static_cast<int>(kMinClassifiedPrime) && is_prime(static_cast<std::uint64_t>(a.m))) {
    const auto v = is_exceptional_spectral(static_cast<std::uint64_t>(a.m));
    res["ltilde"] = l0 + (v.exceptional() ? 1 : 0);
    res["basis"] = "exceptional-prime classification";
    res["exceptional"] = v.exceptional();
  } else {
    res["ltilde"] = nullptr;
    res["lower_bound"] = l0;
    res["basis"] = "no closed form for this m; trivial bound only";
  }
  if (!out.as_json) {
    std::cout << "m,family,trivial_bound,ltilde\n"
              << a.m << "," << a.family << "," << l0 << ","
              << (res["ltilde"].is_null() ? std::string() : res["ltilde"].dump()) << "\n";
  }
  return out.finish("lbound", params, res);
}

struct ExceptionalArgs {
  std::uint64_t p = 0;
  std::string method = "both";
};

int run_exceptional(const ExceptionalArgs& a, Output& out) {
  if (a.p < 3 || !is_prime(a.p)) throw CLI::ValidationError("--p must be an odd prime");
  json params = {{"p", a.p}, {"method", a.method}};
  json res = {{"l0", trivial_bound(static_cast<std::int64_t>(a.p))}};
  std::optional<ExceptionalVerdict> sv, av;
  if (a.method != "arithmetic") {
    sv = is_exceptional_spectral(a.p);
    res["spectral"] = witness_json(*sv);
  }
  if (a.method != "spectral") {
    av = is_exceptional_arithmetic(a.p);
    res["arithmetic"] = witness_json(*av);
  }
  if (sv && av) {
    const bool agree = sv->status == av->status;
    res["agreement"] = agree;
    if (!agree) out.failures.push_back({{"check", "route_agreement"}, {"p", a.p}});
  }
  if (!out.as_json) {
    std::cout << "p,method,status\n";
    if (sv) std::cout << a.p << ",spectral," << to_string(sv->status) << "\n";
    if (av) std::cout << a.p << ",arithmetic," << to_string(av->status) << "\n";
  }
  return out.finish("exceptional", params, res);
}

struct Table2Args {
  std::uint64_t xmax = kPublishedXmax;
  std::uint64_t prime_bound = kDefaultPrimeBound;
  std::string rows = "all";
  std::string fixture;
  bool compare = false;
  std::string convention = "published";
};

std::vector<PrimeFamily> select_rows(const std::string& spec) {
  if (spec == "all") return exceptional_families();
  int r = 0;
  std::int64_t c = 0;
  char comma = 0;
  std::istringstream in(spec);
  if (!(in >> r >> comma >> c) || comma != ',' || !in.eof()) {
    throw CLI::ValidationError("--rows expects 'all' or r,c");
  }
  for (const auto& f : exceptional_families()) {
    if (f.r == r && f.c == c) return {f};
  }
  throw CLI::ValidationError("(" + spec + ") is not one of the 54 families");
}

int run_table2(const Table2Args& a, Output& out) {
  const DeltaConvention conv = parse_delta_convention(a.convention);
  const auto families = select_rows(a.rows);
  if (a.prime_bound < kMinPrimeBound) throw CLI::ValidationError("--prime-bound must be >= 1000");
  std::optional<std::vector<Table2Row>> fixture;
  std::string fixture_path;
  if (a.compare || !a.fixture.empty()) {
    fixture_path = a.fixture.empty() ? default_table2_path().string() : a.fixture;
    fixture = load_table2(fixture_path);
  }
  const auto primes = primes_up_to(a.prime_bound);

  json rows = json::array();
  if (!out.as_json) {
    std::cout << "r,c,k_threshold,k_consistent,k_published,j1,j2,j3,j4,j5,N,density\n";
  }
  for (const auto& f : families) {
    const auto k_cons = derive_k_threshold(f.r, f.c, DeltaConvention::kConsistent);
    const auto k_pub = derive_k_threshold(f.r, f.c, DeltaConvention::kPublished);
    const auto k_used = conv == DeltaConvention::kConsistent ? k_cons : k_pub;
    const FamilyReport rep = enumerate_family_primes(f.r, f.c, a.xmax, k_used);
    const double density = hl_constant(f.discriminant_reduced(), primes) / (2.0 * hl_delta(f.r));

    if (out.as_json) {
      rows.push_back({{"r", f.r},
                      {"c", f.c},
                      {"k_threshold", k_used},
                      {"k_consistent", k_cons},
                      {"k_published", k_pub},
                      {"first_primes", rep.first_primes},
                      {"count", rep.count},
                      {"outside_interval", rep.outside_interval},
                      {"hl_density", round15(density)}});
    } else {
      std::cout << f.r << "," << f.c << "," << k_used << "," << k_cons << "," << k_pub;
      for (std::size_t i = 0; i < 5; ++i) {
        std::cout << ",";
        if (i < rep.first_primes.size()) std::cout << rep.first_primes[i];
      }
      std::cout << "," << rep.count << "," << fmt15(density) << "\n";
    }

    if (rep.outside_interval != 0) {
      out.failures.push_back({{"check", "interval"}, {"r", f.r}, {"c", f.c}, {"count", rep.outside_interval}});
    }
    if (!fixture) continue;
    const auto ref = find_row(*fixture, f.r, f.c);
    auto fail = [&](const std::string& what, json expected, json got) {
      out.failures.push_back(
          {{"check", what}, {"r", f.r}, {"c", f.c}, {"expected", expected}, {"got", got}});
    };
    if (!ref) {
      fail("fixture_row", "present", "missing");
      continue;
    }
    if (ref->k_threshold != k_used) fail("k_threshold", ref->k_threshold, k_used);
    const std::size_t comparable =
        std::min<std::size_t>(5, static_cast<std::size_t>(std::count_if(
                                     ref->first_primes.begin(), ref->first_primes.end(),
                                     [&](std::uint64_t p) { return p <= a.xmax; })));
    for (std::size_t i = 0; i < comparable; ++i) {
      const std::uint64_t got = i < rep.first_primes.size() ? rep.first_primes[i] : 0;
      if (got != ref->first_primes[i]) fail("first_primes[" + std::to_string(i) + "]", ref->first_primes[i], got);
    }
    if (a.xmax == kPublishedXmax && ref->count != rep.count) fail("count", ref->count, rep.count);
    if (std::fabs(ref->density - density) > kDensityTolerance) {
      fail("hl_density", ref->density, round15(density));
    }
  }
  json params = {{"xmax", a.xmax},
                 {"prime_bound", a.prime_bound},
                 {"rows", a.rows},
                 {"convention", a.convention},
                 {"fixture", fixture ? json(fixture_path) : json(nullptr)}};
  return out.finish("table2", params, {{"delta_r", "2 for even r, 1 for odd r (derived)"}, {"rows", rows}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral and arithmetic reports for Cayley graphs of Q_4m"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "OpenMP worker count (0 = runtime default)")->check(CLI::NonNegativeNumber);

  Output out;
  bool want_json = false, want_csv = false;
  auto add_format = [&](CLI::App* sub) {
    auto* j = sub->add_flag("--json", want_json, "JSON report");
    auto* c = sub->add_flag("--csv", want_csv, "CSV report");
    j->excludes(c);
  };

  SpectrumArgs sa;
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues, lambda(S) and the Ramanujan verdict");
  spectrum->add_option("--subset", sa.subset, "m=<int>;pairs=<k1,..>;delta=<0|1>;ypairs=<k2,..>");
  spectrum->add_option("--m", sa.m, "order parameter, with --extremal or --complete");
  spectrum->add_option("--extremal", sa.extremal, "extremal subset S^(l1,l2), given as l1,l2");
  spectrum->add_flag("--complete", sa.complete, "S = G minus the identity");
  spectrum->add_flag("--oracle", sa.oracle, "compare against the dense Jacobi spectrum");
  add_format(spectrum);

  LboundArgs la;
  auto* lbound = app.add_subcommand("lbound", "Maximal Ramanujan covalency");
  lbound->add_option("--m", la.m, "order parameter")->required()->check(CLI::Range(1, 1 << 20));
  lbound->add_option("--family", la.family, "s or sprime")->check(CLI::IsMember({"s", "sprime"}));
  lbound->add_flag("--exact", la.exact, "exhaustive enumeration (m <= 12)");
  lbound->add_flag("--closed-form", la.closed_form, "closed-form value");
  add_format(lbound);

  ExceptionalArgs ea;
  auto* exceptional = app.add_subcommand("exceptional", "Classify an odd prime as exceptional or ordinary");
  exceptional->add_option("--p", ea.p, "odd prime")->required();
  exceptional->add_option("--method", ea.method, "spectral, arithmetic or both")
      ->check(CLI::IsMember({"spectral", "arithmetic", "both"}));
  add_format(exceptional);

  Table2Args ta;
  auto* table2 = app.add_subcommand("table2", "Regenerate the exceptional-prime family table (CSV by default)");
  table2->add_option_function<std::string>(
      "--xmax", [&](const std::string& v) { ta.xmax = parse_count(v); }, "count primes up to this bound (e.g. 1e12)");
  table2->add_option_function<std::string>(
      "--prime-bound", [&](const std::string& v) { ta.prime_bound = parse_count(v); },
      "Euler product truncation (e.g. 1e7)");
  table2->add_option("--rows", ta.rows, "'all' or r,c");
  table2->add_option("--fixture", ta.fixture, "reference CSV to diff against");
  table2->add_flag("--compare", ta.compare, "diff against the default fixture");
  table2->add_option("--convention", ta.convention, "threshold convention for J and N: published or consistent")
      ->check(CLI::IsMember({"published", "consistent"}));
  add_format(table2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  set_thread_count(threads);

  try {
    if (spectrum->parsed()) {
      out.as_json = !want_csv;
      return run_spectrum(sa, out);
    }
    if (lbound->parsed()) {
      out.as_json = !want_csv;
      return run_lbound(la, out);
    }
    if (exceptional->parsed()) {
      out.as_json = !want_csv;
      return run_exceptional(ea, out);
    }
    out.as_json = want_json;
    return run_table2(ta, out);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "rq: " << e.what() << "\n";
    return 2;
  }
}
