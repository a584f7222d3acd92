#include "cli.hpp"

#include "cache.hpp"
#include "sampling.hpp"

#include <yh/algebra.hpp>
#include <yh/esystem.hpp>
#include <yh/invariants.hpp>
#include <yh/quotients.hpp>

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <random>
#include <thread>

namespace yh::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Request {
  std::string family;
  int d = 1;
  std::vector<int> D{0};
  std::string braid;
};

struct Options {
  std::string cache_path;
  bool json_out = false;
};

const std::vector<std::string> kFamilies{"framed", "classical", "singular", "homflypt", "jones", "framed-jones"};

std::vector<int> subset_arg(const std::string& text, int d) {
  try {
    return normalize_subset(d, parse_subset(text));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void check_d(int d) {
  if (d < 1 || d > 11) throw UsageError("--d must lie in 1..11");
}

json render(const InvariantValue& v) {
  return json{{"family", v.meta.family}, {"d", v.meta.d}, {"D", v.meta.D},
              {"n", v.n},                {"epsilon", v.epsilon}, {"value", v.to_string()}};
}

// Parses, evaluates and renders one request; consults the cache first.
json compute(Request r, Cache* cache) {
  BraidWord b;
  if (r.family == "homflypt" || r.family == "jones") {
    b = parse_braid(r.braid, BraidKind::classical);
    r.d = 1;
    r.D = {0};
  } else if (r.family == "framed-jones") {
    b = parse_braid(r.braid, BraidKind::framed);
  } else {
    b = parse_braid(r.braid, parse_kind(r.family));
  }
  r.D = normalize_subset(r.d, r.D);
  const CacheKey key{r.family, r.d, r.D, b.to_string()};
  if (cache) {
    if (auto hit = cache->get(key)) return json::parse(*hit);
  }
  const InvariantValue v = r.family == "homflypt"       ? homflypt(b)
                           : r.family == "jones"        ? jones(b)
                           : r.family == "framed-jones" ? framed_jones(b, r.d, r.D)
                                                        : invariant(b, b.kind(), r.d, r.D);
  json result = render(v);
  if (cache) cache->put(key, result.dump());
  return result;
}

void emit(std::ostream& out, const json& result, bool json_out) {
  if (json_out)
    out << result.dump() << "\n";
  else
    out << result.at("value").get<std::string>() << "\n";
}

json solution_json(const ESolution& s) {
  json xs = json::array();
  for (const auto& x : s.x) {
    json coeffs = json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(to_string(c));
    xs.push_back(coeffs);
  }
  return json{{"d", s.d}, {"D", s.D}, {"x", xs}};
}

int cmd_esystem(int d, const std::optional<std::string>& subset, bool json_out, std::ostream& out) {
  if (d < 1 || d > 20) throw UsageError("--d must lie in 1..20");
  std::vector<ESolution> sols;
  if (subset)
    sols.push_back(build_solution(d, subset_arg(*subset, d)));
  else
    sols = enumerate_solutions(d);
  for (const auto& s : sols) {
    if (json_out) {
      out << solution_json(s).dump() << "\n";
      continue;
    }
    out << "D={" << subset_to_string(s.D) << "}:";
    for (const auto& x : s.x) out << " " << x.to_string() << ";";
    out << " E=" << to_string(e_d_value(s)) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string what;
  std::optional<int> d;
  int n = 3;
  unsigned seed = 1;
  int samples = 20;
};

int verify_relations(const VerifyArgs& a, std::ostream& out) {
  std::vector<int> ds = a.d ? std::vector<int>{*a.d} : std::vector<int>{1, 2, 3};
  if (a.n < 2 || a.n > 5) throw UsageError("--n must lie in 2..5 for relations");
  bool ok = true;
  for (const auto& name : relation_names())
    for (int d : ds) {
      const bool pass = verify_relation(name, d, a.n);
      ok = ok && pass;
      out << name << " d=" << d << " n=" << a.n << ": " << (pass ? "ok" : "FAILED") << "\n";
    }
  return ok ? 0 : 1;
}

int verify_skein_cmd(const VerifyArgs& a, std::ostream& out) {
  const int d = a.d.value_or(2);
  if (a.n < 2 || a.n > 4) throw UsageError("--n must lie in 2..4 for skein");
  std::mt19937 rng(a.seed);
  bool ok = true;
  for (const auto& sol : enumerate_solutions(d)) {
    for (auto kind : {SkeinKind::framed, SkeinKind::cubic, SkeinKind::singular}) {
      const BraidKind bk = kind == SkeinKind::framed     ? BraidKind::framed
                           : kind == SkeinKind::singular ? BraidKind::singular
                                                         : BraidKind::classical;
      int passed = 0;
      for (int k = 0; k < a.samples; ++k) {
        const BraidWord base = random_word(rng, bk, a.n, static_cast<int>(rng() % 7), d);
        const int i = 1 + static_cast<int>(rng() % (a.n - 1));
        if (verify_skein(kind, base, i, d, sol.D))
          ++passed;
        else
          out << "FAILED " << to_string(kind) << " base=\"" << base.to_string() << "\" i=" << i << "\n";
      }
      ok = ok && passed == a.samples;
      out << "skein " << to_string(kind) << " d=" << d << " D={" << subset_to_string(sol.D) << "}: " << passed << "/"
          << a.samples << "\n";
    }
  }
  return ok ? 0 : 1;
}

int verify_markov(const VerifyArgs& a, std::ostream& out) {
  const int d = a.d.value_or(2);
  if (a.n < 1 || a.n > 4) throw UsageError("--n must lie in 1..4 for markov");
  std::mt19937 rng(a.seed);
  const auto sols = enumerate_solutions(d);
  bool ok = true;
  for (auto family : {BraidKind::framed, BraidKind::classical, BraidKind::singular}) {
    int passed = 0;
    for (int s = 0; s < a.samples; ++s) {
      const auto& D = sols[rng() % sols.size()].D;
      BraidWord b = random_word(rng, family, 1 + static_cast<int>(rng() % a.n), static_cast<int>(rng() % 9), d);
      const InvariantValue base = invariant(b, family, d, D);
      bool same = true;
      for (int k = 0; k < 3; ++k) {
        const unsigned pick = rng() % 4;
        MarkovMove m;
        if (pick == 0 && b.strands() <= a.n)
          m = StabilizePos{};
        else if (pick == 1 && b.strands() <= a.n)
          m = StabilizeNeg{};
        else if (pick == 2 && family == BraidKind::framed)
          m = FramingShift{1 + static_cast<int>(rng() % b.strands()), 1, d};
        else
          m = Conjugate{random_word(rng, family == BraidKind::framed ? family : BraidKind::classical, b.strands(),
                                    1 + static_cast<int>(rng() % 2), d)};
        b = apply_move(b, m);
        same = same && same_invariant(base, invariant(b, family, d, D));
      }
      if (same)
        ++passed;
      else
        out << "FAILED " << to_string(family) << " D={" << subset_to_string(D) << "} \"" << b.to_string() << "\"\n";
    }
    ok = ok && passed == a.samples;
    out << "markov " << to_string(family) << " d=" << d << ": " << passed << "/" << a.samples << "\n";
  }
  return ok ? 0 : 1;
}

int verify_quotients(const VerifyArgs& a, std::ostream& out) {
  const int d = a.d.value_or(1);
  if (a.n != 3) throw UsageError("quotient checks run at --n 3");
  const RatFunc u = RatFunc::variable(kVarU), one(1);
  bool ok = true;
  for (auto kind : {QuotientKind::ytl, QuotientKind::ftl, QuotientKind::ctl}) {
    for (const auto& sol : enumerate_solutions(d)) {
      const RatFunc s(static_cast<long>(sol.D.size()));
      std::vector<RatFunc> zs;
      for (const RatFunc& z : {RatFunc(-1) / ((u + one) * s), RatFunc(-1) / s, RatFunc(-1) / (u + one), RatFunc(-1),
                               RatFunc(make_rational(-1, 2))})
        if (std::find(zs.begin(), zs.end(), z) == zs.end()) zs.push_back(z);
      for (const RatFunc& z : zs) {
        QuotientCheck check{kind, d, QuotientParams{z, sol.x}};
        const bool adm = admissible(kind, d, check.params);
        const VanishResult res = trace_vanishes_on_ideal(check);
        json x = json::array();
        for (const auto& v : sol.x) x.push_back(v.to_string());
        json report{{"kind", to_string(kind)},
                    {"d", d},
                    {"params", {{"D", sol.D}, {"z", z.to_string()}, {"x", x}}},
                    {"verdict", res.vanishes ? "passes" : "does not pass"},
                    {"admissible", adm}};
        if (res.witness)
          report["witness"] = {{"a", res.witness->a}, {"b", res.witness->b}, {"value", res.witness->value.to_string()}};
        out << report.dump() << "\n";
        ok = ok && adm == res.vanishes;
      }
    }
  }
  return ok ? 0 : 1;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.d) check_d(*a.d);
  if (a.samples < 1) throw UsageError("--samples must be positive");
  if (a.what == "relations") return verify_relations(a, out);
  if (a.what == "skein") return verify_skein_cmd(a, out);
  if (a.what == "markov") return verify_markov(a, out);
  return verify_quotients(a, out);
}

// ---------------------------------------------------------------------------
// batch

int cmd_batch(const std::string& path, const Request& proto, Cache* cache, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  std::vector<json> results(lines.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> any_error{false};
  auto worker = [&] {
    for (std::size_t k = next++; k < lines.size(); k = next++) {
      Request r = proto;
      r.braid = lines[k];
      try {
        results[k] = compute(r, cache);
      } catch (const std::exception& e) {
        results[k] = json{{"line", k + 1}, {"error", e.what()}};
        any_error = true;
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& r : results) out << r.dump() << "\n";
  return any_error ? 2 : 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Yokonuma-Hecke algebra invariants of framed, classical and singular links", "yh"};
  app.require_subcommand(1);
  Options opts;
  if (const char* env = std::getenv("YH_CACHE")) opts.cache_path = env;
  app.add_option("--cache", opts.cache_path, "JSON-lines result cache (default: $YH_CACHE)");
  app.add_flag("--json", opts.json_out, "Emit JSON objects instead of plain values");
  app.set_version_flag("--version", kToolVersion);

  int d = 1;
  std::string subset = "0", braid, braid_b, family, file;
  std::optional<std::string> subset_opt;

  auto* esys = app.add_subcommand("esystem", "List the E-system solutions, or build one");
  esys->add_option("--d", d, "Framing modulus")->required();
  esys->add_option("--subset", subset_opt, "Comma-separated residues");

  auto* inv = app.add_subcommand("invariant", "Gamma_D, Delta_D or H_D of a braid closure");
  inv->add_option("--family", family, "framed|classical|singular")
      ->required()
      ->check(CLI::IsMember({"framed", "classical", "singular"}));
  inv->add_option("--d", d, "Framing modulus");
  inv->add_option("--subset", subset, "Subset D of Z/dZ");
  inv->add_option("--braid", braid, "Braid word")->required();

  auto* hom = app.add_subcommand("homflypt", "Homflypt polynomial of a classical braid closure");
  hom->add_option("--braid", braid, "Braid word")->required();
  auto* jon = app.add_subcommand("jones", "Jones polynomial of a classical braid closure");
  jon->add_option("--braid", braid, "Braid word")->required();
  auto* fj = app.add_subcommand("framed-jones", "Framed Jones value");
  fj->add_option("--d", d, "Framing modulus");
  fj->add_option("--subset", subset, "Subset D of Z/dZ");
  fj->add_option("--braid", braid, "Braid word")->required();

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("--what", va.what, "relations|skein|markov|quotients")
      ->required()
      ->check(CLI::IsMember({"relations", "skein", "markov", "quotients"}));
  ver->add_option("--d", va.d, "Framing modulus");
  ver->add_option("--n", va.n, "Strand count");
  ver->add_option("--seed", va.seed, "Random seed");
  ver->add_option("--samples", va.samples, "Samples per case");

  auto* cmp = app.add_subcommand("compare", "Compare two braid closures under one invariant");
  cmp->add_option("--family", family, "Invariant family")->required()->check(CLI::IsMember(kFamilies));
  cmp->add_option("--d", d, "Framing modulus");
  cmp->add_option("--subset", subset, "Subset D of Z/dZ");
  cmp->add_option("--braid-a", braid, "First braid word")->required();
  cmp->add_option("--braid-b", braid_b, "Second braid word")->required();

  auto* bat = app.add_subcommand("batch", "Evaluate one braid per line, JSON lines out");
  bat->add_option("--file", file, "Input file")->required();
  bat->add_option("--family", family, "Invariant family")->check(CLI::IsMember(kFamilies));
  bat->add_option("--d", d, "Framing modulus");
  bat->add_option("--subset", subset, "Subset D of Z/dZ");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::unique_ptr<Cache> cache;
  if (!opts.cache_path.empty()) cache = std::make_unique<Cache>(opts.cache_path, err);

  try {
    if (*esys) return cmd_esystem(d, subset_opt, opts.json_out, out);
    if (*ver) return cmd_verify(va, out);
    check_d(d);
    const std::vector<int> D = subset_arg(subset, d);
    if (*inv || *hom || *jon || *fj) {
      const std::string fam = *inv ? family : *hom ? "homflypt" : *jon ? "jones" : "framed-jones";
      emit(out, compute(Request{fam, d, D, braid}, cache.get()), opts.json_out);
      return 0;
    }
    if (*cmp) {
      const json a = compute(Request{family, d, D, braid}, cache.get());
      const json b = compute(Request{family, d, D, braid_b}, cache.get());
      const bool equal = a.at("value") == b.at("value");
      if (opts.json_out)
        out << json{{"equal", equal}, {"a", a}, {"b", b}}.dump() << "\n";
      else
        out << (equal ? "equal" : "different") << "\n";
      return 0;
    }
    return cmd_batch(file, Request{family.empty() ? "classical" : family, d, D, ""}, cache.get(), out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BraidError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"yh"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace yh::cli
