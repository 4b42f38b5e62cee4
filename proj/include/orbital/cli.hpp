#pragma once

// The `orbital` command-line front end. run_cli is separate from main so the
// exit-code contract can be exercised in-process.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 input tableau is not a hypersurface tableau.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "orbital/error.hpp"
#include "orbital/generator.hpp"
#include "orbital/hypersurface.hpp"
#include "orbital/io.hpp"
#include "orbital/projections.hpp"
#include "orbital/rs.hpp"
#include "orbital/tableau.hpp"
#include "orbital/verify.hpp"

namespace orbital::cli {

enum exit_code : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kNotHypersurface = 3 };

namespace detail {

using json::Json;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) {
      if (text.find_first_not_of(" \t,") == std::string::npos) continue;
      throw usage_error(std::string("empty entry in ") + what);
    }
    item = item.substr(b, e - b + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != item.size()) throw usage_error(std::string("not an integer in ") + what + ": \"" + item + "\"");
    out.push_back(v);
  }
  return out;
}

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::uint64_t parse_prime(const std::string& text, const char* origin) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || v >= (1ull << 32) || !is_prime(v))
    throw usage_error(std::string(origin) + " must be a prime below 2^32, got \"" + text + "\"");
  return v;
}

inline StandardTableau read_tableau_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return json::decode_tableau(json::parse(ss.str()));
}

inline std::string chain_text(const Chain& c) {
  std::string s = "{";
  for (int k = c.lo; k <= c.hi; ++k) s += (k > c.lo ? "," : "") + std::to_string(k);
  return s + "}";
}

inline std::string chains_text(const std::vector<Chain>& cs) {
  std::string s;
  for (std::size_t k = 0; k < cs.size(); ++k)
    s += (k ? ", " : "") + ("C" + std::to_string(k + 1) + " = ") + chain_text(cs[k]);
  return s;
}

inline std::string sigma_text(const HypersurfaceDescriptor& d) {
  std::string s = "{α" + std::to_string(d.sigma_lo);
  if (d.sigma_hi > d.sigma_lo) s += ",...,α" + std::to_string(d.sigma_hi);
  s += "}";
  if (d.sigma_lo == 1 && d.sigma_hi == d.n() - 1) s += " = Π";
  return s;
}

inline void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// Runs fn(k) for k in [0, count) on up to `jobs` threads; results keep index order.
template <class Result, class Fn>
std::vector<Result> parallel_map(std::size_t count, unsigned jobs, Fn fn) {
  std::vector<Result> results(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < count;) {
      try {
        results[k] = fn(k);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::uint64_t prime = kDefaultPrime;
};

inline int cmd_richardson(Context& ctx, const std::string& tau_text, int n, bool as_json) {
  TauSet tau(n, parse_int_list(tau_text, "--tau"));
  auto tr = richardson_tableau(tau, n);
  auto cs = chains(tr);
  int dim = variety_dim(tr.shape(), n);
  if (as_json) {
    Json jc = Json::array();
    for (const auto& c : cs) jc.push_back(json::encode(c));
    print_json(ctx.out, json::document("richardson", Json{{"n", n},
                                                          {"tau", json::encode(tau)},
                                                          {"tableau", json::encode(tr)},
                                                          {"shape", json::encode(tr.shape())},
                                                          {"dim", dim},
                                                          {"chains", jc}}));
    return kOk;
  }
  ctx.out << "Richardson tableau for tau = " << tau.to_string() << ", N = " << n << "\n"
          << render(tr) << "shape " << tr.shape().to_string() << ", dim " << dim << "\n"
          << "chains: " << chains_text(cs) << "\n";
  return kOk;
}

inline void print_descriptor(std::ostream& out, const HypersurfaceDescriptor& d, std::size_t index) {
  out << "descriptor " << index << ": box " << d.dropped_box << " drops from row " << d.thickness << " to row "
      << d.thickness + 1 << "\n"
      << render(d.tableau) << "tau = " << d.tau().to_string() << ", shape " << d.tableau.shape().to_string()
      << ", dim " << variety_dim(d.tableau.shape(), d.n()) << "\n"
      << "C_s = " << chain_text(d.prev_chain) << ", C_t = " << chain_text(d.source_chain) << "\n"
      << "sigma = " << sigma_text(d) << ", thickness I = " << d.thickness << ", window [" << d.sigma_lo << ","
      << d.dropped_box << "]\n";
}

inline void print_generator(std::ostream& out, const GeneratorReport& rep, const CharPoly& cp) {
  out << "det cMin_" << rep.thickness << " = " << rep.determinant.to_string() << "\n";
  for (const auto& [j, m] : rep.m_sequence) out << "  m_" << j << " = " << m.to_string() << "\n";
  out << "l(lambda) = " << rep.l_lambda << " for lambda = " << rep.window_shape.to_string() << "\n"
      << "f = m_" << rep.l_lambda << " = " << rep.f.to_string() << "\n"
      << "wt(f) = " << rep.weight.to_string() << "\n"
      << "p_V = " << cp.to_string() << "  (degree " << cp.degree() << ")\n";
}

inline int cmd_hypersurfaces(Context& ctx, const std::optional<std::string>& tau_text, std::optional<int> n,
                             const std::optional<std::string>& tableau_path, bool generator, bool as_json) {
  std::vector<HypersurfaceDescriptor> ds;
  Json header;
  if (tableau_path) {
    if (tau_text || n) throw usage_error("--tableau excludes --tau and --n");
    auto t = read_tableau_file(*tableau_path);
    auto d = classify_hypersurface(t);
    if (!d) {
      ctx.err << "not a hypersurface tableau: " << to_string(t) << "\n";
      return kNotHypersurface;
    }
    ds.push_back(*d);
    header = Json{{"input", json::encode(t)}};
  } else {
    if (!tau_text || !n) throw usage_error("need --tau and --n, or --tableau");
    TauSet tau(*n, parse_int_list(*tau_text, "--tau"));
    auto tr = richardson_tableau(tau, *n);
    ds = hypersurface_descendants(tr);
    std::sort(ds.begin(), ds.end(), [](const auto& a, const auto& b) { return a.dropped_box < b.dropped_box; });
    header = Json{{"n", *n}, {"tau", json::encode(tau)}, {"richardson", json::encode(tr)}};
    if (!as_json)
      ctx.out << "Richardson tableau for tau = " << tau.to_string() << ", N = " << *n << "\n"
              << render(tr) << "chains: " << chains_text(chains(tr)) << "\n"
              << ds.size() << " hypersurface orbital variet" << (ds.size() == 1 ? "y" : "ies") << "\n";
  }

  int status = kOk;
  Json list = Json::array();
  for (std::size_t k = 0; k < ds.size(); ++k) {
    const auto& d = ds[k];
    Json jd = json::encode(d);
    if (!as_json) {
      ctx.out << "\n";
      print_descriptor(ctx.out, d, k + 1);
    }
    if (generator) {
      try {
        auto rep = generator_report(d);
        auto cp = char_poly(d, rep);
        jd["generator"] = json::encode(rep);
        jd["char_poly"] = json::encode(cp);
        if (!as_json) print_generator(ctx.out, rep, cp);
      } catch (const error& e) {
        if (e.code() != errc::inconsistent_indexing && e.code() != errc::zero_polynomial) throw;
        jd["generator_error"] = e.what();
        ctx.err << e.what() << "\n";
        status = kVerificationFailed;
      }
    }
    list.push_back(std::move(jd));
  }
  if (as_json) {
    header["descriptors"] = list;
    print_json(ctx.out, json::document("hypersurfaces", header));
  }
  return status;
}

struct SweepRow {
  HypersurfaceDescriptor d;
  VerificationReport rep;
};

inline int cmd_verify(Context& ctx, int nmin, int nmax, int trials, std::uint64_t seed, unsigned jobs,
                      bool as_json) {
  if (trials < 1) throw usage_error("--trials must be positive");
  if (nmax > 8) throw usage_error("--nmax is limited to 8");
  VerifyOptions opt;
  opt.trials = trials;
  opt.seed = seed;
  opt.primes = {ctx.prime, ctx.prime == kSecondaryPrime ? kDefaultPrime : kSecondaryPrime};

  std::vector<HypersurfaceDescriptor> ds;
  for (int n = std::max(nmin, 1); n <= nmax; ++n)
    for (auto& d : all_hypersurface_descriptors(n)) ds.push_back(std::move(d));
  auto reports = parallel_map<VerificationReport>(ds.size(), jobs, [&](std::size_t k) {
    return verify_conjecture(ds[k], opt);
  });

  int necessity_failures = 0, generic_shortfalls = 0;
  for (const auto& r : reports) {
    necessity_failures += !r.necessity_ok();
    generic_shortfalls += !r.generic_ok();
  }

  if (as_json) {
    Json rows = Json::array();
    for (std::size_t k = 0; k < ds.size(); ++k) {
      Json r = json::encode(reports[k]);
      r["descriptor"] = json::encode(ds[k]);
      rows.push_back(std::move(r));
    }
    Json primes = Json::array();
    for (auto p : opt.primes) primes.push_back(p);
    print_json(ctx.out, json::document("verify", Json{{"nmax", nmax},
                                                      {"trials", trials},
                                                      {"seed", seed},
                                                      {"primes", primes},
                                                      {"descriptors", ds.size()},
                                                      {"necessity_failures", necessity_failures},
                                                      {"generic_shortfalls", generic_shortfalls},
                                                      {"reports", rows}}));
  } else {
    ctx.out << std::left << std::setw(3) << "N" << std::setw(20) << "tau" << std::setw(6) << "drop" << std::setw(4)
            << "I" << std::setw(11) << "necessity" << std::setw(10) << "nonzero" << std::setw(9) << "jordan"
            << std::setw(12) << "power_rank"
            << "verdict\n";
    for (std::size_t k = 0; k < ds.size(); ++k) {
      const auto& d = ds[k];
      const auto& r = reports[k];
      auto frac = [&](int c) { return std::to_string(c) + "/" + std::to_string(r.trials); };
      const char* verdict = !r.necessity_ok() ? "FAIL" : (r.generic_ok() ? "pass" : "generic<90%");
      ctx.out << std::setw(3) << d.n() << std::setw(20) << d.tau().to_string() << std::setw(6) << d.dropped_box
              << std::setw(4) << d.thickness << std::setw(11) << frac(r.f_vanishes_on_V) << std::setw(10)
              << frac(r.f_nonzero_on_richardson) << std::setw(9) << frac(r.jordan_match) << std::setw(12)
              << frac(r.power_rank_ok) << verdict << "\n";
    }
    ctx.out << "\n" << ds.size() << " descriptors, " << trials << " trials each, primes " << opt.primes[0] << " and "
            << opt.primes[1] << "\n"
            << "necessity failures: " << necessity_failures << "\n"
            << "generic probes below 90%: " << generic_shortfalls << "\n";
  }
  return necessity_failures ? kVerificationFailed : kOk;
}

inline int cmd_project(Context& ctx, const std::string& path, int i, int j, bool steps, bool as_json) {
  auto t = read_tableau_file(path);
  auto result = project(t, i, j);
  if (as_json) {
    print_json(ctx.out, json::document("project", Json{{"input", json::encode(t)},
                                                       {"i", i},
                                                       {"j", j},
                                                       {"result", json::encode(result)},
                                                       {"shape", json::encode(result.shape())}}));
    return kOk;
  }
  ctx.out << "T =\n" << render(t);
  if (steps) {
    StandardTableau cur = t;
    for (int k = t.size(); k > j; --k) {
      cur = remove_largest(cur);
      ctx.out << "remove " << k << ":\n" << render(cur);
    }
    for (int k = 1; k < i; ++k) {
      auto trace = strip_first_traced(cur);
      ctx.out << "slide out the corner (" << k << " of " << i - 1 << "):\n";
      for (std::size_t f = 1; f < trace.frames.size(); ++f) ctx.out << render(trace.frames[f]);
      cur = trace.result;
      ctx.out << "relabel:\n" << render(cur);
    }
  }
  ctx.out << "T^[" << i << "," << j << "] =\n" << render(result) << "shape " << result.shape().to_string() << "\n";
  return kOk;
}

inline int cmd_rs(Context& ctx, const std::optional<std::string>& word, const std::optional<std::string>& path,
                  int bound, bool as_json) {
  if (word.has_value() == path.has_value()) throw usage_error("give exactly one of --word and --tableau");
  Permutation w;
  if (word) {
    w = Permutation(parse_int_list(*word, "--word"));
  } else {
    w = find_word_for_tableau(read_tableau_file(*path), bound);
  }
  auto [a, b] = rs_pair(w);
  if (as_json) {
    print_json(ctx.out, json::document("rs", Json{{"word", json::encode(w)},
                                                  {"insertion", json::encode(a)},
                                                  {"recording", json::encode(b)}}));
    return kOk;
  }
  ctx.out << "w = (";
  for (int k = 1; k <= w.size(); ++k) ctx.out << (k > 1 ? "," : "") << w(k);
  ctx.out << ")\nA(w) =\n" << render(a) << "B(w) =\n" << render(b);
  return kOk;
}

inline int cmd_remark(Context& ctx, const std::optional<std::string>& path, int nmax, std::uint64_t seed,
                      bool as_json) {
  std::vector<HypersurfaceDescriptor> ds;
  if (path) {
    auto t = read_tableau_file(*path);
    auto d = classify_hypersurface(t);
    if (!d) {
      ctx.err << "not a hypersurface tableau: " << to_string(t) << "\n";
      return kNotHypersurface;
    }
    ds.push_back(*d);
  } else {
    if (nmax > 8) throw usage_error("--nmax is limited to 8");
    for (int n = 2; n <= nmax; ++n)
      for (auto& d : all_hypersurface_descriptors(n)) ds.push_back(std::move(d));
  }
  PrimeField field(ctx.prime);
  Json rows = Json::array();
  int mismatches = 0;
  if (!as_json)
    ctx.out << std::left << std::setw(3) << "N" << std::setw(20) << "tau" << std::setw(6) << "drop" << std::setw(4)
            << "I" << std::setw(8) << "k" << std::setw(8) << "r" << std::setw(16) << "detM = +-f" << "chain condition\n";
  for (const auto& d : ds) {
    auto rep = generator_report(d);
    auto r = remark_check(d, rep.f, seed, field);
    mismatches += r.detM_equals_f != r.chain_condition;
    if (as_json) {
      Json jr = json::encode(r);
      jr["descriptor"] = json::encode(d);
      rows.push_back(std::move(jr));
    } else {
      ctx.out << std::setw(3) << d.n() << std::setw(20) << d.tau().to_string() << std::setw(6) << d.dropped_box
              << std::setw(4) << d.thickness << std::setw(8) << r.power << std::setw(8) << r.minor_size
              << std::setw(16) << (r.detM_equals_f ? "yes" : "no") << (r.chain_condition ? "yes" : "no")
              << (r.detM_equals_f != r.chain_condition ? "   <- differs" : "") << "\n";
    }
  }
  if (as_json)
    print_json(ctx.out, json::document("remark", Json{{"results", rows}, {"mismatches", mismatches}}));
  else
    ctx.out << "\n" << ds.size() << " descriptors, " << mismatches << " where the two columns differ\n";
  return kOk;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypersurface orbital varieties: tableaux, generators and numerical checks", "orbital"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  std::optional<std::string> tau_text, tableau_path, word;
  std::optional<int> n_opt;
  std::string tau_req;
  int n = 0, nmin = 2, nmax = 7, trials = 25, i = 1, j = 1, bound = 8;
  std::uint64_t seed = 0;
  std::optional<std::string> prime_text;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  bool as_json = false, generator = false, steps = false;

  auto* rich = app.add_subcommand("richardson", "Richardson tableau and chains for a tau-set");
  rich->add_option("--tau", tau_req, "Comma-separated simple-root indices, e.g. 2,3,7")->required();
  rich->add_option("--n", n, "Rank parameter N")->required()->check(CLI::Range(1, 64));
  rich->add_flag("--json", as_json, "Emit JSON");

  auto* hyp = app.add_subcommand("hypersurfaces", "Hypersurface orbital varieties and their generators");
  hyp->add_option("--tau", tau_text, "Comma-separated simple-root indices");
  hyp->add_option("--n", n_opt, "Rank parameter N")->check(CLI::Range(1, 64));
  hyp->add_option("--tableau", tableau_path, "JSON file with a tableau to classify");
  hyp->add_flag("--generator", generator, "Also compute f, the m_j sequence, wt(f) and p_V");
  hyp->add_flag("--json", as_json, "Emit JSON");

  auto* ver = app.add_subcommand("verify", "Probe the generator conjecture over all small descriptors");
  ver->add_option("--nmin", nmin, "Smallest N")->check(CLI::Range(1, 8));
  ver->add_option("--nmax", nmax, "Largest N")->check(CLI::Range(1, 64));
  ver->add_option("--trials", trials, "Random trials per descriptor");
  ver->add_option("--seed", seed, "Base seed");
  ver->add_option("--prime", prime_text, "Primary prime (overrides ORBITAL_PRIME)");
  ver->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  ver->add_flag("--json", as_json, "Emit JSON");

  auto* proj = app.add_subcommand("project", "Tableau projection T^[i,j]");
  proj->add_option("--tableau", tableau_path, "JSON tableau file")->required();
  proj->add_option("--i", i, "Window start")->required();
  proj->add_option("--j", j, "Window end")->required();
  proj->add_flag("--steps", steps, "Print every removal and slide");
  proj->add_flag("--json", as_json, "Emit JSON");

  auto* rs = app.add_subcommand("rs", "Robinson-Schensted pair of a word, or a word for a tableau");
  rs->add_option("--word", word, "Permutation in one-line notation, e.g. 3,1,4,2");
  rs->add_option("--tableau", tableau_path, "Find the lexicographically first word recording this tableau");
  rs->add_option("--bound", bound, "Largest tableau size searched")->check(CLI::Range(1, 10));
  rs->add_flag("--json", as_json, "Emit JSON");

  auto* rem = app.add_subcommand("remark", "Compare det M with f and the chain-length condition");
  rem->add_option("--tableau", tableau_path, "JSON file with a hypersurface tableau");
  rem->add_option("--nmax", nmax, "Largest N when sweeping")->check(CLI::Range(2, 64));
  rem->add_option("--seed", seed, "Seed for evaluation points");
  rem->add_option("--prime", prime_text, "Prime (overrides ORBITAL_PRIME)");
  rem->add_flag("--json", as_json, "Emit JSON");

  std::vector<const char*> argv{"orbital"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    // A subcommand's --help surfaces here with the subcommand selected.
    if (e.get_name() == "CallForHelp") {
      out << app.help();
      return kOk;
    }
    err << "orbital: " << e.what() << "\n";
    return kUsage;
  }

  detail::Context ctx{out, err};
  try {
    if (const char* env = std::getenv("ORBITAL_PRIME"); env && *env) ctx.prime = detail::parse_prime(env, "ORBITAL_PRIME");
    if (prime_text) ctx.prime = detail::parse_prime(*prime_text, "--prime");

    if (rich->parsed()) return detail::cmd_richardson(ctx, tau_req, n, as_json);
    if (hyp->parsed()) return detail::cmd_hypersurfaces(ctx, tau_text, n_opt, tableau_path, generator, as_json);
    if (ver->parsed()) return detail::cmd_verify(ctx, nmin, nmax, trials, seed, jobs, as_json);
    if (proj->parsed()) return detail::cmd_project(ctx, *tableau_path, i, j, steps, as_json);
    if (rs->parsed()) return detail::cmd_rs(ctx, word, tableau_path, bound, as_json);
    if (rem->parsed()) return detail::cmd_remark(ctx, tableau_path, nmax, seed, as_json);
  } catch (const detail::usage_error& e) {
    err << "orbital: " << e.what() << "\n";
    return kUsage;
  } catch (const error& e) {
    err << "orbital: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

inline int run_cli(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return run_cli(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace orbital::cli
