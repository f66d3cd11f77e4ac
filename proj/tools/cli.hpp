// Copyright 2026 The symcontain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 success/verified, 1 check failed or
// certificate refused, 2 invalid input.

#ifndef SYMCONTAIN_TOOLS_CLI_HPP
#define SYMCONTAIN_TOOLS_CLI_HPP

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symcontain/symcontain.hpp"

namespace symcontain::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInvalidInput = 2 };

namespace detail {

struct Output {
  std::ostream& out;
  std::ostream& err;
  bool json = false;

  void emit(const Json& j) const { out << j.dump(2) << '\n'; }
};

inline std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

inline std::string join(const IndexSet& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

struct StarArgs {
  std::int64_t n = 0;
  std::int64_t h = 0;
  std::vector<std::int64_t> degrees;
  std::optional<std::int64_t> ambient;

  void attach(CLI::App* sub) {
    sub->add_option("--n", n, "number of forms")->required();
    sub->add_option("--h", h, "codimension")->required();
    sub->add_option("--degrees", degrees, "comma-separated form degrees (default all 1)")->delimiter(',');
    sub->add_option("--N", ambient, "ambient projective dimension (default n)");
  }

  StarConfig config() const {
    if (n < 1 || h < 1) throw invalid_input("--n and --h must be positive");
    auto degs = degrees.empty() ? std::vector<std::int64_t>(static_cast<std::size_t>(n), 1) : degrees;
    std::optional<std::size_t> amb;
    if (ambient) {
      if (*ambient < 1) throw invalid_input("--N must be positive");
      amb = static_cast<std::size_t>(*ambient);
    }
    return StarConfig(static_cast<std::size_t>(n), static_cast<std::size_t>(h), std::move(degs), amb);
  }
};

struct ShapeArgs {
  std::string flavor;
  std::int64_t p = 0;
  std::optional<std::int64_t> q;
  std::int64_t t = 0;

  void attach(CLI::App* sub) {
    sub->add_option("--flavor", flavor, "generic | symmetric | pfaffian")->required();
    sub->add_option("--p", p, "rows (or size of the square matrix)")->required();
    sub->add_option("--q", q, "columns (generic only)");
    sub->add_option("--t", t, "minor size (half pfaffian order)")->required();
  }

  MatrixShape shape() const {
    switch (parse_flavor(flavor)) {
      case Flavor::generic:
        if (!q) throw invalid_input("--q is required for generic shapes");
        return MatrixShape::generic(p, *q, t);
      case Flavor::symmetric: return MatrixShape::symmetric(p, t);
      case Flavor::pfaffian: return MatrixShape::pfaffian(p, t);
    }
    throw invalid_input("unknown flavor");
  }
};

inline Json shape_json(const MatrixShape& s) {
  Json j;
  j["flavor"] = std::string(flavor_name(s.flavor()));
  j["p"] = s.p();
  if (s.flavor() == Flavor::generic) j["q"] = s.q();
  j["t"] = s.t();
  j["height"] = s.height();
  return j;
}

inline std::uint64_t positive(std::int64_t v, const char* name) {
  if (v < 1) throw invalid_input(std::string(name) + " must be positive");
  return static_cast<std::uint64_t>(v);
}

// Random exponent vector in I^(power), for --seed driven sampling.
inline ExponentVector sample_star_member(const StarConfig& cfg, std::int64_t power, std::mt19937_64& rng) {
  const auto hh = static_cast<std::int64_t>(cfg.h());
  std::uniform_int_distribution<std::int64_t> dist(0, ceil_div(power, hh) + 2);
  std::vector<std::int64_t> a(cfg.n());
  for (auto& x : a) x = dist(rng);
  while (!star_member(cfg, ExponentVector(a), power)) {
    const auto stat = h_smallest_sum(ExponentVector(a), cfg.h());
    ++a[stat.witness[std::uniform_int_distribution<std::size_t>(0, stat.witness.size() - 1)(rng)]];
  }
  return ExponentVector(a);
}

inline std::vector<std::int64_t> sample_det_sizes(const MatrixShape& shape, std::int64_t power, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(shape.t(), shape.max_size());
  std::vector<std::int64_t> sizes;
  std::int64_t g = 0;
  while (g < power) {
    sizes.push_back(dist(rng));
    g += shape.contribution(sizes.back());
  }
  return sizes;
}

inline std::string read_all(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace detail

/// Runs the CLI on argv-style arguments (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace detail;

  CLI::App app{"Exact symbolic-power invariants and containment certificates", "symcontain"};
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  std::uint64_t seed = 0;
  app.add_flag("--json", json, "emit JSON");
  app.add_option("--seed", seed, "seed for sampled inputs");

  // star
  auto* star = app.add_subcommand("star", "star configurations")->require_subcommand(1)->fallthrough();
  StarArgs sa;
  std::int64_t k = 0;
  std::int64_t m = 0;
  std::int64_t r = 0;
  std::int64_t c = 0;
  std::vector<std::int64_t> exponents;

  auto* star_alpha_cmd = star->add_subcommand("alpha", "least degree of I^(k)")->fallthrough();
  sa.attach(star_alpha_cmd);
  star_alpha_cmd->add_option("--k", k)->required();

  auto* star_member_cmd = star->add_subcommand("member", "is F^a in I^(k)")->fallthrough();
  sa.attach(star_member_cmd);
  star_member_cmd->add_option("--exponents", exponents)->delimiter(',')->required();
  star_member_cmd->add_option("--k", k)->required();

  auto* star_wald_cmd = star->add_subcommand("waldschmidt", "exact Waldschmidt constant")->fallthrough();
  sa.attach(star_wald_cmd);

  auto* star_cert_cmd = star->add_subcommand("certify", "containment certificate")->fallthrough();
  sa.attach(star_cert_cmd);
  star_cert_cmd->add_option("--m", m)->required();
  star_cert_cmd->add_option("--r", r)->required();
  star_cert_cmd->add_option("--c", c)->required();
  star_cert_cmd->add_option("--exponents", exponents, "input exponents (sampled from --seed if omitted)")
      ->delimiter(',');

  // det
  auto* det = app.add_subcommand("det", "determinantal and pfaffian ideals")->require_subcommand(1)->fallthrough();
  ShapeArgs da;
  std::vector<std::int64_t> sizes;
  std::string mode = "theorem34";
  std::int64_t n_max = 0;

  auto* det_alpha_cmd = det->add_subcommand("alpha", "least degree of I^(k)")->fallthrough();
  da.attach(det_alpha_cmd);
  det_alpha_cmd->add_option("--k", k)->required();

  auto* det_omega_cmd = det->add_subcommand("omega", "largest minimal generator degree of I^(m)")->fallthrough();
  da.attach(det_omega_cmd);
  det_omega_cmd->add_option("--m", m)->required();

  auto* det_member_cmd = det->add_subcommand("member", "is the product of minors in I^(k)")->fallthrough();
  da.attach(det_member_cmd);
  det_member_cmd->add_option("--sizes", sizes)->delimiter(',')->required();
  det_member_cmd->add_option("--k", k)->required();

  auto* det_cert_cmd = det->add_subcommand("certify", "containment certificate")->fallthrough();
  da.attach(det_cert_cmd);
  det_cert_cmd->add_option("--sizes", sizes, "factor sizes (sampled from --seed if omitted)")->delimiter(',');
  det_cert_cmd->add_option("--m", m)->required();
  det_cert_cmd->add_option("--r", r)->required();
  det_cert_cmd->add_option("--c", c, "offset (remark35 mode)");
  det_cert_cmd->add_option("--mode", mode, "theorem34 | remark35")->check(CLI::IsMember({"theorem34", "remark35"}));

  auto* det_dem_cmd = det->add_subcommand("demailly", "Demailly-like bound check")->fallthrough();
  da.attach(det_dem_cmd);
  det_dem_cmd->add_option("--m", m)->required();
  det_dem_cmd->add_option("--n-max", n_max)->required();

  // points
  auto* points = app.add_subcommand("points", "general points in P^N")->require_subcommand(1)->fallthrough();
  std::int64_t N = 0;
  std::string s_text;
  std::int64_t N_lo = 3, N_hi = 6, m_lo = 1, m_hi = 5, k_extra = 10;
  std::int64_t fermat_n = 0;
  std::int64_t k_max = 10;

  auto* pts_cert_cmd = points->add_subcommand("certify", "certify Demailly's bound for s general points")->fallthrough();
  pts_cert_cmd->add_option("--N", N)->required();
  pts_cert_cmd->add_option("--m", m)->required();
  pts_cert_cmd->add_option("--s", s_text, "number of points (decimal)")->required();

  auto* pts_l24_cmd = points->add_subcommand("lemma24", "binomial inequality at (N, m, k)")->fallthrough();
  pts_l24_cmd->add_option("--N", N)->required();
  pts_l24_cmd->add_option("--m", m)->required();
  pts_l24_cmd->add_option("--k", k)->required();

  auto* pts_sweep_cmd = points->add_subcommand("sweep", "minimal k frontier of the binomial inequality")->fallthrough();
  pts_sweep_cmd->add_option("--N-min", N_lo);
  pts_sweep_cmd->add_option("--N-max", N_hi);
  pts_sweep_cmd->add_option("--m-min", m_lo);
  pts_sweep_cmd->add_option("--m-max", m_hi);
  pts_sweep_cmd->add_option("--k-extra", k_extra);

  auto* pts_fermat_cmd = points->add_subcommand("fermat", "Fermat-type ideal checks")->fallthrough();
  pts_fermat_cmd->add_option("--n", fermat_n)->required();
  pts_fermat_cmd->add_option("--k-max", k_max);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "monomial-ideal oracle")->require_subcommand(1)->fallthrough();
  std::int64_t on = 0, oh = 0, ok = 0, odeg = 0;
  auto* cross_cmd = oracle->add_subcommand("crosscheck", "compare the star engine with the oracle")->fallthrough();
  cross_cmd->add_option("--n", on)->required();
  cross_cmd->add_option("--h", oh)->required();
  cross_cmd->add_option("--k", ok)->required();
  cross_cmd->add_option("--deg-bound", odeg)->required();

  // verify
  std::string cert_path;
  auto* verify_cmd = app.add_subcommand("verify", "re-verify a JSON certificate")->fallthrough();
  verify_cmd->add_option("file", cert_path, "certificate file, or - for stdin")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kInvalidInput;
  }

  const Output io{out, err, json};
  std::mt19937_64 rng(seed);

  try {
    if (star_alpha_cmd->parsed()) {
      const auto v = star_alpha(sa.config(), k);
      if (json) io.emit({{"alpha", v}});
      else out << v << '\n';
      return kOk;
    }
    if (star_member_cmd->parsed()) {
      const bool v = star_member(sa.config(), ExponentVector(exponents), k);
      if (json) io.emit({{"member", v}});
      else out << (v ? "true" : "false") << '\n';
      return v ? kOk : kCheckFailed;
    }
    if (star_wald_cmd->parsed()) {
      const auto w = star_waldschmidt_lp(sa.config());
      if (json) {
        Json ex = Json::array();
        for (const auto& q : w.exponents) ex.push_back(to_string(q));
        io.emit({{"waldschmidt", to_string(w.value)}, {"exponents", ex}});
      } else {
        out << to_string(w.value) << '\n';
      }
      return kOk;
    }
    if (star_cert_cmd->parsed()) {
      const auto cfg = sa.config();
      const ExponentVector a =
          exponents.empty() ? sample_star_member(cfg, ::symcontain::detail::star_containment_power(cfg.h(), m, r, c), rng)
                            : ExponentVector(exponents);
      const auto cert = star_certify_containment(cfg, a, m, r, c);
      const bool ok_cert = star_verify_certificate(cert);
      if (json) {
        io.emit(to_json(cert));
      } else {
        out << "input     " << join(cert.input.to_vector()) << '\n'
            << "base      " << join(cert.base.to_vector()) << "  (x r = " << cert.r << ")\n"
            << "tight     {" << join(cert.tight_subset) << "}\n"
            << "leftover  " << join(cert.leftover.to_vector()) << "  degree " << cert.leftover_degree
            << " >= " << cert.required_degree << '\n'
            << "verified  " << (ok_cert ? "true" : "false") << '\n';
      }
      return ok_cert ? kOk : kCheckFailed;
    }

    if (det_alpha_cmd->parsed()) {
      const auto v = det_alpha(da.shape(), k);
      if (json) io.emit({{"alpha", v}});
      else out << v << '\n';
      return kOk;
    }
    if (det_omega_cmd->parsed()) {
      const auto v = det_omega(da.shape(), m);
      if (json) io.emit({{"omega", v}});
      else out << v << '\n';
      return kOk;
    }
    if (det_member_cmd->parsed()) {
      const auto shape = da.shape();
      const SizeMultiset ms(shape, sizes);
      const bool v = det_member(shape, ms, k);
      if (json) io.emit({{"member", v}, {"gamma", gamma(shape, ms)}});
      else out << (v ? "true" : "false") << '\n';
      return v ? kOk : kCheckFailed;
    }
    if (det_cert_cmd->parsed()) {
      const auto shape = da.shape();
      const auto md = parse_mode(mode);
      if (md == ContainmentMode::general && c < 1) throw invalid_input("--c is required in remark35 mode");
      const auto power = ::symcontain::detail::det_containment_power(shape, md, m, r, c);
      const SizeMultiset ms(shape, sizes.empty() ? sample_det_sizes(shape, power, rng) : sizes);
      const auto cert = det_certify_containment(shape, ms, m, r, c, md);
      const bool ok_cert = det_verify_certificate(cert);
      if (json) {
        io.emit(to_json(cert));
      } else {
        out << "sizes     " << join(cert.sizes) << '\n';
        for (std::size_t g = 0; g < cert.groups.size(); ++g) {
          out << "group " << g << "   {" << join(cert.groups[g].members) << "}";
          if (cert.groups[g].shrink) {
            out << "  shrink #" << cert.groups[g].shrink->index << " by " << cert.groups[g].shrink->amount;
          }
          out << '\n';
        }
        out << "leftover  {" << join(cert.leftover) << "}\n"
            << "budget    " << cert.madic_budget << " >= " << cert.required_budget << '\n'
            << "verified  " << (ok_cert ? "true" : "false") << '\n';
      }
      return ok_cert ? kOk : kCheckFailed;
    }
    if (det_dem_cmd->parsed()) {
      const auto shape = da.shape();
      const auto rep = det_demailly_check(shape, m, n_max);
      if (json) {
        Json rows = Json::array();
        for (const auto& row : rep.rows) {
          rows.push_back({{"n", row.n}, {"lhs", to_string(row.lhs)}, {"rhs", to_string(row.rhs)}, {"pass", row.pass}});
        }
        io.emit({{"shape", shape_json(shape)}, {"m", m}, {"rows", rows}, {"pass", rep.all_pass}});
      } else {
        out << "n  alpha(n)/n  bound  pass\n";
        for (const auto& row : rep.rows) {
          out << row.n << "  " << to_string(row.lhs) << "  " << to_string(row.rhs) << "  "
              << (row.pass ? "yes" : "NO") << '\n';
        }
      }
      return rep.all_pass ? kOk : kCheckFailed;
    }

    if (pts_cert_cmd->parsed()) {
      if (s_text.empty() || s_text.find_first_not_of("0123456789") != std::string::npos) {
        throw invalid_input("--s must be a nonnegative decimal integer");
      }
      const auto cert = certify_demailly_general_points(positive(N, "--N"), positive(m, "--m"), BigInt(s_text));
      if (json) {
        io.emit(to_json(cert));
      } else {
        out << "k = " << cert.k << ", w = " << cert.w << ", reg bound = " << cert.reg_bound
            << ", r threshold = " << cert.r_threshold << '\n';
        for (const auto& e : cert.trace) {
          out << "  " << e.name << ": " << e.lhs << (e.strict ? " > " : " >= ") << e.rhs << "  "
              << (e.holds() ? "ok" : "FAILS") << '\n';
        }
        out << "Demailly bound " << to_string(cert.demailly_rhs) << (cert.granted ? " granted" : " not granted")
            << '\n';
      }
      return cert.granted ? kOk : kCheckFailed;
    }
    if (pts_l24_cmd->parsed()) {
      const bool v = binomial_inequality_holds(positive(N, "--N"), positive(m, "--m"), positive(k, "--k"));
      if (json) io.emit({{"holds", v}});
      else out << (v ? "true" : "false") << '\n';
      return v ? kOk : kCheckFailed;
    }
    if (pts_sweep_cmd->parsed()) {
      if (k_extra < 0) throw invalid_input("--k-extra must be nonnegative");
      const auto rep = binomial_inequality_sweep(positive(N_lo, "--N-min"), positive(N_hi, "--N-max"), positive(m_lo, "--m-min"),
                                     positive(m_hi, "--m-max"), static_cast<std::uint64_t>(k_extra));
      if (json) {
        Json rows = Json::array();
        for (const auto& e : rep.entries) {
          Json je{{"N", e.N}, {"m", e.m}, {"k_tested_max", e.k_tested_max}};
          je["observed_min_k"] = e.observed_min_k ? Json(*e.observed_min_k) : Json(nullptr);
          je["known_threshold"] = e.known_threshold;
          je["agrees"] = e.agrees;
          rows.push_back(je);
        }
        io.emit({{"entries", rows}, {"all_agree", rep.all_agree}});
      } else {
        out << "N  m  min_k  known  agrees\n";
        for (const auto& e : rep.entries) {
          out << e.N << "  " << e.m << "  " << (e.observed_min_k ? std::to_string(*e.observed_min_k) : "-") << "  "
              << e.known_threshold << "  " << (e.agrees ? "yes" : "NO") << '\n';
        }
      }
      return rep.all_agree ? kOk : kCheckFailed;
    }
    if (pts_fermat_cmd->parsed()) {
      const auto rep = fermat_checks(fermat_n, k_max);
      if (json) {
        Json rows = Json::array();
        for (const auto& row : rep.rows) {
          rows.push_back({{"k", row.k},
                          {"naive_lhs", row.naive_lhs.str()},
                          {"naive_rhs", row.naive_rhs.str()},
                          {"naive_fails", row.naive_fails},
                          {"multiple3_rhs", to_string(row.multiple3_rhs)},
                          {"multiple3_ok", row.multiple3_ok},
                          {"plus2_rhs", to_string(row.plus2_rhs)},
                          {"plus2_ok", row.plus2_ok}});
        }
        io.emit({{"n", rep.n}, {"rows", rows}, {"pass", rep.all_pass}});
      } else {
        out << "k  naive (lhs < rhs)   multiple of 3   3m+2 variant\n";
        for (const auto& row : rep.rows) {
          out << row.k << "  " << row.naive_lhs << " < " << row.naive_rhs << (row.naive_fails ? " ok" : " NO") << "   "
              << to_string(row.multiple3_rhs) << (row.multiple3_ok ? " ok" : " NO") << "   "
              << to_string(row.plus2_rhs) << (row.plus2_ok ? " ok" : " NO") << '\n';
        }
      }
      return rep.all_pass ? kOk : kCheckFailed;
    }

    if (cross_cmd->parsed()) {
      if (on < 1 || oh < 1) throw invalid_input("--n and --h must be positive");
      const auto rep = crosscheck_star(static_cast<std::size_t>(on), static_cast<std::size_t>(oh), ok, odeg);
      if (json) {
        Json mism = Json::array();
        for (const auto& mm : rep.mismatches) {
          mism.push_back({{"exponents", json_int_array(mm.v.entries())}, {"oracle", mm.oracle}, {"engine", mm.engine}});
        }
        io.emit({{"vectors_checked", rep.vectors_checked},
                 {"oracle_alpha", rep.oracle_alpha},
                 {"engine_alpha", rep.engine_alpha},
                 {"mismatches", mism},
                 {"ok", rep.ok()}});
      } else {
        out << rep.vectors_checked << " vectors, " << rep.mismatches.size() << " mismatches, alpha " << rep.oracle_alpha
            << " (oracle) vs " << rep.engine_alpha << " (engine)\n";
      }
      return rep.ok() ? kOk : kCheckFailed;
    }

    if (verify_cmd->parsed()) {
      Json doc;
      try {
        doc = Json::parse(read_all(cert_path));
      } catch (const Json::parse_error& e) {
        throw invalid_input(std::string("malformed JSON: ") + e.what());
      }
      const bool v = verify_certificate_json(doc);
      if (json) io.emit({{"verified", v}});
      else out << (v ? "verified" : "rejected") << '\n';
      return v ? kOk : kCheckFailed;
    }
  } catch (const invalid_input& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const not_a_member& e) {
    err << "not a member: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const refused& e) {
    err << "refused: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const no_threshold& e) {
    err << "no threshold: " << e.what() << '\n';
    return kCheckFailed;
  }

  err << app.help();
  return kInvalidInput;
}

}  // namespace symcontain::cli

#endif  // SYMCONTAIN_TOOLS_CLI_HPP
