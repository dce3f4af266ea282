#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "satake/verify.hpp"

using namespace satake;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitVerification = 3;
constexpr int kExitEnvelope = 4;

int exit_code_for(errc c) {
  switch (c) {
    case errc::envelope_exceeded:
    case errc::orbit_too_large:
    case errc::weyl_group_too_large:
      return kExitEnvelope;
    case errc::mismatch:
    case errc::method_mismatch:
    case errc::support_violation:
      return kExitVerification;
    default:
      return kExitValidation;
  }
}

Weight parse_weight(const std::string& s) {
  Weight w;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t used = 0;
    i64 v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (...) {
      fail(errc::parse_error, "bad weight entry '" + tok + "'");
    }
    if (used != tok.size()) fail(errc::parse_error, "bad weight entry '" + tok + "'");
    w.push_back(v);
  }
  if (w.empty()) fail(errc::parse_error, "empty weight");
  return w;
}

struct JobConfig {
  std::string datum_name = "GL2";
  std::string datum_file;
  std::string shift_spec = "rho";
  i64 q = 0; // 0 = symbolic
  i64 height = 4;
  i64 spread = 4;
  std::string format = "text";
  unsigned seed = 12345;
  std::string out;
};

void add_common(CLI::App* cmd, JobConfig& cfg) {
  cmd->add_option("--datum", cfg.datum_name, "catalog datum name");
  cmd->add_option("--datum-file", cfg.datum_file, "root-datum JSON file");
  cmd->add_option("--shift", cfg.shift_spec, "shift: 'rho' or 'rho+w:v1,...'");
  cmd->add_option("--q", cfg.q, "numeric q (prime power); omit for symbolic");
  cmd->add_option("--height", cfg.height, "height bound");
  cmd->add_option("--spread", cfg.spread, "oracle spread bound");
  cmd->add_option("--format", cfg.format, "output format: text | csv")
      ->check(CLI::IsMember({"text", "csv"}));
  cmd->add_option("--seed", cfg.seed, "seed for randomized checks");
  cmd->add_option("--out", cfg.out, "write output to file");
}

BasedRootDatum load_datum(const JobConfig& cfg) {
  if (!cfg.datum_file.empty()) return datum_from_file(cfg.datum_file);
  return catalog(cfg.datum_name);
}

HeckeHandle make_handle(const JobConfig& cfg, const BasedRootDatum& d) {
  std::optional<i64> q;
  if (cfg.q != 0) q = cfg.q;
  HeckeHandle h = HeckeHandle::spherical(d, q);
  if (cfg.shift_spec == "rho") return h;
  const std::string prefix = "rho+w:";
  if (cfg.shift_spec.rfind(prefix, 0) != 0)
    fail(errc::parse_error, "shift must be 'rho' or 'rho+w:v1,...'");
  Weight lambda = parse_weight(cfg.shift_spec.substr(prefix.size()));
  return weight_hecke(h, lambda);
}

void emit(const JobConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) fail(errc::parse_error, "cannot open output file " + cfg.out);
  f << text;
}

std::string coeff_str(const QLaurent& c, const JobConfig& cfg) {
  if (cfg.q != 0) return std::to_string(c.eval(cfg.q));
  return c.str();
}

std::string join(const Weight& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i]);
  return s;
}

int run(int argc, char** argv) {
  CLI::App app{"spherical Hecke algebra calculator"};
  app.require_subcommand(1);

  JobConfig cfg;
  Weight arg_l, arg_m, arg_nu, arg_kappa;
  std::string l_str, m_str, nu_str, kappa_str, oracle_op = "count";
  i64 oracle_n = 2;

  auto* c_catalog = app.add_subcommand("catalog", "list built-in root data");
  add_common(c_catalog, cfg);

  auto* c_mbasis = app.add_subcommand("mbasis", "print a basis element as a lattice sum");
  add_common(c_mbasis, cfg);
  c_mbasis->add_option("--l", l_str, "antidominant sigma-fixed weight")->required();

  auto* c_struct = app.add_subcommand("structconst", "structure constants of a basis product");
  add_common(c_struct, cfg);
  c_struct->add_option("--l", l_str, "left factor weight")->required();
  c_struct->add_option("--m", m_str, "right factor weight")->required();

  auto* c_dc = app.add_subcommand("satake-dc", "double-coset basis element in m-coordinates");
  add_common(c_dc, cfg);
  c_dc->add_option("--m", m_str, "dominant weight")->required();

  auto* c_kostka = app.add_subcommand("kostka", "Kostka-Foulkes polynomial K_{mu,lambda}");
  add_common(c_kostka, cfg);
  c_kostka->add_option("--m", m_str, "dominant highest weight mu")->required();
  c_kostka->add_option("--l", l_str, "dominant weight lambda")->required();

  auto* c_oracle = app.add_subcommand("oracle", "double-coset counting over F_q((t))");
  add_common(c_oracle, cfg);
  c_oracle->add_option("--op", oracle_op, "count | vector | convcount | convtable")
      ->check(CLI::IsMember({"count", "vector", "convcount", "convtable"}));
  c_oracle->add_option("--n", oracle_n, "matrix size (<= 3)");
  c_oracle->add_option("--m", m_str, "dominant weight mu");
  c_oracle->add_option("--l", l_str, "coweight lambda");
  c_oracle->add_option("--nu", nu_str, "second convolution factor");
  c_oracle->add_option("--kappa", kappa_str, "convolution target");

  auto* c_verify = app.add_subcommand("verify", "run the acceptance criteria");
  add_common(c_verify, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitValidation;
  }

  try {
    if (!l_str.empty()) arg_l = parse_weight(l_str);
    if (!m_str.empty()) arg_m = parse_weight(m_str);
    if (!nu_str.empty()) arg_nu = parse_weight(nu_str);
    if (!kappa_str.empty()) arg_kappa = parse_weight(kappa_str);

    std::ostringstream os;
    if (c_catalog->parsed()) {
      for (auto& name : catalog_names()) {
        BasedRootDatum d = catalog(name);
        if (cfg.format == "csv")
          os << name << "," << d.rank << "," << d.num_simple() << "," << d.sigma_order << "\n";
        else
          os << name << "  rank " << d.rank << ", " << d.num_simple()
             << " simple roots, sigma order " << d.sigma_order << "\n";
      }
    } else if (c_mbasis->parsed()) {
      BasedRootDatum d = load_datum(cfg);
      HeckeHandle h = make_handle(cfg, d);
      LatticeElem m = m_element(d, h.shift, arg_l);
      if (cfg.q != 0) m = eval_q(m, cfg.q);
      if (cfg.format == "csv") {
        os << "weight,coefficient\n";
        for (auto& [v, c] : m.terms) os << join(v) << "," << c.str() << "\n";
      } else {
        os << "m_" << weight_str(arg_l) << " = " << m.str() << "\n";
      }
    } else if (c_struct->parsed()) {
      BasedRootDatum d = load_datum(cfg);
      HeckeHandle h = make_handle(cfg, d);
      HeckeElem t = structure_constants(h, arg_l, arg_m);
      if (cfg.format == "csv") {
        os << "lambda,mu,kappa,coefficient\n";
        for (auto& [kappa, c] : t)
          os << join(arg_l) << "," << join(arg_m) << "," << join(kappa) << ","
             << coeff_str(c, cfg) << "\n";
      } else {
        os << "m_" << weight_str(arg_l) << " * m_" << weight_str(arg_m) << " =\n";
        for (auto& [kappa, c] : t)
          os << "  kappa=" << weight_str(kappa) << ": " << coeff_str(c, cfg) << "\n";
      }
    } else if (c_dc->parsed()) {
      BasedRootDatum d = load_datum(cfg);
      HeckeHandle h = HeckeHandle::spherical(d, cfg.q != 0 ? std::optional<i64>(cfg.q)
                                                          : std::nullopt);
      HeckeElem t = double_coset_basis(h, arg_m);
      i64 sign_exp = two_rho(d).pair_int(arg_m);
      if (cfg.format == "csv") {
        os << "mu,lambda,coefficient\n";
        for (auto& [lam, c] : t)
          os << join(arg_m) << "," << join(lam) << "," << coeff_str(c, cfg) << "\n";
      } else {
        os << "CT(1_{K mu K}) for mu=" << weight_str(arg_m)
           << "  (IC sign (-1)^" << sign_exp << ")\n";
        for (auto& [lam, c] : t)
          os << "  m_" << weight_str(lam) << ": " << coeff_str(c, cfg) << "\n";
      }
    } else if (c_kostka->parsed()) {
      BasedRootDatum d = load_datum(cfg);
      QLaurent K = kostka_foulkes(d, arg_m, arg_l);
      if (cfg.format == "csv")
        os << "mu,lambda,polynomial\n"
           << join(arg_m) << "," << join(arg_l) << "," << K.str() << "\n";
      else
        os << "K_{" << weight_str(arg_m) << "," << weight_str(arg_l) << "} = " << K.str()
           << "\n";
    } else if (c_oracle->parsed()) {
      if (cfg.q < 2) fail(errc::parse_error, "oracle needs --q >= 2");
      OracleOptions opts;
      opts.max_spread = cfg.spread;
      if (oracle_op == "count") {
        if (arg_m.empty() || arg_l.empty()) fail(errc::parse_error, "count needs --m and --l");
        os << satake_count((int)oracle_n, cfg.q, arg_m, arg_l, opts) << "\n";
      } else if (oracle_op == "vector") {
        if (arg_m.empty()) fail(errc::parse_error, "vector needs --m");
        LatticeElem v = satake_vector((int)oracle_n, cfg.q, arg_m, opts);
        if (cfg.format == "csv") {
          os << "lambda,count\n";
          for (auto& [lam, c] : v.terms) os << join(lam) << "," << c.str() << "\n";
        } else {
          os << "CT(1_{K mu K}) for mu=" << weight_str(arg_m) << " at q=" << cfg.q << ": "
             << v.str() << "\n";
        }
      } else if (oracle_op == "convcount") {
        if (arg_m.empty() || arg_nu.empty() || arg_kappa.empty())
          fail(errc::parse_error, "convcount needs --m, --nu, --kappa");
        os << convolve_count(cfg.q, arg_m, arg_nu, arg_kappa, opts) << "\n";
      } else {
        if (arg_m.empty() || arg_nu.empty()) fail(errc::parse_error, "convtable needs --m, --nu");
        auto table = convolve_table(cfg.q, arg_m, arg_nu, opts);
        if (cfg.format == "csv") {
          os << "kappa,count\n";
          for (auto& [kappa, c] : table) os << join(kappa) << "," << c << "\n";
        } else {
          for (auto& [kappa, c] : table)
            os << "  kappa=" << weight_str(kappa) << ": " << c << "\n";
        }
      }
    } else if (c_verify->parsed()) {
      AcceptanceOptions vopts;
      if (!cfg.datum_name.empty() && c_verify->count("--datum") > 0) vopts.datum = cfg.datum_name;
      if (cfg.q != 0) vopts.q = cfg.q;
      vopts.seed = cfg.seed;
      auto results = run_acceptance(vopts);
      bool all = true;
      int ran = 0;
      for (auto& r : results) {
        os << (r.pass ? "PASS" : "FAIL") << " [" << r.index << "] " << r.name << " -- "
           << r.detail << "\n";
        all = all && r.pass;
        if (r.detail.rfind("skipped", 0) != 0) ++ran;
      }
      os << (all ? "PASS" : "FAIL") << ": " << ran << " criteria run\n";
      emit(cfg, os.str());
      return all ? 0 : kExitVerification;
    }
    emit(cfg, os.str());
    return 0;
  } catch (const satake_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
