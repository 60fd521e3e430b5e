// hecke: command-line front end over the C API in hecke/hecke.h.
//
// Exit status: 0 success, 1 parse or validation error, 2 unsupported regime,
// 3 oracle gap (Unknown verdict).

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hecke/hecke.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitUnknown = 3;

struct ResultDeleter {
  void operator()(hk_result* r) const { hk_result_destroy(r); }
};
struct OracleDeleter {
  void operator()(hk_oracle* o) const { hk_oracle_destroy(o); }
};
using ResultPtr = std::unique_ptr<hk_result, ResultDeleter>;
using OraclePtr = std::unique_ptr<hk_oracle, OracleDeleter>;

struct Options {
  std::string regime;
  unsigned characteristic = 0;
  std::string format = "text";
  bool witness = false;
  std::string typea_table;
  std::optional<int> window_override;
  std::optional<int> r;
  std::vector<std::string> positional;
  int n = -1;
  unsigned threads = 0;
  std::optional<int> lo;
  std::optional<int> hi;
  int parity = 0;
};

int fail(hk_status status) {
  std::cerr << "error: " << hk_last_error() << "\n";
  return status == HK_ERR_UNSUPPORTED_REGIME ? kExitUnsupported : kExitError;
}

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kExitError;
}

void emit(const Options& opt, const hk_result* r) {
  if (opt.format == "json") {
    std::string json = hk_result_json(r);
    std::cout << json;
    if (json.empty() || json.back() != '\n') std::cout << '\n';
  } else {
    std::cout << hk_result_text(r);
  }
}

int exit_for(const hk_result* r) {
  switch (hk_result_verdict(r)) {
    case HK_VERDICT_UNSUPPORTED: return kExitUnsupported;
    case HK_VERDICT_UNKNOWN: return kExitUnknown;
    default: return kExitOk;
  }
}

// A leading positional that names a regime is taken as --regime when at least
// `keep` positionals remain after it.
void split_regime_positional(Options& opt, std::size_t keep = 1) {
  if (!opt.positional.empty()) {
    const std::string& first = opt.positional.front();
    const bool looks_like_regime = first == "inf-generic" || first == "two-generic" || first.rfind("inf:", 0) == 0 ||
                                   first.rfind("two:", 0) == 0 || first.rfind("e:", 0) == 0 ||
                                   first.rfind("e=", 0) == 0;
    if (looks_like_regime && opt.positional.size() >= keep + 1) {
      opt.regime = first;
      opt.positional.erase(opt.positional.begin());
    }
  }
}

// r for the e = ∞ commands: --r wins, else inf:r=R from the regime.
std::optional<int> infinite_r(const Options& opt) {
  if (opt.r) return opt.r;
  if (opt.regime.rfind("inf:r=", 0) == 0) {
    try {
      std::size_t used = 0;
      const std::string tail = opt.regime.substr(6);
      const int r = std::stoi(tail, &used);
      if (used == tail.size()) return r;
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

std::optional<OraclePtr> make_oracle(const Options& opt, int& code) {
  hk_oracle* raw = nullptr;
  if (auto s = hk_oracle_create(opt.characteristic, &raw); s != HK_OK) {
    code = fail(s);
    return std::nullopt;
  }
  OraclePtr oracle(raw);
  if (!opt.typea_table.empty()) {
    if (auto s = hk_oracle_load_table(oracle.get(), opt.typea_table.c_str()); s != HK_OK) {
      code = fail(s);
      return std::nullopt;
    }
  }
  return oracle;
}

int single_argument(const Options& opt, std::string& out, const char* what) {
  if (opt.positional.size() != 1) return usage_error(std::string("expected exactly one ") + what);
  out = opt.positional.front();
  return kExitOk;
}

int run_classify(Options opt) {
  split_regime_positional(opt);
  if (opt.regime.empty()) return usage_error("--regime is required");
  std::string arg;
  if (int c = single_argument(opt, arg, "BIPARTITION"); c != kExitOk) return c;
  int code = kExitOk;
  auto oracle = make_oracle(opt, code);
  if (!oracle) return code;
  hk_result* raw = nullptr;
  if (auto s = hk_classify(arg.c_str(), opt.regime.c_str(), oracle->get(), opt.witness, &raw); s != HK_OK) return fail(s);
  ResultPtr r(raw);
  emit(opt, r.get());
  if (hk_result_verdict(r.get()) == HK_VERDICT_UNKNOWN || hk_result_verdict(r.get()) == HK_VERDICT_UNSUPPORTED) {
    std::cerr << hk_result_text(r.get());
  }
  return exit_for(r.get());
}

template <class Call>
int run_inf_command(Options opt, Call call) {
  split_regime_positional(opt);
  const auto r = infinite_r(opt);
  if (!r) return usage_error("this command needs --regime inf:r=R (or --r R)");
  std::string arg;
  if (int c = single_argument(opt, arg, "BIPARTITION"); c != kExitOk) return c;
  hk_result* raw = nullptr;
  if (auto s = call(arg.c_str(), *r, &raw); s != HK_OK) return fail(s);
  ResultPtr res(raw);
  emit(opt, res.get());
  return kExitOk;
}

int run_abacus(Options opt) {
  split_regime_positional(opt);
  const int r = infinite_r(opt).value_or(0);
  std::string arg;
  if (int c = single_argument(opt, arg, "BIPARTITION or PARTITION"); c != kExitOk) return c;
  if (opt.lo.has_value() != opt.hi.has_value()) return usage_error("--lo and --hi must be given together");
  const int lo = opt.lo.value_or(1);
  const int hi = opt.hi.value_or(0);
  hk_result* raw = nullptr;
  if (auto s = hk_abacus(arg.c_str(), r, lo, hi, &raw); s != HK_OK) return fail(s);
  ResultPtr res(raw);
  emit(opt, res.get());
  return kExitOk;
}

int run_blocks(Options opt) {
  split_regime_positional(opt, opt.n >= 0 ? 0 : 1);
  if (opt.regime.empty()) return usage_error("--regime is required");
  if (opt.n < 0 && opt.positional.empty()) return usage_error("give bipartitions or --n N");
  std::vector<const char*> items;
  for (const auto& p : opt.positional) items.push_back(p.c_str());
  hk_result* raw = nullptr;
  if (auto s = hk_blocks(items.data(), items.size(), opt.n, opt.regime.c_str(), &raw); s != HK_OK) return fail(s);
  ResultPtr res(raw);
  emit(opt, res.get());
  return kExitOk;
}

int run_typea(const Options& opt) {
  if (opt.n < 0) return usage_error("--n is required");
  int code = kExitOk;
  auto oracle = make_oracle(opt, code);
  if (!oracle) return code;
  hk_result* raw = nullptr;
  if (auto s = hk_typea(opt.n, oracle->get(), &raw); s != HK_OK) return fail(s);
  ResultPtr res(raw);
  emit(opt, res.get());
  return kExitOk;
}

int run_batch(Options opt) {
  split_regime_positional(opt, 0);
  if (!opt.positional.empty()) return usage_error("unexpected argument " + opt.positional.front());
  if (opt.regime.empty()) return usage_error("--regime is required");
  if (opt.n < 0) return usage_error("--n is required");
  int code = kExitOk;
  auto oracle = make_oracle(opt, code);
  if (!oracle) return code;
  hk_result* raw = nullptr;
  if (auto s = hk_batch(opt.n, opt.regime.c_str(), oracle->get(), opt.witness, opt.threads, &raw); s != HK_OK) {
    return fail(s);
  }
  ResultPtr res(raw);
  emit(opt, res.get());
  return exit_for(res.get());
}

int run_parity(const Options& opt) {
  std::string arg;
  if (int c = single_argument(opt, arg, "BIPARTITION"); c != kExitOk) return c;
  hk_result* raw = nullptr;
  const int window = opt.window_override.value_or(-1);
  if (auto s = hk_parity(arg.c_str(), opt.parity, window, &raw); s != HK_OK) return fail(s);
  ResultPtr res(raw);
  emit(opt, res.get());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Irreducible Specht modules for Iwahori-Hecke algebras of type B"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hk_version()));

  Options opt;
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_regime = [&](CLI::App* cmd) {
    cmd->add_option("--regime", opt.regime, "inf-generic | inf:r=R | two-generic | two:r={0,1} | e:N");
  };
  auto add_char = [&](CLI::App* cmd) {
    cmd->add_option("--char", opt.characteristic, "Characteristic of the field: 0 or a prime");
    cmd->add_option("--typea-table", opt.typea_table, "Table of type-A answers: lines p;PARTITION;irr|red");
  };

  auto* classify = app.add_subcommand("classify", "Is the Specht module S^(lambda,mu) irreducible?");
  add_regime(classify);
  add_char(classify);
  add_format(classify);
  classify->add_flag("--witness", opt.witness, "Include the signature shape or reduction chain");
  classify->add_option("args", opt.positional, "[REGIME] BIPARTITION");

  auto* signature = app.add_subcommand("signature", "r-signature of a bipartition (e = infinity)");
  auto* constituents = app.add_subcommand("constituents", "Composition factors of S^(lambda,mu) at e = infinity");
  auto* simples = app.add_subcommand("simples-in", "Specht modules containing D^(nu,xi) at e = infinity");
  for (auto* cmd : {signature, constituents, simples}) {
    add_regime(cmd);
    add_format(cmd);
    cmd->add_option("--r", opt.r, "Q = -q^r");
    cmd->add_option("args", opt.positional, "[inf:r=R] BIPARTITION");
  }

  auto* abacus = app.add_subcommand("abacus", "Abacus of B^r(lambda) over B^0(mu), or of B^r(lambda)");
  add_regime(abacus);
  add_format(abacus);
  abacus->add_option("--r", opt.r, "Charge offset r");
  abacus->add_option("--lo", opt.lo, "First position shown");
  abacus->add_option("--hi", opt.hi, "Last position shown");
  abacus->add_option("args", opt.positional, "[inf:r=R] BIPARTITION|PARTITION");

  auto* blocks = app.add_subcommand("blocks", "Residue multisets and block labels");
  add_regime(blocks);
  add_format(blocks);
  blocks->add_option("--n", opt.n, "All bipartitions of n");
  blocks->add_option("args", opt.positional, "[REGIME] BIPARTITION...");

  auto* typea = app.add_subcommand("typea", "Type-A decomposition matrix at e = 2");
  typea->add_option("--n", opt.n, "Size")->required();
  add_char(typea);
  add_format(typea);

  auto* batch = app.add_subcommand("batch", "Classify every bipartition of n");
  add_regime(batch);
  add_char(batch);
  add_format(batch);
  batch->add_option("--n", opt.n, "Size")->required();
  batch->add_flag("--witness", opt.witness, "Include witnesses");
  batch->add_option("--threads", opt.threads, "Worker threads (0 = hardware concurrency)");
  batch->add_option("args", opt.positional, "[REGIME]");

  auto* parity = app.add_subcommand("parity", "(inf,t)-irreducibility for every t of a parity");
  add_format(parity);
  parity->add_option("--parity", opt.parity, "0 or 1")->check(CLI::IsMember({0, 1}));
  parity->add_option("--window-override", opt.window_override, "Sweep t in [-W, W] instead of the automatic window");
  parity->add_option("args", opt.positional, "BIPARTITION");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  if (classify->parsed()) return run_classify(opt);
  if (signature->parsed()) return run_inf_command(opt, hk_signature);
  if (constituents->parsed()) return run_inf_command(opt, hk_constituents);
  if (simples->parsed()) return run_inf_command(opt, hk_simples_in);
  if (abacus->parsed()) return run_abacus(opt);
  if (blocks->parsed()) return run_blocks(opt);
  if (typea->parsed()) return run_typea(opt);
  if (batch->parsed()) return run_batch(opt);
  if (parity->parsed()) return run_parity(opt);
  return kExitError;
}
