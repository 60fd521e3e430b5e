#include "hecke/hecke.h"

#include <algorithm>
#include <atomic>
#include <new>
#include <string>
#include <thread>
#include <vector>

#include "hecke/classify.hpp"
#include "hecke/decomp_inf.hpp"
#include "hecke/error.hpp"
#include "hecke/report.hpp"
#include "hecke/typea.hpp"

struct hk_oracle {
  hecke::FockSpaceOracle impl;
};

struct hk_result {
  std::string text;
  std::string json;
  hk_verdict verdict = HK_VERDICT_NONE;
  size_t count = 0;
};

namespace {

thread_local std::string last_error;

hk_status status_of(hecke::ErrorCode code) {
  using hecke::ErrorCode;
  switch (code) {
    case ErrorCode::Parse: return HK_ERR_PARSE;
    case ErrorCode::Monotonicity: return HK_ERR_MONOTONICITY;
    case ErrorCode::InvalidArgument: return HK_ERR_INVALID_ARGUMENT;
    case ErrorCode::NotDominant: return HK_ERR_NOT_DOMINANT;
    case ErrorCode::NotRegular: return HK_ERR_NOT_REGULAR;
    case ErrorCode::NotRestrictable: return HK_ERR_NOT_RESTRICTABLE;
    case ErrorCode::LengthMismatch: return HK_ERR_LENGTH_MISMATCH;
    case ErrorCode::UnsupportedRegime: return HK_ERR_UNSUPPORTED_REGIME;
    case ErrorCode::Io: return HK_ERR_IO;
  }
  return HK_ERR_INTERNAL;
}

template <class F>
hk_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return HK_OK;
  } catch (const hecke::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return HK_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HK_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw hecke::Error(hecke::ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

hk_result* make_result(hecke::Report report, hk_verdict verdict = HK_VERDICT_NONE, size_t count = 1) {
  auto* r = new hk_result;
  r->text = std::move(report.text);
  r->json = std::move(report.json);
  r->verdict = verdict;
  r->count = count;
  return r;
}

hk_verdict verdict_code(hecke::VerdictKind k) {
  switch (k) {
    case hecke::VerdictKind::Irreducible: return HK_VERDICT_IRREDUCIBLE;
    case hecke::VerdictKind::Reducible: return HK_VERDICT_REDUCIBLE;
    case hecke::VerdictKind::Unknown: return HK_VERDICT_UNKNOWN;
    case hecke::VerdictKind::Unsupported: return HK_VERDICT_UNSUPPORTED;
  }
  return HK_VERDICT_NONE;
}

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

const hecke::TypeA2Oracle& oracle_or_default(const hk_oracle* oracle) {
  static const hecke::FockSpaceOracle char0(0);
  return oracle ? static_cast<const hecke::TypeA2Oracle&>(oracle->impl) : char0;
}

hecke::HeckeParams params_for(const char* regime, const hk_oracle* oracle) {
  require(regime, "regime");
  return hecke::parse_params(regime, oracle ? oracle->impl.characteristic() : 0);
}

}  // namespace

extern "C" {

const char* hk_version(void) { return "0.1.0"; }

const char* hk_last_error(void) { return last_error.c_str(); }

hk_status hk_oracle_create(unsigned characteristic, hk_oracle** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    if (characteristic != 0 && !is_prime(characteristic)) {
      throw hecke::Error(hecke::ErrorCode::InvalidArgument,
                         "characteristic must be 0 or a prime, got " + std::to_string(characteristic));
    }
    if (characteristic == 2) {
      throw hecke::Error(hecke::ErrorCode::InvalidArgument, "q = -1 coincides with q = 1 in characteristic 2");
    }
    *out = new hk_oracle{hecke::FockSpaceOracle(characteristic)};
  });
}

hk_status hk_oracle_load_table(hk_oracle* oracle, const char* path) {
  return guarded([&] {
    require(oracle, "oracle");
    require(path, "path");
    oracle->impl.load_table(path);
  });
}

void hk_oracle_destroy(hk_oracle* oracle) { delete oracle; }

const char* hk_result_text(const hk_result* result) { return result ? result->text.c_str() : ""; }
const char* hk_result_json(const hk_result* result) { return result ? result->json.c_str() : ""; }
hk_verdict hk_result_verdict(const hk_result* result) { return result ? result->verdict : HK_VERDICT_NONE; }
size_t hk_result_count(const hk_result* result) { return result ? result->count : 0; }
void hk_result_destroy(hk_result* result) { delete result; }

hk_status hk_classify(const char* bipartition, const char* regime, const hk_oracle* oracle, int with_witness,
                      hk_result** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    require(bipartition, "bipartition");
    const auto b = hecke::parse_bipartition(bipartition);
    const auto p = params_for(regime, oracle);
    const auto v = hecke::classify(b, p, oracle_or_default(oracle));
    *out = make_result(hecke::report_classify(b, p, v, with_witness != 0), verdict_code(v.kind));
  });
}

hk_status hk_signature(const char* bipartition, int r, hk_result** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    require(bipartition, "bipartition");
    const auto b = hecke::parse_bipartition(bipartition);
    *out = make_result(hecke::report_signature(b, hecke::signature(b, r)));
  });
}

hk_status hk_constituents(const char* bipartition, int r, hk_result** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    require(bipartition, "bipartition");
    const auto row = hecke::specht_constituents_inf(hecke::parse_bipartition(bipartition), r);
    *out = make_result(hecke::report_constituents(row), HK_VERDICT_NONE, row.factors.size());
  });
}

hk_status hk_simples_in(const char* regular, int r, hk_result** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    require(regular, "regular");
    const auto reg = hecke::parse_bipartition(regular);
    const auto spechts = hecke::simples_spechts_inf(reg, r);
    const auto ctx = hecke::signature(reg, r);
    const auto involutions = hecke::compatible_involutions(ctx.signs);
    *out = make_result(hecke::report_simples_in(reg, r, ctx, involutions, spechts), HK_VERDICT_NONE, spechts.size());
  });
}

hk_status hk_abacus(const char* text, int r, int lo, int hi, hk_result** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    require(text, "input");
    std::optional<int> l;
    std::optional<int> h;
    if (lo <= hi) {
      l = lo;
      h = hi;
    }
    const std::string s(text);
    if (s.find('|') != std::string::npos) {
      *out = make_result(hecke::report_abacus(hecke::parse_bipartition(s), r, l, h), HK_VERDICT_NONE, 2);
    } else {
      *out = make_result(hecke::report_abacus(hecke::parse_partition(s), r, l, h));
    }
  });
}

hk_status hk_blocks(const char* const* items, size_t count, int n, const char* regime, hk_result** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    const auto p = params_for(regime, nullptr);
    std::vector<hecke::Bipartition> list;
    if (n >= 0) {
      list = hecke::bipartitions(n);
    } else {
      if (count > 0) require(items, "items");
      for (size_t k = 0; k < count; ++k) {
        require(items[k], "item");
        list.push_back(hecke::parse_bipartition(items[k]));
      }
    }
    *out = make_result(hecke::report_blocks(list, p), HK_VERDICT_NONE, list.size());
  });
}

hk_status hk_typea(int n, const hk_oracle* oracle, hk_result** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    if (n < 0) throw hecke::Error(hecke::ErrorCode::InvalidArgument, "n must be non-negative");
    const auto basis = hecke::canonical_basis(n);
    *out = make_result(hecke::report_typea(*basis, oracle_or_default(oracle)), HK_VERDICT_NONE,
                       hecke::partitions(n).size());
  });
}

hk_status hk_parity(const char* bipartition, int parity, int window_override, hk_result** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    require(bipartition, "bipartition");
    const auto b = hecke::parse_bipartition(bipartition);
    std::optional<int> w;
    if (window_override >= 0) w = window_override;
    const auto sweep = hecke::inf_irreducible_all_parity(b, parity, w);
    *out = make_result(hecke::report_parity(b, parity, sweep));
  });
}

hk_status hk_batch(int n, const char* regime, const hk_oracle* oracle, int with_witness, unsigned threads,
                   hk_result** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    if (n < 0) throw hecke::Error(hecke::ErrorCode::InvalidArgument, "n must be non-negative");
    const auto p = params_for(regime, oracle);
    const auto& typea = oracle_or_default(oracle);
    const auto items = hecke::bipartitions(n);
    std::vector<hecke::Report> reports(items.size());
    std::vector<hecke::VerdictKind> kinds(items.size());

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<size_t>(1, items.size())));
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    auto worker = [&](unsigned id) {
      try {
        for (size_t k = next++; k < items.size(); k = next++) {
          const auto v = hecke::classify(items[k], p, typea);
          kinds[k] = v.kind;
          reports[k] = hecke::report_classify(items[k], p, v, with_witness != 0);
        }
      } catch (...) {
        errors[id] = std::current_exception();
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t);
    worker(0);
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }

    auto* result = new hk_result;
    result->count = items.size();
    bool any_unknown = false;
    bool any_unsupported = false;
    for (size_t k = 0; k < items.size(); ++k) {
      std::string line = hecke::to_string(items[k]) + "  " + reports[k].text;
      result->text += line;
      result->json += reports[k].json + "\n";
      any_unknown |= kinds[k] == hecke::VerdictKind::Unknown;
      any_unsupported |= kinds[k] == hecke::VerdictKind::Unsupported;
    }
    result->verdict = any_unsupported ? HK_VERDICT_UNSUPPORTED : any_unknown ? HK_VERDICT_UNKNOWN : HK_VERDICT_NONE;
    *out = result;
  });
}

}  // extern "C"
