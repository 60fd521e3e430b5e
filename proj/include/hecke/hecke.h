#ifndef HECKE_HECKE_H
#define HECKE_HECKE_H

/*
 * C interface to the hecke library: irreducibility of Specht modules for
 * Iwahori-Hecke algebras of type B.
 *
 * Every entry point returns an hk_status. On failure a message is available
 * from hk_last_error() until the next call on the same thread. Results are
 * returned through opaque hk_result handles that own a text rendering and a
 * JSON rendering; release them with hk_result_destroy().
 *
 * Inputs use the text grammar
 *   PARTITION   := "-" | int ("," int)*      (weakly decreasing, positive)
 *   BIPARTITION := PARTITION "|" PARTITION
 *   REGIME      := "inf-generic" | "inf:r=R" | "two-generic" | "two:r=0" | "two:r=1" | "e:N"
 */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(HK_BUILDING_LIBRARY)
#    define HK_API __declspec(dllexport)
#  else
#    define HK_API __declspec(dllimport)
#  endif
#else
#  define HK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hk_status {
  HK_OK = 0,
  HK_ERR_PARSE = 1,
  HK_ERR_MONOTONICITY = 2,
  HK_ERR_INVALID_ARGUMENT = 3,
  HK_ERR_NOT_DOMINANT = 4,
  HK_ERR_NOT_REGULAR = 5,
  HK_ERR_NOT_RESTRICTABLE = 6,
  HK_ERR_LENGTH_MISMATCH = 7,
  HK_ERR_UNSUPPORTED_REGIME = 8,
  HK_ERR_IO = 9,
  HK_ERR_INTERNAL = 10
} hk_status;

typedef enum hk_verdict {
  HK_VERDICT_NONE = 0, /* result carries no verdict */
  HK_VERDICT_IRREDUCIBLE = 1,
  HK_VERDICT_REDUCIBLE = 2,
  HK_VERDICT_UNKNOWN = 3,
  HK_VERDICT_UNSUPPORTED = 4
} hk_verdict;

typedef struct hk_oracle hk_oracle;
typedef struct hk_result hk_result;

/* Library version string, e.g. "0.1.0". */
HK_API const char* hk_version(void);
/* Thread-local message for the most recent failure on this thread. */
HK_API const char* hk_last_error(void);

/* Type-A q=-1 irreducibility oracle. characteristic is 0 or a prime other
 * than 2. In characteristic 0 answers come from the e=2 canonical basis; in
 * characteristic p from a table loaded with hk_oracle_load_table. */
HK_API hk_status hk_oracle_create(unsigned characteristic, hk_oracle** out);
/* Table lines: "p;PARTITION;irr|red". Lines for other primes are skipped. */
HK_API hk_status hk_oracle_load_table(hk_oracle* oracle, const char* path);
HK_API void hk_oracle_destroy(hk_oracle* oracle);

HK_API const char* hk_result_text(const hk_result* result);
HK_API const char* hk_result_json(const hk_result* result);
/* Verdict of a classify result; HK_VERDICT_NONE for other commands. For a
 * batch result: UNSUPPORTED if any item is, else UNKNOWN if any item is, else
 * NONE. */
HK_API hk_verdict hk_result_verdict(const hk_result* result);
/* Number of items (batch: bipartitions; list commands: entries). */
HK_API size_t hk_result_count(const hk_result* result);
HK_API void hk_result_destroy(hk_result* result);

/* Irreducibility of S^(bipartition). oracle may be NULL for characteristic 0
 * without a table. */
HK_API hk_status hk_classify(const char* bipartition, const char* regime, const hk_oracle* oracle,
                             int with_witness, hk_result** out);

/* The r-signature, its points, and the canonical involution when dominant. */
HK_API hk_status hk_signature(const char* bipartition, int r, hk_result** out);

/* e=infinity composition factors of S^(bipartition), Q = -q^r. */
HK_API hk_status hk_constituents(const char* bipartition, int r, hk_result** out);

/* Specht modules containing D^(regular). Fails with HK_ERR_NOT_REGULAR. */
HK_API hk_status hk_simples_in(const char* regular, int r, hk_result** out);

/* Abacus of B^r(first) over B^0(second) for a bipartition, or of B^r(p) for
 * a partition. lo > hi selects a default window. */
HK_API hk_status hk_abacus(const char* bipartition_or_partition, int r, int lo, int hi, hk_result** out);

/* Residue multisets and block labels. Either items/count or n >= 0 (all
 * bipartitions of n; items ignored). */
HK_API hk_status hk_blocks(const char* const* items, size_t count, int n, const char* regime, hk_result** out);

/* e=2 decomposition matrix of size n at v and v=1, with oracle answers. */
HK_API hk_status hk_typea(int n, const hk_oracle* oracle, hk_result** out);

/* Whether S^(bipartition) is (inf,t)-irreducible for every t of the given
 * parity. window_override < 0 uses the automatic window. */
HK_API hk_status hk_parity(const char* bipartition, int parity, int window_override, hk_result** out);

/* Classifies every bipartition of n in lexicographic order. Text: one line
 * per bipartition; JSON: one object per line. threads = 0 picks the hardware
 * concurrency. */
HK_API hk_status hk_batch(int n, const char* regime, const hk_oracle* oracle, int with_witness, unsigned threads,
                          hk_result** out);

#ifdef __cplusplus
}
#endif

#endif /* HECKE_HECKE_H */
