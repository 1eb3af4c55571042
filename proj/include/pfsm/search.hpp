#pragma once

#include <string>
#include <vector>

#include "pfsm/operator.hpp"

namespace pfsm {

using Word = std::vector<int>;

/// Monodromy of lambda*w at E = 0 with lambda kept symbolic.
struct SymbolicMonodromy {
  QPoly m11, m12, m21, m22;

  QPoly trace() const { return m11 + m22; }
  /// Exact specialisation at a value of lambda.
  Mat2 at(const Scalar& lambda) const;
};

/// T(K-1)...T(0) with T(n) = [[-lambda*w_n, -1], [1, 0]].
SymbolicMonodromy symbolic_monodromy(const Word& w);

enum class Parity { Even, Odd, Zero };

struct ZeroRecord {
  AlgebraicReal root;
  Scalar lambda;
  Scalar trace;        // tr M at the zero
  int trace_sign;      // sign of tr^2 - 4
  int m11_sign;        // sign of M11^2 - 1
  bool counterexample;
};

struct SearchRecord {
  Word word;
  SymbolicMonodromy monodromy;
  Parity parity = Parity::Zero;
  bool m21_identically_zero = false;
  std::vector<ZeroRecord> zeros;
  std::vector<Scalar> counterexample_lambdas;
  std::vector<Scalar> rational_counterexample_lambdas;
  bool extrapolated = false;  // K >= 10: beyond the range solvable by radicals
};

/// Zeros of M21(lambda) and the exact counterexample certificates at them.
/// With rational_only the certificate list keeps rational zeros only.
SearchRecord counterexample_lambdas(const Word& w, bool rational_only);

struct FamilyResult {
  long period = 0;
  bool rational_only = false;
  bool deduplicated = false;
  bool extrapolated = false;
  std::size_t words_checked = 0;
  std::vector<SearchRecord> records;  // only words with certificates

  bool all_fsm_simple() const { return records.empty(); }
};

struct SearchOptions {
  bool rational_only = false;
  bool dedupe = false;
  unsigned threads = 1;
  long max_period = 12;
};

/// Checks all 2^K words (or orbit representatives under shift/reversal).
FamilyResult classify_family(long period, const SearchOptions& opts);

/// Every word's record in enumeration order, for the table view.
std::vector<SearchRecord> analyze_all_words(long period, const SearchOptions& opts);

/// Word n of the enumeration: w_i = bit i of n.
Word word_from_index(unsigned long index, long period);

/// Smallest index among all cyclic shifts and reversals of w.
unsigned long orbit_representative(const Word& w);
unsigned long word_index(const Word& w);

/// PERIODIC_FSM_MAX_K, default 12.
long max_period_from_env();

std::string to_string(const Word& w);

}  // namespace pfsm
