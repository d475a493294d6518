#pragma once

#include <string>
#include <vector>

#include "chevkit/lie_algebra.hpp"
#include "chevkit/orientation.hpp"
#include "chevkit/report.hpp"

namespace chevkit {

enum class TableFormat { pretty, csv, tsv, json };

TableFormat table_format_from_name(const std::string& name);

struct LedgerRow {
  int alpha;  // root indices
  int beta;
  long long rho_ab;
  long long rho_ba;
  long long n;
};

/// The structure-constant ledger: one row per composable pair (alpha, beta)
/// with alpha before beta in enumeration order. Positive-only ledgers list
/// pairs of positive roots; full ledgers cover all sign quadrants.
struct Ledger {
  CartanType type;
  Orientation orientation;
  bool all_roots = false;
  RootSystemPtr rs;
  std::vector<LedgerRow> rows;
};

Ledger make_ledger(const LieAlgebra& L, const SignAssignment& signs,
                   Orientation orientation, bool all_roots);

/// Byte-deterministic rendering. CSV/TSV carry the header
/// alpha,beta,rho_ab,rho_ba,N; JSON follows
/// {type, rank, orientation, rows:[{alpha,beta,rho_ab,rho_ba,N}]}.
std::string format_ledger(const Ledger& ledger, TableFormat format);

std::string report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

}  // namespace chevkit
