#include "chevkit/table_io.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include <json.hpp>

#include "chevkit/errors.hpp"

namespace chevkit {

using json = nlohmann::ordered_json;

TableFormat table_format_from_name(const std::string& name) {
  if (name == "pretty") return TableFormat::pretty;
  if (name == "csv") return TableFormat::csv;
  if (name == "tsv") return TableFormat::tsv;
  if (name == "json") return TableFormat::json;
  throw ParseError("unknown format '" + name + "' (pretty, csv, tsv, json)");
}

std::string VerificationReport::summary() const {
  std::string out = suite + ": " + (ok() ? "pass" : "FAIL") + " (" + std::to_string(checks) +
                    " checks";
  if (failure_count) out += ", " + std::to_string(failure_count) + " failures";
  out += ")";
  return out;
}

Ledger make_ledger(const LieAlgebra& L, const SignAssignment& signs, Orientation orientation,
                   bool all_roots) {
  const RootSystem& R = L.roots();
  if (!signs.valid_for(R)) throw Error("sign assignment does not fit the root system");
  OrientedEdges edges = oriented_edges(R, signs);
  Ledger out;
  out.type = R.type();
  out.orientation = orientation;
  out.all_roots = all_roots;
  out.rs = L.roots_ptr();
  const int limit = all_roots ? R.num_roots() : R.num_positive();
  for (int a = 0; a < limit; ++a)
    for (int b = a + 1; b < limit; ++b) {
      if (R.sum_index(a, b) < 0) continue;
      out.rows.push_back({a, b, rho(R, edges, R.root(a), R.root(b)),
                          rho(R, edges, R.root(b), R.root(a)), L.structure_constant(a, b)});
    }
  return out;
}

namespace {

std::string delimited(const Ledger& ledger, char sep) {
  const RootSystem& R = *ledger.rs;
  std::string out = "alpha";
  out += sep;
  out += "beta";
  out += sep;
  out += "rho_ab";
  out += sep;
  out += "rho_ba";
  out += sep;
  out += "N\n";
  for (const LedgerRow& row : ledger.rows) {
    out += R.render(row.alpha);
    out += sep;
    out += R.render(row.beta);
    out += sep;
    out += std::to_string(row.rho_ab);
    out += sep;
    out += std::to_string(row.rho_ba);
    out += sep;
    out += std::to_string(row.n);
    out += '\n';
  }
  return out;
}

std::string pretty(const Ledger& ledger) {
  const RootSystem& R = *ledger.rs;
  std::vector<std::array<std::string, 5>> cells;
  cells.push_back({"alpha", "beta", "rho_ab", "rho_ba", "N"});
  for (const LedgerRow& row : ledger.rows)
    cells.push_back({R.render(row.alpha), R.render(row.beta), std::to_string(row.rho_ab),
                     std::to_string(row.rho_ba), std::to_string(row.n)});
  std::array<std::size_t, 5> width{};
  for (const auto& row : cells)
    for (int k = 0; k < 5; ++k) width[k] = std::max(width[k], row[k].size());
  std::ostringstream out;
  out << "# " << ledger.type.str() << ", orientation "
      << (ledger.orientation == Orientation::plus ? "plus" : "minus") << ", "
      << (ledger.all_roots ? "all" : "positive") << " roots, " << ledger.rows.size() << " rows\n";
  for (const auto& row : cells) {
    for (int k = 0; k < 5; ++k) {
      if (k) out << "  ";
      out << std::string(width[k] - row[k].size(), ' ') << row[k];
    }
    out << '\n';
  }
  return out.str();
}

std::string to_json_string(const Ledger& ledger) {
  const RootSystem& R = *ledger.rs;
  json doc;
  doc["type"] = std::string(1, to_char(ledger.type.letter));
  doc["rank"] = ledger.type.rank;
  doc["orientation"] = ledger.orientation == Orientation::plus ? "plus" : "minus";
  doc["rows"] = json::array();
  for (const LedgerRow& row : ledger.rows) {
    json r;
    r["alpha"] = R.render(row.alpha);
    r["beta"] = R.render(row.beta);
    r["rho_ab"] = row.rho_ab;
    r["rho_ba"] = row.rho_ba;
    r["N"] = row.n;
    doc["rows"].push_back(std::move(r));
  }
  return doc.dump(2) + "\n";
}

}  // namespace

std::string format_ledger(const Ledger& ledger, TableFormat format) {
  switch (format) {
    case TableFormat::csv: return delimited(ledger, ',');
    case TableFormat::tsv: return delimited(ledger, '\t');
    case TableFormat::pretty: return pretty(ledger);
    case TableFormat::json: return to_json_string(ledger);
  }
  throw Error("unreachable");
}

std::string report_to_json(const VerificationReport& report) {
  json doc;
  doc["suite"] = report.suite;
  doc["ok"] = report.ok();
  doc["checks"] = report.checks;
  doc["failure_count"] = report.failure_count;
  doc["failures"] = json::array();
  for (const Failure& f : report.failures) {
    json r;
    r["context"] = f.context;
    r["expected"] = f.expected;
    r["actual"] = f.actual;
    doc["failures"].push_back(std::move(r));
  }
  return doc.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& report) {
  std::string out = report.summary() + "\n";
  for (const Failure& f : report.failures)
    out += "  " + f.context + ": expected " + f.expected + ", got " + f.actual + "\n";
  if (report.failure_count > static_cast<long long>(report.failures.size()))
    out += "  ... and " +
           std::to_string(report.failure_count - static_cast<long long>(report.failures.size())) +
           " more\n";
  return out;
}

}  // namespace chevkit
