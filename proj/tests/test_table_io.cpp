#include <doctest.h>

#include <algorithm>

#include "chevkit/errors.hpp"
#include "chevkit/table_io.hpp"

using namespace chevkit;

namespace {

Ledger ledger_of(CartanType type, Orientation o, bool all_roots) {
  auto rs = build_root_system(type);
  SignAssignment signs = special_orientation(*rs, o);
  LieAlgebra L = LieAlgebra::special(rs, signs);
  return make_ledger(L, signs, o, all_roots);
}

}  // namespace

TEST_SUITE_BEGIN("table_io");

TEST_CASE("the F4 positive ledger has 68 rows in the published order") {
  Ledger ledger = ledger_of({TypeLetter::F, 4}, Orientation::minus, false);
  REQUIRE(ledger.rows.size() == 68);
  const RootSystem& R = *ledger.rs;
  CHECK(R.render(ledger.rows.front().alpha) == "1000");
  CHECK(R.render(ledger.rows.front().beta) == "0100");
  CHECK(ledger.rows.front().rho_ab == -2);
  CHECK(ledger.rows.front().rho_ba == 0);
  CHECK(ledger.rows.front().n == -1);
  CHECK(R.render(ledger.rows.back().alpha) == "1121");
  CHECK(R.render(ledger.rows.back().beta) == "1221");
  CHECK(ledger.rows.back().n == -2);
}

TEST_CASE("A1 has no composable pair") {
  Ledger ledger = ledger_of({TypeLetter::A, 1}, Orientation::plus, false);
  CHECK(ledger.rows.empty());
  CHECK(format_ledger(ledger, TableFormat::csv) == "alpha,beta,rho_ab,rho_ba,N\n");
}

TEST_CASE("the full ledger covers the other sign quadrants") {
  Ledger pos = ledger_of({TypeLetter::A, 2}, Orientation::plus, false);
  Ledger all = ledger_of({TypeLetter::A, 2}, Orientation::plus, true);
  CHECK(pos.rows.size() == 1);
  CHECK(all.rows.size() == 6);  // one per unordered composable pair of the 6 roots
  const RootSystem& R = *all.rs;
  int negatives = 0;
  for (const LedgerRow& row : all.rows)
    if (!R.is_positive(row.alpha) || !R.is_positive(row.beta)) ++negatives;
  CHECK(negatives == 5);
}

TEST_CASE("csv and tsv carry the fixed header and are byte-deterministic") {
  Ledger ledger = ledger_of({TypeLetter::B, 3}, Orientation::plus, true);
  std::string csv = format_ledger(ledger, TableFormat::csv);
  CHECK(csv.rfind("alpha,beta,rho_ab,rho_ba,N\n", 0) == 0);
  CHECK(csv == format_ledger(ledger_of({TypeLetter::B, 3}, Orientation::plus, true),
                             TableFormat::csv));
  std::string tsv = format_ledger(ledger, TableFormat::tsv);
  CHECK(tsv.rfind("alpha\tbeta\trho_ab\trho_ba\tN\n", 0) == 0);
  CHECK(std::count(tsv.begin(), tsv.end(), '\n') ==
        std::count(csv.begin(), csv.end(), '\n'));
}

TEST_CASE("json ledger carries the schema fields") {
  Ledger ledger = ledger_of({TypeLetter::G, 2}, Orientation::plus, false);
  std::string json = format_ledger(ledger, TableFormat::json);
  CHECK(json.find("\"type\": \"G\"") != std::string::npos);
  CHECK(json.find("\"rank\": 2") != std::string::npos);
  CHECK(json.find("\"orientation\": \"plus\"") != std::string::npos);
  CHECK(json.find("\"rho_ab\"") != std::string::npos);
  CHECK(json.find("\"N\"") != std::string::npos);
}

TEST_CASE("pretty output includes the header row") {
  Ledger ledger = ledger_of({TypeLetter::A, 2}, Orientation::plus, false);
  std::string text = format_ledger(ledger, TableFormat::pretty);
  CHECK(text.find("alpha") != std::string::npos);
  CHECK(text.find("rho_ab") != std::string::npos);
  CHECK(text.find("# A2") != std::string::npos);
}

TEST_CASE("format names parse and reject garbage") {
  CHECK(table_format_from_name("csv") == TableFormat::csv);
  CHECK_THROWS_AS(table_format_from_name("yaml"), ParseError);
}

TEST_SUITE_END();
