#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "superfast/errors.hpp"
#include "superfast/sweep.hpp"

using namespace superfast;

namespace {

SweepConfig chain(std::vector<std::size_t> sizes, std::vector<double> exps) {
  SweepConfig c;
  c.dimension = 1;
  c.sizes = std::move(sizes);
  c.exponents = std::move(exps);
  c.jobs = 2;
  return c;
}

}  // namespace

TEST_CASE("side lengths and labels") {
  CHECK(side_length_for(1, 7) == 7);
  CHECK(side_length_for(2, 16) == 4);
  CHECK(side_length_for(3, 64) == 4);
  CHECK(side_length_for(3, 8) == 2);
  CHECK_THROWS_AS(side_length_for(2, 10), ValidationError);
  CHECK_THROWS_AS(side_length_for(4, 16), ValidationError);
  CHECK(basis_label(8.75) == "8.75");
  CHECK(basis_label(7) == "7.00");
}

TEST_CASE("configuration validation") {
  auto c = chain({2}, {8.75});
  CHECK_NOTHROW(c.validate());
  c.cutoff = -1.0;
  CHECK_THROWS_AS(c.validate(), ValidationError);
  CHECK_THROWS_AS(chain({}, {1.0}).validate(), ValidationError);
  CHECK_THROWS_AS(chain({2}, {}).validate(), ValidationError);
  auto d = chain({5}, {1.0});
  d.dimension = 2;
  CHECK_THROWS_AS(d.validate(), ValidationError);
}

TEST_CASE("H2 chain at the tight exponent") {
  const auto row = run_cell(1, 2, 8.75, chain({2}, {8.75}));
  REQUIRE(row.error.empty());
  REQUIRE(row.jw);
  REQUIRE(row.ose);
  CHECK(row.jw->qubits == 4);
  CHECK(row.ose->qubits == 2);
  CHECK(row.jw->total_weight == 24);
  CHECK(row.ose->total_weight == 4);
  CHECK(row.ose->max_weight == 2);
  CHECK(row.stabilizers == 0);
}

TEST_CASE("four-atom chain qubit counts and stabilizers") {
  const auto row = run_cell(1, 4, 8.75, chain({4}, {8.75}));
  REQUIRE(row.error.empty());
  CHECK(row.jw->qubits == 8);
  CHECK(row.ose->qubits == 6);
  CHECK(row.stabilizers == 0);
}

TEST_CASE("sweep rows are deterministic and ordered") {
  auto cfg = chain({2, 4}, {8.75, 3.0});
  const auto a = run_sweep(cfg);
  cfg.jobs = 1;
  const auto b = run_sweep(cfg);
  REQUIRE(a.size() == 4);
  CHECK(a[0].basis == "8.75");
  CHECK(a[0].size == 2);
  CHECK(a[1].size == 4);
  CHECK(a[2].basis == "3.00");
  CHECK(to_csv(a) == to_csv(b));
  const auto csv = to_csv(a);
  CHECK(csv.rfind("dim,basis,Size,JW_Qbts,BKSF_Qbts,JW_TWt,BKSF_TWt", 0) == 0);
  const auto j = nlohmann::json::parse(to_json(a));
  CHECK(j.size() == 4);
}

TEST_CASE("mapping selection") {
  auto cfg = chain({2}, {8.75});
  cfg.mappings.jw = false;
  const auto row = run_cell(1, 2, 8.75, cfg);
  CHECK_FALSE(row.jw.has_value());
  CHECK(row.ose.has_value());
}

TEST_CASE("reference loading and comparison") {
  const auto ref = load_reference_dir(data_directory() / "reference");
  CHECK(ref.size() >= 15);
  const auto one = load_reference_csv(data_directory() / "reference" / "1d_basis_8.75.csv");
  REQUIRE(one.size() == 5);
  CHECK(one[1].size == 4);
  CHECK(one[1].jw_total_weight == 88);

  const auto rows = run_sweep(chain({2, 3}, {8.75}));
  const auto rep = compare_reference(rows, one);
  CHECK(rep.pass);
  CHECK(rep.uncovered == 1);

  auto bad = rows;
  bad[0].ose->qubits = 99;
  CHECK_FALSE(compare_reference(bad, one).pass);
  auto off = rows;
  off[0].jw->total_weight = 30;  // 25% above 24
  CHECK_FALSE(compare_reference(off, one).pass);
  CHECK(compare_reference(off, one, CompareTolerance{0.30}).pass);
  auto failed = rows;
  failed[0].error = "boom";
  CHECK_FALSE(compare_reference(failed, one).pass);
  CHECK_FALSE(rep.to_text().empty());
}

TEST_CASE("malformed reference files") {
  const auto path = std::filesystem::temp_directory_path() / "superfast_bad_ref.csv";
  {
    std::ofstream out(path);
    out << "dim,basis,Size\n1,8.75,x\n";
  }
  CHECK_THROWS_AS(load_reference_csv(path), ParseError);
  std::filesystem::remove(path);
}
