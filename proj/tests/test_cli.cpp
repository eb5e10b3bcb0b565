#include <filesystem>
#include <fstream>
#include <sstream>

#include "cyop/catalog.hpp"
#include "cyop/cli.hpp"
#include "cyop/opfile.hpp"
#include "doctest.h"

using namespace cyop;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("file round trips") {
  // Every shipped operator file parses, and theta-form files canonicalize to
  // themselves byte-for-byte.
  namespace fs = std::filesystem;
  int checked = 0;
  for (const auto& entry : fs::directory_iterator(data_dir())) {
    if (entry.path().extension() != ".op") continue;
    OpDocument doc = load_opfile(entry.path().string());
    if (doc.form == "theta") {
      REQUIRE(doc.op.has_value());
      std::string again = serialize_operator(doc.name, doc.op->canonical(), doc.meta);
      std::string original = [&] {
        std::ifstream in(entry.path());
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
      }();
      CHECK(again == original);
      // And matches the built-in case of the same name.
      CHECK(doc.op->canonical() == catalog_case(doc.name).op->canonical());
      ++checked;
    }
  }
  CHECK(checked > 40);

  // The dz exemplar converts to the same operator as the theta-form file.
  OpDocument dz = load_opfile((fs::path(data_dir()) / "zeta4-op4-dz.op").string());
  CHECK(dz.op->canonical() == catalog_case("zeta4-op4").op->canonical());

  // Every sequence file agrees with its built-in generator.
  int seq_checked = 0;
  for (const auto& entry : fs::directory_iterator(data_dir())) {
    if (entry.path().extension() != ".seq") continue;
    OpDocument doc = load_opfile(entry.path().string());
    Sequence expect = catalog_sequence(doc.name, doc.seq->length() - 1);
    CHECK(doc.seq->values == expect.values);
    ++seq_checked;
  }
  CHECK(seq_checked > 25);
}

TEST_CASE("analyze is deterministic and reports the integrality structure") {
  auto r1 = cli({"analyze", "zeta4-op5", "--order", "14"});
  auto r2 = cli({"analyze", "zeta4-op5", "--order", "14"});
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
  CHECK(r1.out.find("MUM: yes") != std::string::npos);
  CHECK(r1.out.find("y0 = 1 + 12*z + 804*z^2") != std::string::npos);
  CHECK(r1.out.find("(q/z)^(1/3) integral: yes; head 1 + 15*z + 1145*z^2") != std::string::npos);
  CHECK(r1.out.find("y0^(1/2) integral: yes") != std::string::npos);

  auto rj = cli({"analyze", "zeta4-op5", "--order", "10", "--json"});
  CHECK(rj.code == 0);
  CHECK(rj.out.find("\"mum\": true") != std::string::npos);

  // theta^4 from a temporary file: trivial couplings.
  auto tmp = std::filesystem::temp_directory_path() / "cyop-theta4.op";
  {
    std::ofstream f(tmp);
    f << "{\"name\":\"theta4\",\"form\":\"theta\",\"coeffs\":[[0,0,0,0,1]]}\n";
  }
  auto r3 = cli({"analyze", tmp.string(), "--order", "8"});
  CHECK(r3.code == 0);
  CHECK(r3.out.find("q(z)/z = 1 + O(z^6)") != std::string::npos);

  // Non-MUM input downgrades to an indicial-only report.
  auto tmp2 = std::filesystem::temp_directory_path() / "cyop-nonmum.op";
  {
    std::ofstream f(tmp2);
    f << "{\"name\":\"shifted\",\"form\":\"theta\",\"coeffs\":[[0,1,1]]}\n";
  }
  auto r4 = cli({"analyze", tmp2.string()});
  CHECK(r4.code == 0);
  CHECK(r4.out.find("indicial report only") != std::string::npos);
  CHECK(r4.out.find("exponents: -1 0") != std::string::npos);
}

TEST_CASE("exit codes") {
  auto missing = cli({"analyze", "no-such-case"});
  CHECK(missing.code == 2);

  auto bad = cli({"frobnicate"});
  CHECK(bad.code == 2);

  // A failed verification exits 1: the printed #124 dual mismatch.
  auto dual = cli({"transform", "case124", "dualize", "--c", "1/243", "--compare", "case124-dual-printed"});
  CHECK(dual.code == 1);
  CHECK(dual.out.find("MISMATCH") != std::string::npos);
  CHECK(dual.out.find("z^4 theta^1") != std::string::npos);

  // And a passing one exits 0: #55 against its printed dual.
  auto dual55 = cli({"transform", "case55", "dualize", "--c", "1/262144", "--compare", "case55-dual-printed"});
  CHECK(dual55.code == 0);
  CHECK(dual55.out.find("matches case55-dual-printed exactly") != std::string::npos);
}

TEST_CASE("hadamard command") {
  auto closed = cli({"hadamard", "b", "A", "--mode", "closed"});
  CHECK(closed.code == 0);
  CHECK(closed.out.find("PASS") != std::string::npos);

  auto meur = cli({"hadamard", "k", "m", "--mode", "meurman"});
  CHECK(meur.code == 0);

  auto sq = cli({"hadamard", "m", "--square"});
  CHECK(sq.code == 0);
  CHECK(sq.out.find("PASS") != std::string::npos);

  auto shape = cli({"hadamard", "alpha", "alpha", "--mode", "closed"});
  CHECK(shape.code == 2);
}

TEST_CASE("transform command") {
  auto ext = cli({"transform", "zeta4-op4", "exterior-square"});
  CHECK(ext.code == 0);
  OpDocument got = parse_opfile(ext.out);
  CHECK(got.op->canonical() == catalog_case("zeta4-op5").op->canonical());

  auto root = cli({"transform", "alpha", "sym-sqrt"});
  CHECK(root.code == 0);
  CHECK(parse_opfile(root.out).op->order() == 2);
}

TEST_CASE("check command") {
  auto realizable = cli({"check", "example9", "realizable", "--k", "1"});
  CHECK(realizable.code == 0);
  CHECK(realizable.out.find("B: 1 2 2 3 6 9") != std::string::npos);

  auto super = cli({"check", "zeta4-op5", "supercongruence", "--p", "5", "--r", "1", "--k", "3", "--n", "12"});
  CHECK(super.code == 0);

  auto zl = cli({"check", "rec-zeta4", "zeta-limit", "--n", "20", "--b", "zeta4-B"});
  CHECK(zl.code == 0);
  CHECK(zl.out.find("1.0823232337") != std::string::npos);

  auto poly = cli({"check", "example9", "polylog", "--k", "1", "--order", "20"});
  CHECK(poly.code == 0);

  auto lcm = cli({"check", "zeta4-B", "lcm-bound", "--power", "4"});
  CHECK(lcm.code == 0);
}

TEST_CASE("analyze rescale path") {
  auto r = cli({"analyze", "had-km", "--order", "8", "--rescale-c", "1/3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("N_1 = -48") != std::string::npos);
  CHECK(r.out.find("N_4 = 77958") != std::string::npos);
}
