#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "zerocert/certificate_io.hpp"
#include "zerocert/cli.hpp"

using namespace zerocert;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("certify exit codes") {
  const Run id = run({"certify", "--map", "x1, x2", "--n", "2", "--center", "0,0", "--radius", "1"});
  CHECK(id.code == 0);
  CHECK(id.out.find("\"ZeroGuaranteed\"") != std::string::npos);

  const Run far = run({"certify", "--map", "x1+3, x2+3", "--n", "2", "--center", "0,0", "--radius", "1"});
  CHECK(far.code == 2);
  const Certificate c = certificate_from_json(far.out);
  CHECK(c.obstruction == 0);
  CHECK(c.extension_witness_present);

  CHECK(run({"certify", "--map", "x1 - 1, x2", "--n", "2"}).code == 3);
  CHECK(run({"certify", "--map", "x1, x2, 1", "--n", "2"}).code == 2);
  CHECK(run({"certify", "--map", "x3", "--n", "2"}).code == 4);
  CHECK(run({"certify", "--map", "x1, x2", "--n", "2", "--center", "0"}).code == 4);
  CHECK(run({"certify", "--map", "x1", "--n", "2"}).code == 4);
  CHECK(run({"certify", "--n", "2"}).code == 4);
  CHECK(run({"bogus"}).code == 4);
}

TEST_CASE("certify with lipschitz bounds and output file") {
  const Run r = run({"certify", "--map", "opposite-id", "--n", "2", "--lipschitz", "1"});
  CHECK(r.code == 0);
  CHECK(certificate_from_json(r.out).rigor == Rigor::Rigorous);

  const Run a = run({"certify", "--map", "opposite-id", "--n", "2", "--lipschitz", "auto"});
  CHECK(a.code == 0);
  CHECK(certificate_from_json(a.out).rigor == Rigor::Heuristic);

  CHECK(run({"certify", "--map", "x1,x2", "--n", "2", "--lipschitz", "-1"}).code == 4);

  const std::string path = "cli_test_cert.json";
  const Run w = run({"certify", "--map", "x1,x2", "--n", "2", "--out", path});
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == w.out);
  std::remove(path.c_str());
}

TEST_CASE("map files") {
  const std::string path = "cli_test_map.txt";
  {
    std::ofstream f(path);
    f << "x1^2 - x2^2,\n2*x1*x2\n";
  }
  const Run r = run({"winding", "--map", "@" + path});
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");
  std::remove(path.c_str());
  CHECK(run({"winding", "--map", "@does-not-exist"}).code == 4);
}

TEST_CASE("winding") {
  const Run r = run({"winding", "--map", "x1^2-x2^2, 2*x1*x2"});
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");
  CHECK(run({"winding", "--map", "x1-1, x2"}).code == 3);
  CHECK(run({"winding", "--map", "x1"}).code == 4);
  CHECK(run({"winding", "--map", "x1^3, x2", "--level", "0", "--budget", "0"}).code == 5);
}

TEST_CASE("locate and fixed-point") {
  const Run r = run({"locate", "--map", "x1 - 0.3, x2 - 0.4", "--box", "-1,1,-1,1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"point\"") != std::string::npos);
  CHECK(run({"locate", "--map", "x1+3, x2+3", "--box", "-1,1,-1,1"}).code == 2);
  CHECK(run({"locate", "--map", "x1^3 - 0.5", "--box", "-1,1"}).code == 0);
  CHECK(run({"locate", "--map", "x1", "--box", "-1,1,0"}).code == 4);

  CHECK(run({"fixed-point", "--map", "rotation-half"}).code == 0);
  CHECK(run({"fixed-point", "--map", "x1 + 3, x2"}).code == 4);
}

TEST_CASE("homotopy and examples") {
  CHECK(run({"homotopy", "--from", "x1, x2", "--to", "x1 + 3, x2 + 3"}).code == 2);
  CHECK(run({"homotopy", "--from", "x1, x2", "--to", "x1 + 0.1, x2"}).code == 0);
  const Run e = run({"examples"});
  CHECK(e.code == 0);
  for (const char* name : {"opposite-id", "shifted", "z2", "coercive-shift", "rotation-half"}) {
    CHECK(e.out.find(name) != std::string::npos);
  }
  CHECK(run({"--help"}).code == 0);
}
