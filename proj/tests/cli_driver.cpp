// Exercises the command line tool as a black box: exit codes, output
// contents, and byte-level determinism. Takes the binary path as argv[1].

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct RunResult {
  int code = -1;
  std::string out;  // stdout and stderr combined
};

RunResult run(const std::string& command) {
  RunResult r;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (!pipe) {
    r.code = -1;
    return r;
  }
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int failures = 0;

void expect(bool ok, const std::string& what, const RunResult& r) {
  if (ok) {
    std::cout << "[ ok ] " << what << '\n';
    return;
  }
  ++failures;
  std::cout << "[FAIL] " << what << "\n       exit " << r.code
            << ", output:\n" << r.out << '\n';
}

bool contains(const RunResult& r, const std::string& needle) {
  return r.out.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: cli_driver <path-to-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];

  RunResult r = run(cli + " genus --n 5 --sigma-a '(1 2 3)' --sigma-b '(1 4 5)(2 3)' --orbits");
  expect(r.code == 0 && contains(r, "\"genus\":2") &&
             contains(r, "\"orbit_sizes\":[8,8,4]"),
         "genus of the five-square surface", r);

  r = run(cli + " genus --n 1 --sigma-a id --sigma-b id");
  expect(r.code == 0 && contains(r, "\"genus\":1"), "genus of the torus", r);

  r = run(cli + " genus --n 2 --sigma-a '(1 2)' --sigma-b '(1 2)' --format csv");
  expect(r.code == 0 && contains(r, "genus,1") && contains(r, "vertices,2"),
         "genus csv output", r);

  r = run(cli + " genus --n 3 --sigma-a '(1 2)' --sigma-b id");
  expect(r.code == 3 && contains(r, "square 3"),
         "disconnected input exits 3 naming the square", r);

  r = run(cli + " genus --n 3 --sigma-a '(1 2' --sigma-b id");
  expect(r.code == 2, "malformed cycles exit 2", r);

  r = run(cli + " genus --n 3");
  expect(r.code == 2, "missing gluing flags exit 2", r);

  r = run(cli + " genus --n 1 --sigma-a id --sigma-b id --bogus");
  expect(r.code == 2, "unknown flag exits 2", r);

  r = run(cli + " nonsense");
  expect(r.code == 2, "unknown subcommand exits 2", r);

  r = run(cli + " orbits --n 2 --sigma-a '(1 2)' --sigma-b '(1 2)' --format csv");
  expect(r.code == 0 && contains(r, "orbit,slot,square") && contains(r, "0,1,1") &&
             contains(r, "0,4,2"),
         "orbit csv listing", r);

  r = run(cli + " chartable --n 3 --format csv");
  expect(r.code == 0 &&
             r.out == "irrep,3,2+1,1+1+1\n3,1,1,1\n2+1,-1,0,2\n1+1+1,1,-1,1\n",
         "character table csv for three symbols", r);

  r = run(cli + " chartable --n 30");
  expect(r.code == 2, "character table bound exits 2", r);

  r = run(cli + " wreath-chartable --n 2 --format json");
  expect(r.code == 0 && contains(r, "\"order\": \"64\"") &&
             contains(r, "\"top_char\": 4"),
         "wreath table json", r);

  r = run(cli + " wreath-chartable --n 4");
  expect(r.code == 2, "full wreath table bound exits 2", r);

  r = run(cli + " wreath-chartable --n 6 --diagonal");
  expect(r.code == 0 && contains(r, "irrep,dim") && contains(r, ",625\n") &&
             contains(r, ",65536\n"),
         "diagonal wreath system at six symbols", r);

  r = run(cli + " frobenius --group sn --n 3 --c1 2+1 --c2 2+1 --z 1+1+1");
  expect(r.code == 0 && contains(r, "\"count\":\"3\""),
         "transposition pairs multiplying to the identity", r);

  r = run(cli + " frobenius --group sn --n 3 --c1 2+1 --c2 3 --z 2+1");
  expect(r.code == 0 && contains(r, "\"count\":\"2\""),
         "transposition times three-cycle landing on a transposition", r);

  r = run(cli + " frobenius --group wreath --n 2 --c1 0 --c2 0 --z 0");
  expect(r.code == 0 && contains(r, "\"count\":\"1\""),
         "wreath identity class solution count", r);

  r = run(cli + " frobenius --group wreath --n 2 --c1 99 --c2 0 --z 0");
  expect(r.code == 2, "wreath class index bound exits 2", r);

  r = run(cli + " frobenius --group sn --n 3 --c1 2+2 --c2 3 --z 3");
  expect(r.code == 2, "weight mismatch exits 2", r);

  r = run(cli + " prob --n 2 --type 1+1 --full");
  expect(r.code == 0 && contains(r, "\"reduced\":\"1/8\"") &&
             contains(r, "\"full_sum\":\"1/8\""),
         "reduced probability with full-sum cross-check", r);

  r = run(cli + " prob --n 5 --type 5");
  expect(r.code == 0 && contains(r, "\"leading\":\"1/138240000\"") &&
             contains(r, "\"reduced\":\"1/124416000\""),
         "refined split at a five-cycle", r);

  r = run(cli + " prob --n 4 --type 4 --full");
  expect(r.code == 2, "full-sum cross-check bound exits 2", r);

  r = run(cli + " prob --n 3 --type 2+x");
  expect(r.code == 2, "malformed type exits 2", r);

  r = run(cli + " dist --n 2 --exact");
  expect(r.code == 0 && contains(r, "# genus distribution\nvalue,probability\n1,1\n") &&
             contains(r, "\"tv_vs_oracle\":0.0"),
         "exact distribution of the two-square surfaces", r);

  r = run(cli + " dist --n 7 --exact");
  expect(r.code == 2, "exact enumeration bound exits 2", r);

  r = run(cli + " dist --n 3 --exact --samples 5");
  expect(r.code == 2, "exact and samples are mutually exclusive", r);

  r = run(cli + " dist --n 8 --samples 2000 --seed 1 --workers 2");
  expect(r.code == 0 && contains(r, "# summary") &&
             contains(r, "\"tv_vs_oracle\":") && contains(r, "\"ks_vs_normal\":"),
         "sampled distribution summary fields", r);

  const RunResult d1 = run(cli + " dist --n 20 --samples 2000 --seed 42 --workers 1");
  const RunResult d8 = run(cli + " dist --n 20 --samples 2000 --seed 42 --workers 8");
  const RunResult d1b = run(cli + " dist --n 20 --samples 2000 --seed 42 --workers 1");
  expect(d1.code == 0 && d1.out == d8.out && d1.out == d1b.out,
         "sampled output is byte-identical across runs and workers", d8);

  r = run(cli + " equiv --n 2 --sigma-a '(1 2)' --sigma-b '(1 2)' --n2 2 --sigma-a2 id --sigma-b2 '(1 2)'");
  expect(r.code == 0 && contains(r, "\"equivalent\":false"),
         "inequivalent two-square surfaces", r);

  r = run(cli + " equiv --n 5 --sigma-a '(1 2 3)' --sigma-b '(1 4 5)(2 3)' --n2 5 --sigma-a2 '(2 3 1)' --sigma-b2 '(2 4 5)(1 3)'");
  expect(r.code == 0 && contains(r, "\"equivalent\":true"),
         "conjugated five-square surfaces are equivalent", r);

  r = run(cli + " equiv --n 9 --sigma-a '(1 2 3 4 5 6 7 8 9)' --sigma-b id --n2 9 --sigma-a2 '(1 2 3 4 5 6 7 8 9)' --sigma-b2 id");
  expect(r.code == 2, "equivalence bound exits 2", r);

  r = run(cli + " verify --level quick");
  expect(r.code == 0 && contains(r, "orthogonality (n=8)") &&
             contains(r, "checks passed") && !contains(r, "[FAIL]"),
         "quick verification passes", r);

  r = run(cli + " verify --inject-fault");
  expect(r.code == 1 && contains(r, "chartable cell ([3+2], class 4+1)"),
         "injected corruption caught and named", r);

  r = run(cli + " verify --level quick --format json");
  expect(r.code == 0 && contains(r, "\"passed\":true"), "verification json", r);

  const std::string tmp = "cli_driver_out.json";
  r = run(cli + " genus --n 5 --sigma-a '(1 2 3)' --sigma-b '(1 4 5)(2 3)' --output " + tmp);
  std::ifstream in(tmp);
  std::stringstream written;
  written << in.rdbuf();
  std::remove(tmp.c_str());
  expect(r.code == 0 && r.out.empty() &&
             written.str().find("\"genus\":2") != std::string::npos,
         "output flag writes the result file", r);

  if (failures == 0) {
    std::cout << "all cli checks passed\n";
    return 0;
  }
  std::cout << failures << " cli checks failed\n";
  return 1;
}
