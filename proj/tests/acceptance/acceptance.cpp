// Runs acceptance criteria 1-9 and prints one PASS/FAIL line each.
// Criterion 9 runs `report-all --seed 42` twice and compares bytes: through
// the binary given by --cli, or in process when none is given.

#include <array>
#include <cstdio>
#include <iostream>
#include <string>

#include <sys/wait.h>

#include "criteria.hpp"
#include "germcat/cli/execute.hpp"

namespace {

bool capture(const std::string& command, std::string& out) {
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return false;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  // A failing check still yields a report; only errors and launch failures count.
  const int status = pclose(pipe);
  return status != -1 && WIFEXITED(status) && WEXITSTATUS(status) <= 1;
}

std::string shell_quoted(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

  using namespace germcat;
  const acceptance::Config config{42, acceptance::default_fixture_dir()};
  bool all = true;
  for (const auto& o : acceptance::library_checks(config)) {
    std::cout << (o.passed ? "PASS" : "FAIL") << " " << o.id << " " << o.name << ": " << o.summary << "\n";
    all = all && o.passed;
  }

  std::string first, second, how;
  bool ran = true;
  if (!cli.empty()) {
    const std::string command = shell_quoted(cli) + " report-all --seed 42";
    ran = capture(command, first) && capture(command, second);
    how = "two runs of the germcat binary";
  } else {
    const cli::Options options;
    const cli::Json request = {{"command", "report-all"}, {"seed", 42}};
    first = cli::to_json(cli::execute(request, options)).dump(2);
    second = cli::to_json(cli::execute(request, options)).dump(2);
    how = "two in-process runs";
  }
  const bool same = ran && !first.empty() && first == second;
  std::cout << (same ? "PASS" : "FAIL") << " 9 determinism: report-all --seed 42, " << how << ", "
            << first.size() << " bytes, " << (same ? "identical" : ran ? "different" : "a run errored") << "\n";
  all = all && same;
  std::cout.flush();
  return all ? 0 : 1;
}
