// Runs the command-line tool on the cases in tests/golden/cases.json and
// compares exit codes, selected fields and payload snapshots.
//
//   cli_golden <tors> <source-dir> <build-dir> [--update]

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int exit = -1;
  json report;
};

std::string substitute(std::string s, const std::string& key, const std::string& value) {
  for (auto at = s.find(key); at != std::string::npos; at = s.find(key, at + value.size()))
    s.replace(at, key.size(), value);
  return s;
}

Run run(const std::string& tool, const std::string& source, const std::string& args) {
  const std::string cmd = "cd '" + source + "' && '" + tool + "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  const int status = pclose(pipe);
  r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.report = json::parse(out, nullptr, false);
  return r;
}

json read_json(const fs::path& p) {
  std::ifstream in(p);
  return json::parse(in, nullptr, false);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 4) {
    std::cerr << "usage: cli_golden <tors> <source-dir> <build-dir> [--update]\n";
    return 2;
  }
  const std::string tool = argv[1], source = argv[2];
  const fs::path build = fs::path(argv[3]) / "golden-work";
  const bool update = argc > 4 && std::string(argv[4]) == "--update";
  fs::create_directories(build);
  const fs::path golden = fs::path(source) / "tests" / "golden";
  const json cases = read_json(golden / "cases.json");
  if (!cases.is_array()) {
    std::cerr << "cannot read " << (golden / "cases.json") << "\n";
    return 2;
  }

  int failures = 0;
  auto fail = [&](const std::string& name, const std::string& what) {
    std::cout << "FAIL " << name << ": " << what << "\n";
    ++failures;
  };

  for (const auto& c : cases) {
    const std::string name = c.at("name");
    const std::string args = substitute(c.at("args"), "{work}", build.string());
    Run first = run(tool, source, args);
    const int before = failures;

    if (first.exit != c.value("exit", 0)) fail(name, "exit " + std::to_string(first.exit));
    if (c.contains("out")) {
      // the report went to a file; stdout must be empty
      const fs::path out = substitute(c.at("out"), "{work}", build.string());
      if (!first.report.is_discarded()) fail(name, "report also written to standard output");
      first.report = read_json(out);
    }
    if (first.report.is_discarded() || !first.report.is_object()) {
      fail(name, "no JSON report");
      continue;
    }
    for (const char* key : {"command", "status", "payload", "timing"})
      if (!first.report.contains(key)) fail(name, std::string("report lacks ") + key);
    if (c.contains("status") && first.report.value("status", "") != c["status"])
      fail(name, "status " + first.report.value("status", std::string("?")));

    const json expect = c.value("expect", json::object());
    for (const auto& [ptr, want] : expect.items()) {
      const json::json_pointer p(ptr);
      if (!first.report.contains(p))
        fail(name, ptr + " missing");
      else if (first.report[p] != want)
        fail(name, ptr + " is " + first.report[p].dump() + ", expected " + want.dump());
    }

    if (c.value("snapshot", false)) {
      const fs::path snap = golden / (name + ".json");
      if (update) {
        std::ofstream(snap) << first.report["payload"].dump(2) << "\n";
      } else {
        const json want = read_json(snap);
        if (want.is_discarded())
          fail(name, "missing snapshot " + snap.string());
        else if (want != first.report["payload"])
          fail(name, "payload differs from " + snap.string());
      }
    }

    if (!c.contains("out")) {
      const Run second = run(tool, source, args);
      if (second.exit != first.exit || second.report["payload"] != first.report["payload"])
        fail(name, "second run differs");
    }
    if (failures == before) std::cout << "ok   " << name << "\n";
  }
  std::cout << (failures ? "FAILED " : "passed ") << cases.size() << " cases, " << failures << " failures\n";
  return failures ? 1 : 0;
}
