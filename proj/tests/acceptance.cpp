// Acceptance gate: one line per criterion on the default window.
// Every comparison is exact (tolerance 0).

#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "v1ss/cli.hpp"
#include "v1ss/table.hpp"
#include "v1ss/verify.hpp"

using namespace v1ss;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& what, const std::string& detail) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << n << ": " << what << " -- " << detail
            << " (tolerance: exact)\n";
  if (!ok) ++failures;
}

std::string counts(const CheckResult& c) {
  return "checked=" + std::to_string(c.checked) + " failed=" + std::to_string(c.failed) +
         " insufficient=" + std::to_string(c.insufficient);
}

bool clean(const CheckResult& c) { return c.status == Status::Pass && c.failed == 0 && c.checked > 0; }

std::map<std::string, std::string> full_run(const fs::path& dir) {
  fs::remove_all(dir);
  std::ostringstream sink;
  const std::vector<std::vector<std::string>> commands{
      {"verify"},
      {"decompose"},
      {"decompose", "--format", "svg"},
      {"page", "--spectrum", "M", "--page", "4"},
      {"page", "--spectrum", "EndM", "--page", "4"},
      {"chart", "--spectrum", "M", "--page", "4"},
  };
  for (auto args : commands) {
    args.insert(args.end(), {"--out", dir.string(), "--no-cache"});
    run(args, sink, sink);
  }
  std::map<std::string, std::string> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file()) files[e.path().filename().string()] = read_file(e.path());
  return files;
}

}  // namespace

int main() {
  auto start = std::chrono::steady_clock::now();
  const auto window = TruncationWindow::standard(64, 12, -16, 16);
  PageSet pages(window);
  auto rep = run_verification(pages);
  std::cout << "window: t<=64, s<=12, v1 exponents in [-16,16], generators up to h(" << pages.h_cap() << ",1)\n";

  {
    const auto& c = rep.check("d_squared");
    report(1, clean(c) && c.insufficient == 0, "d^2 = 0 on E2(EndM), E2(M), E3(EndM), E3(M)", counts(c));
  }
  {
    const auto& c = rep.check("ext_tables");
    report(2, clean(c) && c.insufficient == 0, "cobar Ext of End(M) and M match the closed forms", counts(c));
  }
  {
    const auto& c = rep.check("eta_identity");
    report(3, clean(c) && c.rows.front().note == "zero-in-cohomology", "xi1|1 + xi1^2|alpha is a coboundary",
           c.rows.front().note);
  }
  {
    const auto& c = rep.check("e3_presentation");
    report(4, clean(c), "homology of (E2(EndM), d2) matches the E3 presentation", counts(c));
  }
  {
    const auto& s = rep.check("survival");
    const auto& sc = rep.check("smaller_conjecture");
    report(5, clean(s) && s.insufficient == 0 && clean(sc), "survival of alpha, v1 alpha, h11, v1 h21; v1^m x(n) dies",
           "survival " + counts(s) + "; v1^m x(n) " + counts(sc));
  }
  {
    const auto& c = rep.check("d3m_list");
    report(6, clean(c) && c.insufficient == 0 && c.rows.size() == 5, "d3 on M matches the closed formulas",
           counts(c));
  }
  {
    const auto& c = rep.check("w_grading");
    report(7, clean(c), "d3 raises w by one", counts(c));
  }
  {
    const auto& c = rep.check("e4_claims");
    report(8, clean(c) && c.insufficient == 0, "claims (1)-(4) and (i)-(ii) on the w-slices", counts(c));
  }
  {
    const auto& c = rep.check("mahowald_classes");
    report(9, clean(c) && c.insufficient == 0, "named H(d) classes and B(d) members", counts(c));
  }
  {
    const auto& c = rep.check("decomposition");
    report(10, clean(c), "E4(M) equals the bo/bu pattern sum for stem <= 24, filtration <= 12",
           counts(c) + " (insufficient rows are listed in the report)");
  }
  {
    auto tmp = fs::temp_directory_path() / "v1ss_acceptance";
    auto a = full_run(tmp / "a");
    auto b = full_run(tmp / "b");
    bool svg = false;
    for (const auto& [name, _] : a) svg |= name.ends_with(".svg");
    report(11, a == b && a.size() >= 6 && svg, "two full runs are byte-identical",
           std::to_string(a.size()) + " artifacts compared");
    fs::remove_all(tmp);
  }

  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "elapsed " << static_cast<int>(secs) << " s\n";
  return failures == 0 ? 0 : 1;
}
