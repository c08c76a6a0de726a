// Acceptance suite: one PASS/FAIL line per criterion, indented detail lines
// below it. Exit status is nonzero if any criterion fails. A JSON copy of
// every record is written to acceptance_report.json in the working directory.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "levyrw/app.hpp"

using namespace levyrw;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int id;
  std::string title;
  bool pass = true;
  std::vector<std::string> lines;
  double seconds = 0.0;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string describe(const Criterion& c) {
  std::string s = (c.pass() ? "ok   " : "FAIL ") + c.name + " = " + fmt(c.estimate);
  switch (c.kind) {
    case CriterionKind::kRelative:
      s += "  target " + fmt(c.target) + "  rel.err " + fmt(std::fabs(c.estimate / c.target - 1.0)) +
           " < " + fmt(c.tolerance);
      break;
    case CriterionKind::kAbsolute:
      s += "  target " + fmt(c.target) + "  |diff| <= " + fmt(c.tolerance);
      break;
    case CriterionKind::kBelow:
      s += "  < " + fmt(c.tolerance);
      break;
    case CriterionKind::kAtLeastFraction:
      s += "  >= " + fmt(c.tolerance) + " x " + fmt(c.target);
      break;
    case CriterionKind::kWithinStdErrors:
      s += "  target " + fmt(c.target) + "  within " + fmt(c.tolerance) + " SE";
      break;
    case CriterionKind::kAtLeast:
      s += " of " + fmt(c.target) + "  need >= " + fmt(c.tolerance);
      break;
  }
  if (c.std_error > 0.0) s += "  (SE " + fmt(c.std_error) + ")";
  return s;
}

void absorb(Outcome& o, const CheckRecord& r,
            const std::function<bool(const Criterion&)>& keep = [](const Criterion&) { return true; }) {
  for (const auto& c : r.criteria) {
    if (!keep(c)) continue;
    o.pass = o.pass && c.pass();
    o.lines.push_back("[" + r.theorem_id + "] " + describe(c));
  }
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

// Law of S_n for the simple symmetric walk by repeated convolution; index j + n.
std::vector<double> convolved_law(std::size_t n) {
  std::vector<double> p(2 * n + 1, 0.0);
  p[n] = 1.0;
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<double> q(p.size(), 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i > 0) q[i - 1] += 0.5 * p[i];
      if (i + 1 < q.size()) q[i + 1] += 0.5 * p[i];
    }
    p.swap(q);
  }
  return p;
}

// Direct summation of E_n(a) against the parity-smoothed walk law.
double direct_average(std::size_t n, const std::function<double(std::int64_t)>& a) {
  const auto pn = convolved_law(n), pn1 = convolved_law(n + 1);
  const auto N = static_cast<std::int64_t>(n);
  CompensatedSum s;
  for (std::int64_t j = -N - 1; j <= N + 1; ++j) {
    const double x = (j >= -N && j <= N) ? pn[static_cast<std::size_t>(j + N)] : 0.0;
    s += 0.5 * (x + pn1[static_cast<std::size_t>(j + N + 1)]) * a(j);
  }
  return s.value();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> sorted_rows(const std::string& text) {
  std::vector<std::string> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') rows.push_back(line);
  std::sort(rows.begin(), rows.end());
  return rows;
}

}  // namespace

int main() {
  const verify::Params params;
  const verify::Context ctx{verify::Context{}.master_seed, default_threads()};
  std::vector<Outcome> outcomes;
  VerificationReport report;

  auto timed = [&](Outcome o, const std::function<void(Outcome&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    try {
      body(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.lines.push_back(std::string("error: ") + e.what());
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << o.id << ": " << o.title << "  ("
              << fmt(o.seconds) << " s)\n";
    for (const auto& l : o.lines) std::cout << "        " << l << '\n';
    std::cout.flush();
    outcomes.push_back(std::move(o));
  };
  auto run = [&](const std::string& id) {
    report.records.push_back(verify::run_check(id, params, ctx));
    return report.records.back();
  };

  std::cout << "acceptance: master seed " << ctx.master_seed << ", " << ctx.threads << " thread(s)\n";

  timed({1, "quenched CLT, KS against N(0, 3) for two environment seeds"},
        [&](Outcome& o) { absorb(o, run("thm1")); });

  CheckRecord moments{"thm2"};
  timed({2, "rescaled absolute moments q = 1, 2, 4 and their grid trend"}, [&](Outcome& o) {
    moments = run("thm2");
    absorb(o, moments, [](const Criterion& c) {
      return starts_with(c.name, "abs_moment") || starts_with(c.name, "trend");
    });
  });
  timed({3, "signed odd moments q = 1, 3 vanish"}, [&](Outcome& o) {
    if (moments.criteria.empty()) throw Error("moment check did not run");
    absorb(o, moments, [](const Criterion& c) { return starts_with(c.name, "signed_moment"); });
  });

  timed({4, "collision-time laws of large numbers"}, [&](Outcome& o) { absorb(o, run("lem3")); });
  timed({5, "PVP observable stationarity and Birkhoff average"},
        [&](Outcome& o) { absorb(o, run("corA1")); });
  timed({6, "jump-length expectation series"}, [&](Outcome& o) { absorb(o, run("lem4")); });

  timed({7, "averaging over expanding densities"}, [&](Outcome& o) {
    absorb(o, run("lemA3"));
    const verify::AveragingParams& ap = params.lem_a3;
    double worst = 0.0;
    for (const auto& probe : {probes::constant(ap.constant_value), probes::alternating(),
                              probes::decaying(ap.decaying_limit)})
      for (std::uint64_t n : {1u, 10u, 100u, 1000u}) {
        const double fast = averaging_check(probe, {n}).front().value;
        worst = std::max(worst, std::fabs(fast - direct_average(n, probe.sequence)));
      }
    Criterion c{"direct_summation_agreement_n_le_1e3", CriterionKind::kAbsolute, worst, 0.0, 0.0,
                1e-10};
    o.pass = o.pass && c.pass();
    o.lines.push_back("[oracle] " + describe(c));
  });

  timed({8, "lazy removal: scaling identities, path identity, law invariance"}, [&](Outcome& o) {
    absorb(o, run("remark2"));
    absorb(o, run("remark1"));
  });
  timed({9, "annealed second moment lower bound"}, [&](Outcome& o) { absorb(o, run("cor2")); });

  timed({10, "determinism and parallel-serial equivalence"}, [&](Outcome& o) {
    const fs::path root = fs::temp_directory_path() / "levyrw_acceptance";
    fs::remove_all(root);
    RunConfig cfg = parse_config(R"({
      "environment": {"distribution": "pareto", "params": {"alpha": 1.5, "xmin": 1.0}},
      "walkers": 2000, "t_grid": {"t_max": 1000, "levels": 4}, "trajectory_dump": true
    })");
    cfg.master_seed = ctx.master_seed;
    for (auto mode : {Mode::kQuenched, Mode::kAnnealed}) {
      cfg.mode = mode;
      const std::string tag = mode == Mode::kQuenched ? "quenched" : "annealed";
      const auto a = slurp(app::run_simulate(cfg, {1, root / (tag + "_serial_a")}));
      const auto b = slurp(app::run_simulate(cfg, {1, root / (tag + "_serial_b")}));
      const auto c = slurp(app::run_simulate(cfg, {4, root / (tag + "_parallel")}));
      const bool identical = a == b;
      const bool same_rows = sorted_rows(a) == sorted_rows(c);
      o.pass = o.pass && identical && same_rows && !a.empty();
      o.lines.push_back(std::string(identical ? "ok   " : "FAIL ") + tag +
                        " repeated serial runs byte-identical (" + std::to_string(a.size()) + " bytes)");
      o.lines.push_back(std::string(same_rows ? "ok   " : "FAIL ") + tag +
                        " 4-thread rows equal serial rows after sort (" +
                        std::to_string(sorted_rows(a).size()) + " rows)");
    }
    std::ostringstream sink;
    const auto r1 = app::run_verify(cfg, {"remark1"}, {1, root / "verify_a"}, sink);
    const auto r2 = app::run_verify(cfg, {"remark1"}, {4, root / "verify_b"}, sink);
    const bool same_report =
        to_json(r1.records[0])["criteria"] == to_json(r2.records[0])["criteria"];
    o.pass = o.pass && same_report;
    o.lines.push_back(std::string(same_report ? "ok   " : "FAIL ") +
                      "verification criteria identical at 1 and 4 threads");
    fs::remove_all(root);
  });

  int failed = 0;
  for (const auto& o : outcomes) failed += o.pass ? 0 : 1;
  std::cout << "\nacceptance summary: " << outcomes.size() - failed << " of " << outcomes.size()
            << " criteria pass\n";
  report.metadata = {{"master_seed", ctx.master_seed}, {"threads", ctx.threads}};
  std::ofstream("acceptance_report.json") << report.to_json().dump(2) << '\n';
  return failed == 0 ? 0 : 1;
}
