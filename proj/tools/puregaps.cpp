// puregaps: gap and pure-gap sets on y^m = x^q + x.
//
// Exit codes: 0 success, 1 usage or parameter error, 2 verification mismatch.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "puregaps/cli.hpp"

namespace pc = puregaps::cli;
using puregaps::Int;

namespace {

struct Shared {
  Int q = 0;
  Int m = 0;
  bool unchecked = false;
  std::optional<Int> work_limit;
  std::string format = "table";
  std::string out;

  pc::CommonOptions common() const { return {unchecked, work_limit}; }
};

void add_curve_flags(CLI::App* sub, Shared& s) {
  sub->add_option("--q", s.q, "field parameter q (prime power)")->required();
  sub->add_option("--m", s.m, "exponent m, a divisor of q+1 with m >= 2")->required();
  sub->add_flag("--unchecked", s.unchecked, "skip the prime-power test on q");
}

void add_output_flags(CLI::App* sub, Shared& s) {
  sub->add_option("--format", s.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  sub->add_option("--out", s.out, "write output to PATH instead of stdout");
}

int emit(const pc::RunReport& report, const Shared& s) {
  const std::string text = pc::render(report, pc::parse_format(s.format));
  if (s.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(s.out, std::ios::binary);
    if (!(f << text)) {
      std::cerr << "error: cannot write " << s.out << "\n";
      return 1;
    }
  }
  std::cerr << report.command << ": " << report.elapsed_ms << " ms";
  if (!report.mismatches.empty()) std::cerr << ", " << report.mismatches.size() << " mismatches";
  std::cerr << "\n";
  for (const auto& m : report.mismatches)
    std::cerr << "mismatch: " << m.description << ": expected " << m.expected << ", got " << m.actual
              << "\n";
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weierstrass gaps and pure gaps on quotients of the Hermitian curve y^m = x^q + x"};
  app.require_subcommand(1);
  app.fallthrough();

  Shared s;
  app.add_option("--work-limit", s.work_limit, "cap on Riemann-Roch evaluations for brute force")
      ->envname("PUREGAPS_WORK_LIMIT");

  auto* info = app.add_subcommand("info", "curve parameters (N, genus)");
  add_curve_flags(info, s);
  add_output_flags(info, s);

  auto* gaps = app.add_subcommand("gaps", "Weierstrass gaps at a single place");
  add_curve_flags(gaps, s);
  add_output_flags(gaps, s);
  std::string place = "finite";
  bool check = false;
  gaps->add_option("--place", place, "finite or infinity")->check(CLI::IsMember({"finite", "infinity"}));
  gaps->add_flag("--check", check, "cross-check against the Riemann-Roch oracle");

  auto* pure = app.add_subcommand("puregaps", "pure gaps at n places");
  add_curve_flags(pure, s);
  add_output_flags(pure, s);
  Int n = 0;
  bool infinity = false;
  std::vector<std::string> methods;
  pure->add_option("--n", n, "number of places (>= 2)")->required();
  pure->add_flag("--infinity", infinity, "use P_inf as the last place");
  pure->add_option("--method", methods, "formula, enumerate or oracle (repeatable)")
      ->check(CLI::IsMember({"formula", "enumerate", "oracle"}));

  auto* verify = app.add_subcommand("verify", "sweep every invariant over small curves");
  add_output_flags(verify, s);
  Int q_max = 8, n_max = 3;
  verify->add_option("--q-max", q_max, "largest q in the sweep");
  verify->add_option("--n-max", n_max, "largest n in the sweep");

  auto* plot = app.add_subcommand("plot", "SVG + CSV of the (t1, t2) box at (P1, P2)");
  add_curve_flags(plot, s);
  std::vector<Int> box{20, 20};
  std::string svg_out;
  plot->add_option("--box", box, "T1 T2 upper corners of the box")->expected(2);
  plot->add_option("--out", svg_out, "SVG path; the CSV is written next to it")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*info) return emit(pc::cmd_info(s.q, s.m, s.common()), s);
    if (*gaps) return emit(pc::cmd_gaps(s.q, s.m, place == "infinity", check, s.common()), s);
    if (*pure) {
      pc::PureGapsRequest req{s.q, s.m, n, infinity, {}, s.common()};
      if (methods.empty()) req.methods = {pc::Method::Formula, pc::Method::Enumerate};
      for (const auto& name : methods) req.methods.insert(pc::parse_method(name));
      return emit(pc::cmd_puregaps(req), s);
    }
    if (*verify) return emit(pc::cmd_verify(q_max, n_max, s.common()), s);
    if (*plot) {
      const auto report = pc::cmd_plot(s.q, s.m, box[0], box[1], svg_out, s.common());
      Shared quiet = s;
      quiet.format = "table";
      return emit(report, quiet);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
