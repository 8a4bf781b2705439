#pragma once

// Command layer behind the `puregaps` executable. Each command returns a
// RunReport; rendering to table/JSON/CSV/SVG is separate so tests can inspect
// the structured result directly.

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "puregaps/charx.hpp"
#include "puregaps/core_types.hpp"

namespace puregaps::cli {

using Json = nlohmann::ordered_json;

struct Mismatch {
  std::string description;
  std::string expected;
  std::string actual;
};

struct RunReport {
  std::string command;
  std::optional<CurveParams> curve;
  Json parameters = Json::object();
  Json results = Json::object();
  std::vector<Mismatch> mismatches;
  long long elapsed_ms = 0;

  int exit_code() const noexcept { return mismatches.empty() ? 0 : 2; }
  void expect_eq(const std::string& what, const Json& expected, const Json& actual);
};

enum class Method { Formula, Enumerate, Oracle };
std::string to_string(Method m);
Method parse_method(const std::string& s);

enum class Format { Table, Json, Csv };
Format parse_format(const std::string& s);

struct CommonOptions {
  bool unchecked = false;
  std::optional<Int> work_limit;
};

RunReport cmd_info(Int q, Int m, const CommonOptions& opts = {});

RunReport cmd_gaps(Int q, Int m, bool infinity, bool check, const CommonOptions& opts = {});

struct PureGapsRequest {
  Int q = 0;
  Int m = 0;
  Int n = 0;
  bool include_infinity = false;
  std::set<Method> methods{Method::Formula, Method::Enumerate};
  CommonOptions common;
};
RunReport cmd_puregaps(const PureGapsRequest& req);

RunReport cmd_verify(Int q_max, Int n_max, const CommonOptions& opts = {});

/// Largest q_max accepted by cmd_verify.
inline constexpr Int kVerifyQLimit = 32;

enum class PointClass { PureGap, Semigroup, Gap };
std::string to_string(PointClass c);

struct PlotGrid {
  CurveParams curve;
  Int t1_max = 0;
  Int t2_max = 0;
  /// Row-major: cells[t2 * (t1_max + 1) + t1].
  std::vector<PointClass> cells;

  PointClass at(Int t1, Int t2) const;
};

PlotGrid classify_box(const CurveParams& curve, Int t1_max, Int t2_max);

std::string render_plot_svg(const PlotGrid& grid);
std::string render_plot_csv(const PlotGrid& grid);

/// Writes `svg_path` and its sidecar CSV (same stem, .csv extension).
RunReport cmd_plot(Int q, Int m, Int t1_max, Int t2_max, const std::filesystem::path& svg_path,
                   const CommonOptions& opts = {});

/// Canonical, deterministic payload (no timing information).
Json payload(const RunReport& report);

std::string render(const RunReport& report, Format format);

Json curve_json(const CurveParams& c);

}  // namespace puregaps::cli
