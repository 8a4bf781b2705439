#include <cstdio>
#include <sstream>
#include <string>

#include "puregaps/cli.hpp"

namespace puregaps::cli {
namespace {

constexpr int kCell = 20;
constexpr int kLeft = 50;
constexpr int kTop = 20;
constexpr int kBottom = 40;
constexpr int kLegendWidth = 150;
constexpr const char* kRed = "#d62728";
constexpr const char* kBlue = "#1f77b4";
constexpr const char* kGrey = "#7f7f7f";

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void table_object(std::ostringstream& os, const Json& obj, const std::string& indent) {
  for (const auto& [key, value] : obj.items()) {
    if (value.is_object()) {
      os << indent << key << ":\n";
      table_object(os, value, indent + "  ");
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      os << indent << key << ":\n";
      for (const auto& item : value) {
        os << indent << "  -";
        bool first = true;
        for (const auto& [k, v] : item.items()) {
          os << (first ? " " : ", ") << k << "=" << (v.is_structured() ? v.dump() : scalar(v));
          first = false;
        }
        os << "\n";
      }
    } else {
      os << indent << key << ": " << scalar(value) << "\n";
    }
  }
}

std::string render_table(const RunReport& r) {
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  if (r.curve)
    os << "curve: y^" << r.curve->m << " = x^" << r.curve->q << " + x  (N=" << r.curve->N
       << ", genus=" << r.curve->genus << ")\n";

  if (r.command == "puregaps") {
    const Json& res = r.results;
    os << "n: " << res["n"] << (res["includes_infinity"].get<bool>() ? " (last place P_inf)" : "")
       << "\nmethod: " << scalar(res["method"]) << "\ncount: " << res["count"] << "\n";
    if (!res["breakdown"].empty()) {
      os << "\n" << "     A      weight           S         product\n";
      for (const auto& t : res["breakdown"]) {
        char line[96];
        std::snprintf(line, sizeof line, "%6lld %11lld %11lld %15lld\n", t["A"].get<long long>(),
                      t["weight"].get<long long>(), t["s"].get<long long>(),
                      t["product"].get<long long>());
        os << line;
      }
    }
    if (!res["tuples"].empty()) {
      os << "\ntuples:\n";
      for (const auto& t : res["tuples"]) {
        os << "  (";
        for (std::size_t i = 0; i < t.size(); ++i) os << (i ? ", " : "") << t[i];
        os << ")\n";
      }
    }
  } else {
    table_object(os, r.results, "");
  }

  if (!r.mismatches.empty()) {
    os << "\nMISMATCHES (" << r.mismatches.size() << "):\n";
    for (const auto& m : r.mismatches)
      os << "  " << m.description << ": expected " << m.expected << ", got " << m.actual << "\n";
  }
  return os.str();
}

std::string render_csv(const RunReport& r) {
  std::ostringstream os;
  const Json& res = r.results;
  if (r.command == "puregaps") {
    const Int n = res["n"].get<Int>();
    for (Int i = 1; i <= n; ++i) os << (i > 1 ? "," : "") << "t" << i;
    os << "\n";
    for (const auto& t : res["tuples"]) {
      for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
      os << "\n";
    }
  } else if (r.command == "gaps") {
    os << "gap\n";
    for (const auto& g : res["gaps"]) os << g << "\n";
  } else if (r.command == "verify") {
    os << "q,m,n,count,oracle\n";
    for (const auto& c : res["curves"])
      for (const auto& row : c["counts"])
        os << c["q"] << "," << c["m"] << "," << row["n"] << "," << row["count"] << ","
           << row["oracle"] << "\n";
  } else {
    std::string header, values;
    for (const auto& [k, v] : res.items()) {
      if (v.is_structured()) continue;
      header += (header.empty() ? "" : ",") + k;
      values += (values.empty() ? "" : ",") + scalar(v);
    }
    os << header << "\n" << values << "\n";
  }
  return os.str();
}

}  // namespace

Json payload(const RunReport& r) {
  if (r.command == "puregaps") return r.results;
  Json mism = Json::array();
  for (const auto& m : r.mismatches)
    mism.push_back(Json{{"description", m.description}, {"expected", m.expected}, {"actual", m.actual}});
  return Json{{"command", r.command},
              {"curve", r.curve ? curve_json(*r.curve) : Json(nullptr)},
              {"parameters", r.parameters},
              {"results", r.results},
              {"mismatches", mism}};
}

std::string render(const RunReport& report, Format format) {
  switch (format) {
    case Format::Table: return render_table(report);
    case Format::Json: return payload(report).dump(2) + "\n";
    case Format::Csv: return render_csv(report);
  }
  return {};
}

std::string render_plot_csv(const PlotGrid& g) {
  std::ostringstream os;
  os << "t1,t2,class\n";
  for (Int t1 = 0; t1 <= g.t1_max; ++t1)
    for (Int t2 = 0; t2 <= g.t2_max; ++t2) os << t1 << "," << t2 << "," << to_string(g.at(t1, t2)) << "\n";
  return os.str();
}

std::string render_plot_svg(const PlotGrid& g) {
  const Int cols = g.t1_max + 1;
  const Int rows = g.t2_max + 1;
  const Int plot_w = cols * kCell;
  const Int plot_h = rows * kCell;
  const Int width = kLeft + plot_w + kLegendWidth;
  const Int height = kTop + plot_h + kBottom;
  const Int axis_y = kTop + plot_h;  // baseline of row t2 = 0

  auto cx = [&](Int t1) { return kLeft + t1 * kCell + kCell / 2; };
  auto cy = [&](Int t2) { return kTop + (g.t2_max - t2) * kCell + kCell / 2; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\" font-family=\"sans-serif\" font-size=\"11\">\n"
     << "<title>Pure gaps and semigroup at (P1, P2) on y^" << g.curve.m << " = x^" << g.curve.q
     << " + x</title>\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  // Grid
  os << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (Int i = 0; i <= cols; ++i)
    os << "<line x1=\"" << kLeft + i * kCell << "\" y1=\"" << kTop << "\" x2=\"" << kLeft + i * kCell
       << "\" y2=\"" << axis_y << "\"/>\n";
  for (Int j = 0; j <= rows; ++j)
    os << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + j * kCell << "\" x2=\"" << kLeft + plot_w
       << "\" y2=\"" << kTop + j * kCell << "\"/>\n";
  os << "</g>\n";

  // Axes, ticks every 5
  os << "<g stroke=\"black\" stroke-width=\"1\">\n"
     << "<line x1=\"" << kLeft << "\" y1=\"" << axis_y << "\" x2=\"" << kLeft + plot_w << "\" y2=\""
     << axis_y << "\"/>\n"
     << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << axis_y
     << "\"/>\n</g>\n<g text-anchor=\"middle\">\n";
  for (Int t1 = 0; t1 <= g.t1_max; t1 += 5)
    os << "<text x=\"" << cx(t1) << "\" y=\"" << axis_y + 14 << "\">" << t1 << "</text>\n";
  for (Int t2 = 0; t2 <= g.t2_max; t2 += 5)
    os << "<text x=\"" << kLeft - 12 << "\" y=\"" << cy(t2) + 4 << "\">" << t2 << "</text>\n";
  os << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << axis_y + 32 << "\">t₁</text>\n"
     << "<text x=\"" << 14 << "\" y=\"" << kTop + plot_h / 2 << "\">t₂</text>\n</g>\n";

  // Marks
  os << "<g>\n";
  for (Int t2 = 0; t2 <= g.t2_max; ++t2) {
    for (Int t1 = 0; t1 <= g.t1_max; ++t1) {
      const PointClass c = g.at(t1, t2);
      os << "<circle class=\"" << to_string(c) << "\" cx=\"" << cx(t1) << "\" cy=\"" << cy(t2)
         << "\" r=\"6\" ";
      switch (c) {
        case PointClass::PureGap: os << "fill=\"" << kRed << "\""; break;
        case PointClass::Semigroup: os << "fill=\"" << kBlue << "\""; break;
        case PointClass::Gap: os << "fill=\"none\" stroke=\"" << kGrey << "\""; break;
      }
      os << "/>\n";
    }
  }
  os << "</g>\n";

  // Legend
  const Int lx = kLeft + plot_w + 20;
  struct Entry {
    const char* label;
    const char* style;
  };
  const Entry entries[] = {
      {"pure gap", "fill=\"#d62728\""},
      {"semigroup", "fill=\"#1f77b4\""},
      {"other gap", "fill=\"none\" stroke=\"#7f7f7f\""},
  };
  os << "<g class=\"legend\">\n";
  for (int i = 0; i < 3; ++i) {
    const Int ly = kTop + 10 + i * kCell;
    os << "<circle cx=\"" << lx << "\" cy=\"" << ly << "\" r=\"6\" " << entries[i].style << "/>\n"
       << "<text x=\"" << lx + 12 << "\" y=\"" << ly + 4 << "\">" << entries[i].label << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace puregaps::cli
