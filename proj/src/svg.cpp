#include "cga_mapf/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cga {

namespace {

const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

void write_file(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << text;
}

std::string line_chart(const std::string& title, const std::string& xlabel, const std::string& ylabel,
                       const std::vector<Series>& series) {
  constexpr double W = 480, H = 320, L = 60, R = 110, T = 30, B = 45;
  double xmin = 1e300, xmax = -1e300, ymin = 0, ymax = -1e300;
  for (const auto& s : series)
    for (auto [x, y] : s.points) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymax = std::max(ymax, y);
    }
  if (xmin > xmax) xmin = 0, xmax = 1;
  if (xmax == xmin) xmin -= 1, xmax += 1;
  if (ymax <= ymin) ymax = ymin + 1;
  ymax *= 1.05;
  auto px = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
  auto py = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - T - B); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << W / 2 << "\" y=\"18\" text-anchor=\"middle\" font-size=\"13\">" << title << "</text>\n";
  svg << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
      << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double y = ymin + (ymax - ymin) * i / 4, x = xmin + (xmax - xmin) * i / 4;
    svg << "<text x=\"" << L - 5 << "\" y=\"" << fmt(py(y) + 4) << "\" text-anchor=\"end\">" << fmt(y) << "</text>\n";
    svg << "<text x=\"" << fmt(px(x)) << "\" y=\"" << H - B + 15 << "\" text-anchor=\"middle\">" << fmt(x)
        << "</text>\n";
  }
  svg << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 8 << "\" text-anchor=\"middle\">" << xlabel << "</text>\n";
  svg << "<text x=\"14\" y=\"" << (T + H - B) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
      << (T + H - B) / 2 << ")\">" << ylabel << "</text>\n";
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % std::size(kPalette)];
    svg << "<polyline class=\"series\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (auto [x, y] : series[s].points) svg << fmt(px(x)) << "," << fmt(py(y)) << " ";
    svg << "\"/>\n";
    for (auto [x, y] : series[s].points)
      svg << "<circle cx=\"" << fmt(px(x)) << "\" cy=\"" << fmt(py(y)) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    const double ly = T + 14.0 * static_cast<double>(s);
    svg << "<g class=\"legend\"><rect x=\"" << W - R + 10 << "\" y=\"" << ly << "\" width=\"10\" height=\"10\" fill=\""
        << color << "\"/><text x=\"" << W - R + 24 << "\" y=\"" << ly + 9 << "\">" << series[s].label
        << "</text></g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace

std::vector<std::filesystem::path> write_plots(const std::vector<RunRecord>& records,
                                               const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  const auto rows = aggregate(records);
  std::vector<std::string> maps, algos;
  for (const auto& r : rows) {
    if (std::find(maps.begin(), maps.end(), r.map) == maps.end()) maps.push_back(r.map);
    if (std::find(algos.begin(), algos.end(), r.algo) == algos.end()) algos.push_back(r.algo);
  }
  std::vector<std::filesystem::path> written;
  for (const auto& m : maps) {
    std::vector<Series> sr, rt, ms;
    for (const auto& a : algos) {
      Series s{a, {}}, t{a, {}}, k{a, {}};
      std::vector<int> makespans;
      for (const auto& r : rows) {
        if (r.map != m || r.algo != a) continue;
        s.points.emplace_back(r.n, r.success_rate);
        if (r.mean_runtime_s) t.points.emplace_back(r.n, *r.mean_runtime_s);
        makespans.insert(makespans.end(), r.makespans.begin(), r.makespans.end());
      }
      std::sort(makespans.begin(), makespans.end());
      for (std::size_t i = 0; i < makespans.size(); ++i)
        k.points.emplace_back(static_cast<double>(i + 1), makespans[i]);
      if (s.points.empty()) continue;
      sr.push_back(std::move(s));
      rt.push_back(std::move(t));
      ms.push_back(std::move(k));
    }
    const std::vector<std::tuple<std::string, std::string, std::string, std::string, const std::vector<Series>*>>
        charts = {{"sr", "Success rate", "agents", "success rate", &sr},
                  {"runtime", "Runtime", "agents", "mean runtime (s)", &rt},
                  {"makespan", "Makespan", "solved instances (sorted)", "makespan", &ms}};
    for (const auto& [key, title, xl, yl, series] : charts) {
      auto file = out_dir / (m + "_" + key + ".svg");
      write_file(file, line_chart(title + " - " + m, xl, yl, *series));
      written.push_back(file);
    }
  }
  return written;
}

std::string render_frame(const GridMap& map, const SeparatingVertexSet& svs, const Solution& solution,
                         std::size_t time) {
  constexpr int kCell = 16;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << map.width() * kCell << "\" height=\""
      << map.height() * kCell + 18 << "\" font-family=\"sans-serif\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int r = 0; r < map.height(); ++r)
    for (int c = 0; c < map.width(); ++c) {
      const Vertex v = map.vertex_at(r, c);
      const char* fill = v < 0 ? "#222222" : (svs.is_sv(v) ? "#f4c7c3" : "#eeeeee");
      svg << "<rect x=\"" << c * kCell << "\" y=\"" << r * kCell << "\" width=\"" << kCell << "\" height=\""
          << kCell << "\" fill=\"" << fill << "\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>\n";
    }
  for (int i = 0; i < solution.num_agents(); ++i) {
    const Path& p = solution.paths[static_cast<std::size_t>(i)];
    const Vertex g = p.back();
    svg << "<rect class=\"goal\" x=\"" << map.col_of(g) * kCell + 3 << "\" y=\"" << map.row_of(g) * kCell + 3
        << "\" width=\"" << kCell - 6 << "\" height=\"" << kCell - 6 << "\" fill=\"none\" stroke=\""
        << kPalette[i % std::size(kPalette)] << "\" stroke-width=\"1.5\"/>\n";
  }
  for (int i = 0; i < solution.num_agents(); ++i) {
    const Path& p = solution.paths[static_cast<std::size_t>(i)];
    const Vertex v = p[std::min(time, p.size() - 1)];
    const double cx = map.col_of(v) * kCell + kCell / 2.0, cy = map.row_of(v) * kCell + kCell / 2.0;
    svg << "<g class=\"agent\"><circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << kCell / 2 - 1
        << "\" fill=\"" << kPalette[i % std::size(kPalette)] << "\"/><text x=\"" << cx << "\" y=\"" << cy + 3.5
        << "\" font-size=\"9\" fill=\"white\" text-anchor=\"middle\">" << i << "</text></g>\n";
  }
  svg << "<text x=\"4\" y=\"" << map.height() * kCell + 13 << "\" font-size=\"11\">t = " << time << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

std::vector<std::filesystem::path> render_frames(const GridMap& map, const SeparatingVertexSet& svs,
                                                 const Solution& solution,
                                                 const std::filesystem::path& out_dir) {
  if (svs.size() != map.num_passable())
    throw std::invalid_argument("SVS does not match the map");
  for (const auto& p : solution.paths) {
    if (p.empty()) throw std::invalid_argument("solution has an empty path");
    for (Vertex v : p)
      if (v < 0 || v >= map.num_passable())
        throw std::invalid_argument("solution vertex " + std::to_string(v) + " is not on the map");
  }
  std::filesystem::create_directories(out_dir);
  const std::size_t frames = static_cast<std::size_t>(makespan(solution)) + 1;
  std::vector<std::filesystem::path> written;
  for (std::size_t t = 0; t < frames; ++t) {
    char name[32];
    std::snprintf(name, sizeof name, "frame_%04zu.svg", t);
    auto file = out_dir / name;
    write_file(file, render_frame(map, svs, solution, t));
    written.push_back(file);
  }
  return written;
}

}  // namespace cga
