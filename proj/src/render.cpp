#include "wdom/render.hpp"

#include <algorithm>
#include <cstdio>

#include "wdom/chambers.hpp"
#include "wdom/domain.hpp"

namespace wdom {

namespace {

std::string fmt_num(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", value);
  std::string out = buffer;
  while (!out.empty() && out.back() == '0') out.pop_back();
  if (!out.empty() && out.back() == '.') out.pop_back();
  return out;
}

std::string set_label(const std::vector<int>& members) {
  return format_order(members);  // "24" style for single digits, CSV otherwise
}

}  // namespace

std::string render_ascii(const Word& w, const TrackOrder& left) {
  const std::vector<TrackOrder> columns = sweep(w, left);
  const int n = w.n;
  const int events = static_cast<int>(w.letters.size());
  const int body_width = events == 0 ? 4 : 2 + 5 * events;
  const int rows = 2 * n - 1;

  std::vector<std::string> grid(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) {
    grid[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(body_width),
                                             r % 2 == 0 ? '-' : ' ');
  }
  for (int k = 0; k < events; ++k) {
    const int level = w.letters[static_cast<std::size_t>(k)];
    const std::size_t c = static_cast<std::size_t>(2 + 5 * k);
    std::string& upper = grid[static_cast<std::size_t>(2 * (level - 1))];
    std::string& middle = grid[static_cast<std::size_t>(2 * level - 1)];
    std::string& lower = grid[static_cast<std::size_t>(2 * level)];
    upper[c] = '\\';
    upper[c + 1] = ' ';
    upper[c + 2] = '/';
    middle[c + 1] = 'X';
    lower[c] = '/';
    lower[c + 1] = ' ';
    lower[c + 2] = '\\';
  }

  std::size_t label_width = 0;
  for (int label : left) {
    label_width = std::max(label_width, std::to_string(label).size());
  }
  const TrackOrder& right = columns.back();

  std::string out;
  for (int r = 0; r < rows; ++r) {
    std::string line;
    if (r % 2 == 0) {
      const int track = r / 2;
      std::string left_label = std::to_string(left[static_cast<std::size_t>(track)]);
      left_label.insert(0, label_width - left_label.size(), ' ');
      line = left_label + " " + grid[static_cast<std::size_t>(r)] + " " +
             std::to_string(right[static_cast<std::size_t>(track)]);
    } else {
      line = std::string(label_width + 1, ' ') + grid[static_cast<std::size_t>(r)];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

std::string render_svg(const Word& w, const TrackOrder& left, const RenderOptions& options) {
  if (options.track_gap <= 0 || options.event_gap <= 0) {
    throw InputError("render gaps must be positive");
  }
  const std::vector<TrackOrder> columns = sweep(w, left);
  const int n = w.n;
  const int events = static_cast<int>(w.letters.size());
  const double tg = options.track_gap;
  const double eg = options.event_gap;
  const double x0 = 30.0;
  const double x_end = x0 + (events + 1) * eg;
  const double y0 = 20.0;
  const double diag = eg / 3.0;
  const double width = x_end + 30.0;
  const double height = y0 + (n - 1) * tg + tg / 2.0 + 20.0;
  const auto track_y = [&](int track) { return y0 + (track - 1) * tg; };
  const auto event_x = [&](int event) { return x0 + event * eg; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt_num(width) +
         "\" height=\"" + fmt_num(height) + "\" viewBox=\"0 0 " + fmt_num(width) + " " +
         fmt_num(height) + "\">\n";

  // Lines drawn top to bottom by their left-boundary track.
  for (int label : left) {
    std::vector<std::pair<double, double>> points;
    int track = 0;
    for (int p = 0; p < n; ++p) {
      if (left[static_cast<std::size_t>(p)] == label) track = p + 1;
    }
    points.emplace_back(x0, track_y(track));
    for (int k = 1; k <= events; ++k) {
      const int level = w.letters[static_cast<std::size_t>(k - 1)];
      const TrackOrder& before = columns[static_cast<std::size_t>(k - 1)];
      int new_track = track;
      if (before[static_cast<std::size_t>(level - 1)] == label) {
        new_track = level + 1;
      } else if (before[static_cast<std::size_t>(level)] == label) {
        new_track = level;
      }
      if (new_track != track) {
        points.emplace_back(event_x(k) - diag, track_y(track));
        points.emplace_back(event_x(k) + diag, track_y(new_track));
        track = new_track;
      }
    }
    points.emplace_back(x_end, track_y(track));

    out += "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (i > 0) out += ' ';
      out += fmt_num(points[i].first) + "," + fmt_num(points[i].second);
    }
    out += "\"/>\n";
  }

  if (n > 1) {
    for (int track = 1; track <= n; ++track) {
      out += "  <text class=\"wire-label\" x=\"" + fmt_num(x0 - 12.0) + "\" y=\"" +
             fmt_num(track_y(track) + 4.0) + "\" font-size=\"12\" text-anchor=\"middle\">" +
             std::to_string(left[static_cast<std::size_t>(track - 1)]) + "</text>\n";
      out += "  <text class=\"wire-label\" x=\"" + fmt_num(x_end + 12.0) + "\" y=\"" +
             fmt_num(track_y(track) + 4.0) + "\" font-size=\"12\" text-anchor=\"middle\">" +
             std::to_string(columns.back()[static_cast<std::size_t>(track - 1)]) + "</text>\n";
    }

    if (options.show_chamber_labels) {
      // Depth-k chambers are the maximal column runs between level-k events.
      for (int depth = 1; depth <= n; ++depth) {
        std::vector<int> breaks;
        for (int k = 1; k <= events; ++k) {
          if (w.letters[static_cast<std::size_t>(k - 1)] == depth) breaks.push_back(k);
        }
        breaks.push_back(events + 1);
        int start_column = 0;
        for (int break_event : breaks) {
          const int end_column = break_event - 1;
          std::vector<int> prefix(
              columns[static_cast<std::size_t>(start_column)].begin(),
              columns[static_cast<std::size_t>(start_column)].begin() + depth);
          std::sort(prefix.begin(), prefix.end());
          const double left_edge = start_column == 0 ? x0 : event_x(start_column);
          const double right_edge = end_column == events ? x_end : event_x(end_column + 1);
          const double label_x = (left_edge + right_edge) / 2.0;
          const double label_y = track_y(depth) + tg / 2.0 + 4.0;
          out += "  <text class=\"chamber\" x=\"" + fmt_num(label_x) + "\" y=\"" +
                 fmt_num(label_y) + "\" font-size=\"12\" text-anchor=\"middle\">" +
                 set_label(prefix) + "</text>\n";
          start_column = break_event;
        }
      }
    }
  }

  out += "</svg>\n";
  return out;
}

}  // namespace wdom
