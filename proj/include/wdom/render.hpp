#pragma once

#include <string>

#include "wdom/word.hpp"

namespace wdom {

struct RenderOptions {
  enum class Format { ascii, svg };

  Format format = Format::svg;
  int track_gap = 30;  // vertical units between tracks
  int event_gap = 30;  // horizontal units between crossing events
  bool show_chamber_labels = true;
};

// Fixed-width text: one character row per track, crossings drawn as an X
// between adjacent rows, line labels on both margins. Byte-deterministic.
std::string render_ascii(const Word& w, const TrackOrder& left);

// One polyline per pseudoline (horizontal runs, diagonal swaps), boundary
// labels, and one text label per chamber at the centroid of its column
// span. The empty chamber label is never drawn.
std::string render_svg(const Word& w, const TrackOrder& left, const RenderOptions& options = {});

}  // namespace wdom
