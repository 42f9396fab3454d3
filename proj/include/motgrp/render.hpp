#ifndef MOTGRP_RENDER_HPP_
#define MOTGRP_RENDER_HPP_

// SVG 1.1 pictures of flows, worldlines and strand sets.
//
// Time runs up the page. Every coordinate is computed exactly and printed
// with a fixed number of decimals (round half to even); the circle flare,
// which needs cos and sin, converts the double results exactly before
// printing. Equal inputs give byte-identical documents.

#include <optional>
#include <string>
#include <string_view>

#include "motgrp/pl_flow.hpp"
#include "motgrp/point_motions.hpp"
#include "motgrp/subset.hpp"
#include "motgrp/worldline.hpp"

namespace motgrp {

enum class RenderKind { Movie, Flare, Worldline, CircleFlare, BraidDiagram };

std::string_view to_string(RenderKind k);
// "movie", "flare", "worldline", "circle-flare", "braid"; Error(UnsupportedKind).
RenderKind parse_render_kind(std::string_view text);

struct RenderSpec {
  RenderKind kind = RenderKind::Flare;
  int frames = 5;      // panels of a movie, at least 2
  int grid = 8;        // grid lines per unit, at least 1
  int width = 400;     // canvas size in pixels
  int height = 400;
  int precision = 6;   // decimals in coordinates
  std::string stroke = "#1f1f1f";
  std::string fill = "#bdbdbd";

  // Throws Error(InvalidValue).
  void validate() const;
};

// Panels at t = i / (frames - 1): images of the grid points (and of n, when
// given) for a 1-D flow, point positions for a strand set.
std::string render_movie(const PLFlow& f, const std::optional<CompactSubsetI>& n, const RenderSpec& spec);
std::string render_movie(const StrandSet& s, const RenderSpec& spec);

// Image of the square grid under (x, t) -> (f_t(x), t), with the worldline
// of n shaded when given. Throws Error(AmbientMismatch) off the interval.
std::string render_flare(const PLFlow& f, const std::optional<CompactSubsetI>& n, const RenderSpec& spec);

// Flare of a circle flow drawn radially, t = 0 outermost, radius scaled by
// 1 - t/2. Throws Error(AmbientMismatch) for other ambients.
std::string render_circle_flare(const PLFlow& f, const RenderSpec& spec);

// Bands shaded, arcs stroked, in M x [0,1].
std::string render_worldline(const WorldlineI& w, const RenderSpec& spec);

// Strands over time against the (sheared) x used for braid extraction; the
// strand passing behind is broken at each crossing.
std::string render_braid_diagram(const StrandSet& s, const RenderSpec& spec);

// Dispatch on spec.kind; Error(UnsupportedKind) for kinds that do not apply.
std::string render(const PLFlow& f, const std::optional<CompactSubsetI>& n, const RenderSpec& spec);
std::string render(const StrandSet& s, const RenderSpec& spec);

}  // namespace motgrp

#endif  // MOTGRP_RENDER_HPP_
