#pragma once

#include <optional>
#include <string>

#include "lislab/chain_oracle.hpp"
#include "lislab/point.hpp"

namespace lislab::cli {

struct SvgOptions {
    int width = 960;
    int height = 720;
    int margin = 40;
    bool weight_labels = true;
    std::string title;
};

/// Renders a labeled point set (usually parsed from an embedding dump).
/// Every point becomes one <circle class="pt fam-X ..."> carrying data-label
/// and data-w; an optional chain is drawn as <polyline id="chain"> whose
/// data-start/data-end/data-weight/data-labels describe it. Pixel positions
/// are computed in integers, so output is byte-stable.
std::string render_svg(const PointSet& points, const std::optional<Chain>& chain, const SvgOptions& options);

}  // namespace lislab::cli
