#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apollo/depth.hpp"
#include "apollo/image_io.hpp"
#include "apollo/rational.hpp"

namespace apollo {

enum class ChartMode { Depth, Size, Barycentric, Squared };
enum class Transfer { Gray30, Gray30Wrap, ClampLinear, Log, Sin, CyclicPalette };

ChartMode parse_chart_mode(const std::string& name);
Transfer parse_transfer(const std::string& name);
std::string to_string(ChartMode mode);
std::string to_string(Transfer t);

/// Rectangle in moduli coordinates; row 0 of the image is y = y0.
struct Window {
    double x0 = 0.0, y0 = 0.0, x1 = 1.0, y1 = 1.0;
    friend bool operator==(const Window&, const Window&) = default;
};

struct ChartSpec {
    int width = 1000;
    int height = 1000;
    Window window;
    ChartMode mode = ChartMode::Depth;
    int cap = kDefaultCap;
    Transfer transfer = Transfer::Gray30;
    bool strict_boundary = false;
    /// Depth mode only: run the integer-seed program (n, m, size) over the
    /// lower triangle and mirror it, as the reference listing does.
    bool bit_exact = false;
    /// Full-scale level for clamp-linear and log; 0 picks cap (depth) or 10
    /// (size, which plots the major radius relative to the unit disk).
    double range = 0.0;
    int workers = 1;

    /// Throws UsageError on invalid fields.
    void validate() const;
};

/// Colour for ReachedCap pixels of the size chart.
inline constexpr Rgb kSentinel{255, 0, 255};

/// Maps a nonnegative level (depth, or radius) to a colour.
Rgb apply_transfer(Transfer t, double level, double range);

/// Literal reference loop on (n, m, size) in binary64: sort ascending,
/// replace the largest, stop when new ≤ 0 or depth = cap.
int bit_exact_depth(int n, int m, int size, int cap, bool strict_boundary);

Image render_depth_chart(const ChartSpec& spec);
Image render_size_chart(const ChartSpec& spec);
Image render_barycentric(const ChartSpec& spec);
Image render_squared(const ChartSpec& spec);
/// Dispatches on spec.mode.
Image render_chart(const ChartSpec& spec);

/// Moduli coordinates of a pixel centre, and the pixel containing (x, y).
std::pair<double, double> pixel_center(const ChartSpec& spec, int column, int row);
std::pair<int, int> pixel_of(const ChartSpec& spec, double x, double y);

/// Barycentric triple for a pixel of the simplex chart, if inside.
std::optional<std::array<double, 3>> simplex_coordinates(const ChartSpec& spec, int column, int row);

struct SectionSample {
    Rational y;
    DepthKind kind;
    int depth;
};

/// Exact depths along x = x0 at `samples` uniformly spaced y in [y_from, y_to].
std::vector<SectionSample> section_profile(const Rational& x0, const Rational& y_from, const Rational& y_to,
                                           int samples, int cap = kDefaultCap);
/// Columns y, depth, ln_depth, capped.
std::vector<CsvRow> section_rows(const std::vector<SectionSample>& samples);
CsvRow section_header();

/// Worker count from APOLLO_WORKERS, else 1.
int workers_from_env();

}  // namespace apollo
