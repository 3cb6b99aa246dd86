#include "apollo/chart.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "apollo/errors.hpp"

namespace apollo {

namespace {

constexpr std::array<std::pair<const char*, ChartMode>, 4> kModes{{
    {"depth", ChartMode::Depth},
    {"size", ChartMode::Size},
    {"barycentric", ChartMode::Barycentric},
    {"squared", ChartMode::Squared},
}};

constexpr std::array<std::pair<const char*, Transfer>, 6> kTransfers{{
    {"gray30", Transfer::Gray30},
    {"gray30-wrap", Transfer::Gray30Wrap},
    {"clamp-linear", Transfer::ClampLinear},
    {"log", Transfer::Log},
    {"sin", Transfer::Sin},
    {"cyclic-palette", Transfer::CyclicPalette},
}};

constexpr std::array<Rgb, 8> kPalette{{
    {230, 25, 75}, {60, 180, 75}, {255, 225, 25}, {0, 130, 200},
    {245, 130, 48}, {145, 30, 180}, {70, 240, 240}, {250, 190, 190},
}};

std::uint8_t gray_byte(double v) {
    return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
}

Rgb gray(std::uint8_t g) { return {g, g, g}; }

// Runs body(line) for line in [0, lines) on `workers` threads, striding
// lines across workers. Each line must own the pixels it writes.
template <class Body>
void parallel_lines(int lines, int workers, Body body) {
    workers = std::max(1, std::min(workers, lines));
    if (workers == 1) {
        for (int i = 0; i < lines; ++i) body(i);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([=] {
            for (int i = w; i < lines; i += workers) body(i);
        });
}

double auto_range(const ChartSpec& spec) {
    if (spec.range > 0) return spec.range;
    return spec.mode == ChartMode::Size ? 10.0 : static_cast<double>(spec.cap);
}

int depth_level(const DepthResult<double>& r) { return r.finite() ? r.steps : r.cap; }

template <class Eval>
Image render_per_pixel(const ChartSpec& spec, Eval eval) {
    Image img(spec.width, spec.height);
    parallel_lines(spec.height, spec.workers, [&](int row) {
        for (int col = 0; col < spec.width; ++col) img.set(col, row, eval(col, row));
    });
    return img;
}

}  // namespace

ChartMode parse_chart_mode(const std::string& name) {
    for (const auto& [n, m] : kModes)
        if (name == n) return m;
    throw UsageError("unknown chart mode: " + name);
}

Transfer parse_transfer(const std::string& name) {
    for (const auto& [n, t] : kTransfers)
        if (name == n) return t;
    throw UsageError("unknown transfer: " + name);
}

std::string to_string(ChartMode mode) {
    for (const auto& [n, m] : kModes)
        if (m == mode) return n;
    return "?";
}

std::string to_string(Transfer t) {
    for (const auto& [n, v] : kTransfers)
        if (v == t) return n;
    return "?";
}

void ChartSpec::validate() const {
    if (width < 1 || height < 1) throw UsageError("chart width and height must be at least 1");
    if (!(window.x1 > window.x0) || !(window.y1 > window.y0)) throw UsageError("chart window must have positive area");
    if (cap < 1) throw UsageError("chart cap must be at least 1");
    if (workers < 1) throw UsageError("worker count must be at least 1");
    if (bit_exact) {
        if (mode != ChartMode::Depth) throw UsageError("bit-exact rendering applies to depth charts only");
        if (width != height) throw UsageError("bit-exact rendering needs a square image");
        if (window != Window{}) throw UsageError("bit-exact rendering uses the unit window");
    }
}

Rgb apply_transfer(Transfer t, double level, double range) {
    if (std::isinf(level)) return t == Transfer::CyclicPalette ? Rgb{255, 255, 255} : gray(255);
    switch (t) {
        case Transfer::Gray30:
            return gray(gray_byte(std::min(255.0, 30.0 * level)));
        case Transfer::Gray30Wrap:
            return gray(static_cast<std::uint8_t>(static_cast<long>(std::lround(30.0 * level)) % 256));
        case Transfer::ClampLinear:
            return gray(gray_byte(255.0 * std::min(1.0, level / range)));
        case Transfer::Log:
            return gray(gray_byte(255.0 * std::min(1.0, std::log1p(level) / std::log1p(range))));
        case Transfer::Sin:
            return gray(gray_byte(127.5 * (1.0 + std::sin(level))));
        case Transfer::CyclicPalette:
            return kPalette[static_cast<std::size_t>(std::lround(level)) % kPalette.size()];
    }
    return {};
}

int bit_exact_depth(int n, int m, int size, int cap, bool strict_boundary) {
    if (strict_boundary && (n <= 0 || m <= 0)) return 0;
    std::array<double, 3> T{static_cast<double>(n), static_cast<double>(m), static_cast<double>(size)};
    double next = 1;
    int depth = 0;
    while (next > 0 && depth < cap) {
        ++depth;
        std::sort(T.begin(), T.end());
        const double a = T[0], b = T[1], c = T[2];
        next = a + b + c - 2 * std::sqrt(a * b + b * c + c * a);
        T[2] = next;
    }
    return depth;
}

std::pair<double, double> pixel_center(const ChartSpec& spec, int column, int row) {
    const auto& w = spec.window;
    return {w.x0 + (column + 0.5) / spec.width * (w.x1 - w.x0), w.y0 + (row + 0.5) / spec.height * (w.y1 - w.y0)};
}

std::pair<int, int> pixel_of(const ChartSpec& spec, double x, double y) {
    const auto& w = spec.window;
    const int col = static_cast<int>(std::floor((x - w.x0) / (w.x1 - w.x0) * spec.width));
    const int row = static_cast<int>(std::floor((y - w.y0) / (w.y1 - w.y0) * spec.height));
    return {std::clamp(col, 0, spec.width - 1), std::clamp(row, 0, spec.height - 1)};
}

Image render_depth_chart(const ChartSpec& spec) {
    spec.validate();
    const double range = auto_range(spec);
    if (spec.bit_exact) {
        const int size = spec.width;
        Image img(size, size);
        // column n owns (n, m ≤ n) and its mirror (m, n): no pixel is shared
        parallel_lines(size, spec.workers, [&](int n) {
            for (int m = 0; m <= n; ++m) {
                const int d = bit_exact_depth(n, m, size, spec.cap, spec.strict_boundary);
                const Rgb c = apply_transfer(spec.transfer, d, range);
                img.set(n, m, c);
                img.set(m, n, c);
            }
        });
        return img;
    }
    return render_per_pixel(spec, [&](int col, int row) {
        const auto [x, y] = pixel_center(spec, col, row);
        return apply_transfer(spec.transfer, depth_level(depth_scaled_float(x, y, {spec.cap, false})), range);
    });
}

Image render_size_chart(const ChartSpec& spec) {
    spec.validate();
    const double range = auto_range(spec);
    return render_per_pixel(spec, [&](int col, int row) {
        const auto [x, y] = pixel_center(spec, col, row);
        const auto f = major_curvature_float({1.0, x, y}, spec.cap);
        if (!f) return kSentinel;
        const double radius = *f < 0 ? -1.0 / *f : INFINITY;
        return apply_transfer(spec.transfer, radius, range);
    });
}

std::optional<std::array<double, 3>> simplex_coordinates(const ChartSpec& spec, int column, int row) {
    // equilateral triangle, vertices (1,0,0) bottom-left, (0,1,0) bottom-right, (0,0,1) top
    static const double height = std::sqrt(3.0) / 2.0;
    const double u = (column + 0.5) / spec.width;
    const double v = 1.0 - (row + 0.5) / spec.height - (1.0 - height) / 2.0;
    const double z = v / height;
    const double y = u - z / 2.0;
    const double x = 1.0 - y - z;
    if (x < 0 || y < 0 || z < 0) return std::nullopt;
    return std::array<double, 3>{x, y, z};
}

Image render_barycentric(const ChartSpec& spec) {
    spec.validate();
    const double range = auto_range(spec);
    return render_per_pixel(spec, [&](int col, int row) {
        const auto abc = simplex_coordinates(spec, col, row);
        if (!abc) return Rgb{};
        return apply_transfer(spec.transfer, depth_level(depth_float<double>(*abc, {spec.cap, false})), range);
    });
}

Image render_squared(const ChartSpec& spec) {
    spec.validate();
    const double range = auto_range(spec);
    return render_per_pixel(spec, [&](int col, int row) {
        const auto [u, v] = pixel_center(spec, col, row);
        return apply_transfer(spec.transfer, depth_level(depth_scaled_float(u * u, v * v, {spec.cap, false})), range);
    });
}

Image render_chart(const ChartSpec& spec) {
    switch (spec.mode) {
        case ChartMode::Depth: return render_depth_chart(spec);
        case ChartMode::Size: return render_size_chart(spec);
        case ChartMode::Barycentric: return render_barycentric(spec);
        case ChartMode::Squared: return render_squared(spec);
    }
    throw UsageError("unknown chart mode");
}

std::vector<SectionSample> section_profile(const Rational& x0, const Rational& y_from, const Rational& y_to,
                                           int samples, int cap) {
    if (samples < 2) throw UsageError("section needs at least 2 samples");
    std::vector<SectionSample> out;
    out.reserve(samples);
    const Rational step = (y_to - y_from) / Rational(samples - 1);
    for (int i = 0; i < samples; ++i) {
        const Rational y = y_from + step * Rational(i);
        const auto r = depth_scaled(x0, y, {cap, false});
        out.push_back({y, r.kind, r.steps});
    }
    return out;
}

CsvRow section_header() { return {"y", "depth", "ln_depth", "capped"}; }

std::vector<CsvRow> section_rows(const std::vector<SectionSample>& samples) {
    auto num = [](double v) {
        char buf[32];
        auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
        return std::string(buf, end);
    };
    std::vector<CsvRow> rows;
    rows.reserve(samples.size());
    for (const auto& s : samples)
        rows.push_back({num(s.y.to_double()), std::to_string(s.depth),
                        s.depth > 0 ? num(std::log(static_cast<double>(s.depth))) : std::string("-inf"),
                        s.kind == DepthKind::ReachedCap ? "1" : "0"});
    return rows;
}

int workers_from_env() {
    if (const char* v = std::getenv("APOLLO_WORKERS")) {
        const int n = std::atoi(v);
        if (n >= 1) return n;
    }
    return 1;
}

}  // namespace apollo
