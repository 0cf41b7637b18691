#include "hgs/bench/Plot.hpp"
#include "hgs/io/Files.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>

using namespace hgs::bench;

namespace
{
constexpr double width = 640;
constexpr double height = 400;
constexpr double left = 70;
constexpr double right = 150;
constexpr double top = 40;
constexpr double bottom = 50;

constexpr std::array<char const *, 6> palette
    = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

std::string escape(std::string_view text)
{
    std::string out;
    for (char c : text)
        switch (c)
        {
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '&':
            out += "&amp;";
            break;
        default:
            out += c;
        }
    return out;
}

struct Range
{
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void add(double v)
    {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }

    void finish()
    {
        if (lo > hi)
            lo = 0, hi = 1;
        if (lo == hi)
            lo -= 0.5, hi += 0.5;
    }
};

std::string tick(double v)
{
    if (std::abs(v) >= 1e5 || (v != 0 && std::abs(v) < 1e-3))
        return fmt::format("{:.2e}", v);
    return fmt::format("{:.6g}", v);
}

template <typename Member> Series column(hgs::Statistics const &stats, std::string name, Member get)
{
    Series series{std::move(name), {}};
    for (auto const &row : stats.rows())
        if (auto const value = get(row))
            series.points.emplace_back(static_cast<double>(row.iteration), *value);
    return series;
}
}  // namespace

void hgs::bench::writeLineChart(std::ostream &out, Chart const &chart)
{
    Range xr, yr;
    for (auto const &s : chart.series)
        for (auto const &[x, y] : s.points)
            xr.add(x), yr.add(y);
    xr.finish();
    yr.finish();

    auto const plotW = width - left - right;
    auto const plotH = height - top - bottom;
    auto sx = [&](double x) { return left + (x - xr.lo) / (xr.hi - xr.lo) * plotW; };
    auto sy = [&](double y) { return top + plotH - (y - yr.lo) / (yr.hi - yr.lo) * plotH; };

    fmt::print(out,
               "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
               "font-family=\"sans-serif\" font-size=\"11\">\n",
               width,
               height);
    fmt::print(out, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    fmt::print(out,
               "<text x=\"{}\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">{}</text>\n",
               left + plotW / 2,
               escape(chart.title));
    fmt::print(out,
               "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
               left,
               top,
               plotW,
               plotH);

    for (int i = 0; i <= 4; ++i)
    {
        auto const fx = xr.lo + (xr.hi - xr.lo) * i / 4;
        auto const fy = yr.lo + (yr.hi - yr.lo) * i / 4;
        fmt::print(out,
                   "<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{}</text>\n",
                   sx(fx),
                   top + plotH + 16,
                   tick(fx));
        fmt::print(out,
                   "<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"end\">{}</text>\n",
                   left - 6,
                   sy(fy) + 4,
                   tick(fy));
        fmt::print(out,
                   "<line x1=\"{0:.1f}\" x2=\"{1:.1f}\" y1=\"{2:.1f}\" y2=\"{2:.1f}\" stroke=\"#ddd\"/>\n",
                   left,
                   left + plotW,
                   sy(fy));
    }

    fmt::print(out,
               "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
               left + plotW / 2,
               height - 12,
               escape(chart.xLabel));
    fmt::print(out,
               "<text x=\"16\" y=\"{0}\" text-anchor=\"middle\" transform=\"rotate(-90 16 {0})\">{1}</text>\n",
               top + plotH / 2,
               escape(chart.yLabel));

    for (std::size_t i = 0; i != chart.series.size(); ++i)
    {
        auto const &s = chart.series[i];
        auto const *colour = palette[i % palette.size()];

        std::string points;
        for (auto const &[x, y] : s.points)
            points += fmt::format("{:.1f},{:.1f} ", sx(x), sy(y));

        fmt::print(out,
                   "<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.2\" points=\"{}\"/>\n",
                   colour,
                   points);

        auto const ly = top + 10 + 18 * static_cast<double>(i);
        fmt::print(out,
                   "<line x1=\"{0}\" x2=\"{1}\" y1=\"{2}\" y2=\"{2}\" stroke=\"{3}\" stroke-width=\"2\"/>\n",
                   left + plotW + 10,
                   left + plotW + 30,
                   ly,
                   colour);
        fmt::print(out, "<text x=\"{}\" y=\"{}\">{}</text>\n", left + plotW + 35, ly + 4, escape(s.name));
    }

    fmt::print(out, "</svg>\n");
}

hgs::bench::Chart hgs::bench::diversityChart(Statistics const &stats)
{
    auto feas = column(stats, "feasible", [](auto const &r) -> std::optional<double> {
        return r.feasible.size ? std::optional(r.feasible.diversity) : std::nullopt;
    });
    auto infeas = column(stats, "infeasible", [](auto const &r) -> std::optional<double> {
        return r.infeasible.size ? std::optional(r.infeasible.diversity) : std::nullopt;
    });
    return {"Diversity", "Iteration", "Average broken pairs distance", {feas, infeas}};
}

hgs::bench::Chart hgs::bench::objectiveChart(Statistics const &stats)
{
    auto toDouble = [](auto const &opt) -> std::optional<double> {
        return opt ? std::optional(static_cast<double>(*opt)) : std::nullopt;
    };

    return {"Objectives",
            "Iteration",
            "Objective",
            {column(stats, "feasible best", [&](auto const &r) { return toDouble(r.feasible.best); }),
             column(stats, "feasible average", [&](auto const &r) { return toDouble(r.feasible.average); }),
             column(stats, "infeasible best", [&](auto const &r) { return toDouble(r.infeasible.best); }),
             column(stats,
                    "infeasible average",
                    [&](auto const &r) { return toDouble(r.infeasible.average); })}};
}

hgs::bench::Chart hgs::bench::runtimeChart(Statistics const &stats)
{
    auto runtime = column(stats, "iteration", [](auto const &r) -> std::optional<double> {
        return r.iterationRuntime;
    });
    return {"Iteration runtime", "Iteration", "Seconds", {runtime}};
}

std::vector<std::filesystem::path> hgs::bench::writeStatisticsPlots(Statistics const &stats,
                                                                    std::filesystem::path const &dir)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw io::FileError(fmt::format("cannot create directory {}", dir.string()));

    std::vector<std::pair<std::string, Chart>> const charts = {
        {"diversity.svg", diversityChart(stats)},
        {"objectives.svg", objectiveChart(stats)},
        {"runtimes.svg", runtimeChart(stats)},
    };

    std::vector<std::filesystem::path> written;
    for (auto const &[file, chart] : charts)
    {
        auto const path = dir / file;
        std::ofstream out(path);
        if (!out)
            throw io::FileError(fmt::format("cannot write {}", path.string()));
        writeLineChart(out, chart);
        written.push_back(path);
    }

    return written;
}

void hgs::bench::writeSolutionPlot(std::ostream &out, ProblemData const &data, Solution const &solution)
{
    Range xr, yr;
    xr.add(static_cast<double>(data.depot().x));
    yr.add(static_cast<double>(data.depot().y));
    for (auto const &c : data.clients())
        xr.add(static_cast<double>(c.x)), yr.add(static_cast<double>(c.y));
    xr.finish();
    yr.finish();

    constexpr double size = 600, margin = 20;
    auto const span = std::max(xr.hi - xr.lo, yr.hi - yr.lo);
    auto sx = [&](double x) { return margin + (x - xr.lo) / span * (size - 2 * margin); };
    auto sy = [&](double y) { return size - margin - (y - yr.lo) / span * (size - 2 * margin); };
    auto px = [&](std::size_t loc) {
        return loc == 0 ? static_cast<double>(data.depot().x) : static_cast<double>(data.client(loc).x);
    };
    auto py = [&](std::size_t loc) {
        return loc == 0 ? static_cast<double>(data.depot().y) : static_cast<double>(data.client(loc).y);
    };

    fmt::print(out, "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\">\n", size);
    fmt::print(out, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    for (std::size_t r = 0; r != solution.numRoutes(); ++r)
    {
        std::string points = fmt::format("{:.1f},{:.1f} ", sx(px(0)), sy(py(0)));
        for (auto loc : solution.routes()[r].visits())
            points += fmt::format("{:.1f},{:.1f} ", sx(px(loc)), sy(py(loc)));
        points += fmt::format("{:.1f},{:.1f}", sx(px(0)), sy(py(0)));

        fmt::print(out,
                   "<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1\" points=\"{}\"/>\n",
                   palette[r % palette.size()],
                   points);
    }

    for (std::size_t loc = 1; loc <= data.numClients(); ++loc)
        fmt::print(out, "<circle cx=\"{:.1f}\" cy=\"{:.1f}\" r=\"2.5\" fill=\"#444\"/>\n", sx(px(loc)), sy(py(loc)));

    fmt::print(out,
               "<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"8\" height=\"8\" fill=\"black\"/>\n",
               sx(px(0)) - 4,
               sy(py(0)) - 4);
    fmt::print(out, "</svg>\n");
}
