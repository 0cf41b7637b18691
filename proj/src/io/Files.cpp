#include "hgs/io/Files.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace fs = std::filesystem;

namespace
{
using hgs::io::ParseError;

std::string_view trim(std::string_view text)
{
    auto const first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};

    auto const last = text.find_last_not_of(" \t\r\n");
    return text.substr(first, last - first + 1);
}

std::vector<std::string_view> splitLines(std::string_view text)
{
    std::vector<std::string_view> lines;
    while (!text.empty())
    {
        auto const eol = text.find('\n');
        lines.push_back(text.substr(0, eol));
        if (eol == std::string_view::npos)
            break;
        text = text.substr(eol + 1);
    }

    return lines;
}

std::vector<std::string_view> tokens(std::string_view line)
{
    std::vector<std::string_view> result;
    std::size_t pos = 0;
    while (true)
    {
        pos = line.find_first_not_of(" \t\r", pos);
        if (pos == std::string_view::npos)
            break;

        auto const end = line.find_first_of(" \t\r", pos);
        result.push_back(line.substr(pos, end - pos));
        if (end == std::string_view::npos)
            break;
        pos = end;
    }

    return result;
}

double toDouble(std::string_view token, std::size_t lineNo)
{
    double value = 0;
    auto const *end = token.data() + token.size();
    auto const [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value))
        throw ParseError(fmt::format("line {}: '{}' is not a number", lineNo, token));

    return value;
}

std::int64_t toInteger(std::string_view token, std::size_t lineNo)
{
    auto const value = toDouble(token, lineNo);
    if (value != std::floor(value))
        throw ParseError(fmt::format("line {}: '{}' is not an integer", lineNo, token));

    return static_cast<std::int64_t>(value);
}

bool isNumericLine(std::string_view line)
{
    auto const text = trim(line);
    return !text.empty()
           && (std::isdigit(static_cast<unsigned char>(text.front())) != 0
               || text.front() == '-' || text.front() == '.' || text.front() == '+');
}

std::vector<double> numbers(std::string_view line, std::size_t lineNo, std::size_t expected)
{
    auto const parts = tokens(line);
    if (parts.size() != expected)
        throw ParseError(fmt::format(
            "line {}: row has {} entries, expected {}", lineNo, parts.size(), expected));

    std::vector<double> result;
    for (auto const part : parts)
        result.push_back(toDouble(part, lineNo));

    return result;
}

struct RawLocation
{
    double x = 0;
    double y = 0;
    double demand = 0;
    double service = 0;
    std::optional<std::pair<double, double>> window;
};

hgs::ProblemData build(std::vector<RawLocation> const &raw,
                       std::size_t depot,
                       std::size_t numVehicles,
                       hgs::Load capacity,
                       std::optional<std::vector<double>> const &explicitWeights,
                       hgs::io::RoundingConvention const &convention)
{
    auto const dim = raw.size();

    std::vector<std::size_t> order{depot};
    for (std::size_t idx = 0; idx != dim; ++idx)
        if (idx != depot)
            order.push_back(idx);

    auto const toDuration = [&](double value) { return hgs::io::roundValue(value, convention); };

    auto const &d = raw[depot];
    hgs::Depot depotData{std::llround(d.x), std::llround(d.y), 0, hgs::unboundedTime};
    if (d.window)
    {
        depotData.twEarly = toDuration(d.window->first);
        depotData.twLate = toDuration(d.window->second);
    }

    std::vector<hgs::Client> clients;
    for (std::size_t idx = 1; idx != dim; ++idx)
    {
        auto const &loc = raw[order[idx]];
        hgs::Client client{std::llround(loc.x),
                           std::llround(loc.y),
                           std::llround(loc.demand),
                           toDuration(loc.service)};
        if (loc.window)
        {
            client.twEarly = toDuration(loc.window->first);
            client.twLate = toDuration(loc.window->second);
        }

        clients.push_back(client);
    }

    hgs::Matrix<hgs::Distance> dist(dim, 0);
    for (std::size_t i = 0; i != dim; ++i)
        for (std::size_t j = 0; j != dim; ++j)
        {
            if (i == j)
                continue;

            auto const from = order[i];
            auto const to = order[j];
            double value = 0;
            if (explicitWeights)
                value = (*explicitWeights)[from * dim + to];
            else
                value = std::hypot(raw[from].x - raw[to].x, raw[from].y - raw[to].y);

            dist(i, j) = hgs::io::roundValue(value, convention);
        }

    return {depotData, std::move(clients), hgs::Fleet{numVehicles, capacity}, dist, dist};
}
}  // namespace

std::string hgs::io::readFile(fs::path const &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FileError(fmt::format("cannot read {}", path.string()));

    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

hgs::ProblemData hgs::io::parseVrplib(std::string_view text, RoundingConvention const &convention)
{
    static std::vector<std::string_view> const headerKeys = {
        "NAME", "TYPE", "DIMENSION", "EDGE_WEIGHT_TYPE", "EDGE_WEIGHT_FORMAT",
        "CAPACITY", "COMMENT", "VEHICLES"};
    static std::vector<std::string_view> const sections = {
        "NODE_COORD_SECTION", "DEMAND_SECTION", "DEPOT_SECTION", "EDGE_WEIGHT_SECTION",
        "SERVICE_TIME_SECTION", "TIME_WINDOW_SECTION"};

    std::unordered_map<std::string, std::string> header;
    std::string_view section;
    std::vector<std::pair<std::size_t, std::vector<double>>> coords, demands, services, windows;
    std::vector<double> weights;
    std::vector<std::int64_t> depots;
    bool depotsDone = false;

    auto const lines = splitLines(text);
    for (std::size_t idx = 0; idx != lines.size(); ++idx)
    {
        auto const lineNo = idx + 1;
        auto const line = trim(lines[idx]);
        if (line.empty())
            continue;

        if (!isNumericLine(line))
        {
            auto const colon = line.find(':');
            auto const keyword = trim(colon == std::string_view::npos
                                          ? line.substr(0, line.find_first_of(" \t"))
                                          : line.substr(0, colon));

            if (keyword == "EOF")
                break;

            if (std::find(sections.begin(), sections.end(), keyword) != sections.end())
            {
                section = keyword;
                continue;
            }

            if (colon != std::string_view::npos
                && std::find(headerKeys.begin(), headerKeys.end(), keyword) != headerKeys.end())
            {
                header[std::string(keyword)] = std::string(trim(line.substr(colon + 1)));
                section = {};
                continue;
            }

            throw ParseError(fmt::format("line {}: unknown keyword '{}'", lineNo, keyword));
        }

        if (section.empty())
            throw ParseError(fmt::format("line {}: data outside of a section", lineNo));

        auto const keyed = [&](auto &target, std::size_t expected) {
            auto values = numbers(line, lineNo, expected);
            auto const id = values.front();
            if (id < 1 || id != std::floor(id))
                throw ParseError(fmt::format("line {}: invalid node id", lineNo));
            target.emplace_back(static_cast<std::size_t>(id) - 1,
                                std::vector<double>(values.begin() + 1, values.end()));
        };

        if (section == "NODE_COORD_SECTION")
            keyed(coords, 3);
        else if (section == "DEMAND_SECTION")
            keyed(demands, 2);
        else if (section == "SERVICE_TIME_SECTION")
            keyed(services, 2);
        else if (section == "TIME_WINDOW_SECTION")
            keyed(windows, 3);
        else if (section == "EDGE_WEIGHT_SECTION")
            for (auto const token : tokens(line))
                weights.push_back(toDouble(token, lineNo));
        else if (section == "DEPOT_SECTION")
            for (auto const token : tokens(line))
            {
                auto const id = toInteger(token, lineNo);
                if (id == -1)
                    depotsDone = true;
                else if (!depotsDone)
                    depots.push_back(id);
            }
    }

    auto const value = [&](char const *key) -> std::optional<std::string> {
        auto const it = header.find(key);
        if (it == header.end())
            return std::nullopt;
        return it->second;
    };

    auto const dimText = value("DIMENSION");
    if (!dimText)
        throw ParseError("missing DIMENSION");
    auto const dimValue = toInteger(*dimText, 0);
    if (dimValue < 2)
        throw ParseError("DIMENSION must be at least 2");
    auto const dim = static_cast<std::size_t>(dimValue);

    auto const capText = value("CAPACITY");
    if (!capText)
        throw ParseError("missing CAPACITY");
    auto const capacity = toInteger(*capText, 0);

    if (depots.size() > 1)
        throw ParseError("multiple depots are not supported");
    auto const depotId = depots.empty() ? 1 : depots.front();
    if (depotId < 1 || static_cast<std::size_t>(depotId) > dim)
        throw ParseError(fmt::format("depot {} out of range", depotId));

    std::vector<RawLocation> raw(dim);
    auto const check = [&](std::size_t id, char const *what) {
        if (id >= dim)
            throw ParseError(fmt::format("{} node {} exceeds DIMENSION {}", what, id + 1, dim));
    };

    for (auto const &[id, v] : coords)
    {
        check(id, "coordinate");
        raw[id].x = v[0];
        raw[id].y = v[1];
    }
    for (auto const &[id, v] : demands)
    {
        check(id, "demand");
        raw[id].demand = v[0];
    }
    for (auto const &[id, v] : services)
    {
        check(id, "service time");
        raw[id].service = v[0];
    }
    for (auto const &[id, v] : windows)
    {
        check(id, "time window");
        raw[id].window = std::pair{v[0], v[1]};
    }

    auto const type = value("EDGE_WEIGHT_TYPE").value_or("EUC_2D");
    std::optional<std::vector<double>> explicitWeights;
    if (type == "EXPLICIT")
    {
        auto const format = value("EDGE_WEIGHT_FORMAT").value_or("FULL_MATRIX");
        if (format != "FULL_MATRIX")
            throw ParseError(fmt::format("unsupported EDGE_WEIGHT_FORMAT {}", format));

        if (weights.size() != dim * dim)
            throw ParseError(fmt::format(
                "EDGE_WEIGHT_SECTION has {} entries, expected {}", weights.size(), dim * dim));

        explicitWeights = std::move(weights);
    }
    else if (type == "EUC_2D")
    {
        if (coords.size() != dim)
            throw ParseError(fmt::format(
                "NODE_COORD_SECTION has {} rows, expected {}", coords.size(), dim));
    }
    else
        throw ParseError(fmt::format("unsupported EDGE_WEIGHT_TYPE {}", type));

    auto numVehicles = dim - 1;
    if (auto const vehicles = value("VEHICLES"))
    {
        auto const count = toInteger(*vehicles, 0);
        if (count < 1)
            throw ParseError("VEHICLES must be positive");
        numVehicles = static_cast<std::size_t>(count);
    }

    return build(raw,
                 static_cast<std::size_t>(depotId - 1),
                 numVehicles,
                 capacity,
                 explicitWeights,
                 convention);
}

hgs::ProblemData hgs::io::parseSolomon(std::string_view text, RoundingConvention const &convention)
{
    auto const lines = splitLines(text);

    std::optional<std::pair<std::int64_t, std::int64_t>> fleet;
    std::vector<RawLocation> raw;
    enum class Part
    {
        Preamble,
        Vehicle,
        Customer
    } part = Part::Preamble;

    for (std::size_t idx = 0; idx != lines.size(); ++idx)
    {
        auto const lineNo = idx + 1;
        auto const line = trim(lines[idx]);
        if (line.empty())
            continue;

        if (line == "VEHICLE")
        {
            part = Part::Vehicle;
            continue;
        }

        if (line.starts_with("CUSTOMER"))
        {
            part = Part::Customer;
            continue;
        }

        if (!isNumericLine(line))
            continue;

        if (part == Part::Vehicle && !fleet)
        {
            auto const parts = tokens(line);
            if (parts.size() != 2)
                throw ParseError(fmt::format(
                    "line {}: row has {} entries, expected 2", lineNo, parts.size()));
            fleet = std::pair{toInteger(parts[0], lineNo), toInteger(parts[1], lineNo)};
        }
        else if (part == Part::Customer)
        {
            auto const v = numbers(line, lineNo, 7);
            RawLocation loc;
            loc.x = v[1];
            loc.y = v[2];
            loc.demand = v[3];
            loc.window = std::pair{v[4], v[5]};
            loc.service = v[6];
            raw.push_back(loc);
        }
        else
            throw ParseError(fmt::format("line {}: unexpected data", lineNo));
    }

    if (!fleet)
        throw ParseError("missing VEHICLE section with NUMBER and CAPACITY");

    if (fleet->first < 1)
        throw ParseError("vehicle number must be positive");

    if (raw.size() < 2)
        throw ParseError("CUSTOMER section needs a depot and at least one client");

    return build(raw,
                 0,
                 static_cast<std::size_t>(fleet->first),
                 fleet->second,
                 std::nullopt,
                 convention);
}

hgs::ProblemData hgs::io::readInstance(fs::path const &path, RoundingConvention const &convention)
{
    std::string text;
    try
    {
        text = readFile(path);
    }
    catch (FileError const &)
    {
        throw FileError(fmt::format("cannot read instance {}", path.string()));
    }

    for (auto const line : splitLines(text))
        if (trim(line) == "VEHICLE")
            return parseSolomon(text, convention);

    return parseVrplib(text, convention);
}

std::string hgs::io::instanceName(fs::path const &path)
{
    auto const text = readFile(path);
    for (auto const rawLine : splitLines(text))
    {
        auto const line = trim(rawLine);
        if (line.empty())
            continue;

        if (line.starts_with("NAME"))
        {
            auto const colon = line.find(':');
            if (colon != std::string_view::npos)
                return std::string(trim(line.substr(colon + 1)));
        }

        if (line.find(':') == std::string_view::npos)
            return std::string(line);
    }

    return path.stem().string();
}

void hgs::io::writeSolution(std::ostream &out, Solution const &solution, double cost)
{
    std::size_t idx = 0;
    for (auto const &route : solution.routes())
        fmt::print(out, "Route #{}: {}\n", ++idx, fmt::join(route.visits(), " "));

    fmt::print(out, "Cost {}\n", cost);
}

void hgs::io::writeSolution(fs::path const &path, Solution const &solution, double cost)
{
    std::ofstream out(path);
    if (!out)
        throw FileError(fmt::format("cannot write {}", path.string()));

    writeSolution(out, solution, cost);
    if (!out)
        throw FileError(fmt::format("cannot write {}", path.string()));
}

hgs::io::SolutionFile hgs::io::parseSolution(std::string_view text)
{
    SolutionFile result;
    auto const lines = splitLines(text);
    for (std::size_t idx = 0; idx != lines.size(); ++idx)
    {
        auto const lineNo = idx + 1;
        auto const line = trim(lines[idx]);
        if (line.starts_with("Route"))
        {
            auto const colon = line.find(':');
            if (colon == std::string_view::npos)
                throw ParseError(fmt::format("line {}: route without ':'", lineNo));

            Solution::Visits visits;
            for (auto const token : tokens(line.substr(colon + 1)))
            {
                auto const client = toInteger(token, lineNo);
                if (client < 1)
                    throw ParseError(fmt::format("line {}: invalid client {}", lineNo, client));
                visits.push_back(static_cast<std::size_t>(client));
            }

            result.routes.push_back(std::move(visits));
        }
        else if (line.starts_with("Cost"))
        {
            auto const parts = tokens(line);
            if (parts.size() != 2)
                throw ParseError(fmt::format("line {}: expected 'Cost <value>'", lineNo));
            result.cost = toDouble(parts[1], lineNo);
        }
    }

    return result;
}

hgs::io::SolutionFile hgs::io::readSolution(fs::path const &path)
{
    return parseSolution(readFile(path));
}

hgs::io::BksTable hgs::io::parseBks(std::string_view text)
{
    BksTable table;
    auto const lines = splitLines(text);
    for (std::size_t idx = 0; idx != lines.size(); ++idx)
    {
        auto const lineNo = idx + 1;
        auto const line = trim(lines[idx]);
        if (line.empty() || line.front() == '#' || line == "instance,cost")
            continue;

        auto const comma = line.find(',');
        if (comma == std::string_view::npos)
            throw ParseError(fmt::format("line {}: expected 'instance,cost'", lineNo));

        auto const name = std::string(trim(line.substr(0, comma)));
        auto const costText = trim(line.substr(comma + 1));

        double cost = 0;
        try
        {
            cost = toDouble(costText, lineNo);
        }
        catch (ParseError const &)
        {
            throw ParseError(
                fmt::format("line {}: unparsable cost '{}' for {}", lineNo, costText, name));
        }

        if (!(cost > 0))
            throw ParseError(fmt::format("line {}: cost for {} must be positive", lineNo, name));

        if (!table.emplace(name, cost).second)
            throw ParseError(fmt::format("duplicate instance {} in BKS table", name));
    }

    return table;
}

hgs::io::BksTable hgs::io::readBks(fs::path const &path)
{
    return parseBks(readFile(path));
}
