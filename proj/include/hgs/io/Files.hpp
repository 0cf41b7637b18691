#ifndef HGS_IO_FILES_HPP
#define HGS_IO_FILES_HPP

#include "Rounding.hpp"
#include "hgs/ProblemData.hpp"
#include "hgs/Solution.hpp"

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hgs::io
{
/// Thrown when a file cannot be opened or written.
class FileError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Thrown on malformed file contents.
class ParseError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * Reads a VRPLIB (NAME/TYPE/DIMENSION/... header followed by sections) or a
 * Solomon/Homberger instance; the layout is detected from the contents.
 * Distances come from Euclidean coordinates, or an explicit full matrix, and
 * durations equal distances. Every number, including time windows and
 * service durations, is converted with ``convention``.
 */
ProblemData readInstance(std::filesystem::path const &path, RoundingConvention const &convention);

ProblemData parseVrplib(std::string_view text, RoundingConvention const &convention);
ProblemData parseSolomon(std::string_view text, RoundingConvention const &convention);

/// The NAME of a VRPLIB file or first line of a Solomon file.
std::string instanceName(std::filesystem::path const &path);

/// "Route #k: c1 c2 ..." per non-empty route, then "Cost <cost>".
void writeSolution(std::ostream &out, Solution const &solution, double cost);
void writeSolution(std::filesystem::path const &path, Solution const &solution, double cost);

struct SolutionFile
{
    std::vector<Solution::Visits> routes;
    std::optional<double> cost;
};

SolutionFile parseSolution(std::string_view text);
SolutionFile readSolution(std::filesystem::path const &path);

/// Instance name to best known cost.
using BksTable = std::map<std::string, double, std::less<>>;

/// "instance,cost" lines; an "instance,cost" header, blank lines and lines
/// starting with '#' are skipped.
BksTable parseBks(std::string_view text);
BksTable readBks(std::filesystem::path const &path);

/// Whole file as text; throws FileError when it cannot be read.
std::string readFile(std::filesystem::path const &path);
}  // namespace hgs::io

#endif  // HGS_IO_FILES_HPP
