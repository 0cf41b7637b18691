#include "hgs/io/Files.hpp"
#include "hgs/io/Rounding.hpp"

#include "support/Instances.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hgs;
using io::RoundingConvention;

namespace
{
RoundingConvention conv(char const *name) { return RoundingConvention::parse(name); }

std::string const twoPoints = R"(NAME : pair
TYPE : CVRP
DIMENSION : 2
EDGE_WEIGHT_TYPE : EUC_2D
CAPACITY : 10
NODE_COORD_SECTION
1 0 0
2 3 4
DEMAND_SECTION
1 0
2 1
DEPOT_SECTION
1
-1
EOF
)";

std::string const solomonTiny = "TINY\n\nVEHICLE\nNUMBER     CAPACITY\n  25         200\n\n"
                                "CUSTOMER\nCUST NO.  XCOORD.   YCOORD.    DEMAND   READY TIME  DUE DATE   SERVICE   TIME\n\n"
                                "    0      40         50          0          0       1236          0\n"
                                "    1      45         68         10        912        967         90\n"
                                "    2      45         70         30        825        870         90\n";

std::filesystem::path tempFile(std::string const &name, std::string const &contents)
{
    auto const path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << contents;
    return path;
}
}  // namespace

TEST_CASE("rounding conventions")
{
    CHECK(io::roundValue(2.0, conv("round")) == 2);
    CHECK(io::roundValue(2.5, conv("round")) == 3);
    CHECK(io::roundValue(2.57, conv("dimacs")) == 25);
    CHECK(io::roundValue(2.3, conv("dimacs")) == 23);
    CHECK(io::roundValue(2.9, conv("trunc")) == 2);
    CHECK(io::roundValue(1.25, conv("exact:100")) == 125);

    CHECK(conv("dimacs").scale() == 10.0);
    CHECK(conv("exact:1000").scale() == 1000.0);
    CHECK(conv("round").scale() == 1.0);
    CHECK(conv("exact:1000").name() == "exact:1000");

    CHECK_THROWS_AS(conv("ceil"), std::invalid_argument);
    CHECK_THROWS_AS(conv("exact:"), std::invalid_argument);
    CHECK_THROWS_AS(conv("exact:-2"), std::invalid_argument);
}

TEST_CASE("rounding is monotone in its argument")
{
    for (auto const *name : {"round", "trunc", "dimacs", "exact:7.5"})
    {
        auto const c = conv(name);
        auto prev = io::roundValue(-5.0, c);
        for (double x = -5.0; x <= 5.0; x += 0.013)
        {
            auto const v = io::roundValue(x, c);
            CHECK(v >= prev);
            prev = v;
        }
    }
}

TEST_CASE("3-4-5 triangle under round and dimacs")
{
    auto const round = io::parseVrplib(twoPoints, conv("round"));
    CHECK(round.dist(0, 1) == 5);
    CHECK(round.duration(0, 1) == 5);

    auto const dimacs = io::parseVrplib(twoPoints, conv("dimacs"));
    CHECK(dimacs.dist(0, 1) == 50);
    CHECK(dimacs.numVehicles() == 1);
}

TEST_CASE("Solomon fleet and windows")
{
    auto const data = io::parseSolomon(solomonTiny, conv("round"));
    CHECK(data.numVehicles() == 25);
    CHECK(data.capacity() == 200);
    CHECK(data.numClients() == 2);
    CHECK(data.client(1).twEarly == 912);
    CHECK(data.client(1).twLate == 967);
    CHECK(data.client(2).serviceDuration == 90);
    CHECK(data.depot().twLate == 1236);
    CHECK(data.hasTimeWindows());

    auto const dimacs = io::parseSolomon(solomonTiny, conv("dimacs"));
    CHECK(dimacs.client(1).twEarly == 9120);
    CHECK(dimacs.client(2).serviceDuration == 900);
    CHECK(dimacs.dist(1, 2) == 20);
}

TEST_CASE("layout is detected from the contents")
{
    auto const path = tempFile("hgs_io_detect.txt", solomonTiny);
    CHECK(io::readInstance(path, conv("round")).numVehicles() == 25);
    CHECK(io::instanceName(path) == "TINY");
    std::filesystem::remove(path);
}

TEST_CASE("bundled instances")
{
    auto const x = io::readInstance(test::dataDir() / "X-n101-k25.vrp", conv("round"));
    CHECK(x.numClients() == 100);
    CHECK(x.capacity() == 206);
    CHECK(io::instanceName(test::dataDir() / "X-n101-k25.vrp") == "X-n101-k25");
    CHECK(x.hasSymmetricDistances());
    CHECK_FALSE(x.hasTimeWindows());

    auto const again = io::readInstance(test::dataDir() / "X-n101-k25.vrp", conv("round"));
    CHECK(again == x);

    auto const rc = io::readInstance(test::dataDir() / "RC208.txt", conv("dimacs"));
    CHECK(rc.numClients() == 100);
    CHECK(rc.numVehicles() == 25);
    CHECK(rc.capacity() == 1000);
    CHECK(rc.hasTimeWindows());
}

TEST_CASE("reference solution of RC208 evaluates to its stated cost")
{
    auto const data = io::readInstance(test::dataDir() / "RC208.txt", conv("dimacs"));
    auto const file = io::readSolution(test::dataDir() / "RC208.sol");
    REQUIRE(file.cost);

    Solution const sol(data, file.routes);
    CHECK(sol.isFeasible());
    CHECK(sol.numRoutes() == 4);
    CHECK(static_cast<double>(sol.distance()) / 10.0 == doctest::Approx(*file.cost));
}

TEST_CASE("explicit full matrix")
{
    std::string const text = "NAME : m\nTYPE : CVRP\nDIMENSION : 3\nEDGE_WEIGHT_TYPE : EXPLICIT\n"
                             "EDGE_WEIGHT_FORMAT : FULL_MATRIX\nCAPACITY : 5\nVEHICLES : 2\n"
                             "EDGE_WEIGHT_SECTION\n0 1 2\n3 0 4\n5 6 0\n"
                             "DEMAND_SECTION\n1 0\n2 1\n3 1\nDEPOT_SECTION\n1\n-1\nEOF\n";
    auto const data = io::parseVrplib(text, conv("round"));
    CHECK(data.dist(0, 1) == 1);
    CHECK(data.dist(1, 0) == 3);
    CHECK(data.dist(2, 1) == 6);
    CHECK(data.numVehicles() == 2);
    CHECK_FALSE(data.hasSymmetricDistances());
}

TEST_CASE("depot is remapped to location zero")
{
    std::string const text = "NAME : d\nDIMENSION : 3\nCAPACITY : 5\nNODE_COORD_SECTION\n1 1 1\n2 0 0\n3 4 4\n"
                             "DEMAND_SECTION\n1 2\n2 0\n3 3\nDEPOT_SECTION\n2\n-1\nEOF\n";
    auto const data = io::parseVrplib(text, conv("round"));
    CHECK(data.depot().x == 0);
    CHECK(data.client(1).demand == 2);
    CHECK(data.client(2).demand == 3);
    CHECK(data.numVehicles() == 2);
}

TEST_CASE("malformed VRPLIB input")
{
    auto const without = [&](std::string const &what) {
        auto text = twoPoints;
        auto const at = text.find(what);
        text.erase(at, text.find('\n', at) - at + 1);
        return text;
    };

    CHECK_THROWS_WITH_AS(io::parseVrplib(without("CAPACITY"), conv("round")), "missing CAPACITY", io::ParseError);
    CHECK_THROWS_WITH_AS(io::parseVrplib(without("DIMENSION"), conv("round")), "missing DIMENSION", io::ParseError);
    CHECK_THROWS_AS(io::parseVrplib("NAME : a\nBOGUS : 1\n", conv("round")), io::ParseError);
    CHECK_THROWS_AS(io::parseVrplib(without("1 0 0"), conv("round")), io::ParseError);
}

TEST_CASE("unreadable instance")
{
    CHECK_THROWS_WITH_AS(io::readInstance("/nonexistent/file.vrp", conv("round")),
                         "cannot read instance /nonexistent/file.vrp",
                         io::FileError);
}

TEST_CASE("solution files")
{
    auto const data = test::tinyInstance();

    SUBCASE("routes then cost")
    {
        std::ostringstream out;
        io::writeSolution(out, Solution(data, {{1, 2}, {3, 4}}), 42);
        CHECK(out.str() == "Route #1: 1 2\nRoute #2: 3 4\nCost 42\n");
    }

    SUBCASE("empty solution")
    {
        Matrix<Distance> d(std::vector<std::vector<Distance>>{{0}});
        ProblemData const empty(Depot{}, {}, {1, 1}, d, d);
        std::ostringstream out;
        io::writeSolution(out, Solution(empty, {}), 0);
        CHECK(out.str() == "Cost 0\n");
    }

    SUBCASE("round trip")
    {
        Solution const sol(data, {{4, 1}, {3, 2}});
        std::ostringstream out;
        io::writeSolution(out, sol, 77.5);

        auto const parsed = io::parseSolution(out.str());
        CHECK(Solution(data, parsed.routes) == sol);
        CHECK(parsed.routes == std::vector<Solution::Visits>{{4, 1}, {3, 2}});
        CHECK(parsed.cost == 77.5);
    }
}

TEST_CASE("best known solution tables")
{
    auto const table = io::parseBks("X-n101-k25,27591\n");
    REQUIRE(table.size() == 1);
    CHECK(table.at("X-n101-k25") == 27591);

    CHECK(io::parseBks("").empty());
    CHECK(io::parseBks("instance,cost\n# comment\n\nRC208,776.1\n").at("RC208") == doctest::Approx(776.1));

    CHECK_THROWS_WITH_AS(io::parseBks("A,1\nA,2\n"), "duplicate instance A in BKS table", io::ParseError);
    CHECK_THROWS_AS(io::parseBks("A,abc\n"), io::ParseError);
}
