#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "myxo/errors.hpp"
#include "myxo/geometry/point_set.hpp"

using namespace myxo::geom;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const char* name) {
    const auto dir = fs::temp_directory_path() / "myxo_tests";
    fs::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_CASE("load_points parses a minimal file and keeps order") {
    const auto path = temp_file("points_ok.csv");
    std::ofstream(path) << "id,x,y\n0,0,0\n1,1,0\n";
    const auto ps = load_points(path);
    REQUIRE(ps.size() == 2);
    CHECK(ps[0] == Point{0.0, 0.0});
    CHECK(ps[1] == Point{1.0, 0.0});
}

TEST_CASE("duplicate coordinates are rejected naming both ids") {
    const auto path = temp_file("points_dup.csv");
    std::ofstream(path) << "id,x,y\n0,2,3\n1,5,5\n2,2,3\n";
    try {
        load_points(path);
        FAIL("expected UsageError");
    } catch (const myxo::UsageError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("0") != std::string::npos);
        CHECK(msg.find("2") != std::string::npos);
    }
}

TEST_CASE("non-finite coordinates and short files are rejected") {
    const auto path = temp_file("points_nan.csv");
    std::ofstream(path) << "id,x,y\n0,nan,0\n1,1,1\n";
    CHECK_THROWS(load_points(path));

    const auto single = temp_file("points_single.csv");
    std::ofstream(single) << "id,x,y\n0,1,1\n";
    CHECK_THROWS_AS(load_points(single), myxo::UsageError);

    CHECK_THROWS_AS(load_points(temp_file("points_missing.csv")), myxo::RuntimeError);
}

TEST_CASE("save/load round-trips exactly, including awkward doubles") {
    const PointSet ps({{0.1, 0.2}, {1.0 / 3.0, 2.0 / 7.0}, {-1e-17, 3e22}});
    const auto path = temp_file("points_roundtrip.csv");
    save_points(path, ps);
    const auto back = load_points(path);
    REQUIRE(back.size() == ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
        CHECK(back[i].x == ps[i].x);
        CHECK(back[i].y == ps[i].y);
    }
}
