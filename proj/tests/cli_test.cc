#include <cli.hh>

#include <tcsp/io.hh>

#include <catch2/catch.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace tcsp;
using tcsp::cli::run_cli;

namespace
{
    namespace fs = std::filesystem;

    struct Run
    {
        int code;
        std::string out, err;
    };

    auto run(std::vector<std::string> args) -> Run
    {
        std::ostringstream out, err;
        auto code = run_cli(args, out, err);
        return {code, out.str(), err.str()};
    }

    auto scratch() -> fs::path
    {
        auto dir = fs::temp_directory_path() / "tcsp_cli_tests";
        fs::create_directories(dir);
        return dir;
    }

    auto write(const std::string & name, const std::string & text) -> std::string
    {
        auto path = scratch() / name;
        std::ofstream{path} << text;
        return path.string();
    }

    const char * k3 = R"j({"signature":[{"name":"E","arity":2}],"size":3,"relations":{"E":[[0,1],[0,2],[1,0],[1,2],[2,0],[2,1]]}})j";
    const char * k4 = R"j({"signature":[{"name":"E","arity":2}],"size":4,"relations":{"E":[[0,1],[0,2],[0,3],[1,0],[1,2],[1,3],[2,0],[2,1],[2,3],[3,0],[3,1],[3,2]]}})j";
    const char * order2 = R"j({"signature":[{"name":"R","arity":2}],"size":2,"relations":{"R":[[0,0],[0,1],[1,1]]}})j";
}

TEST_CASE("preset writes a template that loads back", "[cli]")
{
    auto path = (scratch() / "gamma2.json").string();
    auto r = run({"preset", "--name", "gamma2", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    auto orbits_file = run({"orbits", "--template", path, "--size", "4"});
    auto orbits_builtin = run({"orbits", "--name", "gamma2", "--size", "4"});
    CHECK(orbits_file.code == 0);
    CHECK(orbits_file.out == orbits_builtin.out);
    CHECK(parse_json(orbits_file.out, "out") == parse_json(R"j({"n":4,"class_count":8,"exactness":"exact"})j", "x"));
}

TEST_CASE("sample writes the structure and sidecar", "[cli]")
{
    auto out = (scratch() / "b.json").string(), reps = (scratch() / "reps.json").string();
    auto r = run({"sample", "--name", "qlt", "--size", "3", "--out", out, "--reps", reps});
    CHECK(r.code == 0);
    auto b = structure_from_json(read_json_file(out));
    CHECK(b.relation("Lt").to_tuples() == std::vector<Tuple>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(read_json_file(reps)["base_grid_size"] == 3);
}

TEST_CASE("solve exit codes and witness", "[cli]")
{
    auto sat = write("sat.json", R"j({"variables":["x","y","z"],"constraints":[{"rel":"T","args":["x","y","z"]}]})j");
    auto unsat = write("unsat.json", R"j({"variables":["x"],"constraints":[{"rel":"T","args":["x","x","x"]}]})j");
    auto yes = run({"solve", "--name", "ord3", "--instance", sat, "--witness"});
    CHECK(yes.code == 0);
    auto verdict = parse_json(yes.out, "out");
    CHECK(verdict["accept"] == true);
    CHECK(verdict["sample_size"] == 3);
    CHECK(verdict.contains("witness"));
    CHECK(verdict["witness"].contains("x"));

    auto no = run({"solve", "--name", "ord3", "--instance", unsat});
    CHECK(no.code == 1);
    CHECK(parse_json(no.out, "out")["accept"] == false);
}

TEST_CASE("ac and hom on K4 versus K3", "[cli]")
{
    auto k3_path = write("k3.json", k3), k4_path = write("k4.json", k4);
    auto a = run({"ac", "--instance", k4_path, "--structure", k3_path});
    CHECK(a.code == 0);
    CHECK(parse_json(a.out, "out")["accept"] == true);
    auto h = run({"hom", "--from", k4_path, "--to", k3_path});
    CHECK(h.code == 1);
    CHECK(parse_json(h.out, "out")["exists"] == false);
    CHECK(run({"hom", "--from", k3_path, "--to", k3_path}).code == 0);
}

TEST_CASE("Polymorphism subcommands", "[cli]")
{
    auto k3_path = write("k3.json", k3), order = write("order2.json", order2);
    CHECK(run({"powerset", "--structure", k3_path}).code == 0);
    CHECK(parse_json(run({"powerset", "--structure", k3_path}).out, "out")["size"] == 7);
    CHECK(run({"powerset", "--structure", k3_path, "--max-subset-bits", "2"}).code == 3);
    CHECK(run({"check-ts", "--structure", order, "--arity", "2"}).code == 0);
    CHECK(run({"check-ts", "--structure", k3_path, "--arity", "2"}).code == 1);
    CHECK(run({"check-ts", "--structure", order, "--arity", "3", "--budget", "1"}).code == 3);
    CHECK(run({"check-semilattice", "--structure", order}).code == 0);
    CHECK(run({"check-semilattice", "--structure", k3_path}).code == 1);
    auto equiv = run({"check-equiv", "--structure", k3_path});
    CHECK(equiv.code == 0);
    CHECK(parse_json(equiv.out, "out")["consistent"] == true);
    CHECK(run({"walk", "--structure", order, "--size", "2"}).code == 0);
    CHECK(run({"walk", "--structure", k3_path, "--size", "2"}).code == 2);
}

TEST_CASE("Usage and format errors", "[cli]")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"sample", "--name", "qlt"}).code == 2);
    CHECK(run({"preset", "--name", "nope"}).code == 2);
    CHECK(run({"sample", "--size", "2"}).code == 2);

    auto broken = write("broken.json", R"j({"signature":[{"name":"E","arity":2}],"size":2,"relations":{"E":[[0,5]]}})j");
    auto r = run({"powerset", "--structure", broken});
    CHECK(r.code == 2);
    CHECK(r.err.find("broken.json") != std::string::npos);

    auto bad_formula = write("bad_formula.json", R"j({"name":"x","kind":"direct","relations":[{"name":"L","arity":2,"formula":"(lt 0)"}]})j");
    auto f = run({"sample", "--template", bad_formula, "--size", "2"});
    CHECK(f.code == 2);
    CHECK(f.err.find("offset") != std::string::npos);

    CHECK(run({"orbits", "--name", "gamma1", "--size", "4", "--budget", "3"}).code == 3);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("Outputs are reproducible", "[cli]")
{
    auto sat = write("sat2.json", R"j({"variables":["a","b"],"constraints":[{"rel":"S","args":["a","b"]}]})j");
    for (auto args : std::vector<std::vector<std::string>>{{"solve", "--name", "gamma2", "--instance", sat},
             {"sample", "--name", "gamma3", "--size", "3"}, {"orbits", "--name", "gamma3", "--size", "3"}})
        CHECK(run(args).out == run(args).out);
}
