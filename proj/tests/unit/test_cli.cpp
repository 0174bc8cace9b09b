#include "helpers.hpp"

#include <fstream>
#include <sstream>

#include "subrack/cli.hpp"
#include "subrack/io.hpp"

using namespace subrack;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& file)
{
    std::ifstream in(std::string(SUBRACK_GOLDEN_DIR) + "/" + file);
    REQUIRE_MESSAGE(in, "missing golden file " << file);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("cli")
{
    TEST_CASE("golden outputs")
    {
        const std::vector<std::pair<std::string, std::vector<std::string>>> cases{
            {"catalog.txt", {"catalog"}},
            {"s3_lattice.txt", {"lattice", "--group", "catalog:S3"}},
            {"s3_lattice.json", {"lattice", "--group", "catalog:S3", "--format", "json"}},
            {"s3_lattice.dot", {"lattice", "--group", "catalog:S3", "--format", "dot"}},
            {"s3_invariants.txt", {"invariants", "--group", "catalog:S3"}},
            {"s3_invariants.json", {"invariants", "--group", "catalog:S3", "--format", "json"}},
            {"s3_nilpotence.txt", {"nilpotence", "--group", "catalog:S3"}},
            {"d8_nilpotence.txt", {"nilpotence", "--group", "catalog:D8"}},
            {"d8_nilpotence.json", {"nilpotence", "--group", "catalog:D8", "--format", "json"}},
            {"s3_pnilpotence_2.txt", {"pnilpotence", "--group", "catalog:S3", "--p", "2"}},
            {"s3_pnilpotence_3.json", {"pnilpotence", "--group", "catalog:S3", "--p", "3", "--format", "json"}},
            {"s3_cycleforms.txt", {"cycleforms", "--group", "catalog:S3"}},
            {"s3_cycleforms_refined.txt", {"cycleforms", "--group", "catalog:S3", "--refined"}},
            {"s3_cycleform_b.json", {"cycleforms", "--group", "catalog:S3", "--atom", "b", "--format", "json"}},
        };
        for (const auto& [file, args] : cases) {
            CAPTURE(file);
            const Run r = run(args);
            CHECK(r.code == kExitOk);
            CHECK(r.out == golden(file));
            // byte-stable across runs
            CHECK(run(args).out == r.out);
        }
    }

    TEST_CASE("options may precede the subcommand")
    {
        const Run a = run({"--group", "catalog:S3", "--format", "json", "invariants"});
        CHECK(a.code == kExitOk);
        CHECK(a.out == golden("s3_invariants.json"));
    }

    TEST_CASE("single atom by label or index")
    {
        const std::string want = "[[a]] [[b]] [[c,d]] [[e,f]]\n";
        CHECK(run({"cycleforms", "--group", "catalog:S3", "--atom", "b"}).out == want);
        CHECK(run({"cycleforms", "--group", "catalog:S3", "--atom", "1"}).out == want);
        CHECK(run({"cycleforms", "--group", "catalog:S3", "--atom", "z"}).code == kExitInputError);
    }

    TEST_CASE("exported JSON parses back")
    {
        const auto l = lattice_export_from_json(Json::parse(golden("s3_lattice.json")));
        CHECK(l.atoms == 6);
        CHECK(l.elements.size() == 18);
        CHECK(l.hasse.size() == 33);
        const auto rep = invariant_report_from_json(Json::parse(golden("s3_invariants.json")));
        CHECK(invariant_report_to_json(rep) == Json::parse(golden("s3_invariants.json")));
        const auto form = cycle_form_from_json(Json::parse(golden("s3_cycleform_b.json")));
        CHECK(form.blocks.size() == 4);
        CHECK(cycle_form_to_json(1, form) == Json::parse(golden("s3_cycleform_b.json")));
    }

    TEST_CASE("modes agree where both apply")
    {
        for (const char* cmd : {"invariants", "nilpotence"}) {
            CAPTURE(cmd);
            const Run e = run({cmd, "--group", "catalog:D4", "--mode", "explicit"});
            const Run i = run({cmd, "--group", "catalog:D4", "--mode", "implicit"});
            CHECK(e.code == kExitOk);
            CHECK(e.out == i.out);
        }
        CHECK(run({"lattice", "--group", "catalog:S3", "--mode", "implicit"}).code == kExitInputError);
    }

    TEST_CASE("verbose diagnostics go to stderr")
    {
        const Run r = run({"pnilpotence", "--group", "catalog:S3", "--p", "2", "--verbose"});
        CHECK(r.code == kExitOk);
        CHECK(r.out.rfind("true\n", 0) == 0);
        CHECK(r.out.find("sylow subrack: {a,b}") != std::string::npos);
        CHECK(r.err.find("lattice: explicit") != std::string::npos);
    }

    TEST_CASE("exit codes")
    {
        CHECK(run({}).code == kExitInputError);
        CHECK(run({"frobnicate"}).code == kExitInputError);
        CHECK(run({"lattice"}).code == kExitInputError);
        CHECK(run({"lattice", "--group", "catalog:NoSuch"}).code == kExitInputError);
        CHECK(run({"lattice", "--group", "/nonexistent/group.json"}).code == kExitInputError);
        CHECK(run({"invariants", "--group", "catalog:S3", "--format", "dot"}).code == kExitInputError);
        CHECK(run({"pnilpotence", "--group", "catalog:S3", "--p", "4"}).code == kExitInputError);
        CHECK(run({"pnilpotence", "--group", "catalog:S3"}).code == kExitInputError);
        // Z4 has a center, so cycle forms do not apply
        CHECK(run({"cycleforms", "--group", "catalog:Z4"}).code == kExitInputError);
        CHECK(run({"--help"}).code == kExitOk);
    }

    TEST_CASE("group files")
    {
        const std::string path = "cli_test_group.json";
        {
            std::ofstream f(path);
            f << Json{{"name", "S3p"}, {"degree", 3}, {"generators", {{1, 0, 2}, {1, 2, 0}}}}.dump();
        }
        const Run r = run({"invariants", "--group", path});
        CHECK(r.code == kExitOk);
        CHECK(r.out.rfind("w: 1x1 2x1 3x1\n", 0) == 0);
        {
            std::ofstream f(path);
            f << "{ not json";
        }
        CHECK(run({"invariants", "--group", path}).code == kExitInputError);
        std::remove(path.c_str());
    }

    TEST_CASE("verify sweeps")
    {
        const Run one = run({"verify", "--max-order", "1"});
        CHECK(one.code == kExitOk);
        CHECK(one.out.find("0 failed, 0 skipped") != std::string::npos);

        const Run eight = run({"verify", "--max-order", "8", "--format", "json"});
        CHECK(eight.code == kExitOk);
        const Json j = Json::parse(eight.out);
        CHECK(j["failed"] == 0);
        CHECK(j["skipped"] == 0);
        CHECK(j["passed"] == 215);
        CHECK(j["groups"].size() == 14);  // catalog groups of order <= 8

        const Run s3 = run({"verify", "--group", "catalog:S3"});
        CHECK(s3.code == kExitOk);
        CHECK(s3.out.find("cycle_forms") != std::string::npos);
    }
}
