#include <symcover/io.hpp>
#include <symcover/metrics.hpp>

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <sys/wait.h>

using namespace symcover;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(SYMCOVER_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        std::random_device rd;
        dir_ = fs::temp_directory_path() / ("symcover_cli_" + std::to_string(rd()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    void write(const std::string& name, const std::string& text) const { std::ofstream(dir_ / name) << text; }

    fs::path dir_;
};

} // namespace

TEST_F(Cli, SortSingleRow) {
    write("v.csv", "3,1,2\n");
    const auto r = run("canonize " + path("v.csv") + " --method sort -o " + path("s.csv"));
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(slurp(path("s.csv")), "1,2,3\n");
    const auto side = nlohmann::json::parse(slurp(path("s.csv.group.json")));
    EXPECT_EQ(side["perm"], (std::vector<int>{1, 2, 0}));
}

TEST_F(Cli, CanonizeIsIdempotentAndOrbitInvariant) {
    write("a.csv", "0.5,0.1\n0.2,0.9\n0.2,0.3\n0.7,0.7\n");
    write("b.csv", "0.7,0.7\n0.2,0.3\n0.5,0.1\n0.2,0.9\n");
    for (const std::string m : {"lexsort", "hilbert:5"}) {
        ASSERT_EQ(run("canonize " + path("a.csv") + " -m " + m + " -o " + path("ca.csv")).code, 0) << m;
        ASSERT_EQ(run("canonize " + path("ca.csv") + " -m " + m + " -o " + path("cca.csv")).code, 0) << m;
        ASSERT_EQ(run("canonize " + path("b.csv") + " -m " + m + " -o " + path("cb.csv")).code, 0) << m;
        EXPECT_EQ(slurp(path("cca.csv")), slurp(path("ca.csv"))) << m;
        EXPECT_EQ(slurp(path("cb.csv")), slurp(path("ca.csv"))) << m;
    }
    ASSERT_EQ(run("canonize " + path("b.csv") + " -m lexsort -o " + path("lex.csv")).code, 0);
    EXPECT_EQ(slurp(path("lex.csv")), "0.2,0.3\n0.2,0.9\n0.5,0.1\n0.7,0.7\n");

    ASSERT_EQ(run("canonize " + path("a.csv") + " -m centralize -o " + path("cc.csv")).code, 0);
    const auto side = nlohmann::json::parse(slurp(path("cc.csv.group.json")));
    EXPECT_NEAR(side["shift"][0].get<double>(), 0.4, 1e-15);
    EXPECT_NEAR(side["shift"][1].get<double>(), 0.5, 1e-15);
}

TEST_F(Cli, CanonizeErrors) {
    write("out.csv", "0.5,1.5\n");
    EXPECT_EQ(run("canonize " + path("out.csv") + " -m hilbert:4 -o " + path("x.csv")).code, 1);
    EXPECT_EQ(run("canonize " + path("out.csv") + " -m shuffle -o " + path("x.csv")).code, 1);
    EXPECT_EQ(run("canonize " + path("missing.csv") + " -m sort").code, 1);
    write("txt.csv", "1,2\nfoo,3\n");
    EXPECT_EQ(run("canonize " + path("txt.csv") + " -m lexsort").code, 1);
}

TEST_F(Cli, PcaSkewSidecarHasFrame) {
    write("p.csv", "0,0,0\n4,0.1,0\n0.3,1,0.2\n-1,0.2,0.05\n9,-2,0.1\n");
    ASSERT_EQ(run("canonize " + path("p.csv") + " -m pca-skew -o " + path("q.csv")).code, 0);
    const auto side = nlohmann::json::parse(slurp(path("q.csv.group.json")));
    EXPECT_EQ(side["frame"].size(), 3u);
    EXPECT_EQ(side["shift"].size(), 3u);
}

TEST_F(Cli, Dist) {
    write("a.csv", "0.1,0.2\n0.3,0.4\n0.9,0.0\n");
    write("b.csv", "0.9,0.0\n0.1,0.2\n0.3,0.4\n");
    write("c.csv", "0.5,0.5\n0.2,0.1\n0.0,0.0\n");
    EXPECT_EQ(run("dist " + path("a.csv") + " " + path("a.csv")).out, "0\n");
    EXPECT_EQ(run("dist " + path("a.csv") + " " + path("b.csv") + " --metric perm-sum").out, "0\n");
    const auto a = io::read_cloud_csv(path("a.csv"));
    const auto c = io::read_cloud_csv(path("c.csv"));
    for (const std::string m : {"inf", "frobenius", "mean-euclidean", "perm-sum", "perm-bottleneck", "sign:l1", "translation"}) {
        const auto r = run("dist " + path("a.csv") + " " + path("c.csv") + " --metric " + m);
        ASSERT_EQ(r.code, 0) << m;
        EXPECT_EQ(r.out, io::format_sig(distance(MetricKind::parse(m), a, c), 12) + "\n") << m;
    }
    write("short.csv", "0.1,0.2\n");
    EXPECT_EQ(run("dist " + path("a.csv") + " " + path("short.csv")).code, 1);
    EXPECT_EQ(run("dist " + path("a.csv") + " " + path("c.csv") + " --metric hamming").code, 1);
}

TEST_F(Cli, BoundsDefaultTable) {
    const auto r = run("bounds --format csv");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "n,quotient_upper,hilbert_upper,lexsort_lower,hypercube_exact\n"
              "250,2.1e+36,5.3e+193,1.1e+239,6.9e+357\n"
              "500,7.4e+43,7.9e+278,4.0e+477,4.8e+715\n"
              "750,2.2e+48,5.0e+336,1.4e+716,3.3e+1073\n"
              "1000,3.5e+51,5.0e+380,5.2e+954,2.3e+1431\n"
              "2000,2.0e+59,4.4e+494,9.2e+1908,5.3e+2862\n");
}

TEST_F(Cli, BoundsVariants) {
    const auto single = run("bounds --n 500 --format json");
    ASSERT_EQ(single.code, 0);
    const auto j = nlohmann::json::parse(single.out);
    ASSERT_EQ(j["rows"].size(), 1u);
    EXPECT_EQ(j["rows"][0]["quotient"]["exact"], "73659368740576150702849091419319488698964896");
    EXPECT_FALSE(j["rows"][0]["hypercube"].contains("exact") && j["rows"][0]["hypercube"]["exact"].get<std::string>().size() > 4096);

    const auto limit = run("bounds --n 250 --m inf --format csv");
    EXPECT_NE(limit.out.find("8.5e+192"), std::string::npos);
    EXPECT_EQ(run("bounds --eps 0.3").code, 1);
    EXPECT_EQ(run("bounds --eps 1/6 --m 1").code, 1);
    EXPECT_EQ(run("bounds --n 0").code, 1);
    EXPECT_EQ(run("bounds --n 100 --eps 0.25 --d 2 --m 5 --format text").code, 0);
}

TEST_F(Cli, GenIsDeterministic) {
    const std::string common = " --clusters 2 --per-cluster 3 --test-per-cluster 2 --d 2 --n 5 --seed 9";
    ASSERT_EQ(run("gen" + common + " -o " + path("g1")).code, 0);
    ASSERT_EQ(run("gen" + common + " -o " + path("g2")).code, 0);
    std::size_t files = 0;
    for (const auto& e : fs::recursive_directory_iterator(path("g1"))) {
        if (!e.is_regular_file()) continue;
        const auto rel = fs::relative(e.path(), path("g1"));
        EXPECT_EQ(slurp(e.path()), slurp(fs::path(path("g2")) / rel)) << rel;
        if (e.path().extension() == ".csv") {
            const auto x = io::read_cloud_csv(e.path());
            EXPECT_TRUE(x.in_unit_cube());
            EXPECT_EQ(x.size(), 5u);
            EXPECT_EQ(x.dim(), 2u);
        }
        ++files;
    }
    EXPECT_EQ(files, 6u + 4u + 2u);
    EXPECT_EQ(io::read_manifest(fs::path(path("g1")) / "train.jsonl").entries.size(), 6u);
}

TEST_F(Cli, CoverageReports) {
    ASSERT_EQ(run("gen --clusters 2 --per-cluster 4 --test-per-cluster 3 --d 3 --n 8 --seed 4 -o " + path("d")).code, 0);
    const std::string train = path("d/train.jsonl"), test = path("d/test.jsonl");

    const auto self = run("coverage --train " + train + " --test " + train + " --metric perm-sum --same-label");
    ASSERT_EQ(self.code, 0);
    EXPECT_EQ(nlohmann::json::parse(self.out)["rows"][0]["max_coverage"], 0.0);

    const auto sweep = run("coverage --train " + train + " --test " + test + " --sweep --same-label --seed 3 --threads 1");
    ASSERT_EQ(sweep.code, 0);
    const auto j = nlohmann::json::parse(sweep.out);
    ASSERT_EQ(j["rows"].size(), 4u);
    EXPECT_EQ(j["seed"], 3);
    EXPECT_EQ(j["rows"][3]["metric"], "perm-sum");
    const auto& q_group = j["rows"][3]["q"];
    const auto& q_hil = j["rows"][2]["q"];
    ASSERT_EQ(q_group.size(), 6u);
    for (std::size_t t = 0; t < q_group.size(); ++t) {
        EXPECT_LE(q_group[t].get<double>(), q_hil[t].get<double>() + 1e-9);
    }

    const auto again = run("coverage --train " + train + " --test " + test + " --sweep --same-label --seed 3 --threads 4");
    EXPECT_EQ(again.out, sweep.out);

    const auto csv = run("coverage --train " + train + " --test " + test + " --metric inf --metric perm-bottleneck --format csv");
    EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 3);
}

TEST_F(Cli, CoverageErrors) {
    ASSERT_EQ(run("gen --clusters 2 --per-cluster 1 --d 1 --n 3 -o " + path("d")).code, 0);
    write("d/other.jsonl", "{\"path\": \"clouds/train_0.csv\", \"label\": 7}\n");
    EXPECT_EQ(run("coverage --train " + path("d/train.jsonl") + " --test " + path("d/other.jsonl") + " --same-label").code, 1);
    EXPECT_EQ(run("coverage --train " + path("d/none.jsonl") + " --test " + path("d/other.jsonl")).code, 1);
    EXPECT_EQ(run("coverage --train " + path("d/train.jsonl") + " --test " + path("d/other.jsonl") + " --metric sign:wasserstein-1d:1").code, 1);
}

TEST_F(Cli, Verify) {
    const auto iso = run("verify --suite isometry");
    EXPECT_EQ(iso.code, 0);
    EXPECT_NE(iso.out.find("PASS isometry/sort"), std::string::npos);
    const auto poor = run("verify --suite poor-c1 --format json");
    ASSERT_EQ(poor.code, 0);
    const auto j = nlohmann::json::parse(poor.out);
    EXPECT_EQ(j[0]["detail"], "raw=2 c1=2 quotient=1");
    EXPECT_EQ(j[0]["passed"], true);
    EXPECT_EQ(run("verify --suite hilbert").code, 0);
    EXPECT_EQ(run("verify --suite nope").code, 1);
}

TEST_F(Cli, RhsAndUsage) {
    EXPECT_EQ(run("rhs --eps 0 --delta 1 --N 1 --M 1 --samples 2").out, "0.832554611158\n");
    EXPECT_EQ(run("rhs --delta 0").code, 1);
    EXPECT_EQ(run("").code, 1);
    EXPECT_EQ(run("--help").code, 0);
}
